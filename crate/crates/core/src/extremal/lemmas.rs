//! Inequalities on `ex_m` and the sweeps that exercise them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::closed_form::{ex_fqn, ex_qn, incomplete_set, xi, IncompleteKind};
use super::decompose::greedy_decompose;
use crate::error::{invalid, Result};
use crate::graph::{CubeTopology, Edge};

/// Outcome of one inequality instance. `slack = lhs - rhs` for `lhs >= rhs`
/// style statements; negative slack means the instance fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub holds: bool,
    pub slack: i64,
}

impl LemmaCheck {
    fn from_slack(slack: i64) -> Self {
        Self {
            holds: slack >= 0,
            slack,
        }
    }
}

fn signed(x: u64) -> i64 {
    i64::try_from(x).expect("degree sums fit in i64")
}

/// `ex_{m0+m1} >= ex_{m0} + ex_{m1} + 2 m0` on `Q_n`, for `m0 <= m1`.
pub fn check_superadditivity(m0: u64, m1: u64, n: u32) -> Result<LemmaCheck> {
    if m0 == 0 || m0 > m1 {
        return Err(invalid(format!("need 1 <= m0 <= m1, got ({m0}, {m1})")));
    }
    let joint = ex_qn(m0 + m1, n)?.degree_sum;
    let parts = ex_qn(m0, n)?.degree_sum + ex_qn(m1, n)?.degree_sum + 2 * m0;
    Ok(LemmaCheck::from_slack(signed(joint) - signed(parts)))
}

/// `(n-1) m - ex_m(FQ_n) >= 0` for `m <= 2^{n-1}`.
pub fn check_sublinearity(m: u64, n: u32) -> Result<LemmaCheck> {
    CubeTopology::folded_hypercube(n)?;
    if m > 1 << (n - 1) {
        return Err(invalid(format!("m = {m} exceeds 2^{}", n - 1)));
    }
    let ex = ex_fqn(m, n)?.degree_sum;
    Ok(LemmaCheck::from_slack(
        signed(u64::from(n - 1) * m) - signed(ex),
    ))
}

/// `sum ex_{m_i} <= ex_{m - r + 1}` on `Q_n` where `m = sum m_i`.
pub fn check_merge_bound(sizes: &[u64], n: u32) -> Result<LemmaCheck> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(invalid("merge bound needs at least one part, all positive"));
    }
    let m: u64 = sizes.iter().sum();
    let merged = m - sizes.len() as u64 + 1;
    let rhs = ex_qn(merged, n)?.degree_sum;
    let lhs = sizes
        .iter()
        .map(|&s| ex_qn(s, n).map(|e| e.degree_sum))
        .sum::<Result<u64>>()?;
    Ok(LemmaCheck::from_slack(signed(rhs) - signed(lhs)))
}

/// Whether `v -> 2^n - 1 - v` carries the induced subgraph on the forward
/// incomplete set onto the one on the reverse set, compared edge by edge.
pub fn check_isomorphism(m: u64, n: u32, folded: bool) -> Result<bool> {
    let topo = CubeTopology::new(n, folded)?;
    let forward = incomplete_set(m, IncompleteKind::forward(folded), n)?;
    let reverse = incomplete_set(m, IncompleteKind::reverse(folded), n)?;
    let mapped_vertices: BTreeSet<_> = forward.iter().map(|v| topo.complement(v)).collect();
    if mapped_vertices != reverse.iter().collect() {
        return Ok(false);
    }
    let mapped: BTreeSet<Edge> = topo
        .induced_edges(&forward)?
        .into_iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            Edge::new(topo.complement(u), topo.complement(v))
        })
        .collect();
    let target: BTreeSet<Edge> = topo.induced_edges(&reverse)?.into_iter().collect();
    Ok(mapped == target)
}

/// The inequality suites the `lemmas` command runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaId {
    Superadditivity,
    Isomorphism,
    XiMonotone,
    Sublinearity,
    MergeBound,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] = [
        LemmaId::Superadditivity,
        LemmaId::Isomorphism,
        LemmaId::XiMonotone,
        LemmaId::Sublinearity,
        LemmaId::MergeBound,
    ];

    /// Numeric id used on the command line.
    pub fn number(self) -> u32 {
        match self {
            LemmaId::Superadditivity => 2,
            LemmaId::Isomorphism => 6,
            LemmaId::XiMonotone => 9,
            LemmaId::Sublinearity => 10,
            LemmaId::MergeBound => 11,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Superadditivity => "superadditivity",
            LemmaId::Isomorphism => "isomorphism",
            LemmaId::XiMonotone => "xi-monotone",
            LemmaId::Sublinearity => "sublinearity",
            LemmaId::MergeBound => "merge-bound",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|id| s == id.name() || s.parse::<u32>().ok() == Some(id.number()))
            .ok_or_else(|| {
                format!("unknown lemma {s:?}; expected one of 2, 6, 9, 10, 11 or a name")
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub lemma: LemmaId,
    pub n: u32,
    pub cases: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
}

impl SweepSummary {
    fn new(lemma: LemmaId, n: u32) -> Self {
        Self {
            lemma,
            n,
            cases: 0,
            violations: 0,
            first_violation: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Random merge-bound samples drawn by [`merge_bound_sweep`].
pub const MERGE_RANDOM_SAMPLES: u64 = 10_000;
/// Largest total size whose partitions are all enumerated.
pub const MERGE_EXHAUSTIVE_MAX: u64 = 16;
/// Largest total size drawn by the random sampler.
pub const MERGE_RANDOM_MAX: u64 = 32;
const MERGE_SEED: u64 = 0x5eed_0b11;

/// All `m0 <= m1` with `m0 + m1 <= 2^n`.
pub fn superadditivity_sweep(n: u32) -> Result<SweepSummary> {
    let size = 1u64 << CubeTopology::hypercube(n)?.dimension();
    let mut summary = SweepSummary::new(LemmaId::Superadditivity, n);
    for m0 in 1..=size / 2 {
        for m1 in m0..=size - m0 {
            let check = check_superadditivity(m0, m1, n)?;
            summary.record(check.holds, || {
                format!("m0={m0} m1={m1} slack={}", check.slack)
            });
        }
    }
    Ok(summary)
}

/// Every `m`, both variants.
pub fn isomorphism_sweep(n: u32) -> Result<SweepSummary> {
    let size = CubeTopology::hypercube(n)?.vertex_count() as u64;
    let mut summary = SweepSummary::new(LemmaId::Isomorphism, n);
    for folded in [false, true] {
        for m in 1..=size {
            let ok = check_isomorphism(m, n, folded)?;
            summary.record(ok, || format!("m={m} folded={folded}"));
        }
    }
    Ok(summary)
}

/// Consecutive `ξ` values up to `2^{⌊(n+1)/2⌋}`: strictly increasing, with
/// increment `(n+1) - (s+1)`.
pub fn xi_sweep(n: u32) -> Result<SweepSummary> {
    CubeTopology::folded_hypercube(n)?;
    let top = 1u64 << n.div_ceil(2);
    let mut summary = SweepSummary::new(LemmaId::XiMonotone, n);
    for m in 1..top {
        let (a, b) = (xi(m, n)?, xi(m + 1, n)?);
        let terms = greedy_decompose(m)?.term_count() as i64;
        let step = b as i64 - a as i64;
        let expected = i64::from(n + 1) - terms;
        summary.record(b > a && step == expected, || {
            format!("m={m}: xi {a} -> {b}, step {step}, expected {expected}")
        });
    }
    Ok(summary)
}

/// Every `m <= 2^{n-1}`.
pub fn sublinearity_sweep(n: u32) -> Result<SweepSummary> {
    CubeTopology::folded_hypercube(n)?;
    let mut summary = SweepSummary::new(LemmaId::Sublinearity, n);
    for m in 1..=(1u64 << (n - 1)) {
        let check = check_sublinearity(m, n)?;
        summary.record(check.holds, || format!("m={m} slack={}", check.slack));
    }
    Ok(summary)
}

/// Every integer partition of every `m <= min(16, 2^n)`, then
/// [`MERGE_RANDOM_SAMPLES`] random compositions of `m <= min(32, 2^n)`
/// from a fixed seed.
pub fn merge_bound_sweep(n: u32) -> Result<SweepSummary> {
    let size = CubeTopology::hypercube(n)?.vertex_count() as u64;
    let mut summary = SweepSummary::new(LemmaId::MergeBound, n);
    let mut parts = Vec::new();
    for m in 1..=MERGE_EXHAUSTIVE_MAX.min(size) {
        for_each_partition(m, m, &mut parts, &mut |sizes| {
            let check = check_merge_bound(sizes, n)?;
            summary.record(check.holds, || format!("{sizes:?} slack={}", check.slack));
            Ok(())
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MERGE_SEED);
    let top = MERGE_RANDOM_MAX.min(size);
    for _ in 0..MERGE_RANDOM_SAMPLES {
        let m = rng.gen_range(1..=top);
        let sizes = random_composition(m, &mut rng);
        let check = check_merge_bound(&sizes, n)?;
        summary.record(check.holds, || format!("{sizes:?} slack={}", check.slack));
    }
    Ok(summary)
}

fn for_each_partition(
    rest: u64,
    max_part: u64,
    parts: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    if rest == 0 {
        return visit(parts);
    }
    for part in (1..=max_part.min(rest)).rev() {
        parts.push(part);
        for_each_partition(rest - part, part, parts, visit)?;
        parts.pop();
    }
    Ok(())
}

/// Uniform over the `2^{m-1}` compositions of `m`.
fn random_composition(m: u64, rng: &mut impl Rng) -> Vec<u64> {
    let mut sizes = Vec::new();
    let mut current = 1;
    for _ in 1..m {
        if rng.gen_bool(0.5) {
            sizes.push(current);
            current = 1;
        } else {
            current += 1;
        }
    }
    sizes.push(current);
    sizes
}

pub fn run_sweep(lemma: LemmaId, n: u32) -> Result<SweepSummary> {
    match lemma {
        LemmaId::Superadditivity => superadditivity_sweep(n),
        LemmaId::Isomorphism => isomorphism_sweep(n),
        LemmaId::XiMonotone => xi_sweep(n),
        LemmaId::Sublinearity => sublinearity_sweep(n),
        LemmaId::MergeBound => merge_bound_sweep(n),
    }
}

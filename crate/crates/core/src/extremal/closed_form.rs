use serde::{Deserialize, Serialize};

use super::decompose::greedy_decompose;
use crate::error::{invalid, Result};
use crate::graph::{CubeTopology, Vertex, VertexSet};

/// Maximum induced degree sum over `m`-vertex sets of `Q_n` or `FQ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExValue {
    pub m: u64,
    pub n: u32,
    pub folded: bool,
    pub degree_sum: u64,
}

impl ExValue {
    /// Number of induced edges, `degree_sum / 2`.
    pub fn edges(&self) -> u64 {
        self.degree_sum / 2
    }
}

fn check_size(m: u64, n: u32) -> Result<CubeTopology> {
    let topo = CubeTopology::hypercube(n)?;
    if m == 0 || m > topo.vertex_count() as u64 {
        return Err(invalid(format!("set size {m} outside [1, 2^{n}]")));
    }
    Ok(topo)
}

/// Closed form for `Q_n`: `sum t_i 2^{t_i} + sum 2 i 2^{t_i}`.
pub fn ex_qn(m: u64, n: u32) -> Result<ExValue> {
    check_size(m, n)?;
    let d = greedy_decompose(m)?;
    let degree_sum = d.terms().map(|(i, t)| (u64::from(t) + 2 * i) << t).sum();
    Ok(ExValue {
        m,
        n,
        folded: false,
        degree_sum,
    })
}

/// `FQ_n` value. Up to `2^{n-1}` it coincides with `Q_n`; above that every
/// complementary pair inside `{0, ..., m-1}` adds one matching edge, and
/// there are `m - 2^{n-1}` such pairs.
pub fn ex_fqn(m: u64, n: u32) -> Result<ExValue> {
    let plain = ex_qn(m, n)?;
    let half = 1u64 << (n - 1);
    Ok(ExValue {
        folded: true,
        degree_sum: plain.degree_sum + 2 * m.saturating_sub(half),
        ..plain
    })
}

/// The upper branch with `+ (m - 2^{n-1})` instead of `+ 2 (m - 2^{n-1})`.
/// Kept only to report how far it is from the true maximum; it can be odd.
pub fn ex_fqn_half_correction(m: u64, n: u32) -> Result<u64> {
    let plain = ex_qn(m, n)?;
    Ok(plain.degree_sum + m.saturating_sub(1u64 << (n - 1)))
}

pub fn ex(m: u64, n: u32, folded: bool) -> Result<ExValue> {
    if folded {
        ex_fqn(m, n)
    } else {
        ex_qn(m, n)
    }
}

/// `ξ(m) = (n+1) m - ex_m(FQ_n) / 2`: the cost of cutting an extremal
/// `m`-set out of `FQ_n` edge by edge.
pub fn xi(m: u64, n: u32) -> Result<u64> {
    let ex = ex_fqn(m, n)?;
    Ok(u64::from(n + 1) * m - ex.edges())
}

/// The four incomplete (folded) hypercube shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IncompleteKind {
    /// `{0, ..., m-1}` in `Q_n`.
    L,
    /// `{2^n - 1, ..., 2^n - m}` in `Q_n`.
    R,
    /// `{0, ..., m-1}` in `FQ_n`.
    LF,
    /// `{2^n - 1, ..., 2^n - m}` in `FQ_n`.
    RF,
}

impl IncompleteKind {
    pub fn is_folded(self) -> bool {
        matches!(self, Self::LF | Self::RF)
    }

    pub fn is_reverse(self) -> bool {
        matches!(self, Self::R | Self::RF)
    }

    pub fn forward(folded: bool) -> Self {
        if folded {
            Self::LF
        } else {
            Self::L
        }
    }

    pub fn reverse(folded: bool) -> Self {
        if folded {
            Self::RF
        } else {
            Self::R
        }
    }

    pub fn topology(self, n: u32) -> Result<CubeTopology> {
        CubeTopology::new(n, self.is_folded())
    }
}

pub fn incomplete_set(m: u64, kind: IncompleteKind, n: u32) -> Result<VertexSet> {
    let topo = check_size(m, n)?;
    let m = m as Vertex;
    Ok(if kind.is_reverse() {
        let top = topo.mask();
        (0..m).map(|i| top - i).collect()
    } else {
        (0..m).collect()
    })
}

//! Brute-force maximizer for the induced degree sum.
//!
//! Nothing here touches the closed forms: small cubes are enumerated subset
//! by subset, larger ones are searched by branch and bound whose only seed is
//! the measured degree sum of `{0, ..., m-1}`.

use serde::{Deserialize, Serialize};

use super::closed_form::ExValue;
use crate::error::{invalid, Error, Result};
use crate::graph::{CubeTopology, Vertex, VertexSet};

/// Largest dimension for which full subset enumeration is used.
const ENUMERATION_MAX_N: u32 = 4;
/// Adjacency rows are `u64` masks.
const ORACLE_MAX_N: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleStrategy {
    Enumeration,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExOracleOutcome {
    /// Best degree sum found. A lower bound on `ex_m` when `exact` is false.
    pub value: ExValue,
    pub witness: VertexSet,
    pub exact: bool,
    pub nodes: u64,
    pub strategy: OracleStrategy,
}

/// Maximum of `2 |E(G[X])|` over all `m`-subsets `X`.
///
/// `budget` caps the number of subsets (or search nodes) examined. Running
/// out returns the incumbent with `exact = false`.
pub fn ex_oracle(m: u64, n: u32, folded: bool, budget: u64) -> Result<ExOracleOutcome> {
    let topo = CubeTopology::new(n, folded)?;
    if n > ORACLE_MAX_N {
        return Err(Error::UnsupportedScale(format!(
            "ex oracle handles n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    let size = topo.vertex_count() as u64;
    if m == 0 || m > size {
        return Err(invalid(format!("set size {m} outside [1, {size}]")));
    }
    if budget == 0 {
        return Err(invalid("budget must be at least 1"));
    }
    let adj = adjacency_masks(&topo);
    let (best, mask, exact, nodes, strategy) = if n <= ENUMERATION_MAX_N {
        let (best, mask, exact, nodes) = enumerate(&adj, m as u32, budget);
        (best, mask, exact, nodes, OracleStrategy::Enumeration)
    } else {
        let (best, mask, exact, nodes) = branch_and_bound(&adj, topo.degree(), m as u32, budget);
        (best, mask, exact, nodes, OracleStrategy::BranchAndBound)
    };
    Ok(ExOracleOutcome {
        value: ExValue {
            m,
            n,
            folded,
            degree_sum: best,
        },
        witness: mask_members(mask),
        exact,
        nodes,
        strategy,
    })
}

fn adjacency_masks(topo: &CubeTopology) -> Vec<u64> {
    (0..topo.vertex_count() as Vertex)
        .map(|v| {
            topo.neighbors_unchecked(v)
                .fold(0u64, |acc, w| acc | 1 << w)
        })
        .collect()
}

fn mask_members(mask: u64) -> VertexSet {
    (0..64).filter(|&b| mask >> b & 1 == 1).collect()
}

fn degree_sum(adj: &[u64], mask: u64) -> u64 {
    let mut rest = mask;
    let mut total = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        total += u64::from((adj[v] & mask).count_ones());
        rest &= rest - 1;
    }
    total
}

/// Gosper's hack over every `m`-bit mask of `adj.len()` bits.
fn enumerate(adj: &[u64], m: u32, budget: u64) -> (u64, u64, bool, u64) {
    let limit = 1u64 << adj.len();
    let mut mask = (1u64 << m) - 1;
    let (mut best, mut best_mask) = (degree_sum(adj, mask), mask);
    let mut nodes = 0u64;
    while mask < limit {
        if nodes == budget {
            return (best, best_mask, false, nodes);
        }
        nodes += 1;
        let value = degree_sum(adj, mask);
        if value > best {
            best = value;
            best_mask = mask;
        }
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    (best, best_mask, true, nodes)
}

struct Search<'a> {
    adj: &'a [u64],
    degree: u32,
    target: u32,
    budget: u64,
    nodes: u64,
    aborted: bool,
    best: u64,
    best_mask: u64,
}

impl Search<'_> {
    /// Optimistic final degree sum from a partial choice.
    ///
    /// Each remaining pick adds its edges back to the chosen set, at most
    /// its count against the current set plus the picks made after it, and
    /// never more than the degree.
    fn bound(&self, chosen: u64, count: u32, sum: u64, next: usize) -> u64 {
        let remaining = (self.target - count) as usize;
        let mut gains: Vec<u32> = (next..self.adj.len())
            .map(|w| (self.adj[w] & chosen).count_ones())
            .collect();
        if gains.len() < remaining {
            return 0;
        }
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let extra: u64 = gains[..remaining]
            .iter()
            .enumerate()
            .map(|(j, &g)| u64::from((g + j as u32).min(self.degree)))
            .sum();
        sum + 2 * extra
    }

    fn run(&mut self, chosen: u64, count: u32, sum: u64, next: usize) {
        if self.aborted {
            return;
        }
        if count == self.target {
            if sum > self.best {
                self.best = sum;
                self.best_mask = chosen;
            }
            return;
        }
        if self.nodes == self.budget {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        if self.bound(chosen, count, sum, next) <= self.best {
            return;
        }
        let last = self.adj.len() - (self.target - count) as usize;
        for v in next..=last {
            let gain = u64::from((self.adj[v] & chosen).count_ones());
            self.run(chosen | 1 << v, count + 1, sum + 2 * gain, v + 1);
            if self.aborted {
                return;
            }
        }
    }
}

fn branch_and_bound(adj: &[u64], degree: u32, m: u32, budget: u64) -> (u64, u64, bool, u64) {
    let seed = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut search = Search {
        adj,
        degree,
        target: m,
        budget,
        nodes: 0,
        aborted: false,
        best: degree_sum(adj, seed),
        best_mask: seed,
    };
    search.run(0, 0, 0, 0);
    (search.best, search.best_mask, !search.aborted, search.nodes)
}

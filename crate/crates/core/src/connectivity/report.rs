use serde::{Deserialize, Serialize};

use super::cut::build_cut;
use super::partition::exact_clambda;
use super::{formula_value, in_theorem_range};
use crate::error::Result;
use crate::graph::{ComponentProfile, CubeTopology};

/// How much of the isolated-vertex property was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CorollaryScope {
    /// Only the constructed cut and the oracle's witness were inspected.
    Witness,
    /// Every optimal partition was inspected.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryCheck {
    pub scope: CorollaryScope,
    pub cut_isolated: usize,
    pub oracle_isolated: Option<usize>,
    /// Every inspected optimum leaves exactly `g` isolated vertices.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: u32,
    pub g: u64,
    pub formula_value: u64,
    pub constructed_cut_size: u64,
    pub component_profile: ComponentProfile,
    pub oracle_value: Option<u64>,
    pub oracle_exact: bool,
    pub oracle_nodes: Option<u64>,
    pub in_theorem_range: bool,
    pub cut_matches_formula: bool,
    pub oracle_matches_formula: Option<bool>,
    pub corollary: CorollaryCheck,
}

impl TheoremReport {
    /// Formula equals the constructed cut, and the oracle (if run) agrees.
    pub fn matches(&self) -> bool {
        self.cut_matches_formula && self.oracle_matches_formula.unwrap_or(true)
    }

    /// Whether this report counts as a pass. Rows outside the proven range
    /// are informational and always pass.
    pub fn passed(&self) -> bool {
        !self.in_theorem_range || (self.matches() && self.corollary.holds)
    }

    /// An exact optimum can never exceed a valid cut.
    pub fn upper_bound_sound(&self) -> bool {
        match (self.oracle_value, self.oracle_exact) {
            (Some(v), true) => self.constructed_cut_size >= v,
            _ => true,
        }
    }
}

/// Builds the cut for `(n, g)`, compares it with the formula and, when
/// `with_oracle` is set, with the exact `cλ_{g+1}` under `budget`.
pub fn verify_theorem(n: u32, g: u64, with_oracle: bool, budget: u64) -> Result<TheoremReport> {
    let formula = formula_value(n, g)?;
    let built = build_cut(n, g)?;
    let cut_size = built.cut.len() as u64;
    let topo = CubeTopology::folded_hypercube(n)?;

    let oracle = if with_oracle {
        Some(exact_clambda(n, g as usize + 1, budget)?)
    } else {
        None
    };
    let oracle_isolated = oracle
        .as_ref()
        .filter(|o| o.exact)
        .map(|o| o.witness.profile(&topo).isolated_count);
    let g_isolated = g as usize;
    let corollary = CorollaryCheck {
        scope: CorollaryScope::Witness,
        cut_isolated: built.profile.isolated_count,
        oracle_isolated,
        holds: built.profile.isolated_count == g_isolated
            && oracle_isolated.is_none_or(|i| i == g_isolated),
    };

    Ok(TheoremReport {
        n,
        g,
        formula_value: formula,
        constructed_cut_size: cut_size,
        component_profile: built.profile,
        oracle_value: oracle.as_ref().map(|o| o.value),
        oracle_exact: oracle.as_ref().is_some_and(|o| o.exact),
        oracle_nodes: oracle.as_ref().map(|o| o.nodes),
        in_theorem_range: in_theorem_range(n, g),
        cut_matches_formula: cut_size == formula,
        oracle_matches_formula: oracle.as_ref().map(|o| o.value == formula),
        corollary,
    })
}

//! `cλ_{g+1}(FQ_n) = (n+1) g - ex_g / 2`: the formula, the cut that attains
//! it, and exact oracles for `cλ_k` on small cubes.

mod cut;
mod mincut;
mod partition;
mod report;

pub use cut::{build_cut, BuiltCut};
pub use mincut::{global_min_cut, MinCut, MINCUT_MAX_N};
pub use partition::{
    enumerate_optimal_cuts, exact_clambda, partition_search, ClambdaOutcome, OptimalCuts,
    OptimalPartition, PartitionWitness, SearchMethod,
};
pub use report::{verify_theorem, CorollaryCheck, CorollaryScope, TheoremReport};

use crate::error::{invalid, Result};
use crate::extremal::ex_fqn;
use crate::graph::CubeTopology;

/// Largest `g` covered by the theorem at dimension `n`: `2^{⌊(n+1)/2⌋}`.
pub fn theorem_g_max(n: u32) -> u64 {
    1 << n.div_ceil(2)
}

/// `n >= 5` and `g <= 2^{⌊(n+1)/2⌋}`.
pub fn in_theorem_range(n: u32, g: u64) -> bool {
    n >= 5 && (1..=theorem_g_max(n)).contains(&g)
}

/// `(n+1) g - ex_g(FQ_n) / 2`. Defined for any `1 <= g < 2^n`; whether the
/// value is the true connectivity is what [`in_theorem_range`] tells.
pub fn formula_value(n: u32, g: u64) -> Result<u64> {
    let topo = CubeTopology::folded_hypercube(n)?;
    if g == 0 || g >= topo.vertex_count() as u64 {
        return Err(invalid(format!("g = {g} outside [1, 2^{n} - 1]")));
    }
    Ok(u64::from(n + 1) * g - ex_fqn(g, n)?.edges())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_examples() {
        for n in 3..=12 {
            assert_eq!(formula_value(n, 1).unwrap(), u64::from(n + 1));
        }
        assert_eq!(formula_value(5, 4).unwrap(), 20);
        assert_eq!(formula_value(7, 3).unwrap(), 22);
        assert_eq!(formula_value(8, 16).unwrap(), 112);
        assert_eq!(formula_value(6, 8).unwrap(), 44);
        assert!(formula_value(5, 0).is_err());
        assert!(formula_value(3, 8).is_err());
    }

    #[test]
    fn formula_increases_through_theorem_range() {
        for n in 3..=14 {
            for g in 1..theorem_g_max(n) {
                assert!(formula_value(n, g + 1).unwrap() > formula_value(n, g).unwrap());
            }
        }
    }

    #[test]
    fn range_flag() {
        assert!(in_theorem_range(5, 8));
        assert!(!in_theorem_range(5, 9));
        assert!(!in_theorem_range(4, 1));
        assert!(in_theorem_range(6, 8));
        assert_eq!(theorem_g_max(8), 16);
    }
}

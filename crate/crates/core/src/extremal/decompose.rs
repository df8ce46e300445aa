use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// `m = 2^{t_0} + 2^{t_1} + ... + 2^{t_s}` with `t_0 > t_1 > ... > t_s >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyDecomposition {
    pub m: u64,
    pub exponents: Vec<u32>,
}

impl GreedyDecomposition {
    /// `s + 1`, the number of powers of two in the sum.
    pub fn term_count(&self) -> usize {
        self.exponents.len()
    }

    /// `(i, t_i)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &t)| (i as u64, t))
    }
}

/// Repeatedly strips the largest power of two not exceeding what is left.
pub fn greedy_decompose(m: u64) -> Result<GreedyDecomposition> {
    if m == 0 {
        return Err(invalid("decomposition needs m >= 1"));
    }
    let mut rest = m;
    let mut exponents = Vec::with_capacity(rest.count_ones() as usize);
    while rest > 0 {
        let t = rest.ilog2();
        exponents.push(t);
        rest -= 1 << t;
    }
    Ok(GreedyDecomposition { m, exponents })
}

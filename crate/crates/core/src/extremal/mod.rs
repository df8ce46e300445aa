//! Edge-isoperimetric machinery for `Q_n` and `FQ_n`.
//!
//! `ex_m` is always a degree sum here: twice the largest number of edges any
//! `m`-vertex induced subgraph can have.

mod closed_form;
mod decompose;
pub mod lemmas;
mod oracle;

pub use closed_form::{
    ex, ex_fqn, ex_fqn_half_correction, ex_qn, incomplete_set, xi, ExValue, IncompleteKind,
};
pub use decompose::{greedy_decompose, GreedyDecomposition};
pub use oracle::{ex_oracle, ExOracleOutcome, OracleStrategy};

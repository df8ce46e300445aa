use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use fqconn::connectivity::theorem_g_max;
use fqconn::extremal::lemmas::LemmaId;
use fqconn::DEFAULT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandKind {
    /// Formula vs. constructed cut (vs. exact oracle) over an (n, g) grid.
    Verify,
    /// Closed-form ex_m against the brute-force maximizer.
    Ex,
    /// Inequality sweeps.
    Lemmas,
    /// Emit the constructed (g+1)-component cut.
    Cut,
    /// Greedy binary decomposition of m.
    Decompose,
    /// Exact k-component edge connectivity of FQ_n.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Inclusive integer range written `a` or `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: u64,
    pub hi: u64,
}

impl IntRange {
    pub fn single(&self) -> Option<u64> {
        (self.lo == self.hi).then_some(self.lo)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{t:?} is not a nonnegative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.single() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}..{}", self.lo, self.hi),
        }
    }
}

/// `g` selection: a value, a range, `max`, or a range ending in `max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GSpec {
    lo: Bound,
    hi: Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bound {
    Value(u64),
    Max,
}

impl Bound {
    fn resolve(self, n: u32) -> u64 {
        match self {
            Bound::Value(v) => v,
            Bound::Max => theorem_g_max(n),
        }
    }
}

impl GSpec {
    /// `1..max`, the full proven range.
    pub fn full() -> Self {
        Self {
            lo: Bound::Value(1),
            hi: Bound::Max,
        }
    }

    /// The selected values for dimension `n`; they must lie in `1..=g_max(n)`.
    pub fn resolve(&self, n: u32) -> Result<Vec<u64>, String> {
        let (lo, hi) = (self.lo.resolve(n), self.hi.resolve(n));
        let max = theorem_g_max(n);
        if lo == 0 || hi > max {
            return Err(format!("g must lie in 1..={max} for n = {n}"));
        }
        Ok((lo..=hi).collect())
    }
}

impl FromStr for GSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bound = |t: &str| match t.trim() {
            "max" => Ok(Bound::Max),
            other => other
                .parse::<u64>()
                .map(Bound::Value)
                .map_err(|_| format!("{other:?} is neither an integer nor `max`")),
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (bound(a)?, bound(b)?),
            None => {
                let b = bound(s)?;
                (b, b)
            }
        };
        Ok(Self { lo, hi })
    }
}

/// Everything a run needs, straight from the command line.
#[derive(Debug, Clone, Parser)]
#[command(
    name = "fqconn",
    version,
    about = "Component edge connectivity of folded hypercubes"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: CommandKind,
    /// Dimension, `a` or `a..b` (inclusive).
    #[arg(long)]
    pub n: Option<IntRange>,
    /// Component parameter: integer, `a..b`, `max` or `a..max`.
    #[arg(long)]
    pub g: Option<GSpec>,
    /// Set size for `ex` and `decompose`, `a` or `a..b`.
    #[arg(long)]
    pub m: Option<IntRange>,
    /// Target component count for `oracle`, `a` or `a..b`.
    #[arg(long)]
    pub k: Option<IntRange>,
    /// Every m in [1, 2^n] for `ex`.
    #[arg(long)]
    pub all_m: bool,
    /// Use FQ_n (default for `ex`).
    #[arg(long, conflicts_with = "plain")]
    pub folded: bool,
    /// Use Q_n.
    #[arg(long)]
    pub plain: bool,
    /// Run the exact oracle as well.
    #[arg(long)]
    pub oracle: bool,
    /// Search-node expansion limit for oracles.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Worker threads for grid cells.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub workers: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Do not fail the run when an oracle stops on its budget.
    #[arg(long)]
    pub allow_inexact: bool,
    /// Restrict `lemmas` to one suite: 2, 6, 9, 10, 11 or its name.
    #[arg(long)]
    pub lemma: Option<LemmaId>,
}

impl RunConfig {
    pub fn is_folded(&self) -> bool {
        !self.plain
    }
}

use std::time::Instant;

use fqconn::connectivity::{
    build_cut, exact_clambda, formula_value, verify_theorem, SearchMethod, TheoremReport,
};
use fqconn::extremal::lemmas::{run_sweep, LemmaId};
use fqconn::extremal::{ex, ex_fqn_half_correction, ex_oracle, greedy_decompose};
use fqconn::graph::{MAX_DIMENSION, MIN_DIMENSION};
use fqconn::CubeTopology;
use rayon::prelude::*;
use thiserror::Error;

use crate::config::{CommandKind, Format, GSpec, IntRange, RunConfig};
use crate::output::{
    self, CutReport, DecomposeRow, EdgeRow, ExRow, LemmaRow, OracleRow, ReportRow,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INEXACT: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] fqconn::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(fqconn::Error::ConstructionFailure { .. }) => EXIT_MISMATCH,
            CliError::Core(_) => EXIT_USAGE,
            CliError::Csv(_) | CliError::Io(_) | CliError::Pool(_) => EXIT_MISMATCH,
        }
    }
}

/// Rendered report plus the exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub output: String,
    /// One-line summary for stderr.
    pub summary: String,
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers as usize)
        .build()?;
    pool.install(|| match config.command {
        CommandKind::Verify => cmd_verify(config),
        CommandKind::Ex => cmd_ex(config),
        CommandKind::Lemmas => cmd_lemmas(config),
        CommandKind::Cut => cmd_cut(config),
        CommandKind::Decompose => cmd_decompose(config),
        CommandKind::Oracle => cmd_oracle(config),
    })
}

fn require<T: Copy>(value: Option<T>, flag: &str, command: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("`{command}` needs --{flag}")))
}

fn dimensions(range: IntRange) -> Result<Vec<u32>, CliError> {
    range
        .iter()
        .map(|n| match u32::try_from(n) {
            Ok(n) if (MIN_DIMENSION..=MAX_DIMENSION).contains(&n) => Ok(n),
            _ => Err(CliError::Usage(format!(
                "dimension {n} is outside {MIN_DIMENSION}..={MAX_DIMENSION}"
            ))),
        })
        .collect()
}

fn single(range: IntRange, flag: &str) -> Result<u64, CliError> {
    range
        .single()
        .ok_or_else(|| CliError::Usage(format!("--{flag} takes a single value here")))
}

fn to_row(report: &TheoremReport, elapsed_ms: f64) -> ReportRow {
    ReportRow {
        n: report.n,
        g: report.g,
        formula_value: report.formula_value,
        cut_size: report.constructed_cut_size,
        component_count: report.component_profile.count,
        isolated_count: report.component_profile.isolated_count,
        oracle_value: report.oracle_value,
        oracle_exact: report.oracle_exact,
        in_theorem_range: report.in_theorem_range,
        matches: report.matches(),
        elapsed_ms,
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

pub fn cmd_verify(config: &RunConfig) -> Result<Outcome, CliError> {
    let ns = dimensions(require(config.n, "n", "verify")?)?;
    let gspec = config.g.unwrap_or_else(GSpec::full);
    let mut cells: Vec<(u32, u64)> = Vec::new();
    for &n in &ns {
        let gs = gspec.resolve(n).map_err(CliError::Usage)?;
        cells.extend(gs.into_iter().map(|g| (n, g)));
    }
    if cells.is_empty() {
        return Err(CliError::Usage("the (n, g) grid is empty".into()));
    }
    let results: Vec<(TheoremReport, f64)> = cells
        .par_iter()
        .map(|&(n, g)| {
            let start = Instant::now();
            let report = verify_theorem(n, g, config.oracle, config.budget)?;
            Ok((report, elapsed_ms(start)))
        })
        .collect::<Result<_, fqconn::Error>>()?;

    let rows: Vec<ReportRow> = results.iter().map(|(r, ms)| to_row(r, *ms)).collect();
    let failed = results.iter().filter(|(r, _)| !r.passed()).count();
    let inexact = results
        .iter()
        .filter(|(r, _)| r.oracle_value.is_some() && !r.oracle_exact)
        .count();
    let code = if failed > 0 {
        EXIT_MISMATCH
    } else if inexact > 0 && !config.allow_inexact {
        EXIT_INEXACT
    } else {
        EXIT_OK
    };
    let in_range = results.iter().filter(|(r, _)| r.in_theorem_range).count();
    Ok(Outcome {
        code,
        output: output::render(&rows, config.format)?,
        summary: format!(
            "verify: {} rows, {in_range} in theorem range, {failed} failed, {inexact} inexact",
            rows.len()
        ),
    })
}

pub fn cmd_ex(config: &RunConfig) -> Result<Outcome, CliError> {
    let ns = dimensions(require(config.n, "n", "ex")?)?;
    let folded = config.is_folded();
    let mut cells = Vec::new();
    for &n in &ns {
        let topo = CubeTopology::new(n, folded)?;
        let ms: Vec<u64> = match (config.m, config.all_m) {
            (Some(range), false) => range.iter().collect(),
            (None, _) | (_, true) => (1..=topo.vertex_count() as u64).collect(),
        };
        cells.extend(ms.into_iter().map(|m| (n, m)));
    }
    let rows: Vec<ExRow> = cells
        .par_iter()
        .map(|&(n, m)| {
            let closed = ex(m, n, folded)?.degree_sum;
            let oracle = if config.oracle {
                Some(ex_oracle(m, n, folded, config.budget)?)
            } else {
                None
            };
            let half_correction = if folded && m > 1 << (n - 1) {
                Some(ex_fqn_half_correction(m, n)?)
            } else {
                None
            };
            Ok(ExRow {
                n,
                m,
                folded,
                closed_form: closed,
                oracle: oracle.as_ref().map(|o| o.value.degree_sum),
                oracle_exact: oracle.as_ref().map(|o| o.exact),
                witness: oracle.as_ref().map(|o| {
                    o.witness
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                }),
                half_correction,
                agree: oracle.as_ref().map(|o| o.value.degree_sum == closed),
            })
        })
        .collect::<Result<_, fqconn::Error>>()?;

    // an inexact oracle value is a lower bound: only exceeding the closed form is a mismatch
    let mismatches = rows
        .iter()
        .filter(|r| match (r.oracle, r.oracle_exact) {
            (Some(o), Some(true)) => o != r.closed_form,
            (Some(o), _) => o > r.closed_form,
            _ => false,
        })
        .count();
    let inexact = rows
        .iter()
        .filter(|r| r.oracle_exact == Some(false))
        .count();
    let half_differs = rows
        .iter()
        .filter(|r| r.half_correction.is_some_and(|p| p != r.closed_form))
        .count();
    let code = if mismatches > 0 {
        EXIT_MISMATCH
    } else if inexact > 0 && !config.allow_inexact {
        EXIT_INEXACT
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        code,
        output: output::render(&rows, config.format)?,
        summary: format!(
            "ex: {} rows, {mismatches} disagree, {inexact} inexact, {half_differs} rows where the half-correction branch differs",
            rows.len()
        ),
    })
}

pub fn cmd_lemmas(config: &RunConfig) -> Result<Outcome, CliError> {
    let ns = dimensions(require(config.n, "n", "lemmas")?)?;
    let lemmas: Vec<LemmaId> = match config.lemma {
        Some(id) => vec![id],
        None => LemmaId::ALL.to_vec(),
    };
    let cells: Vec<(u32, LemmaId)> = ns
        .iter()
        .flat_map(|&n| lemmas.iter().map(move |&l| (n, l)))
        .collect();
    let rows: Vec<LemmaRow> = cells
        .par_iter()
        .map(|&(n, lemma)| {
            let s = run_sweep(lemma, n)?;
            Ok(LemmaRow {
                lemma_id: lemma.number(),
                lemma: lemma.name().to_string(),
                n,
                cases: s.cases,
                violations: s.violations,
                passed: s.passed(),
                first_violation: s.first_violation,
            })
        })
        .collect::<Result<_, fqconn::Error>>()?;
    let failed = rows.iter().filter(|r| !r.passed).count();
    Ok(Outcome {
        code: if failed == 0 { EXIT_OK } else { EXIT_MISMATCH },
        output: output::render(&rows, config.format)?,
        summary: format!("lemmas: {} suites, {failed} failed", rows.len()),
    })
}

pub fn cmd_cut(config: &RunConfig) -> Result<Outcome, CliError> {
    let n = single(require(config.n, "n", "cut")?, "n")?;
    let n = dimensions(IntRange { lo: n, hi: n })?[0];
    let gs = require(config.g, "g", "cut")?
        .resolve(n)
        .map_err(CliError::Usage)?;
    let [g] = gs[..] else {
        return Err(CliError::Usage("--g takes a single value for `cut`".into()));
    };
    let built = build_cut(n, g)?;
    let report = CutReport {
        n,
        g,
        size: built.cut.len(),
        formula_value: formula_value(n, g)?,
        component_count: built.profile.count,
        sizes: built.profile.sizes.clone(),
        isolated_count: built.profile.isolated_count,
        edges: built.cut.pairs(),
    };
    let edges: Vec<EdgeRow> = report
        .edges
        .iter()
        .map(|&(u, v)| EdgeRow { u, v })
        .collect();
    let text = match config.format {
        Format::Json => output::json(&report),
        Format::Csv => output::csv(&edges)?,
        Format::Table => {
            let sizes: Vec<String> = report.sizes.iter().map(usize::to_string).collect();
            format!(
                "n = {n}, g = {g}\ncut size = {} (formula {})\ncomponents = {} [{}], isolated = {}\n\n{}",
                report.size,
                report.formula_value,
                report.component_count,
                sizes.join(", "),
                report.isolated_count,
                output::table(&edges)
            )
        }
    };
    let code = if report.size as u64 == report.formula_value {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    Ok(Outcome {
        code,
        output: text,
        summary: format!(
            "cut: {} edges, {} components",
            report.size, report.component_count
        ),
    })
}

pub fn cmd_decompose(config: &RunConfig) -> Result<Outcome, CliError> {
    let range = require(config.m, "m", "decompose")?;
    let rows: Vec<DecomposeRow> = range
        .iter()
        .map(|m| {
            let d = greedy_decompose(m)?;
            let exps: Vec<String> = d.exponents.iter().map(u32::to_string).collect();
            Ok(DecomposeRow {
                m,
                terms: d.term_count(),
                exponents: exps.join(" "),
            })
        })
        .collect::<Result<_, fqconn::Error>>()?;
    Ok(Outcome {
        code: EXIT_OK,
        output: output::render(&rows, config.format)?,
        summary: format!("decompose: {} values", rows.len()),
    })
}

pub fn cmd_oracle(config: &RunConfig) -> Result<Outcome, CliError> {
    let ns = dimensions(require(config.n, "n", "oracle")?)?;
    let ks = require(config.k, "k", "oracle")?;
    let cells: Vec<(u32, usize)> = ns
        .iter()
        .flat_map(|&n| ks.iter().map(move |k| (n, k as usize)))
        .collect();
    let rows: Vec<OracleRow> = cells
        .par_iter()
        .map(|&(n, k)| {
            let out = exact_clambda(n, k, config.budget)?;
            let topo = CubeTopology::folded_hypercube(n)?;
            let sizes: Vec<String> = {
                let mut s = out.witness.block_sizes();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s.iter().map(usize::to_string).collect()
            };
            Ok(OracleRow {
                n,
                k,
                value: out.value,
                exact: out.exact,
                nodes: out.nodes,
                method: match out.method {
                    SearchMethod::GlobalMinCut => "global-min-cut",
                    SearchMethod::BranchAndBound => "branch-and-bound",
                }
                .to_string(),
                formula_value: formula_value(n, k as u64 - 1).ok(),
                isolated_count: out.witness.profile(&topo).isolated_count,
                block_sizes: sizes.join(" "),
            })
        })
        .collect::<Result<_, fqconn::Error>>()?;
    let inexact = rows.iter().filter(|r| !r.exact).count();
    let code = if inexact > 0 && !config.allow_inexact {
        EXIT_INEXACT
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        code,
        output: output::render(&rows, config.format)?,
        summary: format!("oracle: {} instances, {inexact} inexact", rows.len()),
    })
}

//! Row types and the table / JSON / CSV renderers.

use serde::{Deserialize, Serialize};

use crate::config::Format;

/// One `(n, g)` cell of a `verify` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: u32,
    pub g: u64,
    pub formula_value: u64,
    pub cut_size: u64,
    pub component_count: usize,
    pub isolated_count: usize,
    pub oracle_value: Option<u64>,
    pub oracle_exact: bool,
    pub in_theorem_range: bool,
    #[serde(rename = "match")]
    pub matches: bool,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExRow {
    pub n: u32,
    pub m: u64,
    pub folded: bool,
    pub closed_form: u64,
    pub oracle: Option<u64>,
    pub oracle_exact: Option<bool>,
    /// Space-separated witness labels.
    pub witness: Option<String>,
    /// Upper branch with `+ (m - 2^{n-1})`; only for folded `m > 2^{n-1}`.
    pub half_correction: Option<u64>,
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaRow {
    pub lemma_id: u32,
    pub lemma: String,
    pub n: u32,
    pub cases: u64,
    pub violations: u64,
    pub passed: bool,
    pub first_violation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecomposeRow {
    pub m: u64,
    pub terms: usize,
    pub exponents: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleRow {
    pub n: u32,
    pub k: usize,
    pub value: u64,
    pub exact: bool,
    pub nodes: u64,
    pub method: String,
    pub formula_value: Option<u64>,
    pub isolated_count: usize,
    pub block_sizes: String,
}

/// Serialized `cut` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutReport {
    pub n: u32,
    pub g: u64,
    pub size: usize,
    pub formula_value: u64,
    pub component_count: usize,
    pub sizes: Vec<usize>,
    pub isolated_count: usize,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeRow {
    pub u: u32,
    pub v: u32,
}

/// Rows that know how to lay themselves out as a text table.
pub trait TableRow {
    fn headers() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

impl TableRow for ReportRow {
    fn headers() -> &'static [&'static str] {
        &[
            "n",
            "g",
            "formula",
            "cut",
            "components",
            "isolated",
            "oracle",
            "exact",
            "in_range",
            "match",
            "ms",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.g.to_string(),
            self.formula_value.to_string(),
            self.cut_size.to_string(),
            self.component_count.to_string(),
            self.isolated_count.to_string(),
            opt(&self.oracle_value),
            self.oracle_exact.to_string(),
            self.in_theorem_range.to_string(),
            self.matches.to_string(),
            format!("{:.3}", self.elapsed_ms),
        ]
    }
}

impl TableRow for ExRow {
    fn headers() -> &'static [&'static str] {
        &[
            "n",
            "m",
            "folded",
            "closed_form",
            "oracle",
            "exact",
            "half_correction",
            "agree",
            "witness",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let half = match (self.half_correction, self.oracle) {
            (Some(p), Some(o)) if p != o => format!("{p} (differs)"),
            (p, _) => opt(&p),
        };
        vec![
            self.n.to_string(),
            self.m.to_string(),
            self.folded.to_string(),
            self.closed_form.to_string(),
            opt(&self.oracle),
            opt(&self.oracle_exact),
            half,
            opt(&self.agree),
            opt(&self.witness),
        ]
    }
}

impl TableRow for LemmaRow {
    fn headers() -> &'static [&'static str] {
        &[
            "id",
            "lemma",
            "n",
            "cases",
            "violations",
            "result",
            "first_violation",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.lemma_id.to_string(),
            self.lemma.clone(),
            self.n.to_string(),
            self.cases.to_string(),
            self.violations.to_string(),
            if self.passed { "pass" } else { "FAIL" }.to_string(),
            opt(&self.first_violation),
        ]
    }
}

impl TableRow for DecomposeRow {
    fn headers() -> &'static [&'static str] {
        &["m", "terms", "exponents"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.terms.to_string(),
            self.exponents.clone(),
        ]
    }
}

impl TableRow for OracleRow {
    fn headers() -> &'static [&'static str] {
        &[
            "n", "k", "value", "exact", "nodes", "method", "formula", "isolated", "blocks",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.k.to_string(),
            self.value.to_string(),
            self.exact.to_string(),
            self.nodes.to_string(),
            self.method.clone(),
            opt(&self.formula_value),
            self.isolated_count.to_string(),
            self.block_sizes.clone(),
        ]
    }
}

impl TableRow for EdgeRow {
    fn headers() -> &'static [&'static str] {
        &["u", "v"]
    }

    fn cells(&self) -> Vec<String> {
        vec![self.u.to_string(), self.v.to_string()]
    }
}

pub fn table<R: TableRow>(rows: &[R]) -> String {
    let headers = R::headers();
    let cells: Vec<Vec<String>> = rows.iter().map(R::cells).collect();
    let widths: Vec<usize> = (0..headers.len())
        .map(|i| {
            cells
                .iter()
                .map(|r| r[i].len())
                .chain([headers[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields
            .iter()
            .zip(&widths)
            .map(|(f, w)| format!("{f:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for row in &cells {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn csv<R: Serialize>(rows: &[R]) -> Result<String, csv::Error> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("rows serialize");
    s.push('\n');
    s
}

/// Renders a homogeneous row list in the requested format.
pub fn render<R: TableRow + Serialize>(rows: &[R], format: Format) -> Result<String, csv::Error> {
    Ok(match format {
        Format::Table => table(rows),
        Format::Json => json(rows),
        Format::Csv => csv(rows)?,
    })
}

pub fn parse_csv<R: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<R>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(oracle: Option<u64>) -> ReportRow {
        ReportRow {
            n: 5,
            g: 2,
            formula_value: 11,
            cut_size: 11,
            component_count: 3,
            isolated_count: 2,
            oracle_value: oracle,
            oracle_exact: oracle.is_some(),
            in_theorem_range: true,
            matches: true,
            elapsed_ms: 0.125,
        }
    }

    #[test]
    fn csv_header_order() {
        let text = csv(&[row(Some(11))]).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(
            header,
            "n,g,formula_value,cut_size,component_count,isolated_count,oracle_value,oracle_exact,in_theorem_range,match,elapsed_ms"
        );
    }

    #[test]
    fn json_keeps_null_oracle() {
        let text = json(&[row(None)]);
        assert!(text.contains("\"oracle_value\": null"));
        assert!(text.contains("\"match\": true"));
    }

    #[test]
    fn table_alignment() {
        let t = table(&[row(None), row(Some(11))]);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("n  g"));
        assert!(lines[1].contains("  -  "));
    }
}

use std::process::{Command, Output};

use fqconn_cli::output::{parse_csv, CutReport, ExRow, LemmaRow, ReportRow};

fn fqconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqconn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json<T: for<'de> serde::Deserialize<'de>>(args: &[&str]) -> (i32, T) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = fqconn(&all);
    let parsed = serde_json::from_str(&stdout(&out)).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (out.status.code().unwrap(), parsed)
}

#[test]
fn verify_max_g_grid() {
    let (code, rows): (_, Vec<ReportRow>) = json(&["verify", "--n", "5..8", "--g", "max"]);
    assert_eq!(code, 0);
    let got: Vec<(u32, u64, u64)> = rows.iter().map(|r| (r.n, r.g, r.cut_size)).collect();
    assert_eq!(got, vec![(5, 8, 36), (6, 8, 44), (7, 16, 96), (8, 16, 112)]);
    assert!(rows
        .iter()
        .all(|r| r.matches && r.formula_value == r.cut_size));
}

#[test]
fn verify_with_oracle() {
    let (code, rows): (_, Vec<ReportRow>) = json(&["verify", "--n", "5", "--g", "2", "--oracle"]);
    assert_eq!(code, 0);
    let r = &rows[0];
    assert_eq!(
        (r.formula_value, r.cut_size, r.oracle_value),
        (11, 11, Some(11))
    );
    assert!(r.oracle_exact && r.in_theorem_range && r.matches);
    assert_eq!((r.component_count, r.isolated_count), (3, 2));
}

#[test]
fn verify_outside_range_is_informational() {
    let (code, rows): (_, Vec<ReportRow>) = json(&["verify", "--n", "3", "--g", "2", "--oracle"]);
    assert_eq!(code, 0);
    assert!(!rows[0].in_theorem_range);
    assert_eq!(rows[0].oracle_value, Some(7));
}

#[test]
fn ex_against_oracle() {
    let (code, rows): (_, Vec<ExRow>) =
        json(&["ex", "--n", "4", "--folded", "--all-m", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(rows.len(), 16);
    assert!(rows
        .iter()
        .all(|r| r.agree == Some(true) && r.oracle_exact == Some(true)));

    let (code, rows): (_, Vec<ExRow>) =
        json(&["ex", "--n", "3", "--folded", "--m", "5", "--oracle"]);
    assert_eq!(code, 0);
    let r = &rows[0];
    assert_eq!(
        (r.closed_form, r.oracle, r.half_correction),
        (12, Some(12), Some(11))
    );

    let (code, rows): (_, Vec<ExRow>) = json(&["ex", "--n", "6", "--m", "1"]);
    assert_eq!(code, 0);
    assert_eq!(rows[0].closed_form, 0);

    let (_, rows): (_, Vec<ExRow>) = json(&["ex", "--n", "3", "--plain", "--all-m"]);
    let plain: Vec<u64> = rows.iter().map(|r| r.closed_form).collect();
    assert_eq!(plain, vec![0, 2, 4, 8, 10, 14, 18, 24]);
    assert!(rows.iter().all(|r| r.half_correction.is_none()));
}

#[test]
fn lemma_suites() {
    let (code, rows): (_, Vec<LemmaRow>) = json(&["lemmas", "--n", "6"]);
    assert_eq!(code, 0);
    let ids: Vec<u32> = rows.iter().map(|r| r.lemma_id).collect();
    assert_eq!(ids, vec![2, 6, 9, 10, 11]);
    assert!(rows.iter().all(|r| r.passed && r.violations == 0));

    let (code, rows): (_, Vec<LemmaRow>) = json(&["lemmas", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(rows.len(), 5);

    let (code, rows): (_, Vec<LemmaRow>) = json(&["lemmas", "--n", "8", "--lemma", "10"]);
    assert_eq!(code, 0);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].lemma, "sublinearity");
    assert_eq!(rows[0].cases, 128);

    let by_name = fqconn(&["lemmas", "--n", "4", "--lemma", "merge-bound"]);
    assert_eq!(by_name.status.code(), Some(0));
}

#[test]
fn cut_outputs() {
    let (code, cut): (_, CutReport) = json(&["cut", "--n", "5", "--g", "1"]);
    assert_eq!(code, 0);
    assert_eq!(cut.edges.len(), 6);
    assert!(cut.edges.iter().all(|&(u, v)| u == 0 && v > 0));

    let (_, cut): (_, CutReport) = json(&["cut", "--n", "5", "--g", "4"]);
    assert_eq!((cut.size, cut.formula_value), (20, 20));
    assert_eq!(cut.sizes, vec![28, 1, 1, 1, 1]);

    let (_, cut): (_, CutReport) = json(&["cut", "--n", "6", "--g", "8"]);
    assert_eq!(cut.size, 44);

    let csv = stdout(&fqconn(&["cut", "--n", "5", "--g", "2", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("u,v"));
    assert_eq!(csv.lines().count(), 1 + 11);
}

#[test]
fn decompose_and_oracle() {
    let table = stdout(&fqconn(&["decompose", "--m", "13"]));
    assert!(table.lines().nth(1).unwrap().ends_with("3 2 0"));

    let out = fqconn(&["oracle", "--n", "5", "--k", "2..4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let values: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect::<Vec<_>>();
    assert_eq!(values, vec!["6", "11", "16"]);
}

#[test]
fn csv_round_trip_and_determinism() {
    let args = [
        "verify", "--n", "5..6", "--g", "1..3", "--oracle", "--format", "csv",
    ];
    let first = stdout(&fqconn(&args));
    let second = stdout(&fqconn(&args));
    let a: Vec<ReportRow> = parse_csv(&first).unwrap();
    let b: Vec<ReportRow> = parse_csv(&second).unwrap();
    assert_eq!(a.len(), 6);
    let strip = |rows: &[ReportRow]| {
        rows.iter()
            .map(|r| ReportRow {
                elapsed_ms: 0.0,
                ..r.clone()
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&a), strip(&b));

    let (_, from_json): (_, Vec<ReportRow>) =
        json(&["verify", "--n", "5..6", "--g", "1..3", "--oracle"]);
    assert_eq!(strip(&from_json), strip(&a));

    let parallel = stdout(&fqconn(&[
        "verify",
        "--n",
        "5..6",
        "--g",
        "1..3",
        "--oracle",
        "--format",
        "csv",
        "--workers",
        "3",
    ]));
    assert_eq!(
        strip(&parse_csv::<ReportRow>(&parallel).unwrap()),
        strip(&a)
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["verify"],
        &["verify", "--n", "99"],
        &["verify", "--n", "5", "--g", "9"],
        &["verify", "--n", "8..5"],
        &["ex", "--n", "3", "--folded", "--plain"],
        &["ex", "--n", "3", "--m", "9"],
        &["oracle", "--n", "5", "--k", "1"],
        &["cut", "--n", "5..6", "--g", "1"],
        &["verify", "--n", "5", "--budget", "0"],
        &["lemmas", "--n", "4", "--lemma", "7"],
    ] {
        let out = fqconn(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn exhausted_budget_exits_3_unless_allowed() {
    let args = [
        "verify", "--n", "5", "--g", "4", "--oracle", "--budget", "5",
    ];
    let out = fqconn(&args);
    assert_eq!(out.status.code(), Some(3));

    let mut allowed = args.to_vec();
    allowed.extend(["--allow-inexact", "--format", "json"]);
    let out = fqconn(&allowed);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<ReportRow> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!rows[0].oracle_exact);
    // the seed is the construction, so the bound is still tight
    assert_eq!(rows[0].oracle_value, Some(20));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = fqconn(&[
        "verify",
        "--n",
        "6",
        "--g",
        "max",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rows: Vec<ReportRow> =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rows[0].cut_size, 44);
}

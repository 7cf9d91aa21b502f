mod common;

use std::io::Cursor;
use std::path::Path;

use seidel_core::search::{
    scan_reader, scan_stream, write_report, PairReport, ReportFormat, ScanConfig,
};
use seidel_core::Graph;

/// Direct per-graph check with nalgebra eigenvalues: bound and balanced inertia.
fn brute_force_satisfies(g: &Graph, m: usize, power: i32) -> bool {
    let ev = common::oracle_eigenvalues(g);
    let bound = ((m - 1) as f64 / m as f64).powi(power);
    let pos = ev.iter().filter(|&&x| x > 1e-7).count();
    let neg = ev.iter().filter(|&&x| x < -1e-7).count();
    ev.iter().all(|x| x.abs() >= bound - 1e-7) && pos == neg && pos + neg == ev.len()
}

fn satisfying_lines(report: &PairReport) -> Vec<usize> {
    report
        .certificates
        .iter()
        .filter(|c| c.certificate.hypothesis.satisfied)
        .map(|c| c.line)
        .collect()
}

#[test]
fn four_vertex_catalog_matches_brute_force() {
    let lines: Vec<&str> = common::catalog_lines()
        .into_iter()
        .filter(|l| l.starts_with('C'))
        .collect();
    assert_eq!(lines.len(), 11);
    let report = scan_stream(&lines, &ScanConfig::new(1, 2)).unwrap();
    assert_eq!(report.totals.scanned, 11);
    let expected = lines
        .iter()
        .filter(|l| brute_force_satisfies(&seidel_core::graph_from_graph6(l).unwrap(), 2, 1))
        .count();
    assert_eq!(report.totals.hypothesis_satisfied, expected);
    assert_eq!(report.totals.accounted(), report.totals.scanned);
    assert!(!report.has_violations());
}

#[test]
fn catalog_oracle_equivalence_both_theorems() {
    let lines = common::catalog_lines();
    for (theorem, m) in [(1u8, 2usize), (1, 3), (2, 2)] {
        let report = scan_stream(&lines, &ScanConfig::new(theorem, m)).unwrap();
        let expected: Vec<usize> = lines
            .iter()
            .enumerate()
            .filter(|(_, l)| {
                brute_force_satisfies(
                    &seidel_core::graph_from_graph6(l).unwrap(),
                    m,
                    i32::from(theorem),
                )
            })
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(
            satisfying_lines(&report),
            expected,
            "theorem {theorem} m {m}"
        );
        assert_eq!(report.totals.hypothesis_satisfied, expected.len());
        assert_eq!(report.totals.certified, expected.len());
        assert_eq!(report.totals.violations, 0);
    }
}

#[test]
fn parallel_scan_is_byte_identical() {
    let lines = common::catalog_lines();
    let mut config = ScanConfig::new(1, 2);
    config.exact_verify = true;
    let serial = scan_stream(&lines, &config).unwrap().to_json().unwrap();
    config.parallelism = 4;
    let parallel = scan_stream(&lines, &config).unwrap().to_json().unwrap();
    assert_eq!(serial, parallel);
    let again = scan_stream(&lines, &config).unwrap().to_json().unwrap();
    assert_eq!(parallel, again);
}

#[test]
fn json_round_trip_and_files() {
    let lines = ["A_", "Bw", "C~", "nope", "@"];
    let mut config = ScanConfig::new(1, 2);
    config.exact_verify = true;
    let report = scan_stream(lines, &config).unwrap();
    let json = report.to_json().unwrap();
    assert_eq!(PairReport::from_json(&json).unwrap(), report);

    let dir = tempfile::tempdir().unwrap();
    for (format, name) in [
        (ReportFormat::Json, "r.json"),
        (ReportFormat::Csv, "r.csv"),
        (ReportFormat::Text, "r.txt"),
    ] {
        let path = dir.path().join(name);
        write_report(&report, format, &path).unwrap();
        let body = std::fs::read_to_string(&path).unwrap();
        assert_eq!(body, report.render(format).unwrap());
    }
    let csv = report.render(ReportFormat::Csv).unwrap();
    assert_eq!(csv.lines().count(), 1 + report.certificates.len());

    let err = write_report(
        &report,
        ReportFormat::Json,
        Path::new("/nonexistent/dir/r.json"),
    )
    .unwrap_err();
    assert!(err.to_string().contains("/nonexistent/dir/r.json"));
}

#[test]
fn json_keys_are_sorted() {
    let report = scan_stream(["A_"], &ScanConfig::new(1, 2)).unwrap();
    let json = report.to_json().unwrap();
    let top: Vec<usize> = [
        "\"certificates\"",
        "\"config\"",
        "\"failures\"",
        "\"totals\"",
    ]
    .iter()
    .map(|k| json.find(k).unwrap())
    .collect();
    assert!(top.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn reader_input() {
    let input = ">>graph6<<A_\nBw\n\n";
    let report = scan_reader(
        Cursor::new(input),
        Path::new("<stdin>"),
        &ScanConfig::new(1, 2),
    )
    .unwrap();
    assert_eq!(report.totals.scanned, 2);
    assert_eq!(report.totals.certified, 1);
    assert_eq!(report.totals.refuted, 1);
}

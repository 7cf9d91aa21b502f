//! Bulk scanning of graph6 catalogs.
//!
//! Every input line is one work unit. Lines are processed independently (optionally in
//! parallel) and merged back in input order, so the report does not depend on the
//! worker count.

use std::fmt::Write as _;
use std::fs;
use std::io::BufRead;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_num;
use crate::graph6::{clean_line, graph_from_graph6};
use crate::spectral::seidel_spectrum;
use crate::theory::{
    certify_from_spectrum, constructed_order, Certificate, CertifyOptions, Verdict,
};
use crate::tol::EXACT_MAX_ORDER;

/// Default cap on the order of constructed graphs during a scan.
pub const DEFAULT_SCAN_MAX_ORDER: usize = 2_000;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanConfig {
    pub m: usize,
    pub theorem: u8,
    /// Constructed graphs above this order are skipped.
    pub max_order: usize,
    /// Run the exact characteristic polynomial check (only up to `exact_max_order`).
    pub exact_verify: bool,
    pub exact_max_order: usize,
    /// Worker count. Not part of the serialized report.
    #[serde(skip, default = "one")]
    pub parallelism: usize,
}

fn one() -> usize {
    1
}

impl PartialEq for ScanConfig {
    fn eq(&self, other: &Self) -> bool {
        // parallelism is an execution knob and never changes the report
        self.m == other.m
            && self.theorem == other.theorem
            && self.max_order == other.max_order
            && self.exact_verify == other.exact_verify
            && self.exact_max_order == other.exact_max_order
    }
}

impl ScanConfig {
    pub fn new(theorem: u8, m: usize) -> Self {
        Self {
            m,
            theorem,
            max_order: DEFAULT_SCAN_MAX_ORDER,
            exact_verify: false,
            exact_max_order: EXACT_MAX_ORDER,
            parallelism: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::InvalidParameter(format!(
                "m must be at least 2, got {}",
                self.m
            )));
        }
        if !(1..=2).contains(&self.theorem) {
            return Err(Error::InvalidParameter(format!(
                "theorem must be 1 or 2, got {}",
                self.theorem
            )));
        }
        if self.parallelism == 0 {
            return Err(Error::InvalidParameter(
                "parallelism must be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn certify_options(&self) -> CertifyOptions {
        CertifyOptions {
            max_dim: self.max_order,
            exact_verify: self.exact_verify,
            exact_max_order: self.exact_max_order,
            ..CertifyOptions::default()
        }
    }
}

/// Outcome counts. Every scanned line lands in exactly one of `certified`, `refuted`,
/// `violations`, `hypothesis_failed`, `parse_failed`, `skipped` or `errors`;
/// `hypothesis_satisfied` and `boundary_flagged` are overlapping tallies.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub scanned: usize,
    pub hypothesis_satisfied: usize,
    pub certified: usize,
    pub refuted: usize,
    pub violations: usize,
    pub hypothesis_failed: usize,
    pub parse_failed: usize,
    pub skipped: usize,
    pub errors: usize,
    pub boundary_flagged: usize,
}

impl Totals {
    /// Sum of the mutually exclusive outcome classes.
    pub fn accounted(&self) -> usize {
        self.certified
            + self.refuted
            + self.violations
            + self.hypothesis_failed
            + self.parse_failed
            + self.skipped
            + self.errors
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineCertificate {
    pub line: usize,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Parse,
    Skipped,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub line: usize,
    pub kind: FailureKind,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub config: ScanConfig,
    pub totals: Totals,
    pub certificates: Vec<LineCertificate>,
    pub failures: Vec<Failure>,
}

impl PairReport {
    pub fn has_violations(&self) -> bool {
        self.totals.violations > 0
    }

    /// Canonical JSON: keys sorted, pretty printed, trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let value = serde_json::to_value(self)?;
        let mut s = serde_json::to_string_pretty(&value)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// One row per certificate.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        for lc in &self.certificates {
            let c = &lc.certificate;
            w.write_record([
                lc.line.to_string(),
                c.graph.clone(),
                c.n.to_string(),
                c.m.to_string(),
                c.theorem.to_string(),
                verdict_name(c.verdict).to_string(),
                c.hypothesis.satisfied.to_string(),
                c.hypothesis.balanced.to_string(),
                fmt_num(c.hypothesis.min_abs_eigenvalue),
                fmt_num(c.energy_a),
                fmt_num(c.energy_b),
                fmt_num(c.energy_delta),
                c.equienergetic.to_string(),
                c.cospectral.to_string(),
                c.closed_form_agrees.to_string(),
                c.exact_checked.to_string(),
                c.exact_multiplicities_verified.to_string(),
                c.boundary.to_string(),
            ])?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
    }

    pub fn to_text(&self) -> String {
        let t = &self.totals;
        let c = &self.config;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "theorem {} m={} max_order={} exact={}",
            c.theorem, c.m, c.max_order, c.exact_verify
        );
        let _ = writeln!(
            s,
            "scanned {}: certified {}, refuted {}, violations {}, hypothesis failed {}, parse failed {}, skipped {}, errors {}",
            t.scanned, t.certified, t.refuted, t.violations, t.hypothesis_failed, t.parse_failed, t.skipped, t.errors
        );
        let _ = writeln!(
            s,
            "hypothesis satisfied {}, boundary flagged {}",
            t.hypothesis_satisfied, t.boundary_flagged
        );
        for lc in &self.certificates {
            let cert = &lc.certificate;
            let _ = writeln!(
                s,
                "line {}: {} {} SE_a={} SE_b={} cospectral={}",
                lc.line,
                cert.graph,
                verdict_name(cert.verdict),
                fmt_num(cert.energy_a),
                fmt_num(cert.energy_b),
                cert.cospectral
            );
        }
        for f in &self.failures {
            let _ = writeln!(s, "line {}: {:?}: {}", f.line, f.kind, f.message);
        }
        s
    }

    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Text => Ok(self.to_text()),
        }
    }
}

pub const CSV_HEADER: [&str; 18] = [
    "line",
    "graph",
    "n",
    "m",
    "theorem",
    "verdict",
    "hypothesis_satisfied",
    "balanced",
    "min_abs_eigenvalue",
    "energy_a",
    "energy_b",
    "energy_delta",
    "equienergetic",
    "cospectral",
    "closed_form_agrees",
    "exact_checked",
    "exact_multiplicities_verified",
    "boundary",
];

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Equienergetic => "equienergetic",
        Verdict::NotEquienergetic => "not_equienergetic",
        Verdict::NoClaim => "no_claim",
        Verdict::Violation => "violation",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "text" => Ok(Self::Text),
            other => Err(Error::InvalidParameter(format!(
                "unknown report format {other:?}"
            ))),
        }
    }
}

enum Outcome {
    ParseFailed(String),
    HypothesisFailed { satisfied: bool },
    Skipped { satisfied: bool, reason: String },
    Errored { satisfied: bool, reason: String },
    Certified(Box<Certificate>),
}

fn scan_line(text: &str, config: &ScanConfig, opts: &CertifyOptions) -> Outcome {
    let g = match graph_from_graph6(text) {
        Ok(g) => g,
        Err(e) => return Outcome::ParseFailed(e.to_string()),
    };
    let sigma = match seidel_spectrum(&g) {
        Ok(s) => s,
        Err(e) => {
            return Outcome::Errored {
                satisfied: false,
                reason: e.to_string(),
            }
        }
    };
    let power = u32::from(config.theorem);
    let bound = ((config.m - 1) as f64 / config.m as f64).powi(power as i32);
    let inertia = crate::spectral::Inertia::of_values(&sigma.values, opts.zero_tol);
    let bound_met = sigma.min_abs() >= bound - opts.zero_tol;
    let satisfied = bound_met && inertia.is_balanced();
    if !bound_met {
        return Outcome::HypothesisFailed { satisfied };
    }
    let order = constructed_order(g.n(), config.m, config.theorem);
    if order.is_none_or(|o| o > config.max_order) {
        return Outcome::Skipped {
            satisfied,
            reason: format!(
                "constructed order {} exceeds max_order {}",
                order.map_or_else(|| "overflow".to_string(), |o| o.to_string()),
                config.max_order
            ),
        };
    }
    match certify_from_spectrum(&g, sigma, config.m, config.theorem, opts) {
        Ok(c) => Outcome::Certified(Box::new(c)),
        Err(e) => Outcome::Errored {
            satisfied,
            reason: e.to_string(),
        },
    }
}

/// Scans graph6 lines. Blank lines are ignored and a leading `>>graph6<<` header is
/// stripped; line numbers are 1-based positions in `lines`.
pub fn scan_stream<I, S>(lines: I, config: &ScanConfig) -> Result<PairReport>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    config.validate()?;
    let work: Vec<(usize, String)> = lines
        .into_iter()
        .enumerate()
        .filter_map(|(i, l)| clean_line(l.as_ref(), i == 0).map(|s| (i + 1, s.to_string())))
        .collect();
    let opts = config.certify_options();
    let run = |(line, text): &(usize, String)| (*line, scan_line(text, config, &opts));

    let outcomes: Vec<(usize, Outcome)> = if config.parallelism == 1 {
        work.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.parallelism)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| work.par_iter().map(run).collect())
    };

    let mut report = PairReport {
        config: config.clone(),
        totals: Totals::default(),
        certificates: Vec::new(),
        failures: Vec::new(),
    };
    let t = &mut report.totals;
    for (line, outcome) in outcomes {
        t.scanned += 1;
        let failure = |kind, message| Failure {
            line,
            kind,
            message,
        };
        match outcome {
            Outcome::ParseFailed(msg) => {
                t.parse_failed += 1;
                report.failures.push(failure(FailureKind::Parse, msg));
            }
            Outcome::HypothesisFailed { satisfied } => {
                t.hypothesis_failed += 1;
                t.hypothesis_satisfied += usize::from(satisfied);
            }
            Outcome::Skipped { satisfied, reason } => {
                t.skipped += 1;
                t.hypothesis_satisfied += usize::from(satisfied);
                report.failures.push(failure(FailureKind::Skipped, reason));
            }
            Outcome::Errored { satisfied, reason } => {
                t.errors += 1;
                t.hypothesis_satisfied += usize::from(satisfied);
                report.failures.push(failure(FailureKind::Error, reason));
            }
            Outcome::Certified(cert) => {
                t.hypothesis_satisfied += usize::from(cert.hypothesis.satisfied);
                t.boundary_flagged += usize::from(cert.boundary);
                match cert.verdict {
                    Verdict::Equienergetic => t.certified += 1,
                    Verdict::NotEquienergetic => t.refuted += 1,
                    Verdict::Violation => t.violations += 1,
                    Verdict::NoClaim => unreachable!("only graphs meeting the bound are certified"),
                }
                report.certificates.push(LineCertificate {
                    line,
                    certificate: *cert,
                });
            }
        }
    }
    debug_assert_eq!(report.totals.accounted(), report.totals.scanned);
    Ok(report)
}

/// Reads every line of `reader` and scans it.
pub fn scan_reader(reader: impl BufRead, source: &Path, config: &ScanConfig) -> Result<PairReport> {
    let lines = reader
        .lines()
        .collect::<std::io::Result<Vec<_>>>()
        .map_err(|source_err| Error::Io {
            path: source.to_path_buf(),
            source: source_err,
        })?;
    scan_stream(lines, config)
}

pub fn write_report(report: &PairReport, format: ReportFormat, destination: &Path) -> Result<()> {
    let body = report.render(format)?;
    fs::write(destination, body).map_err(|source| Error::Io {
        path: destination.to_path_buf(),
        source,
    })
}

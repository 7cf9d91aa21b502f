//! `seidel` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 a certificate or scan
//! reported a violated prediction.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use seidel_core::graph::{d_m_star_with_cap, d_m_with_cap};
use seidel_core::search::{
    scan_reader, write_report, ReportFormat, ScanConfig, DEFAULT_SCAN_MAX_ORDER,
};
use seidel_core::theory::{certify_theorem1_with, certify_theorem2_with, CertifyOptions};
use seidel_core::tol::{DEFAULT_MAX_DIM, ENERGY_TOL, EXACT_MAX_ORDER, NUM_TOL, ZERO_TOL};
use seidel_core::{
    charpoly_exact, check_cospectral, check_equienergetic, complement, graph_from_graph6,
    graph_to_graph6, lemma1_spectrum, lemma2_spectrum, seidel_inertia, seidel_matrix,
    seidel_spectrum, theorem2_spectra, Graph,
};

/// Environment variable holding the default dimension cap.
pub const MAX_DIM_ENV: &str = "SEIDEL_MAX_DIM";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "seidel",
    version,
    about = "Seidel spectra, Seidel energy and equienergetic constructions"
)]
struct Cli {
    /// Maximum order of any constructed graph [default: $SEIDEL_MAX_DIM or 10000]
    #[arg(long, global = true)]
    max_dim: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

/// A graph6 string, `-` for standard input, or `--file PATH`.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// graph6 string, or `-` to read the first graph from standard input
    graph: Option<String>,
    /// Read the first graph from a graph6 file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct JsonFlag {
    /// Print JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Seidel spectrum in power notation
    Spectrum {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Seidel energy
    Energy {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Seidel inertia (positive, zero, negative)
    Inertia {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: JsonFlag,
        #[arg(long, default_value_t = ZERO_TOL)]
        zero_tol: f64,
    },
    /// Exact characteristic polynomial of the Seidel matrix
    Charpoly {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Complement graph, as graph6
    Complement {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Build D_m(G), D_m*(G), D_m*(D_m(G)) or D_m(D_m*(G)), as graph6
    Construct {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        which: Construction,
        /// Number of copies (at least 2)
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Closed-form Seidel spectra of the constructions
    ClosedForm {
        #[command(flatten)]
        input: Input,
        /// 1: spectrum of D_m(G); 2: spectrum of D_m*(G)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), conflicts_with = "theorem", required_unless_present = "theorem")]
        lemma: Option<u8>,
        /// 2: spectra of D_m*(D_m(G)) and D_m(D_m*(G))
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=2))]
        theorem: Option<u8>,
        /// Number of copies (at least 2)
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Equienergy and cospectrality of two graphs
    Compare {
        first: String,
        second: String,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Certificate for one graph (JSON by default)
    Certify {
        #[command(flatten)]
        input: Input,
        /// Which construction pair to certify (1 or 2)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        /// Number of copies (at least 2)
        #[arg(long)]
        m: usize,
        /// Human-readable output instead of JSON
        #[arg(long)]
        text: bool,
        /// Skip the exact characteristic polynomial check
        #[arg(long)]
        no_exact: bool,
    },
    /// Scan a graph6 catalog (file or standard input)
    Scan {
        /// graph6 file; `-` or absent reads standard input
        path: Option<PathBuf>,
        /// Which construction pair to certify (1 or 2)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        /// Number of copies (at least 2)
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run the exact characteristic polynomial check
        #[arg(long)]
        exact: bool,
        /// Worker threads; the report does not depend on this
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Skip graphs whose constructions would exceed this order
        #[arg(long, default_value_t = DEFAULT_SCAN_MAX_ORDER)]
        max_order: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Construction {
    /// D_m(G)
    #[arg(long)]
    dm: bool,
    /// D_m*(G)
    #[arg(long)]
    dmstar: bool,
    /// D_m*(D_m(G))
    #[arg(long)]
    t2_left: bool,
    /// D_m(D_m*(G))
    #[arg(long)]
    t2_right: bool,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<seidel_core::Error> for Failure {
    fn from(e: seidel_core::Error) -> Self {
        match e {
            seidel_core::Error::Graph6(_) | seidel_core::Error::InvalidParameter(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other.to_string()),
        }
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn BufRead,
    stdout: &'a mut dyn Write,
    max_dim: usize,
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let max_dim = match cli.max_dim.map(Ok).unwrap_or_else(default_max_dim) {
        Ok(v) => v,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut ctx = Ctx {
        stdin,
        stdout,
        max_dim,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(
                stderr,
                "error: {msg}\n\nFor more information, try '--help'."
            );
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_COMPUTE
        }
    }
}

fn default_max_dim() -> Result<usize, String> {
    match std::env::var(MAX_DIM_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_DIM_ENV}={v:?} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn first_graph_line(reader: &mut dyn BufRead, source: &str) -> Result<String, Failure> {
    let mut first = true;
    for line in reader.lines() {
        let line = line.map_err(|e| Failure::Compute(format!("reading {source}: {e}")))?;
        if let Some(text) = seidel_core::graph6::clean_line(&line, first) {
            return Ok(text.to_string());
        }
        first = false;
    }
    Err(Failure::Usage(format!("no graph found in {source}")))
}

fn parse_graph(text: &str) -> Result<Graph, Failure> {
    graph_from_graph6(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

impl Ctx<'_> {
    fn graph_arg(&mut self, text: &str) -> Result<Graph, Failure> {
        if text == "-" {
            let line = first_graph_line(self.stdin, "standard input")?;
            parse_graph(&line)
        } else {
            parse_graph(text)
        }
    }

    fn read_input(&mut self, input: &Input) -> Result<Graph, Failure> {
        match (&input.graph, &input.file) {
            (Some(text), None) => self.graph_arg(text),
            (None, Some(path)) => {
                let file = std::fs::File::open(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                let line = first_graph_line(
                    &mut std::io::BufReader::new(file),
                    &path.display().to_string(),
                )?;
                parse_graph(&line)
            }
            _ => Err(Failure::Usage(
                "exactly one input source is required".into(),
            )),
        }
    }

    fn emit(&mut self, text: &str) -> Outcome {
        writeln!(self.stdout, "{text}")
            .map_err(|e| Failure::Compute(format!("writing output: {e}")))?;
        Ok(EXIT_OK)
    }

    fn emit_json<T: serde::Serialize>(&mut self, value: &T) -> Outcome {
        // through Value so object keys come out sorted
        let value = serde_json::to_value(value).map_err(|e| Failure::Compute(e.to_string()))?;
        let text =
            serde_json::to_string_pretty(&value).map_err(|e| Failure::Compute(e.to_string()))?;
        self.emit(&text)
    }
}

fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> Outcome {
    match command {
        Command::Spectrum { input, out } => {
            let s = seidel_spectrum(&ctx.read_input(&input)?)?;
            if out.json {
                ctx.emit_json(&s)
            } else {
                ctx.emit(&s.to_string())
            }
        }
        Command::Energy { input, out } => {
            let e = seidel_spectrum(&ctx.read_input(&input)?)?.energy();
            if out.json {
                ctx.emit_json(&json!({ "energy": e }))
            } else {
                ctx.emit(&seidel_core::format::fmt_num(e))
            }
        }
        Command::Inertia {
            input,
            out,
            zero_tol,
        } => {
            let i = seidel_inertia(&ctx.read_input(&input)?, zero_tol)?;
            if out.json {
                ctx.emit_json(&i)
            } else {
                ctx.emit(&i.to_string())
            }
        }
        Command::Charpoly { input, out } => {
            let p = charpoly_exact(&seidel_matrix(&ctx.read_input(&input)?)?);
            if out.json {
                ctx.emit_json(&p)
            } else {
                ctx.emit(&p.to_string())
            }
        }
        Command::Complement { input, out } => {
            let code = graph_to_graph6(&complement(&ctx.read_input(&input)?)?)?;
            if out.json {
                ctx.emit_json(&json!({ "graph6": code }))
            } else {
                ctx.emit(&code)
            }
        }
        Command::Construct {
            input,
            which,
            m,
            out,
        } => {
            let g = ctx.read_input(&input)?;
            let cap = ctx.max_dim;
            let built = if which.dm {
                d_m_with_cap(&g, m, cap)?
            } else if which.dmstar {
                d_m_star_with_cap(&g, m, cap)?
            } else if which.t2_left {
                d_m_star_with_cap(&d_m_with_cap(&g, m, cap)?, m, cap)?
            } else {
                d_m_with_cap(&d_m_star_with_cap(&g, m, cap)?, m, cap)?
            };
            let code = graph_to_graph6(&built)?;
            if out.json {
                ctx.emit_json(&json!({ "graph6": code, "n": built.n() }))
            } else {
                ctx.emit(&code)
            }
        }
        Command::ClosedForm {
            input,
            lemma,
            theorem: _,
            m,
            out,
        } => {
            let g = ctx.read_input(&input)?;
            let sigma = seidel_spectrum(&g)?;
            match lemma {
                Some(l) => {
                    let cf = if l == 1 {
                        lemma1_spectrum(&sigma, m, g.n())?
                    } else {
                        lemma2_spectrum(&sigma, m, g.n())?
                    };
                    if out.json {
                        ctx.emit_json(&cf)
                    } else {
                        ctx.emit(&cf.to_spectrum().to_string())
                    }
                }
                None => {
                    let (left, right) = theorem2_spectra(&sigma, m, g.n())?;
                    if out.json {
                        ctx.emit_json(&json!({ "left": left, "right": right }))
                    } else {
                        ctx.emit(&format!("{}\n{}", left.to_spectrum(), right.to_spectrum()))
                    }
                }
            }
        }
        Command::Compare { first, second, out } => {
            let g1 = ctx.graph_arg(&first)?;
            let g2 = ctx.graph_arg(&second)?;
            let e1 = seidel_spectrum(&g1)?.energy();
            let e2 = seidel_spectrum(&g2)?.energy();
            let (equienergetic, delta) = check_equienergetic(&g1, &g2, ENERGY_TOL)?;
            let cospectral = check_cospectral(&g1, &g2, NUM_TOL)?;
            if out.json {
                ctx.emit_json(&json!({
                    "energy_1": e1,
                    "energy_2": e2,
                    "energy_delta": delta,
                    "equienergetic": equienergetic,
                    "cospectral": cospectral,
                }))
            } else {
                use seidel_core::format::fmt_num;
                ctx.emit(&format!(
                    "SE_1 = {}\nSE_2 = {}\ndelta = {}\nequienergetic: {equienergetic}\ncospectral: {cospectral}",
                    fmt_num(e1),
                    fmt_num(e2),
                    fmt_num(delta)
                ))
            }
        }
        Command::Certify {
            input,
            theorem,
            m,
            text,
            no_exact,
        } => {
            let g = ctx.read_input(&input)?;
            let opts = CertifyOptions {
                max_dim: ctx.max_dim,
                exact_verify: !no_exact,
                exact_max_order: EXACT_MAX_ORDER,
                ..CertifyOptions::default()
            };
            let cert = if theorem == 1 {
                certify_theorem1_with(&g, m, &opts)?
            } else {
                certify_theorem2_with(&g, m, &opts)?
            };
            if text {
                ctx.emit(&cert.to_string())?;
            } else {
                ctx.emit_json(&cert)?;
            }
            Ok(if cert.is_violation() {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            })
        }
        Command::Scan {
            path,
            theorem,
            m,
            format,
            out,
            exact,
            jobs,
            max_order,
        } => {
            let config = ScanConfig {
                m,
                theorem,
                max_order,
                exact_verify: exact,
                exact_max_order: EXACT_MAX_ORDER,
                parallelism: jobs,
            };
            let report = match path.as_deref() {
                None => scan_reader(&mut *ctx.stdin, Path::new("<stdin>"), &config)?,
                Some(p) if p == Path::new("-") => {
                    scan_reader(&mut *ctx.stdin, Path::new("<stdin>"), &config)?
                }
                Some(p) => {
                    let file = std::fs::File::open(p)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                    scan_reader(std::io::BufReader::new(file), p, &config)?
                }
            };
            let format = match format {
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::Csv,
                Format::Text => ReportFormat::Text,
            };
            match out {
                Some(dest) => write_report(&report, format, &dest)?,
                None => {
                    let body = report.render(format)?;
                    write!(ctx.stdout, "{body}")
                        .map_err(|e| Failure::Compute(format!("writing output: {e}")))?;
                }
            }
            Ok(if report.has_violations() {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            })
        }
    }
}

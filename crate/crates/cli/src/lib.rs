//! Command-line frontend for `tanvar-core`.
//!
//! [`run`] parses arguments, dispatches to a command and returns the rendered
//! output with its exit code, so the binary and the tests share one path.

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use tanvar_core::{CurveClass, TypeSequence};

pub mod commands;
pub mod doc;
pub mod mesh;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for invalid input or a failed guard.
pub const EXIT_INVALID: i32 = 2;
/// Exit code for an inconclusive or unclassified verdict.
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError { message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    Inconclusive,
    /// Only produced by `batch` when some document was rejected.
    Invalid,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Success => EXIT_OK,
            Status::Inconclusive => EXIT_INCONCLUSIVE,
            Status::Invalid => EXIT_INVALID,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Success => "ok",
            Status::Inconclusive => "inconclusive",
            Status::Invalid => "invalid",
        }
    }
}

/// Output of one command: text lines, a structured value and a status.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub lines: Vec<String>,
    pub data: Value,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut data = serde_json::Map::new();
        data.insert("command".into(), Value::from(command));
        Report { lines: Vec::new(), data: Value::Object(data), status: Status::Success }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        if let Value::Object(m) = &mut self.data {
            m.insert(key.into(), v.into());
        }
        self
    }

    pub fn inconclusive(&mut self) -> &mut Self {
        self.status = Status::Inconclusive;
        self
    }

    pub fn structured(&self) -> Value {
        let mut v = self.data.clone();
        if let Value::Object(m) = &mut v {
            m.insert("status".into(), Value::from(self.status.name()));
        }
        v
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => {
                let mut s = self.lines.join("\n");
                s.push('\n');
                s
            }
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.structured()).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Plain,
    /// JSON
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "tanvar", version, about = "Exact analysis of curve germs and their tangent varieties")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// Curve class selection shared by several commands.
#[derive(Debug, Clone, Args)]
pub struct ClassArgs {
    /// plain, tangent, tpn, osculating, flag or contact.
    #[arg(long, default_value = "plain")]
    pub class: String,
    /// Projective dimension parameter N (curves in RP^{N+1}).
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    /// Contact parameter n (curves in RP^{2n+1}).
    #[arg(long = "n")]
    pub small_n: Option<usize>,
    /// Dimension of the underlying vector space (type length + 1).
    #[arg(long)]
    pub ambient: Option<usize>,
    /// Flag depth for `--class flag`.
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct MeshArgs {
    /// Write an OBJ mesh of the sampled map to this path.
    #[arg(long)]
    pub mesh: Option<std::path::PathBuf>,
    /// Three 1-based component indices to embed.
    #[arg(long, default_value = "1,2,3")]
    pub coords: String,
    /// Sampling range `lo,hi` for both parameters.
    #[arg(long, default_value = "-1,1", allow_hyphen_values = true)]
    pub range: String,
    /// Grid points per parameter.
    #[arg(long, default_value_t = 50)]
    pub grid: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Type of a curve germ.
    Type {
        /// Germ document, or `-` for stdin.
        file: String,
    },
    /// Singularity of the tangent variety for a type or a curve.
    Classify {
        /// Comma-separated type, e.g. `1,2,4,5`.
        #[arg(long = "type", conflicts_with = "curve")]
        ty: Option<String>,
        /// Curve document whose type is used.
        #[arg(long)]
        curve: Option<String>,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Generic types (codimension ≤ 1) of a class.
    Enumerate {
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Codimension of a type stratum.
    Codim {
        #[arg(long = "type")]
        ty: String,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Tangent map, frontality and optional mesh of a curve germ.
    Tangent {
        file: String,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Ordinary-point class and D4 test of a Legendre surface germ.
    Surface { file: String },
    /// Position of a symmetric 3x3 matrix relative to the Veronese surface.
    Veronese {
        /// Matrix document.
        #[arg(conflicts_with = "diag")]
        file: Option<String>,
        /// Diagonal entries `a,b,c` instead of a document.
        #[arg(long, allow_hyphen_values = true)]
        diag: Option<String>,
    },
    /// Ramification certificates for the components of a tangent map.
    Opening { file: String },
    /// Morin map and its versal-opening generators.
    Morin {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
    },
    /// Tangent variety solved from its generating family.
    Family {
        #[arg(long = "type")]
        ty: String,
    },
    /// Normal form of a named singularity.
    NormalForm {
        /// e.g. `cuspidal-edge`, `open-swallowtail`.
        name: String,
        /// Number of chart components; defaults to the smallest allowed.
        #[arg(long)]
        dim: Option<usize>,
        /// `st` or `ux`.
        #[arg(long, default_value = "st")]
        chart: String,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Analyse several documents; reports keep the input order.
    Batch {
        #[arg(required = true)]
        files: Vec<String>,
    },
}

pub fn parse_type(s: &str) -> Result<TypeSequence, CliError> {
    let entries = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| CliError::invalid(format!("bad type entry {x:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    TypeSequence::new(entries).map_err(|e| CliError::invalid(e.to_string()))
}

/// Class of the given name whose type length is `len`.
pub fn class_from_len(name: &str, len: usize, depth: Option<usize>) -> Result<CurveClass, CliError> {
    let n = len.checked_sub(1).filter(|&n| n >= 1).ok_or_else(|| CliError::invalid("type too short for a class"))?;
    let class = match name {
        "contact" => {
            if len % 2 == 0 {
                return Err(CliError::invalid(format!("contact types have odd length, got {len}")));
            }
            CurveClass::ContactOsculating { n: n / 2 }
        }
        _ => build_class(name, n, depth)?,
    };
    class.validate().map_err(|e| CliError::invalid(e.to_string()))?;
    Ok(class)
}

fn build_class(name: &str, n: usize, depth: Option<usize>) -> Result<CurveClass, CliError> {
    Ok(match name {
        "plain" => CurveClass::Plain { n },
        "tangent" => CurveClass::TangentFramed { n },
        "tpn" => CurveClass::TpnFramed { n },
        "osculating" => CurveClass::OsculatingFramed { n },
        "flag" => CurveClass::Flag { n, depth: depth.ok_or_else(|| CliError::invalid("--class flag needs --depth"))? },
        "contact" => CurveClass::ContactOsculating { n },
        other => return Err(CliError::invalid(format!("unknown class {other:?}"))),
    })
}

impl ClassArgs {
    /// Resolve the class parameter from `--N`/`--n`, `--ambient` or the type length.
    pub fn resolve(&self, type_len: Option<usize>) -> Result<CurveClass, CliError> {
        let contact = self.class == "contact";
        let mut candidates: Vec<(&str, usize)> = Vec::new();
        if contact {
            if self.big_n.is_some() {
                return Err(CliError::invalid("use --n for the contact class"));
            }
            if let Some(n) = self.small_n {
                candidates.push(("--n", n));
            }
            if let Some(a) = self.ambient {
                if a % 2 != 0 || a < 4 {
                    return Err(CliError::invalid(format!("contact ambient must be even and at least 4, got {a}")));
                }
                candidates.push(("--ambient", (a - 2) / 2));
            }
            if let Some(l) = type_len {
                if l % 2 == 0 {
                    return Err(CliError::invalid(format!("contact types have odd length, got {l}")));
                }
                candidates.push(("type length", (l - 1) / 2));
            }
        } else {
            if self.small_n.is_some() {
                return Err(CliError::invalid("--n applies to the contact class only; use --N"));
            }
            if let Some(n) = self.big_n {
                candidates.push(("--N", n));
            }
            if let Some(a) = self.ambient {
                if a < 3 {
                    return Err(CliError::invalid(format!("ambient must be at least 3, got {a}")));
                }
                candidates.push(("--ambient", a - 2));
            }
            if let Some(l) = type_len {
                if l < 2 {
                    return Err(CliError::invalid("type too short for a class"));
                }
                candidates.push(("type length", l - 1));
            }
        }
        let Some(&(_, n)) = candidates.first() else {
            return Err(CliError::invalid("class size unknown: give --N, --n or --ambient"));
        };
        if let Some((src, m)) = candidates.iter().find(|(_, m)| *m != n) {
            return Err(CliError::invalid(format!(
                "{src} implies parameter {m}, but {} implies {n}",
                candidates[0].0
            )));
        }
        let class = build_class(&self.class, n, self.depth)?;
        class.validate().map_err(|e| CliError::invalid(e.to_string()))?;
        Ok(class)
    }
}

/// Result of a whole invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    match commands::dispatch(&cli.command) {
        Ok(report) => Outcome { stdout: report.render(cli.format), stderr: String::new(), code: report.status.code() },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_INVALID },
    }
}

//! Command-line front end. [`run`] parses arguments and returns the exit code
//! together with everything that should go to stdout and stderr, so the
//! binary stays a thin wrapper and the commands can be tested in-process.

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijection::{pair_to_path, path_to_pair, PairJson, VacillatingTableau};
use crate::bratteli::{build_diagram, ExportFormat, Pair};
use crate::dims::{
    decompose, dim_irreducible, Group, GroupModuleContext, HalfLevel, IrrepLabel, Module,
};
use crate::error::{Error, Result};
use crate::verify::{self, Scope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "centralizer",
    version,
    about = "Centralizer algebra dimensions, Bratteli diagrams and the vacillating-tableau bijection"
)]
pub struct Cli {
    /// Output format: text, json, csv or dot (which ones apply depends on the command).
    #[arg(long, global = true)]
    pub format: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of one irreducible centralizer module.
    Dim(DimArgs),
    /// Decomposition of the tensor power into irreducibles.
    Decompose(ContextArgs),
    /// Restriction–induction Bratteli diagram.
    Bratteli(BratteliArgs),
    /// Paths to pairs and back.
    Bijection(BijectionArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GroupArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "A", alias = "a")]
    A,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModuleArg {
    Perm,
    Refl,
}

#[derive(Debug, Args)]
pub struct ContextArgs {
    #[arg(long, value_enum, default_value = "S")]
    pub group: GroupArg,
    #[arg(long, value_enum, default_value = "perm")]
    pub module: ModuleArg,
    #[arg(long)]
    pub n: usize,
    /// Level, integer or half-integer ("3", "7/2", "3.5").
    #[arg(long, allow_hyphen_values = true)]
    pub k: String,
}

#[derive(Debug, Args)]
pub struct DimArgs {
    #[command(flatten)]
    pub ctx: ContextArgs,
    /// Label such as "3,1", "2,2+" or "empty".
    #[arg(long)]
    pub lambda: String,
}

#[derive(Debug, Args)]
pub struct BratteliArgs {
    /// "S:4" or "A:6".
    #[arg(long)]
    pub pair: String,
    #[arg(long, value_enum, default_value = "perm")]
    pub module: ModuleArg,
    /// Highest level to build ("4", "7/2").
    #[arg(long, default_value = "4")]
    pub levels: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Direction {
    PathToPair,
    PairToPath,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    #[arg(long, value_enum)]
    pub direction: Direction,
    #[arg(long)]
    pub n: usize,
    /// JSON text, "@file", or "-" for stdin (the default).
    #[arg(long, default_value = "-")]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub scope: String,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::UnknownFormat(_) => EXIT_USAGE,
            _ => EXIT_SEMANTIC,
        };
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let format = cli.format.as_deref();
    let result = match &cli.command {
        Command::Dim(a) => cmd_dim(a, format),
        Command::Decompose(a) => cmd_decompose(a, format),
        Command::Bratteli(a) => cmd_bratteli(a, format),
        Command::Bijection(a) => cmd_bijection(a, format),
        Command::Verify(a) => return cmd_verify(a, format),
    };
    match result {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::error(&e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Fmt {
    Text,
    Json,
    Csv,
    Dot,
}

fn pick_format(requested: Option<&str>, default: Fmt, allowed: &[Fmt]) -> Result<Fmt> {
    let f = match requested.map(str::to_ascii_lowercase).as_deref() {
        None => default,
        Some("text") => Fmt::Text,
        Some("json") => Fmt::Json,
        Some("csv") => Fmt::Csv,
        Some("dot") => Fmt::Dot,
        Some(other) => return Err(Error::UnknownFormat(other.to_string())),
    };
    if !allowed.contains(&f) {
        return Err(Error::UnknownFormat(
            format!("{f:?} is not available for this command").to_lowercase(),
        ));
    }
    Ok(f)
}

fn context(a: &ContextArgs) -> Result<GroupModuleContext> {
    let group = match a.group {
        GroupArg::S => Group::Sym,
        GroupArg::A => Group::Alt,
    };
    let level: HalfLevel = a.k.parse()?;
    GroupModuleContext::new(group, a.n, module(a.module), level)
}

fn module(m: ModuleArg) -> Module {
    match m {
        ModuleArg::Perm => Module::Perm,
        ModuleArg::Refl => Module::Refl,
    }
}

fn context_json(ctx: &GroupModuleContext) -> serde_json::Value {
    json!({
        "group": ctx.group.to_string(),
        "n": ctx.n,
        "module": ctx.module.to_string(),
        "level": ctx.level.to_string(),
    })
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Domain(format!("csv output failed: {e}"));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Domain(format!("csv output failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv writer emits utf-8"))
}

fn cmd_dim(a: &DimArgs, format: Option<&str>) -> Result<String> {
    let fmt = pick_format(format, Fmt::Text, &[Fmt::Text, Fmt::Json, Fmt::Csv])?;
    let ctx = context(&a.ctx)?;
    let label = IrrepLabel::parse(ctx.group, &a.lambda)?;
    let d = dim_irreducible(&ctx, &label)?;
    Ok(match fmt {
        Fmt::Json => {
            let mut v = context_json(&ctx);
            v["label"] = json!(label.to_string());
            v["dimension"] = json!(d.to_string());
            format!("{v}\n")
        }
        Fmt::Csv => csv_text(
            &["label", "dimension"],
            &[vec![label.to_string(), d.to_string()]],
        )?,
        _ => format!("{d}\n"),
    })
}

fn cmd_decompose(a: &ContextArgs, format: Option<&str>) -> Result<String> {
    let fmt = pick_format(format, Fmt::Text, &[Fmt::Text, Fmt::Json, Fmt::Csv])?;
    let ctx = context(a)?;
    let parts = decompose(&ctx)?;
    Ok(match fmt {
        Fmt::Json => {
            let mut v = context_json(&ctx);
            v["decomposition"] = parts
                .iter()
                .map(|(l, m)| json!({"label": l.to_string(), "multiplicity": m.to_string()}))
                .collect();
            format!("{v}\n")
        }
        Fmt::Csv => {
            let rows: Vec<Vec<String>> = parts
                .iter()
                .map(|(l, m)| vec![l.to_string(), m.to_string()])
                .collect();
            csv_text(&["label", "multiplicity"], &rows)?
        }
        _ => {
            let cells: Vec<String> = parts.iter().map(|(l, m)| format!("{l}:{m}")).collect();
            format!("{}\n", cells.join("  "))
        }
    })
}

fn cmd_bratteli(a: &BratteliArgs, format: Option<&str>) -> Result<String> {
    let fmt = pick_format(format, Fmt::Text, &[Fmt::Text, Fmt::Json, Fmt::Dot])?;
    let pair: Pair = a.pair.parse()?;
    let levels: HalfLevel = a.levels.parse()?;
    let d = build_diagram(pair, module(a.module), levels)?;
    let export = match fmt {
        Fmt::Json => ExportFormat::Json,
        Fmt::Dot => ExportFormat::Dot,
        _ => ExportFormat::Text,
    };
    let mut out = d.export(export);
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

fn read_input(source: &str) -> Result<String> {
    if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = source.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
    } else {
        Ok(source.to_string())
    }
}

fn cmd_bijection(a: &BijectionArgs, format: Option<&str>) -> Result<String> {
    let fmt = pick_format(format, Fmt::Json, &[Fmt::Text, Fmt::Json])?;
    let input = read_input(&a.input)?;
    let bad_json = |e: serde_json::Error| {
        Error::Parse(format!("input is not valid JSON for this direction: {e}"))
    };
    match a.direction {
        Direction::PathToPair => {
            let vt: VacillatingTableau = serde_json::from_str(&input).map_err(bad_json)?;
            let (p, t) = path_to_pair(&vt, a.n)?;
            Ok(match fmt {
                Fmt::Text => format!("{p}  {t}\n"),
                _ => {
                    let pair = PairJson {
                        set_partition: p,
                        tableau: t,
                    };
                    format!(
                        "{}\n",
                        serde_json::to_string(&pair).expect("pair serializes")
                    )
                }
            })
        }
        Direction::PairToPath => {
            let pair: PairJson = serde_json::from_str(&input).map_err(bad_json)?;
            let vt = pair_to_path(&pair.set_partition, &pair.tableau, a.n)?;
            Ok(match fmt {
                Fmt::Text => {
                    let shapes: Vec<String> = vt.shapes().iter().map(|s| s.to_string()).collect();
                    format!("{}\n", shapes.join(" / "))
                }
                _ => format!("{}\n", serde_json::to_string(&vt).expect("path serializes")),
            })
        }
    }
}

fn cmd_verify(a: &VerifyArgs, format: Option<&str>) -> Outcome {
    let fmt = match pick_format(format, Fmt::Text, &[Fmt::Text, Fmt::Json]) {
        Ok(f) => f,
        Err(e) => return Outcome::error(&e),
    };
    let scope: Scope = match a.scope.parse() {
        Ok(s) => s,
        Err(e) => return Outcome::error(&e),
    };
    let report = verify::run(scope, a.n_max, a.k_max);
    let stdout = match fmt {
        Fmt::Json => {
            let suites: Vec<_> = report
                .suites
                .iter()
                .map(|s| {
                    json!({
                        "name": s.name,
                        "passed": s.passed,
                        "failed": s.failures.len(),
                        "failures": s.failures,
                    })
                })
                .collect();
            format!("{}\n", json!({"ok": report.ok(), "suites": suites}))
        }
        _ => format!("{report}\n"),
    };
    let code = if report.ok() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

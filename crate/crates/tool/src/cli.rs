//! `kunz <command> [semigroup] [flags]`.
//!
//! Exit status is 0 on success, 1 on a domain error or failed verification
//! and 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use kunz_core::{quark_report, reconstruct, Check, IdealPoset, IdealSet, NumericalSemigroup};

use crate::dot::{to_dot, DotOptions};
use crate::json::{IdealJson, Order, PosetJson, ReportJson};
use crate::{sweep, ToolError, ToolResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Invariants of a semigroup.
    Analyze,
    /// List the normalized ideals.
    Ideals,
    /// Hasse diagram as DOT or JSON.
    Hasse,
    /// Quarks and their depths (multiplicity 3).
    Quarks,
    /// Recover a multiplicity-3 semigroup from a poset JSON file.
    Reconstruct,
    /// Run the named checks on all multiplicity-3 semigroups up to a genus.
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "kunz", version, about = "Normalized ideals of numerical semigroups")]
pub struct Args {
    pub command: Command,
    /// Generators, comma separated, e.g. 3,13,17.
    pub semigroup: Option<String>,
    #[arg(long, value_enum)]
    pub order: Option<Order>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Poset JSON file, as written by `hasse --format json`
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 12)]
    pub max_genus: u64,
    /// Comma-separated check names; all checks when omitted.
    #[arg(long)]
    pub checks: Option<String>,
}

enum Outcome {
    Done,
    Failed,
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    if let Err(msg) = check_usage(&args) {
        let _ = writeln!(err, "usage error: {msg}");
        return 2;
    }
    match execute(&args, out) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            1
        }
    }
}

fn check_usage(args: &Args) -> Result<(), String> {
    use Command::*;
    let cmd = args.command;
    let name = format!("{cmd:?}").to_lowercase();
    let needs_semigroup = !matches!(cmd, Reconstruct | Verify);
    if needs_semigroup != args.semigroup.is_some() {
        return Err(if needs_semigroup {
            format!("{name} needs a semigroup such as 3,13,17")
        } else {
            format!("{name} takes no semigroup")
        });
    }
    if args.order.is_some() && cmd != Hasse {
        return Err(format!("--order is not accepted by {name}"));
    }
    match (cmd, args.format) {
        (Hasse, _) | (_, None) | (Ideals | Verify, Some(Format::Json)) => {}
        (_, Some(f)) => return Err(format!("--format {f:?} is not accepted by {name}").to_lowercase()),
    }
    if (cmd == Reconstruct) != args.input.is_some() {
        return Err(if cmd == Reconstruct {
            "reconstruct needs --input FILE".into()
        } else {
            format!("--input is not accepted by {name}")
        });
    }
    if cmd != Verify && args.checks.is_some() {
        return Err(format!("--checks is not accepted by {name}"));
    }
    Ok(())
}

fn execute(args: &Args, out: &mut dyn Write) -> ToolResult<Outcome> {
    let semigroup = || -> ToolResult<NumericalSemigroup> {
        Ok(args.semigroup.as_deref().unwrap_or_default().parse()?)
    };
    let text = match args.command {
        Command::Analyze => analyze(&semigroup()?)?,
        Command::Ideals => ideals(&semigroup()?, args.format)?,
        Command::Hasse => {
            let poset = IdealPoset::new(semigroup()?);
            let order = args.order.unwrap_or_default();
            match args.format.unwrap_or(Format::Dot) {
                Format::Dot => to_dot(&poset, DotOptions { order, positions: false })?,
                Format::Json => json_line(&PosetJson::from_poset(&poset, order))?,
            }
        }
        Command::Quarks => quarks(&semigroup()?)?,
        Command::Reconstruct => {
            let path = args.input.as_ref().expect("checked in usage");
            let raw = std::fs::read_to_string(path).map_err(|source| ToolError::Io {
                path: path.clone(),
                source,
            })?;
            let poset: PosetJson = serde_json::from_str(&raw)?;
            let result = reconstruct(&poset.to_abstract()?)?;
            format!("{}\n", result.recovered.generators_string())
        }
        Command::Verify => return verify(args, out),
    };
    write_out(out, &text)?;
    Ok(Outcome::Done)
}

fn write_out(out: &mut dyn Write, text: &str) -> ToolResult<()> {
    out.write_all(text.as_bytes()).map_err(|source| ToolError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn json_line<T: serde::Serialize>(value: &T) -> ToolResult<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn numbers<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn analyze(s: &NumericalSemigroup) -> ToolResult<String> {
    let pf = s.pseudo_frobenius()?;
    let sg = s.special_gaps()?;
    let mut lines = vec![
        format!("semigroup: {}", s.generators_string()),
        format!("multiplicity: {}", s.multiplicity()),
        format!("embedding-dimension: {}", s.embedding_dimension()),
        format!("apery: {}", numbers(s.apery_set())),
        format!("kunz: {}", s.kunz()),
        format!("genus: {}", s.genus()),
        format!("frobenius: {}", s.frobenius()),
        format!("type: {}", pf.len()),
        format!("pseudo-frobenius: {}", numbers(&pf)),
        format!("special-gaps: {}", numbers(&sg)),
        format!("classification: {}", s.classify()?),
    ];
    lines.push(String::new());
    Ok(lines.join("\n"))
}

fn ideals(s: &NumericalSemigroup, format: Option<Format>) -> ToolResult<String> {
    let set = IdealSet::enumerate(s.clone());
    if format == Some(Format::Json) {
        let list: Vec<IdealJson> = set.ideals().iter().map(IdealJson::from).collect();
        return json_line(&list);
    }
    let mut text = format!("count: {}\n", set.len());
    for ideal in set.ideals() {
        text.push_str(&format!("{}\n", ideal.kunz()));
    }
    Ok(text)
}

fn quarks(s: &NumericalSemigroup) -> ToolResult<String> {
    let r = quark_report(s)?;
    let mut text = format!(
        "semigroup: {}\ngenus: {}\nclassification: {}\nquarks: {}\n",
        s.generators_string(),
        s.genus(),
        r.classification,
        r.quark_kunz.len()
    );
    for (k, d) in r.quark_kunz.iter().zip(&r.quark_depths) {
        text.push_str(&format!("quark: {k} depth {d}\n"));
    }
    Ok(text)
}

fn verify(args: &Args, out: &mut dyn Write) -> ToolResult<Outcome> {
    let checks = match &args.checks {
        Some(list) => Check::parse_list(list)?,
        None => Check::ALL.to_vec(),
    };
    let reports = sweep::verify_suite(args.max_genus, &checks);
    let text = if args.format == Some(Format::Json) {
        json_line(&reports.iter().map(ReportJson::from).collect::<Vec<_>>())?
    } else {
        let mut text = String::new();
        for r in &reports {
            let status = if r.passed() { "pass" } else { "FAIL" };
            text.push_str(&format!(
                "{}: {status} ({} instances, max genus {})\n",
                r.check, r.instances, r.max_genus
            ));
            if let Some(f) = r.failures.first() {
                text.push_str(&format!(
                    "  first failure {}: {}\n",
                    f.semigroup.generators_string(),
                    f.detail
                ));
            }
        }
        text
    };
    write_out(out, &text)?;
    Ok(if reports.iter().all(|r| r.passed()) {
        Outcome::Done
    } else {
        Outcome::Failed
    })
}

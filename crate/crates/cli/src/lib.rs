//! Command-line front end for `superelliptic-core`.
//!
//! Every command prints one JSON report (see [`report`]). Exit status is 0 on
//! success, 1 on a reported error and 2 on a usage error.

pub mod commands;
pub mod equation;
pub mod report;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use superelliptic_core::{Rational, RootChoice};

use report::{CliError, Report};

#[derive(Debug, Parser)]
#[command(
    name = "superelliptic",
    version,
    about = "Dihedral invariants of superelliptic curves"
)]
pub struct Cli {
    /// Emit JSON (always on; accepted for scripting convenience).
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus of y^n = f(x) from n and deg f, or from an equation.
    Genus {
        equation: Option<String>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
    },
    /// Detect the normal form y^n = g(x^delta) or y^n = x g(x^delta).
    Classify {
        equation: String,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Dihedral invariants s_1..s_s, delta_s and the field of definition.
    Invariants {
        equation: String,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Field-of-moduli versus field-of-definition decision.
    Field {
        equation: Option<String>,
        /// Invariants s_1,...,s_s as comma-separated rationals.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        s: Option<Vec<Rational>>,
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Build a curve with the given invariants over F or F(sqrt(delta_s)).
    Reconstruct {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        s: Vec<Rational>,
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long, default_value_t = 2)]
        delta: usize,
        /// Root of the quadratic in A: plus or minus.
        #[arg(long)]
        root: Option<RootChoice>,
    },
    /// invariants -> reconstruct -> compare, for one tuple or a random batch.
    Roundtrip {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            conflicts_with = "random"
        )]
        a: Option<Vec<Rational>>,
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long, default_value_t = 2)]
        delta: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// A positional `-` reads the arguments as a JSON object from `stdin`.
/// Returns the text to print and the exit status.
pub fn run<I, S>(args: I, stdin: impl FnOnce() -> String) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut args: Vec<String> = args.into_iter().map(Into::into).collect();
    if let Some(pos) = args.iter().skip(2).position(|a| a == "-") {
        match stdin_args(&stdin()) {
            Ok(extra) => {
                args.splice(pos + 2..pos + 3, extra);
            }
            Err(e) => return usage_report(&args, e),
        }
    }
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return (e.to_string(), 0)
        }
        Err(e) => {
            let message = e.to_string().lines().next().unwrap_or_default().to_string();
            return usage_report(&args, CliError::new("usage_error", message));
        }
    };
    let report = dispatch(cli.command);
    (report.to_json(), report.exit_code())
}

fn usage_report(args: &[String], err: CliError) -> (String, i32) {
    let command = args.get(1).cloned().unwrap_or_default();
    let report = Report::new(
        &command,
        json!({"argv": &args[1.min(args.len())..]}),
        Err(err),
    );
    (report.to_json(), 2)
}

/// Turns `{"equation": "...", "s": ["9", "4"], "n": 2}` into argv entries.
fn stdin_args(text: &str) -> Result<Vec<String>, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::new("usage_error", format!("stdin is not valid JSON: {e}")))?;
    let Value::Object(map) = value else {
        return Err(CliError::new(
            "usage_error",
            "stdin must hold a JSON object",
        ));
    };
    let scalar = |v: &Value| match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(CliError::new(
            "usage_error",
            format!("unsupported JSON value {v}"),
        )),
    };
    let mut out = Vec::new();
    for (key, v) in &map {
        if key == "equation" {
            out.push(scalar(v)?);
            continue;
        }
        let flag = format!("--{key}");
        match v {
            Value::Null | Value::Bool(false) => {}
            Value::Bool(true) => out.push(flag),
            Value::Array(items) => {
                let parts: Result<Vec<String>, CliError> = items.iter().map(scalar).collect();
                out.push(format!("{flag}={}", parts?.join(",")));
            }
            other => out.push(format!("{flag}={}", scalar(other)?)),
        }
    }
    Ok(out)
}

fn dispatch(command: Command) -> Report {
    match command {
        Command::Genus { equation, n, d } => match (equation, n, d) {
            (Some(eq), None, None) => commands::genus_from_equation(&eq),
            (None, Some(n), Some(d)) => commands::genus_from_nd(n, d),
            _ => Report::new(
                "genus",
                json!({"n": n, "d": d}),
                Err(CliError::new(
                    "usage_error",
                    "give either an equation or both --n and --d",
                )),
            ),
        },
        Command::Classify { equation, delta } => commands::classify(&equation, delta),
        Command::Invariants { equation, delta } => commands::invariants(&equation, delta),
        Command::Field {
            equation,
            s,
            n,
            delta,
        } => match (equation, s) {
            (Some(eq), None) => commands::field_from_equation(&eq, delta),
            (None, Some(s)) => commands::field_from_values(&s, n, delta.unwrap_or(2)),
            _ => Report::new(
                "field",
                json!({"n": n, "delta": delta}),
                Err(CliError::new(
                    "usage_error",
                    "give either an equation or --s",
                )),
            ),
        },
        Command::Reconstruct { s, n, delta, root } => commands::reconstruct(&s, n, delta, root),
        Command::Roundtrip {
            a,
            random,
            seed,
            n,
            delta,
        } => match (a, random) {
            (Some(a), None) => commands::roundtrip_tuple(&a, n, delta),
            (None, Some(count)) => commands::roundtrip_random(count, seed, n, delta),
            _ => Report::new(
                "roundtrip",
                json!({"n": n, "delta": delta}),
                Err(CliError::new("usage_error", "give either --a or --random")),
            ),
        },
    }
}

//! The `divlog` command line.
//!
//! [`run`] never prints; it returns an [`Outcome`] holding the output
//! document and exit status, and `main` renders it.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::factorization::factorize;
use crate::interval::{Interval, DEFAULT_ENUM_CAP};
use crate::lattice::{join, meet};
use crate::logic::{self, Assignment, Validity, DEFAULT_SEARCH_CAP};
use crate::natural::Natural;
use crate::oracle::{verify_heyting, verify_lattice_laws, verify_projective, LawReport};

pub const ENUM_CAP_VAR: &str = "DIVLOG_ENUM_CAP";
pub const SEARCH_CAP_VAR: &str = "DIVLOG_SEARCH_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "divlog", version, about = "Logic of the divisibility lattice")]
struct Cli {
    /// Emit a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Bounds {
    #[arg(long)]
    bottom: String,
    #[arg(long)]
    top: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prime factorization of N.
    Factor { n: String },
    /// Greatest common divisor (meet).
    Gcd { a: String, b: String },
    /// Least common multiple (join).
    Lcm { a: String, b: String },
    /// Whether A divides B.
    Divides { a: String, b: String },
    /// Inspect the interval Q[Y,X].
    Interval {
        #[command(flatten)]
        bounds: Bounds,
        #[command(subcommand)]
        action: IntervalAction,
    },
    /// Pseudocomplement of A in Q[Y,X].
    Neg {
        #[command(flatten)]
        bounds: Bounds,
        a: String,
    },
    /// Implication A -> B in Q[Y,X].
    Imp {
        #[command(flatten)]
        bounds: Bounds,
        a: String,
        b: String,
    },
    /// Complement X·Y/A in a Boolean interval.
    Complement {
        #[command(flatten)]
        bounds: Bounds,
        a: String,
    },
    /// Evaluate a formula in Q[Y,X].
    Eval {
        #[command(flatten)]
        bounds: Bounds,
        formula: String,
        /// Variable binding, `name=value`; repeatable.
        #[arg(long = "let", value_name = "VAR=VALUE")]
        bindings: Vec<String>,
    },
    /// Check a formula against every assignment in Q[Y,X].
    Taut {
        #[command(flatten)]
        bounds: Bounds,
        formula: String,
    },
    /// Exhaustive law sweeps.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
}

#[derive(Debug, Subcommand)]
enum IntervalAction {
    List,
    Size,
    IsBoolean,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Idempotency, commutativity, associativity, distributivity on [1,MAX].
    Laws {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
    /// Heyting operations against the brute-force oracle.
    Heyting {
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        top_max: u64,
        #[arg(long, default_value_t = 512)]
        size_cap: u64,
    },
    /// x ∧ (z ∨ y) = (x ∧ z) ∨ y for y | x on [1,MAX].
    Projective {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub name: String,
    pub message: String,
}

/// What a command produced. Exactly one of `result` and `error` is set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub command: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Vec<LawReport>>,
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub document: OutputDocument,
    pub status: i32,
    pub json: bool,
    text: String,
}

impl Outcome {
    /// Text for stdout; empty when everything went to stderr.
    pub fn stdout(&self) -> String {
        if self.json {
            let mut s = self.document.to_json();
            s.push('\n');
            s
        } else if self.document.error.is_none() || self.document.report.is_some() {
            self.text.clone()
        } else {
            String::new()
        }
    }

    /// Diagnostics for stderr in text mode.
    pub fn stderr(&self) -> String {
        match (&self.document.error, self.json) {
            (Some(e), false) if e.name == "UsageError" => e.message.clone(),
            (Some(e), false) => format!("error: {}: {}\n", e.name, e.message),
            _ => String::new(),
        }
    }
}

struct Caps {
    enumeration: u64,
    search: u64,
}

fn cap_from_env(var: &str, default: u64) -> Result<u64, String> {
    match std::env::var(var) {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| format!("{var} must be a non-negative integer, got {s:?}\n")),
        Err(_) => Ok(default),
    }
}

/// Successful command output: JSON payload, text rendering, optional
/// reports, and whether the reports all passed.
struct Success {
    result: Value,
    text: String,
    report: Option<Vec<LawReport>>,
}

impl Success {
    fn plain(result: Value, text: impl Into<String>) -> Self {
        Success {
            result,
            text: text.into(),
            report: None,
        }
    }
}

fn natural(s: &str) -> Result<Natural, Error> {
    s.parse()
}

fn interval(b: &Bounds) -> Result<Interval, Error> {
    Interval::new(natural(&b.bottom)?, natural(&b.top)?)
}

fn value(n: &Natural) -> Value {
    serde_json::to_value(n).expect("natural serializes")
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let command: Vec<String> = argv.iter().skip(1).cloned().collect();
    let json = command.iter().any(|a| a == "--json");

    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let message = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    document: OutputDocument {
                        command,
                        result: Some(Value::String(message.clone())),
                        error: None,
                        report: None,
                    },
                    status: EXIT_OK,
                    json,
                    text: message,
                };
            }
            return usage_error(command, json, message);
        }
    };

    let caps = match (
        cap_from_env(ENUM_CAP_VAR, DEFAULT_ENUM_CAP),
        cap_from_env(SEARCH_CAP_VAR, DEFAULT_SEARCH_CAP),
    ) {
        (Ok(enumeration), Ok(search)) => Caps {
            enumeration,
            search,
        },
        (Err(m), _) | (_, Err(m)) => return usage_error(command, cli.json, m),
    };

    match execute(&cli.command, &caps) {
        Ok(success) => {
            let passed = success
                .report
                .as_ref()
                .is_none_or(|r| r.iter().all(LawReport::passed));
            let (result, error, status) = if passed {
                (Some(success.result), None, EXIT_OK)
            } else {
                let error = ErrorBody {
                    name: "LawViolated".into(),
                    message: "at least one law has counterexamples".into(),
                };
                (None, Some(error), EXIT_DOMAIN)
            };
            Outcome {
                document: OutputDocument {
                    command,
                    result,
                    error,
                    report: success.report,
                },
                status,
                json: cli.json,
                text: success.text,
            }
        }
        Err(e) => Outcome {
            document: OutputDocument {
                command,
                result: None,
                error: Some(ErrorBody {
                    name: e.name().to_string(),
                    message: e.to_string(),
                }),
                report: None,
            },
            status: EXIT_DOMAIN,
            json: cli.json,
            text: String::new(),
        },
    }
}

fn usage_error(command: Vec<String>, json: bool, message: String) -> Outcome {
    Outcome {
        document: OutputDocument {
            command,
            result: None,
            error: Some(ErrorBody {
                name: "UsageError".into(),
                message,
            }),
            report: None,
        },
        status: EXIT_USAGE,
        json,
        text: String::new(),
    }
}

fn execute(command: &Command, caps: &Caps) -> Result<Success, Error> {
    match command {
        Command::Factor { n } => {
            let n = natural(n)?;
            let v = factorize(&n)?;
            Ok(Success::plain(
                json!({ "n": value(&n), "factors": v }),
                format!("{n} = {v}\n"),
            ))
        }
        Command::Gcd { a, b } => {
            let m = meet(&natural(a)?, &natural(b)?);
            Ok(Success::plain(value(&m), format!("{m}\n")))
        }
        Command::Lcm { a, b } => {
            let j = join(&natural(a)?, &natural(b)?);
            Ok(Success::plain(value(&j), format!("{j}\n")))
        }
        Command::Divides { a, b } => {
            let d = natural(a)?.divides(&natural(b)?);
            Ok(Success::plain(Value::Bool(d), format!("{d}\n")))
        }
        Command::Interval { bounds, action } => {
            let q = interval(bounds)?;
            match action {
                IntervalAction::List => {
                    let members = q.enumerate_with_cap(caps.enumeration)?;
                    let mut text = String::new();
                    for m in &members {
                        writeln!(text, "{m}").unwrap();
                    }
                    let values: Vec<Value> = members.iter().map(|m| value(m.value())).collect();
                    Ok(Success::plain(Value::Array(values), text))
                }
                IntervalAction::Size => {
                    let size = q.size();
                    Ok(Success::plain(json!(size), format!("{size}\n")))
                }
                IntervalAction::IsBoolean => {
                    let b = q.is_boolean();
                    Ok(Success::plain(Value::Bool(b), format!("{b}\n")))
                }
            }
        }
        Command::Neg { bounds, a } => {
            let q = interval(bounds)?;
            let r = q.neg(&q.element(&natural(a)?)?)?;
            Ok(Success::plain(value(r.value()), format!("{r}\n")))
        }
        Command::Imp { bounds, a, b } => {
            let q = interval(bounds)?;
            let a = q.element(&natural(a)?)?;
            let b = q.element(&natural(b)?)?;
            let r = q.imp(&a, &b)?;
            Ok(Success::plain(value(r.value()), format!("{r}\n")))
        }
        Command::Complement { bounds, a } => {
            let q = interval(bounds)?;
            let r = q.boolean_complement(&q.element(&natural(a)?)?)?;
            Ok(Success::plain(value(r.value()), format!("{r}\n")))
        }
        Command::Eval {
            bounds,
            formula,
            bindings,
        } => {
            let q = interval(bounds)?;
            let f = logic::parse(formula)?;
            let mut env = Assignment::new();
            for binding in bindings {
                let (name, raw) = binding.split_once('=').ok_or_else(|| Error::SyntaxError {
                    position: 0,
                    message: format!("binding {binding:?} is not of the form name=value"),
                })?;
                env.insert(name.trim().to_string(), q.element(&natural(raw)?)?);
            }
            let r = logic::eval(&q, &f, &env)?;
            Ok(Success::plain(value(r.value()), format!("{r}\n")))
        }
        Command::Taut { bounds, formula } => {
            let q = interval(bounds)?;
            let f = logic::parse(formula)?;
            match logic::check_valid_with_cap(&q, &f, caps.search)? {
                Validity::Valid => Ok(Success::plain(json!({ "valid": true }), "valid\n")),
                Validity::Counterexample {
                    assignment,
                    value: v,
                } => {
                    let mut text = String::from("counterexample:");
                    let mut map = serde_json::Map::new();
                    for (name, e) in &assignment {
                        write!(text, " {name}={e}").unwrap();
                        map.insert(name.clone(), value(e.value()));
                    }
                    writeln!(text, " (value {v})").unwrap();
                    Ok(Success::plain(
                        json!({ "valid": false, "counterexample": map, "value": value(v.value()) }),
                        text,
                    ))
                }
            }
        }
        Command::Verify { which } => {
            let reports = match which {
                VerifyCommand::Laws { max } => verify_lattice_laws(*max),
                VerifyCommand::Heyting { top_max, size_cap } => verify_heyting(*top_max, *size_cap),
                VerifyCommand::Projective { max } => vec![verify_projective(*max)],
            };
            let passed = reports.iter().all(LawReport::passed);
            let mut text = String::new();
            for r in &reports {
                write!(
                    text,
                    "{} {} {} cases={}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.law_name,
                    r.parameters,
                    r.cases_checked
                )
                .unwrap();
                if !r.skipped.is_empty() {
                    write!(text, " skipped={}", r.skipped.len()).unwrap();
                }
                if !r.passed() {
                    write!(text, " counterexamples={}", r.counterexamples.len()).unwrap();
                }
                text.push('\n');
            }
            Ok(Success {
                result: json!({ "passed": passed, "laws": reports.len() }),
                text,
                report: Some(reports),
            })
        }
    }
}

//! Command-line front end.
//!
//! Exit statuses: 0 success, 1 computation-domain error, 2 usage error
//! (including malformed braid words), 3 verification failure.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::braid::BraidWord;
use crate::error::Error;
use crate::invariants::{
    homfly_of_braid, jones_of_braid, lcb_homfly_check, markov_suite, mirror_branch, skein_suite,
    split_union_suite, verify_lcb_recursion, writhe_sign,
};
use crate::trace::{axiom_check, trace_of_braid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "braidtrace", version, about = "Exact Ocneanu trace, HOMFLY and Jones polynomials of braid closures")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Strand count; overrides rank inference from the word.
    #[arg(long, global = true, value_name = "N")]
    pub rank: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Coxeter,
    Lcb,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jones–Ocneanu trace of a braid word.
    Trace {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// HOMFLY polynomial of the closure.
    Homfly {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Jones polynomial of the closure.
    Jones {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print a member of a braid family.
    Family { kind: FamilyKind, n: usize },
    /// Check the looped coxeter trace recursion and closed form.
    VerifyRecursion {
        #[arg(long, default_value_t = 4)]
        min: usize,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Run the seeded property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: EXIT_OK, stdout, stderr: String::new() }
    }
}

fn error_outcome(err: &Error, json: bool) -> Outcome {
    let status = match err {
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    };
    let kind = match err {
        Error::Parse(_) => "parse",
        Error::Rank { .. } => "rank",
        Error::IndexOutOfRange { .. } => "index",
        Error::RankMismatch(..) => "rank-mismatch",
        Error::Domain(_) => "domain",
        Error::NotDivisible | Error::DivisionByZero => "arithmetic",
    };
    if json {
        let body = json!({ "error": err.to_string(), "kind": kind });
        Outcome { status, stdout: format!("{body}\n"), stderr: String::new() }
    } else {
        Outcome { status, stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

fn read_word(text: &str, rank: Option<usize>) -> Result<BraidWord, Error> {
    if rank.is_none() && text.split(|c: char| c == ',' || c.is_whitespace()).all(str::is_empty) {
        return Err(Error::Parse("the empty word needs an explicit --rank".into()));
    }
    BraidWord::parse(text, rank)
}

fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    let json = cli.json;
    match execute(cli) {
        Ok(out) => out,
        Err(e) => error_outcome(&e, json),
    }
}

fn execute(cli: Cli) -> Result<Outcome, Error> {
    let json = cli.json;
    match cli.command {
        Command::Trace { word } => {
            let w = read_word(&word, cli.rank)?;
            let t = trace_of_braid(&w);
            Ok(Outcome::ok(if json {
                to_json(&json!({ "word": w, "trace": t }))
            } else {
                format!("{t}\n")
            }))
        }
        Command::Homfly { word } => {
            let w = read_word(&word, cli.rank)?;
            let h = homfly_of_braid(&w);
            Ok(Outcome::ok(if json {
                to_json(&serde_json::to_value(&h).expect("serializable"))
            } else {
                format!("{h}\n")
            }))
        }
        Command::Jones { word } => {
            let w = read_word(&word, cli.rank)?;
            let v = jones_of_braid(&w)?;
            Ok(Outcome::ok(if json {
                to_json(&json!({
                    "word": w,
                    "jones": v,
                    "epsilon": writhe_sign(),
                    "mirrorBranch": mirror_branch().name(),
                }))
            } else {
                format!("{v}\n")
            }))
        }
        Command::Family { kind, n } => {
            let w = match kind {
                FamilyKind::Coxeter => BraidWord::coxeter(n)?,
                FamilyKind::Lcb => BraidWord::looped_coxeter(n)?,
            };
            if let Some(r) = cli.rank {
                if r != w.rank() {
                    return Err(Error::RankMismatch(r, w.rank()));
                }
            }
            let components = w.closure_component_count();
            Ok(Outcome::ok(if json {
                to_json(&json!({
                    "word": w,
                    "writhe": w.writhe(),
                    "components": components,
                }))
            } else {
                format!(
                    "{w}\nrank {} writhe {} components {components}\n",
                    w.rank(),
                    w.writhe()
                )
            }))
        }
        Command::VerifyRecursion { min, max } => {
            let mut records = verify_lcb_recursion(min, max)?;
            for n in min..=max {
                records.push(lcb_homfly_check(n)?);
            }
            let pass = records.iter().all(|r| r.pass);
            let stdout = if json {
                to_json(&json!({ "pass": pass, "checks": records }))
            } else {
                let mut s = String::new();
                for r in &records {
                    let _ = writeln!(s, "{r}");
                }
                let _ = writeln!(
                    s,
                    "epsilon {} mirror {}: {}",
                    writhe_sign(),
                    mirror_branch(),
                    if pass { "all checks pass" } else { "FAILURES" }
                );
                s
            };
            Ok(Outcome {
                status: if pass { EXIT_OK } else { EXIT_VERIFY },
                stdout,
                stderr: String::new(),
            })
        }
        Command::Selftest { seed, samples } => {
            let axioms = axiom_check(5, samples, seed);
            let suites = [
                markov_suite(seed, samples, 5, 10),
                split_union_suite(seed, samples, 4, 10),
                skein_suite(seed, samples, 5, 10),
            ];
            let pass = axioms.passed() && suites.iter().all(|s| s.passed());
            let stdout = if json {
                to_json(&json!({ "pass": pass, "axioms": axioms, "suites": suites }))
            } else {
                let mut s = String::new();
                let _ = writeln!(
                    s,
                    "trace-axioms: {} ({} samples, {} failures)",
                    if axioms.passed() { "pass" } else { "FAIL" },
                    axioms.samples,
                    axioms.failures.len()
                );
                for f in &axioms.failures {
                    let _ = writeln!(s, "  {f}");
                }
                for suite in &suites {
                    let _ = writeln!(s, "{suite}");
                }
                s
            };
            Ok(Outcome {
                status: if pass { EXIT_OK } else { EXIT_VERIFY },
                stdout,
                stderr: String::new(),
            })
        }
    }
}

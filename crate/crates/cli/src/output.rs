//! Text and JSON rendering of command results and failures.
//!
//! JSON schema, one object per run:
//!
//! ```text
//! act     {"braid", "word", "image"}
//! star    {"a", "b", "result"}
//! eq      {"a", "b", "equal"}
//! eval    {"term", "base", "result"}
//! verify  {"alpha", "betas", "result", "suffix", "sigma1_positive",
//!          "image_of_x1", "image_of_x1_letters", "image_of_x1_explicit",
//!          "stripped", "distinct_from_alpha", "passes"}
//! prop    {"seed", "generator", "passed", "suites": [{"suite", "trials", "ok",
//!          "failures": [{"trial", "message"}], "overflows": [...]}]}
//! error   {"error": {"kind", "message", "span"}}
//! ```
//!
//! Words are strings in the textio formats. A `verify` image too large to
//! write out under the cap is given as `"<head> ... <tail> (<n> letters)"`
//! with `image_of_x1_explicit` false.

use std::fmt::Write as _;
use std::process::ExitCode;

use ldbraid::harness::{SuiteReport, GENERATOR};
use ldbraid::{BraidWord, FreeWord, Image, IrreflexivityCertificate, LdTerm, ParseError};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_CHECK_FAILED: u8 = 4;
pub const EXIT_USAGE: u8 = 5;

/// A finished command: what to print and how to exit.
pub struct Output {
    text: String,
    json: Value,
    code: u8,
}

#[derive(Serialize)]
struct Certificate {
    alpha: String,
    betas: Vec<String>,
    result: String,
    suffix: String,
    sigma1_positive: bool,
    image_of_x1: String,
    image_of_x1_letters: u128,
    image_of_x1_explicit: bool,
    stripped: Option<String>,
    distinct_from_alpha: bool,
    passes: bool,
}

#[derive(Serialize)]
struct TrialLine {
    trial: usize,
    message: String,
}

#[derive(Serialize)]
struct SuiteSummary {
    suite: String,
    trials: usize,
    ok: usize,
    failures: Vec<TrialLine>,
    overflows: Vec<TrialLine>,
}

fn letters(image: &Image) -> u128 {
    match image {
        Image::Explicit(w) => w.letter_len(),
        Image::Summary { letters, .. } => u128::from(*letters),
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

impl Output {
    fn plain(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: EXIT_OK,
        }
    }

    pub fn act(b: &BraidWord, w: &FreeWord, image: &FreeWord) -> Self {
        Output::plain(
            image.to_string(),
            json!({"braid": b.to_string(), "word": w.to_string(), "image": image.to_string()}),
        )
    }

    pub fn star(a: &BraidWord, b: &BraidWord, result: &BraidWord) -> Self {
        Output::plain(
            result.to_string(),
            json!({"a": a.to_string(), "b": b.to_string(), "result": result.to_string()}),
        )
    }

    pub fn eq(a: &BraidWord, b: &BraidWord, equal: bool) -> Self {
        let text = if equal { "equal" } else { "distinct" };
        let json = json!({"a": a.to_string(), "b": b.to_string(), "equal": equal});
        Output {
            text: text.into(),
            json,
            code: if equal { EXIT_OK } else { EXIT_NEGATIVE },
        }
    }

    pub fn eval(t: &LdTerm, base: &BraidWord, result: &BraidWord) -> Self {
        let json =
            json!({"term": t.to_string(), "base": base.to_string(), "result": result.to_string()});
        Output::plain(result.to_string(), json)
    }

    pub fn verify(cert: &IrreflexivityCertificate) -> Self {
        let dto = Certificate {
            alpha: cert.alpha.to_string(),
            betas: cert.betas.iter().map(ToString::to_string).collect(),
            result: cert.result.to_string(),
            suffix: cert.suffix.to_string(),
            sigma1_positive: cert.sigma1_positive,
            image_of_x1: cert.image_of_x1.to_string(),
            image_of_x1_letters: letters(&cert.image_of_x1),
            image_of_x1_explicit: cert.image_of_x1.explicit().is_some(),
            stripped: cert.stripped.as_ref().map(ToString::to_string),
            distinct_from_alpha: cert.distinct_from_alpha,
            passes: cert.passes(),
        };
        let mut text = String::new();
        let _ = writeln!(text, "alpha: {}", dto.alpha);
        let _ = writeln!(
            text,
            "betas: {}",
            dto.betas
                .iter()
                .map(|b| format!("[{b}]"))
                .collect::<Vec<_>>()
                .join(" ")
        );
        let _ = writeln!(text, "result: {}", dto.result);
        let _ = writeln!(text, "suffix: {}", dto.suffix);
        let _ = writeln!(
            text,
            "suffix sigma1-positive: {}",
            yes_no(dto.sigma1_positive)
        );
        let _ = writeln!(text, "image of x1: {}", dto.image_of_x1);
        let _ = writeln!(
            text,
            "x1 w x1^-1 with w in W: {}",
            dto.stripped.as_deref().unwrap_or("no")
        );
        let _ = writeln!(
            text,
            "distinct from alpha: {}",
            yes_no(dto.distinct_from_alpha)
        );
        text.push_str(if dto.passes { "PASS" } else { "FAIL" });
        let code = if dto.passes {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        };
        let json = serde_json::to_value(&dto).expect("certificate serializes");
        Output { text, json, code }
    }

    pub fn prop(seed: u64, reports: Vec<SuiteReport>) -> Self {
        let failed = reports.iter().any(|r| r.failures().next().is_some());
        let overflowed = reports.iter().any(|r| r.overflows().next().is_some());
        let mut text: String = reports.iter().map(SuiteReport::render).collect();
        if reports.len() > 1 {
            let passed = reports.iter().filter(|r| r.passed()).count();
            let _ = write!(text, "{passed}/{} suites passed", reports.len());
        }
        let text = text.trim_end().to_string();
        let suites: Vec<SuiteSummary> = reports
            .iter()
            .map(|r| SuiteSummary {
                suite: r.suite.to_string(),
                trials: r.trials(),
                ok: r.ok_count(),
                failures: r
                    .failures()
                    .map(|(trial, m)| TrialLine {
                        trial,
                        message: m.to_string(),
                    })
                    .collect(),
                overflows: r
                    .overflows()
                    .map(|(trial, m)| TrialLine {
                        trial,
                        message: m.to_string(),
                    })
                    .collect(),
            })
            .collect();
        let json = json!({"seed": seed, "generator": GENERATOR, "passed": !failed && !overflowed, "suites": suites});
        let code = if failed {
            EXIT_CHECK_FAILED
        } else if overflowed {
            EXIT_RESOURCE
        } else {
            EXIT_OK
        };
        Output { text, json, code }
    }

    pub fn emit(self, json: bool) -> ExitCode {
        if json {
            println!("{}", self.json);
        } else {
            println!("{}", self.text);
        }
        ExitCode::from(self.code)
    }
}

/// A command that could not produce an answer.
#[derive(Debug)]
pub struct Failure {
    kind: &'static str,
    message: String,
    /// The offending input and the error span within it.
    source: Option<(String, ParseError)>,
    code: u8,
}

impl Failure {
    pub fn parse(what: &str, text: &str, e: ParseError) -> Self {
        Failure {
            kind: "parse",
            message: format!("cannot parse {what}: {}", e.message),
            source: Some((text.to_string(), e)),
            code: EXIT_PARSE,
        }
    }

    pub fn unknown_suite(message: String) -> Self {
        Failure {
            kind: "unknown_suite",
            message,
            source: None,
            code: EXIT_PARSE,
        }
    }

    pub fn resource(message: String) -> Self {
        Failure {
            kind: "resource",
            message,
            source: None,
            code: EXIT_RESOURCE,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            kind: "usage",
            message: message.into(),
            source: None,
            code: EXIT_USAGE,
        }
    }

    pub fn emit(self, json: bool) -> ExitCode {
        if json {
            let span = self
                .source
                .as_ref()
                .map(|(_, e)| [e.span.start, e.span.end]);
            println!(
                "{}",
                json!({"error": {"kind": self.kind, "message": self.message, "span": span}})
            );
        } else {
            eprintln!("error: {}", self.message);
            if let Some((text, e)) = &self.source {
                eprint!("{}", caret(text, e.span.start, e.span.end));
            }
        }
        ExitCode::from(self.code)
    }
}

/// The line of `text` holding byte `start`, with carets under `start..end`.
fn caret(text: &str, start: usize, end: usize) -> String {
    let start = start.min(text.len());
    let line_start = text[..start].rfind('\n').map_or(0, |p| p + 1);
    let line_end = text[start..].find('\n').map_or(text.len(), |p| start + p);
    let line = &text[line_start..line_end];
    let pad = text[line_start..start].chars().count();
    let width = text[start..end.clamp(start, line_end)]
        .chars()
        .count()
        .max(1);
    format!("  {line}\n  {}{}\n", " ".repeat(pad), "^".repeat(width))
}

//! `ldbraid`: braid words acting on free words, the LD operation, the
//! irreflexivity verifier and the randomized property suites.
//!
//! Exit codes: 0 success, 1 negative answer (`eq` found distinct braids),
//! 2 unparseable input or unknown suite, 3 resource limit, 4 a verified
//! property failed, 5 usage error.

mod output;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ldbraid::harness::{run_suite, Suite, SuiteConfig};
use ldbraid::{
    eval_term, parse_braid_word, parse_free_word, parse_ld_term, star, verify_irreflexivity,
    ArtinAction, BraidWord, Error, ParseError, DEFAULT_SYLLABLE_CAP,
};

use output::{Failure, Output};

#[derive(Debug, Parser)]
#[command(
    name = "ldbraid",
    version,
    about = "Braid words, free-group automorphisms and the LD operation"
)]
struct Cli {
    /// Largest number of syllables an explicit free word may reach.
    #[arg(long, global = true, default_value_t = DEFAULT_SYLLABLE_CAP)]
    cap: usize,
    /// Emit exactly one JSON object on standard output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Image of a free word under a braid word, first letter acting first.
    Act { braid: String, word: String },
    /// The word a * b = a s(b) s1 s(a^-1).
    Star { a: String, b: String },
    /// Whether two braid words are the same braid (exit 0) or not (exit 1).
    Eq { a: String, b: String },
    /// Evaluates an LD term with x interpreted as a base braid word.
    Eval {
        term: String,
        #[arg(long, default_value = "1")]
        base: String,
    },
    /// Certifies alpha != ((alpha * b1) * ...) * bk.
    Verify {
        alpha: String,
        betas: Vec<String>,
        /// Read further right operands from a file, one braid word per line.
        #[arg(long, value_name = "PATH")]
        betas_file: Option<String>,
    },
    /// Runs a randomized property suite, or `all` of them.
    Prop {
        suite: String,
        #[command(flatten)]
        config: PropArgs,
    },
}

#[derive(Debug, Args)]
struct PropArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    trials: usize,
    #[arg(long, default_value_t = 6)]
    max_index: usize,
    #[arg(long, default_value_t = 16)]
    max_len: usize,
}

/// Validated settings for a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct CliConfig {
    seed: u64,
    trials: usize,
    max_index: usize,
    max_len: usize,
    syllable_cap: usize,
    json: bool,
}

impl CliConfig {
    fn new(args: &PropArgs, syllable_cap: usize, json: bool) -> Result<Self, Failure> {
        let cfg = CliConfig {
            seed: args.seed,
            trials: args.trials,
            max_index: args.max_index,
            max_len: args.max_len,
            syllable_cap,
            json,
        };
        if cfg.trials == 0 || cfg.max_index == 0 || cfg.max_len == 0 || cfg.syllable_cap == 0 {
            return Err(Failure::usage(
                "--trials, --max-index, --max-len and --cap must be at least 1",
            ));
        }
        if cfg.syllable_cap < cfg.max_len {
            return Err(Failure::usage("--cap must be at least --max-len"));
        }
        Ok(cfg)
    }

    fn suite_config(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            trials: self.trials,
            max_index: self.max_index,
            max_len: self.max_len,
            syllable_cap: self.syllable_cap,
            ..SuiteConfig::default()
        }
    }
}

fn parsed<T>(
    what: &'static str,
    text: &str,
    parse: impl Fn(&str) -> Result<T, ParseError>,
) -> Result<T, Failure> {
    parse(text).map_err(|e| Failure::parse(what, text, e))
}

fn library(e: Error) -> Failure {
    match e {
        Error::Parse(p) => Failure::parse("input", "", p),
        Error::EmptyBetas => Failure::usage(e.to_string()),
        e if e.is_resource() => Failure::resource(e.to_string()),
        e => Failure::usage(e.to_string()),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if cli.cap == 0 {
        return Err(Failure::usage("--cap must be at least 1"));
    }
    let action = ArtinAction::with_cap(cli.cap);
    match &cli.command {
        Command::Act { braid, word } => {
            let b = parsed("braid word", braid, parse_braid_word)?;
            let w = parsed("free word", word, parse_free_word)?;
            let image = action.apply(&b, &w).map_err(library)?;
            Ok(Output::act(&b, &w, &image))
        }
        Command::Star { a, b } => {
            let a = parsed("braid word", a, parse_braid_word)?;
            let b = parsed("braid word", b, parse_braid_word)?;
            Ok(Output::star(&a, &b, &star(&a, &b)))
        }
        Command::Eq { a, b } => {
            let a = parsed("braid word", a, parse_braid_word)?;
            let b = parsed("braid word", b, parse_braid_word)?;
            let equal = action.braid_eq(&a, &b).map_err(library)?;
            Ok(Output::eq(&a, &b, equal))
        }
        Command::Eval { term, base } => {
            let t = parsed("LD term", term, parse_ld_term)?;
            let base = parsed("braid word", base, parse_braid_word)?;
            Ok(Output::eval(&t, &base, &eval_term(&t, &base)))
        }
        Command::Verify {
            alpha,
            betas,
            betas_file,
        } => {
            let alpha = parsed("braid word", alpha, parse_braid_word)?;
            let mut bs: Vec<BraidWord> = betas
                .iter()
                .map(|b| parsed("braid word", b, parse_braid_word))
                .collect::<Result<_, _>>()?;
            if let Some(path) = betas_file {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
                let more = ldbraid::textio::parse_lines(&text, parse_braid_word)
                    .map_err(|e| Failure::parse("braid word file", &text, e))?;
                bs.extend(more);
            }
            let cert = verify_irreflexivity(&action, &alpha, &bs).map_err(library)?;
            Ok(Output::verify(&cert))
        }
        Command::Prop { suite, config } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(Failure::unknown_suite)?]
            };
            let cfg = CliConfig::new(config, cli.cap, cli.json)?;
            let reports = suites
                .into_iter()
                .map(|s| run_suite(s, &cfg.suite_config()))
                .collect();
            Ok(Output::prop(cfg.seed, reports))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                output::EXIT_USAGE
            } else {
                output::EXIT_OK
            });
        }
    };
    match run(&cli) {
        Ok(out) => out.emit(cli.json),
        Err(failure) => failure.emit(cli.json),
    }
}

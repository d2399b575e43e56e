//! `minpump`: analyze, transform and construct regular languages, and run
//! the verification suites.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use minpump::harness::{
    self, chart, exhaustive_instances, random_instances, Operation, RandomDfaParams, Suite, SuiteReport,
    VerifyConfig, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use minpump::langops;
use minpump::oracle::cross_validate_with;
use minpump::witnesses::{Built, Family, WitnessSpec};
use minpump::{parse_regex, symbols_of, Alphabet, Analyzer, Dfa, Error, PumpKind};

#[derive(Parser)]
#[command(name = "minpump", version, about = "Minimal pumping constants of regular languages")]
struct Cli {
    /// Node budget of each continuation search.
    #[arg(long, global = true, default_value_t = minpump::pumping::DEFAULT_NODE_BUDGET)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute mpc, mpl, mps and sc of a DFA file or a regular expression.
    Analyze {
        /// DFA file (text or JSON), `-` for stdin, or else a regular expression.
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include witnesses and certificates.
        #[arg(long)]
        witnesses: bool,
        /// Alphabet for a regular expression; defaults to the symbols it uses.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Apply a closure operation and print the minimal DFA of the result.
    Apply {
        /// star, reversal, complement, prefix_closure, suffix_closure,
        /// downward_closure, union, intersection, difference,
        /// symmetric_difference, concatenation or loopify.
        op: String,
        input: String,
        second: Option<String>,
        /// State whose transition loopify redirects.
        #[arg(long)]
        state: Option<usize>,
        /// Symbol of the redirected transition.
        #[arg(long)]
        symbol: Option<char>,
        /// Print loopify's modified machine instead of its minimal DFA.
        #[arg(long)]
        raw: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Build a witness automaton; a pair is printed separated by a blank line.
    Construct {
        /// b_plus, b_star, binary, footnote, quinary, star or intersection.
        family: String,
        #[arg(long)]
        p1: Option<usize>,
        #[arg(long)]
        p2: Option<usize>,
        #[arg(long)]
        p3: Option<usize>,
        #[arg(long)]
        p4: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run one verification suite, or `all`.
    Verify {
        suite: String,
        /// Parameter cap of the suite (word bound for `oracle`, state cap for random suites).
        #[arg(long)]
        max_param: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write a report; `.json` gives JSON, anything else Markdown.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Chart the constants an operation produces on random or all small DFAs.
    Search {
        /// Maximum number of states (exact with --exhaustive).
        #[arg(long, default_value_t = 4)]
        states: usize,
        /// Alphabet size.
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(long)]
        op: String,
        /// mpc, mpl or mps.
        #[arg(long)]
        constant: String,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Enumerate every DFA with exactly `--states` states instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the exact values with the brute-force oracle.
    Oracle {
        input: String,
        /// Longest word the oracle enumerates.
        #[arg(long, default_value_t = 12)]
        bound: usize,
        #[arg(long)]
        alphabet: Option<String>,
    },
}

/// Failures that should exit with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

fn load(input: &str, alphabet: Option<&str>) -> anyhow::Result<Dfa> {
    let text = if input == "-" {
        Some(std::io::read_to_string(std::io::stdin()).context("reading stdin")?)
    } else if Path::new(input).is_file() {
        Some(fs::read_to_string(input).with_context(|| format!("reading {input}"))?)
    } else {
        None
    };
    let parsed = match text {
        Some(t) => Dfa::parse_any(&t),
        None => {
            let sigma = match alphabet {
                Some(a) => Alphabet::from_chars(a),
                None => Ok(symbols_of(input)),
            };
            sigma.and_then(|s| parse_regex(input, &s))
        }
    };
    parsed.or_else(|e| usage(format!("{input}: {e}")))
}

fn emit(d: &Dfa, format: Format, output: Option<&Path>) -> anyhow::Result<()> {
    let text = match format {
        Format::Text => d.to_text(),
        Format::Json => d.to_json() + "\n",
    };
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn analyze(an: &Analyzer, input: &str, format: Format, witnesses: bool, alphabet: Option<&str>) -> anyhow::Result<bool> {
    let d = load(input, alphabet)?;
    let r = an.analyze(&d)?;
    match (format, witnesses) {
        (Format::Json, true) => println!("{}", serde_json::to_string(&r)?),
        (Format::Json, false) => println!(
            "{}",
            serde_json::json!({ "mpc": r.mpc, "mpl": r.mpl, "mps": r.mps, "sc": r.sc })
        ),
        (Format::Text, _) => {
            println!("mpc {}\nmpl {}\nmps {}\nsc {}", r.mpc, r.mpl, r.mps, r.sc);
            if witnesses {
                if let Some(w) = &r.witnesses.mpc {
                    println!("longest unpumpable word: {w}");
                }
                if let Some(w) = &r.witnesses.mpl {
                    println!("mpl − 1 defeated by: {w}");
                }
                if let Some(t) = &r.witnesses.mps {
                    println!("mps − 1 defeated by: {t}");
                }
                for c in &r.certificates {
                    println!("{} certificate: {}", c.kind, c.word);
                }
            }
        }
    }
    Ok(true)
}

fn loopify(
    input: &str,
    second: Option<&str>,
    state: Option<usize>,
    symbol: Option<char>,
    raw: bool,
    alphabet: Option<&str>,
) -> anyhow::Result<Dfa> {
    let (Some(q), Some(a), None) = (state, symbol, second) else {
        return usage("loopify takes one operand, --state and --symbol");
    };
    let d = load(input, alphabet)?;
    let l = langops::loopify(&d, q, a).or_else(|e| usage(e.to_string()))?;
    Ok(if raw { l.raw } else { l.minimal })
}

fn apply(op: &str, input: &str, second: Option<&str>, alphabet: Option<&str>) -> anyhow::Result<Dfa> {
    let op: Operation = op.parse().or_else(|e: Error| usage(e.to_string()))?;
    let d1 = load(input, alphabet)?;
    Ok(match (op, second) {
        (Operation::Unary(u), None) => u.apply(&d1),
        (Operation::Binary(b), Some(s)) => b.apply(&d1, &load(s, alphabet)?),
        (Operation::Unary(_), Some(_)) => return usage(format!("{op} takes one operand")),
        (Operation::Binary(_), None) => return usage(format!("{op} takes two operands")),
    })
}

fn construct(family: &str, params: &[(&str, Option<usize>)], format: Format, output: Option<&Path>) -> anyhow::Result<bool> {
    let family: Family = family.parse().or_else(|e: Error| usage(e.to_string()))?;
    let given: Vec<(&str, usize)> = params.iter().filter_map(|&(n, v)| v.map(|v| (n, v))).collect();
    let spec = WitnessSpec::new(family, &given).or_else(|e| usage(e.to_string()))?;
    let built = match spec.build() {
        Ok(b) => b,
        Err(e @ Error::Parameters(_)) => return usage(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    match built {
        Built::Single(d) => emit(&d, format, output)?,
        Built::Pair(x, y) => {
            let text = match format {
                Format::Text => format!("{}\n{}", x.to_text(), y.to_text()),
                Format::Json => format!("[{}, {}]\n", x.to_json(), y.to_json()),
            };
            match output {
                Some(p) => fs::write(p, text)?,
                None => print!("{text}"),
            }
        }
    }
    Ok(true)
}

fn verify(an: Analyzer, suite: &str, cfg: VerifyConfig, report: Option<&Path>) -> anyhow::Result<bool> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().or_else(|e: Error| usage(e.to_string()))?]
    };
    let cfg = VerifyConfig { analyzer: an, ..cfg };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for s in suites {
        let r = harness::run_suite(s, &cfg);
        println!(
            "{} {:<13} {:>6} instances, {} failed",
            if r.ok() { "PASS" } else { "FAIL" },
            r.suite,
            r.results.len(),
            r.failed()
        );
        reports.push(r);
    }
    if let Some(path) = report {
        let body = if path.extension().is_some_and(|e| e == "json") {
            harness::to_json(&reports)
        } else {
            harness::to_markdown(&reports)
        };
        fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(reports.iter().all(SuiteReport::ok))
}

#[allow(clippy::too_many_arguments)]
fn search(
    an: &Analyzer,
    states: usize,
    letters: usize,
    op: &str,
    constant: &str,
    samples: usize,
    seed: u64,
    exhaustive: bool,
    format: Format,
) -> anyhow::Result<bool> {
    let op: Operation = op.parse().or_else(|e: Error| usage(e.to_string()))?;
    let kind: PumpKind = constant.parse().or_else(|e: Error| usage(e.to_string()))?;
    if states == 0 || letters == 0 || letters > 8 {
        return usage("need at least one state and 1 to 8 letters");
    }
    let instances = if exhaustive {
        let per_operand = (states as f64).powi((states * letters) as i32) * 2f64.powi(states as i32);
        if per_operand.powi(op.arity() as i32) > 2e6 {
            bail!(Usage(format!("{per_operand} automata per operand is too many to enumerate")));
        }
        exhaustive_instances(op, states, letters)
    } else {
        random_instances(op, &RandomDfaParams::new(1..=states, letters..=letters, seed), samples, seed)
    };
    let c = chart(op, kind, &instances, an)?;
    match format {
        Format::Text => print!("{}", c.to_text(op)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&c)?),
    }
    Ok(c.violations.is_empty())
}

fn oracle(an: &Analyzer, input: &str, bound: usize, alphabet: Option<&str>) -> anyhow::Result<bool> {
    let d = load(input, alphabet)?;
    let cv = cross_validate_with(an, &d, bound)?;
    println!("exact  mpc {} mpl {} mps {}", cv.exact[0], cv.exact[1], cv.exact[2]);
    println!("oracle mpc {} mpl {} mps {} (words up to length {bound})", cv.oracle[0], cv.oracle[1], cv.oracle[2]);
    if !cv.agrees && cv.ok() {
        println!("oracle values are lower bounds; a longer bound may be needed to reach the exact values");
    }
    for f in &cv.hard_failures {
        println!("FAIL {f}");
    }
    Ok(cv.ok())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let an = Analyzer::new(cli.budget);
    match cli.command {
        Command::Analyze { input, format, witnesses, alphabet } => analyze(&an, &input, format, witnesses, alphabet.as_deref()),
        Command::Apply { op, input, second, state, symbol, raw, output, format, alphabet } => {
            let d = if op == "loopify" {
                loopify(&input, second.as_deref(), state, symbol, raw, alphabet.as_deref())?
            } else {
                if state.is_some() || symbol.is_some() || raw {
                    return usage("--state, --symbol and --raw only apply to loopify");
                }
                apply(&op, &input, second.as_deref(), alphabet.as_deref())?
            };
            emit(&d, format, output.as_deref())?;
            Ok(true)
        }
        Command::Construct { family, p1, p2, p3, p4, m, n, k, output, format } => {
            let params = [("p1", p1), ("p2", p2), ("p3", p3), ("p4", p4), ("m", m), ("n", n), ("k", k)];
            construct(&family, &params, format, output.as_deref())
        }
        Command::Verify { suite, max_param, samples, seed, report } => {
            let cfg = VerifyConfig { max_param, samples, seed, ..Default::default() };
            verify(an, &suite, cfg, report.as_deref())
        }
        Command::Search { states, alphabet, op, constant, samples, seed, exhaustive, format } => {
            search(&an, states, alphabet, &op, &constant, samples, seed, exhaustive, format)
        }
        Command::Oracle { input, bound, alphabet } => oracle(&an, &input, bound, alphabet.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

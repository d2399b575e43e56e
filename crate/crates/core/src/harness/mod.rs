//! Reproduction suites: theorem families, operation tables and randomized
//! invariants, each yielding one [`ExperimentResult`] per checked instance.
//!
//! Every suite is deterministic given its [`VerifyConfig`]; random instances
//! record the seed that regenerates them, and failures carry the automaton
//! text so they can be replayed with `analyze` or `oracle`.

mod random;
mod report;
mod search;
mod suites;
mod table1;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pumping::Analyzer;

pub use random::{instance_seed, random_dfa, RandomDfaParams};
pub use report::{to_json, to_markdown};
pub use search::{all_dfas, chart, exhaustive_instances, random_instances, Chart, Instance};
pub use table1::{expected, expected_binary, expected_unary, NatSet, Operation};

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_SAMPLES: usize = 500;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    /// Seed of the random instance, if any.
    pub seed: Option<u64>,
    /// Automaton text (several automata separated by a blank line).
    pub instance: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentResult {
    pub operation: String,
    /// Parameters or input constants.
    pub inputs: Vec<usize>,
    pub observed: Vec<usize>,
    pub expected: String,
    pub pass: bool,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ExperimentResult {
    pub fn new(operation: impl Into<String>, inputs: Vec<usize>, observed: Vec<usize>, expected: impl Into<String>, pass: bool) -> Self {
        ExperimentResult {
            operation: operation.into(),
            inputs,
            observed,
            expected: expected.into(),
            pass,
            provenance: Provenance::default(),
            note: None,
        }
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.provenance.seed = Some(seed);
        self
    }

    /// Attaches the instance text; only kept for failures.
    pub fn instance(mut self, text: impl FnOnce() -> String) -> Self {
        if !self.pass {
            self.provenance.instance = Some(text());
        }
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// A failed instance whose analysis raised an error.
    fn errored(operation: impl Into<String>, inputs: Vec<usize>, expected: impl Into<String>, err: &Error, instance: String) -> Self {
        ExperimentResult::new(operation, inputs, Vec::new(), expected, false)
            .instance(|| instance)
            .note(err.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Binary,
    Quinary,
    Star,
    StarBound,
    Intersection,
    Chain,
    Table1,
    Loopify,
    Closure,
    Anchors,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Binary,
        Suite::Quinary,
        Suite::Star,
        Suite::StarBound,
        Suite::Intersection,
        Suite::Chain,
        Suite::Table1,
        Suite::Loopify,
        Suite::Closure,
        Suite::Anchors,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Binary => "binary",
            Suite::Quinary => "quinary",
            Suite::Star => "star",
            Suite::StarBound => "star-bound",
            Suite::Intersection => "intersection",
            Suite::Chain => "chain",
            Suite::Table1 => "table1",
            Suite::Loopify => "loopify",
            Suite::Closure => "closure",
            Suite::Anchors => "anchors",
            Suite::Oracle => "oracle",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Binary => "binary family: (mpc, mpl, sc) = (p1, p2, p3) for all p1 ≤ p2 ≤ p3 ≤ N (default 8)",
            Suite::Quinary => "quinary family: (mpc, mpl, mps, sc) = (p1, p2, p3, p4) for all tuples ≤ N (default 7)",
            Suite::Star => "star witnesses: mps(L) = n and mps(L*) = k for n ≤ N (default 5), k ≤ 2n − 1; mps(∅*) = 1",
            Suite::StarBound => "random L with mps(L) = n ≥ 1: mps(L*) ≤ max(1, 2n − 1)",
            Suite::Intersection => "intersection witnesses for m, n ≤ N (default 4), k ≤ 2N, under mpl and mps; m = n = 1 rigidity",
            Suite::Chain => "mpc ≤ mpl ≤ mps ≤ sc on random automata (default 1000)",
            Suite::Table1 => "operation table: exact rows and set membership on random operands",
            Suite::Loopify => "redirecting one transition to a self-loop never increases mpc, mpl or mps",
            Suite::Closure => "mps = 1 ⇒ prefix-, suffix- and downward-closed; mpl = 1 ⇒ suffix-closed; mpc = 1 ⇒ λ ∈ L",
            Suite::Anchors => "worked examples: the five-state example language, a^n a^*, the growing-alphabet family",
            Suite::Oracle => "brute-force oracle (word bound 12) never exceeds the exact values; witnesses re-verify",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameters(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Overrides the suite's parameter cap.
    pub max_param: Option<usize>,
    /// Overrides the suite's sample count.
    pub samples: Option<usize>,
    pub seed: u64,
    pub analyzer: Analyzer,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_param: None, samples: None, seed: DEFAULT_SEED, analyzer: Analyzer::default() }
    }
}

impl VerifyConfig {
    fn cap(&self, default: usize) -> usize {
        self.max_param.unwrap_or(default)
    }

    fn samples(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub description: String,
    pub seed: u64,
    pub results: Vec<ExperimentResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.results.len() - self.passed()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let results = match suite {
        Suite::Binary => suites::binary(cfg),
        Suite::Quinary => suites::quinary(cfg),
        Suite::Star => suites::star(cfg),
        Suite::StarBound => suites::star_bound(cfg),
        Suite::Intersection => suites::intersection(cfg),
        Suite::Chain => suites::chain(cfg),
        Suite::Table1 => suites::table1(cfg),
        Suite::Loopify => suites::loopify(cfg),
        Suite::Closure => suites::closure(cfg),
        Suite::Anchors => suites::anchors(cfg),
        Suite::Oracle => suites::oracle(cfg),
    };
    SuiteReport { suite: suite.name().into(), description: suite.description().into(), seed: cfg.seed, results }
}

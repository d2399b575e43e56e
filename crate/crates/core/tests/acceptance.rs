//! Acceptance suite: one pass/fail line per criterion, exact tolerance.
//!
//! Runs without the libtest harness so the lines are always printed. The
//! process exits non-zero when any criterion fails.

use std::process::ExitCode;
use std::thread;
use std::time::Instant;

use minpump::harness::{run_suite, Suite, SuiteReport, VerifyConfig};
use minpump::witnesses::footnote_family;
use minpump::Analyzer;

struct Outcome {
    pass: bool,
    detail: String,
}

fn suite(s: Suite, min_instances: usize) -> Outcome {
    let report = run_suite(s, &VerifyConfig::default());
    summarize(&report, min_instances, "")
}

fn summarize(r: &SuiteReport, min_instances: usize, extra: &str) -> Outcome {
    let enough = r.results.len() >= min_instances;
    let mut detail = format!("{}: {} instances, {} failed", r.suite, r.results.len(), r.failed());
    if !enough {
        detail.push_str(&format!(", expected at least {min_instances}"));
    }
    for f in r.results.iter().filter(|x| !x.pass).take(3) {
        detail.push_str(&format!("; {} {:?} observed {:?} expected {}", f.operation, f.inputs, f.observed, f.expected));
        if let Some(s) = f.provenance.seed {
            detail.push_str(&format!(" seed {s}"));
        }
    }
    detail.push_str(extra);
    Outcome { pass: enough && r.ok(), detail }
}

fn count(r: &SuiteReport, prefix: &str) -> usize {
    r.results.iter().filter(|x| x.operation.starts_with(prefix)).count()
}

fn binary() -> Outcome {
    let r = run_suite(Suite::Binary, &VerifyConfig::default());
    let mut o = summarize(&r, 120, "");
    o.pass &= r.results.len() == 120;
    o
}

fn quinary() -> Outcome {
    let r = run_suite(Suite::Quinary, &VerifyConfig::default());
    let mut o = summarize(&r, 210, "");
    o.pass &= r.results.len() == 210;
    o
}

fn star() -> Outcome {
    // 25 pairs (n, k) with k ≤ 2n − 1 for n ≤ 5, plus the empty language
    let r = run_suite(Suite::Star, &VerifyConfig::default());
    let mut o = summarize(&r, 26, "");
    o.pass &= r.results.len() == 26;
    o
}

fn intersection() -> Outcome {
    let r = run_suite(Suite::Intersection, &VerifyConfig::default());
    let (mpl, mps) = (count(&r, "intersection/mpl"), count(&r, "intersection/mps"));
    let mut o = summarize(&r, 1, &format!(" (mpl {mpl}, mps {mps})"));
    o.pass &= mpl > 0 && mpl == mps;
    o
}

fn table1() -> Outcome {
    let r = run_suite(Suite::Table1, &VerifyConfig::default());
    let exact = ["reversal/mpc", "reversal/mps", "star/mpc"];
    let short = exact.iter().find(|name| r.results.iter().filter(|x| x.operation == **name).count() < 500);
    let mut o = summarize(&r, 500, "");
    if let Some(name) = short {
        o.pass = false;
        o.detail.push_str(&format!(", fewer than 500 instances of {name}"));
    }
    o
}

fn anchors() -> Outcome {
    let r = run_suite(Suite::Anchors, &VerifyConfig::default());
    let mut o = summarize(&r, 1, "");
    // p1 = p2 = 1: sc = p3 + 1 once a fresh letter is present; for p3 = 2
    // the language is a^* over {a, b}, whose minimal DFA has two states.
    let an = Analyzer::default();
    for p3 in 2..=6 {
        let w = footnote_family(1, 1, p3).expect("valid parameters");
        let want = if p3 == 2 { 2 } else { p3 + 1 };
        let got = an.constants(&w.dfa).expect("within budget")[3];
        if got != want {
            o.pass = false;
            o.detail.push_str(&format!("; footnote (1, 1, {p3}) sc {got}, expected {want}"));
        }
    }
    o
}

type Criterion = (usize, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "binary family", binary),
        (2, "quinary family", quinary),
        (3, "star range", star),
        (4, "star upper bound", || suite(Suite::StarBound, 500)),
        (5, "intersection range", intersection),
        (6, "chain invariant", || suite(Suite::Chain, 1000)),
        (7, "operation table", table1),
        (8, "loop modification", || suite(Suite::Loopify, 500)),
        (9, "closure consequences", || suite(Suite::Closure, 1)),
        (10, "anchors", anchors),
        (11, "oracle equivalence", || suite(Suite::Oracle, 500)),
    ];
    let outcomes: Vec<(Outcome, f64)> = thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, _, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let o = f();
                    (o, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut failed = 0;
    for ((n, name, _), (o, secs)) in criteria.iter().zip(&outcomes) {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {status} {name} ({secs:.1} s) {}", o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

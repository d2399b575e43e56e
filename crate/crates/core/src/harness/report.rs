//! Markdown and JSON renderings of suite reports. Both are byte-stable for
//! a fixed configuration.

use std::fmt::Write;

use super::suites::tuple;
use super::table1::Operation;
use super::SuiteReport;
use crate::pumping::PumpKind;

/// Failures listed in full per suite; the rest are counted.
const MAX_LISTED_FAILURES: usize = 20;

pub fn to_json(reports: &[SuiteReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn to_markdown(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Verification report\n");
    if let Some(r) = reports.first() {
        let _ = writeln!(s, "Seed: {}\n", r.seed);
    }
    let _ = writeln!(s, "| suite | instances | passed | failed | status |");
    let _ = writeln!(s, "|---|---:|---:|---:|---|");
    for r in reports {
        let status = if r.ok() { "pass" } else { "FAIL" };
        let _ = writeln!(s, "| {} | {} | {} | {} | {status} |", r.suite, r.results.len(), r.passed(), r.failed());
    }
    for r in reports {
        let _ = writeln!(s, "\n## {}\n\n{}", r.suite, r.description);
        if r.suite == "table1" {
            table1_grid(&mut s, r);
        }
        failures(&mut s, r);
    }
    s
}

fn table1_grid(s: &mut String, r: &SuiteReport) {
    let _ = writeln!(s, "\n| operation | mpc | mpl | mps |");
    let _ = writeln!(s, "|---|---|---|---|");
    for op in Operation::rows() {
        let cells: Vec<String> = PumpKind::ALL
            .iter()
            .map(|kind| {
                let name = format!("{op}/{kind}");
                let rows: Vec<_> = r.results.iter().filter(|x| x.operation == name).collect();
                let failed = rows.iter().filter(|x| !x.pass).count();
                if failed == 0 {
                    format!("pass ({})", rows.len())
                } else {
                    format!("FAIL ({failed}/{})", rows.len())
                }
            })
            .collect();
        let _ = writeln!(s, "| {op} | {} |", cells.join(" | "));
    }
}

fn failures(s: &mut String, r: &SuiteReport) {
    let failed: Vec<_> = r.results.iter().filter(|x| !x.pass).collect();
    if failed.is_empty() {
        let _ = writeln!(s, "\nAll {} instances pass.", r.results.len());
        return;
    }
    let _ = writeln!(s, "\n{} failures:\n", failed.len());
    for f in failed.iter().take(MAX_LISTED_FAILURES) {
        let _ = write!(
            s,
            "- `{}` inputs {} observed {}, expected {}",
            f.operation,
            tuple(&f.inputs),
            tuple(&f.observed),
            f.expected
        );
        if let Some(seed) = f.provenance.seed {
            let _ = write!(s, ", seed {seed}");
        }
        if let Some(note) = &f.note {
            let _ = write!(s, " ({note})");
        }
        let _ = writeln!(s);
        if let Some(inst) = &f.provenance.instance {
            let _ = writeln!(s, "\n```\n{}```\n", inst);
        }
    }
    if failed.len() > MAX_LISTED_FAILURES {
        let _ = writeln!(s, "\n… and {} more.", failed.len() - MAX_LISTED_FAILURES);
    }
}

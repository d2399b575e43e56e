//! Frequency charts of the constants an operation produces, over random or
//! exhaustively enumerated operands.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use super::random::{instance_seed, random_dfa, RandomDfaParams};
use super::suites::tuple;
use super::table1::{expected, Operation};
use super::ExperimentResult;
use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::Result;
use crate::pumping::{Analyzer, PumpKind};

/// Operands for one application, with the seed that produced them.
pub type Instance = (Option<u64>, Vec<Dfa>);

#[derive(Clone, Debug, Serialize)]
pub struct Chart {
    pub operation: String,
    pub kind: PumpKind,
    pub instances: usize,
    /// Input constants, then observed constant, then count.
    pub cells: BTreeMap<Vec<usize>, BTreeMap<usize, usize>>,
    /// Observations outside the expected set.
    pub violations: Vec<ExperimentResult>,
}

/// Every complete DFA with `states` states over the first `letters` of
/// `a, b, c, …`, initial state 0.
pub fn all_dfas(states: usize, letters: usize) -> Vec<Dfa> {
    let alphabet = Alphabet::from_chars(&"abcdefgh"[..letters.min(8)]).expect("distinct letters");
    let cells = states * alphabet.len();
    let mut out = Vec::new();
    let mut delta = vec![0; cells];
    loop {
        for mask in 0..1usize << states {
            let accepting: Vec<usize> = (0..states).filter(|q| mask >> q & 1 == 1).collect();
            out.push(Dfa::new(alphabet.clone(), states, 0, accepting, delta.clone()).expect("in range"));
        }
        // odometer over transition tables
        let Some(i) = (0..cells).find(|&i| delta[i] + 1 < states) else { break };
        delta[i] += 1;
        delta[..i].fill(0);
    }
    out
}

pub fn random_instances(op: Operation, params: &RandomDfaParams, samples: usize, seed: u64) -> Vec<Instance> {
    (0..samples)
        .map(|i| {
            let s = instance_seed(seed, i);
            let operands = (0..op.arity() as u64).map(|j| random_dfa(&params.with_seed(s.wrapping_add(j << 32)))).collect();
            (Some(s), operands)
        })
        .collect()
}

/// All operands (unary) or all ordered pairs (binary) from [`all_dfas`].
pub fn exhaustive_instances(op: Operation, states: usize, letters: usize) -> Vec<Instance> {
    let all = all_dfas(states, letters);
    match op.arity() {
        1 => all.into_iter().map(|d| (None, vec![d])).collect(),
        _ => all.iter().flat_map(|x| all.iter().map(move |y| (None, vec![x.clone(), y.clone()]))).collect(),
    }
}

pub fn chart(op: Operation, kind: PumpKind, instances: &[Instance], analyzer: &Analyzer) -> Result<Chart> {
    let k_of = |d: &Dfa| -> Result<usize> {
        Ok(match kind {
            PumpKind::Mpc => analyzer.mpc(d)?.value,
            PumpKind::Mpl => analyzer.mpl(d)?.value,
            PumpKind::Mps => analyzer.mps(d)?.value,
        })
    };
    let mut cells: BTreeMap<Vec<usize>, BTreeMap<usize, usize>> = BTreeMap::new();
    let mut violations = Vec::new();
    for (seed, operands) in instances {
        let inputs = operands.iter().map(k_of).collect::<Result<Vec<_>>>()?;
        let result = match op {
            Operation::Unary(u) => u.apply(&operands[0]),
            Operation::Binary(b) => b.apply(&operands[0], &operands[1]),
        };
        let k = k_of(&result)?;
        *cells.entry(inputs.clone()).or_default().entry(k).or_default() += 1;
        if let Some(set) = expected(op, kind, &inputs) {
            if !set.contains(k) {
                let mut v = ExperimentResult::new(format!("{op}/{kind}"), inputs, vec![k], set.to_string(), false)
                    .instance(|| operands.iter().map(|d| d.to_text()).collect::<Vec<_>>().join("\n"));
                if let Some(s) = seed {
                    v = v.seeded(*s);
                }
                violations.push(v);
            }
        }
    }
    Ok(Chart { operation: op.to_string(), kind, instances: instances.len(), cells, violations })
}

impl Chart {
    pub fn to_text(&self, op: Operation) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "operation: {}, measure: {}, instances: {}", self.operation, self.kind, self.instances);
        let _ = writeln!(s, "{:<12} {:<14} observed k (count)", "inputs", "expected");
        for (inputs, ks) in &self.cells {
            let set = expected(op, self.kind, inputs).map_or("-".to_string(), |s| s.to_string());
            let observed: Vec<String> = ks.iter().map(|(k, c)| format!("{k} ({c})")).collect();
            let _ = writeln!(s, "{:<12} {:<14} {}", tuple(inputs), set, observed.join(", "));
        }
        let _ = writeln!(s, "violations: {}", self.violations.len());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langops::UnaryOp;

    #[test]
    fn counts_all_machines() {
        assert_eq!(all_dfas(1, 2).len(), 2);
        assert_eq!(all_dfas(2, 1).len(), 2 * 2 * 4);
        assert_eq!(all_dfas(2, 2).len(), 16 * 4);
    }

    #[test]
    fn reversal_preserves_mps_on_small_machines() {
        let op = Operation::Unary(UnaryOp::Reversal);
        let c = chart(op, PumpKind::Mps, &exhaustive_instances(op, 2, 2), &Analyzer::default()).unwrap();
        assert!(c.violations.is_empty());
        for (inputs, ks) in &c.cells {
            assert_eq!(ks.keys().copied().collect::<Vec<_>>(), vec![inputs[0]]);
        }
    }
}

//! Attainable constant sets for the operations, by measure.
//!
//! For an operation applied to languages whose constant under `K` is `n`
//! (unary) or `(m, n)` (binary), [`expected`] returns the set the result's
//! constant must lie in.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::langops::{BinaryOp, UnaryOp};
use crate::pumping::PumpKind;

/// A set of naturals `{k | lo ≤ k ≤ hi} ∖ {except}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NatSet {
    pub lo: usize,
    pub hi: Option<usize>,
    pub except: Option<usize>,
}

impl NatSet {
    pub fn exactly(k: usize) -> Self {
        NatSet { lo: k, hi: Some(k), except: None }
    }

    /// `{1, …, hi}`.
    pub fn up_to(hi: usize) -> Self {
        NatSet { lo: 1, hi: Some(hi), except: None }
    }

    /// ℕ (without zero).
    pub fn positive() -> Self {
        NatSet { lo: 1, hi: None, except: None }
    }

    /// ℕ₀.
    pub fn all() -> Self {
        NatSet { lo: 0, hi: None, except: None }
    }

    pub fn all_except(k: usize) -> Self {
        NatSet { lo: 0, hi: None, except: Some(k) }
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= self.lo && self.hi.is_none_or(|h| k <= h) && self.except != Some(k)
    }
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lo, self.hi, self.except) {
            (lo, Some(hi), None) if lo == hi => write!(f, "{{{lo}}}"),
            (1, Some(hi), None) => write!(f, "{{1,…,{hi}}}"),
            (lo, Some(hi), None) => write!(f, "{{{lo},…,{hi}}}"),
            (0, None, None) => write!(f, "ℕ₀"),
            (1, None, None) => write!(f, "ℕ"),
            (0, None, Some(k)) => write!(f, "ℕ₀∖{{{k}}}"),
            (lo, hi, ex) => {
                write!(f, "{{k ≥ {lo}")?;
                if let Some(h) = hi {
                    write!(f, ", k ≤ {h}")?;
                }
                if let Some(e) = ex {
                    write!(f, ", k ≠ {e}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// Rows of the table: the six unary and five binary operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operation {
    Unary(UnaryOp),
    Binary(BinaryOp),
}

impl Operation {
    pub fn arity(self) -> usize {
        match self {
            Operation::Unary(_) => 1,
            Operation::Binary(_) => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Operation::Unary(op) => op.name(),
            Operation::Binary(op) => op.name(),
        }
    }

    /// Table rows in display order. Downward closure has no row.
    pub fn rows() -> Vec<Operation> {
        use BinaryOp as B;
        use UnaryOp as U;
        vec![
            Operation::Unary(U::Star),
            Operation::Unary(U::Reversal),
            Operation::Unary(U::Complement),
            Operation::Unary(U::PrefixClosure),
            Operation::Unary(U::SuffixClosure),
            Operation::Binary(B::Union),
            Operation::Binary(B::Difference),
            Operation::Binary(B::Concatenation),
            Operation::Binary(B::Intersection),
            Operation::Binary(B::SymmetricDifference),
        ]
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse()
            .map(Operation::Unary)
            .or_else(|_| s.parse().map(Operation::Binary))
            .map_err(|_| Error::Parameters(format!("unknown operation `{s}`")))
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Expected set for a unary row, or `None` for operations without a row.
pub fn expected_unary(op: UnaryOp, kind: PumpKind, n: usize) -> Option<NatSet> {
    use PumpKind::*;
    Some(match (op, kind) {
        (UnaryOp::Star, Mpc) => NatSet::exactly(1),
        (UnaryOp::Star, _) if n == 0 => NatSet::exactly(1),
        (UnaryOp::Star, Mpl) => NatSet::up_to(n),
        (UnaryOp::Star, Mps) => NatSet::up_to(2 * n - 1),
        (UnaryOp::Reversal, Mpl) if n == 0 => NatSet::exactly(0),
        (UnaryOp::Reversal, Mpl) => NatSet::positive(),
        (UnaryOp::Reversal, _) => NatSet::exactly(n),
        (UnaryOp::Complement, _) => match n {
            0 => NatSet::exactly(1),
            1 => NatSet::all_except(1),
            _ => NatSet::positive(),
        },
        (UnaryOp::PrefixClosure | UnaryOp::SuffixClosure, _) if n == 0 => NatSet::exactly(0),
        (UnaryOp::PrefixClosure, Mpc) => NatSet::positive(),
        (UnaryOp::PrefixClosure, _) => NatSet::up_to(n),
        (UnaryOp::SuffixClosure, Mpc) => NatSet::positive(),
        (UnaryOp::SuffixClosure, Mpl) if n == 1 => NatSet::exactly(1),
        (UnaryOp::SuffixClosure, Mpl) => NatSet::positive(),
        (UnaryOp::SuffixClosure, Mps) => NatSet::up_to(n),
        (UnaryOp::DownwardClosure, _) => return None,
    })
}

pub fn expected_binary(op: BinaryOp, kind: PumpKind, m: usize, n: usize) -> NatSet {
    let either_empty = m == 0 || n == 0;
    match op {
        BinaryOp::Union if either_empty => NatSet::exactly(m.max(n)),
        BinaryOp::Union => NatSet::up_to(m.max(n)),
        BinaryOp::Difference if m == 0 => NatSet::exactly(0),
        BinaryOp::Difference if n == 0 => NatSet::exactly(m),
        BinaryOp::Difference if n == 1 => NatSet::all_except(1),
        BinaryOp::Difference => NatSet::all(),
        BinaryOp::Concatenation if either_empty => NatSet::exactly(0),
        BinaryOp::Concatenation => NatSet::up_to(m + n - 1),
        BinaryOp::Intersection if either_empty => NatSet::exactly(0),
        BinaryOp::Intersection if m == 1 && n == 1 => match kind {
            PumpKind::Mpc => NatSet::all_except(2),
            _ => NatSet::exactly(1),
        },
        BinaryOp::Intersection => NatSet::all(),
        BinaryOp::SymmetricDifference if either_empty => NatSet::exactly(m.max(n)),
        BinaryOp::SymmetricDifference if m == 1 && n == 1 => NatSet::all_except(1),
        BinaryOp::SymmetricDifference if m == n => NatSet::all(),
        BinaryOp::SymmetricDifference => NatSet::positive(),
    }
}

pub fn expected(op: Operation, kind: PumpKind, inputs: &[usize]) -> Option<NatSet> {
    match op {
        Operation::Unary(u) => expected_unary(u, kind, inputs[0]),
        Operation::Binary(b) => Some(expected_binary(b, kind, inputs[0], inputs[1])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_membership() {
        assert!(NatSet::all_except(1).contains(0) && !NatSet::all_except(1).contains(1));
        assert!(!NatSet::positive().contains(0));
        assert!(NatSet::up_to(3).contains(3) && !NatSet::up_to(3).contains(0));
        assert_eq!(NatSet::up_to(5).to_string(), "{1,…,5}");
        assert_eq!(NatSet::exactly(0).to_string(), "{0}");
        assert_eq!(NatSet::all_except(2).to_string(), "ℕ₀∖{2}");
    }

    #[test]
    fn star_rows() {
        assert_eq!(expected_unary(UnaryOp::Star, PumpKind::Mps, 3), Some(NatSet::up_to(5)));
        assert_eq!(expected_unary(UnaryOp::Star, PumpKind::Mps, 0), Some(NatSet::exactly(1)));
        assert_eq!(expected_unary(UnaryOp::Reversal, PumpKind::Mpc, 4), Some(NatSet::exactly(4)));
    }

    #[test]
    fn binary_rows() {
        assert_eq!(expected_binary(BinaryOp::Union, PumpKind::Mps, 0, 3), NatSet::exactly(3));
        assert_eq!(expected_binary(BinaryOp::Difference, PumpKind::Mpl, 0, 0), NatSet::exactly(0));
        assert_eq!(expected_binary(BinaryOp::Difference, PumpKind::Mpl, 2, 0), NatSet::exactly(2));
        assert_eq!(expected_binary(BinaryOp::Concatenation, PumpKind::Mpc, 2, 3), NatSet::up_to(4));
        assert_eq!(expected_binary(BinaryOp::Intersection, PumpKind::Mpl, 1, 1), NatSet::exactly(1));
    }
}

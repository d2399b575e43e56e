//! Regularity-preserving operations. Every result is a minimal complete
//! DFA, except for [`loopify`], which also exposes the raw modified machine.
//!
//! Binary operations first extend both operands to the union of their
//! alphabets.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::Nfa;

pub fn complement(d: &Dfa) -> Dfa {
    d.with_accepting((0..d.num_states()).map(|q| !d.is_accepting(q)).collect()).minimize()
}

pub fn reversal(d: &Dfa) -> Dfa {
    Nfa::reverse_of(d).determinize().minimize()
}

pub fn star(d: &Dfa) -> Dfa {
    let mut n = Nfa::new(d.alphabet().clone());
    let start = n.add_state(true);
    let offset = n.embed_dfa(d).expect("same alphabet");
    n.add_initial(start).expect("valid");
    n.add_epsilon(start, offset + d.initial()).expect("valid");
    for f in d.accepting_states() {
        n.add_epsilon(offset + f, offset + d.initial()).expect("valid");
    }
    n.determinize().minimize()
}

/// Every state that can still reach acceptance becomes accepting.
pub fn prefix_closure(d: &Dfa) -> Dfa {
    let reach = d.reachable();
    let co = d.coaccessible();
    d.with_accepting((0..d.num_states()).map(|q| reach[q] && co[q]).collect()).minimize()
}

/// `{x | yx ∈ L for some y}`: every accessible state becomes initial.
pub fn suffix_closure(d: &Dfa) -> Dfa {
    let mut n = Nfa::from_dfa(d);
    let reach = d.reachable();
    for q in (0..d.num_states()).filter(|&q| reach[q] && q != d.initial()) {
        n.add_initial(q).expect("valid");
    }
    n.determinize().minimize()
}

/// Closure under scattered subsequences: each transition gets a parallel ε-move.
pub fn downward_closure(d: &Dfa) -> Dfa {
    let mut n = Nfa::from_dfa(d);
    for q in 0..d.num_states() {
        for a in 0..d.alphabet().len() {
            n.add_epsilon(q, d.step(q, a)).expect("valid");
        }
    }
    n.determinize().minimize()
}

/// Extends both automata to the union alphabet.
pub fn align(d1: &Dfa, d2: &Dfa) -> (Dfa, Dfa) {
    let sigma = d1.alphabet().union(d2.alphabet());
    (
        d1.extend_alphabet(&sigma).expect("subset of union"),
        d2.extend_alphabet(&sigma).expect("subset of union"),
    )
}

fn combine(d1: &Dfa, d2: &Dfa, f: impl Fn(bool, bool) -> bool) -> Dfa {
    let (a, b) = align(d1, d2);
    a.product(&b, f).expect("aligned alphabets").minimize()
}

pub fn union(d1: &Dfa, d2: &Dfa) -> Dfa {
    combine(d1, d2, |x, y| x || y)
}

pub fn intersection(d1: &Dfa, d2: &Dfa) -> Dfa {
    combine(d1, d2, |x, y| x && y)
}

pub fn difference(d1: &Dfa, d2: &Dfa) -> Dfa {
    combine(d1, d2, |x, y| x && !y)
}

pub fn symmetric_difference(d1: &Dfa, d2: &Dfa) -> Dfa {
    combine(d1, d2, |x, y| x != y)
}

pub fn concatenation(d1: &Dfa, d2: &Dfa) -> Dfa {
    let (a, b) = align(d1, d2);
    let mut n = Nfa::new(a.alphabet().clone());
    let oa = n.embed_dfa(&a).expect("aligned");
    let ob = n.embed_dfa(&b).expect("aligned");
    n.add_initial(oa + a.initial()).expect("valid");
    for f in a.accepting_states() {
        n.set_accepting(oa + f, false).expect("valid");
        n.add_epsilon(oa + f, ob + b.initial()).expect("valid");
    }
    n.determinize().minimize()
}

/// Result of redirecting one transition onto a self-loop.
#[derive(Clone, Debug)]
pub struct Loopified {
    /// The modified machine, state numbering unchanged.
    pub raw: Dfa,
    /// Minimal DFA of the modified machine's language.
    pub minimal: Dfa,
}

/// Redirects the `symbol`-transition of `state` to `state` itself.
pub fn loopify(d: &Dfa, state: usize, symbol: char) -> Result<Loopified> {
    d.check_state(state)?;
    let a = d.alphabet().index_of(symbol).ok_or(Error::UnknownSymbol(symbol))?;
    let raw = d.with_transition(state, a, state);
    let minimal = raw.minimize();
    Ok(Loopified { raw, minimal })
}

/// The unary operations, by CLI name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Star,
    Reversal,
    Complement,
    PrefixClosure,
    SuffixClosure,
    DownwardClosure,
}

/// The binary operations, by CLI name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
    Concatenation,
}

impl UnaryOp {
    pub const ALL: [UnaryOp; 6] = [
        UnaryOp::Star,
        UnaryOp::Reversal,
        UnaryOp::Complement,
        UnaryOp::PrefixClosure,
        UnaryOp::SuffixClosure,
        UnaryOp::DownwardClosure,
    ];

    pub fn apply(self, d: &Dfa) -> Dfa {
        match self {
            UnaryOp::Star => star(d),
            UnaryOp::Reversal => reversal(d),
            UnaryOp::Complement => complement(d),
            UnaryOp::PrefixClosure => prefix_closure(d),
            UnaryOp::SuffixClosure => suffix_closure(d),
            UnaryOp::DownwardClosure => downward_closure(d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            UnaryOp::Star => "star",
            UnaryOp::Reversal => "reversal",
            UnaryOp::Complement => "complement",
            UnaryOp::PrefixClosure => "prefix_closure",
            UnaryOp::SuffixClosure => "suffix_closure",
            UnaryOp::DownwardClosure => "downward_closure",
        }
    }
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 5] = [
        BinaryOp::Union,
        BinaryOp::Intersection,
        BinaryOp::Difference,
        BinaryOp::SymmetricDifference,
        BinaryOp::Concatenation,
    ];

    pub fn apply(self, d1: &Dfa, d2: &Dfa) -> Dfa {
        match self {
            BinaryOp::Union => union(d1, d2),
            BinaryOp::Intersection => intersection(d1, d2),
            BinaryOp::Difference => difference(d1, d2),
            BinaryOp::SymmetricDifference => symmetric_difference(d1, d2),
            BinaryOp::Concatenation => concatenation(d1, d2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BinaryOp::Union => "union",
            BinaryOp::Intersection => "intersection",
            BinaryOp::Difference => "difference",
            BinaryOp::SymmetricDifference => "symmetric_difference",
            BinaryOp::Concatenation => "concatenation",
        }
    }
}

impl fmt::Display for UnaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UnaryOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        UnaryOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Parameters(format!("unknown unary operation `{s}`")))
    }
}

impl FromStr for BinaryOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinaryOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Parameters(format!("unknown binary operation `{s}`")))
    }
}

/// Alphabet helper for tests and witnesses.
pub fn sigma(chars: &str) -> Alphabet {
    Alphabet::from_chars(chars).expect("distinct symbols")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Word;
    use crate::regex::parse_regex;

    fn re(expr: &str) -> Dfa {
        parse_regex(expr, &sigma("ab")).unwrap()
    }

    fn words(d: &Dfa, n: usize) -> Vec<String> {
        d.enumerate_words(n).iter().map(Word::as_string).collect()
    }

    #[test]
    fn star_examples() {
        assert!(star(&re("∅")).equivalent(&re("λ")));
        let a3 = re("(aaa)^*");
        assert!(star(&a3).equivalent(&a3));
        // {a^i | i ≤ 2} ∪ {b^2}: starred, b-blocks have even length
        let l = re("λ + a + aa + bb");
        assert!(star(&l).equivalent(&re("(a + bb)^*")));
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(words(&reversal(&re("ab")), 3), ["ba"]);
        let unary = parse_regex("(aa)^* + aaa", &sigma("a")).unwrap();
        assert!(reversal(&unary).equivalent(&unary));
        assert!(reversal(&re("b^+a^*b^*a^*")).equivalent(&re("a^*b^*a^*b^+")));
    }

    #[test]
    fn complement_examples() {
        assert!(complement(&re("(a+b)^*")).is_empty());
        assert!(complement(&re("∅")).equivalent(&re("(a+b)^*")));
        let d = re("a^*b");
        assert!(complement(&complement(&d)).equivalent(&d));
    }

    #[test]
    fn closures() {
        assert_eq!(words(&prefix_closure(&re("ab")), 3), ["", "a", "ab"]);
        assert_eq!(words(&suffix_closure(&re("ab")), 3), ["", "b", "ab"]);
        assert_eq!(words(&downward_closure(&re("ab")), 3), ["", "a", "b", "ab"]);
        let all = re("(a+b)^*");
        assert!(downward_closure(&all).equivalent(&all));
        let a_star = parse_regex("a^*", &sigma("a")).unwrap();
        assert!(suffix_closure(&a_star).equivalent(&a_star));
        let pc = re("a^*b^*");
        assert!(prefix_closure(&pc).equivalent(&pc));
    }

    #[test]
    fn boolean_operations() {
        let l = re("a^*b");
        assert!(intersection(&l, &re("∅")).is_empty());
        assert!(intersection(&l, &l).equivalent(&l));
        let abc = sigma("abc");
        let left = parse_regex("a + b^*", &abc).unwrap();
        let right = parse_regex("cc + b^*", &abc).unwrap();
        assert!(intersection(&left, &right).equivalent(&parse_regex("b^*", &abc).unwrap()));
        // mixed alphabets are aligned first
        let only_a = parse_regex("a", &sigma("a")).unwrap();
        let only_c = parse_regex("c", &sigma("c")).unwrap();
        let u = union(&only_a, &only_c);
        assert_eq!(u.alphabet().symbols(), &['a', 'c']);
        assert_eq!(words(&u, 2), ["a", "c"]);
        assert!(difference(&l, &l).is_empty());
        assert!(symmetric_difference(&l, &re("b")).equivalent(&re("a^+b")));
    }

    #[test]
    fn concatenation_examples() {
        let l = re("a^*b");
        assert!(concatenation(&l, &re("λ")).equivalent(&l));
        assert!(concatenation(&l, &re("∅")).is_empty());
        let d = concatenation(&re("b"), &re("(aa)^*"));
        assert_eq!(words(&d, 9), ["b", "baa", "baaaa", "baaaaaa", "baaaaaaaa"]);
    }

    #[test]
    fn loopify_existing_self_loop_is_identity() {
        let d = re("a^*b");
        let l = loopify(&d, d.initial(), 'a').unwrap();
        assert_eq!(l.raw, d);
        assert!(l.minimal.equivalent(&d));
        let one = re("(a+b)^*");
        assert!(loopify(&one, 0, 'b').unwrap().minimal.equivalent(&one));
        assert!(loopify(&d, 7, 'a').is_err());
        assert!(loopify(&d, 0, 'z').is_err());
    }

    #[test]
    fn op_names_round_trip() {
        for op in UnaryOp::ALL {
            assert_eq!(op.name().parse::<UnaryOp>().unwrap(), op);
        }
        for op in BinaryOp::ALL {
            assert_eq!(op.to_string().parse::<BinaryOp>().unwrap(), op);
        }
        assert!("shuffle".parse::<BinaryOp>().is_err());
    }
}

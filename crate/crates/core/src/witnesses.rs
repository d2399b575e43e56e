//! Parameterized languages with prescribed pumping constants.
//!
//! Every constructor checks its parameter constraints. The quinary family
//! additionally re-measures its output and fails with
//! [`Error::WitnessMismatch`] when the constants differ from the request.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::langops::sigma;
use crate::pumping::Analyzer;
use crate::regex::parse_regex;

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Parameters(msg()))
    }
}

fn ab() -> Alphabet {
    sigma("ab")
}

/// Block expression with `k − 1` alternations, starting with `first`
/// (`b^+` or `b^*`); `k ≥ 1`.
fn block_expr(first: &str, k: usize) -> String {
    let mut s = first.to_string();
    let pairs = if k % 2 == 1 { (k - 1) / 2 } else { (k - 2) / 2 };
    for _ in 0..pairs {
        s.push_str("a^*b^*");
    }
    if k % 2 == 0 {
        s.push_str("a^*");
    }
    s
}

/// `b^+(a^*b^*)^{(k−1)/2}` for odd `k`, `b^+(a^*b^*)^{(k−2)/2}a^*` for even
/// `k`, and `∅` for `k = 0`.
pub fn b_plus(k: usize) -> Dfa {
    if k == 0 {
        return Dfa::empty_language(ab());
    }
    parse_regex(&block_expr("b^+", k), &ab()).expect("well-formed block expression")
}

/// As [`b_plus`] with a leading `b^*`.
pub fn b_star(k: usize) -> Dfa {
    if k == 0 {
        return Dfa::empty_language(ab());
    }
    parse_regex(&block_expr("b^*", k), &ab()).expect("well-formed block expression")
}

/// Cyclic DFA over `{a}` with `size` states, accepting only state `accept`:
/// the language `a^{accept}(a^{size})^*`.
pub fn unary_cycle(accept: usize, size: usize) -> Result<Dfa> {
    require(accept < size, || format!("accepting state {accept} outside a cycle of {size}"))?;
    Dfa::from_fn(sigma("a"), size, 0, [accept], |q, _| (q + 1) % size)
}

/// Binary language with `mpc = p1`, `mpl = p2` and `sc = p3`.
///
/// When `p1 ≤ p2 = p3` (and not all three are 1) the language is unary
/// and the automaton is over `{a}` alone; over `{a, b}` it would need a sink.
pub fn thm_binary(p1: usize, p2: usize, p3: usize) -> Result<Dfa> {
    require(1 <= p1 && p1 <= p2 && p2 <= p3, || format!("need 1 ≤ p1 ≤ p2 ≤ p3, got ({p1}, {p2}, {p3})"))?;
    if p2 == 1 {
        return Ok(match p3 {
            1 => Dfa::universal(ab()),
            2 => parse_regex("a^*", &ab())?,
            _ => b_star(p3 - 1),
        });
    }
    if p2 == p3 {
        return unary_cycle(p1 - 1, p3);
    }
    let tail = if p3 - p2 - 1 == 0 { "λ".to_string() } else { format!("({} + λ)", block_expr("b^+", p3 - p2 - 1)) };
    let expr = format!("b^{{{}}}(a^{{{}}})^*{tail}", p1 - 1, p2 - p1 + 1);
    parse_regex(&expr, &ab())
}

/// The growing-alphabet family
/// `b^{p1−1}(a^{p2−p1+1})^* + c_1^* + … + c_{p3−p2−1}^*`, where the `c_i`
/// are the letters following `b`.
#[derive(Clone, Debug)]
pub struct FootnoteWitness {
    pub dfa: Dfa,
    pub expected_mpc: usize,
    pub expected_mpl: usize,
    /// `p3 + 1` when `p1 = 1` and at least one `c_i` is used, else `p3`.
    /// With `p1 = 1` the empty word is alone in its class: it is the only
    /// accepted word that can still read every letter.
    pub expected_sc: usize,
}

pub fn footnote_family(p1: usize, p2: usize, p3: usize) -> Result<FootnoteWitness> {
    require(1 <= p1 && p1 <= p2 && p2 < p3, || format!("need 1 ≤ p1 ≤ p2 < p3, got ({p1}, {p2}, {p3})"))?;
    let extra = p3 - p2 - 1;
    let letters: Vec<char> = (0..extra).map(|i| char::from_u32('c' as u32 + i as u32).expect("letter")).collect();
    let alphabet = Alphabet::new(['a', 'b'].into_iter().chain(letters.iter().copied()))?;
    let mut expr = format!("b^{{{}}}(a^{{{}}})^*", p1 - 1, p2 - p1 + 1);
    for c in &letters {
        expr.push_str(&format!(" + {c}^*"));
    }
    let dfa = parse_regex(&expr, &alphabet)?;
    let expected_sc = if p1 == 1 && extra > 0 { p3 + 1 } else { p3 };
    Ok(FootnoteWitness { dfa, expected_mpc: p1, expected_mpl: p2, expected_sc })
}

const QUINARY: &str = "abcde";

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;

/// Forward letter of each state of the reset chain `0 → 1 → … → n−1 → 0`,
/// and whether the other letter resets to `q_0` (otherwise it loops).
fn reset_chain(p2: usize, n: usize) -> Vec<(usize, bool)> {
    if p2 == n {
        return vec![(A, false); n];
    }
    let m = n - 1 - p2;
    if m == 0 {
        let mut spec = vec![(A, false); n - 1];
        spec.push((B, false));
        return spec;
    }
    let mut spec = vec![(A, false)];
    spec.extend(std::iter::repeat_n((B, true), n - 2 - m));
    spec.push((A, false));
    spec.extend(std::iter::repeat_n((A, true), m));
    spec
}

/// Quinary automaton for `2 ≤ p2 < p3` or `p2 = p3`. States `0 .. p3` form
/// the reset chain over `{a, b}` accepting at `p1 − 1`. With `p4 = p3` the
/// letters `c, d, e` loop everywhere. Otherwise `e` leads from every chain
/// state into an accepting `e`/`c` zigzag of `p4 − p3 − 1` states, `c` loops
/// at `q_0`, and every other move goes to the sink `p4 − 1`.
fn quinary_reset(p1: usize, p2: usize, p3: usize, p4: usize) -> Dfa {
    let chain = reset_chain(p2, p3);
    let pad = p4.saturating_sub(p3 + 1);
    let sink = p4 - 1;
    let mut accepting = vec![p1 - 1];
    accepting.extend(p3..p3 + pad);
    Dfa::from_fn(sigma(QUINARY), p4, 0, accepting, |q, a| {
        if q < p3 {
            let (forward, reset) = chain[q];
            return match a {
                _ if a == forward => (q + 1) % p3,
                A | B if reset => 0,
                A | B => q,
                _ if p4 == p3 => q,
                C if q == 0 => 0,
                E if pad > 0 => p3,
                _ => sink,
            };
        }
        if q == sink {
            return sink;
        }
        let j = q - p3;
        let (forward, stay) = if j % 2 == 0 { (C, E) } else { (E, C) };
        match a {
            _ if a == stay => q,
            _ if a == forward && j + 1 < pad => q + 1,
            _ => sink,
        }
    })
    .expect("indices within range")
}

/// Zigzag construction for `p2 < p3`: an `a`/`c` zigzag climbing from
/// `q_0`, a `b` path back down, a `d` cycle on `q_0 … q_{p2−1}` and, when
/// `p4 > p3`, an accepting `e`/`c` zigzag. Exact when `p2 = 1`. With
/// `p2 ≥ 2` its mpl can exceed `p2` (for `(2, 3, 4, 4)` the word `acabb`
/// has no pump in its 3-prefix), so [`thm_quinary`] uses it only for `p2 = 1`.
pub fn quinary_literal(p1: usize, p2: usize, p3: usize, p4: usize) -> Dfa {
    let n = p4;
    let sink = p4 - 1;
    let mut delta: Vec<Option<usize>> = vec![None; n * 5];
    let mut set = |q: usize, a: usize, t: usize| delta[q * 5 + a] = Some(t);
    if p3 == p4 {
        for i in 0..=(p3 - 2) / 2 {
            set(2 * i, A, 2 * i + 1);
        }
        if p3 >= 3 {
            for i in 0..=(p3 - 3) / 2 {
                set(2 * i + 1, C, 2 * i + 2);
            }
        }
        for i in 1..p3 {
            set(i, B, i - 1);
        }
    } else {
        // a/c zigzag over q_0 .. q_{top-1}, then an e/c zigzag up to q_{p4-2}
        let top = if p1 >= 2 { p3 - 1 } else { p3 };
        for s in 0..top {
            let (forward, stay) = if s % 2 == 0 { (A, C) } else { (C, A) };
            set(s, stay, s);
            if s + 1 < top {
                set(s, forward, s + 1);
            }
        }
        set(0, B, 0);
        for i in 1..top {
            set(i, B, i - 1);
        }
        let last = p4 - 2;
        if top <= last {
            set(0, E, top);
            for s in top..=last {
                let (forward, stay) = if (s - top) % 2 == 0 { (C, E) } else { (E, C) };
                set(s, stay, s);
                set(s, forward, if s < last { s + 1 } else { sink });
            }
        }
    }
    for i in 0..p2 {
        set(i, D, (i + 1) % p2);
    }
    let mut accepting = vec![p1 - 1];
    let from = if p1 == 1 { p3 } else { p3 - 1 };
    accepting.extend(from..p4.saturating_sub(1));
    Dfa::from_fn(sigma(QUINARY), n, 0, accepting, |q, a| {
        delta[q * 5 + a].unwrap_or(if p3 == p4 { q } else { sink })
    })
    .expect("indices within range")
}

/// Quinary construction without the self-check.
pub fn thm_quinary_unchecked(p1: usize, p2: usize, p3: usize, p4: usize) -> Result<Dfa> {
    require(1 <= p1 && p1 <= p2 && p2 <= p3 && p3 <= p4, || {
        format!("need 1 ≤ p1 ≤ p2 ≤ p3 ≤ p4, got ({p1}, {p2}, {p3}, {p4})")
    })?;
    if p2 == 1 && p3 > 1 {
        return Ok(quinary_literal(p1, p2, p3, p4));
    }
    Ok(quinary_reset(p1, p2, p3, p4))
}

/// Quinary language with `(mpc, mpl, mps, sc) = (p1, p2, p3, p4)`.
pub fn thm_quinary(p1: usize, p2: usize, p3: usize, p4: usize) -> Result<Dfa> {
    let d = thm_quinary_unchecked(p1, p2, p3, p4)?;
    let r = Analyzer::default().analyze(&d)?;
    let computed = r.constants().to_vec();
    let expected = vec![p1, p2, p3, p4];
    if computed != expected {
        return Err(Error::WitnessMismatch { family: "quinary".into(), expected, computed });
    }
    Ok(d)
}

/// `L` with `mps(L) = n` and `mps(L^*) = k`, for `1 ≤ k ≤ 2n − 1`.
pub fn star_witness(n: usize, k: usize) -> Result<Dfa> {
    require(n >= 1 && k >= 1 && k < 2 * n, || format!("need n ≥ 1 and 1 ≤ k ≤ 2n−1, got n={n}, k={k}"))?;
    let expr = if n > k {
        let mut e = String::from("λ");
        for i in 1..n {
            e.push_str(&format!(" + a^{{{i}}}"));
        }
        format!("{e} + b^{{{k}}}")
    } else if n == k {
        format!("(a^{{{n}}})^*")
    } else {
        format!("(a^{{{n}}})^* + (b^{{{}}})^*", k - n + 1)
    };
    parse_regex(&expr, &ab())
}

/// Two languages measuring `m` and `n` (under both mpl and mps) whose
/// intersection measures `k`. Representable: `k ∈ {0, 1}`, or `k ≥ 2`
/// with `max(m, n) ≥ 2`; for `m = n = 1` only `k = 1`.
pub fn intersection_witness(m: usize, n: usize, k: usize) -> Result<(Dfa, Dfa)> {
    require(m >= 1 && n >= 1, || format!("need m, n ≥ 1, got ({m}, {n})"))?;
    require(k == 1 || m.max(n) >= 2, || format!("k = {k} is not reachable with m = n = 1"))?;
    let sigma = sigma("abcde");
    let re = |e: &str| parse_regex(e, &sigma);
    match k {
        0 => Ok((re(&format!("a^{{{}}}", m - 1))?, re(&format!("b^{{{}}}", n - 1))?)),
        1 => Ok((re(&format!("a^{{{}}} + b^*", m - 1))?, re(&format!("c^{{{}}} + b^*", n - 1))?)),
        _ if m == 1 => {
            let (x, y) = intersection_witness(n, m, k)?;
            Ok((y, x))
        }
        _ => {
            let alternating = if k % 2 == 0 { "(ba)^*b(ad)^*" } else { "(ba)^*(bd)^*" };
            let first = format!("c^{{{}}} + {alternating} + (da)^*d", m - 1);
            // B_0 read as {λ} so that k = 2 keeps a non-empty intersection
            let blocks = if k == 2 { "λ".to_string() } else { block_expr("b^*", k - 2) };
            let second = format!("e^{{{}}} + ({blocks})d^*", n - 1);
            Ok((re(&first)?, re(&second)?))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    BPlus,
    BStar,
    BinaryTriple,
    Footnote,
    Quinary,
    StarWitness,
    IntersectionWitness,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::BPlus,
        Family::BStar,
        Family::BinaryTriple,
        Family::Footnote,
        Family::Quinary,
        Family::StarWitness,
        Family::IntersectionWitness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BPlus => "b_plus",
            Family::BStar => "b_star",
            Family::BinaryTriple => "binary",
            Family::Footnote => "footnote",
            Family::Quinary => "quinary",
            Family::StarWitness => "star",
            Family::IntersectionWitness => "intersection",
        }
    }

    /// Parameter names, in the order the constructor takes them.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::BPlus | Family::BStar => &["k"],
            Family::BinaryTriple | Family::Footnote => &["p1", "p2", "p3"],
            Family::Quinary => &["p1", "p2", "p3", "p4"],
            Family::StarWitness => &["n", "k"],
            Family::IntersectionWitness => &["m", "n", "k"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parameters(format!("unknown family `{s}`")))
    }
}

/// A family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSpec {
    pub family: Family,
    pub params: BTreeMap<String, usize>,
}

/// Constructed automata: one language, or a pair for intersection.
#[derive(Clone, Debug)]
pub enum Built {
    Single(Dfa),
    Pair(Dfa, Dfa),
}

impl WitnessSpec {
    pub fn new(family: Family, params: &[(&str, usize)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(name, value) in params {
            if !family.params().contains(&name) {
                return Err(Error::Parameters(format!("{family} takes no parameter `{name}`")));
            }
            map.insert(name.to_string(), value);
        }
        for name in family.params() {
            if !map.contains_key(*name) {
                return Err(Error::Parameters(format!("{family} needs parameter `{name}`")));
            }
        }
        Ok(WitnessSpec { family, params: map })
    }

    fn get(&self, name: &str) -> usize {
        self.params[name]
    }

    pub fn build(&self) -> Result<Built> {
        let g = |n| self.get(n);
        Ok(match self.family {
            Family::BPlus => Built::Single(b_plus(g("k"))),
            Family::BStar => Built::Single(b_star(g("k"))),
            Family::BinaryTriple => Built::Single(thm_binary(g("p1"), g("p2"), g("p3"))?),
            Family::Footnote => Built::Single(footnote_family(g("p1"), g("p2"), g("p3"))?.dfa),
            Family::Quinary => Built::Single(thm_quinary(g("p1"), g("p2"), g("p3"), g("p4"))?),
            Family::StarWitness => Built::Single(star_witness(g("n"), g("k"))?),
            Family::IntersectionWitness => {
                let (x, y) = intersection_witness(g("m"), g("n"), g("k"))?;
                Built::Pair(x, y)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Word;
    use crate::pumping::analyze;

    #[test]
    fn block_languages() {
        let s = sigma("ab");
        assert!(b_star(3).equivalent(&parse_regex("b^*a^*b^*", &s).unwrap()));
        assert!(b_plus(4).equivalent(&parse_regex("b^+a^*b^*a^*", &s).unwrap()));
        assert!(b_plus(0).is_empty() && b_star(0).is_empty());
        assert!(b_plus(1).equivalent(&parse_regex("b^+", &s).unwrap()));
    }

    #[test]
    fn binary_small_cases() {
        let d = thm_binary(1, 1, 2).unwrap();
        assert!(d.equivalent(&parse_regex("a^*", &sigma("ab")).unwrap()));
        assert_eq!(d.sc(), 2);
        let r = analyze(&thm_binary(2, 3, 3).unwrap()).unwrap();
        assert_eq!((r.mpc, r.mpl, r.sc), (2, 3, 3));
        let r = analyze(&thm_binary(1, 2, 5).unwrap()).unwrap();
        assert_eq!((r.mpc, r.mpl, r.sc), (1, 2, 5));
    }

    #[test]
    fn unary_cycle_words() {
        let d = unary_cycle(1, 3).unwrap();
        let words: Vec<Word> = ["a", "aaaa", "aaaaaaa"].into_iter().map(Word::from).collect();
        assert_eq!(d.enumerate_words(7), words);
    }

    #[test]
    fn footnote_off_by_one() {
        let f = footnote_family(1, 1, 4).unwrap();
        assert_eq!(f.expected_sc, 5);
        assert_eq!(f.dfa.sc(), 5);
        let f = footnote_family(2, 3, 5).unwrap();
        let r = analyze(&f.dfa).unwrap();
        assert_eq!((r.mpc, r.mpl, r.sc), (2, 3, 5));
        // also off by one when only p1 = 1
        let f = footnote_family(1, 3, 6).unwrap();
        assert_eq!((f.expected_sc, f.dfa.sc()), (7, 7));
        let f = footnote_family(1, 1, 2).unwrap();
        assert_eq!((f.expected_sc, f.dfa.sc()), (2, 2));
    }

    #[test]
    fn quinary_examples() {
        assert!(thm_quinary(1, 2, 4, 6).is_ok());
        assert!(thm_quinary(2, 3, 4, 4).is_ok());
        assert!(thm_quinary(1, 1, 5, 7).is_ok());
        assert!(thm_quinary(2, 2, 2, 6).is_ok());
        assert!(thm_quinary(2, 1, 4, 4).is_err());
    }

    #[test]
    fn zigzag_construction_misses_mpl() {
        let d = quinary_literal(2, 3, 4, 4);
        let r = analyze(&d).unwrap();
        assert_eq!(r.constants(), [2, 4, 4, 4]);
        assert!(crate::oracle::defeats_mpl(&d, &Word::from("acabb"), 3).unwrap());
    }

    #[test]
    fn reset_chain_shapes() {
        assert_eq!(reset_chain(4, 4), vec![(A, false); 4]);
        assert_eq!(reset_chain(3, 4), vec![(A, false), (A, false), (A, false), (B, false)]);
        assert_eq!(reset_chain(2, 4), vec![(A, false), (B, true), (A, false), (A, true)]);
    }

    #[test]
    fn star_witness_cases() {
        let s = sigma("ab");
        assert!(star_witness(2, 2).unwrap().equivalent(&parse_regex("(aa)^*", &s).unwrap()));
        assert!(star_witness(3, 1).unwrap().is_finite());
        assert!(star_witness(2, 4).is_err());
    }

    #[test]
    fn intersection_pairs() {
        let (x, y) = intersection_witness(2, 3, 1).unwrap();
        let i = crate::langops::intersection(&x, &y);
        assert!(i.equivalent(&parse_regex("b^*", &sigma("b")).unwrap()));
        assert!(intersection_witness(1, 1, 2).is_err());
        assert!(intersection_witness(1, 1, 1).is_ok());
    }

    #[test]
    fn spec_parameters_checked() {
        assert!(WitnessSpec::new(Family::Quinary, &[("p1", 1), ("p2", 2), ("p3", 3)]).is_err());
        assert!(WitnessSpec::new(Family::StarWitness, &[("n", 2), ("k", 3), ("m", 1)]).is_err());
        let s = WitnessSpec::new(Family::BStar, &[("k", 3)]).unwrap();
        assert!(matches!(s.build().unwrap(), Built::Single(_)));
    }
}

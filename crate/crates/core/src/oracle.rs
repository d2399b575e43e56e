//! Brute-force pumping checks, written straight from the definitions.
//!
//! Nothing here uses orbits or the frontier search of [`crate::pumping`];
//! pumps are checked by membership of `x y^t z` for `t = 0 ..= 2|Q|`. That
//! range suffices because `q·y^t` is eventually periodic with preperiod
//! plus period at most `|Q|`. Values computed from words up to a length
//! bound are lower bounds, exact once the bound covers a minimality witness.

use serde::Serialize;

use crate::alphabet::Word;
use crate::dfa::Dfa;
use crate::error::Result;
use crate::pumping::{Analyzer, Certificate, Triple};

/// Membership data for one word: the state after each prefix, and for each
/// position `e` the set of states from which `word[e..]` is accepted.
struct Runs {
    prefix: Vec<usize>,
    accepts_from: Vec<Vec<bool>>,
}

impl Runs {
    fn new(d: &Dfa, word: &[usize]) -> Self {
        let mut prefix = vec![d.initial()];
        for &a in word {
            prefix.push(d.step(*prefix.last().expect("non-empty"), a));
        }
        let n = d.num_states();
        let mut accepts_from = vec![(0..n).map(|q| d.is_accepting(q)).collect::<Vec<_>>()];
        for &a in word.iter().rev() {
            let next = accepts_from.last().expect("non-empty");
            let row = (0..n).map(|q| next[d.step(q, a)]).collect();
            accepts_from.push(row);
        }
        accepts_from.reverse();
        Runs { prefix, accepts_from }
    }

    /// Whether `x y^t z` is accepted for every `t` in `0..=2|Q|`, where
    /// `x = word[..s]`, `y = word[s..e]`, `z = word[e..]`.
    fn pumps(&self, d: &Dfa, word: &[usize], s: usize, e: usize) -> bool {
        let mut q = self.prefix[s];
        for _ in 0..=2 * d.num_states() {
            if !self.accepts_from[e][q] {
                return false;
            }
            q = d.run(q, &word[s..e]);
        }
        true
    }
}

fn pumps(d: &Dfa, word: &[usize], s: usize, e: usize) -> bool {
    Runs::new(d, word).pumps(d, word, s, e)
}

/// `table[s][e]`: `word[s..e]` pumps in `word`.
fn pump_table(d: &Dfa, word: &[usize]) -> Vec<Vec<bool>> {
    let runs = Runs::new(d, word);
    let n = word.len();
    let mut table = vec![vec![false; n + 1]; n + 1];
    for e in 1..=n {
        for s in 0..e {
            table[s][e] = runs.pumps(d, word, s, e);
        }
    }
    table
}

/// Smallest `e − a` such that some pump of `word` starts at or after `a`
/// and ends at `e`.
fn first_pump_end(table: &[Vec<bool>], a: usize) -> Option<usize> {
    (a + 1..table.len()).find(|&e| (a..e).any(|s| table[s][e])).map(|e| e - a)
}

pub fn oracle_pumpable_mpc(d: &Dfa, w: &Word) -> Result<bool> {
    let word = d.alphabet().encode(w)?;
    let runs = Runs::new(d, &word);
    Ok((1..=word.len()).any(|e| (0..e).any(|s| runs.pumps(d, &word, s, e))))
}

/// Lower bound on a constant with the word that achieves it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleBound<W> {
    pub value: usize,
    pub witness: Option<W>,
}

/// The three lower bounds from one pass over the accepted words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleBounds {
    pub mpc: OracleBound<Word>,
    pub mpl: OracleBound<Word>,
    pub mps: OracleBound<Triple>,
}

impl OracleBounds {
    pub fn values(&self) -> [usize; 3] {
        [self.mpc.value, self.mpl.value, self.mps.value]
    }
}

pub fn oracle_bounds(d: &Dfa, len_bound: usize) -> OracleBounds {
    let alpha = d.alphabet();
    let mut out = OracleBounds {
        mpc: OracleBound { value: 0, witness: None },
        mpl: OracleBound { value: 0, witness: None },
        mps: OracleBound { value: 0, witness: None },
    };
    for word in d.enumerate_indices(len_bound) {
        let table = pump_table(d, &word);
        // `1 + |w|` over unpumpable words
        if first_pump_end(&table, 0).is_none() && word.len() + 1 > out.mpc.value {
            out.mpc = OracleBound { value: word.len() + 1, witness: Some(alpha.decode(&word)) };
        }
        for a in 0..=word.len() {
            let room = word.len() - a;
            // p is defeated when p ≤ room and no pump ends within the first p letters after a
            let defeated = first_pump_end(&table, a).map_or(room, |j| (j - 1).min(room));
            if a == 0 && defeated + 1 > out.mpl.value {
                out.mpl = OracleBound { value: defeated + 1, witness: Some(alpha.decode(&word)) };
            }
            if defeated + 1 > out.mps.value {
                let triple = Triple {
                    u: alpha.decode(&word[..a]),
                    w: alpha.decode(&word[a..a + defeated]),
                    v: alpha.decode(&word[a + defeated..]),
                };
                out.mps = OracleBound { value: defeated + 1, witness: Some(triple) };
            }
        }
    }
    out
}

/// `1 + |w|` maximized over unpumpable accepted words up to `len_bound`.
pub fn oracle_mpc(d: &Dfa, len_bound: usize) -> OracleBound<Word> {
    oracle_bounds(d, len_bound).mpc
}

pub fn oracle_mpl(d: &Dfa, len_bound: usize) -> OracleBound<Word> {
    oracle_bounds(d, len_bound).mpl
}

pub fn oracle_mps(d: &Dfa, len_bound: usize) -> OracleBound<Triple> {
    oracle_bounds(d, len_bound).mps
}

/// Whether `u·w·v` is accepted and no pump lies inside the `p`-prefix of `w`.
pub fn defeats_mps(d: &Dfa, t: &Triple, p: usize) -> Result<bool> {
    let alpha = d.alphabet();
    let word = alpha.encode(&t.whole())?;
    let a = t.u.len();
    if !d.accepts_indices(&word) || t.w.len() < p {
        return Ok(false);
    }
    let limit = a + p.min(t.w.len());
    let runs = Runs::new(d, &word);
    Ok(!(a + 1..=limit).any(|e| (a..e).any(|s| runs.pumps(d, &word, s, e))))
}

/// Whether `w` is accepted, `|w| ≥ p` and no pump ends within its `p`-prefix.
pub fn defeats_mpl(d: &Dfa, w: &Word, p: usize) -> Result<bool> {
    defeats_mps(d, &Triple { u: Word::empty(), w: w.prefix(p), v: w.suffix(w.len().saturating_sub(p)) }, p)
}

fn certificate_holds(d: &Dfa, c: &Certificate) -> Result<bool> {
    let dc = &c.decomposition;
    let word = d.alphabet().encode(&c.word)?;
    if dc.window_start + dc.window_len > word.len() || dc.i >= dc.j || dc.j > dc.window_len {
        return Ok(false);
    }
    Ok(pumps(d, &word, dc.window_start + dc.i, dc.window_start + dc.j))
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossValidation {
    pub exact: [usize; 3],
    pub oracle: [usize; 3],
    /// Oracle and exact values coincide (guaranteed when every exact
    /// witness fits the bound).
    pub agrees: bool,
    pub hard_failures: Vec<String>,
}

impl CrossValidation {
    pub fn ok(&self) -> bool {
        self.hard_failures.is_empty()
    }
}

pub fn cross_validate(d: &Dfa, len_bound: usize) -> Result<CrossValidation> {
    cross_validate_with(&Analyzer::default(), d, len_bound)
}

pub fn cross_validate_with(an: &Analyzer, d: &Dfa, len_bound: usize) -> Result<CrossValidation> {
    let r = an.analyze(d)?;
    let exact = [r.mpc, r.mpl, r.mps];
    let oracle = oracle_bounds(d, len_bound).values();
    let mut hard_failures = Vec::new();
    for (name, (e, o)) in ["mpc", "mpl", "mps"].iter().zip(exact.iter().zip(&oracle)) {
        if o > e {
            hard_failures.push(format!("{name}: oracle lower bound {o} exceeds exact value {e}"));
        }
    }
    if let Some(w) = &r.witnesses.mpc {
        if !d.accepts(w)? || oracle_pumpable_mpc(d, w)? || w.len() + 1 != r.mpc {
            hard_failures.push(format!("mpc witness {w} does not re-verify"));
        }
    }
    if let Some(w) = &r.witnesses.mpl {
        if !defeats_mpl(d, w, r.mpl - 1)? {
            hard_failures.push(format!("mpl witness {w} does not defeat {}", r.mpl - 1));
        }
    }
    if let Some(t) = &r.witnesses.mps {
        if !defeats_mps(d, t, r.mps - 1)? {
            hard_failures.push(format!("mps witness {t} does not defeat {}", r.mps - 1));
        }
    }
    for c in &r.certificates {
        if !certificate_holds(d, c)? {
            hard_failures.push(format!("{} certificate on {} does not pump", c.kind, c.word));
        }
    }
    Ok(CrossValidation { exact, oracle, agrees: exact == oracle, hard_failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langops::sigma;
    use crate::regex::parse_regex;

    fn re(expr: &str, alphabet: &str) -> Dfa {
        parse_regex(expr, &sigma(alphabet)).unwrap()
    }

    #[test]
    fn shortest_word_and_empty_word_do_not_pump() {
        let d = re("ab(a+b)^*", "ab");
        assert!(!oracle_pumpable_mpc(&d, &Word::from("ab")).unwrap());
        assert!(oracle_pumpable_mpc(&d, &Word::from("aba")).unwrap());
        assert!(!oracle_pumpable_mpc(&re("a^*", "a"), &Word::empty()).unwrap());
    }

    #[test]
    fn first_letter_pumps_in_block_languages() {
        let d = re("b^*a^*b^*", "ab");
        for w in d.enumerate_words(6).into_iter().filter(|w| !w.is_empty()) {
            assert!(oracle_pumpable_mpc(&d, &w).unwrap(), "{w}");
        }
    }

    #[test]
    fn bounds_on_small_languages() {
        assert_eq!(oracle_mpl(&re("a(aaa)^*", "a"), 8).value, 3);
        assert_eq!(oracle_mps(&re("(aaa)^*", "a"), 9).value, 3);
        assert_eq!(oracle_mps(&re("(a+b)^*", "ab"), 4).value, 1);
        assert_eq!(oracle_mpl(&re("∅", "ab"), 6).value, 0);
    }

    #[test]
    fn empty_language_agrees() {
        let cv = cross_validate(&re("∅", "ab"), 6).unwrap();
        assert!(cv.ok() && cv.agrees);
        assert_eq!(cv.exact, [0, 0, 0]);
    }
}

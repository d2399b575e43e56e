//! Exact minimal pumping constants.
//!
//! * `mpc`: every accepted word of length at least `p` splits as `xyz`,
//!   `y` non-empty, with `x y^t z` accepted for all `t ≥ 0`.
//! * `mpl`: as `mpc`, with the extra constraint `|xy| ≤ p`.
//! * `mps`: for every accepted `uwv` with `|w| ≥ p`, the sub-word `w`
//!   splits as `xyz` with `|xy| ≤ p` and `u x y^t z v` accepted for all `t`.
//!
//! "For all `t`" is decided from the orbit `{q·y^t}`, which is finite. All
//! three constants are obtained from one frontier of unsafe windows per
//! automaton; see the `search` module.

mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::Word;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use search::{Search, Unsafe};

pub const DEFAULT_NODE_BUDGET: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PumpKind {
    Mpc,
    Mpl,
    Mps,
}

impl PumpKind {
    pub const ALL: [PumpKind; 3] = [PumpKind::Mpc, PumpKind::Mpl, PumpKind::Mps];

    pub fn name(self) -> &'static str {
        match self {
            PumpKind::Mpc => "mpc",
            PumpKind::Mpl => "mpl",
            PumpKind::Mps => "mps",
        }
    }
}

impl fmt::Display for PumpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PumpKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PumpKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parameters(format!("unknown constant `{s}`")))
    }
}

/// The states `q·y^t`, `t ≥ 0`, in order of first visit. The sequence
/// enters a cycle after `preperiod` states; the cycle has `period` states.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub states: Vec<usize>,
    pub preperiod: usize,
    pub period: usize,
}

impl Orbit {
    pub fn contains(&self, q: usize) -> bool {
        self.states.contains(&q)
    }
}

pub fn orbit(d: &Dfa, q: usize, y: &Word) -> Result<Orbit> {
    d.check_state(q)?;
    if y.is_empty() {
        return Err(Error::EmptyPump);
    }
    let y = d.alphabet().encode(y)?;
    Ok(orbit_indices(d, q, &y))
}

fn orbit_indices(d: &Dfa, q: usize, y: &[usize]) -> Orbit {
    let mut states = Vec::new();
    let mut r = q;
    loop {
        if let Some(pos) = states.iter().position(|&s| s == r) {
            let period = states.len() - pos;
            return Orbit { states, preperiod: pos, period };
        }
        states.push(r);
        r = d.run(r, y);
    }
}

/// Whether `y = w[i..j]` pumps: reading `x y^t z` from `q` and then
/// `continuation` is accepted for every `t ≥ 0`.
pub fn pump_valid(d: &Dfa, q: usize, w: &Word, i: usize, j: usize, continuation: &Word) -> Result<bool> {
    d.check_state(q)?;
    if i >= j || j > w.len() {
        return Err(Error::Index(format!("split ({i}, {j}) of a word of length {}", w.len())));
    }
    let w = d.alphabet().encode(w)?;
    let v = d.alphabet().encode(continuation)?;
    Ok(pump_valid_indices(d, q, &w, i, j, &v))
}

fn pump_valid_indices(d: &Dfa, q: usize, w: &[usize], i: usize, j: usize, v: &[usize]) -> bool {
    let o = orbit_indices(d, d.run(q, &w[..i]), &w[i..j]);
    o.states.iter().all(|&r| d.is_accepting(d.run(d.run(r, &w[j..]), v)))
}

/// A successful pump inside `word`: the window
/// `word[window_start .. window_start + window_len]` split at `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub window_start: usize,
    pub window_len: usize,
    pub i: usize,
    pub j: usize,
    pub orbit: Orbit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: PumpKind,
    pub word: Word,
    pub decomposition: Decomposition,
}

impl Certificate {
    /// Re-checks the pump against `d` (any automaton for the language).
    pub fn verify(&self, d: &Dfa) -> Result<bool> {
        let dc = &self.decomposition;
        let end = dc.window_start + dc.window_len;
        if end > self.word.len() {
            return Err(Error::Index(format!("window ends at {end}, word has length {}", self.word.len())));
        }
        let q = d.run(d.initial(), &d.alphabet().encode(&self.word.prefix(dc.window_start))?);
        let w = self.word.slice(dc.window_start, end);
        let v = self.word.slice(end, self.word.len());
        pump_valid(d, q, &w, dc.i, dc.j, &v)
    }
}

/// A sub-word occurrence `u·w·v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub u: Word,
    pub w: Word,
    pub v: Word,
}

impl Triple {
    pub fn whole(&self) -> Word {
        self.u.concat(&self.w).concat(&self.v)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.u, self.w, self.v)
    }
}

/// A constant together with the witness that defeats `value − 1`
/// (absent when the value is 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Measured<W> {
    pub value: usize,
    pub witness: Option<W>,
}

/// Outcome of testing a single `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check<W> {
    pub holds: bool,
    pub counterexample: Option<W>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// Longest unpumpable word.
    pub mpc: Option<Word>,
    /// Word defeating `mpl − 1`.
    pub mpl: Option<Word>,
    /// Occurrence defeating `mps − 1`.
    pub mps: Option<Triple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PumpingReport {
    pub mpc: usize,
    pub mpl: usize,
    pub mps: usize,
    pub sc: usize,
    pub witnesses: Witnesses,
    /// Pumps achieving each constant on the least long word, with orbit
    /// states numbered as in the minimal automaton.
    pub certificates: Vec<Certificate>,
}

impl PumpingReport {
    pub fn value(&self, kind: PumpKind) -> usize {
        match kind {
            PumpKind::Mpc => self.mpc,
            PumpKind::Mpl => self.mpl,
            PumpKind::Mps => self.mps,
        }
    }

    pub fn constants(&self) -> [usize; 4] {
        [self.mpc, self.mpl, self.mps, self.sc]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the decision procedures with a bound on the size of each
/// continuation search.
#[derive(Clone, Copy, Debug)]
pub struct Analyzer {
    pub node_budget: usize,
}

impl Default for Analyzer {
    fn default() -> Self {
        Analyzer { node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// Frontier from the initial state, kept until it empties.
struct Prefixes {
    levels: Vec<Vec<Unsafe>>,
}

impl Prefixes {
    fn mpl(&self) -> usize {
        self.levels.len() - 1
    }

    /// Deepest level holding an unpumpable word (empty continuation).
    fn longest_unpumpable(&self) -> Option<&Unsafe> {
        self.levels.iter().rev().find_map(|l| l.iter().find(|u| u.continuation.is_empty()))
    }
}

impl Analyzer {
    pub fn new(node_budget: usize) -> Self {
        Analyzer { node_budget }
    }

    fn prefixes(&self, m: &Dfa, max_len: Option<usize>) -> Result<Prefixes> {
        let levels = Search::new(m, self.node_budget).sweep(&[m.initial()], max_len)?;
        Ok(Prefixes { levels })
    }

    fn windows(&self, m: &Dfa, max_len: Option<usize>) -> Result<Vec<Vec<Unsafe>>> {
        let starts: Vec<usize> = (0..m.num_states()).collect();
        Search::new(m, self.node_budget).sweep(&starts, max_len)
    }

    fn word_of(m: &Dfa, u: &Unsafe) -> Word {
        let mut w = u.window.word.clone();
        w.extend_from_slice(&u.continuation);
        m.alphabet().decode(&w)
    }

    fn triple_of(m: &Dfa, access: &[Option<Vec<usize>>], u: &Unsafe) -> Triple {
        let a = m.alphabet();
        Triple {
            u: a.decode(access[u.window.start].as_ref().expect("minimal automata are accessible")),
            w: a.decode(&u.window.word),
            v: a.decode(&u.continuation),
        }
    }

    pub fn mpc(&self, d: &Dfa) -> Result<Measured<Word>> {
        let m = d.minimize();
        let pre = self.prefixes(&m, None)?;
        Ok(match pre.longest_unpumpable() {
            Some(u) => Measured { value: u.window.word.len() + 1, witness: Some(m.alphabet().decode(&u.window.word)) },
            None => Measured { value: 0, witness: None },
        })
    }

    pub fn mpl(&self, d: &Dfa) -> Result<Measured<Word>> {
        let m = d.minimize();
        let pre = self.prefixes(&m, None)?;
        let value = pre.mpl();
        let witness = value.checked_sub(1).map(|k| Self::word_of(&m, &pre.levels[k][0]));
        Ok(Measured { value, witness })
    }

    pub fn mps(&self, d: &Dfa) -> Result<Measured<Triple>> {
        let m = d.minimize();
        let levels = self.windows(&m, None)?;
        let value = levels.len() - 1;
        let access = m.access_words();
        let witness = value.checked_sub(1).map(|k| Self::triple_of(&m, &access, &levels[k][0]));
        Ok(Measured { value, witness })
    }

    /// Whether every accepted word of length at least `p` pumps within its
    /// `p`-prefix; otherwise the least counterexample.
    pub fn satisfies_mpl(&self, d: &Dfa, p: usize) -> Result<Check<Word>> {
        let m = d.minimize();
        let pre = self.prefixes(&m, Some(p))?;
        let counterexample = pre.levels.get(p).and_then(|l| l.first()).map(|u| Self::word_of(&m, u));
        Ok(Check { holds: counterexample.is_none(), counterexample })
    }

    pub fn satisfies_mps(&self, d: &Dfa, p: usize) -> Result<Check<Triple>> {
        let m = d.minimize();
        let levels = self.windows(&m, Some(p))?;
        let access = m.access_words();
        let counterexample = levels.get(p).and_then(|l| l.first()).map(|u| Self::triple_of(&m, &access, u));
        Ok(Check { holds: counterexample.is_none(), counterexample })
    }

    /// `[mpc, mpl, mps, sc]` without witnesses or certificates; the chain is
    /// not asserted.
    pub fn constants(&self, d: &Dfa) -> Result<[usize; 4]> {
        let m = d.minimize();
        let pre = self.prefixes(&m, None)?;
        let mpc = pre.longest_unpumpable().map_or(0, |u| u.window.word.len() + 1);
        let mps = self.windows(&m, None)?.len() - 1;
        Ok([mpc, pre.mpl(), mps, m.num_states()])
    }

    pub fn analyze(&self, d: &Dfa) -> Result<PumpingReport> {
        let m = d.minimize();
        let sc = m.num_states();
        let pre = self.prefixes(&m, None)?;
        let (mpc, witness_mpc) = match pre.longest_unpumpable() {
            Some(u) => (u.window.word.len() + 1, Some(m.alphabet().decode(&u.window.word))),
            None => (0, None),
        };
        let mpl = pre.mpl();
        let witness_mpl = mpl.checked_sub(1).map(|k| Self::word_of(&m, &pre.levels[k][0]));
        let levels = self.windows(&m, None)?;
        let mps = levels.len() - 1;
        let access = m.access_words();
        let witness_mps = mps.checked_sub(1).map(|k| Self::triple_of(&m, &access, &levels[k][0]));
        assert!(
            mpc <= mpl && mpl <= mps && mps <= sc,
            "chain violated: mpc={mpc} mpl={mpl} mps={mps} sc={sc}"
        );
        let mut certificates = Vec::new();
        certificates.extend(word_certificate(&m, PumpKind::Mpc, mpc));
        certificates.extend(word_certificate(&m, PumpKind::Mpl, mpl));
        certificates.extend(occurrence_certificate(&m, mps, witness_mps.as_ref()));
        Ok(PumpingReport {
            mpc,
            mpl,
            mps,
            sc,
            witnesses: Witnesses { mpc: witness_mpc, mpl: witness_mpl, mps: witness_mps },
            certificates,
        })
    }
}

/// First split of `word[start..start + len]` that pumps in context;
/// `max_j` bounds `j` relative to the window.
fn find_split(m: &Dfa, word: &[usize], start: usize, len: usize, max_j: usize) -> Option<Decomposition> {
    let q = m.run(m.initial(), &word[..start]);
    let w = &word[start..start + len];
    let v = &word[start + len..];
    for j in 1..=max_j.min(len) {
        for i in 0..j {
            if pump_valid_indices(m, q, w, i, j, v) {
                let orbit = orbit_indices(m, m.run(q, &w[..i]), &w[i..j]);
                return Some(Decomposition { window_start: start, window_len: len, i, j, orbit });
            }
        }
    }
    None
}

/// Pump in the least accepted word of length at least `p` (for mpc with
/// `y` anywhere, for mpl within the `p`-prefix).
fn word_certificate(m: &Dfa, kind: PumpKind, p: usize) -> Option<Certificate> {
    if p == 0 {
        return None;
    }
    let word = m.first_word_at_least(p)?;
    let max_j = if kind == PumpKind::Mpl { p } else { word.len() };
    let decomposition = find_split(m, &word, 0, word.len(), max_j).expect("long words pump");
    Some(Certificate { kind, word: m.alphabet().decode(&word), decomposition })
}

/// Pump of a length-`p` window: the minimality witness widened by one
/// letter, or the prefix of the least long word when the witness is `λ`.
fn occurrence_certificate(m: &Dfa, p: usize, witness: Option<&Triple>) -> Option<Certificate> {
    if p == 0 {
        return None;
    }
    let a = m.alphabet();
    let t = witness.expect("p ≥ 1 has a witness");
    let (u, v) = (a.encode(&t.u).ok()?, a.encode(&t.v).ok()?);
    let word = a.encode(&t.whole()).ok()?;
    let start = if !v.is_empty() {
        Some(u.len())
    } else if !u.is_empty() {
        Some(u.len() - 1)
    } else {
        None
    };
    let (word, start) = match start {
        Some(s) => (word, s),
        None => (m.first_word_at_least(p)?, 0),
    };
    let decomposition = find_split(m, &word, start, p, p).expect("windows of length mps pump");
    Some(Certificate { kind: PumpKind::Mps, word: a.decode(&word), decomposition })
}

pub fn mpc(d: &Dfa) -> Result<Measured<Word>> {
    Analyzer::default().mpc(d)
}

pub fn mpl(d: &Dfa) -> Result<Measured<Word>> {
    Analyzer::default().mpl(d)
}

pub fn mps(d: &Dfa) -> Result<Measured<Triple>> {
    Analyzer::default().mps(d)
}

pub fn satisfies_mpl(d: &Dfa, p: usize) -> Result<Check<Word>> {
    Analyzer::default().satisfies_mpl(d, p)
}

pub fn satisfies_mps(d: &Dfa, p: usize) -> Result<Check<Triple>> {
    Analyzer::default().satisfies_mps(d, p)
}

pub fn analyze(d: &Dfa) -> Result<PumpingReport> {
    Analyzer::default().analyze(d)
}

pub fn measure(d: &Dfa, kind: PumpKind) -> Result<usize> {
    Ok(match kind {
        PumpKind::Mpc => mpc(d)?.value,
        PumpKind::Mpl => mpl(d)?.value,
        PumpKind::Mps => mps(d)?.value,
    })
}

//! Complete deterministic finite automata.
//!
//! Every analysis in this crate takes a complete [`Dfa`]: the transition
//! table is total, so state counts always include the non-accepting sink
//! when the language needs one.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};

/// A complete DFA with states `0..num_states()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    states: usize,
    /// Row-major `states x alphabet.len()` transition table.
    delta: Vec<usize>,
    initial: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from a row-major transition table (`delta[q * |Σ| + a]`).
    pub fn new(
        alphabet: Alphabet,
        states: usize,
        initial: usize,
        accepting: impl IntoIterator<Item = usize>,
        delta: Vec<usize>,
    ) -> Result<Self> {
        if states == 0 {
            return Err(Error::Parameters("a DFA needs at least one state".into()));
        }
        if initial >= states {
            return Err(Error::InvalidState { state: initial, states });
        }
        if delta.len() != states * alphabet.len() {
            return Err(Error::Parameters(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                states * alphabet.len()
            )));
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= states) {
            return Err(Error::InvalidState { state: bad, states });
        }
        let mut acc = vec![false; states];
        for q in accepting {
            if q >= states {
                return Err(Error::InvalidState { state: q, states });
            }
            acc[q] = true;
        }
        Ok(Dfa { alphabet, states, delta, initial, accepting: acc })
    }

    /// Builds a DFA from a transition function over symbol indices.
    pub fn from_fn(
        alphabet: Alphabet,
        states: usize,
        initial: usize,
        accepting: impl IntoIterator<Item = usize>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let k = alphabet.len();
        let delta = (0..states * k).map(|i| f(i / k, i % k)).collect();
        Self::new(alphabet, states, initial, accepting, delta)
    }

    /// One-state DFA for the empty language.
    pub fn empty_language(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa { alphabet, states: 1, delta: vec![0; k], initial: 0, accepting: vec![false] }
    }

    /// One-state DFA for `Σ*`.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa { alphabet, states: 1, delta: vec![0; k], initial: 0, accepting: vec![true] }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.states).filter(|&q| self.accepting[q])
    }

    #[inline]
    pub fn step(&self, q: usize, a: usize) -> usize {
        self.delta[q * self.alphabet.len() + a]
    }

    /// Extended transition function over symbol indices.
    pub fn run(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |q, &a| self.step(q, a))
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.accepting[self.run(self.initial, word)]
    }

    /// Membership test; symbols outside the alphabet are an error.
    pub fn accepts(&self, word: &Word) -> Result<bool> {
        Ok(self.accepts_indices(&self.alphabet.encode(word)?))
    }

    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        self.accepts(&Word::from(word))
    }

    pub fn check_state(&self, q: usize) -> Result<()> {
        if q < self.states {
            Ok(())
        } else {
            Err(Error::InvalidState { state: q, states: self.states })
        }
    }

    /// Same transitions, new accepting set.
    pub fn with_accepting(&self, accepting: Vec<bool>) -> Dfa {
        assert_eq!(accepting.len(), self.states);
        Dfa { accepting, ..self.clone() }
    }

    /// Same automaton with a single transition replaced.
    pub fn with_transition(&self, q: usize, a: usize, target: usize) -> Dfa {
        let mut d = self.clone();
        let k = d.alphabet.len();
        d.delta[q * k + a] = target;
        d
    }

    /// Re-expresses the automaton over a larger alphabet. New symbols lead
    /// to a fresh non-accepting sink.
    pub fn extend_alphabet(&self, sigma: &Alphabet) -> Result<Dfa> {
        if !self.alphabet.is_subset_of(sigma) {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: sigma.to_string(),
            });
        }
        if *sigma == self.alphabet {
            return Ok(self.clone());
        }
        let needs_sink = sigma.symbols().iter().any(|c| !self.alphabet.contains(*c));
        let states = self.states + usize::from(needs_sink);
        let sink = self.states;
        let map: Vec<Option<usize>> =
            sigma.symbols().iter().map(|c| self.alphabet.index_of(*c)).collect();
        Dfa::from_fn(sigma.clone(), states, self.initial, self.accepting_states(), |q, a| {
            match (q < self.states, map[a]) {
                (true, Some(old)) => self.step(q, old),
                _ => sink,
            }
        })
    }

    /// States reachable from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.states];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for a in 0..self.alphabet.len() {
                let t = self.step(q, a);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which some accepting state is reachable.
    pub fn coaccessible(&self) -> Vec<bool> {
        let mut preds = vec![Vec::new(); self.states];
        for q in 0..self.states {
            for a in 0..self.alphabet.len() {
                preds[self.step(q, a)].push(q);
            }
        }
        let mut seen = self.accepting.clone();
        let mut stack: Vec<usize> = self.accepting_states().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Renumbers the reachable part in breadth-first order under alphabet
    /// order, dropping unreachable states.
    pub fn canonical(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut index = vec![usize::MAX; self.states];
        let mut order = vec![self.initial];
        index[self.initial] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..k {
                let t = self.step(q, a);
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        let delta = order
            .iter()
            .flat_map(|&q| (0..k).map(move |a| (q, a)))
            .map(|(q, a)| index[self.step(q, a)])
            .collect();
        let accepting = order.iter().map(|&q| self.accepting[q]).collect();
        Dfa { alphabet: self.alphabet.clone(), states: order.len(), delta, initial: 0, accepting }
    }

    /// The minimal complete DFA, states in canonical breadth-first order.
    pub fn minimize(&self) -> Dfa {
        let d = self.canonical();
        let n = d.states;
        let k = d.alphabet.len();
        // Moore-style refinement: split by (own class, successor classes) until stable.
        let mut class: Vec<usize> = d.accepting.iter().map(|&f| usize::from(f)).collect();
        let mut count = class.iter().collect::<std::collections::HashSet<_>>().len();
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = vec![0; n];
            for q in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                sig.extend((0..k).map(|a| class[d.step(q, a)]));
                let fresh = ids.len();
                next[q] = *ids.entry(sig).or_insert(fresh);
            }
            let new_count = ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut delta = vec![0; count * k];
        let mut accepting = vec![false; count];
        for q in 0..n {
            accepting[class[q]] = d.accepting[q];
            for a in 0..k {
                delta[class[q] * k + a] = class[d.step(q, a)];
            }
        }
        Dfa { alphabet: d.alphabet, states: count, delta, initial: class[0], accepting }.canonical()
    }

    /// Deterministic state complexity of the accepted language.
    pub fn sc(&self) -> usize {
        self.minimize().states
    }

    pub fn is_minimal(&self) -> bool {
        self.sc() == self.states
    }

    /// Reachable product automaton; `(p, q)` accepts iff `combine(p ∈ F1, q ∈ F2)`.
    pub fn product(&self, other: &Dfa, combine: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            });
        }
        let k = self.alphabet.len();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut order = vec![(self.initial, other.initial)];
        index.insert(order[0], 0);
        let mut delta = Vec::new();
        let mut head = 0;
        while head < order.len() {
            let (p, q) = order[head];
            head += 1;
            for a in 0..k {
                let t = (self.step(p, a), other.step(q, a));
                let next = order.len();
                let id = *index.entry(t).or_insert(next);
                if id == next {
                    order.push(t);
                }
                delta.push(id);
            }
        }
        let accepting = order
            .iter()
            .enumerate()
            .filter(|(_, &(p, q))| combine(self.accepting[p], other.accepting[q]))
            .map(|(i, _)| i);
        Dfa::new(self.alphabet.clone(), order.len(), 0, accepting, delta)
    }

    pub fn is_empty(&self) -> bool {
        let reach = self.reachable();
        !(0..self.states).any(|q| reach[q] && self.accepting[q])
    }

    /// True iff the language is finite (no cycle on the trim part).
    pub fn is_finite(&self) -> bool {
        let reach = self.reachable();
        let co = self.coaccessible();
        let trim: Vec<bool> = (0..self.states).map(|q| reach[q] && co[q]).collect();
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut color = vec![0u8; self.states];
        for start in 0..self.states {
            if !trim[start] || color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (q, ref mut a)) = stack.last_mut() {
                if *a == self.alphabet.len() {
                    color[q] = 2;
                    stack.pop();
                    continue;
                }
                let t = self.step(q, *a);
                *a += 1;
                if !trim[t] {
                    continue;
                }
                match color[t] {
                    0 => {
                        color[t] = 1;
                        stack.push((t, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// `table[k][q]`: some accepting state is reachable from `q` in exactly `k` steps.
    pub(crate) fn exact_length_table(&self, max_len: usize) -> Vec<Vec<bool>> {
        let mut table = vec![self.accepting.clone()];
        for _ in 0..max_len {
            let prev = table.last().unwrap();
            let row = (0..self.states)
                .map(|q| (0..self.alphabet.len()).any(|a| prev[self.step(q, a)]))
                .collect();
            table.push(row);
        }
        table
    }

    /// All accepted words of length at most `max_len`, in length-lexicographic
    /// order (alphabet order), as symbol indices.
    pub fn enumerate_indices(&self, max_len: usize) -> Vec<Vec<usize>> {
        let table = self.exact_length_table(max_len);
        let mut out = Vec::new();
        for len in 0..=max_len {
            if !table[len][self.initial] {
                continue;
            }
            let mut word = Vec::with_capacity(len);
            self.collect_exact(self.initial, len, &table, &mut word, &mut out);
        }
        out
    }

    fn collect_exact(
        &self,
        q: usize,
        remaining: usize,
        table: &[Vec<bool>],
        word: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(word.clone());
            return;
        }
        for a in 0..self.alphabet.len() {
            let t = self.step(q, a);
            if table[remaining - 1][t] {
                word.push(a);
                self.collect_exact(t, remaining - 1, table, word, out);
                word.pop();
            }
        }
    }

    /// All accepted words of length at most `max_len`, length-lexicographically.
    pub fn enumerate_words(&self, max_len: usize) -> Vec<Word> {
        self.enumerate_indices(max_len)
            .iter()
            .map(|w| self.alphabet.decode(w))
            .collect()
    }

    /// Length-lexicographically least accepted word of length at least `min_len`.
    pub fn first_word_at_least(&self, min_len: usize) -> Option<Vec<usize>> {
        // If such a word exists, one exists below min_len + |Q|.
        let bound = min_len + self.states;
        let table = self.exact_length_table(bound);
        let len = (min_len..bound).find(|&l| table[l][self.initial])?;
        let mut q = self.initial;
        let mut word = Vec::with_capacity(len);
        for remaining in (1..=len).rev() {
            let a = (0..self.alphabet.len())
                .find(|&a| table[remaining - 1][self.step(q, a)])
                .expect("table guarantees a continuation");
            word.push(a);
            q = self.step(q, a);
        }
        Some(word)
    }

    /// Length-lexicographically least word leading from the initial state to
    /// each state (`None` for unreachable states).
    pub fn access_words(&self) -> Vec<Option<Vec<usize>>> {
        let mut access: Vec<Option<Vec<usize>>> = vec![None; self.states];
        access[self.initial] = Some(Vec::new());
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for a in 0..self.alphabet.len() {
                let t = self.step(q, a);
                if access[t].is_none() {
                    let mut w = access[q].clone().unwrap();
                    w.push(a);
                    access[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        access
    }

    /// Language equality; automata over different alphabets are compared
    /// over the union alphabet.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        let sigma = self.alphabet.union(&other.alphabet);
        let a = self.extend_alphabet(&sigma).expect("subset of union");
        let b = other.extend_alphabet(&sigma).expect("subset of union");
        a.product(&b, |x, y| x != y).expect("same alphabet").is_empty()
    }

    /// Line-oriented text serialization; see [`Dfa::from_text`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let join = |it: &mut dyn Iterator<Item = String>| -> String {
            it.map(|x| format!(" {x}")).collect()
        };
        let _ = writeln!(s, "alphabet:{}", join(&mut self.alphabet.symbols().iter().map(|c| c.to_string())));
        let _ = writeln!(s, "states: {}", self.states);
        let _ = writeln!(s, "initial: {}", self.initial);
        let _ = writeln!(s, "accepting:{}", join(&mut self.accepting_states().map(|q| q.to_string())));
        for q in 0..self.states {
            for (a, c) in self.alphabet.symbols().iter().enumerate() {
                let _ = writeln!(s, "delta: {q} {c} {}", self.step(q, a));
            }
        }
        s
    }

    /// Parses the text format:
    ///
    /// ```text
    /// alphabet: a b
    /// states: 2
    /// initial: 0
    /// accepting: 0
    /// delta: 0 a 0
    /// delta: 0 b 1
    /// delta: 1 a 1
    /// delta: 1 b 1
    /// ```
    ///
    /// Every `(state, symbol)` pair must appear exactly once, sorted by state
    /// and then alphabet order.
    pub fn from_text(text: &str) -> Result<Dfa> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let mut header = |key: &str| -> Result<(usize, Vec<String>)> {
            let (no, line) = lines.next().ok_or(Error::Format {
                line: 0,
                message: format!("missing `{key}:` line"),
            })?;
            let rest = line.trim().strip_prefix(key).and_then(|r| r.strip_prefix(':')).ok_or(
                Error::Format { line: no + 1, message: format!("expected `{key}:`") },
            )?;
            Ok((no + 1, rest.split_whitespace().map(str::to_owned).collect()))
        };
        let (no, syms) = header("alphabet")?;
        let mut chars = Vec::new();
        for s in syms {
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => chars.push(c),
                _ => return Err(Error::Format { line: no, message: format!("bad symbol `{s}`") }),
            }
        }
        let alphabet = Alphabet::new(chars)?;
        let number = |no: usize, s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Format { line: no, message: format!("bad number `{s}`") })
        };
        let single = |(no, v): (usize, Vec<String>)| -> Result<usize> {
            match v.as_slice() {
                [x] => number(no, x),
                _ => Err(Error::Format { line: no, message: "expected one number".into() }),
            }
        };
        let states = single(header("states")?)?;
        let initial = single(header("initial")?)?;
        let (no, acc) = header("accepting")?;
        let accepting = acc.iter().map(|s| number(no, s)).collect::<Result<Vec<_>>>()?;
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(states * k);
        for q in 0..states {
            for &c in alphabet.symbols() {
                let (no, parts) = header("delta")?;
                let [from, sym, to] = parts.as_slice() else {
                    return Err(Error::Format { line: no, message: "expected `delta: q a q'`".into() });
                };
                if number(no, from)? != q || sym.chars().collect::<Vec<_>>() != [c] {
                    return Err(Error::Format {
                        line: no,
                        message: format!("expected transition for ({q}, {c})"),
                    });
                }
                delta.push(number(no, to)?);
            }
        }
        if let Some((no, _)) = lines.next() {
            return Err(Error::Format { line: no + 1, message: "trailing content".into() });
        }
        Dfa::new(alphabet, states, initial, accepting, delta)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DfaJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Dfa> {
        let j: DfaJson = serde_json::from_str(text)?;
        j.try_into()
    }

    /// Accepts either serialization, choosing JSON when the text starts with `{`.
    pub fn parse_any(text: &str) -> Result<Dfa> {
        if text.trim_start().starts_with('{') {
            Dfa::from_json(text)
        } else {
            Dfa::from_text(text)
        }
    }
}

/// JSON mirror of the text format.
#[derive(Serialize, Deserialize)]
struct DfaJson {
    alphabet: Alphabet,
    states: usize,
    initial: usize,
    accepting: Vec<usize>,
    delta: Vec<(usize, char, usize)>,
}

impl From<&Dfa> for DfaJson {
    fn from(d: &Dfa) -> Self {
        let mut delta = Vec::new();
        for q in 0..d.states {
            for (a, &c) in d.alphabet.symbols().iter().enumerate() {
                delta.push((q, c, d.step(q, a)));
            }
        }
        DfaJson {
            alphabet: d.alphabet.clone(),
            states: d.states,
            initial: d.initial,
            accepting: d.accepting_states().collect(),
            delta,
        }
    }
}

impl TryFrom<DfaJson> for Dfa {
    type Error = Error;

    fn try_from(j: DfaJson) -> Result<Dfa> {
        let k = j.alphabet.len();
        let mut table = vec![None; j.states * k];
        for (no, &(q, c, t)) in j.delta.iter().enumerate() {
            let a = j.alphabet.index_of(c).ok_or(Error::UnknownSymbol(c))?;
            if q >= j.states {
                return Err(Error::InvalidState { state: q, states: j.states });
            }
            if table[q * k + a].replace(t).is_some() {
                return Err(Error::Format { line: no, message: format!("duplicate transition ({q}, {c})") });
            }
        }
        let delta = table
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                t.ok_or_else(|| Error::Format {
                    line: 0,
                    message: format!("missing transition ({}, {})", i / k, j.alphabet.symbol(i % k)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Dfa::new(j.alphabet, j.states, j.initial, j.accepting, delta)
    }
}

/// A DFA whose transition function may be undefined in places. Missing
/// transitions are routed to a sink by [`PartialDfa::complete`].
#[derive(Clone, Debug)]
pub struct PartialDfa {
    alphabet: Alphabet,
    states: usize,
    initial: usize,
    accepting: Vec<bool>,
    delta: Vec<Option<usize>>,
}

impl PartialDfa {
    pub fn new(alphabet: Alphabet, states: usize, initial: usize) -> Result<Self> {
        if initial >= states {
            return Err(Error::InvalidState { state: initial, states });
        }
        let k = alphabet.len();
        Ok(PartialDfa { alphabet, states, initial, accepting: vec![false; states], delta: vec![None; states * k] })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn set_accepting(&mut self, q: usize) -> Result<()> {
        if q >= self.states {
            return Err(Error::InvalidState { state: q, states: self.states });
        }
        self.accepting[q] = true;
        Ok(())
    }

    /// Defines `q · c = t`, overwriting any previous definition.
    pub fn set(&mut self, q: usize, c: char, t: usize) -> Result<()> {
        let a = self.alphabet.index_of(c).ok_or(Error::UnknownSymbol(c))?;
        for s in [q, t] {
            if s >= self.states {
                return Err(Error::InvalidState { state: s, states: self.states });
            }
        }
        self.delta[q * self.alphabet.len() + a] = Some(t);
        Ok(())
    }

    pub fn get(&self, q: usize, c: char) -> Option<usize> {
        let a = self.alphabet.index_of(c)?;
        self.delta[q * self.alphabet.len() + a]
    }

    /// Completes the automaton over `sigma` (which must contain its
    /// alphabet). A fresh sink is added only if some transition is missing.
    pub fn complete(&self, sigma: &Alphabet) -> Result<Dfa> {
        if !self.alphabet.is_subset_of(sigma) {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: sigma.to_string(),
            });
        }
        let k = self.alphabet.len();
        let lookup = |q: usize, c: char| self.alphabet.index_of(c).and_then(|a| self.delta[q * k + a]);
        let missing = (0..self.states).any(|q| sigma.symbols().iter().any(|&c| lookup(q, c).is_none()));
        let sink = self.states;
        let states = self.states + usize::from(missing);
        Dfa::from_fn(
            sigma.clone(),
            states,
            self.initial,
            (0..self.states).filter(|&q| self.accepting[q]),
            |q, a| if q == sink { sink } else { lookup(q, sigma.symbol(a)).unwrap_or(sink) },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    /// a* over {a, b}
    fn a_star() -> Dfa {
        Dfa::from_fn(ab(), 2, 0, [0], |q, a| if q == 0 && a == 0 { 0 } else { 1 }).unwrap()
    }

    #[test]
    fn membership_of_a_star() {
        let d = a_star();
        assert!(d.accepts_str("").unwrap());
        assert!(d.accepts_str("aaa").unwrap());
        assert!(!d.accepts_str("ab").unwrap());
        assert!(matches!(d.accepts_str("ac"), Err(Error::UnknownSymbol('c'))));
    }

    #[test]
    fn complete_adds_sink_only_when_needed() {
        let mut p = PartialDfa::new(Alphabet::from_chars("a").unwrap(), 1, 0).unwrap();
        p.set(0, 'a', 0).unwrap();
        p.set_accepting(0).unwrap();
        let d = p.complete(&ab()).unwrap();
        assert_eq!(d.num_states(), 2);
        assert!(d.equivalent(&a_star()));
        let same = p.complete(p.alphabet()).unwrap();
        assert_eq!(same.num_states(), 1);
        // completing a complete automaton is the identity
        let mut full = PartialDfa::new(ab(), 2, 0).unwrap();
        for (q, c, t) in [(0, 'a', 0), (0, 'b', 1), (1, 'a', 1), (1, 'b', 1)] {
            full.set(q, c, t).unwrap();
        }
        full.set_accepting(0).unwrap();
        assert_eq!(full.complete(&ab()).unwrap(), a_star());
    }

    #[test]
    fn minimize_merges_equivalent_accepting_sinks() {
        // 0 -a-> 1, 0 -b-> 2, both 1 and 2 accepting sinks
        let d = Dfa::from_fn(ab(), 3, 0, [1, 2], |q, a| if q == 0 { 1 + a } else { q }).unwrap();
        let m = d.minimize();
        assert_eq!(m.num_states(), 2);
        assert!(m.equivalent(&d));
        assert_eq!(m.minimize(), m);
    }

    #[test]
    fn emptiness_and_finiteness() {
        let e = Dfa::empty_language(ab());
        assert!(e.is_empty() && e.is_finite());
        assert_eq!(e.sc(), 1);
        let even = Dfa::from_fn(Alphabet::from_chars("a").unwrap(), 2, 0, [0], |q, _| 1 - q).unwrap();
        assert!(!even.is_empty() && !even.is_finite());
        assert!(a_star().enumerate_words(2) == vec![Word::empty(), Word::from("a"), Word::from("aa")]);
        assert!(e.enumerate_words(5).is_empty());
    }

    #[test]
    fn product_with_complement_is_empty() {
        let d = a_star();
        let c = d.with_accepting((0..2).map(|q| !d.is_accepting(q)).collect());
        assert!(d.product(&c, |x, y| x && y).unwrap().is_empty());
        let e = Dfa::empty_language(ab());
        assert!(d.product(&e, |x, y| x || y).unwrap().equivalent(&d));
        let other = Dfa::universal(Alphabet::from_chars("ba").unwrap());
        assert!(matches!(d.product(&other, |x, _| x), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn text_format_round_trip() {
        let d = a_star();
        let text = d.to_text();
        assert_eq!(
            text,
            "alphabet: a b\nstates: 2\ninitial: 0\naccepting: 0\n\
             delta: 0 a 0\ndelta: 0 b 1\ndelta: 1 a 1\ndelta: 1 b 1\n"
        );
        assert_eq!(Dfa::from_text(&text).unwrap(), d);
        assert_eq!(Dfa::from_json(&d.to_json()).unwrap(), d);
        let empty = Dfa::empty_language(ab());
        assert!(empty.to_text().contains("accepting:\n"));
        assert_eq!(Dfa::parse_any(&empty.to_text()).unwrap(), empty);
    }

    #[test]
    fn text_format_rejects_out_of_order_transitions() {
        let bad = "alphabet: a b\nstates: 1\ninitial: 0\naccepting:\ndelta: 0 b 0\ndelta: 0 a 0\n";
        assert!(matches!(Dfa::from_text(bad), Err(Error::Format { line: 5, .. })));
    }

    #[test]
    fn first_word_at_least() {
        let d = a_star();
        assert_eq!(d.first_word_at_least(3), Some(vec![0, 0, 0]));
        let e = Dfa::empty_language(ab());
        assert_eq!(e.first_word_at_least(0), None);
    }
}

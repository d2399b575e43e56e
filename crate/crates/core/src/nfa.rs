//! Nondeterministic automata with ε-moves, used as the intermediate form
//! for reversal, closures, concatenation, star and regex compilation.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    /// `delta[q][a]`: successor states on symbol `a`.
    delta: Vec<Vec<Vec<usize>>>,
    epsilon: Vec<Vec<usize>>,
    initials: Vec<usize>,
    accepting: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa { alphabet, delta: Vec::new(), epsilon: Vec::new(), initials: Vec::new(), accepting: Vec::new() }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn add_state(&mut self, accepting: bool) -> usize {
        self.delta.push(vec![Vec::new(); self.alphabet.len()]);
        self.epsilon.push(Vec::new());
        self.accepting.push(accepting);
        self.delta.len() - 1
    }

    fn check(&self, q: usize) -> Result<()> {
        if q < self.num_states() {
            Ok(())
        } else {
            Err(Error::InvalidState { state: q, states: self.num_states() })
        }
    }

    pub fn add_transition(&mut self, from: usize, a: usize, to: usize) -> Result<()> {
        self.check(from)?;
        self.check(to)?;
        if a >= self.alphabet.len() {
            return Err(Error::Index(format!("symbol index {a}")));
        }
        self.delta[from][a].push(to);
        Ok(())
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) -> Result<()> {
        self.check(from)?;
        self.check(to)?;
        self.epsilon[from].push(to);
        Ok(())
    }

    pub fn add_initial(&mut self, q: usize) -> Result<()> {
        self.check(q)?;
        self.initials.push(q);
        Ok(())
    }

    pub fn set_accepting(&mut self, q: usize, accepting: bool) -> Result<()> {
        self.check(q)?;
        self.accepting[q] = accepting;
        Ok(())
    }

    /// Copies every state and transition of `d`; returns the offset of state 0.
    pub fn embed_dfa(&mut self, d: &Dfa) -> Result<usize> {
        if d.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: d.alphabet().to_string(),
            });
        }
        let offset = self.num_states();
        for q in 0..d.num_states() {
            self.add_state(d.is_accepting(q));
        }
        for q in 0..d.num_states() {
            for a in 0..self.alphabet.len() {
                self.delta[offset + q][a].push(offset + d.step(q, a));
            }
        }
        Ok(offset)
    }

    /// The NFA obtained from `d` by forgetting determinism.
    pub fn from_dfa(d: &Dfa) -> Nfa {
        let mut n = Nfa::new(d.alphabet().clone());
        n.embed_dfa(d).expect("same alphabet");
        n.initials.push(d.initial());
        n
    }

    /// NFA for the reversed language: edges flipped, initial and accepting swapped.
    pub fn reverse_of(d: &Dfa) -> Nfa {
        let mut n = Nfa::new(d.alphabet().clone());
        for q in 0..d.num_states() {
            n.add_state(q == d.initial());
        }
        for q in 0..d.num_states() {
            for a in 0..d.alphabet().len() {
                n.delta[d.step(q, a)][a].push(q);
            }
        }
        n.initials = d.accepting_states().collect();
        n
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &t in &self.epsilon[q] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    /// Subset construction from the ε-closure of the initial states. The
    /// result is complete (the empty subset acts as sink) but not minimized.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut start: BTreeSet<usize> = self.initials.iter().copied().collect();
        self.closure(&mut start);
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta = Vec::new();
        let mut head = 0;
        while head < subsets.len() {
            for a in 0..k {
                let mut next: BTreeSet<usize> =
                    subsets[head].iter().flat_map(|&q| self.delta[q][a].iter().copied()).collect();
                self.closure(&mut next);
                let fresh = subsets.len();
                let id = *index.entry(next.clone()).or_insert(fresh);
                if id == fresh {
                    subsets.push(next);
                }
                delta.push(id);
            }
            head += 1;
        }
        let accepting = subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.iter().any(|&q| self.accepting[q]))
            .map(|(i, _)| i);
        Dfa::new(self.alphabet.clone(), subsets.len(), 0, accepting, delta).expect("well-formed subset automaton")
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let mut cur: BTreeSet<usize> = self.initials.iter().copied().collect();
        self.closure(&mut cur);
        for &a in word {
            let mut next: BTreeSet<usize> = cur.iter().flat_map(|&q| self.delta[q][a].iter().copied()).collect();
            self.closure(&mut next);
            cur = next;
        }
        cur.iter().any(|&q| self.accepting[q])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Word;

    #[test]
    fn single_accepting_initial_state_gives_empty_word_only() {
        let mut n = Nfa::new(Alphabet::from_chars("a").unwrap());
        let q = n.add_state(true);
        n.add_initial(q).unwrap();
        let d = n.determinize().minimize();
        assert_eq!(d.enumerate_words(4), vec![Word::empty()]);
        assert_eq!(d.num_states(), 2);
    }

    #[test]
    fn reversal_of_ab_is_ba() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        // 0 -a-> 1 -b-> 2 (accepting), 3 sink
        let d = Dfa::from_fn(sigma, 4, 0, [2], |q, a| match (q, a) {
            (0, 0) => 1,
            (1, 1) => 2,
            _ => 3,
        })
        .unwrap();
        let r = Nfa::reverse_of(&d).determinize();
        assert_eq!(r.enumerate_words(4), vec![Word::from("ba")]);
    }

    #[test]
    fn epsilon_moves_are_followed() {
        let mut n = Nfa::new(Alphabet::from_chars("ab").unwrap());
        let s = n.add_state(false);
        let t = n.add_state(false);
        let f = n.add_state(true);
        n.add_initial(s).unwrap();
        n.add_epsilon(s, t).unwrap();
        n.add_transition(t, 1, f).unwrap();
        assert!(n.accepts_indices(&[1]));
        assert!(!n.accepts_indices(&[0]));
        assert!(n.determinize().accepts_str("b").unwrap());
        assert!(n.add_transition(f, 0, 9).is_err());
    }
}

//! Seeded random automata.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;

/// Letters used for random alphabets, in order.
const LETTERS: &str = "abcdefgh";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomDfaParams {
    pub states: RangeInclusive<usize>,
    pub alphabet: RangeInclusive<usize>,
    /// Probability that a state is accepting.
    pub density: f64,
    pub seed: u64,
}

impl Default for RandomDfaParams {
    fn default() -> Self {
        RandomDfaParams { states: 1..=6, alphabet: 1..=3, density: 0.5, seed: 0 }
    }
}

impl RandomDfaParams {
    pub fn new(states: RangeInclusive<usize>, alphabet: RangeInclusive<usize>, seed: u64) -> Self {
        RandomDfaParams { states, alphabet, seed, ..Default::default() }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        RandomDfaParams { seed, ..self.clone() }
    }

    pub fn with_density(&self, density: f64) -> Self {
        RandomDfaParams { density, ..self.clone() }
    }
}

/// A complete DFA drawn from `params`; the same parameters always give the
/// same automaton. Transitions are uniform, the initial state is `0`.
pub fn random_dfa(params: &RandomDfaParams) -> Dfa {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = rng.gen_range(params.states.clone()).max(1);
    let k = rng.gen_range(params.alphabet.clone()).clamp(1, LETTERS.len());
    let alphabet = Alphabet::from_chars(&LETTERS[..k]).expect("distinct letters");
    let delta = (0..n * k).map(|_| rng.gen_range(0..n)).collect();
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(params.density.clamp(0.0, 1.0))).collect();
    Dfa::new(alphabet, n, 0, accepting, delta).expect("generated within range")
}

/// The `i`-th instance of a seeded population.
pub fn instance_seed(base: u64, i: usize) -> u64 {
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_automaton() {
        let p = RandomDfaParams::new(1..=6, 1..=3, 42);
        assert_eq!(random_dfa(&p).to_text(), random_dfa(&p).to_text());
        assert_ne!(random_dfa(&p).to_text(), random_dfa(&p.with_seed(43)).to_text());
    }

    #[test]
    fn density_extremes() {
        for seed in 0..20 {
            let p = RandomDfaParams::new(1..=6, 1..=3, seed);
            assert!(random_dfa(&p.with_density(0.0)).is_empty());
            let full = random_dfa(&p.with_density(1.0));
            assert_eq!(full.sc(), 1);
        }
    }

    #[test]
    fn respects_caps() {
        for seed in 0..50 {
            let d = random_dfa(&RandomDfaParams::new(2..=4, 2..=2, seed));
            assert!((2..=4).contains(&d.num_states()));
            assert_eq!(d.alphabet().len(), 2);
        }
    }
}

//! Randomized invariants over seeded automata.

use minpump::harness::{random_dfa, RandomDfaParams};
use minpump::langops::{complement, downward_closure, prefix_closure, reversal, star, suffix_closure, union};
use minpump::oracle::{cross_validate, oracle_bounds};
use minpump::{Analyzer, Dfa};
use proptest::prelude::*;

fn dfa(states: usize, letters: usize, seed: u64) -> Dfa {
    random_dfa(&RandomDfaParams::new(1..=states, 1..=letters, seed))
}

fn constants(d: &Dfa) -> [usize; 4] {
    Analyzer::default().constants(d).expect("small machines stay within budget")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chain_holds(seed in any::<u64>()) {
        let [c, l, s, sc] = constants(&dfa(6, 3, seed));
        prop_assert!(c <= l && l <= s && s <= sc, "({c}, {l}, {s}, {sc})");
    }

    #[test]
    fn reversal_keeps_mpc_and_mps(seed in any::<u64>()) {
        let d = dfa(5, 3, seed);
        let (a, b) = (constants(&d), constants(&reversal(&d)));
        prop_assert_eq!((a[0], a[2]), (b[0], b[2]));
    }

    #[test]
    fn star_has_mpc_one(seed in any::<u64>()) {
        prop_assert_eq!(constants(&star(&dfa(5, 3, seed)))[0], 1);
    }

    #[test]
    fn complement_is_an_involution(seed in any::<u64>()) {
        let d = dfa(6, 3, seed);
        prop_assert_eq!(complement(&complement(&d)).to_text(), d.minimize().to_text());
    }

    #[test]
    fn sc_is_minimal_state_count(seed in any::<u64>()) {
        let d = dfa(6, 3, seed);
        let m = d.minimize();
        prop_assert!(m.equivalent(&d));
        prop_assert_eq!(constants(&d)[3], m.num_states());
        prop_assert_eq!(m.minimize().to_text(), m.to_text());
    }

    #[test]
    fn text_and_json_round_trip(seed in any::<u64>()) {
        let d = dfa(6, 3, seed);
        prop_assert_eq!(Dfa::from_text(&d.to_text()).unwrap().to_text(), d.to_text());
        prop_assert_eq!(Dfa::from_json(&d.to_json()).unwrap().to_text(), d.to_text());
    }

    #[test]
    fn random_machines_are_reproducible(seed in any::<u64>()) {
        prop_assert_eq!(dfa(6, 3, seed).to_text(), dfa(6, 3, seed).to_text());
    }

    #[test]
    fn oracle_never_exceeds_exact(seed in any::<u64>()) {
        let d = dfa(4, 2, seed);
        let cv = cross_validate(&d, 9).unwrap();
        prop_assert!(cv.ok(), "{:?}", cv.hard_failures);
        // an unpumpable accepted word is shorter than sc, so mpc is exact here
        prop_assert_eq!(cv.oracle[0], cv.exact[0]);
    }

    #[test]
    fn mps_one_means_closed(seed in any::<u64>()) {
        let d = dfa(4, 2, seed);
        let [c, l, s, _] = constants(&d);
        if s == 1 {
            prop_assert!(prefix_closure(&d).equivalent(&d));
            prop_assert!(suffix_closure(&d).equivalent(&d));
            prop_assert!(downward_closure(&d).equivalent(&d));
        }
        if l == 1 {
            prop_assert!(suffix_closure(&d).equivalent(&d));
        }
        if c == 1 {
            prop_assert!(d.accepts_indices(&[]));
        }
    }

    #[test]
    fn union_never_exceeds_larger_operand(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (dfa(4, 2, a), dfa(4, 2, b));
        let (k, m, n) = (constants(&union(&x, &y)), constants(&x), constants(&y));
        for i in 0..3 {
            prop_assert!(k[i] <= m[i].max(n[i]), "{k:?} {m:?} {n:?}");
        }
    }
}

#[test]
fn oracle_bounds_grow_with_the_bound() {
    for seed in 0..50 {
        let d = dfa(5, 2, seed);
        let (lo, hi) = (oracle_bounds(&d, 5).values(), oracle_bounds(&d, 10).values());
        assert!(lo.iter().zip(&hi).all(|(a, b)| a <= b), "seed {seed}: {lo:?} {hi:?}");
    }
}

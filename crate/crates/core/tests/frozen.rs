//! Values worked out by hand or by the brute-force oracle, frozen.

use minpump::langops::{intersection, loopify};
use minpump::oracle::oracle_bounds;
use minpump::witnesses::{footnote_family, intersection_witness, quinary_literal, thm_binary, thm_quinary};
use minpump::{parse_regex, Alphabet, Analyzer, Dfa};

fn constants(d: &Dfa) -> [usize; 4] {
    Analyzer::default().constants(d).unwrap()
}

fn regex(expr: &str, letters: &str) -> Dfa {
    parse_regex(expr, &Alphabet::from_chars(letters).unwrap()).unwrap()
}

#[test]
fn example_language() {
    let d = regex("a^* + a^*bb^* + a^*bb^*aa^* + a^*bb^*aa^*bb^*", "ab");
    assert_eq!(constants(&d), [1, 1, 1, 5]);
}

#[test]
fn small_regexes() {
    // b and aa are the longest unpumpable words; aba pumps its b
    assert_eq!(constants(&regex("ab^*a + b", "ab")), [3, 3, 3, 4]);
    assert_eq!(constants(&regex("(a^2)^* + (b^3)^*", "ab")), [1, 3, 3, 7]);
    for n in 1..=5 {
        assert_eq!(constants(&regex(&format!("a^{{{n}}}a^*"), "a"))[0], n + 1);
    }
}

#[test]
fn oracle_matches_small_regexes() {
    for (expr, want) in [("ab^*a + b", [3, 3, 3]), ("(a^2)^* + (b^3)^*", [1, 3, 3])] {
        assert_eq!(oracle_bounds(&regex(expr, "ab"), 10).values(), want, "{expr}");
    }
}

#[test]
fn binary_and_quinary_samples() {
    let c = constants(&thm_binary(2, 3, 5).unwrap());
    assert_eq!((c[0], c[1], c[3]), (2, 3, 5));
    assert_eq!(constants(&thm_quinary(2, 3, 4, 4).unwrap()), [2, 3, 4, 4]);
    assert_eq!(constants(&thm_quinary(1, 2, 2, 7).unwrap()), [1, 2, 2, 7]);
}

#[test]
fn literal_quinary_construction_misses_some_tuples() {
    let d = quinary_literal(2, 3, 4, 4);
    assert_eq!(constants(&d), [2, 4, 4, 4]);
    assert!(d.accepts_str("acabb").unwrap());
}

#[test]
fn footnote_family_state_counts() {
    for ((p1, p2, p3), sc) in [((1, 1, 2), 2), ((1, 1, 3), 4), ((1, 2, 4), 5), ((1, 3, 6), 7), ((2, 2, 4), 4)] {
        let w = footnote_family(p1, p2, p3).unwrap();
        assert_eq!(w.expected_sc, sc);
        assert_eq!(constants(&w.dfa)[3], sc, "({p1}, {p2}, {p3})");
    }
}

#[test]
fn intersection_sample() {
    let (x, y) = intersection_witness(2, 2, 4).unwrap();
    let (cx, cy, ci) = (constants(&x), constants(&y), constants(&intersection(&x, &y)));
    assert_eq!((cx[1], cy[1], ci[1]), (2, 2, 4));
    assert_eq!((cx[2], cy[2], ci[2]), (2, 2, 4));
}

/// Redirecting `0 a` onto a self-loop raises mpl and mps: in the original
/// machine `bbbab` pumps `bbb` down to `ab`, which the modified machine
/// rejects.
#[test]
fn loop_modification_can_raise_mpl_and_mps() {
    let text = "alphabet: a b c
states: 5
initial: 0
accepting: 0 1
delta: 0 a 1
delta: 0 b 2
delta: 0 c 0
delta: 1 a 1
delta: 1 b 1
delta: 1 c 1
delta: 2 a 3
delta: 2 b 4
delta: 2 c 1
delta: 3 a 1
delta: 3 b 2
delta: 3 c 4
delta: 4 a 3
delta: 4 b 3
delta: 4 c 0
";
    let d = Dfa::from_text(text).unwrap();
    assert!(d.is_minimal());
    let b = loopify(&d, 0, 'a').unwrap().minimal;
    assert_eq!(constants(&d), [1, 4, 4, 5]);
    assert_eq!(constants(&b), [1, 5, 5, 5]);
    assert_eq!(oracle_bounds(&d, 10).values(), [1, 4, 4]);
    assert_eq!(oracle_bounds(&b, 10).values(), [1, 5, 5]);
    assert!(d.accepts_str("ab").unwrap() && !b.accepts_str("ab").unwrap());
}

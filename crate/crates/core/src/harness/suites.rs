use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::random::{instance_seed, random_dfa, RandomDfaParams};
use super::table1::{expected, Operation};
use super::{ExperimentResult, VerifyConfig, DEFAULT_SAMPLES};
use crate::dfa::Dfa;
use crate::error::Result;
use crate::langops::{self, sigma, UnaryOp};
use crate::oracle::cross_validate_with;
use crate::pumping::PumpKind;
use crate::regex::parse_regex;
use crate::witnesses::{
    b_plus, b_star, footnote_family, intersection_witness, star_witness, thm_binary, thm_quinary_unchecked,
};

pub(super) fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn texts(ds: &[&Dfa]) -> String {
    ds.iter().map(|d| d.to_text()).collect::<Vec<_>>().join("\n")
}

fn measure(cfg: &VerifyConfig, d: &Dfa, kind: PumpKind) -> Result<usize> {
    let an = &cfg.analyzer;
    Ok(match kind {
        PumpKind::Mpc => an.mpc(d)?.value,
        PumpKind::Mpl => an.mpl(d)?.value,
        PumpKind::Mps => an.mps(d)?.value,
    })
}

fn kind_index(kind: PumpKind) -> usize {
    match kind {
        PumpKind::Mpc => 0,
        PumpKind::Mpl => 1,
        PumpKind::Mps => 2,
    }
}

/// Seeded random automata, numbered from 0.
fn population(cfg: &VerifyConfig, params: &RandomDfaParams) -> impl Iterator<Item = (u64, Dfa)> {
    let (base, params) = (cfg.seed, params.clone());
    (0..).map(move |i| {
        let seed = instance_seed(base, i);
        (seed, random_dfa(&params.with_seed(seed)))
    })
}

pub fn binary(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let cap = cfg.cap(8);
    let mut out = Vec::new();
    for p3 in 1..=cap {
        for p2 in 1..=p3 {
            for p1 in 1..=p2 {
                let inputs = vec![p1, p2, p3];
                let exp = format!("(mpc, mpl, sc) = {}", tuple(&inputs));
                let r = thm_binary(p1, p2, p3).and_then(|d| {
                    let c = cfg.analyzer.constants(&d)?;
                    Ok((d, c))
                });
                out.push(match r {
                    Ok((d, c)) => {
                        let pass = (c[0], c[1], c[3]) == (p1, p2, p3);
                        ExperimentResult::new("binary", inputs, c.to_vec(), exp, pass).instance(|| d.to_text())
                    }
                    Err(e) => ExperimentResult::errored("binary", inputs, exp, &e, String::new()),
                });
            }
        }
    }
    out
}

pub fn quinary(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let cap = cfg.cap(7);
    let mut out = Vec::new();
    for p4 in 1..=cap {
        for p3 in 1..=p4 {
            for p2 in 1..=p3 {
                for p1 in 1..=p2 {
                    let inputs = vec![p1, p2, p3, p4];
                    let exp = format!("(mpc, mpl, mps, sc) = {}", tuple(&inputs));
                    let r = thm_quinary_unchecked(p1, p2, p3, p4).and_then(|d| {
                        let c = cfg.analyzer.constants(&d)?;
                        Ok((d, c))
                    });
                    out.push(match r {
                        Ok((d, c)) => {
                            let pass = c.to_vec() == inputs;
                            ExperimentResult::new("quinary", inputs, c.to_vec(), exp, pass).instance(|| d.to_text())
                        }
                        Err(e) => ExperimentResult::errored("quinary", inputs, exp, &e, String::new()),
                    });
                }
            }
        }
    }
    out
}

pub fn star(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let cap = cfg.cap(5);
    let mut out = Vec::new();
    let run = |d: &Dfa| -> Result<Vec<usize>> {
        Ok(vec![measure(cfg, d, PumpKind::Mps)?, measure(cfg, &langops::star(d), PumpKind::Mps)?])
    };
    for n in 1..=cap {
        for k in 1..2 * n {
            let exp = format!("(mps(L), mps(L*)) = ({n}, {k})");
            out.push(match star_witness(n, k).and_then(|d| Ok((run(&d)?, d))) {
                Ok((obs, d)) => {
                    let pass = obs == [n, k];
                    ExperimentResult::new("star", vec![n, k], obs, exp, pass).instance(|| d.to_text())
                }
                Err(e) => ExperimentResult::errored("star", vec![n, k], exp, &e, String::new()),
            });
        }
    }
    let empty = Dfa::empty_language(sigma("ab"));
    let exp = "(mps(∅), mps(∅*)) = (0, 1)";
    out.push(match run(&empty) {
        Ok(obs) => {
            let pass = obs == [0, 1];
            ExperimentResult::new("star(∅)", vec![0, 1], obs, exp, pass).instance(|| empty.to_text())
        }
        Err(e) => ExperimentResult::errored("star(∅)", vec![0, 1], exp, &e, empty.to_text()),
    });
    out
}

pub fn star_bound(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let samples = cfg.samples(DEFAULT_SAMPLES);
    let params = RandomDfaParams { states: 1..=cfg.cap(6), ..Default::default() };
    let mut out = Vec::new();
    for (seed, d) in population(cfg, &params).take(samples * 20) {
        if out.len() == samples {
            break;
        }
        if d.is_empty() {
            continue;
        }
        let r = (|| Ok::<_, crate::Error>((measure(cfg, &d, PumpKind::Mps)?, measure(cfg, &langops::star(&d), PumpKind::Mps)?)))();
        out.push(match r {
            Ok((n, k)) => {
                let bound = (2 * n).saturating_sub(1).max(1);
                ExperimentResult::new("star-bound", vec![n], vec![k], format!("≤ {bound}"), k <= bound)
                    .seeded(seed)
                    .instance(|| d.to_text())
            }
            Err(e) => ExperimentResult::errored("star-bound", Vec::new(), "≤ max(1, 2n − 1)", &e, d.to_text()).seeded(seed),
        });
    }
    out
}

pub fn intersection(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let cap = cfg.cap(4);
    let mut out = Vec::new();
    for m in 1..=cap {
        for n in 1..=cap {
            for k in 0..=2 * cap {
                let Ok((x, y)) = intersection_witness(m, n, k) else { continue };
                let meet = langops::intersection(&x, &y);
                for kind in [PumpKind::Mpl, PumpKind::Mps] {
                    let op = format!("intersection/{kind}");
                    let exp = format!("{} = ({m}, {n}, {k})", kind.name());
                    let r = (|| Ok::<_, crate::Error>(vec![measure(cfg, &x, kind)?, measure(cfg, &y, kind)?, measure(cfg, &meet, kind)?]))();
                    out.push(match r {
                        Ok(obs) => {
                            let pass = obs == [m, n, k];
                            ExperimentResult::new(op, vec![m, n, k], obs, exp, pass).instance(|| texts(&[&x, &y]))
                        }
                        Err(e) => ExperimentResult::errored(op, vec![m, n, k], exp, &e, texts(&[&x, &y])),
                    });
                }
            }
        }
    }
    out.extend(rigidity(cfg));
    out
}

/// Random pairs with constant 1 under `mpl` (resp. `mps`) must intersect to a
/// language with constant 1.
fn rigidity(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let pairs = cfg.samples(DEFAULT_SAMPLES) / 5;
    let params = RandomDfaParams::new(1..=3, 1..=2, 0);
    let mut out = Vec::new();
    for kind in [PumpKind::Mpl, PumpKind::Mps] {
        let mut pool: Vec<(u64, Dfa)> = Vec::new();
        for (seed, d) in population(cfg, &params).take(pairs * 200) {
            if pool.len() == 2 * pairs {
                break;
            }
            if measure(cfg, &d, kind).is_ok_and(|v| v == 1) {
                pool.push((seed, d));
            }
        }
        for pair in pool.chunks_exact(2) {
            let ((s1, x), (_, y)) = (&pair[0], &pair[1]);
            let op = format!("intersection-rigidity/{kind}");
            let exp = format!("{} = 1", kind.name());
            out.push(match measure(cfg, &langops::intersection(x, y), kind) {
                Ok(v) => ExperimentResult::new(op, vec![1, 1], vec![v], exp, v == 1)
                    .seeded(*s1)
                    .instance(|| texts(&[x, y])),
                Err(e) => ExperimentResult::errored(op, vec![1, 1], exp, &e, texts(&[x, y])).seeded(*s1),
            });
        }
    }
    out
}

pub fn chain(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let samples = cfg.samples(2 * DEFAULT_SAMPLES);
    let params = RandomDfaParams { states: 1..=cfg.cap(6), ..Default::default() };
    population(cfg, &params)
        .take(samples)
        .map(|(seed, d)| match cfg.analyzer.constants(&d) {
            Ok(c) => {
                let pass = c[0] <= c[1] && c[1] <= c[2] && c[2] <= c[3];
                ExperimentResult::new("chain", Vec::new(), c.to_vec(), "mpc ≤ mpl ≤ mps ≤ sc", pass)
                    .seeded(seed)
                    .instance(|| d.to_text())
            }
            Err(e) => ExperimentResult::errored("chain", Vec::new(), "mpc ≤ mpl ≤ mps ≤ sc", &e, d.to_text()).seeded(seed),
        })
        .collect()
}

/// Every table row under every measure, on one random population: operand
/// `i` of a binary row is paired with operand `i + samples`.
pub fn table1(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let samples = cfg.samples(DEFAULT_SAMPLES);
    let params = RandomDfaParams { states: 1..=cfg.cap(6), ..Default::default() };
    let operands: Vec<(u64, Dfa)> = population(cfg, &params).take(2 * samples).collect();
    let consts: Vec<Result<[usize; 4]>> = operands.iter().map(|(_, d)| cfg.analyzer.constants(d)).collect();
    let mut out = Vec::new();
    for op in Operation::rows() {
        for i in 0..samples {
            let (seed, d1) = &operands[i];
            let (_, d2) = &operands[i + samples];
            let (result, ins, inputs): (Dfa, Vec<&Dfa>, Result<Vec<[usize; 4]>>) = match op {
                Operation::Unary(u) => (u.apply(d1), vec![d1], copy(&consts[i]).map(|c| vec![c])),
                Operation::Binary(b) => (
                    b.apply(d1, d2),
                    vec![d1, d2],
                    copy(&consts[i]).and_then(|c1| Ok(vec![c1, copy(&consts[i + samples])?])),
                ),
            };
            let observed = inputs.and_then(|ins| Ok((ins, cfg.analyzer.constants(&result)?)));
            for kind in PumpKind::ALL {
                let name = format!("{op}/{kind}");
                let ki = kind_index(kind);
                out.push(match &observed {
                    Ok((ins_c, res_c)) => {
                        let input: Vec<usize> = ins_c.iter().map(|c| c[ki]).collect();
                        let set = expected(op, kind, &input).expect("table rows have entries");
                        let k = res_c[ki];
                        ExperimentResult::new(name, input, vec![k], set.to_string(), set.contains(k))
                            .seeded(*seed)
                            .instance(|| texts(&ins))
                    }
                    Err(e) => ExperimentResult::errored(name, Vec::new(), "", e, texts(&ins)).seeded(*seed),
                });
            }
        }
    }
    out
}

fn copy(r: &Result<[usize; 4]>) -> Result<[usize; 4]> {
    match r {
        Ok(c) => Ok(*c),
        Err(e) => Err(crate::Error::Parameters(format!("operand analysis failed: {e}"))),
    }
}

pub fn loopify(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let samples = cfg.samples(DEFAULT_SAMPLES);
    let params = RandomDfaParams { states: 1..=cfg.cap(6), ..Default::default() };
    population(cfg, &params)
        .take(samples)
        .map(|(seed, d)| {
            let m = d.minimize();
            let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(17));
            let q = rng.gen_range(0..m.num_states());
            let a = m.alphabet().symbol(rng.gen_range(0..m.alphabet().len()));
            let exp = "K(loopified) ≤ K(d) for mpc, mpl, mps";
            let r = (|| {
                let looped = langops::loopify(&m, q, a)?;
                Ok::<_, crate::Error>((cfg.analyzer.constants(&m)?, cfg.analyzer.constants(&looped.minimal)?))
            })();
            match r {
                Ok((before, after)) => {
                    let pass = (0..3).all(|i| after[i] <= before[i]);
                    ExperimentResult::new("loopify", before[..3].to_vec(), after[..3].to_vec(), exp, pass)
                        .seeded(seed)
                        .instance(|| m.to_text())
                        .note(format!("state {q}, symbol {a}"))
                }
                Err(e) => ExperimentResult::errored("loopify", Vec::new(), exp, &e, m.to_text()).seeded(seed),
            }
        })
        .collect()
}

/// Constructed languages for the closure checks.
fn constructed() -> Vec<(String, Dfa)> {
    let mut out = Vec::new();
    for k in 0..=6 {
        out.push((format!("b_plus({k})"), b_plus(k)));
        out.push((format!("b_star({k})"), b_star(k)));
    }
    for p3 in 1..=5 {
        for p2 in 1..=p3 {
            for p1 in 1..=p2 {
                if let Ok(d) = thm_binary(p1, p2, p3) {
                    out.push((format!("binary({p1}, {p2}, {p3})"), d));
                }
                if p2 < p3 {
                    if let Ok(f) = footnote_family(p1, p2, p3) {
                        out.push((format!("footnote({p1}, {p2}, {p3})"), f.dfa));
                    }
                }
            }
        }
    }
    for n in 1..=4 {
        for k in 1..2 * n {
            if let Ok(d) = star_witness(n, k) {
                out.push((format!("star_witness({n}, {k})"), d.clone()));
                out.push((format!("star(star_witness({n}, {k}))"), langops::star(&d)));
            }
        }
    }
    for expr in ["(a+b)^*", "a^*b^*", "(a + λ)(b + λ)", "λ", "a^*", "(a+b+c)^*", "a^*b^*c^*"] {
        let d = parse_regex(expr, &sigma("abc")).expect("fixed expression");
        out.push((expr.to_string(), d));
    }
    out
}

pub fn closure(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let samples = cfg.samples(DEFAULT_SAMPLES);
    let params = RandomDfaParams { states: 1..=cfg.cap(6), ..Default::default() };
    let mut langs: Vec<(String, Option<u64>, Dfa)> = constructed().into_iter().map(|(n, d)| (n, None, d)).collect();
    for (seed, d) in population(cfg, &params).take(samples) {
        langs.push(("downward closure".into(), Some(seed), langops::downward_closure(&d)));
        langs.push(("random".into(), Some(seed), d));
    }
    for (seed, d) in population(cfg, &params.with_density(1.0)).take(samples / 10) {
        langs.push(("random, all accepting".into(), Some(seed), d));
    }
    langs
        .into_iter()
        .map(|(source, seed, d)| {
            let op = format!("closure:{source}");
            let exp = "mps = 1 ⇒ L = Pref(L) = Suff(L) = Down(L); mpl = 1 ⇒ L = Suff(L); mpc = 1 ⇒ λ ∈ L";
            let r = match cfg.analyzer.constants(&d) {
                Ok(c) => {
                    let mut broken = Vec::new();
                    if c[2] == 1 {
                        for op in [UnaryOp::PrefixClosure, UnaryOp::SuffixClosure, UnaryOp::DownwardClosure] {
                            if !d.equivalent(&op.apply(&d)) {
                                broken.push(format!("mps = 1 but L ≠ {}", op.name()));
                            }
                        }
                    }
                    if c[1] == 1 && !d.equivalent(&langops::suffix_closure(&d)) {
                        broken.push("mpl = 1 but L ≠ suffix closure".to_string());
                    }
                    if c[0] == 1 && !d.accepts_indices(&[]) {
                        broken.push("mpc = 1 but λ ∉ L".to_string());
                    }
                    let res = ExperimentResult::new(op, Vec::new(), c[..3].to_vec(), exp, broken.is_empty())
                        .instance(|| d.to_text());
                    if broken.is_empty() { res } else { res.note(broken.join("; ")) }
                }
                Err(e) => ExperimentResult::errored(op, Vec::new(), exp, &e, d.to_text()),
            };
            match seed {
                Some(s) => r.seeded(s),
                None => r,
            }
        })
        .collect()
}

pub fn anchors(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let mut out = Vec::new();
    let mut check = |name: String, d: Result<Dfa>, pick: &dyn Fn([usize; 4]) -> Vec<usize>, want: Vec<usize>, exp: String| {
        out.push(match d.and_then(|d| Ok((cfg.analyzer.constants(&d)?, d))) {
            Ok((c, d)) => {
                let obs = pick(c);
                let pass = obs == want;
                ExperimentResult::new(name, want, obs, exp, pass).instance(|| d.to_text())
            }
            Err(e) => ExperimentResult::errored(name, want, exp, &e, String::new()),
        });
    };
    let ab = sigma("ab");
    check(
        "example language".into(),
        parse_regex("a^* + a^*bb^* + a^*bb^*aa^* + a^*bb^*aa^*bb^*", &ab),
        &|c| vec![c[0], c[3]],
        vec![1, 5],
        "(mpc, sc) = (1, 5)".into(),
    );
    for n in 1..=5 {
        check(
            format!("a^{n}a^*"),
            parse_regex(&format!("a^{{{n}}}a^*"), &sigma("a")),
            &|c| vec![c[0]],
            vec![n + 1],
            format!("mpc = {}", n + 1),
        );
    }
    for p3 in 2..=6 {
        for p2 in 1..p3 {
            for p1 in 1..=p2 {
                let f = footnote_family(p1, p2, p3);
                let want = f.as_ref().map_or(vec![p1, p2, p3], |f| vec![f.expected_mpc, f.expected_mpl, f.expected_sc]);
                let exp = format!("(mpc, mpl, sc) = {}", tuple(&want));
                check(format!("footnote({p1}, {p2}, {p3})"), f.map(|f| f.dfa), &|c| vec![c[0], c[1], c[3]], want, exp);
            }
        }
    }
    out
}

pub fn oracle(cfg: &VerifyConfig) -> Vec<ExperimentResult> {
    let samples = cfg.samples(DEFAULT_SAMPLES);
    let bound = cfg.cap(12);
    let params = RandomDfaParams::new(1..=5, 1..=2, 0);
    population(cfg, &params)
        .take(samples)
        .map(|(seed, d)| {
            let exp = format!("oracle (bound {bound}) ≤ exact; witnesses re-verify");
            match cross_validate_with(&cfg.analyzer, &d, bound) {
                Ok(cv) => {
                    let mut obs = cv.exact.to_vec();
                    obs.extend(cv.oracle);
                    let res = ExperimentResult::new("oracle", Vec::new(), obs, exp, cv.ok()).seeded(seed).instance(|| d.to_text());
                    if cv.ok() { res } else { res.note(cv.hard_failures.join("; ")) }
                }
                Err(e) => ExperimentResult::errored("oracle", Vec::new(), exp, &e, d.to_text()).seeded(seed),
            }
        })
        .collect()
}

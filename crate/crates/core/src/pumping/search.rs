//! Window frontiers and the bad-continuation search behind mpl and mps.
//!
//! A window is a start state `q` together with a word `w` read from it.
//! Each split `(i, j)` of `w` is a pump candidate; its *image set* is the
//! set of states reached by reading `x y^t z` from `q` for all `t ≥ 0`,
//! i.e. the orbit of `y` from `q·x`, pushed through `z`. A continuation `v`
//! is *bad* when `q·wv` accepts but every candidate's image set, read
//! through `v`, contains a rejecting state: no split of `w` pumps in `uwv`.
//!
//! A window without a bad continuation stays safe under extension (the
//! extra letters fold into `v`), so the windows of length `p + 1` that need
//! checking are exactly the one-letter extensions of unsafe windows of
//! length `p`. Windows whose state path repeats a state always pump and are
//! never kept.
//!
//! Whether `v` is bad depends on `v` only through its acceptance set
//! `A(v) = {r | r·v accepts}`: `v` is bad iff the main state lies in `A(v)`
//! and no image set is contained in it. The acceptance sets are the states
//! of the subset construction on the reversed automaton, computed once per
//! automaton; each window is then a scan over them.

use std::collections::HashMap;

use crate::dfa::Dfa;
use crate::error::{Error, Result};

/// Bitset over the states of one automaton.
type Set = Vec<u64>;

#[derive(Clone, Debug)]
pub(crate) struct Window {
    pub start: usize,
    pub word: Vec<usize>,
    /// States visited while reading `word` from `start`; `path.len() == word.len() + 1`.
    pub path: Vec<usize>,
}

impl Window {
    fn main(&self) -> usize {
        *self.path.last().unwrap()
    }
}

/// An unsafe window and its shortest (then least) bad continuation.
#[derive(Clone, Debug)]
pub(crate) struct Unsafe {
    pub window: Window,
    pub continuation: Vec<usize>,
    /// Main state and reduced image-set family.
    key: Vec<u64>,
}

pub(crate) struct Search<'a> {
    d: &'a Dfa,
    live: Vec<bool>,
    accepting: Set,
    dead: Set,
    chunks: usize,
    budget: usize,
    cache: HashMap<Vec<u64>, Option<Vec<usize>>>,
    columns: Vec<Set>,
    /// Length of the shortest continuation with each acceptance set.
    depth: Vec<usize>,
    pre: Vec<Vec<usize>>,
    /// Columns containing each state, in column order.
    by_state: Vec<Vec<usize>>,
    layers: Vec<Vec<usize>>,
}

fn set_bit(s: &mut Set, q: usize) {
    s[q / 64] |= 1 << (q % 64);
}

fn has_bit(s: &[u64], q: usize) -> bool {
    s[q / 64] >> (q % 64) & 1 == 1
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn count(a: &[u64]) -> u32 {
    a.iter().map(|x| x.count_ones()).sum()
}

impl<'a> Search<'a> {
    pub fn new(d: &'a Dfa, budget: usize) -> Self {
        let n = d.num_states();
        let chunks = n.div_ceil(64).max(1);
        let live = d.coaccessible();
        let mut accepting = vec![0; chunks];
        let mut dead = vec![0; chunks];
        for q in 0..n {
            if d.is_accepting(q) {
                set_bit(&mut accepting, q);
            }
            if !live[q] {
                set_bit(&mut dead, q);
            }
        }
        Search { d, live, accepting, dead, chunks, budget, cache: HashMap::new(), columns: Vec::new(), depth: Vec::new(), pre: Vec::new(), by_state: Vec::new(), layers: Vec::new() }
    }

    fn image(&self, s: &[u64], a: usize) -> Set {
        let mut out = vec![0; self.chunks];
        for (c, &bits) in s.iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let q = c * 64 + b.trailing_zeros() as usize;
                b &= b - 1;
                set_bit(&mut out, self.d.step(q, a));
            }
        }
        out
    }

    /// One-letter extension of an unsafe window with the image sets of its
    /// candidates, or `None` when the extension is trivially safe. Only the
    /// parent's reduced family is carried over: candidates it dropped stay
    /// redundant after reading more letters.
    fn child(&self, u: &Unsafe, a: usize) -> Option<(Window, Vec<Set>)> {
        let w = &u.window;
        let t = self.d.step(w.main(), a);
        if !self.live[t] || w.path.contains(&t) {
            return None;
        }
        let mut sets = Vec::new();
        for s in self.sets_of(&u.key) {
            let img = self.image(s, a);
            if count(&img) == 1 {
                return None;
            }
            sets.push(img);
        }
        let mut word = w.word.clone();
        word.push(a);
        let mut path = w.path.clone();
        path.push(t);
        // candidates ending at the new letter: the orbit of `word[i..]`
        for i in 0..word.len() {
            let y = &word[i..];
            let mut s = vec![0; self.chunks];
            let mut r = path[i];
            while !has_bit(&s, r) {
                set_bit(&mut s, r);
                r = self.d.run(r, y);
            }
            sets.push(s);
        }
        Some((Window { start: w.start, word, path }, sets))
    }

    /// Canonical node: drops candidates that can never pump again (a dead
    /// state in the image) and candidates dominated by a smaller image set.
    fn normalize(&self, main: usize, mut sets: Vec<Set>) -> Vec<u64> {
        sets.retain(|s| !intersects(s, &self.dead));
        sets.sort();
        sets.dedup();
        let keep: Vec<bool> = (0..sets.len())
            .map(|i| !(0..sets.len()).any(|j| j != i && subset(&sets[j], &sets[i])))
            .collect();
        let mut key = Vec::with_capacity(1 + sets.len() * self.chunks);
        key.push(main as u64);
        for (s, k) in sets.iter().zip(keep) {
            if k {
                key.extend_from_slice(s);
            }
        }
        key
    }

    fn sets_of<'k>(&self, key: &'k [u64]) -> impl Iterator<Item = &'k [u64]> {
        key[1..].chunks(self.chunks)
    }

    /// States from which `A` is entered by `a`.
    fn preimage(&self, target: &[u64], a: usize) -> Set {
        let mut out = vec![0; self.chunks];
        for q in 0..self.d.num_states() {
            if has_bit(target, self.d.step(q, a)) {
                set_bit(&mut out, q);
            }
        }
        out
    }

    /// Acceptance sets `A(v) = {r | r·v accepts}` of all continuations,
    /// numbered in order of their shortest `v`, with the preimage table
    /// `pre[c][a] = A(av)` for `A(v) = columns[c]`.
    fn ensure_columns(&mut self) -> Result<()> {
        if !self.columns.is_empty() {
            return Ok(());
        }
        let k = self.d.alphabet().len();
        let mut index: HashMap<Set, usize> = HashMap::from([(self.accepting.clone(), 0)]);
        let mut columns = vec![self.accepting.clone()];
        let mut depth = vec![0];
        let mut pre = Vec::new();
        let mut i = 0;
        while i < columns.len() {
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let set = self.preimage(&columns[i], a);
                let id = match index.get(&set) {
                    Some(&id) => id,
                    None => {
                        if columns.len() >= self.budget {
                            return Err(Error::BudgetExceeded { budget: self.budget });
                        }
                        index.insert(set.clone(), columns.len());
                        columns.push(set);
                        depth.push(depth[i] + 1);
                        columns.len() - 1
                    }
                };
                row.push(id);
            }
            pre.push(row);
            i += 1;
        }
        let mut by_state = vec![Vec::new(); self.d.num_states()];
        for (c, set) in columns.iter().enumerate() {
            for (q, list) in by_state.iter_mut().enumerate() {
                if has_bit(set, q) {
                    list.push(c);
                }
            }
        }
        self.columns = columns;
        self.depth = depth;
        self.pre = pre;
        self.by_state = by_state;
        self.layers = vec![vec![0]];
        Ok(())
    }

    /// Fills `layers[..=len]`: columns of continuations of length exactly `len`.
    fn extend_layers(&mut self, len: usize) {
        while self.layers.len() <= len {
            let last = self.layers.last().expect("seeded");
            let mut next: Vec<usize> = last.iter().flat_map(|&c| self.pre[c].iter().copied()).collect();
            next.sort_unstable();
            next.dedup();
            self.layers.push(next);
        }
    }

    /// `v` is bad iff `main ∈ A(v)` and no image set lies inside `A(v)`.
    fn is_bad(&self, key: &[u64], column: &[u64]) -> bool {
        has_bit(column, key[0] as usize) && self.sets_of(key).all(|s| !subset(s, column))
    }

    /// Shortest, then least, bad continuation.
    fn bad_continuation(&mut self, root: &[u64]) -> Result<Option<Vec<usize>>> {
        if let Some(hit) = self.cache.get(root) {
            return Ok(hit.clone());
        }
        self.ensure_columns()?;
        let main = root[0] as usize;
        let Some(&first) = self.by_state[main].iter().find(|&&c| self.is_bad(root, &self.columns[c])) else {
            self.cache.insert(root.to_vec(), None);
            return Ok(None);
        };
        let len = self.depth[first];
        self.extend_layers(len);
        let mut targets = vec![false; self.columns.len()];
        for &c in &self.layers[len] {
            targets[c] = self.is_bad(root, &self.columns[c]);
        }
        // greedy: least first letter that still reaches a bad column
        let mut v = Vec::with_capacity(len);
        for pos in 0..len {
            let rest = &self.layers[len - pos - 1];
            for a in 0..self.d.alphabet().len() {
                let next: Vec<usize> = rest.iter().copied().filter(|&c| targets[self.pre[c][a]]).collect();
                if !next.is_empty() {
                    v.push(a);
                    targets.fill(false);
                    for c in next {
                        targets[c] = true;
                    }
                    break;
                }
            }
        }
        debug_assert_eq!(v.len(), len);
        self.cache.insert(root.to_vec(), Some(v.clone()));
        Ok(Some(v))
    }

    fn check(&mut self, w: Window, sets: Vec<Set>) -> Result<Option<Unsafe>> {
        let key = self.normalize(w.main(), sets);
        Ok(self.bad_continuation(&key)?.map(|continuation| Unsafe { window: w, continuation, key }))
    }

    /// Unsafe windows of length 0, 1, ... starting from `starts` (in the
    /// given order), up to `max_len` or until a level is empty. Each level
    /// is ordered by start position in `starts`, then lexicographically.
    pub fn sweep(&mut self, starts: &[usize], max_len: Option<usize>) -> Result<Vec<Vec<Unsafe>>> {
        let mut level = Vec::new();
        for &q in starts {
            if self.live[q] {
                let w = Window { start: q, word: Vec::new(), path: vec![q] };
                level.extend(self.check(w, Vec::new())?);
            }
        }
        let mut levels = Vec::new();
        loop {
            let len = levels.len();
            let done = level.is_empty() || max_len.is_some_and(|m| len >= m);
            levels.push(level);
            if done {
                return Ok(levels);
            }
            let mut next = Vec::new();
            for i in 0..levels[len].len() {
                for a in 0..self.d.alphabet().len() {
                    if let Some((w, sets)) = self.child(&levels[len][i], a) {
                        next.extend(self.check(w, sets)?);
                    }
                }
            }
            level = next;
        }
    }
}

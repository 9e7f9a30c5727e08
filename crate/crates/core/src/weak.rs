//! The weak order on `F_n`: covers, down operators and lower intervals.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::catalan::enumerate;
use crate::chain::{inversion_table, phi, rank, InversionKind};
use crate::error::{Error, Result};
use crate::factor::FactorWord;
use crate::graph::{Csr, UNREACHED};
use crate::perm::Permutation;

/// `true` iff `u` and `v` are Hurwitz neighbors whose ranks differ by one.
pub fn is_hasse_edge(u: &FactorWord, v: &FactorWord) -> bool {
    u.n() == v.n()
        && u.neighbors().binary_search(v).is_ok()
        && rank(u).abs_diff(rank(v)) == 1
}

/// For a same-rank Hurwitz edge, the triple `a < b < c` with
/// `(…,(a,c),(a,b),…)` on one side and `(…,(b,c),(a,c),…)` on the other.
pub fn deleted_edge_pattern(u: &FactorWord, v: &FactorWord) -> Option<(u8, u8, u8)> {
    if u.n() != v.n() {
        return None;
    }
    let (x, y) = (u.factors(), v.factors());
    let diff: Vec<usize> = (0..x.len()).filter(|&k| x[k] != y[k]).collect();
    let [i, j] = diff[..] else { return None };
    if j != i + 1 {
        return None;
    }
    let matches = |p: &[crate::factor::Transposition], q: &[crate::factor::Transposition]| {
        let (ac, ab) = (p[i], p[i + 1]);
        let (bc, ac2) = (q[i], q[i + 1]);
        let (a, b, c) = (ab.a(), ab.b(), ac.b());
        (ac.a() == a && a < b && b < c && bc.a() == b && bc.b() == c && ac2 == ac)
            .then_some((a, b, c))
    };
    matches(x, y).or_else(|| matches(y, x))
}

/// `D_i(w)`: the rank-lowering move at position `i` when `i ∈ Des(φ(w))`, else `w`.
pub fn down_operator(word: &FactorWord, i: usize) -> Result<FactorWord> {
    let max = word.n().saturating_sub(2);
    if i == 0 || i > max {
        return Err(Error::PositionOutOfRange { position: i, max });
    }
    let pi = phi(word);
    if !pi.has_descent(i) {
        return Ok(*word);
    }
    let target = pi.inversion_count() - 1;
    let r = word.hurwitz_right(i)?;
    let l = word.hurwitz_left(i)?;
    match (rank(&r) == target, rank(&l) == target) {
        (true, true) => {
            assert_eq!(r, l, "R_{i} and L_{i} both lower rank but differ at {word}");
            Ok(r)
        }
        (true, false) => Ok(r),
        (false, true) => Ok(l),
        (false, false) => unreachable!("descent {i} of φ({word}) admits no lowering move"),
    }
}

/// `D_{i_1} ∘ ⋯ ∘ D_{i_k}` applied to `word`; the last letter acts first.
pub fn down_word(word: &FactorWord, letters: &[usize]) -> Result<FactorWord> {
    letters.iter().rev().try_fold(*word, |w, &i| down_operator(&w, i))
}

/// `D_π(w)` along a reduced word of `π ∈ S_{n-1}`.
pub fn down_pi(word: &FactorWord, pi: &Permutation) -> Result<FactorWord> {
    let m = word.n().saturating_sub(1);
    if pi.len() != m {
        return Err(Error::WrongLength { expected: m, got: pi.len() });
    }
    down_word(word, &pi.reduced_word())
}

/// `{D_π(w) : π ∈ S_{n-1}}`, sorted.
pub fn lower_interval(word: &FactorWord) -> Result<Vec<FactorWord>> {
    let m = word.n().saturating_sub(1);
    let mut out = Permutation::all(m)
        .iter()
        .map(|pi| down_pi(word, pi))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn has_upper_cover(word: &FactorWord) -> bool {
    let r = rank(word);
    word.neighbors().iter().any(|v| rank(v) > r)
}

/// Words of `F_n` with no upper cover.
pub fn maximal_elements(n: usize) -> Result<Vec<FactorWord>> {
    Ok(maximal_among(enumerate(n)?))
}

/// The words of a full `F_n` listing that have no upper cover, order kept.
pub fn maximal_among(words: Vec<FactorWord>) -> Vec<FactorWord> {
    words.into_par_iter().filter(|w| !has_upper_cover(w)).collect()
}

/// Checks that `φ` maps `[e, w0]` bijectively onto `S_{n-1}` and that covers in
/// the interval correspond exactly to right weak order covers `π ⋖ π s_i`.
pub fn interval_isomorphism_check(w0: &FactorWord) -> Result<bool> {
    if has_upper_cover(w0) {
        return Err(Error::NotMaximal(w0.to_string()));
    }
    let m = w0.n().saturating_sub(1);
    let interval = lower_interval(w0)?;
    let by_phi: HashMap<Permutation, FactorWord> =
        interval.iter().map(|w| (phi(w), *w)).collect();
    let size: usize = (1..=m).product();
    if by_phi.len() != interval.len() || interval.len() != size {
        return Ok(false);
    }
    let members: HashSet<FactorWord> = interval.iter().copied().collect();
    for u in &interval {
        let pu = phi(u);
        let ru = pu.inversion_count();
        // Every weak cover of φ(u) must come from a Hasse cover of u.
        let mut expected = HashSet::new();
        for i in 1..m {
            if !pu.has_descent(i) {
                let v = by_phi[&pu.times_simple(i)];
                if !is_hasse_edge(u, &v) {
                    return Ok(false);
                }
                expected.insert(v);
            }
        }
        // And every Hasse cover inside the interval must be one of those.
        for v in u.neighbors() {
            if members.contains(&v) && rank(&v) == ru + 1 && !expected.contains(&v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Weak(F_n)` with covers stored in both directions.
pub struct HasseDiagram {
    n: usize,
    words: Vec<FactorWord>,
    index: HashMap<FactorWord, u32>,
    ranks: Vec<u32>,
    up: Vec<Vec<u32>>,
    down: Vec<Vec<u32>>,
}

impl HasseDiagram {
    pub fn build(n: usize) -> Result<Self> {
        Ok(Self::from_words(n, enumerate(n)?))
    }

    /// Diagram on a canonical listing of all of `F_n`.
    pub fn from_words(n: usize, words: Vec<FactorWord>) -> Self {
        let index: HashMap<FactorWord, u32> =
            words.iter().enumerate().map(|(k, w)| (*w, k as u32)).collect();
        let ranks: Vec<u32> = words.par_iter().map(|w| rank(w) as u32).collect();
        let up: Vec<Vec<u32>> = words
            .par_iter()
            .enumerate()
            .map(|(k, w)| {
                let mut ups: Vec<u32> = w
                    .neighbors()
                    .iter()
                    .map(|v| index[v])
                    .filter(|&x| ranks[x as usize] == ranks[k] + 1)
                    .collect();
                ups.sort_unstable();
                ups
            })
            .collect();
        let mut down = vec![Vec::new(); words.len()];
        for (k, ups) in up.iter().enumerate() {
            for &x in ups {
                down[x as usize].push(k as u32);
            }
        }
        Self { n, words, index, ranks, up, down }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[FactorWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, w: &FactorWord) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn word(&self, v: u32) -> &FactorWord {
        &self.words[v as usize]
    }

    pub fn rank_of(&self, v: u32) -> u32 {
        self.ranks[v as usize]
    }

    pub fn up(&self, v: u32) -> &[u32] {
        &self.up[v as usize]
    }

    pub fn down(&self, v: u32) -> &[u32] {
        &self.down[v as usize]
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.up.iter().enumerate().flat_map(|(k, ups)| ups.iter().map(move |&x| (k as u32, x)))
    }

    pub fn num_covers(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn minimal(&self) -> Vec<u32> {
        (0..self.len() as u32).filter(|&v| self.down(v).is_empty()).collect()
    }

    pub fn maximal(&self) -> Vec<u32> {
        (0..self.len() as u32).filter(|&v| self.up(v).is_empty()).collect()
    }

    fn closure<'a>(&'a self, v: u32, step: impl Fn(u32) -> &'a [u32]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[v as usize] = true;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &y in step(x) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Membership mask of `{u : u ≤ v}`.
    pub fn down_set(&self, v: u32) -> Vec<bool> {
        self.closure(v, |x| self.down(x))
    }

    /// Membership mask of `{u : u ≥ v}`.
    pub fn up_set(&self, v: u32) -> Vec<bool> {
        self.closure(v, |x| self.up(x))
    }

    pub fn leq(&self, u: u32, v: u32) -> bool {
        self.down_set(v)[u as usize]
    }

    fn extremal_common(&self, a: u32, b: u32, upward: bool) -> Option<u32> {
        let (sa, sb) = if upward { (self.up_set(a), self.up_set(b)) } else { (self.down_set(a), self.down_set(b)) };
        let common: Vec<u32> = (0..self.len() as u32).filter(|&x| sa[x as usize] && sb[x as usize]).collect();
        common.iter().copied().find(|&z| {
            let reach = if upward { self.up_set(z) } else { self.down_set(z) };
            common.iter().all(|&x| reach[x as usize])
        })
    }

    /// Least common upper bound, if one exists.
    pub fn join(&self, a: u32, b: u32) -> Option<u32> {
        self.extremal_common(a, b, true)
    }

    /// Greatest common lower bound, if one exists.
    pub fn meet(&self, a: u32, b: u32) -> Option<u32> {
        self.extremal_common(a, b, false)
    }

    /// `{u : u lies on a geodesic from e to v}` in `G_T(n)`, as a mask.
    /// `graph` must be built from [`HasseDiagram::words`].
    pub fn geodesic_down_set(&self, graph: &Csr, v: u32) -> Vec<bool> {
        let base = self.index_of(&FactorWord::base(self.n)).expect("e is in F_n");
        let from_e = graph.bfs(base);
        let from_v = graph.bfs(v);
        let d = from_e[v as usize];
        (0..self.len())
            .map(|u| {
                from_e[u] != UNREACHED && from_v[u] != UNREACHED && from_e[u] + from_v[u] == d
            })
            .collect()
    }
}

/// Selects which inversion sets a containment test compares.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct InversionSets {
    pub all: bool,
    pub right: bool,
    pub left: bool,
}

impl InversionSets {
    pub const ALL_THREE: Self = Self { all: true, right: true, left: true };
}

/// Bitmask of a set of value pairs `(i, j)` with `1 ≤ i < j ≤ m ≤ 11`.
fn pair_mask<'a>(m: usize, pairs: impl IntoIterator<Item = &'a (u8, u8)>) -> u128 {
    pairs.into_iter().fold(0, |acc, &(i, j)| acc | 1u128 << ((i as usize - 1) * m + j as usize - 1))
}

/// Pairs `(u, v)` with `u ≰ v` even though each selected inversion set of `u`
/// is contained in the matching set of `v`; an empty result means containment
/// implies order on this `F_n`. Sorted, at most `limit` entries.
pub fn containment_counterexamples(h: &HasseDiagram, sets: InversionSets, limit: usize) -> Vec<(u32, u32)> {
    let m = h.n().saturating_sub(1);
    let masks: Vec<[u128; 3]> = h
        .words()
        .par_iter()
        .map(|w| {
            let t = inversion_table(w);
            let of = |k: Option<InversionKind>| {
                pair_mask(m, t.pairs().iter().filter(|(_, &kind)| k.map_or(true, |k| k == kind)).map(|(p, _)| p))
            };
            [of(None), of(Some(InversionKind::Right)), of(Some(InversionKind::Left))]
        })
        .collect();
    let chosen = [sets.all, sets.right, sets.left];
    let contained = |u: usize, v: usize| (0..3).all(|k| !chosen[k] || masks[u][k] & !masks[v][k] == 0);
    let mut out: Vec<(u32, u32)> = (0..h.len() as u32)
        .into_par_iter()
        .flat_map_iter(|v| {
            let below = h.down_set(v);
            (0..h.len() as u32)
                .filter(|&u| !below[u as usize] && contained(u as usize, v as usize))
                .map(move |u| (u, v))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_unstable();
    out.truncate(limit);
    out
}

//! Distances in Hurwitz graphs: eccentricities, radius, diameter, antipodes,
//! the `φ` contraction property and a constructive meeting path.

use std::collections::HashMap;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalan::{binomial, enumerate_capped};
use crate::chain::phi;
use crate::error::{Error, Result};
use crate::factor::FactorWord;
use crate::graph::{Csr, UNREACHED};
use crate::hurwitz::{HurwitzWord, Move};

/// Largest `n` for which [`build_graph`] materializes `G_T(n)` by default.
pub const METRICS_CAP: usize = 8;

/// A Hurwitz graph with its canonical vertex numbering.
pub struct HurwitzGraph<W> {
    words: Vec<W>,
    index: HashMap<W, u32>,
    csr: Csr,
}

impl<W: HurwitzWord> HurwitzGraph<W> {
    /// `words` must be sorted and closed under Hurwitz moves.
    pub fn from_words(words: Vec<W>) -> Self {
        let csr = Csr::from_words(&words);
        let index = words.iter().enumerate().map(|(k, w)| (w.clone(), k as u32)).collect();
        Self { words, index, csr }
    }

    pub fn words(&self) -> &[W] {
        &self.words
    }

    pub fn word(&self, v: u32) -> &W {
        &self.words[v as usize]
    }

    pub fn index_of(&self, w: &W) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn csr(&self) -> &Csr {
        &self.csr
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `(ecc(v), d(v, ·))`.
    pub fn eccentricity(&self, v: u32) -> (u32, Vec<u32>) {
        let dist = self.csr.bfs(v);
        let ecc = dist.iter().copied().filter(|&d| d != UNREACHED).max().unwrap_or(0);
        (ecc, dist)
    }

    /// Vertices at distance `ecc(v)` from `v`.
    pub fn antipodes(&self, v: u32) -> Vec<u32> {
        let (ecc, dist) = self.eccentricity(v);
        (0..self.len() as u32).filter(|&u| dist[u as usize] == ecc).collect()
    }

    /// Radius and diameter from a full parallel sweep, aborting as soon as one
    /// eccentricity exceeds `abort_above`.
    pub fn radius_diameter(&self, abort_above: Option<u32>) -> Result<(u32, u32)> {
        let ecc = self.csr.all_eccentricities(abort_above).map_err(|(v, e)| Error::RangeViolation {
            position: v as usize,
            detail: format!("eccentricity {e} exceeds bound {}", abort_above.unwrap_or(0)),
        })?;
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        Ok((radius, diameter))
    }
}

pub fn build_graph(n: usize) -> Result<HurwitzGraph<FactorWord>> {
    build_graph_capped(n, METRICS_CAP)
}

pub fn build_graph_capped(n: usize, cap: usize) -> Result<HurwitzGraph<FactorWord>> {
    Ok(HurwitzGraph::from_words(enumerate_capped(n, cap)?))
}

/// `binom(n-1, 2)`: the radius of `G_T(n)`.
pub fn radius_formula(n: usize) -> u32 {
    binomial(n.saturating_sub(1), 2) as u32
}

/// `⌊(n-1)²/2⌋ - 1`, the conjectured diameter of `G_T(n)`.
pub fn diameter_conjecture(n: usize) -> u32 {
    let m = n.saturating_sub(1);
    (m * m / 2).saturating_sub(1) as u32
}

/// `⌊(3/2)·binom(n-1, 2)⌋`, the proven upper bound on the diameter.
pub fn diameter_upper_bound(n: usize) -> u32 {
    3 * radius_formula(n) / 2
}

/// Summary of a full eccentricity sweep over `G_T(n)`.
#[derive(Clone, Debug, Serialize)]
pub struct MetricReport {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub radius: u32,
    pub diameter: u32,
    pub ecc_e: u32,
    pub antipodes_e: usize,
    pub radius_formula: u32,
    pub radius_matches: bool,
    pub diameter_upper_bound: u32,
    pub diameter_bounds_hold: bool,
    pub conjecture: u32,
    pub conjecture_matches: bool,
    pub elapsed_ms: u128,
}

impl MetricReport {
    /// Proven statements only; the diameter conjecture is not included.
    pub fn theorems_hold(&self) -> bool {
        self.radius_matches && self.diameter_bounds_hold && self.ecc_e == self.radius_formula
    }
}

pub fn radius_and_diameter(graph: &HurwitzGraph<FactorWord>) -> Result<MetricReport> {
    let start = Instant::now();
    let n = graph.words().first().map_or(1, FactorWord::n);
    let bound = diameter_upper_bound(n);
    let (radius, diameter) = graph.radius_diameter(Some(bound))?;
    let e = graph.index_of(&FactorWord::base(n)).expect("e is a vertex");
    let (ecc_e, dist) = graph.eccentricity(e);
    let antipodes_e = dist.iter().filter(|&&d| d == ecc_e).count();
    let radius_formula = radius_formula(n);
    let conjecture = diameter_conjecture(n);
    Ok(MetricReport {
        n,
        vertices: graph.len(),
        edges: graph.csr().num_edges(),
        radius,
        diameter,
        ecc_e,
        antipodes_e,
        radius_formula,
        radius_matches: radius == radius_formula,
        diameter_upper_bound: bound,
        diameter_bounds_hold: radius_formula <= diameter && diameter <= bound,
        conjecture,
        conjecture_matches: diameter == conjecture,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Outcome of [`contraction_check`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct ContractionReport {
    pub edges_checked: usize,
    pub pairs_checked: usize,
    /// Pairs `(v, w)` with `d(φ(v), φ(w)) > d(v, w)`.
    pub violations: Vec<(String, String)>,
}

impl ContractionReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `d(φ(v), φ(w)) ≤ d(v, w)` on every edge, and on all pairs from
/// `sources` BFS roots chosen with a seeded RNG.
pub fn contraction_check(graph: &HurwitzGraph<FactorWord>, sources: usize, seed: u64) -> ContractionReport {
    let phis: Vec<_> = graph.words().iter().map(phi).collect();
    let mut report = ContractionReport::default();
    for (u, v) in graph.csr().edges() {
        report.edges_checked += 1;
        if phis[u as usize].cayley_distance(&phis[v as usize]) > 1 {
            report.violations.push((graph.word(u).to_string(), graph.word(v).to_string()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks = sample(&mut rng, graph.len(), sources.min(graph.len()));
    for s in picks.iter() {
        let dist = graph.csr().bfs(s as u32);
        for (w, &d) in dist.iter().enumerate() {
            report.pairs_checked += 1;
            if phis[s].cayley_distance(&phis[w]) > d as usize {
                report.violations.push((graph.word(s as u32).to_string(), graph.word(w as u32).to_string()));
            }
        }
    }
    report
}

/// Move sequences taking `v` and `w` to a common word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeetPath {
    pub moves_v: Vec<Move>,
    pub moves_w: Vec<Move>,
    pub meet: String,
}

impl MeetPath {
    pub fn len(&self) -> usize {
        self.moves_v.len() + self.moves_w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `binom(n-1, 2) + ⌊(n-2)²/4⌋`, the length guaranteed by [`bubble_sort_meet`].
pub fn bubble_sort_bound(n: usize) -> usize {
    let m = n.saturating_sub(2);
    binomial(n.saturating_sub(1), 2) as usize + m * m / 4
}

struct Walker {
    word: FactorWord,
    moves: Vec<Move>,
}

impl Walker {
    fn apply(&mut self, m: Move) {
        self.word = m.apply(&self.word).expect("move position inside the word");
        self.moves.push(m);
    }

    fn count(&self, lo: usize, hi: usize, label: u8) -> usize {
        self.word.factors()[lo..=hi].iter().filter(|f| f.contains(label)).count()
    }

    /// Moves the factor at 0-based `p` one step toward the right end without
    /// creating a new `label`-factor.
    fn step_right(&mut self, p: usize, label: u8) {
        let next = self.word.factors()[p + 1];
        self.apply(if next.contains(label) { Move::Right(p + 1) } else { Move::Left(p + 1) });
    }

    fn step_left(&mut self, p: usize, label: u8) {
        let prev = self.word.factors()[p - 1];
        self.apply(if prev.contains(label) { Move::Left(p) } else { Move::Right(p) });
    }
}

/// The constructive path from the diameter bound: repeatedly choose the
/// smallest leaf label `i` of `v`'s remaining factors, push `v`'s `i`-factor to
/// the nearer end (ties go right), sweep all of `w`'s `i`-factors to the same
/// end, then freeze that end and shrink the window.
pub fn bubble_sort_meet(v: &FactorWord, w: &FactorWord) -> Result<MeetPath> {
    if v.n() != w.n() {
        return Err(Error::MismatchedRank(v.n(), w.n()));
    }
    let mut a = Walker { word: *v, moves: Vec::new() };
    let mut b = Walker { word: *w, moves: Vec::new() };
    let len = v.len();
    let (mut lo, mut hi) = (0usize, len);
    while lo < hi {
        let last = hi - 1;
        let mut degree = [0u8; crate::factor::MAX_N + 1];
        for f in &a.word.factors()[lo..hi] {
            degree[f.a() as usize] += 1;
            degree[f.b() as usize] += 1;
        }
        let label = (1..degree.len()).find(|&x| degree[x] == 1).expect("a forest has a leaf") as u8;
        let pos = (lo..hi).find(|&p| a.word.factors()[p].contains(label)).unwrap();
        let to_right = last - pos <= pos - lo;

        if to_right {
            for p in pos..last {
                a.step_right(p, label);
            }
        } else {
            for p in (lo + 1..=pos).rev() {
                a.step_left(p, label);
            }
        }

        // Sweep the i-factor furthest from the chosen end across all others.
        let mut before = b.count(lo, last, label);
        if to_right {
            let start = (lo..hi).find(|&p| b.word.factors()[p].contains(label)).unwrap();
            for p in start..last {
                b.step_right(p, label);
                let now = b.count(lo, last, label);
                assert!(now <= before, "sweep created a new {label}-factor");
                before = now;
            }
        } else {
            let start = (lo..hi).rev().find(|&p| b.word.factors()[p].contains(label)).unwrap();
            for p in (lo + 1..=start).rev() {
                b.step_left(p, label);
                let now = b.count(lo, last, label);
                assert!(now <= before, "sweep created a new {label}-factor");
                before = now;
            }
        }
        let end = if to_right { last } else { lo };
        assert_eq!(
            a.word.factors()[end],
            b.word.factors()[end],
            "end factors disagree for {v} / {w}"
        );
        if to_right {
            hi -= 1;
        } else {
            lo += 1;
        }
    }
    assert_eq!(a.word, b.word);
    Ok(MeetPath { meet: a.word.to_string(), moves_v: a.moves, moves_w: b.moves })
}

/// Replays `path` and confirms both sides land on the same valid word.
pub fn certify_meet(v: &FactorWord, w: &FactorWord, path: &MeetPath) -> bool {
    let replay = |start: &FactorWord, moves: &[Move]| {
        moves.iter().try_fold(*start, |x, m| m.apply(&x))
    };
    match (replay(v, &path.moves_v), replay(w, &path.moves_w)) {
        (Ok(x), Ok(y)) => x == y && x.to_string() == path.meet,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::rank;

    fn w(s: &str) -> FactorWord {
        FactorWord::from_compact_label(s).unwrap()
    }

    #[test]
    fn small_graphs() {
        let g3 = build_graph(3).unwrap();
        assert_eq!((g3.len(), g3.csr().num_edges()), (3, 3));
        let g4 = build_graph(4).unwrap();
        assert_eq!(g4.len(), 16);
        let e = g4.index_of(&FactorWord::base(4)).unwrap();
        assert_eq!(g4.csr().degree(e), 4);
        assert!(g4.csr().is_symmetric() && g4.csr().is_connected());
    }

    #[test]
    fn reports() {
        let r3 = radius_and_diameter(&build_graph(3).unwrap()).unwrap();
        assert_eq!((r3.radius, r3.diameter), (1, 1));
        let r4 = radius_and_diameter(&build_graph(4).unwrap()).unwrap();
        assert_eq!((r4.radius, r4.diameter, r4.ecc_e, r4.antipodes_e), (3, 3, 3, 5));
        assert!(r4.theorems_hold() && r4.conjecture_matches);
    }

    #[test]
    fn distance_from_e_is_rank() {
        let g = build_graph(5).unwrap();
        let (ecc, dist) = g.eccentricity(g.index_of(&FactorWord::base(5)).unwrap());
        assert_eq!(ecc, 6);
        for (k, word) in g.words().iter().enumerate() {
            assert_eq!(dist[k] as usize, rank(word));
        }
        assert_eq!(g.antipodes(g.index_of(&FactorWord::base(5)).unwrap()).len(), 14);
    }

    #[test]
    fn contraction_on_f4() {
        let g = build_graph(4).unwrap();
        let rep = contraction_check(&g, 16, 7);
        assert!(rep.holds());
        assert_eq!(rep.edges_checked, 28);
        assert_eq!(rep.pairs_checked, 256);
        let (x, y) = (phi(&w("12,24,23")), phi(&w("12,34,24")));
        assert!(x.cayley_distance(&y) <= 1);
    }

    #[test]
    fn meet_examples() {
        let e = FactorWord::base(4);
        let same = bubble_sort_meet(&e, &e).unwrap();
        assert!(same.is_empty());
        let top = w("14,13,12");
        let path = bubble_sort_meet(&e, &top).unwrap();
        assert!(certify_meet(&e, &top, &path));
        assert!(path.len() <= 4);
        assert!(matches!(
            bubble_sort_meet(&e, &FactorWord::base(5)),
            Err(Error::MismatchedRank(4, 5))
        ));
    }

    #[test]
    fn meet_all_pairs_f5() {
        let g = build_graph(5).unwrap();
        let bound = bubble_sort_bound(5);
        for (i, v) in g.words().iter().enumerate() {
            let dist = g.csr().bfs(i as u32);
            for (j, x) in g.words().iter().enumerate() {
                let path = bubble_sort_meet(v, x).unwrap();
                assert!(certify_meet(v, x, &path));
                assert!(path.len() <= bound && path.len() >= dist[j] as usize, "{v} / {x}");
            }
        }
    }
}

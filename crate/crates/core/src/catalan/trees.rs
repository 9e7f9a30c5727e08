//! Alternating non-crossing trees and the bijection with maximal words.

use serde::Serialize;

use super::poly::QTPolynomial;
use crate::error::{Error, Result};
use crate::factor::{FactorWord, GeometricTree, Transposition};

/// Right and left edge-pair counts of a tree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EdgePairStats {
    pub right: usize,
    pub left: usize,
    pub neutral: usize,
}

fn require_alternating_nc(tree: &GeometricTree) -> Result<()> {
    if let Some((e, f)) = tree.crossing_pair() {
        return Err(Error::Crossing(e, f));
    }
    if !tree.is_alternating() {
        return Err(Error::NotAlternating);
    }
    Ok(())
}

/// All alternating non-crossing trees on `[n]`, sorted by edge list.
pub fn alternating_trees(n: usize) -> Vec<GeometricTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<GeometricTree> = on_interval(1, n as u8)
        .into_iter()
        .map(|edges| GeometricTree::from_edges_unchecked(n, edges))
        .collect();
    out.sort_by(|a, b| a.edges().cmp(b.edges()));
    out
}

/// Edge sets of the alternating non-crossing trees on `[lo, hi]`: the edge
/// `{lo, hi}` is forced and the rest splits as trees on `[lo, k]`, `[k+1, hi]`.
fn on_interval(lo: u8, hi: u8) -> Vec<Vec<(u8, u8)>> {
    if lo == hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in lo..hi {
        let left = on_interval(lo, k);
        let right = on_interval(k + 1, hi);
        for l in &left {
            for r in &right {
                let mut edges = Vec::with_capacity(l.len() + r.len() + 1);
                edges.push((lo, hi));
                edges.extend_from_slice(l);
                edges.extend_from_slice(r);
                out.push(edges);
            }
        }
    }
    out
}

/// The maximal word `g(T)` of an alternating non-crossing tree.
pub fn word_of_tree(tree: &GeometricTree) -> Result<FactorWord> {
    require_alternating_nc(tree)?;
    let n = tree.n();
    let mut factors = Vec::with_capacity(n.saturating_sub(1));
    if n > 0 {
        emit(tree, 1, n as u8, &mut factors)?;
    }
    FactorWord::new(n, &factors)
}

fn emit(tree: &GeometricTree, lo: u8, hi: u8, out: &mut Vec<Transposition>) -> Result<()> {
    if lo == hi {
        return Ok(());
    }
    if !tree.has_edge(lo, hi) {
        return Err(Error::InvalidTree(format!("missing edge {{{lo},{hi}}}")));
    }
    // Component of `lo` inside [lo, hi] once {lo, hi} is removed.
    let span = (hi - lo + 1) as usize;
    let mut seen = vec![false; span];
    seen[0] = true;
    let mut stack = vec![lo];
    while let Some(v) = stack.pop() {
        for u in tree.neighbors(v) {
            let inside = (lo..=hi).contains(&u) && !(v.min(u) == lo && v.max(u) == hi);
            if inside && !seen[(u - lo) as usize] {
                seen[(u - lo) as usize] = true;
                stack.push(u);
            }
        }
    }
    let k = lo + seen.iter().take_while(|&&s| s).count() as u8 - 1;
    if seen[(k - lo + 1) as usize..].iter().any(|&s| s) {
        return Err(Error::InvalidTree(format!("component of {lo} in [{lo},{hi}] is not an interval")));
    }
    emit(tree, k + 1, hi, out)?;
    out.push(Transposition::new_unchecked(lo, hi));
    emit(tree, lo, k, out)
}

/// Classifies each unordered pair of edges as right, left or neutral.
///
/// Nested edges `{b,c}` inside `{a,d}` form a right pair when `{b,c}` lies in
/// the component of `a` after deleting `{a,d}`, a left pair when it lies in the
/// component of `d`; disjoint spans are neutral.
pub fn edge_pair_statistics(tree: &GeometricTree) -> Result<EdgePairStats> {
    require_alternating_nc(tree)?;
    let edges = tree.edges();
    let mut stats = EdgePairStats::default();
    for (x, &e) in edges.iter().enumerate() {
        for &f in &edges[x + 1..] {
            let (outer, inner) = if e.1 - e.0 >= f.1 - f.0 { (e, f) } else { (f, e) };
            if inner.1 < outer.0 || outer.1 < inner.0 {
                stats.neutral += 1;
                continue;
            }
            // Alternation forbids touching spans that are not nested.
            if !(outer.0 <= inner.0 && inner.1 <= outer.1) {
                return Err(Error::InvalidTree(format!("edges {e:?} and {f:?} overlap")));
            }
            let side_a = tree.component_without(outer, outer.0);
            if side_a[inner.0 as usize] {
                stats.right += 1;
            } else {
                stats.left += 1;
            }
        }
    }
    Ok(stats)
}

/// `Σ_T q^{rp(T)} t^{lp(T)}` over alternating non-crossing trees on `[n]`.
pub fn tree_polynomial(n: usize) -> QTPolynomial {
    let mut poly = QTPolynomial::zero();
    for tree in alternating_trees(n) {
        let s = edge_pair_statistics(&tree).expect("generated trees are alternating");
        poly.add_term(s.right as u32, s.left as u32, 1);
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::{catalan, qt_catalan};
    use crate::chain::inversion_table;
    use crate::factor::t;

    fn tree(n: usize, edges: &[(u8, u8)]) -> GeometricTree {
        GeometricTree::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn star_and_single_edge() {
        let star = tree(4, &[(1, 2), (1, 3), (1, 4)]);
        let w = word_of_tree(&star).unwrap();
        assert_eq!(w.factors(), [t(1, 4), t(1, 3), t(1, 2)]);
        assert_eq!(edge_pair_statistics(&star).unwrap(), EdgePairStats { right: 3, left: 0, neutral: 0 });
        let edge = tree(2, &[(1, 2)]);
        assert_eq!(word_of_tree(&edge).unwrap().factors(), [t(1, 2)]);
        assert_eq!(edge_pair_statistics(&edge).unwrap(), EdgePairStats::default());
    }

    #[test]
    fn rejects_invalid_trees() {
        let path = tree(3, &[(1, 2), (2, 3)]);
        assert!(!path.is_alternating());
        assert!(matches!(word_of_tree(&path), Err(Error::NotAlternating)));
        let crossing = tree(4, &[(1, 3), (2, 4), (1, 2)]);
        assert!(matches!(word_of_tree(&crossing), Err(Error::Crossing(..))));
    }

    /// Oracle: filter every (n-1)-subset of the complete graph.
    fn brute_force_trees(n: usize) -> Vec<Vec<(u8, u8)>> {
        let all: Vec<(u8, u8)> =
            (1..=n as u8).flat_map(|a| (a + 1..=n as u8).map(move |b| (a, b))).collect();
        let mut out = Vec::new();
        for mask in 0u32..1 << all.len() {
            if mask.count_ones() as usize != n - 1 {
                continue;
            }
            let edges: Vec<(u8, u8)> =
                all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            if let Ok(tr) = GeometricTree::new(n, edges.iter().copied()) {
                if tr.is_non_crossing() && tr.is_alternating() {
                    out.push(tr.edges().to_vec());
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn generator_matches_brute_force() {
        for n in 1..=6 {
            let gen: Vec<Vec<(u8, u8)>> =
                alternating_trees(n).iter().map(|t| t.edges().to_vec()).collect();
            assert_eq!(gen, brute_force_trees(n), "n = {n}");
            assert_eq!(gen.len() as u64, catalan(n - 1));
        }
    }

    #[test]
    fn statistics_match_inversion_tables() {
        for n in 2..=7 {
            for tr in alternating_trees(n) {
                let w = word_of_tree(&tr).unwrap();
                assert_eq!(w.tree(), tr);
                let (r, l, nn) = inversion_table(&w).counts();
                let s = edge_pair_statistics(&tr).unwrap();
                assert_eq!((s.right, s.left, s.neutral), (r, l, nn), "{tr:?}");
            }
            assert_eq!(tree_polynomial(n), qt_catalan(n - 1));
        }
    }
}

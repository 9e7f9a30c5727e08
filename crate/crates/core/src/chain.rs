//! Partial products, the map `φ: F_n → S_{n-1}`, rank, and the
//! right/left/neutral taxonomy of inversions.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{FactorWord, Transposition, MAX_N};
use crate::perm::Permutation;

/// `σ_j = t_j t_{j+1} ⋯ t_{n-1}` for `1 ≤ j ≤ n`, with `σ_n = id` and `σ_1 = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialProducts {
    sigma: Vec<Permutation>,
}

impl PartialProducts {
    /// `σ_j`, 1-based.
    pub fn sigma(&self, j: usize) -> &Permutation {
        &self.sigma[j - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.sigma.iter()
    }
}

pub fn partial_products(word: &FactorWord) -> PartialProducts {
    let n = word.n();
    let mut sigma = vec![Permutation::identity(n); n];
    for j in (1..n).rev() {
        let t = word.factor(j).to_permutation(n);
        sigma[j - 1] = t.compose(&sigma[j]);
    }
    PartialProducts { sigma }
}

/// `φ(w)(j) = σ_{j+1}⁻¹(a)` where `t_j = (a, b)`, `a < b`.
pub fn phi(word: &FactorWord) -> Permutation {
    let n = word.n();
    // inv holds σ_{j+1}⁻¹; σ_j⁻¹ = σ_{j+1}⁻¹ t_j swaps entries a and b.
    let mut inv = [0u8; MAX_N + 1];
    for (x, slot) in inv.iter_mut().enumerate() {
        *slot = x as u8;
    }
    let mut images = vec![0u8; n - 1];
    for j in (0..n - 1).rev() {
        let f = word.factors()[j];
        images[j] = inv[f.a() as usize];
        inv.swap(f.a() as usize, f.b() as usize);
    }
    Permutation::from_images_unchecked(images)
}

/// Rank in the weak order, equal to the inversion number of `φ(w)`.
pub fn rank(word: &FactorWord) -> usize {
    phi(word).inversion_count()
}

/// Kind of an inversion `(i, j)` of `φ(w)`, read from the intervals
/// `I_i = [a, b]` of the factors `t_{φ(w)⁻¹(i)} = (a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum InversionKind {
    /// `I_i ⊂ I_j`.
    Right,
    /// `I_j ⊂ I_i`.
    Left,
    /// `I_i ∩ I_j = ∅`.
    Neutral,
}

/// Inversions of `φ(w)` as value pairs `i < j`, each with its kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionTable {
    pi: Permutation,
    pairs: BTreeMap<(u8, u8), InversionKind>,
}

impl InversionTable {
    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn pairs(&self) -> &BTreeMap<(u8, u8), InversionKind> {
        &self.pairs
    }

    pub fn all(&self) -> BTreeSet<(u8, u8)> {
        self.pairs.keys().copied().collect()
    }

    pub fn of_kind(&self, kind: InversionKind) -> BTreeSet<(u8, u8)> {
        self.pairs.iter().filter(|(_, &k)| k == kind).map(|(&p, _)| p).collect()
    }

    pub fn right(&self) -> BTreeSet<(u8, u8)> {
        self.of_kind(InversionKind::Right)
    }

    pub fn left(&self) -> BTreeSet<(u8, u8)> {
        self.of_kind(InversionKind::Left)
    }

    pub fn neutral(&self) -> BTreeSet<(u8, u8)> {
        self.of_kind(InversionKind::Neutral)
    }

    /// `(inv_R, inv_L, inv_N)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for k in self.pairs.values() {
            match k {
                InversionKind::Right => c.0 += 1,
                InversionKind::Left => c.1 += 1,
                InversionKind::Neutral => c.2 += 1,
            }
        }
        c
    }
}

/// Classifies two factor intervals `I_i`, `I_j`. `None` when they neither nest
/// nor are disjoint, which never happens for an inversion of a chain.
pub fn classify_intervals(small: Transposition, large: Transposition) -> Option<InversionKind> {
    let (ia, ib) = (small.a(), small.b());
    let (ja, jb) = (large.a(), large.b());
    if ib < ja || jb < ia {
        Some(InversionKind::Neutral)
    } else if ja <= ia && ib <= jb {
        Some(InversionKind::Right)
    } else if ia <= ja && jb <= ib {
        Some(InversionKind::Left)
    } else {
        None
    }
}

pub fn inversion_table(word: &FactorWord) -> InversionTable {
    let pi = phi(word);
    let pos = pi.inverse();
    let interval = |v: u8| word.factor(pos.apply(v) as usize);
    let pairs = pi
        .inversion_set()
        .into_iter()
        .map(|(i, j)| {
            let kind = classify_intervals(interval(i), interval(j)).unwrap_or_else(|| {
                panic!("inversion ({i},{j}) of {word} has overlapping intervals")
            });
            ((i, j), kind)
        })
        .collect();
    InversionTable { pi, pairs }
}

/// Relabels each pair by `x ↦ π₀(x) = m + 1 - x` in `S_m` and re-sorts it.
pub fn conjugate_pairs_by_longest(m: usize, pairs: &BTreeSet<(u8, u8)>) -> BTreeSet<(u8, u8)> {
    let r = |x: u8| m as u8 + 1 - x;
    pairs.iter().map(|&(i, j)| (r(j), r(i))).collect()
}

/// Output of [`local_range_check`]: `t_j = (a, b)` and `i = φ(w)(j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalRange {
    pub a: u8,
    pub b: u8,
    pub i: u8,
}

/// Checks `a ≤ φ(w)(j) < b` for `t_j = (a, b)`, and for every factor
/// `t_k = (b', c')` nested inside `[a, b]` that `φ(w)(j)` falls on the side
/// dictated by which component of `G(w) \ {a, b}` holds `{b', c'}`.
pub fn local_range_check(word: &FactorWord, j: usize) -> Result<LocalRange> {
    let len = word.len();
    if j == 0 || j > len {
        return Err(Error::PositionOutOfRange { position: j, max: len });
    }
    let f = word.factor(j);
    let (a, d) = (f.a(), f.b());
    let i = phi(word).apply(j as u8);
    if !(a <= i && i < d) {
        return Err(Error::RangeViolation {
            position: j,
            detail: format!("{i} not in [{a},{d})"),
        });
    }
    let tree = word.tree();
    let mut d_side: Option<Vec<bool>> = None;
    for (k, g) in word.factors().iter().enumerate() {
        let (b, c) = (g.a(), g.b());
        if k + 1 == j || !(a <= b && c <= d) {
            continue;
        }
        let in_d = d_side.get_or_insert_with(|| tree.component_without((a, d), d));
        let ok = if in_d[b as usize] { a <= i && i < b } else { c <= i && i < d };
        if !ok {
            return Err(Error::RangeViolation {
                position: j,
                detail: format!("nested factor ({b},{c}) at {} puts {i} on the wrong side", k + 1),
            });
        }
    }
    Ok(LocalRange { a, b: d, i })
}

/// Rebuilds the unique word `w ∈ F_n` with `Inv(w) = inv` and
/// `Inv_L(w) = inv_left`, peeling the last factor and splitting the rest into
/// two subwords on complementary label sets.
pub fn reconstruct(
    n: usize,
    inv: &BTreeSet<(u8, u8)>,
    inv_left: &BTreeSet<(u8, u8)>,
) -> Result<FactorWord> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::RankOutOfRange { n, min: 1, max: MAX_N });
    }
    if !inv_left.is_subset(inv) {
        return Err(Error::NoSuchChain("left inversions not contained in inversions".into()));
    }
    let pi = Permutation::from_inversion_set(n - 1, inv)
        .map_err(|e| Error::NoSuchChain(e.to_string()))?;
    let factors = rebuild(n, &pi, inv_left)?;
    let word = FactorWord::new(n, &factors).map_err(|e| Error::NoSuchChain(e.to_string()))?;
    let table = inversion_table(&word);
    if &table.all() != inv || &table.left() != inv_left {
        return Err(Error::NoSuchChain(format!("data inconsistent with {word}")));
    }
    Ok(word)
}

fn rebuild(n: usize, pi: &Permutation, left: &BTreeSet<(u8, u8)>) -> Result<Vec<Transposition>> {
    if n <= 1 {
        return Ok(Vec::new());
    }
    let i = pi.apply((n - 1) as u8);
    // Left inversions involving the last value count the edges strictly inside [i, j].
    let nested = left.iter().filter(|&&(x, _)| x == i).count();
    let j = i as usize + 1 + nested;
    if j > n {
        return Err(Error::NoSuchChain(format!("last factor ({i},{j}) exceeds {n}")));
    }
    let j = j as u8;
    let last = Transposition::new_unchecked(i, j);
    let in_inner = |v: u8| i < v && v <= j;

    let (mut inner_pos, mut outer_pos) = (Vec::new(), Vec::new());
    for k in 1..n - 1 {
        let v = last.apply(pi.apply(k as u8));
        if in_inner(v) {
            inner_pos.push(k);
        } else {
            outer_pos.push(k);
        }
    }
    let inner_n = (j - i) as usize;
    let outer_n = n - inner_n;
    if inner_pos.len() + 1 != inner_n || outer_pos.len() + 1 != outer_n {
        return Err(Error::NoSuchChain(format!("split at ({i},{j}) has wrong sizes")));
    }
    let gap = j - i;
    let to_inner = |v: u8| v - i;
    let from_inner = |v: u8| v + i;
    let to_outer = |v: u8| if v <= i { v } else { v - gap };
    let from_outer = |v: u8| if v <= i { v } else { v + gap };

    let sub = |positions: &[usize], relabel: &dyn Fn(u8) -> u8| -> Result<Permutation> {
        let images = positions.iter().map(|&k| relabel(last.apply(pi.apply(k as u8)))).collect();
        Permutation::from_images(images).map_err(|e| Error::NoSuchChain(e.to_string()))
    };
    let pi_inner = sub(&inner_pos, &to_inner)?;
    let pi_outer = sub(&outer_pos, &to_outer)?;

    // A pair of subword values is left iff the corresponding pair of the full
    // word is; the outer relabeling passes through the swap i ↔ j.
    let sub_left = |m: usize, back: &dyn Fn(u8) -> u8| -> BTreeSet<(u8, u8)> {
        let mut out = BTreeSet::new();
        for x in 1..m as u8 {
            for y in x + 1..m as u8 {
                let (bx, by) = (last.apply(back(x)), last.apply(back(y)));
                if left.contains(&(bx.min(by), bx.max(by))) {
                    out.insert((x, y));
                }
            }
        }
        out
    };
    let left_inner = sub_left(inner_n, &from_inner);
    let left_outer = sub_left(outer_n, &from_outer);

    let inner = rebuild(inner_n, &pi_inner, &left_inner)?;
    let outer = rebuild(outer_n, &pi_outer, &left_outer)?;

    let mut factors = vec![Transposition::default(); n - 1];
    for (&k, f) in inner_pos.iter().zip(&inner) {
        factors[k - 1] = Transposition::new_unchecked(from_inner(f.a()), from_inner(f.b()));
    }
    for (&k, f) in outer_pos.iter().zip(&outer) {
        factors[k - 1] = Transposition::new_unchecked(from_outer(f.a()), from_outer(f.b()));
    }
    factors[n - 2] = last;
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FactorWord {
        FactorWord::from_compact_label(s).unwrap()
    }

    fn pairs(v: &[(u8, u8)]) -> BTreeSet<(u8, u8)> {
        v.iter().copied().collect()
    }

    #[test]
    fn partial_products_of_worked_example() {
        let pp = partial_products(&w("25,15,24,23"));
        assert_eq!(pp.sigma(5).cycle_string(), "()");
        assert_eq!(pp.sigma(4).cycle_string(), "(2,3)");
        assert_eq!(pp.sigma(3).cycle_string(), "(2,3,4)");
        assert_eq!(pp.sigma(2).cycle_string(), "(1,5)(2,3,4)");
        assert_eq!(pp.sigma(1), &Permutation::long_cycle(5));
    }

    #[test]
    fn partial_products_of_base_word_are_tail_cycles() {
        let pp = partial_products(&FactorWord::base(5));
        for j in 1..=5usize {
            let expect: Vec<String> = (j..=5).map(|x| x.to_string()).collect();
            let s = if j == 5 { "()".to_string() } else { format!("({})", expect.join(",")) };
            assert_eq!(pp.sigma(j).cycle_string(), s);
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w("25,15,24,23")).images(), &[4, 1, 3, 2]);
        assert!(phi(&FactorWord::base(6)).is_identity());
        assert_eq!(phi(&w("14,13,12")).images(), &[3, 2, 1]);
    }

    #[test]
    fn phi_agrees_with_partial_products() {
        let word = w("25,15,24,23");
        let pp = partial_products(&word);
        let direct = phi(&word);
        for j in 1..5 {
            let a = word.factor(j).a();
            assert_eq!(direct.apply(j as u8), pp.sigma(j + 1).inverse().apply(a));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&FactorWord::base(4)), 0);
        assert_eq!(rank(&w("14,13,12")), 3);
    }

    #[test]
    fn inversion_table_of_worked_example() {
        let word = FactorWord::new(6, &[
            crate::t(3, 4),
            crate::t(1, 5),
            crate::t(5, 6),
            crate::t(1, 4),
            crate::t(1, 2),
        ])
        .unwrap();
        let table = inversion_table(&word);
        assert_eq!(table.pi().images(), &[3, 4, 5, 2, 1]);
        assert_eq!(table.right(), pairs(&[(1, 2), (1, 4), (2, 4)]));
        assert_eq!(table.neutral(), pairs(&[(1, 3), (1, 5), (2, 5)]));
        assert_eq!(table.left(), pairs(&[(2, 3)]));
        assert_eq!(table.counts(), (3, 1, 3));
    }

    #[test]
    fn inversion_table_small_cases() {
        assert!(inversion_table(&FactorWord::base(5)).pairs().is_empty());
        let star = inversion_table(&w("14,13,12"));
        assert_eq!(star.right().len(), 3);
        assert_eq!(star.counts(), (3, 0, 0));
    }

    #[test]
    fn left_and_right_alone_are_not_enough() {
        let (u1, u2) = (inversion_table(&w("12,34,24")), inversion_table(&w("34,12,24")));
        assert_eq!(u1.left(), pairs(&[(2, 3)]));
        assert_eq!(u1.left(), u2.left());
        assert_eq!(u1.right(), u2.right());
        assert!(u1.right().is_empty());
        assert_eq!(u2.neutral(), pairs(&[(1, 3)]));
        assert!(u1.neutral().is_empty());
    }

    #[test]
    fn local_range_examples() {
        let r = local_range_check(&FactorWord::base(4), 2).unwrap();
        assert_eq!((r.a, r.b, r.i), (2, 3, 2));
        let r = local_range_check(&w("25,15,24,23"), 1).unwrap();
        assert_eq!((r.a, r.b, r.i), (2, 5, 4));
        assert!(matches!(
            local_range_check(&FactorWord::base(4), 4),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn conjugating_pairs_by_longest() {
        // in S_3, π₀ swaps 1 and 3
        assert_eq!(conjugate_pairs_by_longest(3, &pairs(&[(1, 2)])), pairs(&[(2, 3)]));
        assert_eq!(conjugate_pairs_by_longest(3, &pairs(&[(1, 3)])), pairs(&[(1, 3)]));
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(reconstruct(4, &BTreeSet::new(), &BTreeSet::new()).unwrap(), FactorWord::base(4));
        let word = w("34,15,56,14,12");
        let table = inversion_table(&word);
        assert_eq!(reconstruct(6, &table.all(), &table.left()).unwrap(), word);
        assert_eq!(reconstruct(1, &BTreeSet::new(), &BTreeSet::new()).unwrap(), FactorWord::base(1));
        assert_eq!(reconstruct(2, &BTreeSet::new(), &BTreeSet::new()).unwrap(), FactorWord::base(2));
    }

    #[test]
    fn reconstruct_accepts_exactly_the_realized_data_in_f4() {
        let mut hits = BTreeSet::new();
        for pi in Permutation::all(3) {
            let inv = pi.inversion_set();
            let all: Vec<_> = inv.iter().copied().collect();
            for mask in 0..1u32 << all.len() {
                let left: BTreeSet<_> =
                    (0..all.len()).filter(|b| mask >> b & 1 == 1).map(|b| all[b]).collect();
                if let Ok(word) = reconstruct(4, &inv, &left) {
                    let table = inversion_table(&word);
                    assert_eq!((table.all(), table.left()), (inv.clone(), left));
                    assert!(hits.insert(word));
                }
            }
        }
        assert_eq!(hits.len(), 16);
    }

    #[test]
    fn reconstruct_rejects_inconsistent_data() {
        let bad_inv = pairs(&[(1, 3)]);
        assert!(matches!(reconstruct(4, &bad_inv, &BTreeSet::new()), Err(Error::NoSuchChain(_))));
        let inv = pairs(&[(1, 2)]);
        assert!(reconstruct(4, &inv, &pairs(&[(2, 3)])).is_err());
        assert_eq!(reconstruct(3, &pairs(&[(1, 2)]), &pairs(&[(1, 2)])).unwrap(), w("23,13"));
        assert_eq!(reconstruct(3, &pairs(&[(1, 2)]), &BTreeSet::new()).unwrap(), w("13,12"));
    }
}

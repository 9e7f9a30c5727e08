//! One-line permutations of `{1, …, m}`.
//!
//! Composition convention, used by every module of the crate: `p * q` is the
//! function `x ↦ p(q(x))`, i.e. the right factor acts first. Under this
//! convention the partial products of a factorization satisfy
//! `σ_j = t_j * σ_{j+1}`, and right multiplication by the simple transposition
//! `s_j` swaps the entries at positions `j` and `j + 1` of the one-line notation.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation in one-line notation; `images[i - 1]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self { images: (1..=m as u8).collect() }
    }

    /// Builds a permutation from one-line notation, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > m || seen[v] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u8>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok(), "{images:?}");
        Self { images }
    }

    /// The longest element `[m, m-1, …, 1]`.
    pub fn longest(m: usize) -> Self {
        Self { images: (1..=m as u8).rev().collect() }
    }

    /// The simple transposition `s_j` exchanging `j` and `j + 1`.
    pub fn simple(m: usize, j: usize) -> Self {
        assert!(j >= 1 && j < m, "s_{j} not in S_{m}");
        let mut p = Self::identity(m);
        p.images.swap(j - 1, j);
        p
    }

    /// The long cycle `(1, 2, …, n)`.
    pub fn long_cycle(n: usize) -> Self {
        Self { images: (1..=n as u8).map(|i| if i as usize == n { 1 } else { i + 1 }).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    #[inline]
    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Self { images: inv }
    }

    /// `self * other`, the map `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Self { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    /// `h⁻¹ · self · h`.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.inverse().compose(self).compose(h)
    }

    /// Number of position pairs `i < j` with `π(i) > π(j)`.
    pub fn inversion_count(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Inversion set as value pairs: `(i, j)` with `i < j` and `π⁻¹(i) > π⁻¹(j)`.
    pub fn inversion_set(&self) -> BTreeSet<(u8, u8)> {
        let pos = self.inverse();
        let m = self.len() as u8;
        let mut set = BTreeSet::new();
        for i in 1..=m {
            for j in i + 1..=m {
                if pos.apply(i) > pos.apply(j) {
                    set.insert((i, j));
                }
            }
        }
        set
    }

    /// Recovers the unique permutation of `{1, …, m}` with the given inversion set.
    pub fn from_inversion_set(m: usize, inv: &BTreeSet<(u8, u8)>) -> Result<Self> {
        for &(i, j) in inv {
            if !(1 <= i && i < j && j as usize <= m) {
                return Err(Error::NotAPermutation(format!("pair ({i},{j}) outside S_{m}")));
            }
        }
        // The number of values placed before v is determined by the pairs involving v.
        let mut images = vec![0u8; m];
        for v in 1..=m as u8 {
            let before = (1..v).filter(|&u| !inv.contains(&(u, v))).count()
                + (v + 1..=m as u8).filter(|&u| inv.contains(&(v, u))).count();
            if images[before] != 0 {
                return Err(Error::NotAPermutation(format!("{inv:?} is not an inversion set")));
            }
            images[before] = v;
        }
        let p = Self { images };
        if &p.inversion_set() != inv {
            return Err(Error::NotAPermutation(format!("{inv:?} is not an inversion set")));
        }
        Ok(p)
    }

    /// Positions `i` with `π(i) > π(i + 1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.images[i - 1] > self.images[i]).collect()
    }

    pub fn has_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.len() && self.images[i - 1] > self.images[i]
    }

    /// `self * s_j`: swaps positions `j` and `j + 1`.
    pub fn times_simple(&self, j: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(j - 1, j);
        p
    }

    /// A reduced word `[i_1, …, i_k]` with `π = s_{i_1} ⋯ s_{i_k}`, found by
    /// repeatedly stripping the leftmost right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::with_capacity(self.inversion_count());
        while let Some(&j) = p.descents().first() {
            p = p.times_simple(j);
            rev.push(j);
        }
        rev.reverse();
        rev
    }

    /// A reduced word built by stripping the rightmost right descent. Generally
    /// differs from [`Permutation::reduced_word`].
    pub fn reduced_word_rightmost(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::with_capacity(self.inversion_count());
        while let Some(&j) = p.descents().last() {
            p = p.times_simple(j);
            rev.push(j);
        }
        rev.reverse();
        rev
    }

    /// Product `s_{i_1} ⋯ s_{i_k}` of simple transpositions in `S_m`.
    pub fn from_simple_word(m: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(m), |p, &j| p.times_simple(j))
    }

    /// Distance to `other` in the right Cayley graph of `S_m` with simple generators.
    pub fn cayley_distance(&self, other: &Self) -> usize {
        self.inverse().compose(other).inversion_count()
    }

    /// `p(π|_S)`: the subsequence of values in `subset`, relabeled monotonically
    /// onto `{1, …, |S|}`.
    pub fn pattern(&self, subset: &BTreeSet<u8>) -> Self {
        let rank: std::collections::BTreeMap<u8, u8> =
            subset.iter().enumerate().map(|(k, &v)| (v, k as u8 + 1)).collect();
        Self {
            images: self.images.iter().filter_map(|v| rank.get(v).copied()).collect(),
        }
    }

    /// All permutations of `{1, …, m}` in lexicographic order.
    pub fn all(m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=m as u8).collect();
        loop {
            out.push(Self { images: cur.clone() });
            // next permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Cycle notation, fixed points omitted; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.len() + 1];
        let mut out = String::new();
        for start in 1..=self.len() as u8 {
            if seen[start as usize] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            let body: Vec<String> = cycle.iter().map(u8::to_string).collect();
            out.push('(');
            out.push_str(&body.join(","));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u8>) -> Result<Self> {
        Self::from_images(v)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Vec<u8> {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.images.iter().map(u8::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u8]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (2,4) * (2,3) = (2,3,4)
        let t = p(&[1, 4, 3, 2]);
        let s = p(&[1, 3, 2, 4]);
        assert_eq!((&t * &s).cycle_string(), "(2,3,4)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn inversion_set_uses_value_pairs() {
        let pi = p(&[3, 4, 5, 2, 1]);
        let inv: Vec<_> = pi.inversion_set().into_iter().collect();
        assert_eq!(inv, vec![(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert_eq!(pi.inversion_count(), 7);
    }

    #[test]
    fn inversion_set_roundtrip_s4() {
        for pi in Permutation::all(4) {
            assert_eq!(Permutation::from_inversion_set(4, &pi.inversion_set()).unwrap(), pi);
        }
        // (1,3) without (1,2) or (2,3) is not transitive-closed
        let bad: BTreeSet<_> = [(1u8, 3u8)].into_iter().collect();
        assert!(Permutation::from_inversion_set(3, &bad).is_err());
    }

    #[test]
    fn reduced_words_are_reduced_and_correct() {
        for pi in Permutation::all(5) {
            for w in [pi.reduced_word(), pi.reduced_word_rightmost()] {
                assert_eq!(w.len(), pi.inversion_count());
                assert_eq!(Permutation::from_simple_word(5, &w), pi);
            }
        }
        let w0 = Permutation::longest(3);
        assert_ne!(w0.reduced_word(), w0.reduced_word_rightmost());
    }

    #[test]
    fn pattern_matches_worked_example() {
        let pi = p(&[3, 5, 7, 2, 1, 4, 6]);
        let s: BTreeSet<u8> = [1, 2, 6, 7].into_iter().collect();
        assert_eq!(pi.pattern(&s), p(&[4, 2, 1, 3]));
    }

    #[test]
    fn all_has_factorial_size() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    #[test]
    fn long_cycle_cycle_string() {
        assert_eq!(Permutation::long_cycle(5).cycle_string(), "(1,2,3,4,5)");
        assert_eq!(Permutation::identity(3).cycle_string(), "()");
    }
}

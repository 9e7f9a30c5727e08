//! Type B: signed permutations, their reflections, and the Hurwitz graph on
//! reduced reflection factorizations of the Coxeter element
//! `c = (-1,1)(1,2)⋯(n-1,n)`.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::catalan::binomial;
use crate::error::{Error, Result};
use crate::hurwitz::{orbit, slide_left, slide_right, HurwitzWord, Reflection};
use crate::metrics::HurwitzGraph;

/// Default upper bound on `n` for enumerating `H(B_n)`.
pub const B_CAP: usize = 5;

/// A permutation `w` of `±{1, …, n}` with `w(-i) = -w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedPermutation {
    images: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as i8).collect() }
    }

    /// `images[i-1] = w(i)` for `i = 1, …, n`.
    pub fn from_images(images: Vec<i8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::NotAPermutation(format!("{images:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[i8] {
        &self.images
    }

    pub fn apply(&self, x: i8) -> i8 {
        let y = self.images[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -y
        } else {
            y
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k as i8 + 1)
    }

    /// Smallest `k ≥ 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(i8::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A reflection of `B_n`, stored as the normalized signed pair it swaps:
/// `(-i, i)` for a sign change, `(i, j)` for a short reflection and `(i, -j)`
/// for a long one, always with `0 < i < |j|`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BReflection {
    x: i8,
    y: i8,
}

impl BReflection {
    /// The reflection swapping `x ↔ y` (and `-x ↔ -y`).
    pub fn new(x: i8, y: i8) -> Result<Self> {
        if x == 0 || y == 0 || x == y || (x.abs() == y.abs() && x != -y) {
            return Err(Error::DegenerateTransposition(x.unsigned_abs()));
        }
        Ok(Self::normalized(x, y))
    }

    fn normalized(x: i8, y: i8) -> Self {
        if x == -y {
            let i = x.abs();
            return Self { x: -i, y: i };
        }
        let (mut x, mut y) = if x.abs() < y.abs() { (x, y) } else { (y, x) };
        if x < 0 {
            x = -x;
            y = -y;
        }
        Self { x, y }
    }

    pub fn sign_change(i: i8) -> Self {
        Self::normalized(-i, i)
    }

    pub fn pair(self) -> (i8, i8) {
        (self.x, self.y)
    }

    pub fn is_sign_change(self) -> bool {
        self.x == -self.y
    }

    pub fn apply(self, z: i8) -> i8 {
        match z {
            _ if z == self.x => self.y,
            _ if z == self.y => self.x,
            _ if z == -self.x => -self.y,
            _ if z == -self.y => -self.x,
            _ => z,
        }
    }

    pub fn to_signed_permutation(self, n: usize) -> SignedPermutation {
        SignedPermutation { images: (1..=n as i8).map(|i| self.apply(i)).collect() }
    }

    /// All `n²` reflections of `B_n`, sorted.
    pub fn all(n: usize) -> Vec<Self> {
        let n = n as i8;
        let mut out: Vec<Self> = (1..=n).map(Self::sign_change).collect();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Self::normalized(i, j));
                out.push(Self::normalized(i, -j));
            }
        }
        out.sort_unstable();
        out
    }
}

impl Reflection for BReflection {
    fn conjugate_by(self, h: Self) -> Self {
        Self::normalized(h.apply(self.x), h.apply(self.y))
    }
}

impl fmt::Display for BReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for BReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product `t_1 t_2 ⋯ t_k` in `B_n`, composed right to left.
pub fn b_product(n: usize, factors: &[BReflection]) -> SignedPermutation {
    factors
        .iter()
        .fold(SignedPermutation::identity(n), |acc, t| acc.compose(&t.to_signed_permutation(n)))
}

/// `e = ((-1,1), (1,2), …, (n-1,n))`.
pub fn b_base_factors(n: usize) -> Vec<BReflection> {
    let mut out = vec![BReflection::sign_change(1)];
    out.extend((1..n as i8).map(|i| BReflection::normalized(i, i + 1)));
    out
}

/// The Coxeter element `c`, the product of [`b_base_factors`].
pub fn b_coxeter_element(n: usize) -> SignedPermutation {
    b_product(n, &b_base_factors(n))
}

/// A length-`n` reflection factorization of `c` in `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BFactorWord {
    factors: Vec<BReflection>,
}

impl BFactorWord {
    pub fn new(n: usize, factors: Vec<BReflection>) -> Result<Self> {
        if factors.len() != n {
            return Err(Error::WrongLength { expected: n, got: factors.len() });
        }
        if b_product(n, &factors) != b_coxeter_element(n) {
            return Err(Error::NotAChain(format!("product of {factors:?} is not c")));
        }
        Ok(Self { factors })
    }

    pub fn base(n: usize) -> Self {
        Self { factors: b_base_factors(n) }
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[BReflection] {
        &self.factors
    }
}

impl HurwitzWord for BFactorWord {
    fn num_factors(&self) -> usize {
        self.factors.len()
    }

    fn right_at(&self, i: usize) -> Self {
        let mut out = self.clone();
        slide_right(&mut out.factors, i);
        out
    }

    fn left_at(&self, i: usize) -> Self {
        let mut out = self.clone();
        slide_left(&mut out.factors, i);
        out
    }
}

impl fmt::Display for BFactorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|t| format!("{} {}", t.x, t.y)).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for BFactorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BFactorWord({self})")
    }
}

/// The vertex set of `H(B_n)`: the Hurwitz orbit of `e`, sorted.
pub fn enumerate_hbn(n: usize) -> Result<Vec<BFactorWord>> {
    enumerate_hbn_capped(n, B_CAP)
}

pub fn enumerate_hbn_capped(n: usize, cap: usize) -> Result<Vec<BFactorWord>> {
    if n == 0 || n > cap {
        return Err(Error::CapExceeded(format!("type B rank {n} outside 1..={cap}")));
    }
    orbit(BFactorWord::base(n), usize::MAX)
}

/// Measured metrics of `H(B_n)` against the conjectured values.
#[derive(Clone, Debug, Serialize)]
pub struct BMetricReport {
    pub n: usize,
    pub count: usize,
    /// `n^n`, an outside expectation for the count; reported only.
    pub expected_count: u64,
    pub radius: u32,
    pub conjecture_radius: u32,
    pub radius_matches: bool,
    pub diameter: u32,
    pub ecc_e: u32,
    /// Vertices at distance `ecc(e)` from `e`.
    pub antipodes_e: usize,
    /// Vertices with no neighbor farther from `e`.
    pub geodesic_maximal_e: usize,
    pub reference_antipodes: Option<u64>,
    pub elapsed_ms: u128,
}

/// `binom(n, 2) + 1`.
pub fn b_radius_conjecture(n: usize) -> u32 {
    binomial(n, 2) as u32 + 1
}

/// Full sweep over `H(B_n)`; `reference` is an externally supplied antipode count.
pub fn b_metrics(n: usize, reference: Option<u64>) -> Result<BMetricReport> {
    b_metrics_capped(n, reference, B_CAP)
}

pub fn b_metrics_capped(n: usize, reference: Option<u64>, cap: usize) -> Result<BMetricReport> {
    let start = Instant::now();
    let graph = HurwitzGraph::from_words(enumerate_hbn_capped(n, cap)?);
    let (radius, diameter) = graph.radius_diameter(None)?;
    let e = graph.index_of(&BFactorWord::base(n)).expect("e is a vertex");
    let (ecc_e, dist) = graph.eccentricity(e);
    let antipodes_e = dist.iter().filter(|&&d| d == ecc_e).count();
    let csr = graph.csr();
    let geodesic_maximal_e = (0..graph.len() as u32)
        .filter(|&v| csr.neighbors(v).iter().all(|&u| dist[u as usize] <= dist[v as usize]))
        .count();
    let conjecture_radius = b_radius_conjecture(n);
    Ok(BMetricReport {
        n,
        count: graph.len(),
        expected_count: (n as u64).pow(n as u32),
        radius,
        conjecture_radius,
        radius_matches: radius == conjecture_radius,
        diameter,
        ecc_e,
        antipodes_e,
        geodesic_maximal_e,
        reference_antipodes: reference,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: every `n`-tuple of reflections with product `c`.
    fn brute_force(n: usize) -> Vec<Vec<BReflection>> {
        let refl = BReflection::all(n);
        let c = b_coxeter_element(n);
        let total = refl.len().pow(n as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut word = Vec::with_capacity(n);
            for _ in 0..n {
                word.push(refl[code % refl.len()]);
                code /= refl.len();
            }
            if b_product(n, &word) == c {
                out.push(word);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn reflections() {
        assert_eq!(BReflection::all(3).len(), 9);
        assert_eq!(BReflection::new(2, -1).unwrap().pair(), (1, -2));
        assert_eq!(BReflection::new(-2, -1).unwrap().pair(), (1, 2));
        assert_eq!(BReflection::new(2, -2).unwrap().pair(), (-2, 2));
        assert!(BReflection::new(1, 1).is_err());
        let s = BReflection::sign_change(1);
        assert_eq!(BReflection::new(1, 2).unwrap().conjugate_by(s).pair(), (1, -2));
        for t in BReflection::all(3) {
            assert_eq!(t.to_signed_permutation(3).order(), 2);
        }
    }

    #[test]
    fn coxeter_element() {
        assert_eq!(b_coxeter_element(1).images(), [-1]);
        for n in 1..=5 {
            assert_eq!(b_coxeter_element(n).order(), 2 * n);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=4 {
            let words = enumerate_hbn(n).unwrap();
            let listed: Vec<Vec<BReflection>> = words.iter().map(|w| w.factors().to_vec()).collect();
            assert_eq!(listed, brute_force(n), "n = {n}");
            assert_eq!(words.len(), n.pow(n as u32));
        }
    }

    #[test]
    fn braid_relation_and_inverse_moves() {
        for w in enumerate_hbn(3).unwrap() {
            for i in 0..2 {
                assert_eq!(w.right_at(i).left_at(i), w);
                assert_eq!(w.left_at(i).right_at(i), w);
            }
            let lhs = w.right_at(0).right_at(1).right_at(0);
            let rhs = w.right_at(1).right_at(0).right_at(1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn metrics_small() {
        let r2 = b_metrics(2, None).unwrap();
        assert_eq!((r2.count, r2.radius, r2.diameter), (4, 2, 2));
        let r3 = b_metrics(3, Some(5)).unwrap();
        assert_eq!((r3.count, r3.radius, r3.diameter), (27, 4, 5));
        assert_eq!((r3.antipodes_e, r3.geodesic_maximal_e), (5, 6));
        assert!(r3.radius_matches);
    }
}

//! Enumeration of `F_n` and the Catalan-type identities around it.

pub mod dyck;
pub mod fiber;
pub mod poly;
pub mod trees;

pub use dyck::{dyck_paths, dyck_polynomial, dyck_statistics, DyckPath, DyckStats};
pub use fiber::{fiber_count, fiber_expansion, FiberCount, FiberCounter};
pub use poly::{carlitz_riordan, qt_catalan, QTPolynomial};
pub use trees::{
    alternating_trees, edge_pair_statistics, tree_polynomial, word_of_tree, EdgePairStats,
};

use crate::chain::inversion_table;
use crate::error::{Error, Result};
use crate::factor::{FactorWord, MAX_N};
use crate::hurwitz::orbit;
use crate::weak::maximal_elements;

/// Default upper bound on `n` for exhaustive enumeration of `F_n`.
pub const DEFAULT_ENUM_CAP: usize = 9;

/// All of `F_n` in canonical order, as the closure of `e` under Hurwitz moves.
pub fn enumerate(n: usize) -> Result<Vec<FactorWord>> {
    enumerate_capped(n, DEFAULT_ENUM_CAP)
}

pub fn enumerate_capped(n: usize, cap: usize) -> Result<Vec<FactorWord>> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::RankOutOfRange { n, min: 1, max: MAX_N });
    }
    if n > cap {
        return Err(Error::CapExceeded(format!("n = {n} exceeds enumeration cap {cap}")));
    }
    orbit(FactorWord::base(n), usize::MAX)
}

/// `n^{n-2}`, the number of labeled trees on `n` vertices (1 for `n ≤ 2`).
pub fn cayley_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u64 {
    (0..n as u64).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u64).fold(1u64, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// `Σ q^{inv_R(w)} t^{inv_L(w)}` over the maximal elements of `Weak(F_{n+1})`.
pub fn max_statistics(n: usize) -> Result<QTPolynomial> {
    Ok(statistics_polynomial(&maximal_elements(n + 1)?))
}

/// `Σ q^{inv_R(w)} t^{inv_L(w)}` over an arbitrary list of words.
pub fn statistics_polynomial(words: &[FactorWord]) -> QTPolynomial {
    let mut poly = QTPolynomial::zero();
    for w in words {
        let (r, l, _) = inversion_table(w).counts();
        poly.add_term(r as u32, l as u32, 1);
    }
    poly
}

/// `Σ q^{inv_L(w) + inv_N(w)}` over the maximal elements of `Weak(F_{n+1})`.
pub fn max_statistics_left_neutral(n: usize) -> Result<QTPolynomial> {
    let mut poly = QTPolynomial::zero();
    for w in maximal_elements(n + 1)? {
        let (_, l, nn) = inversion_table(&w).counts();
        poly.add_term((l + nn) as u32, 0, 1);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::is_valid_chain;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(1).unwrap().len(), 1);
        assert_eq!(enumerate(2).unwrap().len(), 1);
        assert_eq!(enumerate(4).unwrap().len(), 16);
        assert_eq!(enumerate(5).unwrap().len(), 125);
        assert_eq!(enumerate(7).unwrap().len(), 16807);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let ws = enumerate(5).unwrap();
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
        assert!(ws.iter().all(|w| is_valid_chain(5, w.factors())));
        assert_eq!(ws[0], FactorWord::base(5));
    }

    #[test]
    fn enumeration_respects_cap() {
        assert!(matches!(enumerate_capped(6, 5), Err(Error::CapExceeded(_))));
        assert!(matches!(enumerate(0), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn catalan_and_binomial() {
        let c: Vec<u64> = (0..8).map(catalan).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(cayley_count(7), 16807);
    }

    #[test]
    fn max_statistics_small() {
        assert_eq!(max_statistics(1).unwrap(), QTPolynomial::one());
        let p3 = max_statistics(3).unwrap();
        assert_eq!(p3, qt_catalan(3));
        assert_eq!(p3.coefficient(3, 0), 1);
    }
}

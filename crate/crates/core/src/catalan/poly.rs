//! Sparse bivariate integer polynomials in `q` and `t`.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

/// `Σ c_{a,b} q^a t^b` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QTPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(q: u32, t: u32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(q, t, c);
        p
    }

    pub fn add_term(&mut self, q: u32, t: u32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry((q, t)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&(q, t));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `((q_exp, t_exp), coefficient)` sorted by exponents.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coefficient(&self, q: u32, t: u32) -> i64 {
        self.terms.get(&(q, t)).copied().unwrap_or(0)
    }

    /// Value at `q = t = 1`.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((q, t), c) in other.terms() {
            out.add_term(q, t, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((q1, t1), c1) in self.terms() {
            for ((q2, t2), c2) in other.terms() {
                out.add_term(q1 + q2, t1 + t2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(q, t), &c)| ((q + a, t + b), c)).collect() }
    }

    /// `P(t, q)`.
    pub fn swap_qt(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(q, t), &c)| ((t, q), c)).collect() }
    }

    /// `P(q, 1)`, a polynomial in `q` alone.
    pub fn at_t_one(&self) -> Self {
        let mut out = Self::zero();
        for ((q, _), c) in self.terms() {
            out.add_term(q, 0, c);
        }
        out
    }

    /// `q^d · P(q⁻¹, t)`; `None` when some `q`-exponent exceeds `d`.
    pub fn reflect_q(&self, d: u32) -> Option<Self> {
        let mut out = Self::zero();
        for ((q, t), c) in self.terms() {
            out.add_term(d.checked_sub(q)?, t, c);
        }
        Some(out)
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mono = |var: &str, e: u32| match e {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{e}")),
        };
        // Highest total degree first reads like the usual hand expansion.
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((q, t), _)| (std::cmp::Reverse(q + t), std::cmp::Reverse(q)));
        for (k, ((q, t), c)) in terms.into_iter().enumerate() {
            let vars: Vec<String> = [mono("q", q), mono("t", t)].into_iter().flatten().collect();
            let sign = if c < 0 { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let mag = c.unsigned_abs();
            match (mag, vars.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{}", vars.join("*"))?,
                _ => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPolynomial({self})")
    }
}

/// Serialized as `{"terms": [{"q": a, "t": b, "c": coeff}, …]}`, sorted by `(q, t)`.
impl Serialize for QTPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            q: u32,
            t: u32,
            c: i64,
        }
        struct Terms<'a>(&'a QTPolynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.terms.len()))?;
                for ((q, t), c) in self.0.terms() {
                    seq.serialize_element(&Term { q, t, c })?;
                }
                seq.end()
            }
        }
        let mut st = serializer.serialize_struct("QTPolynomial", 1)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

/// `tC_n(q, t)` from `tC_{m+1} = Σ_k q^k t^{m-k} tC_k tC_{m-k}`, `tC_0 = 1`.
///
/// Coefficients are `i64`; the coefficient sum is `C_n`, so `n ≤ 35`.
pub fn qt_catalan(n: usize) -> QTPolynomial {
    let mut table = vec![QTPolynomial::one()];
    for m in 0..n {
        let mut next = QTPolynomial::zero();
        for k in 0..=m {
            let term = table[k].mul(&table[m - k]).shift(k as u32, (m - k) as u32);
            next = next.add(&term);
        }
        table.push(next);
    }
    table.swap_remove(n)
}

/// The Carlitz–Riordan `C_n(q)` from
/// `C_{m+1}(q) = Σ_k q^{(k+1)(m-k)} C_k(q) C_{m-k}(q)`, `C_0 = 1`.
pub fn carlitz_riordan(n: usize) -> QTPolynomial {
    let mut table = vec![QTPolynomial::one()];
    for m in 0..n {
        let mut next = QTPolynomial::zero();
        for k in 0..=m {
            let e = ((k + 1) * (m - k)) as u32;
            next = next.add(&table[k].mul(&table[m - k]).shift(e, 0));
        }
        table.push(next);
    }
    table.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, u32, i64)]) -> QTPolynomial {
        let mut p = QTPolynomial::zero();
        for &(q, t, c) in terms {
            p.add_term(q, t, c);
        }
        p
    }

    #[test]
    fn qt_catalan_small() {
        assert_eq!(qt_catalan(0), QTPolynomial::one());
        assert_eq!(qt_catalan(1), QTPolynomial::one());
        assert_eq!(qt_catalan(2), poly(&[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(
            qt_catalan(3),
            poly(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)])
        );
    }

    #[test]
    fn qt_catalan_symmetric_with_catalan_sum() {
        for n in 0..12 {
            let p = qt_catalan(n);
            assert_eq!(p.swap_qt(), p);
            assert_eq!(p.coefficient_sum() as u64, super::super::catalan(n));
        }
    }

    #[test]
    fn carlitz_riordan_small() {
        assert_eq!(carlitz_riordan(1), QTPolynomial::one());
        assert_eq!(carlitz_riordan(2), poly(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(
            carlitz_riordan(3),
            poly(&[(0, 0, 1), (1, 0, 1), (2, 0, 2), (3, 0, 1)])
        );
    }

    #[test]
    fn carlitz_riordan_from_qt_catalan() {
        for n in 0usize..14 {
            let d = (n * n.saturating_sub(1) / 2) as u32;
            let reflected = qt_catalan(n).at_t_one().reflect_q(d).unwrap();
            assert_eq!(reflected, carlitz_riordan(n), "n = {n}");
        }
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = QTPolynomial::monomial(1, 1, 2);
        p.add_term(1, 1, -2);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn display_and_json_shape() {
        let p = qt_catalan(3);
        assert_eq!(p.to_string(), "q^3 + q^2*t + q*t^2 + t^3 + q*t");
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with(r#"{"terms":[{"q":0,"t":3,"c":1},{"q":1,"t":1,"c":1}"#));
    }
}

//! Dyck paths with the `area` and `bmaj` statistics.

use std::fmt;

use serde::Serialize;

use super::poly::QTPolynomial;
use crate::error::{Error, Result};

/// Steps `±1` with all prefix sums `≥ 0` and total `0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DyckPath {
    steps: Vec<i8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DyckStats {
    pub area: usize,
    pub bmaj: usize,
}

impl DyckPath {
    pub fn new(steps: Vec<i8>) -> Result<Self> {
        let mut height = 0i64;
        for (k, &s) in steps.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::InvalidDyckPath(format!("step {} is {s}", k + 1)));
            }
            height += s as i64;
            if height < 0 {
                return Err(Error::InvalidDyckPath(format!("dips below zero at step {}", k + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath(format!("ends at height {height}")));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Parses `U`/`D` (or `(`/`)`) strings.
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' | '(' | '+' => Ok(1),
                'D' | 'd' | ')' | '-' => Ok(-1),
                _ => Err(Error::InvalidDyckPath(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Self::new(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(if s > 0 { "U" } else { "D" })?;
        }
        Ok(())
    }
}

/// All Dyck paths of semilength `n`, with `U` before `D` lexicographically.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(up: usize, down: usize, n: usize, cur: &mut Vec<i8>, out: &mut Vec<DyckPath>) {
        if down == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if up < n {
            cur.push(1);
            go(up + 1, down, n, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push(-1);
            go(up, down + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// `area` via inversion counts of the step sequence, with both forms checked;
/// `bmaj` from the prefix-sum scan at each internal local minimum.
pub fn dyck_statistics(p: &DyckPath) -> DyckStats {
    let n = p.semilength() as i64;
    let eps = &p.steps;
    let (mut down_before_up, mut up_before_down) = (0i64, 0i64);
    let (mut ups, mut downs) = (0i64, 0i64);
    for &s in eps {
        if s > 0 {
            down_before_up += downs;
            ups += 1;
        } else {
            up_before_down += ups;
            downs += 1;
        }
    }
    let area = n * (n - 1) / 2 - down_before_up;
    assert_eq!(area, up_before_down - n * (n + 1) / 2, "area formulas disagree");

    let len = eps.len();
    let mut bmaj = 0;
    // 0-based `i` here is the 1-based position `i + 1`.
    for i in 0..len.saturating_sub(1) {
        if eps[i] != -1 || eps[i + 1] != 1 {
            continue;
        }
        let mut sum = 0i64;
        let mut steps = 0;
        for &s in &eps[i + 1..] {
            sum += s as i64;
            if sum < 0 {
                break;
            }
            steps += 1;
        }
        bmaj += steps / 2;
    }
    DyckStats { area: area as usize, bmaj }
}

/// `Σ_{p ∈ D(n)} q^{area(p)} t^{bmaj(p)}`.
pub fn dyck_polynomial(n: usize) -> QTPolynomial {
    let mut poly = QTPolynomial::zero();
    for p in dyck_paths(n) {
        let s = dyck_statistics(&p);
        poly.add_term(s.area as u32, s.bmaj as u32, 1);
    }
    poly
}

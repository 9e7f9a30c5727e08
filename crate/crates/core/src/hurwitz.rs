//! The Hurwitz action on tuples of reflections, generic over the group.
//!
//! For a tuple `(t_1, …, t_k)` and `1 ≤ i < k`:
//!
//! * `R_i` replaces `(t_i, t_{i+1})` by `(t_{i+1}^{t_i}, t_i)`,
//! * `L_i` replaces `(t_i, t_{i+1})` by `(t_{i+1}, t_i^{t_{i+1}})`,
//!
//! where `g^h = h⁻¹ g h`. Both preserve the product of the tuple.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An involutive group element that can be conjugated by another one.
pub trait Reflection: Copy + Eq {
    /// `h⁻¹ · self · h`.
    fn conjugate_by(self, h: Self) -> Self;

    fn commutes_with(self, other: Self) -> bool {
        self.conjugate_by(other) == self
    }
}

/// `R_i` on a slice, 0-based: acts on entries `i` and `i + 1`.
#[inline]
pub fn slide_right<R: Reflection>(factors: &mut [R], i: usize) {
    let (s, t) = (factors[i], factors[i + 1]);
    factors[i] = t.conjugate_by(s);
    factors[i + 1] = s;
}

/// `L_i` on a slice, 0-based.
#[inline]
pub fn slide_left<R: Reflection>(factors: &mut [R], i: usize) {
    let (s, t) = (factors[i], factors[i + 1]);
    factors[i] = t;
    factors[i + 1] = s.conjugate_by(t);
}

/// A word on which the braid group acts by Hurwitz moves.
pub trait HurwitzWord: Clone + Eq + Hash + Ord + Send + Sync {
    fn num_factors(&self) -> usize;

    /// `R_{i+1}` with a 0-based index; `i + 1 < num_factors()`.
    fn right_at(&self, i: usize) -> Self;

    /// `L_{i+1}` with a 0-based index.
    fn left_at(&self, i: usize) -> Self;

    /// All distinct words one move away, sorted.
    fn neighbor_words(&self) -> Vec<Self> {
        let k = self.num_factors();
        let mut out = Vec::with_capacity(2 * k.saturating_sub(1));
        for i in 0..k.saturating_sub(1) {
            out.push(self.right_at(i));
            out.push(self.left_at(i));
        }
        out.sort_unstable();
        out.dedup();
        out.retain(|w| w != self);
        out
    }
}

/// A single Hurwitz move with a 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    Right(usize),
    Left(usize),
}

impl Move {
    pub fn position(self) -> usize {
        match self {
            Move::Right(i) | Move::Left(i) => i,
        }
    }

    pub fn apply<W: HurwitzWord>(self, w: &W) -> Result<W> {
        let max = w.num_factors().saturating_sub(1);
        let i = self.position();
        if i == 0 || i > max {
            return Err(Error::PositionOutOfRange { position: i, max });
        }
        Ok(match self {
            Move::Right(i) => w.right_at(i - 1),
            Move::Left(i) => w.left_at(i - 1),
        })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Right(i) => write!(f, "R{i}"),
            Move::Left(i) => write!(f, "L{i}"),
        }
    }
}

/// Closure of `start` under all Hurwitz moves, sorted canonically.
///
/// Fails with [`Error::CapExceeded`] once more than `max_words` words are seen.
pub fn orbit<W: HurwitzWord>(start: W, max_words: usize) -> Result<Vec<W>> {
    let mut seen: HashSet<W> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        let k = w.num_factors();
        for i in 0..k.saturating_sub(1) {
            for v in [w.right_at(i), w.left_at(i)] {
                if !seen.contains(&v) {
                    if seen.len() >= max_words {
                        return Err(Error::CapExceeded(format!(
                            "orbit exceeds {max_words} words"
                        )));
                    }
                    seen.insert(v.clone());
                    queue.push_back(v);
                }
            }
        }
    }
    let mut words: Vec<W> = seen.into_iter().collect();
    words.sort_unstable();
    Ok(words)
}

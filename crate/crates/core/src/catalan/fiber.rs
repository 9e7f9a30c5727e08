//! Fiber sizes `N(π) = |φ⁻¹(π)|` via the first-factor recursion.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::perm::Permutation;

/// `N(π)` together with `π`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberCount {
    pub pi: Permutation,
    pub count: u64,
}

/// Memoized evaluator; the memo is keyed on flattened patterns.
#[derive(Default)]
pub struct FiberCounter {
    memo: HashMap<Vec<u8>, u64>,
}

impl FiberCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, pi: &Permutation) -> u64 {
        if pi.len() <= 1 {
            return 1;
        }
        if let Some(&c) = self.memo.get(pi.images()) {
            return c;
        }
        let c = split_terms(pi)
            .into_iter()
            .map(|(a, b)| self.count(&a) * self.count(&b))
            .sum();
        self.memo.insert(pi.images().to_vec(), c);
        c
    }
}

/// The pairs `(p(π|A(i,j)), p(π|B(i,j)))` for `i = 1, …, j-1`, where `j = π(1) + 1`.
fn split_terms(pi: &Permutation) -> Vec<(Permutation, Permutation)> {
    let m = pi.len() as u8;
    let j = pi.apply(1) + 1;
    (1..j)
        .map(|i| {
            let a: BTreeSet<u8> = (i..=j - 2).collect();
            let b: BTreeSet<u8> = (1..i).chain(j..=m).collect();
            (pi.pattern(&a), pi.pattern(&b))
        })
        .collect()
}

pub fn fiber_count(pi: &Permutation) -> FiberCount {
    FiberCount { pi: pi.clone(), count: FiberCounter::new().count(pi) }
}

/// One level of the recursion: the pattern pairs whose count products sum to `N(π)`.
/// Empty for `π` of length ≤ 1.
pub fn fiber_expansion(pi: &Permutation) -> Vec<(Permutation, Permutation)> {
    if pi.len() <= 1 {
        return Vec::new();
    }
    split_terms(pi)
}

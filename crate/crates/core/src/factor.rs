//! Transpositions, minimal factorizations of the long cycle, and the moves
//! acting on them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hurwitz::{slide_left, slide_right, HurwitzWord, Reflection};
use crate::perm::Permutation;

/// Largest supported rank parameter. Labels fit in a byte and a word packs
/// into `2 (MAX_N - 1)` bytes.
pub const MAX_N: usize = 12;
const MAX_FACTORS: usize = MAX_N - 1;
const _: () = assert!(MAX_N >= 2 && MAX_N < u8::MAX as usize);

/// A transposition `(a, b)` of `S_n`, stored with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Transposition {
    a: u8,
    b: u8,
}

impl Transposition {
    /// Normalizes the order of the two points.
    pub fn new(x: u8, y: u8) -> Result<Self> {
        if x == y {
            return Err(Error::DegenerateTransposition(x));
        }
        if x == 0 || y == 0 {
            return Err(Error::LabelOutOfRange { label: 0, n: MAX_N });
        }
        Ok(Self::new_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn new_unchecked(x: u8, y: u8) -> Self {
        debug_assert!(x != y);
        if x < y {
            Self { a: x, b: y }
        } else {
            Self { a: y, b: x }
        }
    }

    #[inline]
    pub fn a(self) -> u8 {
        self.a
    }

    #[inline]
    pub fn b(self) -> u8 {
        self.b
    }

    #[inline]
    pub fn contains(self, x: u8) -> bool {
        self.a == x || self.b == x
    }

    /// The image of `x`.
    #[inline]
    pub fn apply(self, x: u8) -> u8 {
        if x == self.a {
            self.b
        } else if x == self.b {
            self.a
        } else {
            x
        }
    }

    /// The other endpoint, when `x` is moved.
    pub fn partner(self, x: u8) -> Option<u8> {
        self.contains(x).then(|| self.apply(x))
    }

    /// Conjugation `h⁻¹ (a,b) h = (h⁻¹(a), h⁻¹(b))` by an arbitrary permutation.
    pub fn conjugate_by_perm(self, h: &Permutation) -> Self {
        let hinv = h.inverse();
        Self::new_unchecked(hinv.apply(self.a), hinv.apply(self.b))
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        !other.contains(self.a) && !other.contains(self.b)
    }

    /// The chords `{a,b}` and `{c,d}` of a circle labeled `1..n` cross in
    /// their interiors.
    pub fn crosses(self, other: Self) -> bool {
        let (a, b, c, d) = (self.a, self.b, other.a, other.b);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    pub fn to_permutation(self, n: usize) -> Permutation {
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(self.a as usize - 1, self.b as usize - 1);
        Permutation::from_images_unchecked(images)
    }
}

impl Reflection for Transposition {
    #[inline]
    fn conjugate_by(self, h: Self) -> Self {
        Self::new_unchecked(h.apply(self.a), h.apply(self.b))
    }

    #[inline]
    fn commutes_with(self, other: Self) -> bool {
        self == other || self.is_disjoint(other)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for tests and fixtures: `t(1, 2)`. Panics on degenerate input.
pub fn t(x: u8, y: u8) -> Transposition {
    Transposition::new(x, y).expect("valid transposition")
}

/// Product `t_1 t_2 ⋯ t_k` of an arbitrary sequence of transpositions in `S_n`.
pub fn product(n: usize, factors: &[Transposition]) -> Permutation {
    let mut images: Vec<u8> = (1..=n as u8).collect();
    // (p * t)(x) = p(t(x)): right multiplication swaps the entries at a and b.
    for f in factors {
        images.swap(f.a as usize - 1, f.b as usize - 1);
    }
    Permutation::from_images_unchecked(images)
}

/// Outcome of the three Goulden–Yong conditions on a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GouldenYong {
    pub is_tree: bool,
    pub non_crossing: bool,
    pub cyclically_decreasing: bool,
}

impl GouldenYong {
    pub fn holds(self) -> bool {
        self.is_tree && self.non_crossing && self.cyclically_decreasing
    }
}

/// Evaluates the Goulden–Yong conditions for `n - 1` transpositions on `1..=n`:
/// the edge graph is a tree, it is non-crossing when drawn on a circle, and
/// around every vertex `a` the other endpoints appear in decreasing `<_a`
/// order, where `<_a` is `a < a+1 < … < n < 1 < … < a-1`.
pub fn goulden_yong(n: usize, factors: &[Transposition]) -> GouldenYong {
    let is_tree = factors.len() + 1 == n
        && factors.iter().all(|f| f.b as usize <= n)
        && is_spanning_tree(n, factors.iter().map(|f| (f.a, f.b)));
    let non_crossing = factors
        .iter()
        .enumerate()
        .all(|(i, f)| factors[i + 1..].iter().all(|g| !f.crosses(*g)));
    let cyc_key = |a: u8, x: u8| (x as usize + n - a as usize) % n;
    let mut cyclically_decreasing = true;
    'outer: for (i, f) in factors.iter().enumerate() {
        for g in &factors[i + 1..] {
            for a in [f.a, f.b] {
                if let (Some(c), Some(b)) = (f.partner(a), g.partner(a)) {
                    if cyc_key(a, c) <= cyc_key(a, b) {
                        cyclically_decreasing = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    GouldenYong { is_tree, non_crossing, cyclically_decreasing }
}

/// Goulden–Yong membership test for `F_n`.
pub fn is_valid_chain(n: usize, factors: &[Transposition]) -> bool {
    goulden_yong(n, factors).holds()
}

pub(crate) fn is_spanning_tree(n: usize, edges: impl IntoIterator<Item = (u8, u8)>) -> bool {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = 0;
    for (a, b) in edges {
        let (a, b) = (a as usize, b as usize);
        if a == 0 || b == 0 || a > n || b > n {
            return false;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
        count += 1;
    }
    count + 1 == n
}

/// A maximal chain of `NC(n)`: transpositions `(t_1, …, t_{n-1})` with
/// `t_1 ⋯ t_{n-1} = (1, 2, …, n)`.
///
/// Words are small `Copy` values. Unused trailing slots are zero so the
/// derived ordering is lexicographic on the flattened pair sequence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorWord {
    n: u8,
    factors: [Transposition; MAX_FACTORS],
}

impl FactorWord {
    /// Builds a word and checks it multiplies to the long cycle.
    pub fn new(n: usize, factors: &[Transposition]) -> Result<Self> {
        let w = Self::from_factors_unchecked(n, factors)?;
        if product(n, factors) != Permutation::long_cycle(n) {
            return Err(Error::NotAChain(w.to_string()));
        }
        Ok(w)
    }

    /// Checks shape only; the caller guarantees the product.
    pub(crate) fn from_factors_unchecked(n: usize, factors: &[Transposition]) -> Result<Self> {
        if !(1..=MAX_N).contains(&n) {
            return Err(Error::RankOutOfRange { n, min: 1, max: MAX_N });
        }
        if factors.len() != n - 1 {
            return Err(Error::WrongLength { expected: n - 1, got: factors.len() });
        }
        if let Some(f) = factors.iter().find(|f| f.b as usize > n) {
            return Err(Error::LabelOutOfRange { label: f.b as i32, n });
        }
        let mut packed = [Transposition::default(); MAX_FACTORS];
        packed[..factors.len()].copy_from_slice(factors);
        Ok(Self { n: n as u8, factors: packed })
    }

    /// The distinguished word `e = ((1,2), (2,3), …, (n-1,n))`.
    pub fn base(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "n = {n} outside 1..={MAX_N}");
        let factors: Vec<_> = (1..n as u8).map(|i| Transposition::new_unchecked(i, i + 1)).collect();
        Self::from_factors_unchecked(n, &factors).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.n as usize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.n <= 1
    }

    pub fn factors(&self) -> &[Transposition] {
        &self.factors[..self.len()]
    }

    /// The 1-based factor `t_j`.
    pub fn factor(&self, j: usize) -> Transposition {
        self.factors()[j - 1]
    }

    pub fn product(&self) -> Permutation {
        product(self.n(), self.factors())
    }

    fn check_move_position(&self, i: usize) -> Result<()> {
        let max = self.len().saturating_sub(1);
        if i == 0 || i > max {
            return Err(Error::PositionOutOfRange { position: i, max });
        }
        Ok(())
    }

    /// `R_i`: slides the `i`-th factor one step to the right.
    pub fn hurwitz_right(&self, i: usize) -> Result<Self> {
        self.check_move_position(i)?;
        Ok(self.right_at(i - 1))
    }

    /// `L_i`: slides the `(i+1)`-st factor one step to the left.
    pub fn hurwitz_left(&self, i: usize) -> Result<Self> {
        self.check_move_position(i)?;
        Ok(self.left_at(i - 1))
    }

    /// The neighborhood of the word in the Hurwitz graph, sorted.
    pub fn neighbors(&self) -> Vec<Self> {
        self.neighbor_words()
    }

    /// `ι(t_1, …, t_{n-1}) = (t_{n-1}^{σ₀}, …, t_1^{σ₀})` with `σ₀ = [n, …, 1]`.
    pub fn iota(&self) -> Self {
        let m = self.n + 1;
        let mut out = *self;
        for (slot, f) in out.factors[..self.len()].iter_mut().zip(self.factors().iter().rev()) {
            *slot = Transposition::new_unchecked(m - f.b, m - f.a);
        }
        out
    }

    /// The geometric graph `G(w)`: the edge set of the word.
    pub fn tree(&self) -> GeometricTree {
        GeometricTree::from_edges_unchecked(
            self.n(),
            self.factors().iter().map(|f| (f.a, f.b)).collect(),
        )
    }

    /// Number of factors moving `label`.
    pub fn label_count(&self, label: u8) -> usize {
        self.factors().iter().filter(|f| f.contains(label)).count()
    }

    /// Compact display label, e.g. `12,23,34`. Only unambiguous
    /// for `n ≤ 9`.
    pub fn compact_label(&self) -> String {
        let parts: Vec<String> = self.factors().iter().map(|f| format!("{}{}", f.a, f.b)).collect();
        parts.join(",")
    }

    /// Parses the compact label `12,23,34` (single-digit labels only).
    pub fn from_compact_label(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::new(1, &[]);
        }
        let mut factors = Vec::new();
        for part in s.split(',') {
            let digits: Vec<u8> = part
                .trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad factor {part:?}")))?;
            if digits.len() != 2 {
                return Err(Error::Parse(format!("bad factor {part:?}")));
            }
            factors.push(Transposition::new(digits[0], digits[1])?);
        }
        Self::new(factors.len() + 1, &factors)
    }
}

impl HurwitzWord for FactorWord {
    fn num_factors(&self) -> usize {
        self.len()
    }

    #[inline]
    fn right_at(&self, i: usize) -> Self {
        let mut out = *self;
        slide_right(&mut out.factors[..self.len()], i);
        out
    }

    #[inline]
    fn left_at(&self, i: usize) -> Self {
        let mut out = *self;
        slide_left(&mut out.factors[..self.len()], i);
        out
    }
}

/// Canonical string form `a b,c d,…` with 1-based labels.
impl fmt::Display for FactorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.factors().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{} {}", t.a, t.b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FactorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactorWord({self})")
    }
}

/// Parses the canonical form `a b,c d,…`; `n` is one more than the number of
/// factors. The empty string is the unique word of `F_1`.
impl FromStr for FactorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::new(1, &[]);
        }
        let mut factors = Vec::new();
        for part in s.split(',') {
            let nums: Vec<u8> = part
                .split_whitespace()
                .map(|x| x.parse::<u8>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
                .collect::<Result<_>>()?;
            if nums.len() != 2 {
                return Err(Error::Parse(format!("factor {part:?} needs two labels")));
            }
            factors.push(Transposition::new(nums[0], nums[1])?);
        }
        Self::new(factors.len() + 1, &factors)
    }
}

/// An edge set on the vertices `1..=n`, drawn on a circle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GeometricTree {
    n: usize,
    edges: Vec<(u8, u8)>,
}

impl GeometricTree {
    /// Validates that the edges form a spanning tree of `1..=n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u8, u8)>) -> Result<Self> {
        let mut norm: Vec<(u8, u8)> = Vec::new();
        for (x, y) in edges {
            if x == y {
                return Err(Error::InvalidTree(format!("loop at {x}")));
            }
            norm.push((x.min(y), x.max(y)));
        }
        if n == 0 || !is_spanning_tree(n, norm.iter().copied()) {
            return Err(Error::InvalidTree(format!("{norm:?} is not a spanning tree of 1..={n}")));
        }
        norm.sort_unstable();
        Ok(Self { n, edges: norm })
    }

    pub(crate) fn from_edges_unchecked(n: usize, mut edges: Vec<(u8, u8)>) -> Self {
        edges.sort_unstable();
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    pub fn has_edge(&self, a: u8, b: u8) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn neighbors(&self, v: u8) -> impl Iterator<Item = u8> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// The first pair of crossing edges, if any.
    pub fn crossing_pair(&self) -> Option<((u8, u8), (u8, u8))> {
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for &(c, d) in &self.edges[i + 1..] {
                if Transposition::new_unchecked(a, b).crosses(Transposition::new_unchecked(c, d)) {
                    return Some(((a, b), (c, d)));
                }
            }
        }
        None
    }

    pub fn is_non_crossing(&self) -> bool {
        self.crossing_pair().is_none()
    }

    /// Every vertex has all neighbors above it or all below it.
    pub fn is_alternating(&self) -> bool {
        (1..=self.n as u8).all(|v| {
            let mut nb = self.neighbors(v).peekable();
            match nb.peek() {
                None => true,
                Some(&first) => {
                    let above = first > v;
                    nb.all(|u| (u > v) == above)
                }
            }
        })
    }

    /// Vertices in the component of `root` after deleting the edge `cut`.
    /// Returned as a membership table indexed by label.
    pub fn component_without(&self, cut: (u8, u8), root: u8) -> Vec<bool> {
        let cut = (cut.0.min(cut.1), cut.0.max(cut.1));
        let mut inside = vec![false; self.n + 1];
        let mut stack = vec![root];
        inside[root as usize] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                if (a, b) == cut {
                    continue;
                }
                let u = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !inside[u as usize] {
                    inside[u as usize] = true;
                    stack.push(u);
                }
            }
        }
        inside
    }
}

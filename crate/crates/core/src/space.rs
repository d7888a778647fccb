//! Finite topological spaces encoded by their specialization preorder.
//!
//! Orientation convention, used everywhere in this crate: `x <= y` means
//! that `x` lies in the closure of `{y}` (x is a specialization of y).
//! Closed sets are exactly the down-sets of the preorder and open sets are
//! exactly the up-sets. Every other routine is written against
//! [`FiniteSpace::closure`] and [`FiniteSpace::interior`] only.
//!
//! A map between finite spaces is continuous if and only if it is monotone
//! for the specialization preorders: preimages of down-sets are down-sets
//! exactly when `x <= y` implies `f(x) <= f(y)`. [`SpaceMap`] enforces
//! monotonicity on construction.

use std::fmt;
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard limit imposed by the bitmask representation of [`PointSet`].
pub const MAX_POINTS: usize = 64;

/// A subset of the points of some [`FiniteSpace`], stored as a bitmask.
///
/// The set does not carry its ambient space; the space is always passed
/// alongside it and [`FiniteSpace::contains_set`] checks membership bounds.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(x: usize) -> Self {
        PointSet(1 << x)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        PointSet(points.into_iter().fold(0, |acc, x| acc | (1 << x)))
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 & (1 << x) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    /// Every subset of `self`, starting from `self` and ending with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(PointSet(cur))
        })
    }

    /// Smallest point, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        PointSet::from_points(iter)
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let points = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = points.iter().find(|&&x| x >= MAX_POINTS) {
            return Err(D::Error::custom(format!("point index {bad} out of range")));
        }
        Ok(PointSet::from_points(points))
    }
}

/// Upper bound on the number of points that exhaustive routines will
/// enumerate. Work is exponential in the point count, so anything above
/// the default must be requested explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCap(pub usize);

impl SizeCap {
    pub const DEFAULT: SizeCap = SizeCap(16);

    pub fn check(self, space: &FiniteSpace) -> Result<()> {
        if space.len() > self.0 {
            Err(Error::SizeCapExceeded {
                points: space.len(),
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeCap {
    fn default() -> Self {
        SizeCap::DEFAULT
    }
}

/// A finite topological space, given by its specialization preorder.
///
/// `down[y]` is the closure of `{y}` and `up[x]` is the smallest open set
/// containing `x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    down: Vec<PointSet>,
    up: Vec<PointSet>,
}

impl FiniteSpace {
    /// Builds the space whose preorder is the reflexive-transitive closure
    /// of `pairs`, where `(x, y)` asserts `x <= y`, i.e. `x ∈ cl{y}`.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints {
                points: n,
                max: MAX_POINTS,
            });
        }
        let mut down: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(x, y) in pairs {
            for index in [x, y] {
                if index >= n {
                    return Err(Error::PointOutOfRange { index, points: n });
                }
            }
            down[y].insert(x);
        }
        // Warshall: if k <= j then everything below k is below j.
        for k in 0..n {
            for j in 0..n {
                if down[j].contains(k) {
                    down[j] = down[j].union(down[k]);
                }
            }
        }
        Ok(Self::from_down_sets(down))
    }

    fn from_down_sets(down: Vec<PointSet>) -> Self {
        let n = down.len();
        let mut up = vec![PointSet::EMPTY; n];
        for (y, d) in down.iter().enumerate() {
            for x in d.iter() {
                up[x].insert(y);
            }
        }
        FiniteSpace { down, up }
    }

    pub fn point() -> Self {
        Self::discrete(1)
    }

    pub fn discrete(n: usize) -> Self {
        Self::new(n, &[]).expect("discrete space within limits")
    }

    pub fn indiscrete(n: usize) -> Self {
        let pairs: Vec<_> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        Self::new(n, &pairs).expect("indiscrete space within limits")
    }

    /// Two points, `1 ∈ cl{0}`: point 0 is generic and point 1 is closed.
    pub fn sierpinski() -> Self {
        Self::new(2, &[(1, 0)]).expect("static space")
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    /// `x <= y`, i.e. `x ∈ cl{y}`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn contains_set(&self, s: PointSet) -> bool {
        s.is_subset(self.full())
    }

    /// Closure of `{x}`.
    pub fn point_closure(&self, x: usize) -> PointSet {
        self.down[x]
    }

    /// Smallest open set containing `x`.
    pub fn point_neighbourhood(&self, x: usize) -> PointSet {
        self.up[x]
    }

    /// The strict relation pairs `(x, y)` with `x <= y`, `x != y`; feeding
    /// them back to [`FiniteSpace::new`] reproduces the space.
    pub fn specializations(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for y in self.points() {
            for x in self.down[y].iter() {
                if x != y {
                    pairs.push((x, y));
                }
            }
        }
        pairs.sort_unstable();
        pairs
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        s.iter()
            .fold(PointSet::EMPTY, |acc, y| acc.union(self.down[y]))
    }

    pub fn interior(&self, s: PointSet) -> PointSet {
        self.points().filter(|&x| self.up[x].is_subset(s)).collect()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.closure(s) == s
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    /// Largest subset of `s` that is open in the subspace `within`.
    /// Requires `s ⊆ within`.
    pub fn relative_interior(&self, s: PointSet, within: PointSet) -> PointSet {
        s.iter()
            .filter(|&x| self.up[x].intersection(within).is_subset(s))
            .collect()
    }

    /// `s ⊆ within` is open in the subspace topology of `within`.
    pub fn is_relatively_open(&self, s: PointSet, within: PointSet) -> bool {
        s.is_subset(within) && self.relative_interior(s, within) == s
    }

    /// `s = O ∩ C` for an open `O` and closed `C`; equivalently `s` is
    /// open in its closure.
    pub fn is_locally_closed(&self, s: PointSet) -> bool {
        self.is_relatively_open(s, self.closure(s))
    }

    /// Non-empty and not the union of two proper relatively closed subsets.
    /// For finite spaces: some `x ∈ s` has `s ⊆ cl{x}`.
    pub fn is_irreducible(&self, s: PointSet) -> bool {
        s.iter().any(|x| s.is_subset(self.down[x]))
    }

    /// All `x ∈ s` with `cl{x} = s`. `s` must be closed and irreducible.
    pub fn generic_points(&self, s: PointSet) -> Result<PointSet> {
        if !self.contains_set(s) || !self.is_closed(s) || !self.is_irreducible(s) {
            return Err(Error::Misuse(format!(
                "generic points requested for {s}, which is not an irreducible closed set"
            )));
        }
        Ok(s.iter().filter(|&x| self.down[x] == s).collect())
    }

    /// Every irreducible closed subset has exactly one generic point. For
    /// finite spaces this is the T0 axiom.
    pub fn is_sober(&self) -> bool {
        self.irreducible_closed_sets()
            .into_iter()
            .all(|z| self.generic_points(z).map(PointSet::len) == Ok(1))
    }

    /// Antisymmetry of the preorder.
    pub fn is_t0(&self) -> bool {
        self.points().all(|x| {
            self.points()
                .all(|y| x == y || !(self.leq(x, y) && self.leq(y, x)))
        })
    }

    /// Irreducible closed subsets, which in a finite space are exactly the
    /// point closures. Each appears once, in order of its smallest generic point.
    pub fn irreducible_closed_sets(&self) -> Vec<PointSet> {
        let mut seen = Vec::new();
        for x in self.points() {
            if !seen.contains(&self.down[x]) {
                seen.push(self.down[x]);
            }
        }
        seen
    }

    /// Points `x` with `{x}` closed.
    pub fn closed_points(&self) -> PointSet {
        self.points()
            .filter(|&x| self.down[x] == PointSet::singleton(x))
            .collect()
    }

    /// All open subsets, in increasing bitmask order.
    pub fn open_sets(&self, cap: SizeCap) -> Result<Vec<PointSet>> {
        cap.check(self)?;
        let mut opens: Vec<PointSet> = self.full().subsets().filter(|&s| self.is_open(s)).collect();
        opens.reverse();
        Ok(opens)
    }

    /// All locally closed subsets (including the empty set), in increasing
    /// bitmask order.
    pub fn locally_closed_sets(&self, cap: SizeCap) -> Result<Vec<PointSet>> {
        cap.check(self)?;
        let mut sets: Vec<PointSet> = self
            .full()
            .subsets()
            .filter(|&s| self.is_locally_closed(s))
            .collect();
        sets.reverse();
        Ok(sets)
    }

    /// The non-empty subsets that are both irreducible and locally closed,
    /// each exactly once.
    ///
    /// Such a `U` is a non-empty open subset of the irreducible closed set
    /// `cl(U)`, so the enumeration walks point closures `Z` and their
    /// non-empty relatively open subsets. Distinct `Z` give disjoint batches
    /// because `U` determines `Z` as its closure.
    pub fn irreducible_locally_closed_sets(&self, cap: SizeCap) -> Result<Vec<PointSet>> {
        cap.check(self)?;
        let mut out = Vec::new();
        for z in self.irreducible_closed_sets() {
            let mut batch: Vec<PointSet> = z
                .subsets()
                .filter(|&u| !u.is_empty() && self.is_relatively_open(u, z))
                .collect();
            batch.reverse();
            out.extend(batch);
        }
        Ok(out)
    }

    /// The subspace on `s`, together with the embedding of its points
    /// (subspace point `i` is ambient point `embedding[i]`).
    ///
    /// The subspace topology of a finite space is the Alexandrov topology
    /// of the restricted preorder.
    pub fn subspace(&self, s: PointSet) -> (FiniteSpace, Vec<usize>) {
        let embedding: Vec<usize> = s.intersection(self.full()).iter().collect();
        let down = embedding
            .iter()
            .map(|&y| {
                embedding
                    .iter()
                    .enumerate()
                    .filter(|&(_, &x)| self.leq(x, y))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        (Self::from_down_sets(down), embedding)
    }

    /// Every preorder on `n` labelled points. Feasible for `n <= 5`.
    pub fn all_preorders(n: usize) -> Vec<FiniteSpace> {
        assert!(
            n <= 5,
            "preorder enumeration is only supported up to 5 points"
        );
        let off_diag: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << off_diag.len()) {
            let mut down: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
            for (bit, &(x, y)) in off_diag.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    down[y].insert(x);
                }
            }
            // transitive iff every down-set is closed under going down
            let transitive = (0..n).all(|y| down[y].iter().all(|k| down[k].is_subset(down[y])));
            if transitive {
                out.push(Self::from_down_sets(down));
            }
        }
        out
    }

    /// All monotone (= continuous) maps from `self` to `target`, as
    /// assignments, in lexicographic order.
    pub fn monotone_assignments(&self, target: &FiniteSpace) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut out = Vec::new();
        if n > 0 && target.is_empty() {
            return out;
        }
        let mut current = Vec::with_capacity(n);
        self.extend_monotone(target, &mut current, &mut out);
        out
    }

    fn extend_monotone(
        &self,
        target: &FiniteSpace,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let x = current.len();
        if x == self.len() {
            out.push(current.clone());
            return;
        }
        for y in target.points() {
            let consistent = (0..x).all(|w| {
                (!self.leq(w, x) || target.leq(current[w], y))
                    && (!self.leq(x, w) || target.leq(y, current[w]))
            });
            if consistent {
                current.push(y);
                self.extend_monotone(target, current, out);
                current.pop();
            }
        }
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSpace")
            .field("points", &self.len())
            .field("specializations", &self.specializations())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct SpaceRepr {
    points: usize,
    specializations: Vec<(usize, usize)>,
}

impl Serialize for FiniteSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SpaceRepr {
            points: self.len(),
            specializations: self.specializations(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteSpace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SpaceRepr::deserialize(deserializer)?;
        FiniteSpace::new(repr.points, &repr.specializations).map_err(D::Error::custom)
    }
}

/// A continuous map between finite spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct SpaceMap {
    source: Arc<FiniteSpace>,
    target: Arc<FiniteSpace>,
    assignment: Vec<usize>,
}

impl SpaceMap {
    pub fn new(
        source: impl Into<Arc<FiniteSpace>>,
        target: impl Into<Arc<FiniteSpace>>,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        let source = source.into();
        let target = target.into();
        if assignment.len() != source.len() {
            return Err(Error::AssignmentLength {
                expected: source.len(),
                got: assignment.len(),
            });
        }
        if let Some(&index) = assignment.iter().find(|&&y| y >= target.len()) {
            return Err(Error::PointOutOfRange {
                index,
                points: target.len(),
            });
        }
        for hi in source.points() {
            for lo in source.point_closure(hi).iter() {
                if !target.leq(assignment[lo], assignment[hi]) {
                    return Err(Error::NotContinuous {
                        lo,
                        hi,
                        f_lo: assignment[lo],
                        f_hi: assignment[hi],
                    });
                }
            }
        }
        Ok(SpaceMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(space: impl Into<Arc<FiniteSpace>>) -> Self {
        let space = space.into();
        let assignment = space.points().collect();
        SpaceMap {
            source: space.clone(),
            target: space,
            assignment,
        }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<FiniteSpace> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<FiniteSpace> {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn image(&self, s: PointSet) -> PointSet {
        s.iter().map(|x| self.assignment[x]).collect()
    }

    pub fn preimage(&self, t: PointSet) -> PointSet {
        self.source
            .points()
            .filter(|&x| t.contains(self.assignment[x]))
            .collect()
    }

    /// `f|_S : S -> Y` with the subspace topology on `S`.
    pub fn restrict(&self, s: PointSet) -> SpaceMap {
        let (sub, embedding) = self.source.subspace(s);
        let assignment = embedding.iter().map(|&x| self.assignment[x]).collect();
        SpaceMap {
            source: Arc::new(sub),
            target: self.target.clone(),
            assignment,
        }
    }

    /// `f : X -> Y'` for `f(X) ⊆ Y' ⊆ Y`, with the subspace topology on `Y'`.
    pub fn corestrict(&self, target_subset: PointSet) -> Result<SpaceMap> {
        let image = self.image(self.source.full());
        if !image.is_subset(target_subset) {
            return Err(Error::Misuse(format!(
                "corestriction target {target_subset} does not contain the image {image}"
            )));
        }
        let (sub, embedding) = self.target.subspace(target_subset);
        let assignment = self
            .assignment
            .iter()
            .map(|y| {
                embedding
                    .iter()
                    .position(|e| e == y)
                    .expect("image inside target subset")
            })
            .collect();
        Ok(SpaceMap {
            source: self.source.clone(),
            target: Arc::new(sub),
            assignment,
        })
    }

    /// `f_V : f^{-1}(V) -> V` for an open `V ⊆ Y`.
    pub fn over(&self, target_subset: PointSet) -> SpaceMap {
        let preimage = self.preimage(target_subset);
        self.restrict(preimage)
            .corestrict(target_subset)
            .expect("restricted map lands in the target subset")
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &SpaceMap) -> Result<SpaceMap> {
        if self.target.len() != outer.source.len() || *self.target != *outer.source {
            return Err(Error::NotComposable {
                inner: self.target.len(),
                outer: outer.source.len(),
            });
        }
        Ok(SpaceMap {
            source: self.source.clone(),
            target: outer.target.clone(),
            assignment: self
                .assignment
                .iter()
                .map(|&y| outer.assignment[y])
                .collect(),
        })
    }
}

impl fmt::Debug for SpaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpaceMap")
            .field("source", &*self.source)
            .field("target", &*self.target)
            .field("assignment", &self.assignment)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    source: FiniteSpace,
    target: FiniteSpace,
    assignment: Vec<usize>,
}

impl Serialize for SpaceMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MapRepr {
            source: (*self.source).clone(),
            target: (*self.target).clone(),
            assignment: self.assignment.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpaceMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MapRepr::deserialize(deserializer)?;
        SpaceMap::new(repr.source, repr.target, repr.assignment).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn make_space_examples() {
        let point = FiniteSpace::new(1, &[]).unwrap();
        assert_eq!(
            point.open_sets(SizeCap::DEFAULT).unwrap(),
            vec![set(&[]), set(&[0])]
        );

        let sierpinski = FiniteSpace::new(2, &[(1, 0)]).unwrap();
        assert!(sierpinski.leq(1, 0));
        assert!(!sierpinski.leq(0, 1));
        assert_eq!(
            sierpinski.open_sets(SizeCap::DEFAULT).unwrap(),
            vec![set(&[]), set(&[0]), set(&[0, 1])]
        );

        let indiscrete = FiniteSpace::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            indiscrete.open_sets(SizeCap::DEFAULT).unwrap(),
            vec![set(&[]), set(&[0, 1])]
        );
        assert_eq!(indiscrete, FiniteSpace::indiscrete(2));
    }

    #[test]
    fn make_space_rejects_bad_index() {
        assert_eq!(
            FiniteSpace::new(2, &[(0, 2)]),
            Err(Error::PointOutOfRange {
                index: 2,
                points: 2
            })
        );
        assert!(matches!(
            FiniteSpace::new(65, &[]),
            Err(Error::TooManyPoints { .. })
        ));
    }

    #[test]
    fn transitive_closure_is_taken() {
        // 2 <= 1 <= 0 given as a chain; 2 <= 0 must follow
        let chain = FiniteSpace::new(3, &[(2, 1), (1, 0)]).unwrap();
        assert!(chain.leq(2, 0));
        assert_eq!(chain.point_closure(0), set(&[0, 1, 2]));
    }

    #[test]
    fn closure_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.closure(set(&[0])), set(&[0, 1]));
        assert_eq!(s.closure(set(&[1])), set(&[1]));
        assert_eq!(s.closure(PointSet::EMPTY), PointSet::EMPTY);
    }

    #[test]
    fn locally_closed_examples() {
        let s = FiniteSpace::sierpinski();
        assert!(s.is_locally_closed(set(&[0])));
        assert!(s.is_locally_closed(s.full()));
        let ind = FiniteSpace::indiscrete(2);
        assert!(!ind.is_locally_closed(set(&[0])));
        assert!(ind.is_locally_closed(ind.full()));
    }

    #[test]
    fn irreducible_examples() {
        assert!(FiniteSpace::sierpinski().is_irreducible(set(&[0, 1])));
        assert!(!FiniteSpace::discrete(2).is_irreducible(set(&[0, 1])));
        assert!(FiniteSpace::discrete(2).is_irreducible(set(&[1])));
        assert!(!FiniteSpace::discrete(2).is_irreducible(PointSet::EMPTY));
    }

    #[test]
    fn generic_point_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.generic_points(set(&[0, 1])), Ok(set(&[0])));
        assert_eq!(s.generic_points(set(&[1])), Ok(set(&[1])));
        let ind = FiniteSpace::indiscrete(2);
        assert_eq!(ind.generic_points(set(&[0, 1])), Ok(set(&[0, 1])));
        // {0} is not closed in the Sierpinski space
        assert!(matches!(s.generic_points(set(&[0])), Err(Error::Misuse(_))));
        assert!(matches!(
            FiniteSpace::discrete(2).generic_points(set(&[0, 1])),
            Err(Error::Misuse(_))
        ));
    }

    #[test]
    fn sober_examples() {
        assert!(FiniteSpace::sierpinski().is_sober());
        assert!(!FiniteSpace::indiscrete(2).is_sober());
        assert!(FiniteSpace::point().is_sober());
    }

    #[test]
    fn irreducible_locally_closed_examples() {
        let cap = SizeCap::DEFAULT;
        assert_eq!(
            FiniteSpace::point()
                .irreducible_locally_closed_sets(cap)
                .unwrap(),
            vec![set(&[0])]
        );
        let mut sierp = FiniteSpace::sierpinski()
            .irreducible_locally_closed_sets(cap)
            .unwrap();
        sierp.sort();
        assert_eq!(sierp, vec![set(&[0]), set(&[1]), set(&[0, 1])]);
        assert_eq!(
            FiniteSpace::indiscrete(2)
                .irreducible_locally_closed_sets(cap)
                .unwrap(),
            vec![set(&[0, 1])]
        );
    }

    #[test]
    fn size_cap_is_enforced() {
        let big = FiniteSpace::discrete(17);
        assert_eq!(
            big.open_sets(SizeCap::DEFAULT),
            Err(Error::SizeCapExceeded {
                points: 17,
                cap: 16
            })
        );
        assert!(big.open_sets(SizeCap(17)).is_ok());
    }

    #[test]
    fn preorder_counts() {
        // labelled preorders: 1, 1, 4, 29, 355
        let counts: Vec<usize> = (0..=4)
            .map(|n| FiniteSpace::all_preorders(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    }

    #[test]
    fn monotone_assignments_are_continuous() {
        let s = FiniteSpace::sierpinski();
        let maps = s.monotone_assignments(&s);
        // 0 -> 0 forces nothing; 0 -> 1 forces 1 -> 1
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        for a in maps {
            SpaceMap::new(s.clone(), s.clone(), a).unwrap();
        }
        assert!(matches!(
            SpaceMap::new(s.clone(), s.clone(), vec![1, 0]),
            Err(Error::NotContinuous { .. })
        ));
    }

    #[test]
    fn restriction_and_corestriction() {
        let chain = FiniteSpace::new(3, &[(2, 1), (1, 0)]).unwrap();
        let f = SpaceMap::identity(chain);
        let r = f.restrict(set(&[0, 2]));
        assert_eq!(r.source().len(), 2);
        assert!(r.source().leq(1, 0));
        assert_eq!(r.assignment(), &[0, 2]);
        let c = r.corestrict(set(&[0, 2])).unwrap();
        assert_eq!(c.assignment(), &[0, 1]);
        assert!(r.corestrict(set(&[0])).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let space: FiniteSpace = serde_json_like(r#"{"points": 2, "specializations": [[1,0]]}"#);
        assert_eq!(space, FiniteSpace::sierpinski());
    }

    fn serde_json_like(text: &str) -> FiniteSpace {
        serde_json::from_str(text).unwrap()
    }
}

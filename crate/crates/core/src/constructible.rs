//! Constructible subsets of finite spaces.
//!
//! Two deciders that share no code beyond the point-set primitives:
//! [`is_constructible_criterion`] (the production path, via dense
//! intersections with irreducible closed sets) and
//! [`is_constructible_bruteforce`] (a test oracle that searches for an
//! explicit union of locally closed pieces).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::space::{FiniteSpace, PointSet, SizeCap, SpaceMap};

/// A finite union of locally closed subsets. Pieces are not canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocallyClosedDecomposition {
    pieces: Vec<PointSet>,
}

impl LocallyClosedDecomposition {
    /// Checks that every piece is locally closed in `space`.
    pub fn new(space: &FiniteSpace, pieces: Vec<PointSet>) -> Result<Self> {
        if let Some(bad) = pieces.iter().find(|&&p| !space.is_locally_closed(p)) {
            return Err(Error::Misuse(format!("piece {bad} is not locally closed")));
        }
        Ok(LocallyClosedDecomposition { pieces })
    }

    pub fn pieces(&self) -> &[PointSet] {
        &self.pieces
    }

    pub fn union(&self) -> PointSet {
        self.pieces
            .iter()
            .fold(PointSet::EMPTY, |acc, &p| acc.union(p))
    }
}

/// Searches for a decomposition of `e` into locally closed pieces.
///
/// First peels off the relative interior of the remainder inside its own
/// closure, which is locally closed by construction. If that stalls, falls
/// back to the definition: `e` is constructible iff every point of `e`
/// lies in some locally closed subset of `e`.
pub fn is_constructible_bruteforce(
    space: &FiniteSpace,
    e: PointSet,
    cap: SizeCap,
) -> Result<Option<LocallyClosedDecomposition>> {
    cap.check(space)?;
    if !space.contains_set(e) {
        return Err(Error::Misuse(format!("{e} is not a subset of the space")));
    }
    if let Some(pieces) = greedy_peel(space, e) {
        return LocallyClosedDecomposition::new(space, pieces).map(Some);
    }
    let mut covered = PointSet::EMPTY;
    let mut pieces = Vec::new();
    // largest candidates first so the cover stays short
    let mut candidates: Vec<PointSet> = e
        .subsets()
        .filter(|&s| !s.is_empty() && space.is_locally_closed(s))
        .collect();
    candidates.sort_by_key(|s| std::cmp::Reverse(s.len()));
    for s in candidates {
        if !s.is_subset(covered) {
            covered = covered.union(s);
            pieces.push(s);
        }
    }
    if covered == e {
        LocallyClosedDecomposition::new(space, pieces).map(Some)
    } else {
        Ok(None)
    }
}

fn greedy_peel(space: &FiniteSpace, e: PointSet) -> Option<Vec<PointSet>> {
    let mut rest = e;
    let mut pieces = Vec::new();
    while !rest.is_empty() {
        let piece = space.relative_interior(rest, space.closure(rest));
        if piece.is_empty() {
            return None;
        }
        pieces.push(piece);
        rest = rest.difference(piece);
    }
    Some(pieces)
}

/// For every irreducible closed `F` with `E ∩ F` dense in `F`, the set
/// `E ∩ F` must contain a non-empty relatively open subset of `F`.
///
/// The quantifier runs over all irreducible closed `F`, including closures
/// of closed points.
pub fn is_constructible_criterion(space: &FiniteSpace, e: PointSet) -> bool {
    criterion_failure(space, e).is_none()
}

/// The irreducible closed set on which the criterion fails, if any.
pub fn criterion_failure(space: &FiniteSpace, e: PointSet) -> Option<PointSet> {
    space.irreducible_closed_sets().into_iter().find(|&f| {
        let trace = e.intersection(f);
        space.closure(trace) == f && space.relative_interior(trace, f).is_empty()
    })
}

/// Number of images audited against the brute-force oracle when the
/// criterion reports that the map preserves constructibility.
const AUDIT_SAMPLES: usize = 8;

/// A constructible subset of the source whose image is not constructible.
///
/// Both sides are decided by the criterion. Any counterexample, and the
/// first few constructible sets in the sweep, are cross-checked with the
/// brute-force oracle; a disagreement is reported as an error.
pub fn find_non_constructible_image(f: &SpaceMap, cap: SizeCap) -> Result<Option<PointSet>> {
    let (x, y) = (f.source(), f.target());
    cap.check(x)?;
    cap.check(y)?;
    let mut audited = 0;
    for e in x.full().subsets() {
        if !is_constructible_criterion(x, e) {
            continue;
        }
        let image = f.image(e);
        let preserved = is_constructible_criterion(y, image);
        if !preserved || audited < AUDIT_SAMPLES {
            audited += 1;
            let source_ok = is_constructible_bruteforce(x, e, cap)?.is_some();
            let image_ok = is_constructible_bruteforce(y, image, cap)?.is_some();
            if !source_ok {
                return Err(Error::OracleDisagreement(format!("source subset {e}")));
            }
            if image_ok != preserved {
                return Err(Error::OracleDisagreement(format!("image subset {image}")));
            }
        }
        if !preserved {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// `f(E)` is constructible for every constructible `E` in the source.
pub fn image_preserves_constructible(f: &SpaceMap, cap: SizeCap) -> Result<bool> {
    find_non_constructible_image(f, cap).map(|cex| cex.is_none())
}

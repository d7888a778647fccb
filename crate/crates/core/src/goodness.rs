//! Goodness and weak goodness of maps between finite spaces.
//!
//! A continuous `f : X -> Y` is good when every non-empty irreducible
//! locally closed `U ⊆ X` admits a non-empty open `W ⊆ Y` with
//! `W ∩ f(U) = W ∩ cl(f(U)) ≠ ∅`. Three deciders are provided:
//!
//! * [`is_good_definition`] searches witnesses `W` directly and returns the
//!   full witness table;
//! * [`is_good_characterization`] asks whether `f(U)` contains a non-empty
//!   relatively open subset of `cl(f(Z))` for every irreducible closed `Z`
//!   and non-empty open `U ⊆ Z`;
//! * [`crate::constructible::image_preserves_constructible`] decides the
//!   equivalent (finite spaces are Noetherian) constructibility transfer.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::space::{FiniteSpace, PointSet, SizeCap, SpaceMap};

/// Outcome of the witness search for one irreducible locally closed `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GoodnessEntry {
    pub u: PointSet,
    /// Witnessing open set, or `None` if `U` fails.
    pub w: Option<PointSet>,
}

/// Result of [`is_good_definition`]. Every stored witness has been checked
/// against the defining equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodnessVerdict {
    good: bool,
    entries: Vec<GoodnessEntry>,
}

/// `W` is a non-empty open set with `W ∩ f(U) = W ∩ cl(f(U)) ≠ ∅`.
pub fn is_good_witness(f: &SpaceMap, u: PointSet, w: PointSet) -> bool {
    let y = f.target();
    let image = f.image(u);
    let hit = w.intersection(image);
    y.is_open(w) && !hit.is_empty() && hit == w.intersection(y.closure(image))
}

impl GoodnessVerdict {
    fn new(f: &SpaceMap, entries: Vec<GoodnessEntry>) -> Result<Self> {
        for entry in &entries {
            if let Some(w) = entry.w {
                if !is_good_witness(f, entry.u, w) {
                    return Err(Error::Misuse(format!(
                        "recorded witness {w} does not satisfy the defining equation for {}",
                        entry.u
                    )));
                }
            }
        }
        let good = entries.iter().all(|e| e.w.is_some());
        Ok(GoodnessVerdict { good, entries })
    }

    pub fn is_good(&self) -> bool {
        self.good
    }

    pub fn entries(&self) -> &[GoodnessEntry] {
        &self.entries
    }

    pub fn failures(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.entries.iter().filter(|e| e.w.is_none()).map(|e| e.u)
    }

    pub fn first_failure(&self) -> Option<PointSet> {
        self.failures().next()
    }
}

/// Non-empty open sets of `space`, largest first, ties by bitmask.
fn opens_largest_first(space: &FiniteSpace, cap: SizeCap) -> Result<Vec<PointSet>> {
    let mut opens: Vec<PointSet> = space
        .open_sets(cap)?
        .into_iter()
        .filter(|w| !w.is_empty())
        .collect();
    opens.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    Ok(opens)
}

/// Decides goodness from the definition, recording a maximal witness for
/// every irreducible locally closed `U` or marking `U` as failing.
pub fn is_good_definition(f: &SpaceMap, cap: SizeCap) -> Result<GoodnessVerdict> {
    cap.check(f.source())?;
    cap.check(f.target())?;
    let y = f.target();
    let opens = opens_largest_first(y, cap)?;
    let mut memo: HashMap<PointSet, Option<PointSet>> = HashMap::new();
    let entries = f
        .source()
        .irreducible_locally_closed_sets(cap)?
        .into_iter()
        .map(|u| {
            let image = f.image(u);
            let w = *memo.entry(image).or_insert_with(|| {
                let closure = y.closure(image);
                opens.iter().copied().find(|&w| {
                    let hit = w.intersection(image);
                    !hit.is_empty() && hit == w.intersection(closure)
                })
            });
            GoodnessEntry { u, w }
        })
        .collect();
    GoodnessVerdict::new(f, entries)
}

/// The pair `(Z, U)` on which the characterization fails, if any.
pub fn characterization_failure(
    f: &SpaceMap,
    cap: SizeCap,
) -> Result<Option<(PointSet, PointSet)>> {
    let x = f.source();
    let y = f.target();
    cap.check(x)?;
    cap.check(y)?;
    for z in x.irreducible_closed_sets() {
        let closure = y.closure(f.image(z));
        for u in z.subsets() {
            if u.is_empty() || !x.is_relatively_open(u, z) {
                continue;
            }
            let image = f.image(u).intersection(closure);
            if y.relative_interior(image, closure).is_empty() {
                return Ok(Some((z, u)));
            }
        }
    }
    Ok(None)
}

/// For every non-empty irreducible closed `Z ⊆ X` and non-empty open
/// `U ⊆ Z`, `f(U)` contains a non-empty open subset of `cl(f(Z))`.
pub fn is_good_characterization(f: &SpaceMap, cap: SizeCap) -> Result<bool> {
    characterization_failure(f, cap).map(|failure| failure.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeakGoodnessEntry {
    pub u: PointSet,
    /// Non-empty locally closed `V ⊆ f(U)`, or `None` if `U` fails.
    pub v: Option<PointSet>,
}

/// Result of [`is_weak_good`]; stored witnesses are re-checked on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakGoodnessVerdict {
    weak_good: bool,
    entries: Vec<WeakGoodnessEntry>,
}

impl WeakGoodnessVerdict {
    fn new(f: &SpaceMap, entries: Vec<WeakGoodnessEntry>) -> Result<Self> {
        let y = f.target();
        for entry in &entries {
            if let Some(v) = entry.v {
                if v.is_empty() || !y.is_locally_closed(v) || !v.is_subset(f.image(entry.u)) {
                    return Err(Error::Misuse(format!(
                        "recorded weak witness {v} is invalid for {}",
                        entry.u
                    )));
                }
            }
        }
        let weak_good = entries.iter().all(|e| e.v.is_some());
        Ok(WeakGoodnessVerdict { weak_good, entries })
    }

    pub fn is_weak_good(&self) -> bool {
        self.weak_good
    }

    pub fn entries(&self) -> &[WeakGoodnessEntry] {
        &self.entries
    }

    pub fn first_failure(&self) -> Option<PointSet> {
        self.entries.iter().find(|e| e.v.is_none()).map(|e| e.u)
    }
}

/// Every non-empty locally closed `U ⊆ X` has a non-empty locally closed
/// `V ⊆ f(U)` in the target. Witnesses are chosen largest first.
pub fn is_weak_good(f: &SpaceMap, cap: SizeCap) -> Result<WeakGoodnessVerdict> {
    let (x, y) = (f.source(), f.target());
    cap.check(x)?;
    cap.check(y)?;
    let mut candidates: Vec<PointSet> = y
        .locally_closed_sets(cap)?
        .into_iter()
        .filter(|v| !v.is_empty())
        .collect();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut memo: HashMap<PointSet, Option<PointSet>> = HashMap::new();
    let entries = x
        .locally_closed_sets(cap)?
        .into_iter()
        .filter(|u| !u.is_empty())
        .map(|u| {
            let image = f.image(u);
            let v = *memo
                .entry(image)
                .or_insert_with(|| candidates.iter().copied().find(|v| v.is_subset(image)));
            WeakGoodnessEntry { u, v }
        })
        .collect();
    WeakGoodnessVerdict::new(f, entries)
}

/// Every non-empty locally closed subset contains a point that is closed
/// in the whole space.
pub fn is_jacobson(space: &FiniteSpace, cap: SizeCap) -> Result<bool> {
    Ok(jacobson_failure(space, cap)?.is_none())
}

/// A non-empty locally closed set without closed points, if any.
pub fn jacobson_failure(space: &FiniteSpace, cap: SizeCap) -> Result<Option<PointSet>> {
    let closed = space.closed_points();
    Ok(space
        .locally_closed_sets(cap)?
        .into_iter()
        .find(|u| !u.is_empty() && u.intersection(closed).is_empty()))
}

/// The explicit witness for monotone maps between T0 spaces: with `x` the
/// generic point of `U`, `W = Y ∖ (cl{f(x)} ∖ {f(x)})`.
pub fn t0_witness(f: &SpaceMap, u: PointSet) -> Option<PointSet> {
    let x = f.source();
    let generic = u.iter().find(|&p| u.is_subset(x.point_closure(p)))?;
    let fx = f.apply(generic);
    let below = f
        .target()
        .point_closure(fx)
        .difference(PointSet::singleton(fx));
    Some(f.target().full().difference(below))
}

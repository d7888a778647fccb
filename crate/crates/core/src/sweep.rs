//! Seeded property sweeps over small finite spaces.
//!
//! Every invariant can be checked on a single instance ([`check`]) so that a
//! recorded [`Counterexample`] replays without re-running the sweep.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructible::{
    image_preserves_constructible, is_constructible_bruteforce, is_constructible_criterion,
};
use crate::error::{Error, Result};
use crate::goodness::{
    is_good_characterization, is_good_definition, is_good_witness, is_jacobson, is_weak_good,
    t0_witness,
};
use crate::space::{FiniteSpace, PointSet, SizeCap, SpaceMap};

/// Counterexamples kept per invariant; further violations are only counted.
const KEPT_PER_INVARIANT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Invariant {
    /// Good iff the image of every constructible set is constructible.
    ChevalleyEquivalence,
    /// Definition and characterization deciders agree.
    CharacterizationEquivalence,
    /// Constructibility criterion agrees with brute-force decomposition.
    CriterionOracle,
    /// Constructible sets are closed under union, intersection, complement.
    ConstructibleBooleanAlgebra,
    /// Restrictions of a good map to locally closed subspaces are good.
    Restriction,
    /// Corestrictions of a good map to subspaces containing the image are good.
    Corestriction,
    /// For sober `X` and every open cover, good iff all restrictions are good.
    LocalityOnSource,
    /// For sober `Y` and every open cover, good iff all maps over the cover are good.
    LocalityOnTarget,
    /// The composite of weak good maps is weak good.
    WeakGoodComposition,
    GoodImpliesWeakGood,
    /// Weak good onto a Jacobson target with Jacobson fibres over closed
    /// points whose closed points are closed in `X` forces `X` Jacobson.
    JacobsonAscent,
    /// Maps between T0 spaces are good with the explicit witness.
    T0Goodness,
}

impl Invariant {
    pub const ALL: [Invariant; 12] = [
        Invariant::ChevalleyEquivalence,
        Invariant::CharacterizationEquivalence,
        Invariant::CriterionOracle,
        Invariant::ConstructibleBooleanAlgebra,
        Invariant::Restriction,
        Invariant::Corestriction,
        Invariant::LocalityOnSource,
        Invariant::LocalityOnTarget,
        Invariant::WeakGoodComposition,
        Invariant::GoodImpliesWeakGood,
        Invariant::JacobsonAscent,
        Invariant::T0Goodness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::ChevalleyEquivalence => "chevalley-equivalence",
            Invariant::CharacterizationEquivalence => "characterization-equivalence",
            Invariant::CriterionOracle => "criterion-oracle",
            Invariant::ConstructibleBooleanAlgebra => "constructible-boolean-algebra",
            Invariant::Restriction => "restriction",
            Invariant::Corestriction => "corestriction",
            Invariant::LocalityOnSource => "locality-on-source",
            Invariant::LocalityOnTarget => "locality-on-target",
            Invariant::WeakGoodComposition => "weak-good-composition",
            Invariant::GoodImpliesWeakGood => "good-implies-weak-good",
            Invariant::JacobsonAscent => "jacobson-ascent",
            Invariant::T0Goodness => "t0-goodness",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The object an invariant is checked on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Map {
        map: SpaceMap,
    },
    Subset {
        space: FiniteSpace,
        subset: PointSet,
    },
    Space {
        space: FiniteSpace,
    },
    Composable {
        inner: SpaceMap,
        outer: SpaceMap,
    },
}

/// Outcome of checking one invariant on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// Hypotheses of the invariant are not met.
    Skipped,
    Violated(String),
}

/// A recorded violation; [`Counterexample::replay`] re-runs the check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub invariant: Invariant,
    pub instance: Instance,
    pub detail: String,
}

impl Counterexample {
    /// `Some(detail)` if the violation reproduces.
    pub fn replay(&self, cap: SizeCap) -> Result<Option<String>> {
        Ok(match check(self.invariant, &self.instance, cap)? {
            Outcome::Violated(detail) => Some(detail),
            Outcome::Holds | Outcome::Skipped => None,
        })
    }
}

/// Checks `invariant` on `instance`.
pub fn check(invariant: Invariant, instance: &Instance, cap: SizeCap) -> Result<Outcome> {
    use Invariant::*;
    match (invariant, instance) {
        (ChevalleyEquivalence, Instance::Map { map }) => chevalley_equivalence(map, cap),
        (CharacterizationEquivalence, Instance::Map { map }) => {
            characterization_equivalence(map, cap)
        }
        (CriterionOracle, Instance::Subset { space, subset }) => {
            criterion_oracle(space, *subset, cap)
        }
        (ConstructibleBooleanAlgebra, Instance::Space { space }) => {
            constructible_boolean_algebra(space, cap)
        }
        (Restriction, Instance::Map { map }) => restriction(map, cap),
        (Corestriction, Instance::Map { map }) => corestriction(map, cap),
        (LocalityOnSource, Instance::Map { map }) => {
            if !map.source().is_sober() {
                return Ok(Outcome::Skipped);
            }
            locality_on_source(map, cap)
        }
        (LocalityOnTarget, Instance::Map { map }) => {
            if !map.target().is_sober() {
                return Ok(Outcome::Skipped);
            }
            locality_on_target(map, cap)
        }
        (WeakGoodComposition, Instance::Composable { inner, outer }) => {
            weak_good_composition(inner, outer, cap)
        }
        (GoodImpliesWeakGood, Instance::Map { map }) => good_implies_weak_good(map, cap),
        (JacobsonAscent, Instance::Map { map }) => jacobson_ascent(map, cap),
        (T0Goodness, Instance::Map { map }) => t0_goodness(map, cap),
        (invariant, _) => Err(Error::Misuse(format!(
            "instance kind does not fit invariant {invariant}"
        ))),
    }
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Violated(detail())
    }
}

fn good(f: &SpaceMap, cap: SizeCap) -> Result<bool> {
    Ok(is_good_definition(f, cap)?.is_good())
}

fn chevalley_equivalence(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    let g = good(f, cap)?;
    let c = image_preserves_constructible(f, cap)?;
    Ok(verdict(g == c, || {
        format!("good = {g}, preserves constructible = {c}")
    }))
}

fn characterization_equivalence(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    let g = good(f, cap)?;
    let c = is_good_characterization(f, cap)?;
    Ok(verdict(g == c, || {
        format!("definition = {g}, characterization = {c}")
    }))
}

fn criterion_oracle(space: &FiniteSpace, e: PointSet, cap: SizeCap) -> Result<Outcome> {
    let criterion = is_constructible_criterion(space, e);
    let brute = is_constructible_bruteforce(space, e, cap)?.is_some();
    Ok(verdict(criterion == brute, || {
        format!("criterion = {criterion}, decomposition found = {brute} for {e}")
    }))
}

fn constructible_boolean_algebra(space: &FiniteSpace, cap: SizeCap) -> Result<Outcome> {
    let full = space.full();
    let constructible: Vec<PointSet> = full
        .subsets()
        .filter(|&e| is_constructible_criterion(space, e))
        .collect();
    let member = |e: PointSet| constructible.contains(&e);
    for &a in &constructible {
        if !member(full.difference(a)) {
            return Ok(Outcome::Violated(format!(
                "complement of {a} is not constructible"
            )));
        }
        for &b in &constructible {
            if !member(a.union(b)) || !member(a.intersection(b)) {
                return Ok(Outcome::Violated(format!("{a} and {b} do not combine")));
            }
        }
    }
    // the brute-force side sees the same family
    for e in full.subsets() {
        if is_constructible_bruteforce(space, e, cap)?.is_some() != member(e) {
            return Ok(Outcome::Violated(format!("deciders disagree on {e}")));
        }
    }
    Ok(Outcome::Holds)
}

fn restriction(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    if !good(f, cap)? {
        return Ok(Outcome::Skipped);
    }
    for s in f.source().locally_closed_sets(cap)? {
        if !good(&f.restrict(s), cap)? {
            return Ok(Outcome::Violated(format!("restriction to {s} is not good")));
        }
    }
    Ok(Outcome::Holds)
}

fn corestriction(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    if !good(f, cap)? {
        return Ok(Outcome::Skipped);
    }
    let image = f.image(f.source().full());
    for t in f.target().full().subsets() {
        if image.is_subset(t) && !good(&f.corestrict(t)?, cap)? {
            return Ok(Outcome::Violated(format!(
                "corestriction to {t} is not good"
            )));
        }
    }
    Ok(Outcome::Holds)
}

/// Every family of non-empty open subsets of `space` whose union is the
/// whole space, as bitmasks over `opens`.
fn open_covers(space: &FiniteSpace, cap: SizeCap) -> Result<(Vec<PointSet>, Vec<u64>)> {
    let opens: Vec<PointSet> = space
        .open_sets(cap)?
        .into_iter()
        .filter(|o| !o.is_empty())
        .collect();
    if opens.len() > 20 {
        return Err(Error::Resource(format!(
            "{} open sets is too many to enumerate covers",
            opens.len()
        )));
    }
    let full = space.full();
    let covers = (0u64..1 << opens.len())
        .filter(|&mask| {
            let union = (0..opens.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(PointSet::EMPTY, |acc, i| acc.union(opens[i]));
            union == full
        })
        .collect();
    Ok((opens, covers))
}

/// Checks `good(f) ⇔ ∀i good(piece_i)` over every open cover, where
/// `piece(V)` is the map attached to the open `V`.
fn locality(
    f: &SpaceMap,
    space: &FiniteSpace,
    cap: SizeCap,
    piece: impl Fn(PointSet) -> SpaceMap,
) -> Result<Outcome> {
    let g = good(f, cap)?;
    let (opens, covers) = open_covers(space, cap)?;
    let mut good_mask = 0u64;
    for (i, &v) in opens.iter().enumerate() {
        if good(&piece(v), cap)? {
            good_mask |= 1 << i;
        }
    }
    for cover in covers {
        let pieces_good = cover & !good_mask == 0;
        if pieces_good != g {
            let members: Vec<String> = (0..opens.len())
                .filter(|i| cover >> i & 1 == 1)
                .map(|i| opens[i].to_string())
                .collect();
            return Ok(Outcome::Violated(format!(
                "good = {g} but pieces good = {pieces_good} on cover [{}]",
                members.join(", ")
            )));
        }
    }
    Ok(Outcome::Holds)
}

fn locality_on_source(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    locality(f, f.source(), cap, |u| f.restrict(u))
}

fn locality_on_target(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    locality(f, f.target(), cap, |v| f.over(v))
}

fn weak_good_composition(inner: &SpaceMap, outer: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    if !is_weak_good(inner, cap)?.is_weak_good() || !is_weak_good(outer, cap)?.is_weak_good() {
        return Ok(Outcome::Skipped);
    }
    let composite = inner.then(outer)?;
    let verdict = is_weak_good(&composite, cap)?;
    Ok(match verdict.first_failure() {
        None => Outcome::Holds,
        Some(u) => Outcome::Violated(format!("composite fails at U = {u}")),
    })
}

fn good_implies_weak_good(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    if !good(f, cap)? {
        return Ok(Outcome::Skipped);
    }
    Ok(match is_weak_good(f, cap)?.first_failure() {
        None => Outcome::Holds,
        Some(u) => Outcome::Violated(format!("good but not weak good at U = {u}")),
    })
}

/// Whether `f` meets the hypotheses of the Jacobson ascent analog.
pub fn jacobson_ascent_hypotheses(f: &SpaceMap, cap: SizeCap) -> Result<bool> {
    let (x, y) = (f.source(), f.target());
    if !is_weak_good(f, cap)?.is_weak_good() || !is_jacobson(y, cap)? {
        return Ok(false);
    }
    for p in y.closed_points().iter() {
        let fibre = f.preimage(PointSet::singleton(p));
        let (sub, embedding) = x.subspace(fibre);
        if !is_jacobson(&sub, cap)? {
            return Ok(false);
        }
        for q in sub.closed_points().iter() {
            if !x.closed_points().contains(embedding[q]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn jacobson_ascent(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    if !jacobson_ascent_hypotheses(f, cap)? {
        return Ok(Outcome::Skipped);
    }
    Ok(verdict(is_jacobson(f.source(), cap)?, || {
        "hypotheses hold but the source is not Jacobson".into()
    }))
}

fn t0_goodness(f: &SpaceMap, cap: SizeCap) -> Result<Outcome> {
    if !f.source().is_t0() || !f.target().is_t0() {
        return Ok(Outcome::Skipped);
    }
    for u in f.source().irreducible_locally_closed_sets(cap)? {
        match t0_witness(f, u) {
            Some(w) if is_good_witness(f, u, w) => {}
            _ => {
                return Ok(Outcome::Violated(format!(
                    "explicit witness fails at U = {u}"
                )))
            }
        }
    }
    Ok(verdict(good(f, cap)?, || {
        "witness search disagrees with the explicit witness".into()
    }))
}

/// Sweep parameters. Defaults: exhaustive up to 3 points, 10 000 sampled
/// pairs of 4-point spaces with every monotone map between them, 1 000
/// composable pairs, criterion oracle up to 4 points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub seed: u64,
    pub exhaustive_points: usize,
    pub sampled_points: usize,
    pub sampled_pairs: usize,
    pub composition_pairs: usize,
    pub oracle_points: usize,
}

impl SweepConfig {
    pub fn new(seed: u64) -> Self {
        SweepConfig {
            seed,
            exhaustive_points: 3,
            sampled_points: 4,
            sampled_pairs: 10_000,
            composition_pairs: 1_000,
            oracle_points: 4,
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, n) in [
            ("exhaustive", self.exhaustive_points),
            ("sampled", self.sampled_points),
            ("oracle", self.oracle_points),
        ] {
            if n > 4 {
                return Err(Error::Misuse(format!(
                    "{name} sweep size {n} exceeds the supported 4 points"
                )));
            }
        }
        if self.sampled_points == 0 && self.sampled_pairs > 0 {
            return Err(Error::Misuse(
                "sampled sweep needs at least one point".into(),
            ));
        }
        Ok(())
    }
}

/// Per-invariant tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    /// Instances examined.
    pub checked: u64,
    /// Instances meeting the invariant's hypotheses.
    pub applicable: u64,
    pub violations: u64,
}

/// Behaviour of the locality equivalences on spaces that are not sober.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonSoberLocality {
    pub source_instances: u64,
    pub source_failures: u64,
    pub target_instances: u64,
    pub target_failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub exhaustive_maps: u64,
    pub sampled_pairs: u64,
    pub sampled_maps: u64,
    pub tallies: BTreeMap<Invariant, Tally>,
    pub non_sober_locality: NonSoberLocality,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.tallies.values().all(|t| t.violations == 0)
    }

    pub fn tally(&self, invariant: Invariant) -> Tally {
        self.tallies.get(&invariant).copied().unwrap_or_default()
    }
}

struct Recorder {
    cap: SizeCap,
    tallies: BTreeMap<Invariant, Tally>,
    counterexamples: Vec<Counterexample>,
}

impl Recorder {
    fn new(cap: SizeCap) -> Self {
        Recorder {
            cap,
            tallies: Invariant::ALL
                .iter()
                .map(|&i| (i, Tally::default()))
                .collect(),
            counterexamples: Vec::new(),
        }
    }

    /// Appends the results of a later batch, keeping the first
    /// counterexamples per invariant exactly as a sequential run would.
    fn merge(&mut self, later: Recorder) {
        for (inv, t) in later.tallies {
            let tally = self.tallies.entry(inv).or_default();
            tally.checked += t.checked;
            tally.applicable += t.applicable;
            tally.violations += t.violations;
        }
        for record in later.counterexamples {
            let kept = self
                .counterexamples
                .iter()
                .filter(|c| c.invariant == record.invariant)
                .count();
            if kept < KEPT_PER_INVARIANT {
                self.counterexamples.push(record);
            }
        }
    }

    fn run(&mut self, invariant: Invariant, instance: impl FnOnce() -> Instance) -> Result<()> {
        let instance = instance();
        let outcome = check(invariant, &instance, self.cap)?;
        let tally = self.tallies.entry(invariant).or_default();
        tally.checked += 1;
        match outcome {
            Outcome::Skipped => {}
            Outcome::Holds => tally.applicable += 1,
            Outcome::Violated(detail) => {
                tally.applicable += 1;
                tally.violations += 1;
                if tally.violations as usize <= KEPT_PER_INVARIANT {
                    self.counterexamples.push(Counterexample {
                        invariant,
                        instance,
                        detail,
                    });
                }
            }
        }
        Ok(())
    }

    fn map_suite(&mut self, f: &SpaceMap, invariants: &[Invariant]) -> Result<()> {
        for &inv in invariants {
            self.run(inv, || Instance::Map { map: f.clone() })?;
        }
        Ok(())
    }
}

fn spaces_up_to(n: usize) -> Vec<Arc<FiniteSpace>> {
    (0..=n)
        .flat_map(FiniteSpace::all_preorders)
        .map(Arc::new)
        .collect()
}

fn random_map(
    rng: &mut ChaCha8Rng,
    spaces: &[Arc<FiniteSpace>],
    source: &Arc<FiniteSpace>,
) -> Result<SpaceMap> {
    loop {
        let target = &spaces[rng.random_range(0..spaces.len())];
        let maps = source.monotone_assignments(target);
        if maps.is_empty() {
            continue;
        }
        let assignment = maps[rng.random_range(0..maps.len())].clone();
        return SpaceMap::new(source.clone(), target.clone(), assignment);
    }
}

/// Every monotone map between the given (source, target) index pairs.
fn sampled_batch(
    pairs: &[(usize, usize)],
    spaces: &[Arc<FiniteSpace>],
    cap: SizeCap,
) -> Result<(Recorder, u64)> {
    use Invariant::*;
    let mut rec = Recorder::new(cap);
    let mut maps = 0;
    for &(i, j) in pairs {
        let (x, y) = (&spaces[i], &spaces[j]);
        for assignment in x.monotone_assignments(y) {
            let f = SpaceMap::new(x.clone(), y.clone(), assignment)?;
            maps += 1;
            rec.map_suite(
                &f,
                &[
                    ChevalleyEquivalence,
                    CharacterizationEquivalence,
                    Restriction,
                    Corestriction,
                    GoodImpliesWeakGood,
                    T0Goodness,
                ],
            )?;
        }
    }
    Ok((rec, maps))
}

/// Runs every invariant over the configured instance families.
pub fn run_sweep(config: SweepConfig) -> Result<SweepReport> {
    use Invariant::*;
    config.validate()?;
    let cap = SizeCap::DEFAULT;
    let mut rec = Recorder {
        cap,
        tallies: Invariant::ALL
            .iter()
            .map(|&i| (i, Tally::default()))
            .collect(),
        counterexamples: Vec::new(),
    };
    let mut non_sober = NonSoberLocality::default();

    // exhaustive: every monotone map between preorders on at most n points
    let small = spaces_up_to(config.exhaustive_points);
    let mut exhaustive_maps = 0;
    for x in &small {
        for y in &small {
            for assignment in x.monotone_assignments(y) {
                let f = SpaceMap::new(x.clone(), y.clone(), assignment)?;
                exhaustive_maps += 1;
                rec.map_suite(
                    &f,
                    &[
                        ChevalleyEquivalence,
                        CharacterizationEquivalence,
                        Restriction,
                        Corestriction,
                        LocalityOnSource,
                        LocalityOnTarget,
                        GoodImpliesWeakGood,
                        JacobsonAscent,
                        T0Goodness,
                    ],
                )?;
                if !x.is_sober() {
                    non_sober.source_instances += 1;
                    if locality_on_source(&f, cap)? != Outcome::Holds {
                        non_sober.source_failures += 1;
                    }
                }
                if !y.is_sober() {
                    non_sober.target_instances += 1;
                    if locality_on_target(&f, cap)? != Outcome::Holds {
                        non_sober.target_failures += 1;
                    }
                }
            }
        }
    }

    // every subset of every space on at most `oracle_points` points
    for space in spaces_up_to(config.oracle_points) {
        for e in space.full().subsets() {
            rec.run(CriterionOracle, || Instance::Subset {
                space: (*space).clone(),
                subset: e,
            })?;
        }
        rec.run(ConstructibleBooleanAlgebra, || Instance::Space {
            space: (*space).clone(),
        })?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    // sampled: uniform (source, target) pairs of preorders, every monotone
    // map between them
    let sized: Vec<Arc<FiniteSpace>> = FiniteSpace::all_preorders(config.sampled_points)
        .into_iter()
        .map(Arc::new)
        .collect();
    let pairs: Vec<(usize, usize)> = (0..config.sampled_pairs)
        .map(|_| {
            (
                rng.random_range(0..sized.len()),
                rng.random_range(0..sized.len()),
            )
        })
        .collect();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = pairs.len().div_ceil(workers).max(1);
    let batches: Vec<Result<(Recorder, u64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|part| scope.spawn(|| sampled_batch(part, &sized, cap)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut sampled_maps = 0;
    for batch in batches {
        let (part, maps) = batch?;
        rec.merge(part);
        sampled_maps += maps;
    }

    // composable pairs among non-empty spaces of the exhaustive range
    let nonempty: Vec<Arc<FiniteSpace>> = small.iter().filter(|s| !s.is_empty()).cloned().collect();
    if !nonempty.is_empty() {
        for _ in 0..config.composition_pairs {
            let x = &nonempty[rng.random_range(0..nonempty.len())];
            let inner = random_map(&mut rng, &nonempty, x)?;
            let outer = random_map(&mut rng, &nonempty, inner.target_arc())?;
            rec.run(WeakGoodComposition, || Instance::Composable {
                inner,
                outer,
            })?;
        }
    }

    Ok(SweepReport {
        config,
        exhaustive_maps,
        sampled_pairs: config.sampled_pairs as u64,
        sampled_maps,
        tallies: rec.tallies,
        non_sober_locality: non_sober,
        counterexamples: rec.counterexamples,
    })
}

/// Stored non-sober instance for locality on the source: the identity of
/// the indiscrete pair, whose only open cover is the whole space, so the
/// equivalence holds vacuously.
pub fn non_sober_locality_regression() -> SpaceMap {
    SpaceMap::identity(FiniteSpace::indiscrete(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regression_instance_is_vacuous() {
        let f = non_sober_locality_regression();
        assert!(!f.source().is_sober());
        let (opens, covers) = open_covers(f.source(), SizeCap::DEFAULT).unwrap();
        assert_eq!(opens, vec![f.source().full()]);
        assert_eq!(covers, vec![1]);
        assert_eq!(
            locality_on_source(&f, SizeCap::DEFAULT).unwrap(),
            Outcome::Holds
        );
        let skipped = check(
            Invariant::LocalityOnSource,
            &Instance::Map { map: f },
            SizeCap::DEFAULT,
        )
        .unwrap();
        assert_eq!(skipped, Outcome::Skipped);
    }

    #[test]
    fn mismatched_instance_is_misuse() {
        let instance = Instance::Space {
            space: FiniteSpace::point(),
        };
        assert!(matches!(
            check(Invariant::Restriction, &instance, SizeCap::DEFAULT),
            Err(Error::Misuse(_))
        ));
    }

    #[test]
    fn point_into_indiscrete_replays_as_not_good() {
        let f = SpaceMap::new(FiniteSpace::point(), FiniteSpace::indiscrete(2), vec![0]).unwrap();
        let instance = Instance::Map { map: f };
        // good and weak good both fail, so neither implication has work to do
        assert_eq!(
            check(Invariant::GoodImpliesWeakGood, &instance, SizeCap::DEFAULT).unwrap(),
            Outcome::Skipped
        );
        assert_eq!(
            check(Invariant::ChevalleyEquivalence, &instance, SizeCap::DEFAULT).unwrap(),
            Outcome::Holds
        );
    }

    #[test]
    fn small_sweep_passes() {
        let config = SweepConfig {
            seed: 1,
            exhaustive_points: 2,
            sampled_points: 3,
            sampled_pairs: 20,
            composition_pairs: 50,
            oracle_points: 3,
        };
        let report = run_sweep(config).unwrap();
        assert!(report.passed(), "{:?}", report.counterexamples);
        assert_eq!(report, run_sweep(config).unwrap());
    }
}

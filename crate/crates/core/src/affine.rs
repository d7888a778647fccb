//! Constructible subsets of affine space and images under polynomial maps.
//!
//! Geometric statements refer to points over the algebraic closure of the
//! coefficient field; all computation is exact over the field itself.
//!
//! The image engine works on closed sets. A stratum `V(I) ∖ V(J)` is the
//! union over generators `g` of `J` of the projections of `V(I, 1 - t·g)`,
//! so the image of a stratum under `f` is the union of projections of the
//! closed sets `V(I, 1 - t·g, z - f(x))` away from `(t, x)`.
//!
//! Projecting a closed set `V(G)` eliminates all hidden variables at once.
//! With `G` a reduced Gröbner basis for the block order that puts the hidden
//! variables first, let `E` be the basis elements free of hidden variables
//! and `c_1..c_r` the leading coefficients (polynomials in the visible
//! variables) of the others. At a point of `V(E)` where no `c_i` vanishes
//! the specialized basis stays a Gröbner basis without constants, so the
//! fibre is non-empty: `V(E) ∖ V(c_1 ⋯ c_r)` is certified image. The rest
//! of the image is the union of the projections of `V(G + (c_i))`. Each
//! `c_i` lies outside `G` (the basis is reduced), so every branch strictly
//! grows the ideal and the recursion terminates.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Field, Ideal, Limits, MonomialOrder, Polynomial};

/// The locally closed set `V(present) ∖ V(absent)`.
#[derive(Clone)]
pub struct Stratum<F: Field> {
    present: Ideal<F>,
    absent: Ideal<F>,
}

impl<F: Field> Stratum<F> {
    pub fn new(present: Ideal<F>, absent: Ideal<F>) -> Result<Self> {
        if present.nvars() != absent.nvars() {
            return Err(Error::MixedContext {
                expected: present.nvars(),
                found: absent.nvars(),
            });
        }
        Ok(Stratum { present, absent })
    }

    /// The closed set `V(present)`.
    pub fn closed(present: Ideal<F>) -> Self {
        let n = present.nvars();
        Stratum {
            present,
            absent: Ideal::unit(n),
        }
    }

    /// The open set `A^n ∖ V(absent)`.
    pub fn open(absent: Ideal<F>) -> Self {
        Stratum {
            present: Ideal::zero(absent.nvars()),
            absent,
        }
    }

    pub fn whole(nvars: usize) -> Self {
        Self::closed(Ideal::zero(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.present.nvars()
    }

    pub fn present(&self) -> &Ideal<F> {
        &self.present
    }

    pub fn absent(&self) -> &Ideal<F> {
        &self.absent
    }

    /// `V(I) ⊆ V(J)`: every generator of `J` lies in `√I`.
    pub fn is_empty(&self) -> Result<bool> {
        self.present.vanishing_contained_in(&self.absent)
    }

    pub fn contains_point(&self, point: &[F]) -> Result<bool> {
        if point.len() != self.nvars() {
            return Err(Error::MixedContext {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        for g in self.present.generators() {
            if !g.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        for g in self.absent.generators() {
            if !g.evaluate(point)?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `(V(I₁) ∖ V(J₁)) ∩ (V(I₂) ∖ V(J₂)) = V(I₁ + I₂) ∖ V(J₁·J₂)`.
    pub fn intersect(&self, other: &Stratum<F>) -> Result<Stratum<F>> {
        Stratum::new(
            self.present.sum(&other.present)?,
            self.absent.product(&other.absent)?,
        )
    }

    /// `A^n ∖ (V(I) ∖ V(J)) = (A^n ∖ V(I)) ∪ V(J)`.
    pub fn complement(&self) -> AffineConstructible<F> {
        AffineConstructible {
            nvars: self.nvars(),
            strata: vec![
                Stratum::open(self.present.clone()),
                Stratum::closed(self.absent.clone()),
            ],
        }
    }

    /// Ideal of the Zariski closure, `I : J^∞`.
    pub fn closure(&self) -> Result<Ideal<F>> {
        self.present.saturate(&self.absent)
    }

    /// Present and absent generators as reduced Gröbner bases.
    pub fn normalized(&self) -> Result<Stratum<F>> {
        Ok(Stratum {
            present: Ideal::new(self.nvars(), self.present.basis()?.to_vec())?,
            absent: Ideal::new(self.nvars(), self.absent.basis()?.to_vec())?,
        })
    }
}

impl<F: Field> fmt::Debug for Stratum<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V{:?} \\ V{:?}",
            self.present.generators(),
            self.absent.generators()
        )
    }
}

/// A finite union of strata in affine `nvars`-space.
#[derive(Clone)]
pub struct AffineConstructible<F: Field> {
    nvars: usize,
    strata: Vec<Stratum<F>>,
}

impl<F: Field> AffineConstructible<F> {
    pub fn new(nvars: usize, strata: Vec<Stratum<F>>) -> Result<Self> {
        if let Some(bad) = strata.iter().find(|s| s.nvars() != nvars) {
            return Err(Error::MixedContext {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        Ok(AffineConstructible { nvars, strata })
    }

    pub fn empty(nvars: usize) -> Self {
        AffineConstructible {
            nvars,
            strata: Vec::new(),
        }
    }

    pub fn whole(nvars: usize) -> Self {
        Self::from(Stratum::whole(nvars))
    }

    pub fn closed(ideal: Ideal<F>) -> Self {
        Self::from(Stratum::closed(ideal))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn strata(&self) -> &[Stratum<F>] {
        &self.strata
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::MixedContext {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn is_empty(&self) -> Result<bool> {
        for s in &self.strata {
            if !s.is_empty()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Drops empty strata.
    pub fn pruned(&self) -> Result<Self> {
        let mut strata = Vec::new();
        for s in &self.strata {
            if !s.is_empty()? {
                strata.push(s.clone());
            }
        }
        Ok(AffineConstructible {
            nvars: self.nvars,
            strata,
        })
    }

    pub fn contains_point(&self, point: &[F]) -> Result<bool> {
        if point.len() != self.nvars {
            return Err(Error::MixedContext {
                expected: self.nvars,
                found: point.len(),
            });
        }
        for s in &self.strata {
            if s.contains_point(point)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let strata = self.strata.iter().chain(&other.strata).cloned().collect();
        Ok(AffineConstructible {
            nvars: self.nvars,
            strata,
        })
    }

    /// Pairwise stratum intersections, with empty results dropped.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut strata = Vec::new();
        for a in &self.strata {
            for b in &other.strata {
                let s = a.intersect(b)?;
                if !s.is_empty()? {
                    strata.push(s);
                }
            }
        }
        Ok(AffineConstructible {
            nvars: self.nvars,
            strata,
        })
    }

    /// Intersection of the stratum complements; the complement of `∅` is
    /// the whole space.
    pub fn complement(&self) -> Result<Self> {
        let mut acc = Self::whole(self.nvars);
        for s in &self.strata {
            acc = acc.intersect(&s.complement())?;
            if acc.strata.is_empty() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.intersect(&other.complement()?)
    }

    /// Same set of points over the algebraic closure.
    pub fn same_set(&self, other: &Self) -> Result<bool> {
        Ok(self.difference(other)?.is_empty()? && other.difference(self)?.is_empty()?)
    }

    /// Ideal of the Zariski closure: the intersection of the strata closures.
    pub fn closure(&self) -> Result<Ideal<F>> {
        let mut acc: Option<Ideal<F>> = None;
        for s in &self.strata {
            let part = s.closure()?;
            if part.is_unit()? {
                continue;
            }
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersection(&part)?,
            });
        }
        acc.map_or_else(|| Ok(Ideal::unit(self.nvars)), Ok)
    }

    /// Strata with reduced-basis generators.
    pub fn normalized(&self) -> Result<Self> {
        let strata = self
            .strata
            .iter()
            .map(Stratum::normalized)
            .collect::<Result<_>>()?;
        Ok(AffineConstructible {
            nvars: self.nvars,
            strata,
        })
    }
}

impl<F: Field> From<Stratum<F>> for AffineConstructible<F> {
    fn from(s: Stratum<F>) -> Self {
        AffineConstructible {
            nvars: s.nvars(),
            strata: vec![s],
        }
    }
}

impl<F: Field> fmt::Debug for AffineConstructible<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.strata).finish()
    }
}

/// A polynomial map `A^n -> A^m`, `x ↦ (f_1(x), .., f_m(x))`.
#[derive(Clone, Debug)]
pub struct PolyMap<F: Field> {
    source_vars: usize,
    components: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMap<F> {
    pub fn new(source_vars: usize, components: Vec<Polynomial<F>>) -> Result<Self> {
        if let Some(bad) = components.iter().find(|c| c.nvars() != source_vars) {
            return Err(Error::MixedContext {
                expected: source_vars,
                found: bad.nvars(),
            });
        }
        Ok(PolyMap {
            source_vars,
            components,
        })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            source_vars: n,
            components: (0..n).map(|i| Polynomial::var(n, i)).collect(),
        }
    }

    /// The coordinate projection keeping the variables in `keep`, in order.
    pub fn projection(n: usize, keep: &[usize]) -> Self {
        PolyMap {
            source_vars: n,
            components: keep.iter().map(|&i| Polynomial::var(n, i)).collect(),
        }
    }

    pub fn source_vars(&self) -> usize {
        self.source_vars
    }

    pub fn target_vars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    pub fn apply(&self, point: &[F]) -> Result<Vec<F>> {
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &PolyMap<F>) -> Result<PolyMap<F>> {
        if outer.source_vars != self.target_vars() {
            return Err(Error::MixedContext {
                expected: outer.source_vars,
                found: self.target_vars(),
            });
        }
        let components = outer
            .components
            .iter()
            .map(|c| c.substitute(&self.components, self.source_vars))
            .collect::<Result<_>>()?;
        Ok(PolyMap {
            source_vars: self.source_vars,
            components,
        })
    }
}

struct Projector {
    hidden: usize,
    branches: usize,
    limits: Limits,
}

impl Projector {
    /// Image of `V(g)` (ring: hidden variables first, then visible ones)
    /// under the projection forgetting the hidden variables.
    fn project<F: Field>(&mut self, g: &Ideal<F>, out: &mut Vec<Stratum<F>>) -> Result<()> {
        self.branches += 1;
        if self.branches > self.limits.max_branches {
            return Err(Error::Resource(format!(
                "image computation exceeded {} branches after producing {} strata",
                self.limits.max_branches,
                out.len()
            )));
        }
        let k = self.hidden;
        let visible = g.nvars() - k;
        let basis = g.groebner(MonomialOrder::Block(k))?;
        if basis.first().is_some_and(Polynomial::is_unit) {
            return Ok(());
        }
        let mut visible_part = Vec::new();
        let mut coefficients: Vec<Polynomial<F>> = Vec::new();
        for p in basis.iter() {
            match p.drop_front(k) {
                Some(q) => visible_part.push(q),
                None => {
                    let c = p
                        .block_leading_coefficient(k)
                        .drop_front(k)
                        .expect("block leading coefficient is free of hidden variables")
                        .monic(MonomialOrder::GrevLex);
                    if !c.is_unit() && !coefficients.contains(&c) {
                        coefficients.push(c);
                    }
                }
            }
        }
        let closure = Ideal::new(visible, visible_part)?;
        let product = coefficients
            .iter()
            .fold(Polynomial::one(visible), |acc, c| &acc * c);
        let certified = Stratum::new(closure, Ideal::principal(product))?;
        if !certified.is_empty()? {
            out.push(certified);
        }
        for c in &coefficients {
            let branch = g.with_generator(c.extend_front(k))?;
            self.project(&branch, out)?;
        }
        Ok(())
    }
}

/// `f(S)` as a finite union of strata, membership-equal over the algebraic
/// closure.
pub fn chevalley_image<F: Field>(
    f: &PolyMap<F>,
    s: &AffineConstructible<F>,
) -> Result<AffineConstructible<F>> {
    if s.nvars() != f.source_vars() {
        return Err(Error::MixedContext {
            expected: f.source_vars(),
            found: s.nvars(),
        });
    }
    let n = f.source_vars();
    let m = f.target_vars();
    let graph: Vec<Polynomial<F>> = f
        .components()
        .iter()
        .enumerate()
        .map(|(j, fj)| &Polynomial::var(n + m, n + j) - &fj.extend_back(m))
        .collect();
    let mut out = Vec::new();
    let mut projector = Projector {
        hidden: n,
        branches: 0,
        limits: Limits::current(),
    };
    for stratum in s.strata() {
        let present: Vec<Polynomial<F>> = stratum
            .present()
            .generators()
            .iter()
            .map(|p| p.extend_back(m))
            .collect();
        for g in stratum.absent().generators() {
            let mut gens: Vec<Polynomial<F>> = present.iter().chain(&graph).cloned().collect();
            if g.is_unit() {
                projector.hidden = n;
            } else {
                // one extra hidden variable t in front: 1 - t·g
                gens = gens.iter().map(|p| p.extend_front(1)).collect();
                let t = Polynomial::var(n + m + 1, 0);
                gens.push(&Polynomial::one(n + m + 1) - &(&t * &g.extend_back(m).extend_front(1)));
                projector.hidden = n + 1;
            }
            let ring = projector.hidden + m;
            projector.project(&Ideal::new(ring, gens)?, &mut out)?;
        }
    }
    dedup_strata(&mut out)?;
    AffineConstructible::new(m, out)
}

fn dedup_strata<F: Field>(strata: &mut Vec<Stratum<F>>) -> Result<()> {
    let mut kept: Vec<Stratum<F>> = Vec::new();
    for s in strata.drain(..) {
        let mut duplicate = false;
        for k in &kept {
            if k.present.same_ideal(&s.present)? && k.absent.same_ideal(&s.absent)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            kept.push(s);
        }
    }
    *strata = kept;
    Ok(())
}

/// Certificate that `f(U)` contains a non-empty open subset of `cl(f(Z))`,
/// where `U = V(Z) ∖ V(J)`.
///
/// Construction checks both certificates: `D(s) ∩ V(E) ⊆ f(U)` (the
/// constructible difference is empty) and `s ∉ √E` (the open set is
/// non-empty on the closure).
#[derive(Clone, Debug)]
pub struct GoodWitness<F: Field> {
    closure_ideal: Ideal<F>,
    witness_poly: Polynomial<F>,
    certified_stratum: Stratum<F>,
    image: AffineConstructible<F>,
}

impl<F: Field> GoodWitness<F> {
    fn certify(
        closure_ideal: Ideal<F>,
        witness_poly: Polynomial<F>,
        image: AffineConstructible<F>,
    ) -> Result<Self> {
        let certified_stratum = Stratum::new(
            closure_ideal.clone(),
            Ideal::principal(witness_poly.clone()),
        )?;
        if closure_ideal.radical_contains(&witness_poly)? {
            return Err(Error::TheoremViolation(format!(
                "witness {witness_poly} vanishes on the whole image closure"
            )));
        }
        let uncovered = AffineConstructible::from(certified_stratum.clone()).difference(&image)?;
        if !uncovered.is_empty()? {
            return Err(Error::TheoremViolation(format!(
                "D({witness_poly}) ∩ V(E) is not contained in the computed image"
            )));
        }
        Ok(GoodWitness {
            closure_ideal,
            witness_poly,
            certified_stratum,
            image,
        })
    }

    /// Ideal `E` of `cl(f(Z))`.
    pub fn closure_ideal(&self) -> &Ideal<F> {
        &self.closure_ideal
    }

    /// The polynomial `s` with `D(s) ∩ V(E) ⊆ f(U)`.
    pub fn witness_poly(&self) -> &Polynomial<F> {
        &self.witness_poly
    }

    /// `V(E) ∖ V(s)`.
    pub fn certified_stratum(&self) -> &Stratum<F> {
        &self.certified_stratum
    }

    /// The computed image `f(U)`.
    pub fn image(&self) -> &AffineConstructible<F> {
        &self.image
    }
}

/// Extracts a good-map witness for `U = V(z) ∖ V(j)`.
///
/// `z` is asserted prime by the caller. Both certificates are re-checked
/// independently, so a returned witness is sound regardless; only the
/// promise that a witness exists relies on the assertion. If no generator
/// of the boundary ideal survives on the closure, a theorem-violation
/// alarm is raised.
pub fn good_witness<F: Field>(
    f: &PolyMap<F>,
    z: &Ideal<F>,
    j: &Ideal<F>,
) -> Result<GoodWitness<F>> {
    let u = Stratum::new(z.clone(), j.clone())?;
    if u.nvars() != f.source_vars() {
        return Err(Error::MixedContext {
            expected: f.source_vars(),
            found: u.nvars(),
        });
    }
    if u.is_empty()? {
        return Err(Error::Misuse("V(Z) ∖ V(J) is empty".into()));
    }
    let image = chevalley_image(f, &AffineConstructible::from(u))?;
    let closure = image.closure()?;
    let boundary = AffineConstructible::closed(closure.clone()).difference(&image)?;
    let boundary_ideal = boundary.closure()?;
    let m = f.target_vars();
    if boundary_ideal.is_unit()? {
        return GoodWitness::certify(closure, Polynomial::one(m), image);
    }
    for s in boundary_ideal.basis()?.iter() {
        if !closure.radical_contains(s)? {
            return GoodWitness::certify(closure, s.clone(), image);
        }
    }
    Err(Error::TheoremViolation(
        "every generator of the boundary ideal vanishes on the image closure".into(),
    ))
}

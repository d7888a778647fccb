use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::field::Field;
use super::groebner::{self, Limits};
use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

type Basis<F> = Arc<[Polynomial<F>]>;

/// An ideal of `F[x1..xn]` given by generators, with a memo of reduced
/// Gröbner bases per monomial order. Clones share the memo.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    nvars: usize,
    gens: Vec<Polynomial<F>>,
    memo: Arc<Mutex<BTreeMap<MonomialOrder, Basis<F>>>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(nvars: usize, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::MixedContext {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        Ok(Self::unchecked(nvars, gens))
    }

    fn unchecked(nvars: usize, gens: Vec<Polynomial<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            nvars,
            gens,
            memo: Arc::default(),
        }
    }

    fn with_basis(nvars: usize, order: MonomialOrder, basis: Vec<Polynomial<F>>) -> Self {
        let ideal = Self::unchecked(nvars, basis.clone());
        ideal
            .memo
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .insert(order, basis.into());
        ideal
    }

    pub fn zero(nvars: usize) -> Self {
        Self::unchecked(nvars, Vec::new())
    }

    pub fn unit(nvars: usize) -> Self {
        Self::unchecked(nvars, vec![Polynomial::one(nvars)])
    }

    pub fn principal(p: Polynomial<F>) -> Self {
        Self::unchecked(p.nvars(), vec![p])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Non-zero generators as given.
    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    fn check(&self, other_nvars: usize) -> Result<()> {
        if other_nvars != self.nvars {
            return Err(Error::MixedContext {
                expected: self.nvars,
                found: other_nvars,
            });
        }
        Ok(())
    }

    /// Reduced Gröbner basis for `order`, computed once and memoised.
    pub fn groebner(&self, order: MonomialOrder) -> Result<Basis<F>> {
        if let Some(b) = self
            .memo
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .get(&order)
        {
            return Ok(b.clone());
        }
        let basis: Basis<F> =
            groebner::groebner(self.nvars, &self.gens, order, &Limits::current())?.into();
        Ok(self
            .memo
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .entry(order)
            .or_insert(basis)
            .clone())
    }

    /// The default basis used for membership questions.
    pub fn basis(&self) -> Result<Basis<F>> {
        self.groebner(MonomialOrder::GrevLex)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.check(f.nvars())?;
        let basis = self.basis()?;
        Ok(groebner::reduce(f, &basis, MonomialOrder::GrevLex)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(Polynomial::is_unit) {
            return Ok(true);
        }
        Ok(self.basis()?.first().is_some_and(Polynomial::is_unit))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Ideal equality, by comparing reduced bases.
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other.nvars)?;
        Ok(self.basis()? == other.basis()?)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other.nvars)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::unchecked(self.nvars, gens))
    }

    pub fn with_generator(&self, g: Polynomial<F>) -> Result<Ideal<F>> {
        self.sum(&Ideal::new(self.nvars, vec![g])?)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other.nvars)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b))
            .collect();
        Ok(Self::unchecked(self.nvars, gens))
    }

    /// The same generators in a ring with `k` new leading variables.
    pub fn extend_front(&self, k: usize) -> Ideal<F> {
        Self::unchecked(
            self.nvars + k,
            self.gens.iter().map(|g| g.extend_front(k)).collect(),
        )
    }

    /// `I ∩ F[last keep_last variables]`, returned in the smaller ring,
    /// computed with the block order eliminating the leading variables.
    pub fn eliminate(&self, keep_last: usize) -> Result<Ideal<F>> {
        if keep_last > self.nvars {
            return Err(Error::Misuse(format!(
                "cannot keep {keep_last} of {} variables",
                self.nvars
            )));
        }
        let k = self.nvars - keep_last;
        let basis = self.groebner(MonomialOrder::Block(k))?;
        // the block order restricted to the kept variables is grevlex, and
        // the surviving elements form its reduced basis
        let kept: Vec<_> = basis.iter().filter_map(|g| g.drop_front(k)).collect();
        Ok(Self::with_basis(keep_last, MonomialOrder::GrevLex, kept))
    }

    /// `I ∩ J`, via `t·I + (1 - t)·J` with `t` eliminated.
    pub fn intersection(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other.nvars)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let n = self.nvars + 1;
        let t = Polynomial::var(n, 0);
        let one_minus_t = &Polynomial::one(n) - &t;
        let gens = self
            .gens
            .iter()
            .map(|g| &t * &g.extend_front(1))
            .chain(other.gens.iter().map(|g| &one_minus_t * &g.extend_front(1)))
            .collect();
        Self::unchecked(n, gens).eliminate(self.nvars)
    }

    /// `I : g^∞`, via `I + (1 - t·g)` with `t` eliminated.
    pub fn saturate_by(&self, g: &Polynomial<F>) -> Result<Ideal<F>> {
        self.check(g.nvars())?;
        if g.is_zero() {
            return Ok(Self::unit(self.nvars));
        }
        if g.is_unit() {
            return Ok(self.clone());
        }
        let n = self.nvars + 1;
        let rabinowitsch = &Polynomial::one(n) - &(&Polynomial::var(n, 0) * &g.extend_front(1));
        let mut gens: Vec<_> = self.gens.iter().map(|p| p.extend_front(1)).collect();
        gens.push(rabinowitsch);
        Self::unchecked(n, gens).eliminate(self.nvars)
    }

    /// `I : J^∞ = ∩_{g ∈ gens(J)} I : g^∞`. The zero ideal `J` gives the unit ideal.
    pub fn saturate(&self, j: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(j.nvars)?;
        let mut acc: Option<Ideal<F>> = None;
        for g in &j.gens {
            let part = self.saturate_by(g)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersection(&part)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::unit(self.nvars)))
    }

    /// `f ∈ √I`: `1 ∈ I + (1 - t·f)` in the ring with one extra variable.
    pub fn radical_contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.check(f.nvars())?;
        if f.is_zero() || self.contains(f)? {
            return Ok(true);
        }
        let n = self.nvars + 1;
        let rabinowitsch = &Polynomial::one(n) - &(&Polynomial::var(n, 0) * &f.extend_front(1));
        let mut gens: Vec<_> = self.gens.iter().map(|p| p.extend_front(1)).collect();
        gens.push(rabinowitsch);
        Self::unchecked(n, gens).is_unit()
    }

    /// `V(self) ⊆ V(other)`, i.e. every generator of `other` lies in `√self`.
    pub fn vanishing_contained_in(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other.nvars)?;
        for g in &other.gens {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `f ∈ √I`.
pub fn radical_member<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool> {
    ideal.radical_contains(f)
}

/// `I ∩ F[last keep_last variables]`.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, keep_last: usize) -> Result<Ideal<F>> {
    ideal.eliminate(keep_last)
}

/// `I : J^∞`.
pub fn saturate<F: Field>(ideal: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    ideal.saturate(j)
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.gens)
    }
}

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// A multivariate polynomial in `nvars` variables over `F`.
///
/// Terms are stored without zero coefficients, sorted by decreasing
/// lexicographic monomial, so structural equality is ideal-free equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable x{} outside a ring of {nvars} variables",
            index + 1
        );
        Self::from_terms(nvars, [(Monomial::var(nvars, index), F::one())])
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(nvars: usize, terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, F> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial outside the ring context");
            match acc.get_mut(&m) {
                Some(existing) => *existing = existing.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial { nvars, terms }
    }

    /// Builds from terms already sorted by strictly decreasing monomial
    /// under `order`, with no zero coefficients.
    pub(crate) fn from_sorted(
        nvars: usize,
        mut terms: Vec<(Monomial, F)>,
        order: MonomialOrder,
    ) -> Self {
        if order != MonomialOrder::Lex {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
        }
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in decreasing lexicographic order.
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    /// Terms in decreasing `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, F)> {
        let mut terms = self.terms.clone();
        if order != MonomialOrder::Lex {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// A non-zero constant: a unit of the polynomial ring.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<&(Monomial, F)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self, order: MonomialOrder) -> Option<&F> {
        self.leading_term(order).map(|(_, c)| c)
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_coefficient(order) {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv()),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        // multiplication by a monomial preserves any monomial order
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars {
            return Err(Error::MixedContext {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut total = F::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    value = value.mul(x);
                }
            }
            total = total.add(&value);
        }
        Ok(total)
    }

    /// The same polynomial in a ring with `k` new variables in front.
    pub fn extend_front(&self, k: usize) -> Self {
        Polynomial {
            nvars: self.nvars + k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend_front(k), c.clone()))
                .collect(),
        }
    }

    /// The same polynomial in a ring with `k` new variables at the end.
    pub fn extend_back(&self, k: usize) -> Self {
        Polynomial {
            nvars: self.nvars + k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend_back(k), c.clone()))
                .collect(),
        }
    }

    /// The same polynomial in the ring without its first `k` variables, or
    /// `None` if any of them occurs.
    pub fn drop_front(&self, k: usize) -> Option<Self> {
        if self.involves_any(0..k) {
            return None;
        }
        Some(Polynomial {
            nvars: self.nvars - k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.drop_front(k), c.clone()))
                .collect(),
        })
    }

    pub fn involves_any(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms
            .iter()
            .any(|(m, _)| m.exponents()[vars.clone()].iter().any(|&e| e > 0))
    }

    /// Substitutes `images[i]` for variable `i`; the result lives in the
    /// ring of the images.
    pub fn substitute(&self, images: &[Polynomial<F>], target_nvars: usize) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::MixedContext {
                expected: self.nvars,
                found: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|p| p.nvars != target_nvars) {
            return Err(Error::MixedContext {
                expected: target_nvars,
                found: bad.nvars,
            });
        }
        let mut total = Self::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target_nvars, c.clone());
            for (image, &e) in images.iter().zip(m.exponents()) {
                if e > 0 {
                    term = &term * &image.pow(e);
                }
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// Coefficient (in the remaining variables) of the largest power
    /// product of the first `k` variables, under the block order
    /// eliminating them. The result still lives in the full ring.
    pub fn block_leading_coefficient(&self, k: usize) -> Self {
        let order = MonomialOrder::Block(k);
        let Some(lead) = self.leading_monomial(order) else {
            return self.clone();
        };
        let head = lead.head(k);
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.head(k) == head)
                .map(|(m, c)| (head.quotient_of(m), c.clone())),
        )
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> DisplayPoly<'a, F> {
        DisplayPoly {
            poly: self,
            names: Some(names),
        }
    }

    fn check_context(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "arithmetic between polynomials of different ring contexts"
        );
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.check_context(other);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let take_other = |c: &F| if negate_other { c.neg() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    terms.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((mb.clone(), take_other(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(&take_other(cb));
                    if !c.is_zero() {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), take_other(c))),
        );
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, false)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, true)
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.check_context(rhs);
        let terms = self.terms.iter().flat_map(|(ma, ca)| {
            rhs.terms
                .iter()
                .map(move |(mb, cb)| (ma.mul(mb), ca.mul(cb)))
        });
        Polynomial::from_terms(self.nvars, terms)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&F::one().neg())
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

pub struct DisplayPoly<'a, F: Field> {
    poly: &'a Polynomial<F>,
    names: Option<&'a [String]>,
}

impl<F: Field> fmt::Display for DisplayPoly<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.poly;
        if poly.is_zero() {
            return write!(f, "0");
        }
        // print in grevlex order: highest degree first reads naturally
        for (i, (m, c)) in poly.sorted_terms(MonomialOrder::GrevLex).iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { c.neg() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !magnitude.is_one() || m.is_one() {
                factors.push(magnitude.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = match self.names {
                    Some(names) => names[v].clone(),
                    None => format!("x{}", v + 1),
                };
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        DisplayPoly {
            poly: self,
            names: None,
        }
        .fmt(f)
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

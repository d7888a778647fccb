//! Multivariate division and Buchberger's algorithm.
//!
//! Internally polynomials are term vectors sorted by decreasing monomial
//! under the working order, so the leading term is always at index 0.

use std::collections::HashSet;
use std::sync::RwLock;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Resource guard for Gröbner computations. Exceeding any bound aborts
/// with [`Error::Resource`] instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest total degree allowed for a basis element.
    pub max_degree: u32,
    /// Largest number of basis elements during one Buchberger run.
    pub max_basis: usize,
    /// Largest number of terms in a single intermediate polynomial.
    pub max_terms: usize,
    /// Largest number of S-pairs processed in one run.
    pub max_pairs: usize,
    /// Largest number of recursion branches in one image computation.
    pub max_branches: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_degree: 64,
        max_basis: 2_000,
        max_terms: 50_000,
        max_pairs: 200_000,
        max_branches: 10_000,
    };

    /// Default limits with `max_degree` taken from `GOODMAP_MAX_DEGREE`
    /// when it is set to a positive integer.
    pub fn from_env() -> std::result::Result<Limits, String> {
        let mut limits = Limits::DEFAULT;
        if let Ok(raw) = std::env::var("GOODMAP_MAX_DEGREE") {
            limits.max_degree = raw
                .trim()
                .parse()
                .ok()
                .filter(|&d: &u32| d > 0)
                .ok_or_else(|| {
                    format!("GOODMAP_MAX_DEGREE must be a positive integer, got {raw:?}")
                })?;
        }
        Ok(limits)
    }

    /// Limits in force for this process.
    pub fn current() -> Limits {
        *GLOBAL_LIMITS.read().unwrap_or_else(|e| e.into_inner())
    }

    /// Replaces the process-wide limits.
    pub fn install(self) {
        *GLOBAL_LIMITS.write().unwrap_or_else(|e| e.into_inner()) = self;
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

static GLOBAL_LIMITS: RwLock<Limits> = RwLock::new(Limits::DEFAULT);

type Terms<F> = Vec<(Monomial, F)>;

/// `p - c * m * g`, where the leading terms are known to cancel.
fn sub_scaled<F: Field>(
    p: &[(Monomial, F)],
    c: &F,
    m: &Monomial,
    g: &[(Monomial, F)],
    order: MonomialOrder,
) -> Terms<F> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (1, 1);
    while i < p.len() && j < g.len() {
        let shifted = m.mul(&g[j].0);
        match order.cmp(&p[i].0, &shifted) {
            std::cmp::Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((shifted, g[j].1.mul(c).neg()));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = p[i].1.sub(&g[j].1.mul(c));
                if !v.is_zero() {
                    out.push((shifted, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    out.extend(g[j..].iter().map(|(n, a)| (m.mul(n), a.mul(c).neg())));
    out
}

fn make_monic<F: Field>(mut p: Terms<F>) -> Terms<F> {
    if let Some((_, lc)) = p.first() {
        if !lc.is_one() {
            let inv = lc.inv();
            p.iter_mut().for_each(|(_, c)| *c = c.mul(&inv));
        }
    }
    p
}

/// Fully reduces `p` modulo monic `basis` elements.
fn normal_form<F: Field>(
    mut p: Terms<F>,
    basis: &[Terms<F>],
    order: MonomialOrder,
    limits: &Limits,
) -> Result<Terms<F>> {
    let mut rest = Vec::new();
    while let Some((lead, c)) = p.first() {
        match basis.iter().find(|b| b[0].0.divides(lead)) {
            Some(b) => {
                let m = b[0].0.quotient_of(lead);
                let c = c.clone();
                p = sub_scaled(&p, &c, &m, b, order);
                if p.len() > limits.max_terms {
                    return Err(Error::Resource(format!(
                        "intermediate polynomial exceeded {} terms",
                        limits.max_terms
                    )));
                }
            }
            None => rest.push(p.remove(0)),
        }
    }
    Ok(rest)
}

fn to_terms<F: Field>(p: &Polynomial<F>, order: MonomialOrder) -> Terms<F> {
    p.sorted_terms(order)
}

fn check_contexts<F: Field>(nvars: usize, polys: &[Polynomial<F>]) -> Result<()> {
    match polys.iter().find(|p| p.nvars() != nvars) {
        Some(p) => Err(Error::MixedContext {
            expected: nvars,
            found: p.nvars(),
        }),
        None => Ok(()),
    }
}

/// Multivariate division: `f = Σ q_i d_i + r` where no term of `r` is
/// divisible by the leading monomial of any non-zero divisor.
pub fn divide<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<(Vec<Polynomial<F>>, Polynomial<F>)> {
    let n = f.nvars();
    check_contexts(n, divisors)?;
    let divs: Vec<Terms<F>> = divisors.iter().map(|d| to_terms(d, order)).collect();
    let mut quotients: Vec<Terms<F>> = vec![Vec::new(); divisors.len()];
    let mut p = to_terms(f, order);
    let mut rest = Vec::new();
    while let Some((lead, c)) = p.first() {
        match divs
            .iter()
            .position(|d| !d.is_empty() && d[0].0.divides(lead))
        {
            Some(i) => {
                let m = divs[i][0].0.quotient_of(lead);
                let q = c.mul(&divs[i][0].1.inv());
                p = sub_scaled(&p, &q, &m, &divs[i], order);
                quotients[i].push((m, q));
            }
            None => rest.push(p.remove(0)),
        }
    }
    let quotients = quotients
        .into_iter()
        .map(|q| Polynomial::from_terms(n, q))
        .collect();
    Ok((quotients, Polynomial::from_sorted(n, rest, order)))
}

/// S-polynomial of two non-zero polynomials.
pub fn s_polynomial<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    order: MonomialOrder,
) -> Polynomial<F> {
    let (fm, fc) = f.leading_term(order).expect("non-zero polynomial");
    let (gm, gc) = g.leading_term(order).expect("non-zero polynomial");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&lcm), &fc.inv());
    let b = g.mul_term(&gm.quotient_of(&lcm), &gc.inv());
    &a - &b
}

/// Normal form of `f` modulo a Gröbner basis.
pub fn reduce<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<Polynomial<F>> {
    check_contexts(f.nvars(), basis)?;
    let monic: Vec<Terms<F>> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| make_monic(to_terms(b, order)))
        .collect();
    let nf = normal_form(to_terms(f, order), &monic, order, &Limits::current())?;
    Ok(Polynomial::from_sorted(f.nvars(), nf, order))
}

/// True if every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>], order: MonomialOrder) -> Result<bool> {
    let nonzero: Vec<_> = basis.iter().filter(|b| !b.is_zero()).cloned().collect();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let s = s_polynomial(&nonzero[i], &nonzero[j], order);
            if !reduce(&s, &nonzero, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens` in a ring of
/// `nvars` variables, sorted by decreasing leading monomial. The zero
/// ideal has the empty basis; the unit ideal has basis `{1}`.
///
/// Buchberger's algorithm with the coprime-leading-monomial criterion and
/// the chain criterion, selecting pairs by smallest lcm (ties by index),
/// so runs are deterministic.
pub fn groebner<F: Field>(
    nvars: usize,
    gens: &[Polynomial<F>],
    order: MonomialOrder,
    limits: &Limits,
) -> Result<Vec<Polynomial<F>>> {
    check_contexts(nvars, gens)?;
    let unit = || vec![Polynomial::one(nvars)];
    let mut basis: Vec<Terms<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<Terms<F>>,
                pairs: &mut Vec<Pair>,
                pending: &mut HashSet<(usize, usize)>,
                p: Terms<F>|
     -> Result<bool> {
        if p[0].0.is_one() {
            return Ok(true);
        }
        let degree = p.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        if degree > limits.max_degree {
            return Err(Error::Resource(format!(
                "basis element of degree {degree} exceeds the degree bound {}",
                limits.max_degree
            )));
        }
        if basis.len() >= limits.max_basis {
            return Err(Error::Resource(format!(
                "Gröbner basis grew beyond {} elements",
                limits.max_basis
            )));
        }
        let j = basis.len();
        for (i, b) in basis.iter().enumerate() {
            pairs.push(Pair {
                i,
                j,
                lcm: b[0].0.lcm(&p[0].0),
            });
            pending.insert((i, j));
        }
        basis.push(p);
        Ok(false)
    };

    for g in gens.iter().filter(|g| !g.is_zero()) {
        if push(
            &mut basis,
            &mut pairs,
            &mut pending,
            make_monic(to_terms(g, order)),
        )? {
            return Ok(unit());
        }
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .expect("non-empty pair list");
        let Pair { i, j, lcm } = pairs.swap_remove(best);
        pending.remove(&(i, j));
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::Resource(format!(
                "more than {} S-pairs processed",
                limits.max_pairs
            )));
        }
        if basis[i][0].0.is_coprime(&basis[j][0].0) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let (fi, fj) = (&basis[i], &basis[j]);
        let mi = fi[0].0.quotient_of(&lcm);
        let mj = fj[0].0.quotient_of(&lcm);
        // fi, fj monic: S = mi*fi - mj*fj
        let lifted: Terms<F> = fi.iter().map(|(m, c)| (mi.mul(m), c.clone())).collect();
        let s = sub_scaled(&lifted, &F::one(), &mj, fj, order);
        let nf = normal_form(s, &basis, order, limits)?;
        if !nf.is_empty() && push(&mut basis, &mut pairs, &mut pending, make_monic(nf))? {
            return Ok(unit());
        }
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Terms<F>> = Vec::new();
    for (idx, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(other, c)| {
            other != idx && c[0].0.divides(&b[0].0) && (c[0].0 != b[0].0 || other < idx)
        });
        if !redundant {
            keep.push(b.clone());
        }
    }
    // interreduce
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Terms<F>> = keep
            .iter()
            .enumerate()
            .filter(|&(o, _)| o != idx)
            .map(|(_, t)| t.clone())
            .collect();
        let lead = keep[idx][0].clone();
        let tail = normal_form(keep[idx][1..].to_vec(), &others, order, limits)?;
        let mut full = vec![lead];
        full.extend(tail);
        reduced.push(full);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    Ok(reduced
        .into_iter()
        .map(|t| Polynomial::from_sorted(nvars, t, order))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{Rational, Zp};

    type P = Polynomial<Rational>;

    fn x() -> P {
        P::var(2, 0)
    }
    fn y() -> P {
        P::var(2, 1)
    }
    fn c(v: i64) -> P {
        P::constant(2, Rational::from_i64(v))
    }

    #[test]
    fn division_examples() {
        let lex = MonomialOrder::Lex;
        let (q, r) = divide(&x(), &[x()], lex).unwrap();
        assert_eq!(q, vec![c(1)]);
        assert!(r.is_zero());

        // x^2 y + 1 divided by xy - 1 -> quotient x, remainder x + 1
        let f = &(&x().pow(2) * &y()) + &c(1);
        let d = &(&x() * &y()) - &c(1);
        let (q, r) = divide(&f, std::slice::from_ref(&d), lex).unwrap();
        assert_eq!(r, &x() + &c(1));
        assert_eq!(&(&q[0] * &d) + &r, f);

        let (_, r) = divide(&P::zero(2), &[d], lex).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn division_rejects_mixed_contexts() {
        let err = divide(&x(), &[P::var(3, 0)], MonomialOrder::Lex).unwrap_err();
        assert_eq!(
            err,
            Error::MixedContext {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn groebner_examples() {
        let limits = Limits::DEFAULT;
        let lex = MonomialOrder::Lex;
        let gb = groebner(2, &[&x() - &y(), &x() + &y()], lex, &limits).unwrap();
        assert_eq!(gb, vec![x(), y()]);

        let one_var = P::var(1, 0).pow(2);
        assert_eq!(
            groebner(1, std::slice::from_ref(&one_var), lex, &limits).unwrap(),
            vec![one_var]
        );

        assert_eq!(groebner(2, &[c(1)], lex, &limits).unwrap(), vec![c(1)]);
        assert_eq!(groebner(2, &[c(7)], lex, &limits).unwrap(), vec![c(1)]);
        assert!(groebner::<Rational>(2, &[], lex, &limits)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn twisted_cubic() {
        // (y - x^2, z - x^3) under lex x > y > z contains y^3 - z^2
        let v = |i| P::var(3, i);
        let gens = [&v(1) - &v(0).pow(2), &v(2) - &v(0).pow(3)];
        let gb = groebner(3, &gens, MonomialOrder::Lex, &Limits::DEFAULT).unwrap();
        assert!(is_groebner_basis(&gb, MonomialOrder::Lex).unwrap());
        let target = &v(1).pow(3) - &v(2).pow(2);
        assert!(reduce(&target, &gb, MonomialOrder::Lex).unwrap().is_zero());
        for g in &gens {
            assert!(reduce(g, &gb, MonomialOrder::Lex).unwrap().is_zero());
        }
    }

    #[test]
    fn degree_guard_trips() {
        let limits = Limits {
            max_degree: 3,
            ..Limits::DEFAULT
        };
        let f = &x().pow(5) - &y();
        assert!(matches!(
            groebner(2, &[f], MonomialOrder::GrevLex, &limits),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn prime_field_basis() {
        type Q = Polynomial<Zp<101>>;
        let x = Q::var(2, 0);
        let y = Q::var(2, 1);
        let gb = groebner(
            2,
            &[&(&x * &y) - &Q::one(2), &x - &y],
            MonomialOrder::Lex,
            &Limits::DEFAULT,
        )
        .unwrap();
        // y^2 - 1 and x - y
        assert_eq!(gb.len(), 2);
        assert!(is_groebner_basis(&gb, MonomialOrder::Lex).unwrap());
    }
}

//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use goodmap_core::poly::{groebner, Field, Limits, MonomialOrder, Polynomial};
use goodmap_core::{AffineConstructible, PolyMap};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Nullstellensatz fibre test: `p ∈ f(S)` over the algebraic closure iff
/// for some stratum `V(I) ∖ V(J)` and generator `g` of `J` the system
/// `I, f(x) = p, t·g(x) = 1` has a reduced basis other than `{1}`.
pub fn fibre_nonempty<F: Field>(f: &PolyMap<F>, s: &AffineConstructible<F>, p: &[F]) -> bool {
    let n = f.source_vars();
    let ring = n + 1;
    let t = Polynomial::var(ring, 0);
    for stratum in s.strata() {
        let mut base: Vec<Polynomial<F>> = stratum
            .present()
            .generators()
            .iter()
            .map(|g| g.extend_front(1))
            .collect();
        for (c, value) in f.components().iter().zip(p) {
            base.push(&c.extend_front(1) - &Polynomial::constant(ring, value.clone()));
        }
        for g in stratum.absent().generators() {
            let mut gens = base.clone();
            gens.push(&Polynomial::one(ring) - &(&t * &g.extend_front(1)));
            let basis = groebner(ring, &gens, MonomialOrder::GrevLex, &Limits::DEFAULT).unwrap();
            if !(basis.len() == 1 && basis[0].is_unit()) {
                return true;
            }
        }
    }
    false
}

/// Small rationals biased towards special values.
pub fn sample_value<F: Field>(rng: &mut ChaCha8Rng) -> F {
    const NUMS: [i64; 7] = [-2, -1, 0, 0, 1, 2, 3];
    let num = F::from_i64(NUMS[rng.random_range(0..NUMS.len())]);
    if rng.random_bool(0.2) {
        num.mul(&F::from_i64(2).inv())
    } else {
        num
    }
}

pub fn sample_point<F: Field>(rng: &mut ChaCha8Rng, dim: usize) -> Vec<F> {
    (0..dim).map(|_| sample_value(rng)).collect()
}

/// Random polynomial with up to `terms` terms, per-variable degree at most
/// `degree` and small integer coefficients.
pub fn random_polynomial<F: Field>(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    terms: usize,
    degree: u32,
) -> Polynomial<F> {
    use goodmap_core::poly::Monomial;
    let count = rng.random_range(1..=terms);
    Polynomial::from_terms(
        nvars,
        (0..count).map(|_| {
            let e = (0..nvars).map(|_| rng.random_range(0..=degree)).collect();
            (Monomial::new(e), F::from_i64(rng.random_range(-3..=3)))
        }),
    )
}

use goodmap_core::poly::{
    groebner, is_groebner_basis, reduce, Field, Ideal, Limits, Monomial, MonomialOrder, Polynomial,
    Zp,
};
use proptest::prelude::*;

type F = Zp<101>;
type P = Polynomial<F>;

fn poly(nvars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = P> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), 0u64..101),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        P::from_terms(
            nvars,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::new(e), Zp::new(c))),
        )
    })
}

fn one_if_unit(basis: &[P]) -> bool {
    basis.len() == 1 && basis[0].is_unit()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in poly(3, 5, 3), b in poly(3, 5, 3), c in poly(3, 5, 3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &P::one(3), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(2, 4, 3), b in poly(2, 4, 3), x in 0u64..101, y in 0u64..101) {
        let p = [Zp::new(x), Zp::new(y)];
        let sum = (&a + &b).evaluate(&p).unwrap();
        let prod = (&a * &b).evaluate(&p).unwrap();
        let (va, vb) = (a.evaluate(&p).unwrap(), b.evaluate(&p).unwrap());
        prop_assert_eq!(sum, va.add(&vb));
        prop_assert_eq!(prod, va.mul(&vb));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn groebner_is_idempotent(gens in prop::collection::vec(poly(3, 3, 2), 1..4)) {
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Block(1)] {
            let basis = groebner(3, &gens, order, &Limits::DEFAULT).unwrap();
            prop_assert!(is_groebner_basis(&basis, order).unwrap());
            for g in &gens {
                prop_assert!(reduce(g, &basis, order).unwrap().is_zero());
            }
            let again = groebner(3, &basis, order, &Limits::DEFAULT).unwrap();
            prop_assert_eq!(again, basis);
        }
    }

    #[test]
    fn membership_does_not_depend_on_order(
        gens in prop::collection::vec(poly(2, 3, 2), 1..3),
        multipliers in prop::collection::vec(poly(2, 2, 1), 2),
        noise in poly(2, 2, 2),
    ) {
        let lex = groebner(2, &gens, MonomialOrder::Lex, &Limits::DEFAULT).unwrap();
        let grevlex = groebner(2, &gens, MonomialOrder::GrevLex, &Limits::DEFAULT).unwrap();
        let member = gens.iter().zip(&multipliers).fold(P::zero(2), |acc, (g, m)| &acc + &(g * m));
        for f in [member.clone(), &member + &noise] {
            let by_lex = reduce(&f, &lex, MonomialOrder::Lex).unwrap().is_zero();
            let by_grevlex = reduce(&f, &grevlex, MonomialOrder::GrevLex).unwrap().is_zero();
            prop_assert_eq!(by_lex, by_grevlex);
        }
        prop_assert!(reduce(&member, &lex, MonomialOrder::Lex).unwrap().is_zero());
    }

    /// Points `y0` off the elimination variety have empty fibres; points on
    /// it where some leading coefficient in `x` survives have non-empty ones.
    #[test]
    fn elimination_agrees_with_fibres(gens in prop::collection::vec(poly(2, 3, 2), 1..3)) {
        let ideal = Ideal::new(2, gens.clone()).unwrap();
        let eliminated = ideal.eliminate(1).unwrap();
        for g in eliminated.generators() {
            prop_assert!(ideal.contains(&g.extend_front(1)).unwrap());
        }
        let basis = ideal.groebner(MonomialOrder::Block(1)).unwrap();
        let coefficients: Vec<P> = basis
            .iter()
            .filter(|g| g.drop_front(1).is_none())
            .map(|g| g.block_leading_coefficient(1))
            .collect();
        for y0 in 0..101u64 {
            let y0 = Zp::new(y0);
            let on_variety = eliminated.generators().iter().all(|g| g.evaluate(&[y0]).unwrap().is_zero());
            let mut fibre = gens.clone();
            fibre.push(&P::var(2, 1) - &P::constant(2, y0));
            let fibre_empty = one_if_unit(&groebner(2, &fibre, MonomialOrder::GrevLex, &Limits::DEFAULT).unwrap());
            if !on_variety {
                prop_assert!(fibre_empty, "y0 = {} off the projection has a fibre", y0);
            }
            let extends = coefficients.iter().any(|c| !c.evaluate(&[Zp::new(0), y0]).unwrap().is_zero());
            if on_variety && extends {
                prop_assert!(!fibre_empty, "y0 = {} should extend", y0);
            }
        }
    }
}

use num_rational::BigRational;
use proptest::prelude::*;

use symplectic_hecke::algebra::{Assignment, Monomial, PrimeLaurent, VSeries, XPoly};
use symplectic_hecke::symmetric::{is_symmetric, msym, to_msym, Signature};
use symplectic_hecke::verify::msym_by_generating_function;

fn laurent() -> impl Strategy<Value = PrimeLaurent> {
    prop::collection::vec((-3i32..=3, -5i64..=5, 1i64..=3), 0..4).prop_map(|terms| {
        PrimeLaurent::from_terms(terms.into_iter().map(|(e, n, d)| (e, BigRational::new(n.into(), d.into()))))
    })
}

fn xpoly(nvars: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, nvars), laurent()), 0..5)
        .prop_map(move |terms| XPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (Monomial::new(e), c))))
}

fn signature() -> impl Strategy<Value = Signature> {
    prop::collection::vec(0u32..=6, 3).prop_map(Signature::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_exact_division(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn xpoly_ring_axioms(a in xpoly(3), b in xpoly(3), c in xpoly(3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        let rebuilt = XPoly::from_terms(3, a.terms().map(|(m, c)| (m.clone(), c.clone())));
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn xpoly_exact_division(a in xpoly(3), b in xpoly(3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitute_is_a_homomorphism(a in xpoly(3), b in xpoly(3), images in prop::collection::vec(xpoly(2), 3)) {
        let assignment: Assignment = images.into_iter().enumerate().collect();
        let sub = |f: &XPoly| f.substitute(&assignment).unwrap();
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
    }

    #[test]
    fn series_reciprocal(tail in prop::collection::vec(xpoly(3), 1..5)) {
        let order = tail.len();
        let mut coeffs = vec![XPoly::one(3)];
        coeffs.extend(tail);
        let s = VSeries::from_coeffs(3, coeffs).unwrap();
        prop_assert_eq!(s.try_mul(&s.recip().unwrap()).unwrap(), VSeries::one(3, order));
    }

    #[test]
    fn msym_round_trip(sig in signature(), c in laurent()) {
        prop_assume!(!c.is_zero());
        let m = msym(&sig, 3).unwrap().scale(&c);
        let d = to_msym(&m).unwrap();
        prop_assert_eq!(d.len(), 1);
        prop_assert_eq!(d.get(0, &sig), c);
        prop_assert_eq!(d.to_xpoly(), m);
    }

    #[test]
    fn msym_orbit_equals_generating_function(sig in signature()) {
        prop_assert_eq!(msym_by_generating_function(&sig, 3).unwrap(), msym(&sig, 3).unwrap());
    }

    #[test]
    fn orbit_size_is_index_of_stabilizer(sig in signature()) {
        let stabilizer: usize = sig.multiplicities().values().map(|&k| (1..=k).product::<usize>()).product();
        prop_assert_eq!(msym(&sig, 3).unwrap().len() * stabilizer, 6);
    }

    #[test]
    fn msym_is_homogeneous_and_symmetric(sig in signature()) {
        let m = msym(&sig, 3).unwrap();
        prop_assert!(is_symmetric(&m));
        prop_assert!(m.terms().all(|(mono, _)| mono.degree() == sig.size()));
    }

    #[test]
    fn symmetric_sums_decompose(a in signature(), b in signature(), c in laurent()) {
        let f = &msym(&a, 3).unwrap() + &msym(&b, 3).unwrap().scale(&c);
        prop_assert_eq!(to_msym(&f).unwrap().to_xpoly(), f);
    }
}

mod common;

use common::{box_points, build, ideal, mono, raw_gens};
use monideal::closure::{closure_colon_identity, closure_of_power, integral_closure, is_normal_up_to, np_contains, NewtonPolyhedron};
use monideal::monomial::Ring;
use monideal::{MonomialIdeal, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Checks a certificate directly: `λ ≥ 0`, `Σλ = 1`, `Σ λ_j g_j ≤ a`.
fn certificate_is_valid(ideal: &MonomialIdeal, a: &[u32], lambda: &[Rational]) -> bool {
    if lambda.len() != ideal.len() || lambda.iter().any(|l| *l < Rational::zero()) {
        return false;
    }
    let total: Rational = lambda.iter().cloned().sum();
    if total != Rational::one() {
        return false;
    }
    (0..ideal.nvars()).all(|i| {
        let s: Rational = ideal
            .generators()
            .iter()
            .zip(lambda)
            .map(|(g, l)| l * Rational::from_integer(g.exponents()[i].into()))
            .sum();
        s <= Rational::from_integer(a[i].into())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sandwich(i in ideal(3, 4, 3)) {
        let c = integral_closure(&i).unwrap();
        prop_assert!(i.is_subset(&c).unwrap());
        prop_assert!(c.is_subset(&i.radical()).unwrap());
    }

    #[test]
    fn idempotent(i in ideal(3, 4, 3)) {
        let c = integral_closure(&i).unwrap();
        prop_assert!(integral_closure(&c).unwrap().equals(&c).unwrap());
    }

    #[test]
    fn monotone((n, a, b) in (1usize..=3).prop_flat_map(|n| (Just(n), raw_gens(n, 3, 3), raw_gens(n, 2, 3)))) {
        let i = build(n, &a);
        let j = i.sum(&build(n, &b)).unwrap();
        if i.is_proper_nonzero() && j.is_proper_nonzero() {
            prop_assert!(integral_closure(&i).unwrap().is_subset(&integral_closure(&j).unwrap()).unwrap());
        }
    }

    #[test]
    fn certificates_verify(i in ideal(3, 4, 3)) {
        let np = NewtonPolyhedron::new(&i).unwrap();
        let top: Vec<u32> = i.max_exponents();
        for a in box_points(&top) {
            match np.certificate(&a).unwrap() {
                Some(lambda) => prop_assert!(certificate_is_valid(&i, &a, &lambda), "bad certificate at {:?}", a),
                None => prop_assert!(!i.contains(&mono(&a)).unwrap()),
            }
        }
    }

    #[test]
    fn lp_matches_power_test(i in ideal(2, 3, 3)) {
        let powers = i.powers(6).unwrap();
        for a in box_points(&i.max_exponents()) {
            let eq = powers.iter().enumerate().any(|(k, p)| {
                let k = k as u32 + 1;
                p.contains(&mono(&a.iter().map(|e| e * k).collect::<Vec<_>>())).unwrap()
            });
            prop_assert_eq!(np_contains(&i, &a).unwrap(), eq, "a = {:?}", a);
        }
    }

    #[test]
    fn colon_identities(i in ideal(3, 3, 2), n in 1u32..=3, m in 1u32..=3) {
        if m <= n {
            prop_assert!(closure_colon_identity(&i, n, m).unwrap());
        }
    }
}

#[test]
fn classic_closures() {
    let r = Ring::new(["x", "y"]).unwrap();
    // (x^2, y^2) closes to (x^2, xy, y^2)
    let i = MonomialIdeal::from_exponents(r.clone(), &[&[2, 0], &[0, 2]]).unwrap();
    assert_eq!(integral_closure(&i).unwrap().generator_strings(), ["x^2", "x*y", "y^2"]);
    // (x^3, y^2): x^2 y lies on the segment, x y does not
    let j = MonomialIdeal::from_exponents(r.clone(), &[&[3, 0], &[0, 2]]).unwrap();
    assert_eq!(integral_closure(&j).unwrap().generator_strings(), ["y^2", "x^3", "x^2*y"]);
    assert!(np_contains(&j, &[2, 1]).unwrap());
    assert!(!np_contains(&j, &[1, 1]).unwrap());
    assert_eq!(closure_of_power(&j, 0).unwrap(), MonomialIdeal::unit(r.clone()));
    // the maximal ideal is normal
    assert_eq!(is_normal_up_to(&MonomialIdeal::maximal(r), 4).unwrap(), None);
}

#[test]
fn non_normal_ideal_is_flagged() {
    let r = Ring::new(["x", "y"]).unwrap();
    let i = MonomialIdeal::from_exponents(r, &[&[2, 0], &[0, 2]]).unwrap();
    assert_eq!(is_normal_up_to(&i, 3).unwrap(), Some(1));
}

mod common;

use common::{box_points, ideal, mono, squarefree_ideal};
use monideal::monomial::Ring;
use monideal::primes::{
    alexander_dual, associated_primes_decomp, associated_primes_witness, irreducible_decomposition, localize,
    maximal_ideal_witness, minimal_transversals,
};
use monideal::{Monomial, MonomialIdeal, MonomialPrime};
use proptest::prelude::*;

/// Every `w` in the box `[0, top]` with `(I : w) = m`, found exhaustively.
fn witnesses_in(ideal: &MonomialIdeal, top: &[u32]) -> Vec<Vec<u32>> {
    let m = MonomialIdeal::maximal(ideal.ring().clone());
    box_points(top)
        .into_iter()
        .filter(|w| ideal.colon_monomial(&mono(w)).unwrap().equals(&m).unwrap())
        .collect()
}

/// Ass by brute force: `P` is associated iff the localization at `P` has a
/// witness for its maximal ideal anywhere in a generous box.
fn ass_brute(ideal: &MonomialIdeal) -> Vec<MonomialPrime> {
    let n = ideal.nvars();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let vars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let local = localize(ideal, &vars).unwrap();
        if !local.is_proper_nonzero() {
            continue;
        }
        let top: Vec<u32> = local.max_exponents().iter().map(|e| e + 1).collect();
        if !witnesses_in(&local, &top).is_empty() {
            out.push(MonomialPrime::new(ideal.ring().clone(), vars).unwrap());
        }
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn decomposition_is_correct_and_irredundant(i in ideal(4, 5, 3)) {
        let comps = irreducible_decomposition(&i).unwrap();
        let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.to_ideal()).collect();
        prop_assert!(MonomialIdeal::intersect_all(&ideals).unwrap().equals(&i).unwrap());
        if ideals.len() > 1 {
            for skip in 0..ideals.len() {
                let rest: Vec<&MonomialIdeal> = ideals.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, x)| x).collect();
                let bigger = MonomialIdeal::intersect_all(rest).unwrap();
                prop_assert!(!bigger.equals(&i).unwrap());
            }
        }
    }

    #[test]
    fn witness_and_decomposition_agree(i in ideal(5, 6, 3)) {
        prop_assert_eq!(associated_primes_witness(&i).unwrap().primes, associated_primes_decomp(&i).unwrap().primes);
    }

    #[test]
    fn ass_matches_brute_force(i in ideal(3, 4, 2)) {
        prop_assert_eq!(associated_primes_witness(&i).unwrap().primes, ass_brute(&i));
    }

    #[test]
    fn witness_box_is_complete(i in ideal(3, 4, 3)) {
        let m_box: Vec<u32> = i.max_exponents();
        if m_box.iter().all(|&e| e > 0) {
            let small: Vec<u32> = m_box.iter().map(|e| e - 1).collect();
            let large: Vec<u32> = m_box.iter().map(|e| e + 2).collect();
            let inside = witnesses_in(&i, &small);
            let all = witnesses_in(&i, &large);
            prop_assert_eq!(inside.is_empty(), all.is_empty());
            for w in &all {
                prop_assert!(w.iter().zip(&small).all(|(a, b)| a <= b), "witness {:?} outside the box", w);
            }
            prop_assert_eq!(maximal_ideal_witness(&i).unwrap().is_some(), !all.is_empty());
        }
    }

    #[test]
    fn radical_is_intersection_of_minimal_primes(i in ideal(4, 5, 3)) {
        let minimal: Vec<MonomialIdeal> = associated_primes_witness(&i).unwrap().minimal_primes().iter().map(|p| p.to_ideal()).collect();
        prop_assert!(MonomialIdeal::intersect_all(&minimal).unwrap().equals(&i.radical()).unwrap());
    }

    #[test]
    fn dual_is_an_involution(i in squarefree_ideal(6, 6)) {
        let d = alexander_dual(&i).unwrap();
        prop_assert!(alexander_dual(&d).unwrap().equals(&i).unwrap());
        for g in d.generators() {
            for h in i.generators() {
                prop_assert!(g.support().iter().any(|v| h.support().contains(v)));
            }
        }
    }

    #[test]
    fn dual_matches_intersection_of_primes(i in squarefree_ideal(6, 6)) {
        let primes: Vec<MonomialIdeal> = i
            .generators()
            .iter()
            .map(|g| MonomialIdeal::prime(i.ring().clone(), &g.support()).unwrap())
            .collect();
        let oracle = MonomialIdeal::intersect_all(&primes).unwrap();
        prop_assert!(alexander_dual(&i).unwrap().equals(&oracle).unwrap());
    }
}

#[test]
fn transversals_of_a_triangle() {
    let mut t = minimal_transversals(&[0b011, 0b110, 0b101]);
    t.sort();
    assert_eq!(t, vec![0b011, 0b101, 0b110]);
}

#[test]
fn embedded_prime_example() {
    let r = Ring::new(["x", "y"]).unwrap();
    let i = MonomialIdeal::from_exponents(r.clone(), &[&[2, 0], &[1, 1]]).unwrap();
    let ass = associated_primes_decomp(&i).unwrap();
    assert_eq!(ass.primes.iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["(x)", "(x, y)"]);
    // (x^2, xy) = (x) ∩ (y, x^2)
    let mut comps: Vec<String> = irreducible_decomposition(&i).unwrap().iter().map(|c| c.to_ideal().to_string()).collect();
    comps.sort();
    assert_eq!(comps, ["(x)", "(y, x^2)"]);
    assert_eq!(maximal_ideal_witness(&i).unwrap(), Some(Monomial::new(vec![1, 0])));
}

mod common;

use std::collections::BTreeMap;

use common::{build, ideal, raw_gens};
use monideal::monomial::Ring;
use monideal::primes::{associated_primes_witness, maximal_ideal_associated};
use monideal::resolution::{betti_numbers, depth_quotient, koszul_complex, lcm_lattice};
use monideal::{Monomial, MonomialIdeal};
use proptest::prelude::*;

/// Multigraded K-polynomial of `R/I` by inclusion-exclusion over all
/// subsets of the generators: `Σ_σ (-1)^{|σ|} x^{lcm σ}`.
fn k_polynomial(ideal: &MonomialIdeal) -> BTreeMap<Monomial, i64> {
    let g = ideal.generators();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << g.len()) {
        let mut l = Monomial::one(ideal.nvars());
        for (j, m) in g.iter().enumerate() {
            if mask >> j & 1 == 1 {
                l = l.lcm(m);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *out.entry(l).or_insert(0) += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn permuted(i: &MonomialIdeal, shift: usize) -> MonomialIdeal {
    let mut g = i.generators().to_vec();
    let len = g.len();
    g.rotate_left(shift % len);
    g.reverse();
    MonomialIdeal::minimalize(i.ring().clone(), g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_characteristic(i in ideal(4, 5, 3)) {
        prop_assert_eq!(betti_numbers(&i).unwrap().alternating_sum(), 0);
    }

    #[test]
    fn graded_euler_characteristic_matches_k_polynomial(i in ideal(4, 6, 3)) {
        let betti = betti_numbers(&i).unwrap();
        let mut from_betti: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (k, a, b) in betti.entries() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            *from_betti.entry(a.clone()).or_insert(0) += sign * b as i64;
        }
        from_betti.retain(|_, c| *c != 0);
        prop_assert_eq!(from_betti, k_polynomial(&i));
    }

    #[test]
    fn no_homology_off_the_lattice(i in ideal(3, 4, 3), a in prop::collection::vec(0u32..=4, 3)) {
        let a = &a[..i.nvars()];
        let lattice = lcm_lattice(&i).unwrap();
        let m = Monomial::new(a.to_vec());
        if !lattice.elements.contains(&m) && !m.is_one() {
            let k = koszul_complex(&i, a).unwrap();
            prop_assert!(k.reduced_betti().iter().all(|&b| b == 0));
        }
    }

    #[test]
    fn betti_numbers_ignore_generator_order(i in ideal(4, 5, 3), shift in 0usize..8) {
        prop_assert_eq!(betti_numbers(&i).unwrap(), betti_numbers(&permuted(&i, shift)).unwrap());
    }

    #[test]
    fn depth_zero_iff_maximal_ideal_associated((n, gens) in (1usize..=4).prop_flat_map(|n| (Just(n), raw_gens(n, 5, 3)))) {
        let i = build(n, &gens);
        if i.is_proper_nonzero() && i.support().len() == n {
            prop_assert_eq!(depth_quotient(&i).unwrap() == 0, maximal_ideal_associated(&i).unwrap());
        }
    }

    #[test]
    fn depth_bounded_by_associated_primes(i in ideal(4, 5, 2)) {
        let depth = depth_quotient(&i).unwrap();
        let ass = associated_primes_witness(&i).unwrap();
        let tallest = ass.primes.iter().map(|p| p.height()).max().unwrap();
        prop_assert!(depth <= i.nvars() - tallest);
    }

    #[test]
    fn free_variables_add_to_depth(i in ideal(3, 4, 3)) {
        let n = i.nvars();
        let padded = i.generators().iter().map(|g| {
            let mut e = g.exponents().to_vec();
            e.extend([0, 0]);
            Monomial::new(e)
        });
        let wider = MonomialIdeal::minimalize(Ring::indexed(n + 2).unwrap(), padded).unwrap();
        prop_assert_eq!(depth_quotient(&wider).unwrap(), depth_quotient(&i).unwrap() + 2);
    }
}

#[test]
fn triangle_edge_ideal_betti_numbers() {
    // (xy, yz, xz): resolution 0 <- R <- R^3 <- R^2 <- 0
    let r = Ring::new(["x", "y", "z"]).unwrap();
    let i = MonomialIdeal::from_exponents(r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
    let b = betti_numbers(&i).unwrap();
    assert_eq!(b.totals(), vec![1, 3, 2]);
    assert_eq!(b.get(2, &Monomial::new(vec![1, 1, 1])), 2);
    assert_eq!(depth_quotient(&i).unwrap(), 1);
}

#[test]
fn complete_intersection_is_koszul() {
    let r = Ring::indexed(3).unwrap();
    let i = MonomialIdeal::from_exponents(r, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]).unwrap();
    assert_eq!(betti_numbers(&i).unwrap().totals(), vec![1, 3, 3, 1]);
    assert_eq!(depth_quotient(&i).unwrap(), 0);
}

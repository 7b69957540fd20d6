#![allow(dead_code)]

use monideal::monomial::Ring;
use monideal::{Monomial, MonomialIdeal};
use proptest::prelude::*;

/// Raw generator lists: `n` variables, up to `max_gens` generators with
/// exponents in `0..=max_exp`.
pub fn raw_gens(n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
}

pub fn build(n: usize, gens: &[Vec<u32>]) -> MonomialIdeal {
    MonomialIdeal::minimalize(Ring::indexed(n).unwrap(), gens.iter().map(|g| Monomial::new(g.clone()))).unwrap()
}

/// Proper nonzero ideals in `1..=max_n` variables.
pub fn ideal(max_n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n)
        .prop_flat_map(move |n| raw_gens(n, max_gens, max_exp).prop_map(move |g| build(n, &g)))
        .prop_filter("proper nonzero", |i| i.is_proper_nonzero())
}

pub fn squarefree_ideal(max_n: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal(max_n, max_gens, 1)
}

/// Every exponent vector in the box `[0, top]`.
pub fn box_points(top: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut a = vec![0u32; top.len()];
    loop {
        out.push(a.clone());
        let Some(i) = (0..top.len()).find(|&i| a[i] < top[i]) else { return out };
        a[i] += 1;
        a[..i].iter_mut().for_each(|e| *e = 0);
    }
}

/// Membership by direct divisibility against an arbitrary generator list.
pub fn divisible_by_any(gens: &[Vec<u32>], a: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(a).all(|(x, y)| x <= y))
}

pub fn mono(a: &[u32]) -> Monomial {
    Monomial::new(a.to_vec())
}

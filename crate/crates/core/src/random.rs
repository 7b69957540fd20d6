//! Seeded random ideals and graphs for the property sweeps.
//!
//! All generators draw from a `ChaCha8Rng` so a seed fixes the output on
//! every platform. The distributions:
//!
//! - [`random_ideal`]: the number of generators is uniform in
//!   `1..=max_gens`; each exponent is uniform in `0..=max_exp`. Draws that
//!   produce the unit ideal are rejected and redrawn.
//! - [`random_squarefree_ideal`]: generators are uniform non-empty subsets
//!   of the variables.
//! - [`random_degree2_ideal`]: each generator is a variable `x_i` with
//!   probability 1/4, otherwise a quadric `x_i x_j` with `i ≤ j` uniform
//!   (so squares `x_i^2` occur).
//! - [`random_graph`]: each pair is an edge independently with probability
//!   `p`; edgeless draws are redrawn.
//!
//! Every ideal is minimalized, proper and nonzero.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graphs::SimpleGraph;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn finish(n: usize, gens: Vec<Monomial>) -> Result<Option<MonomialIdeal>> {
    let ideal = MonomialIdeal::minimalize(Ring::indexed(n)?, gens)?;
    Ok(ideal.is_proper_nonzero().then_some(ideal))
}

pub fn random_ideal(rng: &mut SeededRng, n: usize, max_gens: usize, max_exp: u32) -> Result<MonomialIdeal> {
    assert!(n >= 1 && max_gens >= 1 && max_exp >= 1);
    loop {
        let count = rng.gen_range(1..=max_gens);
        let gens = (0..count)
            .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect::<Vec<_>>()))
            .collect();
        if let Some(ideal) = finish(n, gens)? {
            return Ok(ideal);
        }
    }
}

/// As [`random_ideal`], redrawn until every variable divides some generator.
pub fn random_full_support_ideal(rng: &mut SeededRng, n: usize, max_gens: usize, max_exp: u32) -> Result<MonomialIdeal> {
    loop {
        let ideal = random_ideal(rng, n, max_gens, max_exp)?;
        if ideal.support().len() == n {
            return Ok(ideal);
        }
    }
}

pub fn random_squarefree_ideal(rng: &mut SeededRng, n: usize, max_gens: usize) -> Result<MonomialIdeal> {
    assert!(n >= 1 && max_gens >= 1);
    loop {
        let count = rng.gen_range(1..=max_gens);
        let gens = (0..count)
            .map(|_| loop {
                let m = Monomial::new((0..n).map(|_| u32::from(rng.gen_bool(0.5))).collect::<Vec<_>>());
                if !m.is_one() {
                    break m;
                }
            })
            .collect();
        if let Some(ideal) = finish(n, gens)? {
            return Ok(ideal);
        }
    }
}

pub fn random_degree2_ideal(rng: &mut SeededRng, n: usize, max_gens: usize) -> Result<MonomialIdeal> {
    assert!(n >= 1 && max_gens >= 1);
    loop {
        let count = rng.gen_range(1..=max_gens);
        let gens = (0..count)
            .map(|_| {
                let mut exps = vec![0u32; n];
                if rng.gen_bool(0.25) {
                    exps[rng.gen_range(0..n)] = 1;
                } else {
                    let i = rng.gen_range(0..n);
                    let j = rng.gen_range(0..n);
                    exps[i.min(j)] += 1;
                    exps[i.max(j)] += 1;
                }
                Monomial::new(exps)
            })
            .collect();
        if let Some(ideal) = finish(n, gens)? {
            return Ok(ideal);
        }
    }
}

pub fn random_graph(rng: &mut SeededRng, n: usize, p: f64) -> Result<SimpleGraph> {
    assert!(n >= 2);
    loop {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        if !edges.is_empty() {
            return SimpleGraph::new(n, edges);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_ideals() {
        let a: Vec<_> = {
            let mut rng = seeded(7);
            (0..5).map(|_| random_ideal(&mut rng, 3, 4, 3).unwrap()).collect()
        };
        let b: Vec<_> = {
            let mut rng = seeded(7);
            (0..5).map(|_| random_ideal(&mut rng, 3, 4, 3).unwrap()).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn generated_ideals_respect_their_profile() {
        let mut rng = seeded(1);
        for _ in 0..50 {
            let i = random_degree2_ideal(&mut rng, 5, 6).unwrap();
            assert!(i.degree() <= 2 && i.is_proper_nonzero());
            let s = random_squarefree_ideal(&mut rng, 4, 5).unwrap();
            assert!(s.is_squarefree());
            let f = random_full_support_ideal(&mut rng, 3, 4, 2).unwrap();
            assert_eq!(f.support().len(), 3);
            let g = random_graph(&mut rng, 5, 0.4).unwrap();
            assert!(g.edge_count() >= 1);
        }
    }
}

//! Multigraded Betti numbers of `R/I`, projective dimension and depth.
//!
//! `β_{i,a}(R/I)` equals the rank of `H̃_{i-2}` of the upper Koszul complex
//! `K^a(I) = { ε ⊆ supp(a) square-free : x^{a-ε} ∈ I }`, and it vanishes
//! unless `a` lies in the lcm lattice of the minimal generators. Homology is
//! taken over the rationals.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::SimplicialComplex;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub const DEFAULT_LATTICE_CAP: usize = 200_000;

/// Lcms of all non-empty subsets of the minimal generators.
#[derive(Debug, Clone)]
pub struct LcmLattice {
    pub ideal: MonomialIdeal,
    pub elements: Vec<Monomial>,
}

pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    lcm_lattice_with_cap(ideal, DEFAULT_LATTICE_CAP)
}

pub fn lcm_lattice_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<LcmLattice> {
    ideal.require_proper_nonzero()?;
    // Adding generators one at a time: the new lcms are g itself and
    // lcm(g, l) for every element l collected so far.
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut elements: Vec<Monomial> = Vec::new();
    for g in ideal.generators() {
        let mut fresh: Vec<Monomial> = Vec::new();
        if seen.insert(g.clone()) {
            fresh.push(g.clone());
        }
        for l in &elements {
            let m = l.lcm(g);
            if seen.insert(m.clone()) {
                fresh.push(m);
            }
        }
        elements.extend(fresh);
        if elements.len() > cap {
            return Err(Error::LatticeCap { cap });
        }
    }
    elements.sort();
    Ok(LcmLattice {
        ideal: ideal.clone(),
        elements,
    })
}

/// The upper Koszul simplicial complex of `I` in multidegree `a`, on the
/// variable indices. Void exactly when `x^a ∉ I`.
pub fn koszul_complex(ideal: &MonomialIdeal, a: &[u32]) -> Result<SimplicialComplex> {
    if a.len() != ideal.nvars() {
        return Err(Error::ArityMismatch {
            expected: ideal.nvars(),
            found: a.len(),
        });
    }
    if a.len() > 64 {
        return Err(Error::TooManyVariables {
            found: a.len(),
            limit: 64,
        });
    }
    let support: Vec<usize> = (0..a.len()).filter(|&i| a[i] > 0).collect();
    let mut faces = Vec::new();
    let mut shifted = a.to_vec();
    for mask in 0u64..(1u64 << support.len()) {
        let mut face = 0u64;
        for (b, &i) in support.iter().enumerate() {
            if mask & (1u64 << b) != 0 {
                shifted[i] = a[i] - 1;
                face |= 1u64 << i;
            } else {
                shifted[i] = a[i];
            }
        }
        if ideal.contains_exps(&shifted) {
            faces.push(face);
        }
    }
    Ok(SimplicialComplex::from_faces(faces))
}

/// Nonzero multigraded Betti numbers of `R/I`, keyed by homological index
/// and multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> {
        self.entries.iter().map(|((i, a), &b)| (*i, a, b))
    }

    /// Total Betti numbers `β_0, β_1, ..., β_pd`.
    pub fn totals(&self) -> Vec<u64> {
        let top = self.projective_dimension();
        let mut out = vec![0u64; top + 1];
        for ((i, _), b) in &self.entries {
            out[*i] += b;
        }
        out
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `Σ (-1)^i β_i`.
    pub fn alternating_sum(&self) -> i64 {
        self.totals()
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// `β_{i,a}(R/I)` for one multidegree, `i ≥ 1`, as a list indexed by `i`.
fn betti_at(ideal: &MonomialIdeal, a: &Monomial) -> Result<Vec<(usize, u64)>> {
    let complex = koszul_complex(ideal, a.exponents())?;
    Ok(complex
        .reduced_betti()
        .into_iter()
        .enumerate()
        .filter(|(_, b)| *b > 0)
        // index k holds H̃_{k-1}, which is β_{k+1}
        .map(|(k, b)| (k + 1, b as u64))
        .collect())
}

pub fn betti_numbers(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_numbers_with_cap(ideal, DEFAULT_LATTICE_CAP)
}

pub fn betti_numbers_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<BettiTable> {
    let lattice = lcm_lattice_with_cap(ideal, cap)?;
    let per_degree: Vec<(Monomial, Vec<(usize, u64)>)> = lattice
        .elements
        .par_iter()
        .map(|a| Ok((a.clone(), betti_at(ideal, a)?)))
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    entries.insert((0, Monomial::one(ideal.nvars())), 1);
    for (a, bettis) in per_degree {
        for (i, b) in bettis {
            entries.insert((i, a.clone()), b);
        }
    }
    Ok(BettiTable { entries })
}

pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_proper_nonzero()?;
    Ok(betti_numbers(ideal)?.projective_dimension())
}

/// `depth R/I = n - pd(R/I)`.
///
/// Variables outside the support add one each to the depth; the Betti
/// numbers do not see them, so `n - pd` already counts them.
pub fn depth_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    depth_quotient_with_cap(ideal, DEFAULT_LATTICE_CAP)
}

pub fn depth_quotient_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<usize> {
    ideal.require_proper_nonzero()?;
    let pd = betti_numbers_with_cap(ideal, cap)?.projective_dimension();
    Ok(ideal.nvars() - pd)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthFunction {
    /// `depth R/I^k` for `k = 1, 2, ...` as far as computed.
    pub depths: Vec<usize>,
    /// Every `k` with `depth R/I^k < depth R/I^{k+1}`.
    pub increases: Vec<u32>,
    /// The first power whose lcm lattice exceeded the cap, if any.
    pub truncated_at: Option<u32>,
}

pub fn depth_function(ideal: &MonomialIdeal, kmax: u32) -> Result<DepthFunction> {
    depth_function_with_cap(ideal, kmax, DEFAULT_LATTICE_CAP)
}

pub fn depth_function_with_cap(ideal: &MonomialIdeal, kmax: u32, cap: usize) -> Result<DepthFunction> {
    ideal.require_proper_nonzero()?;
    if kmax == 0 {
        return Err(Error::Precondition("kmax must be at least 1".into()));
    }
    let mut depths = Vec::new();
    let mut truncated_at = None;
    let mut power = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            power = power.multiply(ideal)?;
        }
        match depth_quotient_with_cap(&power, cap) {
            Ok(d) => depths.push(d),
            Err(Error::LatticeCap { .. }) => {
                truncated_at = Some(k);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let increases = depths
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1])
        .map(|(i, _)| i as u32 + 1)
        .collect();
    Ok(DepthFunction {
        depths,
        increases,
        truncated_at,
    })
}

//! Integral closure of monomial ideals through the Newton polyhedron.
//!
//! `x^a` is integral over `I` exactly when `a` lies in
//! `conv(exponents of generators) + ℝ^n_{≥0}`. Membership is decided by the
//! exact rational simplex in [`crate::lp`].

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::convex_combination_below;
use crate::monomial::Monomial;
use crate::Rational;

/// The Newton polyhedron of a nonzero monomial ideal.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    vertices: Vec<Vec<u32>>,
}

impl NewtonPolyhedron {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(NewtonPolyhedron {
            vertices: ideal.generators().iter().map(|g| g.exponents().to_vec()).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    /// Convex weights on the generators witnessing `a ∈ NP`, if any.
    pub fn certificate(&self, a: &[u32]) -> Result<Option<Vec<Rational>>> {
        if a.len() != self.dim() {
            return Err(Error::ArityMismatch {
                expected: self.dim(),
                found: a.len(),
            });
        }
        // A generator using a variable where `a` has exponent 0 must get
        // weight 0, so only generators supported inside supp(a) take part.
        let usable: Vec<usize> = (0..self.vertices.len())
            .filter(|&j| self.vertices[j].iter().zip(a).all(|(&g, &x)| x > 0 || g == 0))
            .collect();
        if usable.is_empty() {
            return Ok(None);
        }
        let rows: Vec<usize> = (0..a.len()).filter(|&i| a[i] > 0).collect();
        let to_q = |x: u32| Rational::from_integer(BigInt::from(x));
        let points: Vec<Vec<Rational>> = usable
            .iter()
            .map(|&j| rows.iter().map(|&i| to_q(self.vertices[j][i])).collect())
            .collect();
        let target: Vec<Rational> = rows.iter().map(|&i| to_q(a[i])).collect();
        Ok(convex_combination_below(&points, &target).map(|weights| {
            let mut full = vec![Rational::zero(); self.vertices.len()];
            for (w, &j) in weights.into_iter().zip(&usable) {
                full[j] = w;
            }
            full
        }))
    }

    pub fn contains(&self, a: &[u32]) -> Result<bool> {
        Ok(self.certificate(a)?.is_some())
    }
}

/// `a ∈ NP(I)`, decided by exact LP feasibility.
pub fn np_contains(ideal: &MonomialIdeal, a: &[u32]) -> Result<bool> {
    NewtonPolyhedron::new(ideal)?.contains(a)
}

/// Every exponent vector in the box `0 ≤ a ≤ bound`, by total degree.
fn box_points(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out.sort_by_key(|p| p.iter().map(|&x| u64::from(x)).sum::<u64>());
    out
}

/// `Ī`, generated by the lattice points of the Newton polyhedron inside the
/// box `0 ≤ a ≤ M` (`M` the componentwise maximum of generator exponents).
///
/// Minimal generators of `Ī` lie in that box: if `a_i > M_i` then every
/// generator has `g_i ≤ a_i - 1`, so `a - e_i` is still in the polyhedron.
/// Points are visited by total degree; a point with a predecessor
/// `a - e_i` already inside is inside too, points in `I` are inside
/// trivially, and points outside `√I` are outside, so the LP only runs on
/// the remaining candidates.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let np = NewtonPolyhedron::new(ideal)?;
    let radical = ideal.radical();
    let bound = ideal.max_exponents();
    let mut inside: HashSet<Vec<u32>> = HashSet::new();
    let mut gens = Vec::new();
    for a in box_points(&bound) {
        let has_inside_predecessor = (0..a.len()).any(|i| {
            a[i] > 0 && {
                let mut p = a.clone();
                p[i] -= 1;
                inside.contains(&p)
            }
        });
        let is_in = if has_inside_predecessor {
            true
        } else if ideal.contains_exps(&a) {
            gens.push(Monomial::new(a.clone()));
            true
        } else if !radical.contains_exps(&a) {
            false
        } else if np.contains(&a)? {
            gens.push(Monomial::new(a.clone()));
            true
        } else {
            false
        };
        if is_in {
            inside.insert(a);
        }
    }
    MonomialIdeal::minimalize(ideal.ring().clone(), gens)
}

pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    integral_closure(ideal)?.equals(ideal)
}

/// Least `k ≤ kmax` with `Ī^k ≠ I^k` (closure of the power), if any.
pub fn is_normal_up_to(ideal: &MonomialIdeal, kmax: u32) -> Result<Option<u32>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if kmax == 0 {
        return Err(Error::Precondition("kmax must be at least 1".into()));
    }
    for (k, power) in (1..=kmax).zip(ideal.powers(kmax)?) {
        if !is_integrally_closed(&power)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The integral closure of `I^k`, with the unit ideal for `k = 0`.
pub fn closure_of_power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        return Ok(MonomialIdeal::unit(ideal.ring().clone()));
    }
    integral_closure(&ideal.power(k)?)
}

/// Checks `(cl(I^n) : cl(I^m)) = (cl(I^n) : I^m) = cl(I^{n-m})` for
/// `n ≥ m ≥ 1`, where `cl` is the integral closure.
pub fn closure_colon_identity(ideal: &MonomialIdeal, n: u32, m: u32) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    if m == 0 || n < m {
        return Err(Error::Precondition(format!("need n ≥ m ≥ 1, got n = {n}, m = {m}")));
    }
    let closed_n = closure_of_power(ideal, n)?;
    let closed_m = closure_of_power(ideal, m)?;
    let closed_diff = closure_of_power(ideal, n - m)?;
    let plain_m = ideal.power(m)?;
    let by_closed = closed_n.colon_ideal(&closed_m)?;
    let by_plain = closed_n.colon_ideal(&plain_m)?;
    Ok(by_closed.equals(&closed_diff)? && by_plain.equals(&closed_diff)?)
}

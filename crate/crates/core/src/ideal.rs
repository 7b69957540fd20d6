//! Monomial ideals in canonical form and their basic arithmetic.
//!
//! Every `MonomialIdeal` stores its minimal generating set sorted in the
//! canonical monomial order, so two ideals are equal exactly when their
//! generator lists coincide. The zero ideal has no generators and the unit
//! ideal has the single generator `1`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Ring};

/// Candidate counts above this are deduplicated and multiplied in parallel.
const PARALLEL_THRESHOLD: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<Monomial>,
}

fn check_arity(ring: &Ring, m: &Monomial) -> Result<()> {
    if m.nvars() != ring.nvars() {
        return Err(Error::ArityMismatch {
            expected: ring.nvars(),
            found: m.nvars(),
        });
    }
    Ok(())
}

/// Removes duplicates and non-minimal elements, returning the survivors in
/// canonical order.
fn minimal_elements(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    if cands.len() > PARALLEL_THRESHOLD {
        cands.par_sort_unstable();
    } else {
        cands.sort_unstable();
    }
    cands.dedup();
    // A proper divisor always has strictly smaller degree, hence sorts earlier.
    let mut kept: Vec<Monomial> = Vec::new();
    for c in cands {
        if !kept.iter().any(|k| k.divides(&c)) {
            kept.push(c);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalized and sorted.
    pub fn minimalize(ring: Arc<Ring>, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            check_arity(&ring, g)?;
        }
        Ok(MonomialIdeal {
            gens: minimal_elements(gens),
            ring,
        })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(ring: Arc<Ring>, gens: &[&[u32]]) -> Result<Self> {
        Self::minimalize(ring, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<Ring>) -> Self {
        let n = ring.nvars();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: Arc<Ring>) -> Self {
        let n = ring.nvars();
        MonomialIdeal {
            ring,
            gens: (0..n).map(|i| Monomial::var(n, i)).collect(),
        }
    }

    /// The prime generated by the listed variables.
    pub fn prime(ring: Arc<Ring>, vars: &[usize]) -> Result<Self> {
        let n = ring.nvars();
        if let Some(&v) = vars.iter().find(|&&v| v >= n) {
            return Err(Error::VariableOutOfRange(v));
        }
        Self::minimalize(ring, vars.iter().map(|&v| Monomial::var(n, v)))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        check_arity(&self.ring, m)?;
        Ok(self.contains_unchecked(m))
    }

    /// Membership without the arity check; for hot loops over monomials
    /// already known to live in this ring.
    pub fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub(crate) fn contains_exps(&self, a: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exponents().iter().zip(a).all(|(x, y)| x <= y))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Equality of ideals; errors on a ring mismatch instead of returning false.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens == other.gens)
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_elements(self.gens.iter().chain(other.gens.iter()).cloned().collect()),
        })
    }

    /// `I + (m)`.
    pub fn add_generator(&self, m: Monomial) -> Result<MonomialIdeal> {
        check_arity(&self.ring, &m)?;
        if self.contains_unchecked(&m) {
            return Ok(self.clone());
        }
        let mut gens: Vec<Monomial> = self.gens.iter().filter(|g| !m.divides(g)).cloned().collect();
        let pos = gens.binary_search(&m).unwrap_err();
        gens.insert(pos, m);
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// `I * J`: minimalized pairwise generator products.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let products: Vec<Monomial> = if self.gens.len() * other.gens.len() > PARALLEL_THRESHOLD {
            self.gens
                .par_iter()
                .flat_map_iter(|a| other.gens.iter().map(move |b| a.checked_mul(b)))
                .collect::<Result<_>>()?
        } else {
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| a.checked_mul(b)))
                .collect::<Result<_>>()?
        };
        let products: HashSet<Monomial> = products.into_iter().collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_elements(products.into_iter().collect()),
        })
    }

    /// `I^k` for `k ≥ 1`, by iterated products with minimalization after
    /// each step.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// All powers `I^1, ..., I^kmax`.
    pub fn powers(&self, kmax: u32) -> Result<Vec<MonomialIdeal>> {
        if kmax == 0 {
            return Err(Error::ZeroPower);
        }
        let mut out = vec![self.clone()];
        for _ in 1..kmax {
            let next = out.last().expect("non-empty").multiply(self)?;
            out.push(next);
        }
        Ok(out)
    }

    /// `(I : w)`, generated by `g / gcd(g, w)`.
    pub fn colon_monomial(&self, w: &Monomial) -> Result<MonomialIdeal> {
        check_arity(&self.ring, w)?;
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_elements(self.gens.iter().map(|g| g.quotient_by_gcd(w)).collect()),
        })
    }

    /// `(I : J)`, the intersection of `(I : g)` over generators `g` of `J`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut iter = other.gens.iter();
        let first = iter.next().expect("nonzero divisor");
        let mut acc = self.colon_monomial(first)?;
        for g in iter {
            if acc.is_zero() {
                break;
            }
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` via pairwise lcms.
    ///
    /// Generators of one ideal that already lie in the other are kept
    /// as-is; only the remaining pairs need an lcm.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let (a_in, a_out): (Vec<&Monomial>, Vec<&Monomial>) =
            self.gens.iter().partition(|g| other.contains_unchecked(g));
        let (b_in, b_out): (Vec<&Monomial>, Vec<&Monomial>) =
            other.gens.iter().partition(|g| self.contains_unchecked(g));
        let mut cands: Vec<Monomial> = a_in.into_iter().chain(b_in).cloned().collect();
        if a_out.len() * b_out.len() > PARALLEL_THRESHOLD {
            let lcms: HashSet<Monomial> = a_out
                .par_iter()
                .flat_map_iter(|a| b_out.iter().map(move |b| a.lcm(b)))
                .collect();
            cands.extend(lcms);
        } else {
            let lcms: HashSet<Monomial> = a_out
                .iter()
                .flat_map(|a| b_out.iter().map(move |b| a.lcm(b)))
                .collect();
            cands.extend(lcms);
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_elements(cands),
        })
    }

    /// Intersection of a non-empty family of ideals in a common ring.
    pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a MonomialIdeal>) -> Result<MonomialIdeal> {
        let mut iter = ideals.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::Precondition("intersection of an empty family".into()))?;
        let mut acc = first.clone();
        for ideal in iter {
            acc = acc.intersect(ideal)?;
        }
        Ok(acc)
    }

    /// `√I`: square-free parts of the generators, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_elements(self.gens.iter().map(Monomial::squarefree_part).collect()),
        }
    }

    /// Indices of the variables dividing some generator, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars()];
        for g in &self.gens {
            for (i, &e) in g.exponents().iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i)
            .collect()
    }

    /// Maximum total degree of a minimal generator; 0 for the zero ideal.
    pub fn degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Same generators read in another ring with the same number of
    /// variables.
    pub fn with_ring(&self, ring: Arc<Ring>) -> Result<MonomialIdeal> {
        if ring.nvars() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                found: self.nvars(),
            });
        }
        Ok(MonomialIdeal {
            ring,
            gens: self.gens.clone(),
        })
    }

    pub fn fmt_generator(&self, m: &Monomial) -> String {
        self.ring.fmt_monomial(m)
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.fmt_monomial(g)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MonomialIdeal", 2)?;
        st.serialize_field("vars", self.ring().names())?;
        st.serialize_field("generators", &self.generator_strings())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Arc<Ring> {
        Ring::new(["x", "y"]).unwrap()
    }

    fn ideal(ring: &Arc<Ring>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(ring.clone(), gens).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let r = ring2();
        let i = ideal(&r, &[&[2, 0], &[2, 1], &[1, 1]]);
        assert_eq!(i, ideal(&r, &[&[2, 0], &[1, 1]]));
        assert_eq!(i.len(), 2);
        let j = ideal(&r, &[&[1, 0], &[0, 1], &[1, 0]]);
        assert_eq!(j.generators(), &[Monomial::new(vec![1, 0]), Monomial::new(vec![0, 1])]);
        let z = MonomialIdeal::minimalize(r.clone(), Vec::new()).unwrap();
        assert!(z.is_zero());
        assert_eq!(z, MonomialIdeal::zero(r));
    }

    #[test]
    fn minimalize_rejects_arity_mismatch() {
        let r = ring2();
        let err = MonomialIdeal::minimalize(r, vec![Monomial::new(vec![1, 0, 0])]).unwrap_err();
        assert_eq!(err, Error::ArityMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn power_examples() {
        let r = ring2();
        let m = MonomialIdeal::maximal(r.clone());
        assert_eq!(m.power(2).unwrap(), ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(MonomialIdeal::zero(r.clone()).power(3).unwrap().is_zero());
        assert_eq!(m.power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = MonomialIdeal::maximal(ring2());
        let b = MonomialIdeal::maximal(Ring::new(["u", "v"]).unwrap());
        assert_eq!(a.multiply(&b), Err(Error::RingMismatch));
        assert_eq!(a.intersect(&b), Err(Error::RingMismatch));
        assert_eq!(a.equals(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn colon_monomial_examples() {
        let r = ring2();
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let x = Monomial::new(vec![1, 0]);
        assert_eq!(i.colon_monomial(&x).unwrap(), MonomialIdeal::maximal(r.clone()));
        let x3 = ideal(&r, &[&[3, 0]]);
        assert_eq!(x3.colon_monomial(&x).unwrap(), ideal(&r, &[&[2, 0]]));
        assert_eq!(i.colon_monomial(&Monomial::one(2)).unwrap(), i);
    }

    #[test]
    fn colon_ideal_examples() {
        let r = ring2();
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let x = ideal(&r, &[&[1, 0]]);
        assert_eq!(i.colon_ideal(&x).unwrap(), MonomialIdeal::maximal(r.clone()));
        assert!(i.colon_ideal(&i).unwrap().is_unit());
        assert_eq!(i.colon_ideal(&MonomialIdeal::zero(r)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn intersect_examples() {
        let r = ring2();
        let x = ideal(&r, &[&[1, 0]]);
        let y = ideal(&r, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(&r, &[&[1, 1]]));
        let j = ideal(&r, &[&[2, 0], &[0, 1]]);
        assert_eq!(x.intersect(&j).unwrap(), ideal(&r, &[&[2, 0], &[1, 1]]));
        let u = MonomialIdeal::unit(r.clone());
        assert_eq!(j.intersect(&u).unwrap(), j);
        assert!(j.intersect(&MonomialIdeal::zero(r)).unwrap().is_zero());
    }

    #[test]
    fn membership_and_equality_examples() {
        let r = ring2();
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&Monomial::new(vec![2, 1])).unwrap());
        assert!(!i.contains(&Monomial::new(vec![1, 0])).unwrap());
        let m2 = MonomialIdeal::maximal(r.clone()).power(2).unwrap();
        assert!(m2.equals(&ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap());
        assert!(i.is_subset(&m2).unwrap());
        assert!(!m2.is_subset(&i).unwrap());
    }

    #[test]
    fn radical_support_degree_examples() {
        let r = ring2();
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.radical(), ideal(&r, &[&[1, 0]]));
        let r3 = Ring::indexed(3).unwrap();
        let j = ideal(&r3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(j.degree(), 2);
        assert_eq!(j.support(), vec![0, 1, 2]);
        let z = MonomialIdeal::zero(r3);
        assert!(z.radical().is_zero());
        assert!(z.support().is_empty());
        assert_eq!(z.degree(), 0);
    }

    #[test]
    fn add_generator_matches_sum() {
        let r = ring2();
        let i = ideal(&r, &[&[3, 0], &[1, 2], &[0, 4]]);
        let m = Monomial::new(vec![1, 1]);
        let via_sum = i.sum(&MonomialIdeal::minimalize(r, vec![m.clone()]).unwrap()).unwrap();
        assert_eq!(i.add_generator(m).unwrap(), via_sum);
    }
}

//! Irreducible decomposition, associated primes and Alexander duality.
//!
//! Associated primes are computed two independent ways. The decomposition
//! route reads them off the radicals of the irredundant irreducible
//! components. The witness route localizes at every variable subset `S` of
//! the support and asks whether the maximal ideal of the localized ring is
//! of the form `(I_S : w)` for a monomial `w`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring};

/// The monomial prime generated by a non-empty set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: Arc<Ring>,
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(ring: Arc<Ring>, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vars: BTreeSet<usize> = vars.into_iter().collect();
        if vars.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&v) = vars.iter().find(|&&v| v >= ring.nvars()) {
            return Err(Error::VariableOutOfRange(v));
        }
        Ok(MonomialPrime {
            ring,
            vars: vars.into_iter().collect(),
        })
    }

    pub fn maximal(ring: Arc<Ring>) -> Self {
        let n = ring.nvars();
        MonomialPrime {
            ring,
            vars: (0..n).collect(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Variable indices, ascending.
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn is_maximal(&self) -> bool {
        self.vars.len() == self.ring.nvars()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::prime(self.ring.clone(), &self.vars).expect("indices validated")
    }

    pub fn var_names(&self) -> Vec<String> {
        self.vars.iter().map(|&v| self.ring.name(v).to_string()).collect()
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.var_names().join(", "))
    }
}

impl Serialize for MonomialPrime {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.var_names().serialize(s)
    }
}

/// An irreducible monomial ideal `(x_i^{a_i} : a_i > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ring: Arc<Ring>,
    powers: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(ring: Arc<Ring>, powers: Vec<u32>) -> Result<Self> {
        if powers.len() != ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                found: powers.len(),
            });
        }
        if powers.iter().all(|&p| p == 0) {
            return Err(Error::Precondition("irreducible component needs a positive power".into()));
        }
        Ok(IrreducibleComponent { ring, powers })
    }

    /// Reads off a component from an ideal generated by pure powers.
    fn from_pure_powers(ideal: &MonomialIdeal) -> Self {
        let mut powers = vec![0; ideal.nvars()];
        for g in ideal.generators() {
            let i = g.pure_power_var().expect("pure power generator");
            powers[i] = g.exponents()[i];
        }
        IrreducibleComponent {
            ring: ideal.ring().clone(),
            powers,
        }
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        MonomialIdeal::minimalize(
            self.ring.clone(),
            self.powers
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| Monomial::pure_power(n, i, p)),
        )
        .expect("arity matches")
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime {
            ring: self.ring.clone(),
            vars: self
                .powers
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, _)| i)
                .collect(),
        }
    }

    /// `other ⊆ self`, i.e. every generator of `other` lies in `self`.
    pub fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        // Q_b ⊆ Q_a iff every x_i^{b_i} is divisible by x_i^{a_i}, with a_i > 0.
        other
            .powers
            .iter()
            .zip(&self.powers)
            .all(|(&b, &a)| b == 0 || (a > 0 && a <= b))
    }

    fn contained_in_ideal(&self, ideal: &MonomialIdeal) -> bool {
        let n = self.ring.nvars();
        self.powers
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .all(|(i, &p)| ideal.contains_unchecked(&Monomial::pure_power(n, i, p)))
    }

    fn sort_key(&self) -> (usize, Vec<u32>) {
        (self.powers.iter().filter(|&&p| p > 0).count(), self.powers.clone())
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal())
    }
}

impl Serialize for IrreducibleComponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_ideal().generator_strings().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssMethod {
    WitnessSearch,
    Decomposition,
}

impl fmt::Display for AssMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssMethod::WitnessSearch => write!(f, "witness-search"),
            AssMethod::Decomposition => write!(f, "decomposition"),
        }
    }
}

/// Associated primes of `R/I`, in canonical order (height, then indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssReport {
    pub ideal: MonomialIdeal,
    pub primes: Vec<MonomialPrime>,
    pub method: AssMethod,
}

impl AssReport {
    pub fn contains_maximal(&self) -> bool {
        self.primes.iter().any(MonomialPrime::is_maximal)
    }

    pub fn is_subset_of(&self, other: &AssReport) -> bool {
        self.primes.iter().all(|p| other.primes.contains(p))
    }

    /// Inclusion-minimal associated primes.
    pub fn minimal_primes(&self) -> Vec<MonomialPrime> {
        self.primes
            .iter()
            .filter(|p| {
                !self
                    .primes
                    .iter()
                    .any(|q| q != *p && q.vars.iter().all(|v| p.vars.contains(v)))
            })
            .cloned()
            .collect()
    }
}

/// Irredundant irreducible decomposition by recursive generator splitting.
///
/// A generator `x^a` with at least two variables splits the ideal as
/// `(I + x_i^{a_i}) ∩ (I + x^a / x_i^{a_i})`; leaves generated by pure
/// powers are irreducible. A branch that already contains a component found
/// earlier cannot contribute a minimal component and is skipped. The
/// irredundant components are the inclusion-minimal leaves.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.require_proper_nonzero()?;
    let mut found: Vec<IrreducibleComponent> = Vec::new();
    let mut visited: HashSet<MonomialIdeal> = HashSet::new();
    let mut stack = vec![ideal.clone()];
    while let Some(current) = stack.pop() {
        if !visited.insert(current.clone()) {
            continue;
        }
        if found.iter().any(|q| q.contained_in_ideal(&current)) {
            continue;
        }
        let split = current
            .generators()
            .iter()
            .find(|g| g.pure_power_var().is_none())
            .cloned();
        match split {
            None => found.push(IrreducibleComponent::from_pure_powers(&current)),
            Some(g) => {
                let n = current.nvars();
                let i = pick_split_variable(&current, &g);
                let u = Monomial::pure_power(n, i, g.exponents()[i]);
                let v = g.checked_div(&u).expect("u divides g");
                // Explore the pure-power branch first: it tends to close quickly.
                stack.push(current.add_generator(v)?);
                stack.push(current.add_generator(u)?);
            }
        }
    }
    Ok(minimal_components(found))
}

/// The variable of `g` that occurs in the most generators; ties go to the
/// lowest index.
fn pick_split_variable(ideal: &MonomialIdeal, g: &Monomial) -> usize {
    let support = g.support();
    let mut best = support[0];
    let mut best_count = 0;
    for &i in &support {
        let count = ideal.generators().iter().filter(|h| h.exponents()[i] > 0).count();
        if count > best_count {
            best = i;
            best_count = count;
        }
    }
    best
}

fn minimal_components(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort_by_key(IrreducibleComponent::sort_key);
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && c.contains_component(d))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect()
}

fn sorted_primes(primes: impl IntoIterator<Item = MonomialPrime>) -> Vec<MonomialPrime> {
    let set: BTreeSet<MonomialPrime> = primes.into_iter().collect();
    set.into_iter().collect()
}

/// `Ass(R/I)` as the radicals of the irreducible components.
pub fn associated_primes_decomp(ideal: &MonomialIdeal) -> Result<AssReport> {
    let comps = irreducible_decomposition(ideal)?;
    Ok(AssReport {
        ideal: ideal.clone(),
        primes: sorted_primes(comps.iter().map(IrreducibleComponent::radical)),
        method: AssMethod::Decomposition,
    })
}

/// Sets every variable outside `vars` to 1 and reads the result in the
/// subring on `vars`.
pub fn localize(ideal: &MonomialIdeal, vars: &[usize]) -> Result<MonomialIdeal> {
    let mut vars: Vec<usize> = vars.to_vec();
    vars.sort_unstable();
    vars.dedup();
    let sub = ideal.ring().subring(&vars)?;
    if vars.len() == ideal.nvars() {
        return ideal.with_ring(sub);
    }
    MonomialIdeal::minimalize(sub, ideal.generators().iter().map(|g| g.restrict(&vars)))
}

/// Searches for `w ∉ I` with `(I : w)` equal to the maximal ideal.
///
/// Any such `w` satisfies `w_i ≤ M_i - 1` where `M_i` is the largest
/// exponent of `x_i` among the minimal generators: otherwise `x_i w ∈ I`
/// would force `w ∈ I`. The search walks that box depth-first, pruning a
/// prefix when its smallest completion already lies in `I` or when some
/// fixed coordinate can no longer satisfy `x_i w ∈ I` even at the largest
/// completion. Returns the first witness in lexicographic order.
pub fn maximal_ideal_witness(ideal: &MonomialIdeal) -> Result<Option<Monomial>> {
    ideal.require_proper_nonzero()?;
    let bound = ideal.max_exponents();
    if bound.contains(&0) {
        return Ok(None);
    }
    let upper: Vec<u32> = bound.iter().map(|b| b - 1).collect();
    let mut w = vec![0u32; ideal.nvars()];
    Ok(witness_dfs(ideal, &upper, &mut w, 0).map(Monomial::new))
}

pub fn maximal_ideal_associated(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(maximal_ideal_witness(ideal)?.is_some())
}

fn times_var_in(ideal: &MonomialIdeal, w: &mut [u32], i: usize) -> bool {
    w[i] += 1;
    let inside = ideal.contains_exps(w);
    w[i] -= 1;
    inside
}

fn witness_dfs(ideal: &MonomialIdeal, upper: &[u32], w: &mut Vec<u32>, depth: usize) -> Option<Vec<u32>> {
    let n = w.len();
    if depth == n {
        let ok = !ideal.contains_exps(w) && (0..n).all(|i| times_var_in(ideal, w, i));
        return ok.then(|| w.clone());
    }
    for v in 0..=upper[depth] {
        w[depth] = v;
        for x in w.iter_mut().skip(depth + 1) {
            *x = 0;
        }
        if ideal.contains_exps(w) {
            // larger values of this coordinate stay inside I
            break;
        }
        let mut hi = w.clone();
        hi[(depth + 1)..].copy_from_slice(&upper[(depth + 1)..]);
        if !(0..=depth).all(|i| times_var_in(ideal, &mut hi, i)) {
            continue;
        }
        if let Some(found) = witness_dfs(ideal, upper, w, depth + 1) {
            return Some(found);
        }
    }
    w[depth] = 0;
    None
}

/// All non-empty subsets of `support`, as sorted index vectors.
fn nonempty_subsets(support: &[usize]) -> Vec<Vec<usize>> {
    let s = support.len();
    (1u64..(1u64 << s))
        .map(|mask| {
            (0..s)
                .filter(|b| mask & (1u64 << b) != 0)
                .map(|b| support[b])
                .collect()
        })
        .collect()
}

/// `Ass(R/I)` by witness search on every localization.
pub fn associated_primes_witness(ideal: &MonomialIdeal) -> Result<AssReport> {
    ideal.require_proper_nonzero()?;
    let support = ideal.support();
    if support.len() > 24 {
        return Err(Error::TooManyVariables {
            found: support.len(),
            limit: 24,
        });
    }
    let subsets = nonempty_subsets(&support);
    let hits: Vec<Option<Vec<usize>>> = subsets
        .into_par_iter()
        .map(|s| {
            let local = localize(ideal, &s)?;
            if !local.is_proper_nonzero() {
                return Ok(None);
            }
            Ok(maximal_ideal_associated(&local)?.then_some(s))
        })
        .collect::<Result<_>>()?;
    let primes = hits
        .into_iter()
        .flatten()
        .map(|s| MonomialPrime::new(ideal.ring().clone(), s))
        .collect::<Result<Vec<_>>>()?;
    Ok(AssReport {
        ideal: ideal.clone(),
        primes: sorted_primes(primes),
        method: AssMethod::WitnessSearch,
    })
}

pub fn associated_primes(ideal: &MonomialIdeal, method: AssMethod) -> Result<AssReport> {
    match method {
        AssMethod::WitnessSearch => associated_primes_witness(ideal),
        AssMethod::Decomposition => associated_primes_decomp(ideal),
    }
}

/// Minimal transversals of a hypergraph whose edges are variable bitmasks,
/// by incremental Berge expansion.
pub fn minimal_transversals(edges: &[u128]) -> Vec<u128> {
    let mut transversals: Vec<u128> = vec![0];
    for &edge in edges {
        let mut next: Vec<u128> = Vec::new();
        for &t in &transversals {
            if t & edge != 0 {
                next.push(t);
            } else {
                for b in 0..128 {
                    if edge & (1u128 << b) != 0 {
                        next.push(t | (1u128 << b));
                    }
                }
            }
        }
        next.sort_by_key(|t| (t.count_ones(), *t));
        next.dedup();
        let mut kept: Vec<u128> = Vec::new();
        for t in next {
            if !kept.iter().any(|k| k & t == *k) {
                kept.push(t);
            }
        }
        transversals = kept;
    }
    transversals
}

/// The Alexander dual `I^∨ = ∩ (x_j : x_j | u)` over generators `u` of a
/// square-free ideal, computed as the minimal transversals of the
/// generator supports.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.require_proper_nonzero()?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    let n = ideal.nvars();
    if n > 128 {
        return Err(Error::TooManyVariables { found: n, limit: 128 });
    }
    let edges: Vec<u128> = ideal
        .generators()
        .iter()
        .map(|g| g.support().into_iter().fold(0u128, |m, i| m | (1u128 << i)))
        .collect();
    let gens = minimal_transversals(&edges)
        .into_iter()
        .map(|t| Monomial::from_support(n, (0..n).filter(|&i| t & (1u128 << i) != 0)));
    MonomialIdeal::minimalize(ideal.ring().clone(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::indexed(n).unwrap()
    }

    fn ideal(r: &Arc<Ring>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r.clone(), gens).unwrap()
    }

    fn prime(r: &Arc<Ring>, vars: &[usize]) -> MonomialPrime {
        MonomialPrime::new(r.clone(), vars.iter().copied()).unwrap()
    }

    #[test]
    fn decomposition_of_x2_xy() {
        let r = ring(2);
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let comps = irreducible_decomposition(&i).unwrap();
        let ideals: Vec<MonomialIdeal> = comps.iter().map(IrreducibleComponent::to_ideal).collect();
        assert_eq!(ideals.len(), 2);
        assert!(ideals.contains(&ideal(&r, &[&[1, 0]])));
        assert!(ideals.contains(&ideal(&r, &[&[2, 0], &[0, 1]])));
        assert_eq!(MonomialIdeal::intersect_all(&ideals).unwrap(), i);
    }

    #[test]
    fn pure_power_is_irreducible() {
        let r = ring(2);
        let i = ideal(&r, &[&[3, 0]]);
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].to_ideal(), i);
    }

    #[test]
    fn decomposition_rejects_trivial_ideals() {
        let r = ring(2);
        assert_eq!(irreducible_decomposition(&MonomialIdeal::zero(r.clone())), Err(Error::ZeroIdeal));
        assert_eq!(irreducible_decomposition(&MonomialIdeal::unit(r)), Err(Error::UnitIdeal));
    }

    #[test]
    fn ass_small_examples() {
        let r = ring(2);
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let expected = vec![prime(&r, &[0]), prime(&r, &[0, 1])];
        assert_eq!(associated_primes_decomp(&i).unwrap().primes, expected);
        assert_eq!(associated_primes_witness(&i).unwrap().primes, expected);
        let xy = ideal(&r, &[&[1, 1]]);
        let expected = vec![prime(&r, &[0]), prime(&r, &[1])];
        assert_eq!(associated_primes_decomp(&xy).unwrap().primes, expected);
        assert_eq!(associated_primes_witness(&xy).unwrap().primes, expected);
        let x = ideal(&r, &[&[1, 0]]);
        assert_eq!(associated_primes_witness(&x).unwrap().primes, vec![prime(&r, &[0])]);
    }

    #[test]
    fn localize_examples() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = ideal(&r, &[&[2, 0, 0], &[1, 1, 0]]);
        let l = localize(&i, &[0]).unwrap();
        assert_eq!(l.ring().names(), ["x"]);
        assert_eq!(l.generator_strings(), vec!["x"]);
        assert_eq!(localize(&i, &[0, 1, 2]).unwrap(), i);
        let tri = ideal(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let l = localize(&tri, &[0, 1]).unwrap();
        assert_eq!(l.generator_strings(), vec!["x", "y"]);
        assert_eq!(localize(&tri, &[]), Err(Error::EmptySubset));
    }

    #[test]
    fn witness_examples() {
        let r = ring(2);
        let m2 = MonomialIdeal::maximal(r.clone()).power(2).unwrap();
        // xy lies in the ideal itself; the first witness in the box is y
        let w = maximal_ideal_witness(&m2).unwrap().unwrap();
        assert_eq!(w, Monomial::new(vec![0, 1]));
        assert_eq!(m2.colon_monomial(&w).unwrap(), MonomialIdeal::maximal(r.clone()));
        let xy = ideal(&r, &[&[1, 1]]);
        assert!(!maximal_ideal_associated(&xy).unwrap());
    }

    #[test]
    fn alexander_dual_examples() {
        let r = ring(3);
        let edge = ideal(&r, &[&[1, 1, 0]]);
        assert_eq!(alexander_dual(&edge).unwrap(), ideal(&r, &[&[1, 0, 0], &[0, 1, 0]]));
        let tri = ideal(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(alexander_dual(&tri).unwrap(), tri);
        let sq = ideal(&r, &[&[2, 0, 0]]);
        assert_eq!(alexander_dual(&sq), Err(Error::NotSquareFree));
    }

    #[test]
    fn minimal_primes_of_report() {
        let r = ring(2);
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let rep = associated_primes_witness(&i).unwrap();
        assert_eq!(rep.minimal_primes(), vec![prime(&r, &[0])]);
        assert!(rep.contains_maximal());
    }
}

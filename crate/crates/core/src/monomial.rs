//! Monomials as exponent vectors and the rings they live in.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Exponent storage type.
pub type Exp = u32;

/// A polynomial ring `K[x_1, ..., x_n]`, identified by its variable names.
///
/// The coefficient field never appears: every computation here is on
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Ring>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable name {name}")));
            }
        }
        Ok(Arc::new(Ring { names }))
    }

    /// The ring with variables `x1, ..., xn`.
    pub fn indexed(n: usize) -> Result<Arc<Ring>> {
        Ring::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The subring on the given variable indices (kept in increasing order).
    pub fn subring(&self, vars: &[usize]) -> Result<Arc<Ring>> {
        if vars.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut names = Vec::with_capacity(vars.len());
        for &v in vars {
            if v >= self.nvars() {
                return Err(Error::VariableOutOfRange(v));
            }
            names.push(self.names[v].clone());
        }
        Ring::new(names)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
///
/// Ordering is the canonical generator order: total degree first, then
/// exponent vectors compared lexicographically with larger leading
/// exponents first, so `x^2 < x*y < y^2` in two variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[Exp]>,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[Exp]>>) -> Self {
        Monomial { exps: exps.into() }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n].into() }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps: exps.into() }
    }

    /// `x_i^e`.
    pub fn pure_power(n: usize, i: usize, e: Exp) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps: exps.into() }
    }

    /// Square-free monomial on the given variables.
    pub fn from_support(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; n];
        for v in vars {
            exps[v] = 1;
        }
        Monomial { exps: exps.into() }
    }

    pub fn exponents(&self) -> &[Exp] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::new(exps))
    }

    /// `self * x_i`.
    pub fn times_var(&self, i: usize) -> Result<Monomial> {
        let mut exps = self.exps.to_vec();
        exps[i] = exps[i].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial::new(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect::<Vec<_>>(),
        )
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect::<Vec<_>>(),
        )
    }

    /// Exact quotient, `None` unless `divisor | self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(self.quotient_by_gcd(divisor))
        } else {
            None
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|&e| e.min(1)).collect::<Vec<_>>())
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Pure powers `x_i^e` (e ≥ 1) return `Some(i)`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Keeps only the listed coordinates, in the given order.
    pub fn restrict(&self, vars: &[usize]) -> Monomial {
        Monomial::new(vars.iter().map(|&v| self.exps[v]).collect::<Vec<_>>())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_graded_then_leading_exponent() {
        let x2 = Monomial::new(vec![2, 0]);
        let xy = Monomial::new(vec![1, 1]);
        let y2 = Monomial::new(vec![0, 2]);
        let x = Monomial::new(vec![1, 0]);
        let mut v = vec![y2.clone(), xy.clone(), x2.clone(), x.clone()];
        v.sort();
        assert_eq!(v, vec![x, x2, xy, y2]);
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = Monomial::new(vec![2, 1, 0]);
        let b = Monomial::new(vec![1, 1, 0]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.checked_div(&b), Some(Monomial::new(vec![1, 0, 0])));
        assert_eq!(b.checked_div(&a), None);
        let w = Monomial::new(vec![0, 3, 1]);
        assert_eq!(a.quotient_by_gcd(&w), Monomial::new(vec![2, 0, 0]));
        assert_eq!(a.lcm(&w), Monomial::new(vec![2, 3, 1]));
        assert_eq!(a.gcd(&w), Monomial::new(vec![0, 1, 0]));
    }

    #[test]
    fn overflow_is_reported() {
        let a = Monomial::new(vec![Exp::MAX, 0]);
        let b = Monomial::new(vec![1, 0]);
        assert_eq!(a.checked_mul(&b), Err(Error::ExponentOverflow));
        assert_eq!(a.times_var(0), Err(Error::ExponentOverflow));
    }

    #[test]
    fn ring_rejects_duplicates_and_empties() {
        assert!(Ring::new(["x", "x"]).is_err());
        assert!(Ring::new(["x", ""]).is_err());
        assert!(Ring::new(Vec::<String>::new()).is_err());
        let r = Ring::indexed(3).unwrap();
        assert_eq!(r.names(), ["x1", "x2", "x3"]);
        assert_eq!(r.fmt_monomial(&Monomial::new(vec![2, 0, 1])), "x1^2*x3");
        assert_eq!(r.fmt_monomial(&Monomial::one(3)), "1");
    }
}

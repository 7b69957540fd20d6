//! Scalar traits for the exact linear algebra used by the LP solver and
//! the homology rank computations.
//!
//! Both algorithms are written against these traits; the crate root fixes
//! the concrete types (`Rational`, `Integer`).

use std::fmt::Debug;

use num_traits::{Num, Signed};

/// An exact ordered field (e.g. `BigRational`, `Ratio<i64>`).
///
/// Floating-point types satisfy the bounds but are not exact; the solver
/// compares against zero without tolerances.
pub trait OrderedField: Num + Signed + Clone + PartialOrd + Debug + Send + Sync {}

impl<T> OrderedField for T where T: Num + Signed + Clone + PartialOrd + Debug + Send + Sync {}

/// An exact integral domain with exact division (`a * b / b == a`), enough
/// for fraction-free (Bareiss) elimination.
pub trait ExactDomain: Num + Clone + Debug + Send + Sync {}

impl<T> ExactDomain for T where T: Num + Clone + Debug + Send + Sync {}

//! Exact computations with monomial ideals.
//!
//! The crate covers ideal arithmetic ([`ideal`]), irreducible decomposition
//! and associated primes ([`primes`]), integral closure via the Newton
//! polyhedron ([`closure`]), multigraded Betti numbers and depth
//! ([`resolution`]), edge and cover ideals of graphs ([`graphs`]) and the
//! finite persistence scans built on top of them ([`persistence`]).
//!
//! The linear algebra underneath (the simplex in [`lp`], the rank
//! computation in [`homology`]) is generic over the scalar traits in
//! [`scalar`]; the aliases below fix the exact types used by the rest of
//! the crate.

pub mod closure;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod lp;
pub mod monomial;
pub mod persistence;
pub mod primes;
pub mod random;
pub mod resolution;
pub mod scalar;

/// Exact rationals for LP feasibility.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers for fraction-free elimination.
pub type Integer = num_bigint::BigInt;
/// The phase-one tableau over [`Rational`].
pub type RationalTableau = lp::Tableau<Rational>;

pub use error::{Error, Result};
pub use graphs::SimpleGraph;
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, Ring};
pub use primes::{AssMethod, AssReport, IrreducibleComponent, MonomialPrime};

//! Built-in fixtures.

use crate::ideal::MonomialIdeal;
use crate::io::write_ideal;
use crate::monomial::{Monomial, Ring};

/// Generator supports (1-indexed variables) of a square-free ideal in
/// `K[x1..x7]` whose square has the maximal ideal as an associated prime
/// while its cube does not.
///
/// The fifth generator appears in the source as a garbled `x2x4x7`
/// (a stray bold-face macro around `x_2`); it is read as `x2*x4*x7`.
pub const COUNTEREXAMPLE_SUPPORTS: [&[usize]; 11] = [
    &[1, 4, 5, 7],
    &[2, 3, 6],
    &[2, 3, 7],
    &[2, 4, 5],
    &[2, 4, 7],
    &[2, 5, 6],
    &[3, 4, 5],
    &[3, 4, 6],
    &[3, 5, 7],
    &[4, 6, 7],
    &[5, 6, 7],
];

pub fn counterexample_ideal() -> MonomialIdeal {
    let ring = Ring::indexed(7).expect("valid ring");
    MonomialIdeal::minimalize(
        ring,
        COUNTEREXAMPLE_SUPPORTS
            .iter()
            .map(|s| Monomial::from_support(7, s.iter().map(|v| v - 1))),
    )
    .expect("arity matches")
}

/// Canonical text of the counterexample fixture.
pub fn counterexample_text() -> String {
    write_ideal(&counterexample_ideal())
}

/// Hex SHA-256 of [`counterexample_text`], carried in reports so a reader
/// can tell which generator list was checked.
pub fn counterexample_sha256() -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(counterexample_text().as_bytes()))
}

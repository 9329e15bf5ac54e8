//! Brute-force reference oracles for the wavelet test suites.
//!
//! Everything here is deliberately simple: scalar loops over `u8` trits, no
//! bitslicing, no precomputed tables, direct summation in exact rationals.
//! Agreement between these oracles and the production paths is the main
//! correctness evidence, so the two sides must not share implementation
//! tricks. This crate is a dev-dependency only and never ships in release
//! artifacts.

pub mod linalg;
pub mod mrcode;
pub mod props;
pub mod rational;

/// Scalar mod-3 addition on numeric trit values.
pub fn add(a: u8, b: u8) -> u8 {
    (a + b) % 3
}

/// Scalar mod-3 subtraction on numeric trit values.
pub fn sub(a: u8, b: u8) -> u8 {
    (3 + a - b) % 3
}

/// Scalar mod-3 negation.
pub fn neg(a: u8) -> u8 {
    (3 - a) % 3
}

/// Scalar mod-3 multiplication.
pub fn mul(a: u8, b: u8) -> u8 {
    (a * b) % 3
}

/// Hamming weight of a numeric trit slice.
pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&t| t != 0).count()
}

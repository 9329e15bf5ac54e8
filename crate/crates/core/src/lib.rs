//! Code-based hash-and-sign signatures over GF(3).
//!
//! This crate implements a full signature scheme built on ternary linear
//! codes: key generation from a permuted UV parity-check structure, signing
//! by syndrome decoding with rejection sampling, and a fast verifier that
//! works on a transformed public key so that roughly half of the key rows
//! can be skipped per verification.
//!
//! The building blocks are exposed as modules:
//!
//! - [`f3`]: bitsliced GF(3) scalar/vector arithmetic, Hamming weight, and
//!   the compact 5-trits-per-byte encoding.
//! - [`thash`]: hashing binary messages into ternary syndrome space.
//! - [`linalg`]: bitsliced matrices, Gaussian elimination with pivot
//!   tracking, permutations, and syndrome products.
//! - [`params`]: parameter sets (the production 128-bit set and insecure
//!   toy sets).
//! - [`tables`]: rejection-sampling tables; exact big-integer evaluation of
//!   the acceptance functions.
//! - [`decoder`]: the trapdoor decoder producing weight-`w` preimages.
//! - [`keygen`], [`signer`], [`verifier`]: the scheme itself.
//! - [`sigcodec`]: minimal-redundancy signature compression (pairs or
//!   triples of trits) and the signature wire format.
//!
//! Key generation and signing are *not* constant-time and must only run in
//! trusted environments.

pub mod error;
pub mod f3;
pub mod linalg;
pub mod params;
pub mod rng;
pub mod thash;

pub use error::Error;
pub use f3::{CompactBytes, Trit, TritVector};
pub use linalg::{Permutation, TritMatrix};
pub use params::ParamSet;

/// Convenience result alias.
pub type Result<T> = std::result::Result<T, Error>;

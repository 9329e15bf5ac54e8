//! Bitsliced GF(3) arithmetic.
//!
//! Field elements ("trits") use a two-bit encoding chosen so that logical
//! instructions implement field operations:
//!
//! ```text
//! 0 <-> (h, l) = (0, 0)      1 <-> (0, 1)      2 <-> (1, 1)
//! ```
//!
//! The pattern `(1, 0)` never occurs. Addition and subtraction cost seven
//! logical operations each, negation two, and the low bit alone marks
//! nonzero elements, so Hamming weight is a popcount of the low words.
//!
//! [`TritVector`] stores the high and low bits of many trits across machine
//! words; every operation on it applies the scalar formulas to whole words
//! at a time. The scalar [`Trit`] operations exist for element access and
//! for test oracles; bulk paths are always vectorized.

mod compact;
mod vector;
pub mod word;

pub use compact::{compact_len, from_compact, to_compact, CompactBytes, CompactReader, CompactWriter};
pub use vector::TritVector;

use crate::rng::ByteStream;

/// An element of GF(3), stored as its numeric value in `{0, 1, 2}`.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default, PartialOrd, Ord, Hash)]
pub struct Trit(u8);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);

    /// Wraps a value already known to lie in `{0, 1, 2}`.
    ///
    /// Panics otherwise; use `Trit::from_residue` to reduce arbitrary
    /// integers.
    #[inline]
    pub fn new(v: u8) -> Trit {
        assert!(v < 3, "trit out of range: {v}");
        Trit(v)
    }

    /// Reduces an arbitrary integer modulo 3.
    #[inline]
    pub fn from_residue(v: u64) -> Trit {
        Trit((v % 3) as u8)
    }

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The two-bit encoding `(h, l)` of this element.
    #[inline]
    pub fn bits(self) -> (bool, bool) {
        (self.0 == 2, self.0 != 0)
    }

    /// Reconstructs an element from its two-bit encoding.
    ///
    /// The pair `(1, 0)` is not a valid encoding.
    #[inline]
    pub fn from_bits(h: bool, l: bool) -> Trit {
        debug_assert!(l || !h, "forbidden (1,0) trit encoding");
        Trit((h as u8) + (l as u8))
    }

    /// Multiplicative inverse of a nonzero element. In GF(3) every nonzero
    /// element is its own inverse.
    #[inline]
    pub fn inv(self) -> Trit {
        debug_assert!(self.0 != 0, "inverse of zero");
        self
    }
}

/// `(a + b) mod 3` via the seven-operation formula on bit pairs.
#[inline]
pub fn f3_add(a: Trit, b: Trit) -> Trit {
    let (ah, al) = a.bits();
    let (bh, bl) = b.bits();
    let h = (al ^ bh) & (ah ^ bl);
    let l = (al ^ bl) | ((ah ^ bl) ^ bh);
    Trit::from_bits(h, l)
}

/// `(a - b) mod 3` via the seven-operation formula on bit pairs.
#[inline]
pub fn f3_sub(a: Trit, b: Trit) -> Trit {
    let (ah, al) = a.bits();
    let (bh, bl) = b.bits();
    let h = (al ^ (bh ^ bl)) & (ah ^ bl);
    let l = (al ^ bl) | (ah ^ bh);
    Trit::from_bits(h, l)
}

/// `(-a) mod 3`: the high bit flips exactly for nonzero elements.
#[inline]
pub fn f3_neg(a: Trit) -> Trit {
    let (ah, al) = a.bits();
    Trit::from_bits(ah ^ al, al)
}

/// `(a * b) mod 3`: nonzero iff both are, high bit is the sign difference.
#[inline]
pub fn f3_mul(a: Trit, b: Trit) -> Trit {
    let (ah, al) = a.bits();
    let (bh, bl) = b.bits();
    let l = al & bl;
    let h = (ah ^ bh) & l;
    Trit::from_bits(h, l)
}

/// Samples `length` uniform trits from a byte stream.
///
/// Bytes below 243 carry five uniform trits (their base-3 digits); larger
/// bytes are rejected. With `exclude_zero` the same stream is filtered down
/// to nonzero trits by residual rejection, yielding uniform elements of
/// `{1, 2}`.
pub fn random_trits<S: ByteStream + ?Sized>(
    rng: &mut S,
    length: usize,
    exclude_zero: bool,
) -> TritVector {
    let mut out = TritVector::zero(length);
    let mut produced = 0;
    while produced < length {
        let b = rng.next_byte();
        if b >= 243 {
            continue;
        }
        let mut v = b;
        for _ in 0..5 {
            let t = Trit(v % 3);
            v /= 3;
            if exclude_zero && t.is_zero() {
                continue;
            }
            out.set(produced, t);
            produced += 1;
            if produced == length {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::XofStream;

    fn all_trits() -> [Trit; 3] {
        [Trit::ZERO, Trit::ONE, Trit::TWO]
    }

    #[test]
    fn add_matches_integer_mod3_exhaustively() {
        for a in all_trits() {
            for b in all_trits() {
                let want = (a.value() + b.value()) % 3;
                assert_eq!(f3_add(a, b).value(), want, "{a:?} + {b:?}");
            }
        }
        // Spot values called out as the worked examples.
        assert_eq!(f3_add(Trit::ONE, Trit::TWO), Trit::ZERO);
        assert_eq!(f3_add(Trit::TWO, Trit::TWO), Trit::ONE);
    }

    #[test]
    fn sub_matches_integer_mod3_exhaustively() {
        for a in all_trits() {
            for b in all_trits() {
                let want = (3 + a.value() - b.value()) % 3;
                assert_eq!(f3_sub(a, b).value(), want, "{a:?} - {b:?}");
            }
        }
        assert_eq!(f3_sub(Trit::ZERO, Trit::ONE), Trit::TWO);
        assert_eq!(f3_sub(Trit::ONE, Trit::ONE), Trit::ZERO);
    }

    #[test]
    fn neg_matches_integer_mod3() {
        for a in all_trits() {
            assert_eq!(f3_neg(a).value(), (3 - a.value()) % 3);
        }
    }

    #[test]
    fn mul_matches_integer_mod3() {
        for a in all_trits() {
            for b in all_trits() {
                assert_eq!(f3_mul(a, b).value(), (a.value() * b.value()) % 3);
            }
        }
    }

    #[test]
    fn random_trits_zero_length() {
        let mut rng = XofStream::from_label(b"test", b"seed");
        let v = random_trits(&mut rng, 0, false);
        assert_eq!(v.len(), 0);
    }

    #[test]
    fn random_trits_exclude_zero_has_no_zeros() {
        let mut rng = XofStream::from_label(b"test", b"seed");
        let v = random_trits(&mut rng, 100_000, true);
        assert_eq!(v.len(), 100_000);
        assert_eq!(v.weight(), 100_000);
    }

    #[test]
    fn random_trits_frequencies_near_uniform() {
        // Each symbol count is Binomial(n, 1/3); 5 sigma around the mean.
        let n = 100_000usize;
        let mut rng = XofStream::from_label(b"test", b"freq");
        let v = random_trits(&mut rng, n, false);
        let mut counts = [0usize; 3];
        for i in 0..n {
            counts[v.get(i).value() as usize] += 1;
        }
        let mean = n as f64 / 3.0;
        let sigma = (n as f64 * (1.0 / 3.0) * (2.0 / 3.0)).sqrt();
        for c in counts {
            assert!(
                (c as f64 - mean).abs() < 5.0 * sigma,
                "symbol count {c} too far from {mean}"
            );
        }
    }
}

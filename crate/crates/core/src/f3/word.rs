//! Machine-word lanes for bitsliced arithmetic.
//!
//! Vector operations run the scalar two-bit GF(3) formulas on whole lanes,
//! processing `Lane::BITS` field elements per logical instruction. The
//! default lane is the native 64-bit word; the `wide` feature swaps in a
//! 256-bit lane built from four words, which the compiler vectorizes on
//! targets with wide SIMD.

use std::ops::{BitAnd, BitOr, BitXor, Not};

/// A fixed-width bit lane.
pub trait Lane:
    Copy
    + Eq
    + Default
    + BitXor<Output = Self>
    + BitAnd<Output = Self>
    + BitOr<Output = Self>
    + Not<Output = Self>
{
    /// Lane width in bits.
    const BITS: usize;
    /// All-zero lane.
    const ZERO: Self;

    /// Number of set bits.
    fn popcount(self) -> u32;
    /// Reads bit `i` (0 = least significant).
    fn get_bit(self, i: usize) -> bool;
    /// Writes bit `i`.
    fn set_bit(&mut self, i: usize, v: bool);
    /// Lane with the `bits` least significant bits set; `bits` in `[1, BITS]`.
    fn low_mask(bits: usize) -> Self;
    /// Fills the lane from little-endian bytes (`buf.len() == BITS / 8`).
    fn from_le_bytes(buf: &[u8]) -> Self;
}

/// Sideways addition on a 64-bit word.
///
/// Mask-and-shift reduction: pair counts, nibble counts, then byte folding.
/// Avoids a hardware popcount so the operation count is the same on every
/// target.
#[inline]
pub fn swar_popcount(mut n: u64) -> u32 {
    const M1: u64 = !0u64 / 3; // 0x5555...
    const M2: u64 = !0u64 / 5; // 0x3333...
    const M4: u64 = !0u64 / 17; // 0x0f0f...
    n -= (n >> 1) & M1;
    n = (n & M2) + ((n >> 2) & M2);
    n = (n + (n >> 4)) & M4;
    n += n >> 8;
    n += n >> 16;
    n += n >> 32;
    (n & 0x7f) as u32
}

impl Lane for u64 {
    const BITS: usize = 64;
    const ZERO: Self = 0;

    #[inline]
    fn popcount(self) -> u32 {
        swar_popcount(self)
    }

    #[inline]
    fn get_bit(self, i: usize) -> bool {
        (self >> i) & 1 != 0
    }

    #[inline]
    fn set_bit(&mut self, i: usize, v: bool) {
        if v {
            *self |= 1 << i;
        } else {
            *self &= !(1 << i);
        }
    }

    #[inline]
    fn low_mask(bits: usize) -> Self {
        debug_assert!(bits >= 1 && bits <= 64);
        if bits == 64 {
            !0
        } else {
            (1u64 << bits) - 1
        }
    }

    #[inline]
    fn from_le_bytes(buf: &[u8]) -> Self {
        u64::from_le_bytes(buf.try_into().expect("8 bytes per 64-bit lane"))
    }
}

/// 256-bit lane: four 64-bit words operated on element-wise.
#[cfg(feature = "wide")]
#[derive(Copy, Clone, PartialEq, Eq, Default)]
#[repr(align(32))]
pub struct W256(pub [u64; 4]);

#[cfg(feature = "wide")]
mod wide_impl {
    use super::{swar_popcount, Lane, W256};
    use std::ops::{BitAnd, BitOr, BitXor, Not};

    macro_rules! lanewise {
        ($trait:ident, $method:ident, $op:tt) => {
            impl $trait for W256 {
                type Output = W256;
                #[inline]
                fn $method(self, rhs: W256) -> W256 {
                    W256([
                        self.0[0] $op rhs.0[0],
                        self.0[1] $op rhs.0[1],
                        self.0[2] $op rhs.0[2],
                        self.0[3] $op rhs.0[3],
                    ])
                }
            }
        };
    }

    lanewise!(BitXor, bitxor, ^);
    lanewise!(BitAnd, bitand, &);
    lanewise!(BitOr, bitor, |);

    impl Not for W256 {
        type Output = W256;
        #[inline]
        fn not(self) -> W256 {
            W256([!self.0[0], !self.0[1], !self.0[2], !self.0[3]])
        }
    }

    impl Lane for W256 {
        const BITS: usize = 256;
        const ZERO: Self = W256([0; 4]);

        #[inline]
        fn popcount(self) -> u32 {
            self.0.iter().map(|&w| swar_popcount(w)).sum()
        }

        #[inline]
        fn get_bit(self, i: usize) -> bool {
            self.0[i / 64].get_bit(i % 64)
        }

        #[inline]
        fn set_bit(&mut self, i: usize, v: bool) {
            self.0[i / 64].set_bit(i % 64, v);
        }

        fn low_mask(bits: usize) -> Self {
            debug_assert!(bits >= 1 && bits <= 256);
            let mut out = [0u64; 4];
            let full = bits / 64;
            for w in out.iter_mut().take(full) {
                *w = !0;
            }
            if bits % 64 != 0 {
                out[full] = u64::low_mask(bits % 64);
            }
            W256(out)
        }

        fn from_le_bytes(buf: &[u8]) -> Self {
            let mut out = [0u64; 4];
            for (w, chunk) in out.iter_mut().zip(buf.chunks_exact(8)) {
                *w = u64::from_le_bytes(chunk.try_into().unwrap());
            }
            W256(out)
        }
    }
}

/// The lane type all vectors in this crate are built on.
#[cfg(not(feature = "wide"))]
pub type Word = u64;

/// The lane type all vectors in this crate are built on.
#[cfg(feature = "wide")]
pub type Word = W256;

/// Lane width of [`Word`] in bits. Inherent integer constants shadow the
/// trait constant, so name the resolved value once here.
pub const WORD_BITS: usize = <Word as Lane>::BITS;

//! Bitsliced vectors over GF(3).

use super::word::{Lane, Word, WORD_BITS};
use super::Trit;

/// A length-`len` vector over GF(3) in bitsliced form: the high bits of all
/// elements live in `hi`, the low bits in `lo`, packed least significant
/// bit first.
///
/// Invariants:
/// - no element ever holds the forbidden `(1, 0)` bit pattern;
/// - padding bits beyond `len` in the last word are zero in both planes.
///
/// The zero tail is maintained by construction rather than masked on reads,
/// which keeps the weight computation a plain popcount.
#[derive(Clone, PartialEq, Eq)]
pub struct TritVector {
    len: usize,
    hi: Vec<Word>,
    lo: Vec<Word>,
}

impl std::fmt::Debug for TritVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TritVector[{}; ", self.len)?;
        for i in 0..self.len.min(64) {
            write!(f, "{}", self.get(i).value())?;
        }
        if self.len > 64 {
            write!(f, "...")?;
        }
        write!(f, "]")
    }
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

impl TritVector {
    /// The all-zero vector of the given length.
    pub fn zero(len: usize) -> TritVector {
        let w = words_for(len);
        TritVector {
            len,
            hi: vec![Word::ZERO; w],
            lo: vec![Word::ZERO; w],
        }
    }

    /// Builds a vector from numeric trit values.
    pub fn from_values(values: &[u8]) -> TritVector {
        let mut v = TritVector::zero(values.len());
        for (i, &t) in values.iter().enumerate() {
            v.set(i, Trit::new(t));
        }
        v
    }

    /// Numeric values of all elements.
    pub fn to_values(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i).value()).collect()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> Trit {
        debug_assert!(i < self.len);
        let (w, b) = (i / WORD_BITS, i % WORD_BITS);
        Trit::from_bits(self.hi[w].get_bit(b), self.lo[w].get_bit(b))
    }

    #[inline]
    pub fn set(&mut self, i: usize, t: Trit) {
        assert!(i < self.len, "index {i} out of bounds for length {}", self.len);
        let (w, b) = (i / WORD_BITS, i % WORD_BITS);
        let (h, l) = t.bits();
        self.hi[w].set_bit(b, h);
        self.lo[w].set_bit(b, l);
    }

    /// Iterates over the elements in index order.
    pub fn iter(&self) -> impl Iterator<Item = Trit> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices of the nonzero elements.
    pub fn support(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.weight());
        for (w, &lo) in self.lo.iter().enumerate() {
            if lo == Word::ZERO {
                continue;
            }
            for b in 0..WORD_BITS {
                if lo.get_bit(b) {
                    out.push((w * WORD_BITS + b) as u32);
                }
            }
        }
        out
    }

    fn assert_same_len(&self, other: &TritVector, op: &str) {
        assert!(
            self.len == other.len,
            "{op}: length mismatch ({} vs {})",
            self.len,
            other.len
        );
    }

    /// Element-wise sum. Panics on length mismatch.
    pub fn add(&self, other: &TritVector) -> TritVector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Element-wise difference. Panics on length mismatch.
    pub fn sub(&self, other: &TritVector) -> TritVector {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    /// Element-wise negation.
    pub fn neg(&self) -> TritVector {
        let mut out = self.clone();
        out.neg_assign();
        out
    }

    /// Element-wise product (diagonal scaling). Panics on length mismatch.
    pub fn mul(&self, other: &TritVector) -> TritVector {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    /// In-place element-wise sum over whole words.
    pub fn add_assign(&mut self, other: &TritVector) {
        self.assert_same_len(other, "vec_add");
        for i in 0..self.hi.len() {
            let (ah, al) = (self.hi[i], self.lo[i]);
            let (bh, bl) = (other.hi[i], other.lo[i]);
            self.hi[i] = (al ^ bh) & (ah ^ bl);
            self.lo[i] = (al ^ bl) | ((ah ^ bl) ^ bh);
        }
    }

    /// In-place element-wise difference over whole words.
    pub fn sub_assign(&mut self, other: &TritVector) {
        self.assert_same_len(other, "vec_sub");
        for i in 0..self.hi.len() {
            let (ah, al) = (self.hi[i], self.lo[i]);
            let (bh, bl) = (other.hi[i], other.lo[i]);
            self.hi[i] = (al ^ (bh ^ bl)) & (ah ^ bl);
            self.lo[i] = (al ^ bl) | (ah ^ bh);
        }
    }

    /// In-place negation.
    pub fn neg_assign(&mut self) {
        for i in 0..self.hi.len() {
            self.hi[i] = self.hi[i] ^ self.lo[i];
        }
    }

    /// In-place element-wise product.
    pub fn mul_assign(&mut self, other: &TritVector) {
        self.assert_same_len(other, "vec_mul");
        for i in 0..self.hi.len() {
            let (ah, al) = (self.hi[i], self.lo[i]);
            let (bh, bl) = (other.hi[i], other.lo[i]);
            let l = al & bl;
            self.hi[i] = (ah ^ bh) & l;
            self.lo[i] = l;
        }
    }

    /// Hamming weight: the number of nonzero elements.
    ///
    /// The low plane has a set bit exactly at nonzero elements, and tail
    /// padding is zero, so this is a popcount of the low words.
    pub fn weight(&self) -> usize {
        self.lo.iter().map(|w| w.popcount() as usize).sum()
    }

    /// Inner product `sum_i self_i * other_i` in GF(3).
    ///
    /// Element values coincide with `h + l`, so the sum of a product vector
    /// reduces to popcounts of its two planes.
    pub fn dot(&self, other: &TritVector) -> Trit {
        self.assert_same_len(other, "dot");
        let mut ones = 0u64;
        let mut highs = 0u64;
        for i in 0..self.hi.len() {
            let l = self.lo[i] & other.lo[i];
            let h = (self.hi[i] ^ other.hi[i]) & l;
            ones += l.popcount() as u64;
            highs += h.popcount() as u64;
        }
        Trit::from_residue(ones + highs)
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &TritVector) -> TritVector {
        let mut out = TritVector::zero(self.len + other.len);
        out.copy_range_from(0, self, 0, self.len);
        out.copy_range_from(self.len, other, 0, other.len);
        out
    }

    /// The subvector at `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> TritVector {
        assert!(start + len <= self.len, "slice out of bounds");
        let mut out = TritVector::zero(len);
        out.copy_range_from(0, self, start, len);
        out
    }

    /// Copies `len` elements from `src[src_start..]` into `self[dst_start..]`.
    pub fn copy_range_from(
        &mut self,
        dst_start: usize,
        src: &TritVector,
        src_start: usize,
        len: usize,
    ) {
        assert!(src_start + len <= src.len && dst_start + len <= self.len);
        if dst_start % WORD_BITS == 0 && src_start % WORD_BITS == 0 {
            // Word-aligned fast path; mask the final partial word.
            let words = len / WORD_BITS;
            let dw = dst_start / WORD_BITS;
            let sw = src_start / WORD_BITS;
            self.hi[dw..dw + words].copy_from_slice(&src.hi[sw..sw + words]);
            self.lo[dw..dw + words].copy_from_slice(&src.lo[sw..sw + words]);
            for i in words * WORD_BITS..len {
                self.set(dst_start + i, src.get(src_start + i));
            }
        } else {
            for i in 0..len {
                self.set(dst_start + i, src.get(src_start + i));
            }
        }
    }

    /// Word planes, exposed for serialization and size accounting.
    pub fn planes(&self) -> (&[Word], &[Word]) {
        (&self.hi, &self.lo)
    }

    /// Checks the representation invariants. Test support.
    pub fn invariants_hold(&self) -> bool {
        for i in 0..self.hi.len() {
            // (1,0) forbidden: hi implies lo.
            if (self.hi[i] & !self.lo[i]) != Word::ZERO {
                return false;
            }
        }
        let tail = self.len % WORD_BITS;
        if tail != 0 {
            let mask = !Word::low_mask(tail);
            if let (Some(&h), Some(&l)) = (self.hi.last(), self.lo.last()) {
                if (h & mask) != Word::ZERO || (l & mask) != Word::ZERO {
                    return false;
                }
            }
        }
        true
    }

    /// In-memory footprint of the bitsliced planes in bytes (excluding
    /// the container itself).
    pub fn bitsliced_bytes(&self) -> usize {
        2 * self.hi.len() * (WORD_BITS / 8)
    }
}

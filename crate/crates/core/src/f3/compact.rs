//! Compact byte encoding for ternary data: five trits per byte.
//!
//! A group of five trits `(t0..t4)` becomes the byte `sum t_i * 3^i`, so
//! every byte value is below `3^5 = 243`. This is the interchange format
//! for keys and any ternary payload crossing a process boundary; the
//! bitsliced form stays internal.

use super::{Trit, TritVector};
use crate::error::Error;

const POW3: [u16; 5] = [1, 3, 9, 27, 81];

/// Number of bytes the compact encoding uses for `trits` elements.
pub const fn compact_len(trits: usize) -> usize {
    trits.div_ceil(5)
}

/// A compact-encoded ternary vector.
///
/// The final partial group, if any, treats absent trits as zero, so the
/// last byte of a non-multiple-of-five vector is smaller than `3^r` for a
/// remainder of `r` trits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompactBytes {
    length: usize,
    bytes: Vec<u8>,
}

impl CompactBytes {
    /// Wraps raw compact bytes, validating byte range and length.
    pub fn new(length: usize, bytes: Vec<u8>) -> Result<CompactBytes, Error> {
        if bytes.len() != compact_len(length) {
            return Err(Error::MalformedEncoding("byte count does not match length"));
        }
        if bytes.iter().any(|&b| b >= 243) {
            return Err(Error::MalformedEncoding("byte value 243 or larger"));
        }
        Ok(CompactBytes { length, bytes })
    }

    /// Number of trits encoded.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }
}

/// Packs a vector into its compact byte form.
pub fn to_compact(v: &TritVector) -> CompactBytes {
    let mut w = CompactWriter::with_capacity(v.len());
    for t in v.iter() {
        w.push(t);
    }
    CompactBytes {
        length: v.len(),
        bytes: w.finish(),
    }
}

/// Unpacks a compact byte form back into a vector.
///
/// Rejects any byte of value 243 or more. Digits of the final byte beyond
/// the encoded length are ignored.
pub fn from_compact(c: &CompactBytes) -> Result<TritVector, Error> {
    let mut r = CompactReader::new(&c.bytes, c.length);
    let mut v = TritVector::zero(c.length);
    for i in 0..c.length {
        v.set(i, r.next()?);
    }
    Ok(v)
}

/// Streaming packer for long trit sequences (for example whole matrices),
/// where five-trit groups cross row boundaries.
pub struct CompactWriter {
    bytes: Vec<u8>,
    acc: u16,
    fill: usize,
}

impl CompactWriter {
    pub fn new() -> CompactWriter {
        CompactWriter {
            bytes: Vec::new(),
            acc: 0,
            fill: 0,
        }
    }

    pub fn with_capacity(trits: usize) -> CompactWriter {
        CompactWriter {
            bytes: Vec::with_capacity(compact_len(trits)),
            acc: 0,
            fill: 0,
        }
    }

    #[inline]
    pub fn push(&mut self, t: Trit) {
        self.acc += t.value() as u16 * POW3[self.fill];
        self.fill += 1;
        if self.fill == 5 {
            self.bytes.push(self.acc as u8);
            self.acc = 0;
            self.fill = 0;
        }
    }

    /// Pushes every element of `v` in index order.
    pub fn push_vector(&mut self, v: &TritVector) {
        for t in v.iter() {
            self.push(t);
        }
    }

    /// Flushes the final partial group (absent trits as zero).
    pub fn finish(mut self) -> Vec<u8> {
        if self.fill > 0 {
            self.bytes.push(self.acc as u8);
        }
        self.bytes
    }
}

impl Default for CompactWriter {
    fn default() -> Self {
        CompactWriter::new()
    }
}

/// Streaming unpacker over a compact byte slice.
pub struct CompactReader<'a> {
    bytes: &'a [u8],
    pos: usize,
    digits: [u8; 5],
    avail: usize,
    remaining: usize,
}

impl<'a> CompactReader<'a> {
    /// Reads up to `trits` elements from `bytes`.
    pub fn new(bytes: &'a [u8], trits: usize) -> CompactReader<'a> {
        CompactReader {
            bytes,
            pos: 0,
            digits: [0; 5],
            avail: 0,
            remaining: trits,
        }
    }

    /// Starts mid-stream: skips `phase` digits of the first byte.
    pub fn with_phase(bytes: &'a [u8], trits: usize, phase: usize) -> Result<CompactReader<'a>, Error> {
        assert!(phase < 5);
        let mut r = CompactReader::new(bytes, trits + phase);
        for _ in 0..phase {
            r.next()?;
        }
        r.remaining = trits;
        Ok(r)
    }

    #[inline]
    pub fn next(&mut self) -> Result<Trit, Error> {
        if self.remaining == 0 {
            return Err(Error::MalformedEncoding("read past encoded length"));
        }
        if self.avail == 0 {
            let b = *self
                .bytes
                .get(self.pos)
                .ok_or(Error::MalformedEncoding("compact stream too short"))?;
            if b >= 243 {
                return Err(Error::MalformedEncoding("byte value 243 or larger"));
            }
            self.pos += 1;
            let mut v = b;
            for d in self.digits.iter_mut() {
                *d = v % 3;
                v /= 3;
            }
            self.avail = 5;
        }
        let t = Trit::new(self.digits[5 - self.avail]);
        self.avail -= 1;
        self.remaining -= 1;
        Ok(t)
    }

    /// Reads the next `len` elements as a vector.
    pub fn next_vector(&mut self, len: usize) -> Result<TritVector, Error> {
        let mut v = TritVector::zero(len);
        for i in 0..len {
            v.set(i, self.next()?);
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f3::random_trits;
    use crate::rng::XofStream;

    #[test]
    fn single_group_examples() {
        let v = TritVector::from_values(&[1, 2, 0, 0, 0]);
        assert_eq!(to_compact(&v).bytes(), &[7]);
        let v = TritVector::from_values(&[2, 2, 2, 2, 2]);
        assert_eq!(to_compact(&v).bytes(), &[242]);
    }

    #[test]
    fn roundtrip_long_vector() {
        let mut rng = XofStream::from_label(b"compact", b"rt");
        let v = random_trits(&mut rng, 5605, false);
        let c = to_compact(&v);
        assert_eq!(c.bytes().len(), compact_len(5605));
        assert_eq!(from_compact(&c).unwrap(), v);
    }

    #[test]
    fn roundtrip_both_directions_various_lengths() {
        let mut rng = XofStream::from_label(b"compact", b"rt2");
        for &len in &[0usize, 1, 4, 5, 6, 9, 10, 101] {
            let v = random_trits(&mut rng, len, false);
            let c = to_compact(&v);
            assert_eq!(from_compact(&c).unwrap(), v);
            // Bytes -> vector -> bytes is also the identity on valid input.
            let c2 = to_compact(&from_compact(&c).unwrap());
            assert_eq!(c2, c);
        }
    }

    #[test]
    fn rejects_out_of_range_bytes() {
        assert!(CompactBytes::new(5, vec![243]).is_err());
        assert!(CompactBytes::new(5, vec![255]).is_err());
        let c = CompactBytes::new(5, vec![242]).unwrap();
        assert!(from_compact(&c).is_ok());
    }

    #[test]
    fn rejects_wrong_byte_count() {
        assert!(CompactBytes::new(6, vec![0]).is_err());
        assert!(CompactBytes::new(5, vec![0, 0]).is_err());
    }

    #[test]
    fn streaming_writer_crosses_group_boundaries() {
        let mut rng = XofStream::from_label(b"compact", b"stream");
        let a = random_trits(&mut rng, 7, false);
        let b = random_trits(&mut rng, 11, false);
        let mut w = CompactWriter::new();
        w.push_vector(&a);
        w.push_vector(&b);
        let bytes = w.finish();
        assert_eq!(bytes.len(), compact_len(18));
        let mut r = CompactReader::new(&bytes, 18);
        assert_eq!(r.next_vector(7).unwrap(), a);
        assert_eq!(r.next_vector(11).unwrap(), b);
        assert!(r.next().is_err());
    }

    #[test]
    fn reader_with_phase_skips_leading_digits() {
        let v = TritVector::from_values(&[1, 2, 0, 1, 2, 2, 1, 0]);
        let bytes = to_compact(&v).into_bytes();
        let mut r = CompactReader::with_phase(&bytes, 5, 3).unwrap();
        assert_eq!(r.next_vector(5).unwrap(), v.slice(3, 5));
    }
}

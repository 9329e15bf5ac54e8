//! Naive prefix-code decoding by codebook walk.
//!
//! No precomputed lists: accumulate bits one at a time and compare the
//! running prefix against every codeword. Quadratic and proud of it.

/// A codeword: its bit value (first-transmitted bit in the most significant
/// position) and its length in bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Codeword {
    pub value: u32,
    pub len: u8,
}

/// Decodes `count` symbols from an MSB-first bit sequence.
///
/// Returns the decoded symbol indices and the number of bits consumed, or
/// `None` if the stream ends inside a codeword or a prefix matches no
/// codeword within the maximum length.
pub fn naive_mr_decode(bits: &[bool], codebook: &[Codeword], count: usize) -> Option<(Vec<usize>, usize)> {
    let max_len = codebook.iter().map(|c| c.len).max().unwrap_or(0);
    let mut out = Vec::with_capacity(count);
    let mut pos = 0;
    'symbols: for _ in 0..count {
        let mut acc: u32 = 0;
        let mut len: u8 = 0;
        while len < max_len {
            let bit = *bits.get(pos)?;
            pos += 1;
            acc = (acc << 1) | bit as u32;
            len += 1;
            for (sym, cw) in codebook.iter().enumerate() {
                if cw.len == len && cw.value == acc {
                    out.push(sym);
                    continue 'symbols;
                }
            }
        }
        return None;
    }
    Some((out, pos))
}

/// Checks that no codeword is a prefix of another.
pub fn is_prefix_free(codebook: &[Codeword]) -> bool {
    for (i, a) in codebook.iter().enumerate() {
        for (j, b) in codebook.iter().enumerate() {
            if i == j {
                continue;
            }
            if a.len <= b.len && (b.value >> (b.len - a.len)) == a.value {
                return false;
            }
        }
    }
    true
}

/// Kraft sum `sum 2^-len` as a pair (numerator, 2^max_len denominator).
pub fn kraft_sum(codebook: &[Codeword]) -> (u64, u64) {
    let max_len = codebook.iter().map(|c| c.len).max().unwrap_or(0) as u32;
    let den = 1u64 << max_len;
    let num = codebook
        .iter()
        .map(|c| 1u64 << (max_len - c.len as u32))
        .sum();
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_code() -> Vec<Codeword> {
        vec![
            Codeword { value: 0b0, len: 1 },
            Codeword { value: 0b10, len: 2 },
            Codeword { value: 0b11, len: 2 },
        ]
    }

    #[test]
    fn decodes_simple_stream() {
        let bits = [false, true, false, true, true];
        let (syms, used) = naive_mr_decode(&bits, &toy_code(), 3).unwrap();
        assert_eq!(syms, vec![0, 1, 2]);
        assert_eq!(used, 5);
    }

    #[test]
    fn empty_stream_decodes_zero_symbols() {
        let (syms, used) = naive_mr_decode(&[], &toy_code(), 0).unwrap();
        assert!(syms.is_empty());
        assert_eq!(used, 0);
    }

    #[test]
    fn truncated_stream_fails() {
        let bits = [true];
        assert!(naive_mr_decode(&bits, &toy_code(), 1).is_none());
    }

    #[test]
    fn prefix_freedom_detects_violations() {
        assert!(is_prefix_free(&toy_code()));
        let bad = vec![
            Codeword { value: 0b0, len: 1 },
            Codeword { value: 0b01, len: 2 },
        ];
        assert!(!is_prefix_free(&bad));
    }

    #[test]
    fn kraft_of_complete_code_is_one() {
        let (n, d) = kraft_sum(&toy_code());
        assert_eq!(n, d);
    }
}

//! Exhaustive checkers for the weight identities behind fast verification.

use crate::{add, sub, weight};

/// The pairwise sum/difference transform of a trit vector: entries `2i` and
/// `2i+1` become `s_{2i}+s_{2i+1}` and `s_{2i}-s_{2i+1}`; an odd final
/// entry is carried over unchanged.
pub fn shat(s: &[u8]) -> Vec<u8> {
    let k = s.len();
    let mut out = vec![0u8; k];
    for i in 0..k / 2 {
        out[2 * i] = add(s[2 * i], s[2 * i + 1]);
        out[2 * i + 1] = sub(s[2 * i], s[2 * i + 1]);
    }
    if k % 2 == 1 {
        out[k - 1] = s[k - 1];
    }
    out
}

/// Closed form for `|shat(s)| + |s|`.
///
/// With `delta` the number of all-zero pairs, the sum is
/// `3 * (floor(k/2) - delta)`, plus 2 when `k` is odd and the final entry
/// is nonzero. (Each surviving pair contributes exactly 3: an all-zero pair
/// contributes 0, a one-zero pair 1+2, a dense pair 2+1.)
pub fn weight_sum_closed_form(s: &[u8]) -> usize {
    let k = s.len();
    let delta = (0..k / 2)
        .filter(|&i| s[2 * i] == 0 && s[2 * i + 1] == 0)
        .count();
    let mut total = 3 * (k / 2 - delta);
    if k % 2 == 1 && s[k - 1] != 0 {
        total += 2;
    }
    total
}

/// Checks `|shat(s)| + |s|` against the closed form for every vector in
/// GF(3)^k. Feasible for k up to about 12.
pub fn prop1_exhaustive(k: usize) -> bool {
    assert!(k <= 12, "exhaustive sweep limited to 3^12 vectors");
    let mut s = vec![0u8; k];
    loop {
        let direct = weight(&shat(&s)) + weight(&s);
        if direct != weight_sum_closed_form(&s) {
            return false;
        }
        // Odometer increment in base 3.
        let mut i = 0;
        loop {
            if i == k {
                return true;
            }
            s[i] += 1;
            if s[i] < 3 {
                break;
            }
            s[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shat_small_cases() {
        assert_eq!(shat(&[1, 2]), vec![0, 2]);
        assert_eq!(shat(&[1, 1]), vec![2, 0]);
        assert_eq!(shat(&[0, 0, 1]), vec![0, 0, 1]);
    }

    #[test]
    fn prop1_tiny() {
        assert!(prop1_exhaustive(1));
        assert!(prop1_exhaustive(2));
        assert!(prop1_exhaustive(3));
    }

    #[test]
    fn dense_vector_halves() {
        // |s| = k forces |shat(s)| = ceil(k/2).
        for k in 1..=8 {
            let mut s = vec![0u8; k];
            let mut best = None;
            // scan all dense vectors
            'outer: loop {
                let mut i = 0;
                loop {
                    if i == k {
                        break 'outer;
                    }
                    s[i] += 1;
                    if s[i] < 3 {
                        break;
                    }
                    s[i] = 0;
                    i += 1;
                }
                if s.iter().all(|&t| t != 0) {
                    let w = weight(&shat(&s));
                    assert_eq!(w, k.div_ceil(2));
                    best = Some(w);
                }
            }
            assert!(best.is_some());
        }
    }
}

//! Naive scalar linear algebra over GF(3).

use crate::{add, mul, neg, sub};

/// Dense row-major matrix of numeric trit values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

/// `e * H^T` by the scalar double loop.
pub fn naive_syndrome(e: &[u8], h: &Mat) -> Vec<u8> {
    assert_eq!(e.len(), h.cols);
    let mut out = vec![0u8; h.rows];
    for r in 0..h.rows {
        let mut acc = 0u8;
        for c in 0..h.cols {
            acc = add(acc, mul(e[c], h.get(r, c)));
        }
        out[r] = acc;
    }
    out
}

/// Textbook row reduction processing columns left to right.
///
/// Returns the reduced matrix together with the pivot column list.
pub fn naive_row_reduce(m: &Mat) -> (Mat, Vec<usize>) {
    let mut h = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..h.cols {
        if r == h.rows {
            break;
        }
        let Some(p) = (r..h.rows).find(|&p| h.get(p, c) != 0) else {
            continue;
        };
        if h.get(p, c) == 2 {
            for j in 0..h.cols {
                h.set(p, j, neg(h.get(p, j)));
            }
        }
        for j in 0..h.cols {
            let tmp = h.get(p, j);
            h.set(p, j, h.get(r, j));
            h.set(r, j, tmp);
        }
        for i in 0..h.rows {
            if i == r || h.get(i, c) == 0 {
                continue;
            }
            let factor = h.get(i, c);
            for j in 0..h.cols {
                let adj = mul(factor, h.get(r, j));
                h.set(i, j, sub(h.get(i, j), adj));
            }
        }
        pivots.push(c);
        r += 1;
    }
    (h, pivots)
}

/// Rank via an independent reduction.
pub fn naive_rank(m: &Mat) -> usize {
    naive_row_reduce(m).1.len()
}

/// Checks that `v` lies in the row space of `m`.
pub fn in_row_space(v: &[u8], m: &Mat) -> bool {
    let mut aug = Mat::zero(m.rows + 1, m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug.set(r, c, m.get(r, c));
        }
    }
    for c in 0..m.cols {
        aug.set(m.rows, c, v[c]);
    }
    naive_rank(&aug) == naive_rank(m)
}

//! Matrices over GF(3) in bitsliced row-major form, Gaussian elimination
//! with pivot tracking, permutations, and syndrome products.
//!
//! Column operations are avoided throughout: elimination reads single
//! elements by index and mutates whole rows with the word-parallel vector
//! ops. Matrix arguments are modified in place; callers clone when they
//! need the original.

use crate::f3::{f3_neg, f3_sub, random_trits, Trit, TritVector};
use crate::rng::ByteStream;

/// A permutation of `{0, .., n-1}`, stored as the image sequence
/// `(pi(0), .., pi(n-1))` (not cycle notation).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    map: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            map: (0..n as u32).collect(),
        }
    }

    /// Validates that `map` is a bijection on `[0, map.len())`.
    pub fn from_map(map: Vec<u32>) -> Permutation {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            assert!((i as usize) < n && !seen[i as usize], "not a bijection");
            seen[i as usize] = true;
        }
        Permutation { map }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    /// Coordinate action: `out_i = v[pi(i)]` for `i < len()`, remaining
    /// coordinates of a longer vector pass through unchanged.
    pub fn apply(&self, v: &TritVector) -> TritVector {
        assert!(self.len() <= v.len(), "permutation longer than vector");
        let mut out = TritVector::zero(v.len());
        for i in 0..self.len() {
            out.set(i, v.get(self.get(i)));
        }
        for i in self.len()..v.len() {
            out.set(i, v.get(i));
        }
        out
    }

    /// Inverse action: `out[pi(i)] = v_i`; the two-sided inverse of
    /// [`Permutation::apply`].
    pub fn apply_inv(&self, v: &TritVector) -> TritVector {
        assert!(self.len() <= v.len(), "permutation longer than vector");
        let mut out = TritVector::zero(v.len());
        for i in 0..self.len() {
            out.set(self.get(i), v.get(i));
        }
        for i in self.len()..v.len() {
            out.set(i, v.get(i));
        }
        out
    }

    /// The inverse permutation as a value.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (i, &p) in self.map.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Permutation { map: inv }
    }
}

/// Uniform permutation of `[0, n)` from a byte stream, by the modern
/// Fisher-Yates shuffle. Index draws use rejection sampling, so no modulo
/// bias enters.
pub fn fisher_yates<S: ByteStream + ?Sized>(rng: &mut S, n: usize) -> Permutation {
    assert!(n >= 1);
    let mut map: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        let j = rng.uniform_below(i as u64 + 1) as usize;
        map.swap(i, j);
    }
    Permutation { map }
}

/// A matrix over GF(3): a sequence of bitsliced row vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct TritMatrix {
    cols: usize,
    rows: Vec<TritVector>,
}

impl std::fmt::Debug for TritMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TritMatrix[{}x{}]", self.nrows(), self.cols)
    }
}

impl TritMatrix {
    pub fn zero(rows: usize, cols: usize) -> TritMatrix {
        TritMatrix {
            cols,
            rows: (0..rows).map(|_| TritVector::zero(cols)).collect(),
        }
    }

    pub fn identity(n: usize) -> TritMatrix {
        let mut m = TritMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Trit::ONE);
        }
        m
    }

    /// Assembles a matrix from equal-length rows.
    pub fn from_rows(rows: Vec<TritVector>) -> TritMatrix {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        TritMatrix { cols, rows }
    }

    /// Uniformly random matrix, row-major sampling order.
    pub fn random<S: ByteStream + ?Sized>(rng: &mut S, rows: usize, cols: usize) -> TritMatrix {
        TritMatrix {
            cols,
            rows: (0..rows).map(|_| random_trits(rng, cols, false)).collect(),
        }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Trit {
        self.rows[r].get(c)
    }

    /// Element write; only tests and construction paths use this.
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, t: Trit) {
        self.rows[r].set(c, t);
    }

    #[inline]
    pub fn row(&self, r: usize) -> &TritVector {
        &self.rows[r]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut TritVector {
        &mut self.rows[r]
    }

    pub fn rows(&self) -> &[TritVector] {
        &self.rows
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        self.rows.swap(i, j);
    }

    pub fn neg_row(&mut self, i: usize) {
        self.rows[i].neg_assign();
    }

    /// `row[dst] += row[src]`, word-parallel.
    pub fn add_row_into(&mut self, dst: usize, src: usize) {
        let (d, s) = self.row_pair_mut(dst, src);
        d.add_assign(s);
    }

    /// `row[dst] -= row[src]`, word-parallel.
    pub fn sub_row_into(&mut self, dst: usize, src: usize) {
        let (d, s) = self.row_pair_mut(dst, src);
        d.sub_assign(s);
    }

    fn row_pair_mut(&mut self, dst: usize, src: usize) -> (&mut TritVector, &TritVector) {
        assert!(dst != src, "row pair must be distinct");
        if dst < src {
            let (a, b) = self.rows.split_at_mut(src);
            (&mut a[dst], &b[0])
        } else {
            let (a, b) = self.rows.split_at_mut(dst);
            (&mut b[0], &a[src])
        }
    }

    /// `e * M^T`: the length-`nrows` vector of row inner products.
    pub fn syndrome_mul(&self, e: &TritVector) -> TritVector {
        assert!(
            e.len() == self.cols,
            "syndrome_mul: vector length {} vs {} columns",
            e.len(),
            self.cols
        );
        let mut out = TritVector::zero(self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            out.set(i, row.dot(e));
        }
        out
    }

    /// Column reordering by `pi`: output column `j` is input column
    /// `pi(j)`; columns beyond `pi.len()` keep their positions.
    pub fn permuted_columns(&self, pi: &Permutation) -> TritMatrix {
        TritMatrix {
            cols: self.cols,
            rows: self.rows.iter().map(|r| pi.apply(r)).collect(),
        }
    }

    /// The transposed matrix.
    pub fn transpose(&self) -> TritMatrix {
        let mut out = TritMatrix::zero(self.cols, self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in 0..self.cols {
                let t = row.get(c);
                if !t.is_zero() {
                    out.set(c, r, t);
                }
            }
        }
        out
    }

    /// Total bitsliced footprint of the rows in bytes.
    pub fn bitsliced_bytes(&self) -> usize {
        self.rows.iter().map(|r| r.bitsliced_bytes()).sum()
    }
}

/// Attempted elimination on column `c` using rows `r..`:
///
/// Searches rows `p >= r` for a nonzero entry in column `c`; if found,
/// normalizes that row to a unit pivot (negating a 2), swaps it up to row
/// `r`, and clears column `c` from every other row by adding or
/// subtracting the pivot row. Returns whether a pivot was found.
pub fn elim_single(h: &mut TritMatrix, r: usize, c: usize) -> bool {
    elim_single_aug(h, None, r, c)
}

/// [`elim_single`] on the augmented matrix `(H | s^T)`: every row
/// operation is mirrored onto the syndrome entries.
pub fn elim_single_aug(
    h: &mut TritMatrix,
    mut aug: Option<&mut TritVector>,
    r: usize,
    c: usize,
) -> bool {
    let rows = h.nrows();
    debug_assert!(r < rows && c < h.ncols());
    let mut p = r;
    while p < rows && h.get(p, c).is_zero() {
        p += 1;
    }
    if p == rows {
        return false;
    }
    if h.get(p, c) == Trit::TWO {
        h.neg_row(p);
        if let Some(s) = aug.as_deref_mut() {
            s.set(p, f3_neg(s.get(p)));
        }
    }
    h.swap_rows(p, r);
    if let Some(s) = aug.as_deref_mut() {
        let (sp, sr) = (s.get(p), s.get(r));
        s.set(p, sr);
        s.set(r, sp);
    }
    for i in 0..rows {
        if i == r {
            continue;
        }
        match h.get(i, c).value() {
            1 => {
                h.sub_row_into(i, r);
                if let Some(s) = aug.as_deref_mut() {
                    s.set(i, f3_sub(s.get(i), s.get(r)));
                }
            }
            2 => {
                h.add_row_into(i, r);
                if let Some(s) = aug.as_deref_mut() {
                    let sum = crate::f3::f3_add(s.get(i), s.get(r));
                    s.set(i, sum);
                }
            }
            _ => {}
        }
    }
    true
}

/// Outcome of [`gauss_elim`]: the reordered permutation and the pivot
/// count (rank reached over the processed columns).
pub struct GaussOutcome {
    /// `pivot || nonpivot || remainder` of the input permutation.
    pub perm: Permutation,
    /// Number of pivots found; equals the row count iff full rank.
    pub pivots: usize,
}

/// In-place Gaussian elimination processing columns in `pi` order.
///
/// On return `h` is row-reduced with unit pivots in the columns listed
/// first by the output permutation; `h.permuted_columns(&out.perm)` is
/// `(I | M)` when full rank was reached.
pub fn gauss_elim(h: &mut TritMatrix, pi: &Permutation) -> GaussOutcome {
    gauss_elim_aug(h, None, pi, usize::MAX)
}

/// [`gauss_elim`] over the augmented matrix `(H | s^T)`, stopping early
/// once `max_nonpivot` dependent columns have been seen (the caller then
/// resamples the column order).
pub fn gauss_elim_aug(
    h: &mut TritMatrix,
    mut aug: Option<&mut TritVector>,
    pi: &Permutation,
    max_nonpivot: usize,
) -> GaussOutcome {
    let rows = h.nrows();
    let d = pi.len();
    let mut pivot: Vec<u32> = Vec::with_capacity(rows);
    let mut nonpivot: Vec<u32> = Vec::new();
    let mut c = 0;
    while pivot.len() < rows && c < d {
        let col = pi.get(c);
        if elim_single_aug(h, aug.as_deref_mut(), pivot.len(), col) {
            pivot.push(col as u32);
        } else {
            nonpivot.push(col as u32);
            if nonpivot.len() > max_nonpivot {
                c += 1;
                break;
            }
        }
        c += 1;
    }
    let pivots = pivot.len();
    let mut map = pivot;
    map.extend_from_slice(&nonpivot);
    map.extend((c..d).map(|i| pi.get(i) as u32));
    GaussOutcome {
        perm: Permutation::from_map(map),
        pivots,
    }
}

/// Block parity-check constructor for the UV code.
///
/// Returns the `(n-k) x n` matrix
///
/// ```text
/// ( H_U D | -H_U B )        H_U = (I | R_U),  H_V = (I | R_V),
/// ( -H_V C | H_V A )        A..D diagonal scalings by a..d
/// ```
///
/// `a` and `c` must have no zero entries; `r_u` is `(n/2-k_U) x k_U` and
/// `r_v` is `(n/2-k_V) x k_V`.
pub fn parity_check_uv(
    r_u: &TritMatrix,
    r_v: &TritMatrix,
    a: &TritVector,
    b: &TritVector,
    c: &TritVector,
    d: &TritVector,
) -> TritMatrix {
    let n2 = a.len();
    assert!(b.len() == n2 && c.len() == n2 && d.len() == n2, "diagonal length mismatch");
    assert!(
        r_u.nrows() + r_u.ncols() == n2,
        "R_U must be (n/2-k_U) x k_U"
    );
    assert!(
        r_v.nrows() + r_v.ncols() == n2,
        "R_V must be (n/2-k_V) x k_V"
    );
    assert!(a.weight() == n2 && c.weight() == n2, "a and c must be nonzero everywhere");

    let rows_u = r_u.nrows();
    let rows_v = r_v.nrows();
    let mut rows = Vec::with_capacity(rows_u + rows_v);
    for i in 0..rows_u {
        let mut h_row = TritVector::zero(n2);
        h_row.set(i, Trit::ONE);
        h_row.copy_range_from(rows_u, r_u.row(i), 0, r_u.ncols());
        let left = h_row.mul(d);
        let right = h_row.mul(b).neg();
        rows.push(left.concat(&right));
    }
    for i in 0..rows_v {
        let mut h_row = TritVector::zero(n2);
        h_row.set(i, Trit::ONE);
        h_row.copy_range_from(rows_v, r_v.row(i), 0, r_v.ncols());
        let left = h_row.mul(c).neg();
        let right = h_row.mul(a);
        rows.push(left.concat(&right));
    }
    TritMatrix::from_rows(rows)
}

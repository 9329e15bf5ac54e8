//! Exact-rational oracle for the decoder's rejection-sampling functions.
//!
//! Binomials come from plain factorials and every sum is a direct
//! term-by-term evaluation, so this shares nothing with the production
//! path beyond the formulas themselves. There is also a full enumeration
//! oracle over weight-w words for very small codes, which checks the
//! formulas against raw counting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `n!` by the obvious product.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient via factorials; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64))
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn pow3(e: u64) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= 3;
    }
    acc
}

/// Target distribution of the V-stage weight statistic under uniform
/// weight-w words:
///
/// `q1_unif(i) = C(n/2,i) / (C(n,w) 2^{w/2}) *
///               sum_{p <= i, p = w mod 2} C(i,p) C(n/2-i,(w+p)/2-i) 2^{3p/2}`
pub fn q1_unif(n: i64, w: i64, i: i64) -> BigRational {
    assert!(w % 2 == 0, "oracle assumes even w");
    let mut sum = BigInt::zero();
    let mut p = w % 2;
    while p <= i {
        let second = binomial(n / 2 - i, (w + p) / 2 - i);
        if !second.is_zero() {
            sum += binomial(i, p) * second * pow2((3 * p / 2) as u64);
        }
        p += 2;
    }
    let num = binomial(n / 2, i) * sum;
    let den = binomial(n, w) * pow2((w / 2) as u64);
    BigRational::new(num, den)
}

/// Proposal distribution of the V-stage weight statistic:
///
/// `q1(i) = sum_t C(n/2-kv', i-t) 2^{i-t} / 3^{n/2-kv'} * p_V(t)`
pub fn q1(n: i64, kv_prime: i64, pv: &[(i64, BigRational)], i: i64) -> BigRational {
    let m = n / 2 - kv_prime;
    let den = pow3(m as u64);
    let mut acc = BigRational::zero();
    for &(t, ref p) in pv {
        let c = binomial(m, i - t);
        if c.is_zero() {
            continue;
        }
        acc += BigRational::new(c * pow2((i - t) as u64), den.clone()) * p;
    }
    acc
}

/// Target conditional distribution of the U-stage statistic `s` given `t`:
///
/// `q2_unif(s,t) = C(t,s) C(n/2-t,(w+s)/2-t) 2^{3s/2} /
///                 sum_p C(t,p) C(n/2-t,(w+p)/2-t) 2^{3p/2}`
pub fn q2_unif(n: i64, w: i64, s: i64, t: i64) -> BigRational {
    assert!(w % 2 == 0 && s % 2 == w % 2);
    let term = |x: i64| binomial(t, x) * binomial(n / 2 - t, (w + x) / 2 - t) * pow2((3 * x / 2) as u64);
    let mut den = BigInt::zero();
    let mut p = 0;
    while p <= t.min(n - w) {
        den += term(p);
        p += 2;
    }
    BigRational::new(term(s), den)
}

/// Proposal conditional distribution of the U-stage statistic `s` given `t`
/// under the mixture `p_U(. , t)`:
///
/// `q2(s,t) = sum_k  C(t-k,s) C(n/2-t-k0,(w+s)/2-t-k0) 2^{3s/2} / D(k)
///            * p_U(k,t)`  with `k0 = ku' - k`
/// and `D(k)` the same sum over all admissible `p`.
pub fn q2(
    n: i64,
    w: i64,
    ku_prime: i64,
    pu_t: &[(i64, BigRational)],
    s: i64,
    t: i64,
) -> BigRational {
    assert!(w % 2 == 0 && s % 2 == 0);
    let mut acc = BigRational::zero();
    for &(k, ref prob) in pu_t {
        if prob.is_zero() {
            continue;
        }
        let k0 = ku_prime - k;
        let term =
            |x: i64| binomial(t - k, x) * binomial(n / 2 - t - k0, (w + x) / 2 - t - k0) * pow2((3 * x / 2) as u64);
        let mut den = BigInt::zero();
        let mut p = 0;
        while p <= (t - k).min(n - w) {
            den += term(p);
            p += 2;
        }
        if den.is_zero() {
            continue;
        }
        let num = term(s);
        if num.is_zero() {
            continue;
        }
        acc += BigRational::new(num, den) * prob;
    }
    acc
}

/// All vectors of GF(3)^n with Hamming weight exactly w, as numeric trits.
pub fn enumerate_weight_words(n: usize, w: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut v = vec![0u8; n];
    fn rec(v: &mut Vec<u8>, idx: usize, left: usize, out: &mut Vec<Vec<u8>>) {
        let n = v.len();
        if left > n - idx {
            return;
        }
        if idx == n {
            out.push(v.clone());
            return;
        }
        if left < n - idx {
            v[idx] = 0;
            rec(v, idx + 1, left, out);
        }
        if left > 0 {
            for t in 1..=2u8 {
                v[idx] = t;
                rec(v, idx + 1, left - 1, out);
                v[idx] = 0;
            }
        }
    }
    rec(&mut v, 0, w, &mut out);
    out
}

/// The pair statistics the decoder's rejection sampling is phrased over,
/// taken against the diagonal line `{(x, x)}`:
///
/// - `t`: pairs `(v_i, v_{i+n/2})` that are not a multiple of `(1, 1)`;
/// - `s`: pairs with exactly one zero coordinate.
pub fn pair_statistics(v: &[u8]) -> (usize, usize) {
    let half = v.len() / 2;
    let mut t = 0;
    let mut s = 0;
    for i in 0..half {
        let (x, y) = (v[i], v[i + half]);
        if x != y {
            t += 1;
        }
        if (x == 0) != (y == 0) {
            s += 1;
        }
    }
    (t, s)
}

//! Exact evaluators for the elementary-symmetric and Stirling-polynomial
//! identities behind the row formula. Each returns `(lhs, rhs)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::stirling::{binomial, elementary_symmetric, StirlingTable};

fn binom_r(x: i64, j: i64) -> BigRational {
    BigRational::from_integer(binomial(&BigInt::from(x), j))
}

/// `σ_k(x, ℓ, …, 1)` against `Σ_j binom(ℓ, k−j)·S_{k−j}(ℓ)·σ_j(x)`.
pub fn identity_lemma44(x: &[BigRational], ell: usize, k: usize) -> (BigRational, BigRational) {
    let table = StirlingTable::shared(k);
    let mut extended = x.to_vec();
    extended.extend((1..=ell as i64).rev().map(|v| BigRational::from_integer(v.into())));
    let lhs = elementary_symmetric(&extended, k);
    let rhs = (0..=k)
        .map(|j| {
            binom_r(ell as i64, (k - j) as i64)
                * table.eval(k - j, ell as i64)
                * elementary_symmetric(x, j)
        })
        .fold(BigRational::zero(), |a, b| a + b);
    (lhs, rhs)
}

/// `σ_k(x + d)` against `Σ_j binom(N−j, k−j)·d^{k−j}·σ_j(x)` with `N = |x|`.
pub fn identity_lemma45(x: &[BigRational], d: &BigRational, k: usize) -> (BigRational, BigRational) {
    let shifted: Vec<BigRational> = x.iter().map(|v| v + d).collect();
    let lhs = elementary_symmetric(&shifted, k);
    let n = x.len() as i64;
    let rhs = (0..=k)
        .map(|j| {
            let power = (0..k - j).fold(BigRational::one(), |acc, _| acc * d);
            binom_r(n - j as i64, (k - j) as i64) * power * elementary_symmetric(x, j)
        })
        .fold(BigRational::zero(), |a, b| a + b);
    (lhs, rhs)
}

/// Both sides of the mixed Stirling identity in `(M, q, r)`:
/// `Σ binom(q+r−i−1, M−i) binom(q−1, i) S_{M−i}(M−q−r) S_i(q−1)` and
/// `Σ (−1)^i binom(r−i−1, M−i) binom(r−1, i) S_{M−i}(M−r) q^i`.
pub fn identity_lemma47(big_m: usize, q: i64, r: i64) -> (BigRational, BigRational) {
    let table = StirlingTable::shared(big_m);
    let mm = big_m as i64;
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    let mut q_pow = BigRational::one();
    for i in 0..=big_m {
        let ii = i as i64;
        lhs += binom_r(q + r - ii - 1, mm - ii)
            * binom_r(q - 1, ii)
            * table.eval(big_m - i, mm - q - r)
            * table.eval(i, q - 1);
        let term = binom_r(r - ii - 1, mm - ii) * binom_r(r - 1, ii) * table.eval(big_m - i, mm - r) * &q_pow;
        if i % 2 == 0 {
            rhs += term;
        } else {
            rhs -= term;
        }
        q_pow *= BigRational::from_integer(q.into());
    }
    (lhs, rhs)
}

/// `Σ_i binom(m, i)·S_{m−i}(m−k−1)·S_i(k)` against `m!`.
pub fn identity_cor48(m: usize, k: i64) -> (BigRational, BigRational) {
    let table = StirlingTable::shared(m);
    let mi = m as i64;
    let lhs = (0..=m)
        .map(|i| binom_r(mi, i as i64) * table.eval(m - i, mi - k - 1) * table.eval(i, k))
        .fold(BigRational::zero(), |a, b| a + b);
    let factorial = (1..=mi).fold(BigInt::one(), |acc, v| acc * v);
    (lhs, BigRational::from_integer(factorial))
}

//! Truncated power series and the generating-function forms of row and
//! column excitation factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Power series over the rationals, truncated after `X^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = BigRational::one();
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, t: usize) -> &BigRational {
        &self.coeffs[t]
    }

    /// Multiply by `(1 + c·X)`.
    pub fn mul_linear(&mut self, c: &BigRational) {
        for t in (1..self.coeffs.len()).rev() {
            let carry = &self.coeffs[t - 1] * c;
            self.coeffs[t] += carry;
        }
    }

    /// Divide by `(1 + c·X)`: `b_t = a_t − c·b_{t−1}`.
    pub fn div_linear(&mut self, c: &BigRational) {
        for t in 1..self.coeffs.len() {
            let carry = &self.coeffs[t - 1] * c;
            self.coeffs[t] -= carry;
        }
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn integer_coeff(series: &TruncatedSeries, m: usize) -> BigInt {
    let c = series.coeff(m);
    assert!(c.is_integer(), "series coefficient {c} is not an integer");
    c.to_integer()
}

/// `E_m(λ)` as `[Π(1 + a_i X) / Π_{j=1}^{k−m}(1 + jX)]_{X^m}`.
/// Zero for `m > k`.
pub fn excitation_row_pixton(hooks: &[usize], m: usize) -> BigInt {
    let k = hooks.len();
    if m > k {
        return BigInt::zero();
    }
    let mut s = TruncatedSeries::one(m);
    for &a in hooks {
        s.mul_linear(&rat(a as i64));
    }
    for j in 1..=(k - m) {
        s.div_linear(&rat(j as i64));
    }
    integer_coeff(&s, m)
}

/// `E_{[1^m]}(λ)` as `[Π_{j=1}^{k+m−2}(1 − jX) / Π(1 − a_i X)]_{X^m}`.
pub fn excitation_column_pixton(lambda: &Partition, m: usize) -> BigInt {
    let hooks = lambda.first_row_hooks();
    let k = hooks.len();
    let mut s = TruncatedSeries::one(m);
    for j in 1..(k + m).saturating_sub(1) {
        s.mul_linear(&rat(-(j as i64)));
    }
    for &a in &hooks {
        s.div_linear(&rat(-(a as i64)));
    }
    integer_coeff(&s, m)
}

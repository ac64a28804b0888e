//! The double-SONAR query budget `⌊2n / log n⌋` (natural log), computed
//! from a rational bracket of `log n` that is refined until the floor is
//! unambiguous.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `2·atanh(z)` for `0 ≤ z < 1`, bracketed after `terms` series terms.
fn two_atanh_bracket(z: &BigRational, terms: usize) -> (BigRational, BigRational) {
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = BigRational::zero();
    for i in 0..terms {
        sum += &power / BigRational::from_integer(BigInt::from(2 * i + 1));
        power *= &z2;
    }
    // tail ≤ z^{2N+1} / ((2N+1)(1 − z²))
    let tail = &power / (BigRational::from_integer(BigInt::from(2 * terms + 1)) * (BigRational::one() - &z2));
    let two = BigRational::from_integer(BigInt::from(2));
    (&sum * &two, (sum + tail) * two)
}

/// Rational bounds `lo ≤ log n ≤ hi` for `n ≥ 1`.
pub fn ln_bracket(n: u64, terms: usize) -> (BigRational, BigRational) {
    assert!(n >= 1);
    let exp = 63 - n.leading_zeros() as i64;
    let r = BigRational::new(BigInt::from(n), BigInt::one() << exp);
    let one = BigRational::one();
    let z = (&r - &one) / (&r + &one);
    let (r_lo, r_hi) = two_atanh_bracket(&z, terms);
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let (l2_lo, l2_hi) = two_atanh_bracket(&third, terms);
    let e = BigRational::from_integer(BigInt::from(exp));
    (&e * l2_lo + r_lo, e * l2_hi + r_hi)
}

/// `⌊2n / log n⌋` for `n ≥ 2`.
pub fn query_budget(n: usize) -> usize {
    assert!(n >= 2, "the query budget is defined for n >= 2");
    let two_n = BigRational::from_integer(BigInt::from(2 * n as u64));
    let mut terms = 16;
    loop {
        let (lo, hi) = ln_bracket(n as u64, terms);
        let floor_lo = (&two_n / hi).floor().to_integer();
        let floor_hi = (&two_n / lo).floor().to_integer();
        if floor_lo == floor_hi {
            let (q, _) = floor_lo.div_rem(&BigInt::one());
            return q.try_into().expect("budget fits in usize");
        }
        terms *= 2;
        assert!(terms <= 1 << 14, "log bracket failed to separate the floor for n={n}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn brackets_contain_float_log() {
        for n in [1u64, 2, 3, 9, 10, 60, 1000, 999_983, 1_000_000] {
            let (lo, hi) = ln_bracket(n, 24);
            let f = (n as f64).ln();
            assert!(lo.to_f64().unwrap() <= f + 1e-12 && f - 1e-12 <= hi.to_f64().unwrap());
            assert!(&hi - &lo < BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64)));
        }
    }

    #[test]
    fn budget_values() {
        assert_eq!(query_budget(9), 8);
        assert_eq!(query_budget(2), 5);
        for n in 2..=3000usize {
            let f = 2.0 * n as f64 / (n as f64).ln();
            if (f - f.round()).abs() > 1e-9 {
                assert_eq!(query_budget(n), f.floor() as usize, "n={n}");
            }
        }
        let big = query_budget(1_000_000);
        assert_eq!(big, (2e6f64 / 1e6f64.ln()).floor() as usize);
    }
}

//! Stirling polynomials and the coefficients they induce.
//!
//! `S_j` is the degree-`j` polynomial with `binom(ℓ, j)·S_j(ℓ) = σ_j(ℓ, …, 1)`
//! for every positive integer `ℓ`. The table is built by Lagrange
//! interpolation through `ℓ = j+1, …, 2j+1`.

use std::ops::{Add, Mul};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial over the rationals, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    fn mul_linear(&self, root: &BigRational) -> RatPoly {
        // (x − root)·p(x)
        let mut out = vec![BigRational::zero(); self.0.len() + 1];
        for (i, c) in self.0.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * root;
        }
        RatPoly(out)
    }
}

/// `σ_i` of `values`, with `σ_0 = 1` and `σ_i = 0` past the length.
pub fn elementary_symmetric<T>(values: &[T], i: usize) -> T
where
    T: Clone + Zero + One,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    elementary_symmetric_all(values, i).swap_remove(i)
}

/// `σ_0, …, σ_upto` of `values` by the one-pass product recurrence.
pub fn elementary_symmetric_all<T>(values: &[T], upto: usize) -> Vec<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    let mut e = vec![T::zero(); upto + 1];
    e[0] = T::one();
    for (seen, x) in values.iter().enumerate() {
        for j in (1..=upto.min(seen + 1)).rev() {
            e[j] = &e[j] + &(&e[j - 1] * x);
        }
    }
    e
}

/// Generalized binomial `x(x−1)⋯(x−j+1)/j!` for any integer `x`.
pub fn binomial(x: &BigInt, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j {
        num *= x - t;
        den *= t + 1;
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

fn binom_i(x: i64, j: i64) -> BigRational {
    BigRational::from_integer(binomial(&BigInt::from(x), j))
}

/// Stirling polynomials `S_0 … S_max_degree`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    polys: Vec<RatPoly>,
}

impl StirlingTable {
    pub fn new(max_degree: usize) -> Self {
        let polys = (0..=max_degree).map(Self::build).collect();
        Self { polys }
    }

    fn build(j: usize) -> RatPoly {
        let points: Vec<(BigRational, BigRational)> = (j + 1..=2 * j + 1)
            .map(|ell| {
                let ones: Vec<BigInt> = (1..=ell as i64).map(BigInt::from).collect();
                let sigma = elementary_symmetric(&ones, j);
                let choose = binomial(&BigInt::from(ell), j as i64);
                (
                    BigRational::from_integer(BigInt::from(ell)),
                    BigRational::new(sigma, choose),
                )
            })
            .collect();
        let mut acc = vec![BigRational::zero(); j + 1];
        for (p, (xp, yp)) in points.iter().enumerate() {
            let mut basis = RatPoly(vec![BigRational::one()]);
            let mut denom = BigRational::one();
            for (q, (xq, _)) in points.iter().enumerate() {
                if p != q {
                    basis = basis.mul_linear(xq);
                    denom *= xp - xq;
                }
            }
            let scale = yp / denom;
            for (a, b) in acc.iter_mut().zip(basis.0) {
                *a += b * &scale;
            }
        }
        RatPoly(acc)
    }

    /// Process-wide table holding at least `S_0 … S_max_degree`.
    pub fn shared(max_degree: usize) -> Arc<StirlingTable> {
        static SHARED: OnceLock<RwLock<Arc<StirlingTable>>> = OnceLock::new();
        let lock = SHARED.get_or_init(|| RwLock::new(Arc::new(StirlingTable::new(16))));
        {
            let table = lock.read().expect("stirling table lock");
            if table.max_degree() >= max_degree {
                return Arc::clone(&table);
            }
        }
        let mut table = lock.write().expect("stirling table lock");
        if table.max_degree() < max_degree {
            let target = max_degree.max(2 * table.max_degree());
            *table = Arc::new(StirlingTable::new(target));
        }
        Arc::clone(&table)
    }

    pub fn max_degree(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn poly(&self, j: usize) -> &RatPoly {
        &self.polys[j]
    }

    pub fn polys(&self) -> &[RatPoly] {
        &self.polys
    }

    /// `S_j(x)`.
    pub fn eval(&self, j: usize, x: i64) -> BigRational {
        self.polys[j].eval_int(x)
    }

    /// `c_j(x) = binom(x, j)·S_j(x)`.
    pub fn c(&self, j: usize, x: i64) -> BigRational {
        binom_i(x, j as i64) * self.eval(j, x)
    }

    /// Checks `binom(ℓ, j)·S_j(ℓ) = σ_j(ℓ, …, 1)` for `1 ≤ ℓ ≤ 2·max+2`.
    pub fn check_definition(&self) -> bool {
        let top = 2 * self.max_degree() + 2;
        (1..=top).all(|ell| {
            let ones: Vec<BigInt> = (1..=ell as i64).map(BigInt::from).collect();
            let sigma = elementary_symmetric_all(&ones, self.max_degree());
            (0..=self.max_degree()).all(|j| {
                self.c(j, ell as i64) == BigRational::from_integer(sigma[j].clone())
            })
        })
    }
}

/// A fresh table of `S_0 … S_max_degree`.
pub fn stirling_table(max_degree: usize) -> StirlingTable {
    StirlingTable::new(max_degree)
}

/// `γ(m, i) = binom(k−i, m−i)·S_{m−i}(m−k−1)`, an integer for every integer `k`.
pub fn gamma_coefficient(table: &StirlingTable, m: usize, i: usize, k: i64) -> BigInt {
    assert!(i <= m, "gamma needs i <= m (got i={i}, m={m})");
    let j = m - i;
    let value = binom_i(k - i as i64, j as i64) * table.eval(j, m as i64 - k - 1);
    assert!(
        value.is_integer(),
        "gamma({m},{i}) with k={k} is not an integer: {value}"
    );
    value.to_integer()
}

/// `E_m(λ) = Σ_i γ(m, i)·σ_i(a_1, …, a_k)` from the first-row hook lengths.
pub fn excitation_row_stirling(hooks: &[usize], m: usize) -> BigInt {
    let k = hooks.len() as i64;
    let table = StirlingTable::shared(m);
    let values: Vec<BigInt> = hooks.iter().map(|&a| BigInt::from(a)).collect();
    let sigma = elementary_symmetric_all(&values, m);
    let total: BigInt = (0..=m)
        .map(|i| gamma_coefficient(&table, m, i, k) * &sigma[i])
        .sum();
    debug_assert!(!total.is_negative());
    total
}

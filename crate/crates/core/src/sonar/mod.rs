//! Recovering a partition from its row excitation factors.
//!
//! Single SONAR reads `k = λ_1` off the first zero of `{E_m(λ)}`, solves the
//! unit lower-triangular system `A_{k+1}·σ = E` for the elementary symmetric
//! functions of the first-row hooks, factors `A(X) = Π (X − a_i)` over the
//! positive integers and rebuilds `λ` from its first-row hooks.
//!
//! Double SONAR ([`double_sonar_reconstruct`]) recovers a hidden partition of
//! `n` from skew counts `N(λ/μ)` restricted to `|μ| ≤ ⌊2n/log n⌋`.

mod budget;
mod double;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::excitation::{elementary_symmetric_all, excitation_row_stirling, gamma_coefficient, StirlingTable};
use crate::partition::Partition;

pub use budget::{ln_bracket, query_budget};
pub use double::{
    double_sonar_reconstruct, double_sonar_report, find_blocking_rectangle, DoubleSonarReport, MinorOracle,
    SplitFrame,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SonarError {
    #[error("malformed E-sequence: {0}")]
    MalformedSequence(String),
    #[error("E-sequence does not come from a partition: {0}")]
    NotFromPartition(String),
    #[error("query {query} of size {size} exceeds the budget {budget}")]
    BudgetViolation {
        query: Partition,
        size: usize,
        budget: usize,
    },
    #[error("inconsistent oracle: {0}")]
    InconsistentOracle(String),
}

/// `E_0(λ), E_1(λ), …`; logically zero past the stored values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ESequence(Vec<BigUint>);

impl ESequence {
    pub fn new(values: Vec<BigUint>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[BigUint] {
        &self.0
    }

    pub fn get(&self, m: usize) -> BigUint {
        self.0.get(m).cloned().unwrap_or_default()
    }
}

impl fmt::Display for ESequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for ESequence {
    type Err = SonarError;

    /// Comma-separated decimals, e.g. `1,8,28,40`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .enumerate()
            .map(|(i, tok)| {
                tok.trim().parse::<BigUint>().map_err(|_| {
                    SonarError::MalformedSequence(format!("entry {i} ({:?}) is not a non-negative integer", tok.trim()))
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ESequence)
    }
}

/// `E_0(λ), …, E_{λ_1}(λ)` followed by one zero, via the Stirling form.
pub fn e_sequence(lambda: &Partition) -> ESequence {
    let hooks = lambda.first_row_hooks();
    let mut values: Vec<BigUint> = (0..=hooks.len())
        .map(|m| {
            excitation_row_stirling(&hooks, m)
                .to_biguint()
                .expect("row excitation factors are non-negative")
        })
        .collect();
    values.push(BigUint::zero());
    ESequence(values)
}

/// `k` such that `E_m > 0` exactly for `m ≤ k`.
pub fn detect_k(seq: &ESequence) -> Result<usize, SonarError> {
    let values = seq.values();
    if values.first() != Some(&BigUint::one()) {
        return Err(SonarError::MalformedSequence("E_0 must be 1".into()));
    }
    let first_zero = values.iter().position(Zero::is_zero).unwrap_or(values.len());
    if let Some(bad) = values[first_zero..].iter().position(|v| !v.is_zero()) {
        return Err(SonarError::MalformedSequence(format!(
            "nonzero entry at index {} after a zero at index {first_zero}",
            first_zero + bad
        )));
    }
    Ok(first_zero - 1)
}

/// The unit lower-triangular matrix `A_{k+1}` with `α_{i,j} = γ(i−1, j−1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SonarMatrix {
    k: usize,
    rows: Vec<Vec<BigInt>>,
}

impl SonarMatrix {
    pub fn new(k: usize) -> Self {
        let table = StirlingTable::shared(k);
        let rows = (0..=k)
            .map(|m| {
                (0..=k)
                    .map(|i| {
                        if i <= m {
                            gamma_coefficient(&table, m, i, k as i64)
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self { k, rows }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Solves `A x = rhs` by forward substitution; the diagonal is all ones.
    pub fn solve(&self, rhs: &[BigInt]) -> Vec<BigInt> {
        let mut x: Vec<BigInt> = Vec::with_capacity(rhs.len());
        for (m, row) in self.rows.iter().enumerate() {
            debug_assert!(row[m].is_one());
            let partial: BigInt = row[..m].iter().zip(&x).map(|(a, b)| a * b).sum();
            x.push(&rhs[m] - partial);
        }
        x
    }

    /// Product of the diagonal, which is the determinant of a triangular matrix.
    pub fn determinant(&self) -> BigInt {
        (0..=self.k).map(|i| self.rows[i][i].clone()).product()
    }

    /// Integer inverse, column by column.
    pub fn inverse(&self) -> Vec<Vec<BigInt>> {
        let size = self.k + 1;
        let mut inv = vec![vec![BigInt::zero(); size]; size];
        for col in 0..size {
            let mut e = vec![BigInt::zero(); size];
            e[col] = BigInt::one();
            for (row, value) in self.solve(&e).into_iter().enumerate() {
                inv[row][col] = value;
            }
        }
        inv
    }
}

pub fn sonar_matrix(k: usize) -> SonarMatrix {
    SonarMatrix::new(k)
}

/// `σ_0, …, σ_k` of the first-row hooks from `E_0, …, E_k`.
pub fn recover_sigma(seq: &ESequence, k: usize) -> Result<Vec<BigInt>, SonarError> {
    let detected = detect_k(seq)?;
    if detected != k {
        return Err(SonarError::MalformedSequence(format!("sequence has k={detected}, not {k}")));
    }
    let rhs: Vec<BigInt> = (0..=k).map(|m| BigInt::from(seq.get(m))).collect();
    Ok(SonarMatrix::new(k).solve(&rhs))
}

/// The roots `a_1 > … > a_k` of `A(X) = Σ (−1)^i σ_i X^{k−i}`, which must
/// be distinct positive integers.
pub fn integer_roots_descending(sigma: &[BigInt]) -> Result<Vec<usize>, SonarError> {
    let reject = |msg: String| Err(SonarError::NotFromPartition(msg));
    if sigma.first().map(|s| s.is_one()) != Some(true) {
        return reject("sigma_0 must be 1".into());
    }
    let k = sigma.len() - 1;
    if k == 0 {
        return Ok(Vec::new());
    }
    // monic coefficients, highest degree first
    let mut poly: Vec<BigInt> = sigma
        .iter()
        .enumerate()
        .map(|(i, s)| if i % 2 == 0 { s.clone() } else { -s })
        .collect();
    // every root is positive, so each is at most the root sum σ_1
    let Some(bound) = sigma[1].to_u64().filter(|&b| b <= 100_000_000) else {
        return reject(format!("root bound sigma_1 = {} is out of range", sigma[1]));
    };
    let mut roots = Vec::with_capacity(k);
    let mut x = 1u64;
    while poly.len() > 1 && x <= bound {
        let constant = poly.last().expect("nonempty");
        let candidate = BigInt::from(x);
        if constant.is_zero() {
            return reject("zero is a root".into());
        }
        if constant.is_multiple_of(&candidate) {
            // synthetic division by (X − x)
            let mut quotient = Vec::with_capacity(poly.len() - 1);
            let mut acc = BigInt::zero();
            for c in &poly {
                acc = acc * &candidate + c;
                quotient.push(acc.clone());
            }
            if acc.is_zero() {
                quotient.pop();
                poly = quotient;
                roots.push(x as usize);
            }
        }
        x += 1;
    }
    if roots.len() != k {
        return reject(format!("found only {} of {k} positive integer roots", roots.len()));
    }
    roots.reverse();
    let values: Vec<BigInt> = roots.iter().map(|&a| BigInt::from(a)).collect();
    if elementary_symmetric_all(&values, k) != sigma {
        return reject("roots do not reproduce sigma".into());
    }
    if roots.windows(2).any(|w| w[0] <= w[1]) {
        return reject("repeated root".into());
    }
    Ok(roots)
}

/// Reconstructs `λ` from `{E_m(λ)}`.
pub fn sonar_reconstruct(seq: &ESequence) -> Result<Partition, SonarError> {
    Ok(sonar_trace(seq)?.partition)
}

/// Intermediate values of a single SONAR run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SonarTrace {
    pub k: usize,
    pub sigma: Vec<BigInt>,
    pub hooks: Vec<usize>,
    pub partition: Partition,
}

pub fn sonar_trace(seq: &ESequence) -> Result<SonarTrace, SonarError> {
    let k = detect_k(seq)?;
    let sigma = recover_sigma(seq, k)?;
    if sigma.iter().any(|s| s.sign() == Sign::Minus) {
        return Err(SonarError::NotFromPartition("negative elementary symmetric value".into()));
    }
    let hooks = integer_roots_descending(&sigma)?;
    let partition =
        Partition::from_first_row_hooks(&hooks).map_err(|e| SonarError::NotFromPartition(e.to_string()))?;
    Ok(SonarTrace {
        k,
        sigma,
        hooks,
        partition,
    })
}

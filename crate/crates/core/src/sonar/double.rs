//! Double SONAR: reconstruction from skew counts of small minors.

use std::fmt;

use num_bigint::BigUint;
use num_integer::{binomial, Integer};
use num_traits::{One, ToPrimitive, Zero};

use super::{query_budget, sonar_reconstruct, ESequence, SonarError};
use crate::partition::Partition;
use crate::syt::{count_skew_syt_naruse, falling_factorial};

type CountSource<'a> = Box<dyn FnMut(&Partition) -> BigUint + Send + 'a>;

/// Answers `N(λ/μ)` for `|μ| ≤ budget` and logs every query.
pub struct MinorOracle<'a> {
    n: usize,
    budget: usize,
    source: CountSource<'a>,
    log: Vec<Partition>,
    violations: Vec<Partition>,
}

impl fmt::Debug for MinorOracle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MinorOracle")
            .field("n", &self.n)
            .field("budget", &self.budget)
            .field("queries", &self.log.len())
            .field("violations", &self.violations)
            .finish()
    }
}

impl<'a> MinorOracle<'a> {
    /// Oracle backed by a known partition, with the standard budget.
    pub fn for_hidden(hidden: &Partition) -> MinorOracle<'static> {
        let n = hidden.size();
        let budget = if n >= 2 { query_budget(n) } else { n };
        let hidden = hidden.clone();
        MinorOracle::with_source(n, budget, move |mu| count_skew_syt_naruse(&hidden, mu))
    }

    pub fn with_source(n: usize, budget: usize, source: impl FnMut(&Partition) -> BigUint + Send + 'a) -> Self {
        Self {
            n,
            budget,
            source: Box::new(source),
            log: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn query(&mut self, mu: &Partition) -> Result<BigUint, SonarError> {
        if mu.size() > self.budget {
            self.violations.push(mu.clone());
            return Err(SonarError::BudgetViolation {
                query: mu.clone(),
                size: mu.size(),
                budget: self.budget,
            });
        }
        self.log.push(mu.clone());
        Ok((self.source)(mu))
    }

    pub fn query_log(&self) -> &[Partition] {
        &self.log
    }

    pub fn violations(&self) -> &[Partition] {
        &self.violations
    }

    pub fn max_query_size(&self) -> usize {
        self.log.iter().map(Partition::size).max().unwrap_or(0)
    }
}

/// The smallest rectangle `[a^b]` (by area, then by `b`) that is not a
/// minor of the hidden partition, checked to have `[a^{b−1}, a−1]` as one.
pub fn find_blocking_rectangle(oracle: &mut MinorOracle<'_>) -> Result<Partition, SonarError> {
    for area in 1..=oracle.budget() {
        for b in (1..=area).filter(|&b| area.is_multiple_of(b)) {
            let rho = Partition::rectangle(area / b, b);
            if oracle.query(&rho)?.is_zero() {
                let a = area / b;
                let mut parts = vec![a; b - 1];
                parts.push(a - 1);
                let below = Partition::from_unsorted(parts);
                if oracle.query(&below)?.is_zero() {
                    return Err(SonarError::InconsistentOracle(format!(
                        "{below} is not a minor although every smaller rectangle is"
                    )));
                }
                return Ok(rho);
            }
        }
    }
    Err(SonarError::InconsistentOracle(format!(
        "every rectangle of area at most {} is a minor",
        oracle.budget()
    )))
}

/// Splitting of `λ` along a blocking rectangle `[a^b]`: the block `ξ =
/// [(a−1)^{b−1}]`, the part `λR` to its right and the part `λB` below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitFrame {
    pub width: usize,
    pub rows: usize,
    pub xi: Partition,
    pub lambda_r: Partition,
    pub lambda_b: Partition,
}

impl SplitFrame {
    pub fn split(lambda: &Partition, width: usize, rows: usize) -> Self {
        assert!(width >= 1 && rows >= 1);
        let parts = lambda.parts();
        let top = parts.len().min(rows - 1);
        let right = parts[..top].iter().map(|&p| p.saturating_sub(width - 1)).collect();
        let below = parts[top..].to_vec();
        Self {
            width,
            rows,
            xi: Partition::rectangle(width - 1, rows - 1),
            lambda_r: Partition::from_unsorted(right),
            lambda_b: Partition::from_unsorted(below),
        }
    }

    pub fn n_r(&self) -> usize {
        self.lambda_r.size()
    }

    pub fn n_b(&self) -> usize {
        self.lambda_b.size()
    }

    /// Whether `λR` spans all `b−1` rows and `λB` fits under `a−1` columns,
    /// which is what a blocking rectangle guarantees.
    pub fn is_tight(&self) -> bool {
        self.lambda_r.len() == self.rows - 1 && self.lambda_b.first() < self.width
    }

    pub fn reassemble(&self) -> Partition {
        let mut parts: Vec<usize> = (1..self.rows)
            .map(|i| self.width - 1 + self.lambda_r.part(i))
            .collect();
        parts.extend_from_slice(self.lambda_b.parts());
        Partition::from_unsorted(parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Trivial sizes, answered without queries.
    Trivial,
    /// `b = 1`: single SONAR on `λ`.
    Row,
    /// `a = 1`: single SONAR on `λᵗ`.
    Column,
    /// Single SONAR on `(λR)ᵗ` and on `λB`.
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSonarReport {
    pub partition: Partition,
    pub rectangle: Option<Partition>,
    pub branch: Branch,
    pub frame: Option<SplitFrame>,
}

fn exact_quotient(num: BigUint, den: &BigUint, what: &str) -> Result<BigUint, SonarError> {
    if den.is_zero() {
        return Err(SonarError::InconsistentOracle(format!("zero denominator while computing {what}")));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(SonarError::InconsistentOracle(format!("{what} is not an integer")));
    }
    Ok(q)
}

fn e_sequence_from(values: Vec<BigUint>) -> ESequence {
    let mut values = values;
    values.push(BigUint::zero());
    ESequence::new(values)
}

/// Single SONAR on `λ` (or `λᵗ` when `transpose`), reading `E_m` off
/// `N(λ/[m])` (or `N(λ/[1^m])`) for `m < limit`.
fn one_sided(oracle: &mut MinorOracle<'_>, limit: usize, transpose: bool) -> Result<Partition, SonarError> {
    let n = oracle.n();
    let total = oracle.query(&Partition::empty())?;
    let mut values = Vec::with_capacity(limit);
    values.push(BigUint::one());
    for m in 1..limit {
        let mu = if transpose { Partition::column(m) } else { Partition::row(m) };
        let count = oracle.query(&mu)?;
        values.push(exact_quotient(count * falling_factorial(n, m), &total, "a row excitation factor")?);
    }
    let shape = sonar_reconstruct(&e_sequence_from(values))?;
    Ok(if transpose { shape.conjugate() } else { shape })
}

fn split_branch(oracle: &mut MinorOracle<'_>, a: usize, b: usize) -> Result<SplitFrame, SonarError> {
    let n = oracle.n();
    let rho = |u: usize, v: usize| {
        let mut parts = vec![a; u];
        parts.extend(std::iter::repeat_n(a - 1, b - u - 1));
        parts.push(v);
        Partition::from_unsorted(parts)
    };
    let n0 = n - (a - 1) * (b - 1);
    let base = oracle.query(&rho(0, 0))?;
    let one_right = oracle.query(&rho(1, 0))?;
    let n_r = exact_quotient(one_right * BigUint::from(n0), &base, "the size of the right part")?
        .to_usize()
        .filter(|&s| s <= n0)
        .ok_or_else(|| SonarError::InconsistentOracle("right part larger than the remainder".into()))?;
    let n_b = n0 - n_r;
    let split_ways: BigUint = binomial(BigUint::from(n0), BigUint::from(n_r));

    let mut right = Vec::with_capacity(b);
    for u in 0..b {
        let count = oracle.query(&rho(u, 0))?;
        let den = binomial(BigUint::from(n0 - u), BigUint::from(n_r.saturating_sub(u))) * &base;
        if u > n_r {
            return Err(SonarError::InconsistentOracle("right part has too few cells".into()));
        }
        let num = falling_factorial(n_r, u) * count * &split_ways;
        right.push(exact_quotient(num, &den, "a right-part excitation factor")?);
    }
    let mut below = Vec::with_capacity(a);
    for v in 0..a {
        let count = oracle.query(&rho(0, v))?;
        if v > n_b {
            if !count.is_zero() {
                return Err(SonarError::InconsistentOracle("lower part has too few cells".into()));
            }
            below.push(BigUint::zero());
            continue;
        }
        let den = binomial(BigUint::from(n0 - v), BigUint::from(n_r)) * &base;
        let num = falling_factorial(n_b, v) * count * &split_ways;
        below.push(exact_quotient(num, &den, "a lower-part excitation factor")?);
    }

    let lambda_r = sonar_reconstruct(&e_sequence_from(right))?.conjugate();
    let lambda_b = sonar_reconstruct(&e_sequence_from(below))?;
    let frame = SplitFrame {
        width: a,
        rows: b,
        xi: Partition::rectangle(a - 1, b - 1),
        lambda_r,
        lambda_b,
    };
    if !frame.is_tight() || frame.n_r() != n_r || frame.n_b() != n_b {
        return Err(SonarError::InconsistentOracle("recovered pieces do not fit the rectangle".into()));
    }
    Ok(frame)
}

/// Full reconstruction with the intermediate data.
pub fn double_sonar_report(oracle: &mut MinorOracle<'_>) -> Result<DoubleSonarReport, SonarError> {
    let n = oracle.n();
    if n < 2 {
        return Ok(DoubleSonarReport {
            partition: Partition::row(n),
            rectangle: None,
            branch: Branch::Trivial,
            frame: None,
        });
    }
    let rectangle = find_blocking_rectangle(oracle)?;
    let (a, b) = (rectangle.first(), rectangle.len());
    let (partition, branch, frame) = if b == 1 {
        (one_sided(oracle, a, false)?, Branch::Row, None)
    } else if a == 1 {
        (one_sided(oracle, b, true)?, Branch::Column, None)
    } else {
        let frame = split_branch(oracle, a, b)?;
        (frame.reassemble(), Branch::Split, Some(frame))
    };
    if partition.size() != n {
        return Err(SonarError::InconsistentOracle(format!(
            "recovered {partition} has size {}, expected {n}",
            partition.size()
        )));
    }
    Ok(DoubleSonarReport {
        partition,
        rectangle: Some(rectangle),
        branch,
        frame,
    })
}

/// Reconstructs the hidden partition of `oracle.n()`.
pub fn double_sonar_reconstruct(oracle: &mut MinorOracle<'_>) -> Result<Partition, SonarError> {
    Ok(double_sonar_report(oracle)?.partition)
}

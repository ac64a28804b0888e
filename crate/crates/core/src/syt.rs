//! Counting standard Young tableaux of straight and skew shapes, and the
//! multiset of `k`-minors weighted by those counts.

use std::fmt;
use std::num::NonZeroUsize;

use lru::LruCache;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::excitation::excitation_factor_with;
use crate::partition::{Cell, HookGrid, Partition, PartitionError};

/// Default bound on the number of memoized skew counts kept by a [`SkewCounter`].
pub const DEFAULT_MEMO_CAPACITY: usize = 1 << 16;

/// Largest skew size [`enumerate_skew_syt`] accepts unless told otherwise.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SytError {
    #[error("inner shape {inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("skew shape has {size} cells, more than the enumeration cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("count mismatch for {shape}: dp={dp} naruse={naruse}")]
    CountMismatch {
        shape: String,
        dp: BigUint,
        naruse: BigUint,
    },
    #[error("malformed multiset text at line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// A skew shape `outer / inner` with `inner ≤ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, SytError> {
        if !inner.is_minor_of(&outer) {
            return Err(SytError::NotContained { outer, inner });
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of `outer` not in `inner`, row-major.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.cells().filter(|c| !self.inner.contains_cell(*c))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// `n (n−1) ⋯ (n−m+1)`.
pub fn falling_factorial(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    (n - m + 1..=n).fold(BigUint::one(), |acc, v| acc * v)
}

fn exact_div(num: &BigUint, den: &BigUint, what: &str) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division in {what}: {num} / {den}");
    q
}

/// `N(λ) = n! / H_λ` by the hook length formula.
pub fn count_syt(lambda: &Partition) -> BigUint {
    count_syt_with(&HookGrid::new(lambda))
}

fn count_syt_with(hooks: &HookGrid) -> BigUint {
    let n = hooks.shape().size();
    exact_div(&falling_factorial(n, n), &hooks.product(), "hook length formula")
}

/// Memoized Young-lattice path counter for `N(outer / inner)`.
///
/// Each instance owns its memo; concurrent callers use one counter each.
pub struct SkewCounter {
    memo: LruCache<(Partition, Partition), BigUint>,
}

impl Default for SkewCounter {
    fn default() -> Self {
        Self::with_capacity(DEFAULT_MEMO_CAPACITY)
    }
}

impl SkewCounter {
    pub fn with_capacity(capacity: usize) -> Self {
        let cap = NonZeroUsize::new(capacity.max(1)).expect("positive");
        Self {
            memo: LruCache::new(cap),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Paths from `inner` up to `outer`: recurse on the corners of `outer`
    /// whose removal keeps `inner` inside. Zero when `inner ⊄ outer`.
    pub fn count(&mut self, outer: &Partition, inner: &Partition) -> BigUint {
        if !inner.is_minor_of(outer) {
            return BigUint::zero();
        }
        if outer.size() == inner.size() {
            return BigUint::one();
        }
        let key = (outer.clone(), inner.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for corner in outer.corners() {
            if outer.part(corner.row) > inner.part(corner.row) {
                total += self.count(&outer.without_corner(corner.row), inner);
            }
        }
        self.memo.put(key, total.clone());
        total
    }
}

/// `N(outer / inner)` by Young-lattice path counting.
pub fn count_skew_syt_dp(outer: &Partition, inner: &Partition) -> BigUint {
    SkewCounter::default().count(outer, inner)
}

/// `N(λ/μ) = N(λ)·E_μ(λ) / (n (n−1) ⋯ (n−m+1))`.
pub fn count_skew_syt_naruse(outer: &Partition, inner: &Partition) -> BigUint {
    if !inner.is_minor_of(outer) {
        return BigUint::zero();
    }
    let hooks = HookGrid::new(outer);
    naruse_with(&hooks, &count_syt_with(&hooks), inner)
}

fn naruse_with(hooks: &HookGrid, straight: &BigUint, inner: &Partition) -> BigUint {
    if !inner.is_minor_of(hooks.shape()) {
        return BigUint::zero();
    }
    let n = hooks.shape().size();
    let factor = excitation_factor_with(hooks, inner);
    exact_div(
        &(straight * factor),
        &falling_factorial(n, inner.size()),
        "skew hook length formula",
    )
}

/// `N(λ/τ)` for every `τ` in `inners`, sharing the hook grid and `N(λ)`.
pub fn naruse_counts(outer: &Partition, inners: &[Partition]) -> Vec<BigUint> {
    let hooks = HookGrid::new(outer);
    let straight = count_syt_with(&hooks);
    inners.iter().map(|t| naruse_with(&hooks, &straight, t)).collect()
}

/// A standard filling of a skew shape: each cell with its label `1..=size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    pub entries: Vec<(Cell, usize)>,
}

impl SkewTableau {
    pub fn label(&self, cell: Cell) -> Option<usize> {
        self.entries.iter().find(|(c, _)| *c == cell).map(|&(_, l)| l)
    }
}

/// Lists every standard filling of `shape`; refuses shapes larger than `cap`.
pub fn enumerate_skew_syt(shape: &SkewShape, cap: usize) -> Result<Vec<SkewTableau>, SytError> {
    if shape.size() > cap {
        return Err(SytError::TooLarge {
            size: shape.size(),
            cap,
        });
    }
    let mut out = Vec::new();
    let mut placed = Vec::with_capacity(shape.size());
    fill(shape, shape.inner.clone(), &mut placed, &mut out);
    Ok(out)
}

fn fill(shape: &SkewShape, current: Partition, placed: &mut Vec<(Cell, usize)>, out: &mut Vec<SkewTableau>) {
    if current.size() == shape.outer.size() {
        let mut entries = placed.clone();
        entries.sort();
        out.push(SkewTableau { entries });
        return;
    }
    for cell in current.addable_cells() {
        if shape.outer.contains_cell(cell) {
            placed.push((cell, placed.len() + 1));
            fill(shape, current.with_cell_in_row(cell.row), placed, out);
            placed.pop();
        }
    }
}

/// How [`minor_multiset_with`] computes multiplicities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Naruse,
    Dp,
    /// Compute both and fail on disagreement.
    Both,
}

/// `M̂_k(λ)`: the `k`-minors of `λ` with multiplicity `N(λ/μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorMultiset {
    n: usize,
    k: usize,
    source: Partition,
    entries: Vec<(Partition, BigUint)>,
}

impl MinorMultiset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    /// `(minor, multiplicity)` pairs in enumeration order.
    pub fn entries(&self) -> &[(Partition, BigUint)] {
        &self.entries
    }

    pub fn multiplicity(&self, minor: &Partition) -> BigUint {
        self.entries
            .iter()
            .find(|(m, _)| m == minor)
            .map_or_else(BigUint::zero, |(_, c)| c.clone())
    }

    /// Equality as multisets, ignoring which partition they came from.
    pub fn same_multiset(&self, other: &MinorMultiset) -> bool {
        self.entries == other.entries
    }

    /// Header `n=<n> k=<k> source=<λ>` then `<minor> <count>` per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("n={} k={} source={}\n", self.n, self.k, self.source);
        for (minor, count) in &self.entries {
            s.push_str(&format!("{minor} {count}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, SytError> {
        let malformed = |line: usize, message: &str| SytError::Malformed {
            line,
            message: message.to_string(),
        };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| malformed(1, "missing header"))?;
        let mut n = None;
        let mut k = None;
        let mut source = None;
        for field in header.split_whitespace() {
            let (key, value) = field.split_once('=').ok_or_else(|| malformed(1, "expected key=value"))?;
            match key {
                "n" => n = value.parse::<usize>().ok(),
                "k" => k = value.parse::<usize>().ok(),
                "source" => source = value.parse::<Partition>().ok(),
                _ => return Err(malformed(1, "unknown header field")),
            }
        }
        let (Some(n), Some(k), Some(source)) = (n, k, source) else {
            return Err(malformed(1, "header needs n, k and source"));
        };
        let mut entries = Vec::new();
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let (minor, count) = line
                .trim()
                .rsplit_once(' ')
                .ok_or_else(|| malformed(idx + 1, "expected '<partition> <count>'"))?;
            let minor: Partition = minor
                .parse()
                .map_err(|e: PartitionError| malformed(idx + 1, &e.to_string()))?;
            let count: BigUint = count
                .parse()
                .map_err(|_| malformed(idx + 1, "count is not a decimal integer"))?;
            entries.push((minor, count));
        }
        Ok(Self {
            n,
            k,
            source,
            entries,
        })
    }
}

/// `M̂_k(λ)` with multiplicities from the skew hook length formula.
pub fn minor_multiset(lambda: &Partition, k: usize) -> MinorMultiset {
    minor_multiset_with(lambda, k, CountMethod::Naruse).expect("naruse-only never mismatches")
}

pub fn minor_multiset_with(
    lambda: &Partition,
    k: usize,
    method: CountMethod,
) -> Result<MinorMultiset, SytError> {
    let minors = lambda.minors(k);
    let naruse = || naruse_counts(lambda, &minors);
    let dp = || {
        let mut counter = SkewCounter::default();
        minors.iter().map(|m| counter.count(lambda, m)).collect::<Vec<_>>()
    };
    let counts = match method {
        CountMethod::Naruse => naruse(),
        CountMethod::Dp => dp(),
        CountMethod::Both => {
            let a = naruse();
            let b = dp();
            for ((minor, x), y) in minors.iter().zip(&a).zip(&b) {
                if x != y {
                    return Err(SytError::CountMismatch {
                        shape: format!("{lambda}/{minor}"),
                        dp: y.clone(),
                        naruse: x.clone(),
                    });
                }
            }
            a
        }
    };
    let entries = minors
        .into_iter()
        .zip(counts)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(MinorMultiset {
        n: lambda.size(),
        k,
        source: lambda.clone(),
        entries,
    })
}

/// SHA-256 of a canonical serialization; used only as a collision prefilter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(pub [u8; 32]);

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fingerprint({self})")
    }
}

/// Digest of `<minor> <count>` lines in enumeration order, skipping zero
/// counts. The header is not hashed, so equal multisets from different
/// sources agree.
pub fn fingerprint_entries<'a>(entries: impl IntoIterator<Item = (&'a Partition, &'a BigUint)>) -> Fingerprint {
    let mut hasher = Sha256::new();
    for (minor, count) in entries {
        if count.is_zero() {
            continue;
        }
        hasher.update(minor.to_string().as_bytes());
        hasher.update(b" ");
        hasher.update(count.to_str_radix(10).as_bytes());
        hasher.update(b"\n");
    }
    Fingerprint(hasher.finalize().into())
}

pub fn multiset_fingerprint(m: &MinorMultiset) -> Fingerprint {
    fingerprint_entries(m.entries.iter().map(|(p, c)| (p, c)))
}

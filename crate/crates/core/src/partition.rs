//! Integer partitions, Young-diagram geometry and enumeration.
//!
//! A [`Partition`] is stored canonically as a weakly decreasing list of
//! positive parts. Cells use 1-based matrix coordinates: `(i, j)` is the
//! cell in row `i`, column `j`, and it lies inside `λ` iff `j ≤ λ_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// A partition of a non-negative integer.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

/// Errors from building or parsing a partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts are not weakly decreasing at index {index}")]
    NotDecreasing { index: usize },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("first-row hooks {hooks:?} are not realizable: {reason}")]
    NotRealizable { hooks: Vec<usize>, reason: String },
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing { index: index + 1 });
        }
        let size = parts.iter().sum();
        Ok(Self { parts, size })
    }

    /// Sorts arbitrary parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    /// The rectangle with `rows` rows of length `width`.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 || rows == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![width; rows],
            size: width * rows,
        }
    }

    /// The single-row partition `[m]`.
    pub fn row(m: usize) -> Self {
        Self::rectangle(m, 1)
    }

    /// The single-column partition `[1, …, 1]` with `m` parts.
    pub fn column(m: usize) -> Self {
        Self::rectangle(1, m)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero beyond the last part and for `i = 0`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_1`, the length of the first row.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// All cells, row-major.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Self {
        let width = self.first();
        let parts: Vec<usize> = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self {
            parts,
            size: self.size,
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Componentwise containment `self ≤ other`; sizes are not compared.
    pub fn is_minor_of(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Largest `m` with `[m, …, m]` (m rows) contained in `self`.
    pub fn durfee_rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Arm + leg + 1 of a cell inside the diagram.
    pub fn hook(&self, cell: Cell) -> usize {
        debug_assert!(self.contains_cell(cell), "cell {cell} outside {self}");
        let arm = self.part(cell.row) - cell.col;
        let leg = self.parts[cell.row..]
            .iter()
            .take_while(|&&p| p >= cell.col)
            .count();
        arm + leg + 1
    }

    /// Hook lengths along the first row, `a_1 > a_2 > … > a_k` with `k = λ_1`.
    pub fn first_row_hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let k = self.first();
        (1..=k).map(|j| k - j + conj.part(j)).collect()
    }

    /// Inverse of [`Partition::first_row_hooks`]: column lengths are
    /// `(λᵗ)_j = a_j − k + j`.
    pub fn from_first_row_hooks(hooks: &[usize]) -> Result<Self, PartitionError> {
        let k = hooks.len();
        let reject = |reason: String| PartitionError::NotRealizable {
            hooks: hooks.to_vec(),
            reason,
        };
        let mut columns = Vec::with_capacity(k);
        for (idx, &a) in hooks.iter().enumerate() {
            let j = idx + 1;
            let len = (a + j)
                .checked_sub(k)
                .filter(|&c| c >= 1)
                .ok_or_else(|| reject(format!("column {j} would have no cells")))?;
            if let Some(&prev) = columns.last() {
                if len > prev {
                    return Err(reject(format!("column {j} is longer than column {}", j - 1)));
                }
            }
            columns.push(len);
        }
        let conj = Self::new(columns).expect("columns checked to be decreasing");
        Ok(conj.conjugate())
    }

    /// Removable corner cells, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// Cells that may be added keeping the shape a partition, top to bottom.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    /// The partition with the corner in `row` removed.
    pub fn without_corner(&self, row: usize) -> Self {
        debug_assert!(self.part(row) > self.part(row + 1));
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Self {
            parts,
            size: self.size - 1,
        }
    }

    /// The partition with a cell added at the end of `row`.
    pub fn with_cell_in_row(&self, row: usize) -> Self {
        debug_assert!(row == 1 || self.part(row - 1) > self.part(row));
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Self {
            parts,
            size: self.size + 1,
        }
    }

    /// `Add(π)`: every partition having `self` as a 1-minor.
    pub fn addable_successors(&self) -> Vec<Partition> {
        self.addable_cells()
            .into_iter()
            .map(|c| self.with_cell_in_row(c.row))
            .collect()
    }

    /// Every `k`-minor of `self` (contained partitions of size `|self| − k`)
    /// in reverse lexicographic order. Empty when `k > |self|`.
    pub fn minors(&self, k: usize) -> Vec<Partition> {
        let Some(target) = self.size.checked_sub(k) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.minors_rec(0, target, usize::MAX, &mut current, &mut out);
        out
    }

    fn minors_rec(
        &self,
        row: usize,
        remaining: usize,
        cap: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()).expect("built decreasing"));
            return;
        }
        if row == self.len() {
            return;
        }
        let hi = self.parts[row].min(cap).min(remaining);
        for part in (1..=hi).rev() {
            // rows below can hold at most min(part, λ_i) each
            let room: usize = self.parts[row + 1..].iter().map(|&p| p.min(part)).sum();
            if part + room < remaining {
                break;
            }
            current.push(part);
            self.minors_rec(row + 1, remaining - part, part, current, out);
            current.pop();
        }
    }

    fn fmt_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Reverse lexicographic order on part lists, the enumeration order:
/// `[4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1]`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_text(f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_text(f)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(parts)
    }
}

impl<const N: usize> TryFrom<[usize; N]> for Partition {
    type Error = PartitionError;

    fn try_from(parts: [usize; N]) -> Result<Self, Self::Error> {
        Self::new(parts.to_vec())
    }
}

/// Parses `[4,3,2]`; `[]` is the empty partition. Whitespace around tokens
/// is allowed and trailing zeros are accepted and dropped.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |position: usize, message: &str| PartitionError::Parse {
            position,
            message: message.to_string(),
        };
        let bytes = s.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if bytes.get(pos) != Some(&b'[') {
            return Err(err(pos, "expected '['"));
        }
        pos += 1;
        skip_ws(&mut pos);
        let mut parts = Vec::new();
        if bytes.get(pos) == Some(&b']') {
            pos += 1;
        } else {
            loop {
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(err(pos, "expected a non-negative integer"));
                }
                let value: usize = s[start..pos]
                    .parse()
                    .map_err(|_| err(start, "integer out of range"))?;
                if let Some(&prev) = parts.last() {
                    if value > prev {
                        return Err(err(start, "parts must be weakly decreasing"));
                    }
                }
                parts.push(value);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b']') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(err(pos, "expected ',' or ']'")),
                }
            }
        }
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(err(pos, "unexpected trailing input"));
        }
        Partition::new(parts).map_err(|_| err(0, "parts must be weakly decreasing"))
    }
}

/// A cell `(row, col)`, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Hook lengths of every cell of a shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookGrid {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl HookGrid {
    pub fn new(shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let rows = (1..=shape.len())
            .map(|i| {
                (1..=shape.part(i))
                    .map(|j| (shape.part(i) - j) + (conj.part(j) - i) + 1)
                    .collect()
            })
            .collect();
        Self {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Hook of a cell, or `None` outside the shape.
    pub fn get(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Product of all hook lengths, `H_λ`.
    pub fn product(&self) -> BigUint {
        self.rows
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * h)
    }
}

pub fn hook_grid(shape: &Partition) -> HookGrid {
    HookGrid::new(shape)
}

/// Iterator over the partitions of `n` in reverse lexicographic order.
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition::new(parts.clone()).expect("generator keeps order");
        // Advance: decrement the last part > 1 and refill with the freed cells.
        let mut next = parts;
        let mut freed = 0;
        while next.last() == Some(&1) {
            next.pop();
            freed += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                next.push(take);
                freed -= take;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Partitions {
    Partitions::new(n)
}

/// `p(n)` via Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut p: Vec<BigUint> = Vec::with_capacity(n + 1);
    p.push(BigUint::one());
    for m in 1..=n {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let term = if g2 <= m { &p[m - g1] + &p[m - g2] } else { p[m - g1].clone() };
            if j % 2 == 1 {
                plus += term;
            } else {
                minus += term;
            }
        }
        p.push(plus - minus);
    }
    p.swap_remove(n)
}

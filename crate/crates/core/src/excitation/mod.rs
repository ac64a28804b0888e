//! Excited diagrams and excitation factors.
//!
//! `E_μ(λ)` is the sum over excited diagrams of `μ` in `λ` of the product of
//! the ambient hook lengths of the occupied cells. For a single row `μ = [m]`
//! the factor is also available in closed forms driven by the first-row hook
//! lengths of `λ` (see [`excitation_row_stirling`], [`excitation_row_pixton`]).

mod identities;
mod series;
mod stirling;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::{Cell, HookGrid, Partition};

pub use identities::{identity_cor48, identity_lemma44, identity_lemma45, identity_lemma47};
pub use series::{excitation_column_pixton, excitation_row_pixton, TruncatedSeries};
pub use stirling::{
    binomial, elementary_symmetric, elementary_symmetric_all, excitation_row_stirling,
    gamma_coefficient, stirling_table, RatPoly, StirlingTable,
};

/// A placement of the pebbles of `μ` inside an ambient shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExcitedDiagram {
    ambient: Partition,
    cells: Vec<Cell>,
}

impl ExcitedDiagram {
    pub fn ambient(&self) -> &Partition {
        &self.ambient
    }

    /// Occupied cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn hook_product(&self, hooks: &HookGrid) -> BigUint {
        self.cells.iter().fold(BigUint::one(), |acc, &c| {
            acc * hooks.get(c).expect("excited cell inside ambient")
        })
    }
}

impl fmt::Display for ExcitedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ambient)?;
        for cell in &self.cells {
            writeln!(f, "{cell}")?;
        }
        Ok(())
    }
}

type Placement = Vec<(u32, u32)>;

fn occupied(placement: &Placement, cell: (u32, u32)) -> bool {
    placement.binary_search(&cell).is_ok()
}

/// Every placement reachable from `μ`'s own cells by local excitation
/// moves, discovered breadth first. Placements are sorted cell lists.
fn closure(lambda: &Partition, mu: &Partition) -> Vec<Placement> {
    if !mu.is_minor_of(lambda) {
        return Vec::new();
    }
    let start: Placement = mu
        .cells()
        .map(|c| (c.row as u32, c.col as u32))
        .collect();
    let inside = |(i, j): (u32, u32)| lambda.contains_cell(Cell::new(i as usize, j as usize));
    let mut seen: HashSet<Placement> = HashSet::new();
    seen.insert(start.clone());
    let mut order = vec![start];
    let mut head = 0;
    while head < order.len() {
        let current = order[head].clone();
        head += 1;
        for (idx, &(i, j)) in current.iter().enumerate() {
            let target = (i + 1, j + 1);
            if !inside(target)
                || occupied(&current, (i, j + 1))
                || occupied(&current, (i + 1, j))
                || occupied(&current, target)
            {
                continue;
            }
            let mut next = current.clone();
            next.remove(idx);
            let pos = next.binary_search(&target).unwrap_err();
            next.insert(pos, target);
            if seen.insert(next.clone()) {
                order.push(next);
            }
        }
    }
    order
}

/// All excited diagrams of `μ` in `λ`, in discovery order. Empty when
/// `μ ⊄ λ`.
pub fn enumerate_excited_diagrams(lambda: &Partition, mu: &Partition) -> Vec<ExcitedDiagram> {
    closure(lambda, mu)
        .into_iter()
        .map(|p| ExcitedDiagram {
            ambient: lambda.clone(),
            cells: p
                .into_iter()
                .map(|(i, j)| Cell::new(i as usize, j as usize))
                .collect(),
        })
        .collect()
}

/// `E_μ(λ)`, summing hook products over excited diagrams; zero iff `μ ⊄ λ`.
pub fn excitation_factor(lambda: &Partition, mu: &Partition) -> BigUint {
    let hooks = HookGrid::new(lambda);
    excitation_factor_with(&hooks, mu)
}

/// [`excitation_factor`] against a precomputed hook grid.
pub fn excitation_factor_with(hooks: &HookGrid, mu: &Partition) -> BigUint {
    let hook = |(i, j): (u32, u32)| hooks.get(Cell::new(i as usize, j as usize)).unwrap();
    closure(hooks.shape(), mu)
        .iter()
        .map(|p| {
            // u64 is enough for up to ~8 cells of hook ≤ 200; spill to BigUint otherwise
            let mut small: u64 = 1;
            let mut big: Option<BigUint> = None;
            for &c in p {
                let h = hook(c) as u64;
                match small.checked_mul(h) {
                    Some(v) if big.is_none() => small = v,
                    _ => {
                        let b = big.get_or_insert_with(|| BigUint::from(small));
                        *b *= h;
                    }
                }
            }
            big.unwrap_or_else(|| BigUint::from(small))
        })
        .sum()
}

/// `E_m(λ)` from the weakly increasing row-index sum
/// `Σ h(i_1, i_1) · h(i_2, i_2+1) ⋯ h(i_m, i_m+m−1)`.
pub fn excitation_row_direct(lambda: &Partition, m: usize) -> BigUint {
    if m == 0 {
        return BigUint::one();
    }
    let hooks = HookGrid::new(lambda);
    let rows = lambda.len();
    // layer[i] = sum over admissible (i_1 ≤ … ≤ i_t = i+1) of the partial product
    let mut layer: Vec<BigUint> = (1..=rows)
        .map(|i| hooks.get(Cell::new(i, i)).map_or_else(BigUint::zero, BigUint::from))
        .collect();
    for t in 2..=m {
        let mut running = BigUint::zero();
        let mut next = Vec::with_capacity(rows);
        for (idx, value) in layer.iter().enumerate() {
            running += value;
            let i = idx + 1;
            next.push(match hooks.get(Cell::new(i, i + t - 1)) {
                Some(h) => &running * h,
                None => BigUint::zero(),
            });
        }
        layer = next;
    }
    layer.into_iter().sum()
}

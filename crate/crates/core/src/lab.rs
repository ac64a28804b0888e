//! Multiset reconstructibility checks, the `G(n)` search, and the
//! conjugate-pair families with equal `(n−2)`-minor multisets.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use thiserror::Error;

use crate::excitation::excitation_factor;
use crate::partition::{partition_count, partitions, Cell, Partition};
use crate::syt::{fingerprint_entries, minor_multiset, naruse_counts, Fingerprint};

/// Default bound on `p(n)·p(d)` for exhaustive work.
pub const DEFAULT_CEILING: u64 = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("n={n}, d={d}: p(n)*p(d) = {cost} exceeds the resource ceiling {ceiling}")]
    ResourceCeiling {
        n: usize,
        d: usize,
        cost: BigUint,
        ceiling: u64,
    },
    #[error("k={k} is larger than n={n}")]
    BadDeletion { n: usize, k: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("{0}")]
    OutOfRange(String),
}

/// Outcome of testing whether `M̂_k` separates the partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MrcVerdict {
    pub n: usize,
    pub k: usize,
    pub holds: bool,
    pub witness: Option<(Partition, Partition)>,
}

fn check_ceiling(n: usize, d: usize, ceiling: u64) -> Result<(), LabError> {
    let cost = partition_count(n) * partition_count(d);
    if cost > BigUint::from(ceiling) {
        return Err(LabError::ResourceCeiling { n, d, cost, ceiling });
    }
    Ok(())
}

/// Decides whether distinct partitions of `n` always have distinct
/// `M̂_k`. The witness is the first partition (in enumeration order) that
/// shares its multiset with a later one, paired with the earliest such.
pub fn mrc_check(n: usize, k: usize, ceiling: u64) -> Result<MrcVerdict, LabError> {
    if k > n {
        return Err(LabError::BadDeletion { n, k });
    }
    let d = n - k;
    check_ceiling(n, d, ceiling)?;
    let shapes: Vec<Partition> = partitions(n).collect();
    let inners: Vec<Partition> = partitions(d).collect();
    let vectors: Vec<(Fingerprint, Vec<BigUint>)> = shapes
        .par_iter()
        .map(|lam| {
            let counts = naruse_counts(lam, &inners);
            (fingerprint_entries(inners.iter().zip(&counts)), counts)
        })
        .collect();

    let mut buckets: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    for (i, (digest, _)) in vectors.iter().enumerate() {
        buckets.entry(*digest).or_default().push(i);
    }
    let mut witness = None;
    for (i, (digest, counts)) in vectors.iter().enumerate() {
        let partner = buckets[digest]
            .iter()
            .copied()
            .find(|&j| j > i && vectors[j].1 == *counts);
        if let Some(j) = partner {
            witness = Some((shapes[i].clone(), shapes[j].clone()));
            break;
        }
    }
    Ok(MrcVerdict {
        n,
        k,
        holds: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GnMethod {
    Exhaustive,
    Published,
}

impl fmt::Display for GnMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GnMethod::Exhaustive => "exhaustive",
            GnMethod::Published => "published",
        })
    }
}

/// `G(n)` with a pair of partitions sharing `M̂_{G(n)+1}` when one is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnRecord {
    pub n: usize,
    pub g: usize,
    pub witness: Option<(Partition, Partition)>,
    pub method: GnMethod,
}

impl GnRecord {
    pub fn gap(&self) -> usize {
        self.n - self.g
    }
}

/// Published `n − G(n)` for `0 ≤ n ≤ 81`.
pub fn published_gap(n: usize) -> Option<usize> {
    let gap = match n {
        0 | 1 => 0,
        2..=11 | 13 => 2,
        12 | 14 | 17 | 18 | 23 => 3,
        15 | 16 | 19..=22 | 24..=59 => 4,
        61 | 62 | 66 => 4,
        60 | 63..=65 | 67..=81 => 6,
        _ => return None,
    };
    Some(gap)
}

fn published_record(n: usize) -> Option<GnRecord> {
    let gap = published_gap(n)?;
    let witness = (n == 60).then(pixton_pair);
    Some(GnRecord {
        n,
        g: n - gap,
        witness,
        method: GnMethod::Published,
    })
}

/// `G(n)` by increasing minor size `d = n − k`: the first `d` at which
/// MRC holds gives `G(n) = n − d`, since failure is inherited by larger `k`.
/// Falls back to the published value once `p(n)·p(d)` passes `ceiling`.
pub fn compute_g(n: usize, ceiling: u64) -> Result<GnRecord, LabError> {
    if n <= 1 {
        return Ok(GnRecord {
            n,
            g: n,
            witness: None,
            method: GnMethod::Exhaustive,
        });
    }
    let mut last_witness = None;
    for d in 1..=n {
        let verdict = match mrc_check(n, n - d, ceiling) {
            Ok(v) => v,
            Err(err @ LabError::ResourceCeiling { .. }) => return published_record(n).ok_or(err),
            Err(err) => return Err(err),
        };
        if verdict.holds {
            return Ok(GnRecord {
                n,
                g: n - d,
                witness: last_witness,
                method: GnMethod::Exhaustive,
            });
        }
        last_witness = verdict.witness;
    }
    unreachable!("M̂_0 always separates partitions")
}

/// `E₂(τ) − E₂(τᵗ)` as `Σ_{i ≤ rk τ} h_ii · (τ_i − τᵗ_i)`.
pub fn e2_conjugate_gap(tau: &Partition) -> BigInt {
    let conj = tau.conjugate();
    (1..=tau.durfee_rank())
        .map(|i| {
            let h = tau.hook(Cell::new(i, i)) as i64;
            BigInt::from(h * (tau.part(i) as i64 - conj.part(i) as i64))
        })
        .sum()
}

/// `[5r+3u+2, u+2, 2+ρ_1, …, 2+ρ_u, 2^{3r}, 1^{r+2u}]`.
pub fn family_lambda(r: usize, u: usize, rho: &Partition) -> Result<Partition, LabError> {
    if r == 0 {
        return Err(LabError::InvalidFamily("r must be at least 1".into()));
    }
    if !rho.is_self_conjugate() {
        return Err(LabError::InvalidFamily(format!("{rho} is not self-conjugate")));
    }
    if !rho.is_minor_of(&Partition::rectangle(u, u)) {
        return Err(LabError::InvalidFamily(format!("{rho} does not fit in a {u}x{u} square")));
    }
    let mut parts = vec![5 * r + 3 * u + 2, u + 2];
    parts.extend((1..=u).map(|i| 2 + rho.part(i)));
    parts.extend(std::iter::repeat_n(2, 3 * r));
    parts.extend(std::iter::repeat_n(1, r + 2 * u));
    Ok(Partition::new(parts).expect("family parts are weakly decreasing"))
}

/// `72r² + 32u² + 96ru + 42r + 28u + 6`.
pub fn family_e2_polynomial(r: usize, u: usize) -> BigUint {
    let (r, u) = (r as u64, u as u64);
    BigUint::from(72 * r * r + 32 * u * u + 96 * r * u + 42 * r + 28 * u + 6)
}

/// Lexicographically least self-conjugate partition of `s` inside `[u^u]`.
pub fn least_self_conjugate(s: usize, u: usize) -> Option<Partition> {
    let square = Partition::rectangle(u, u);
    let mut found: Vec<Partition> = partitions(s)
        .filter(|p| p.is_self_conjugate() && p.is_minor_of(&square))
        .collect();
    found.sort_by(|a, b| a.parts().cmp(b.parts()));
    found.into_iter().next()
}

/// Parameters and pair `(λ^{r,u,ρ}, its conjugate)` of size `n ≥ 51`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyWitness {
    pub r: usize,
    pub u: usize,
    pub rho: Partition,
    pub lambda: Partition,
    pub conjugate: Partition,
}

/// Smallest `(r, u, |ρ|)` with `n = 4(3r+2u+1) + |ρ|`, `|ρ| ∈ {0,3,4,5,6}`.
pub fn witness_for_n(n: usize) -> Result<FamilyWitness, LabError> {
    if n < 51 {
        return Err(LabError::OutOfRange(format!("witness_for_n needs n >= 51, got {n}")));
    }
    for r in 1.. {
        if 4 * (3 * r + 1) > n {
            break;
        }
        for u in 0.. {
            let base = 4 * (3 * r + 2 * u + 1);
            if base > n {
                break;
            }
            let s = n - base;
            if ![0, 3, 4, 5, 6].contains(&s) {
                continue;
            }
            let Some(rho) = least_self_conjugate(s, u) else {
                continue;
            };
            let lambda = family_lambda(r, u, &rho)?;
            if e2_conjugate_gap(&lambda) != BigInt::from(0) {
                return Err(LabError::InvalidFamily(format!("{lambda} has a nonzero conjugate gap")));
            }
            let conjugate = lambda.conjugate();
            return Ok(FamilyWitness {
                r,
                u,
                rho,
                lambda,
                conjugate,
            });
        }
    }
    Err(LabError::OutOfRange(format!("no family member of size {n}")))
}

fn same_minors(a: &Partition, b: &Partition, k: usize) -> bool {
    minor_multiset(a, k).same_multiset(&minor_multiset(b, k))
}

/// `(M̂_{n−2}(λ) = M̂_{n−2}(λᵗ), E₂(λ) = E₂(λᵗ))`.
pub fn lemma62_equivalence(lambda: &Partition) -> (bool, bool) {
    let n = lambda.size();
    assert!(n >= 2);
    let conj = lambda.conjugate();
    let two = Partition::row(2);
    (
        same_minors(lambda, &conj, n - 2),
        excitation_factor(lambda, &two) == excitation_factor(&conj, &two),
    )
}

/// `(M̂_{n−2}(λ) = M̂_{n−2}(λᵗ), M̂_{n−3}(λ) = M̂_{n−3}(λᵗ))`.
pub fn lemma65_equivalence(lambda: &Partition) -> (bool, bool) {
    let n = lambda.size();
    assert!(n >= 3);
    let conj = lambda.conjugate();
    (same_minors(lambda, &conj, n - 2), same_minors(lambda, &conj, n - 3))
}

/// A pair of partitions of 60 with equal `M̂_56` and `M̂_55`.
pub fn pixton_pair() -> (Partition, Partition) {
    let lambda = Partition::new(vec![14, 11, 8, 6, 3, 3, 3, 2, 2, 2, 2, 2, 2]).expect("valid");
    let mu = Partition::new(vec![13, 13, 7, 4, 4, 4, 3, 3, 2, 2, 2, 1, 1, 1]).expect("valid");
    (lambda, mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn mrc_examples() {
        for n in 2..=9 {
            let v = mrc_check(n, n - 1, DEFAULT_CEILING).unwrap();
            assert!(!v.holds);
            assert_eq!(v.witness, Some((Partition::row(n), Partition::column(n))));
        }
        assert!(mrc_check(13, 11, DEFAULT_CEILING).unwrap().holds);
        assert!(!mrc_check(12, 10, DEFAULT_CEILING).unwrap().holds);
        assert!(mrc_check(5, 0, DEFAULT_CEILING).unwrap().holds);
        assert!(mrc_check(1, 1, DEFAULT_CEILING).unwrap().holds);
        assert!(matches!(mrc_check(3, 4, DEFAULT_CEILING), Err(LabError::BadDeletion { .. })));
        assert!(matches!(mrc_check(40, 30, 10_000), Err(LabError::ResourceCeiling { .. })));
    }

    #[test]
    fn small_g_values() {
        assert_eq!(compute_g(0, DEFAULT_CEILING).unwrap().g, 0);
        assert_eq!(compute_g(1, DEFAULT_CEILING).unwrap().g, 1);
        for n in 2..=14 {
            let rec = compute_g(n, DEFAULT_CEILING).unwrap();
            assert_eq!(rec.method, GnMethod::Exhaustive);
            assert_eq!(Some(rec.gap()), published_gap(n), "n={n}");
            let (a, b) = rec.witness.unwrap();
            assert!(same_minors(&a, &b, rec.g + 1));
        }
    }

    #[test]
    fn published_fallback() {
        let rec = compute_g(60, DEFAULT_CEILING).unwrap();
        assert_eq!(rec.method, GnMethod::Published);
        assert_eq!(rec.g, 54);
        assert_eq!(rec.witness, Some(pixton_pair()));
        let row: Vec<usize> = (60..=70).map(|n| published_gap(n).unwrap()).collect();
        assert_eq!(row, vec![6, 4, 4, 6, 6, 6, 4, 6, 6, 6, 6]);
        assert!(published_gap(82).is_none());
        assert!(matches!(compute_g(90, DEFAULT_CEILING), Err(LabError::ResourceCeiling { .. })));
    }

    #[test]
    fn gap_formula() {
        assert_eq!(e2_conjugate_gap(&p("[5]")), BigInt::from(20));
        assert_eq!(e2_conjugate_gap(&p("[3,2,1]")), BigInt::from(0));
        let lam = family_lambda(1, 0, &Partition::empty()).unwrap();
        assert_eq!(lam, p("[7,2,2,2,2,1]"));
        assert_eq!(e2_conjugate_gap(&lam), BigInt::from(0));
    }

    #[test]
    fn family_examples() {
        let fig = family_lambda(1, 5, &p("[4,3,3,1]")).unwrap();
        assert_eq!(fig, p("[22,7,6,5,5,3,2,2,2,2,1,1,1,1,1,1,1,1,1,1,1]"));
        assert_eq!(fig.size(), 4 * (3 + 10 + 1) + 11);
        assert!(!fig.is_self_conjugate());
        assert!(family_lambda(1, 2, &p("[2]")).is_err());
        assert!(family_lambda(1, 1, &p("[2,1]")).is_err());
        assert!(family_lambda(0, 1, &Partition::empty()).is_err());
        for r in 1..=2 {
            for u in 0..=2 {
                let lam = family_lambda(r, u, &Partition::empty()).unwrap();
                assert_eq!(excitation_factor(&lam, &Partition::row(2)), family_e2_polynomial(r, u));
            }
        }
    }

    #[test]
    fn witnesses() {
        let w = witness_for_n(51).unwrap();
        assert_eq!((w.r, w.u, w.rho.clone()), (1, 4, p("[2,1]")));
        let w52 = witness_for_n(52).unwrap();
        assert_eq!((w52.r, w52.u, w52.rho.clone()), (1, 4, p("[2,2]")));
        let w48 = witness_for_n(56).unwrap();
        assert_eq!((w48.r, w48.u, w48.rho), (1, 5, Partition::empty()));
        for n in 51..=80 {
            let w = witness_for_n(n).unwrap();
            assert_eq!(w.lambda.size(), n);
            assert_ne!(w.lambda, w.conjugate);
        }
        assert!(witness_for_n(50).is_err());
    }

    #[test]
    fn equivalences_small() {
        assert_eq!(lemma62_equivalence(&p("[3,1]")), (false, false));
        assert_eq!(lemma62_equivalence(&p("[2,1]")), (true, true));
        let lam = family_lambda(1, 0, &Partition::empty()).unwrap();
        assert_eq!(lemma62_equivalence(&lam), (true, true));
        assert_eq!(lemma65_equivalence(&lam), (true, true));
    }
}

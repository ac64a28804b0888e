//! Self-check suites run by `pminor verify`.

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use partition_minors::excitation::{
    excitation_column_pixton, excitation_factor, excitation_row_direct, excitation_row_pixton,
    excitation_row_stirling, identity_cor48, identity_lemma44, identity_lemma45, identity_lemma47,
};
use partition_minors::lab::pixton_pair;
use partition_minors::partition::{partitions, Partition};
use partition_minors::syt::minor_multiset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma44,
    Lemma45,
    Lemma47,
    Cor48,
    ThreeWayE,
    PixtonPair,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Lemma44,
        Suite::Lemma45,
        Suite::Lemma47,
        Suite::Cor48,
        Suite::ThreeWayE,
        Suite::PixtonPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma44 => "lemma44",
            Suite::Lemma45 => "lemma45",
            Suite::Lemma47 => "lemma47",
            Suite::Cor48 => "cor48",
            Suite::ThreeWayE => "three-way-e",
            Suite::PixtonPair => "pixton-pair",
            Suite::All => "all",
        }
    }

    /// `Ok(detail)` when every check agrees, `Err(first mismatch)` otherwise.
    pub fn run(self) -> Result<String, String> {
        match self {
            Suite::Lemma44 => random_identity(true),
            Suite::Lemma45 => random_identity(false),
            Suite::Lemma47 => stirling_grid(),
            Suite::Cor48 => factorial_sums(),
            Suite::ThreeWayE => three_way(),
            Suite::PixtonPair => pixton(),
            Suite::All => unreachable!("expanded by the caller"),
        }
    }
}

const TRIALS: usize = 300;

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-50..=50);
    let den: i64 = rng.gen_range(1..=12);
    BigRational::new(num.into(), den.into())
}

fn random_identity(concatenate: bool) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(if concatenate { 44 } else { 45 });
    for trial in 0..TRIALS {
        let len = rng.gen_range(0..=6);
        let x: Vec<BigRational> = (0..len).map(|_| random_rational(&mut rng)).collect();
        let k = rng.gen_range(0..=8);
        let (l, r) = if concatenate {
            identity_lemma44(&x, rng.gen_range(0..=10), k)
        } else {
            identity_lemma45(&x, &random_rational(&mut rng), k)
        };
        if l != r {
            return Err(format!("trial {trial}: {l} != {r}"));
        }
    }
    Ok(format!("{TRIALS} random trials"))
}

fn stirling_grid() -> Result<String, String> {
    let mut count = 0;
    for big_m in 0..=8 {
        for q in -12..=12 {
            for r in -12..=12 {
                let (l, rr) = identity_lemma47(big_m, q, r);
                if l != rr {
                    return Err(format!("M={big_m} q={q} r={r}: {l} != {rr}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} grid points"))
}

fn factorial_sums() -> Result<String, String> {
    let mut factorial = BigInt::one();
    for m in 0..=10usize {
        if m > 0 {
            factorial *= BigInt::from(m);
        }
        for k in -15..=15 {
            let (l, r) = identity_cor48(m, k);
            if l != r || r != BigRational::from_integer(factorial.clone()) {
                return Err(format!("m={m} k={k}: {l} != {r}"));
            }
        }
    }
    Ok("m <= 10, -15 <= k <= 15".into())
}

fn three_way() -> Result<String, String> {
    let mut values = 0;
    for n in 0..=14 {
        for lam in partitions(n) {
            let hooks = lam.first_row_hooks();
            for m in 0..=lam.first() {
                let diagrams = BigInt::from(excitation_factor(&lam, &Partition::row(m)));
                let others = [
                    BigInt::from(excitation_row_direct(&lam, m)),
                    excitation_row_stirling(&hooks, m),
                    excitation_row_pixton(&hooks, m),
                ];
                if others.iter().any(|v| *v != diagrams) {
                    return Err(format!("{lam} m={m}: {diagrams} vs {others:?}"));
                }
                values += 1;
            }
            if n <= 12 {
                for m in 0..=lam.len() {
                    let diagrams = BigInt::from(excitation_factor(&lam, &Partition::column(m)));
                    let series = excitation_column_pixton(&lam, m);
                    if diagrams != series {
                        return Err(format!("{lam} column m={m}: {diagrams} vs {series}"));
                    }
                    values += 1;
                }
            }
        }
    }
    Ok(format!("{values} values agree"))
}

fn pixton() -> Result<String, String> {
    let (lam, mu) = pixton_pair();
    let equal = |k: usize| minor_multiset(&lam, k).same_multiset(&minor_multiset(&mu, k));
    for k in [56, 55] {
        if !equal(k) {
            return Err(format!("M_{k} differs"));
        }
    }
    if equal(54) {
        return Err("M_54 unexpectedly equal".into());
    }
    let total: BigUint = minor_multiset(&lam, 56).entries().iter().map(|(_, c)| c.clone()).sum();
    Ok(format!("{lam} and {mu}: M_56 and M_55 equal, M_54 differs (M_56 total {total})"))
}

//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero
//! exit status if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use partition_minors::excitation::{
    enumerate_excited_diagrams, excitation_column_pixton, excitation_factor, excitation_row_direct,
    excitation_row_pixton, excitation_row_stirling, identity_cor48, identity_lemma44, identity_lemma45,
    identity_lemma47,
};
use partition_minors::lab::{
    compute_g, e2_conjugate_gap, family_e2_polynomial, family_lambda, lemma62_equivalence, lemma65_equivalence,
    pixton_pair, published_gap, GnMethod, DEFAULT_CEILING,
};
use partition_minors::partition::{partitions, Partition};
use partition_minors::sonar::{
    double_sonar_reconstruct, e_sequence, find_blocking_rectangle, integer_roots_descending, query_budget,
    recover_sigma, sonar_matrix, sonar_reconstruct, ESequence, MinorOracle,
};
use partition_minors::syt::{
    count_skew_syt_dp, count_skew_syt_naruse, enumerate_skew_syt, minor_multiset, SkewCounter, SkewShape,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(s: &str) -> Partition {
    s.parse().expect("valid partition literal")
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn worked_examples() -> Outcome {
    let lam = p("[4,3,3]");
    let diagrams = enumerate_excited_diagrams(&lam, &p("[2]"));
    ensure!(diagrams.len() == 3, "[4,3,3]/[2] has {} excited diagrams", diagrams.len());
    let e2 = excitation_factor(&lam, &p("[2]"));
    ensure!(e2 == BigUint::from(48u32), "E_2([4,3,3]) = {e2}");

    let n = count_skew_syt_naruse(&p("[4,3,2]"), &p("[4,1]"));
    let dp = count_skew_syt_dp(&p("[4,3,2]"), &p("[4,1]"));
    ensure!(n == BigUint::from(5u32) && dp == n, "N([4,3,2]/[4,1]) = {n} / {dp}");

    let a4 = sonar_matrix(3);
    let want = [ints(&[1, 0, 0, 0]), ints(&[-3, 1, 0, 0]), ints(&[1, -1, 1, 0]), ints(&[0, 0, 0, 1])];
    ensure!(a4.rows() == want, "A_4 = {:?}", a4.rows());
    let seq: ESequence = "1,8,28,40,0,0".parse().map_err(|e| format!("{e}"))?;
    let sigma = recover_sigma(&seq, 3).map_err(|e| e.to_string())?;
    ensure!(sigma == ints(&[1, 11, 38, 40]), "sigma = {sigma:?}");
    let roots = integer_roots_descending(&sigma).map_err(|e| e.to_string())?;
    ensure!(roots == vec![5, 4, 2], "roots = {roots:?}");
    let shape = sonar_reconstruct(&seq).map_err(|e| e.to_string())?;
    ensure!(shape == p("[3,3,2]"), "reconstructed {shape}");
    Ok("E_2([4,3,3])=48 (3 diagrams), N([4,3,2]/[4,1])=5, A_4, sigma, roots, [3,3,2]".into())
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-50..=50);
    let den: i64 = rng.gen_range(1..=12);
    BigRational::new(num.into(), den.into())
}

fn identity_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_4444);
    for trial in 0..300 {
        let len = rng.gen_range(0..=6);
        let x: Vec<BigRational> = (0..len).map(|_| random_rational(&mut rng)).collect();
        let ell = rng.gen_range(0..=10);
        let k = rng.gen_range(0..=8);
        let (l, r) = identity_lemma44(&x, ell, k);
        ensure!(l == r, "concatenation identity trial {trial}: {l} != {r}");
        let d = random_rational(&mut rng);
        let (l, r) = identity_lemma45(&x, &d, k);
        ensure!(l == r, "shift identity trial {trial}: {l} != {r}");
    }
    let mut grid = 0;
    for big_m in 0..=8 {
        for q in -12..=12 {
            for r in -12..=12 {
                let (l, rr) = identity_lemma47(big_m, q, r);
                ensure!(l == rr, "mixed Stirling identity M={big_m} q={q} r={r}: {l} != {rr}");
                grid += 1;
            }
        }
    }
    let mut factorial = BigInt::one();
    for m in 0..=10usize {
        if m > 0 {
            factorial *= BigInt::from(m);
        }
        for k in -15..=15 {
            let (l, r) = identity_cor48(m, k);
            ensure!(l == r && r == BigRational::from_integer(factorial.clone()), "m={m} k={k}: {l}");
        }
    }
    Ok(format!("300+300 random trials, {grid} grid points, 341 factorial checks"))
}

fn three_way_excitation() -> Outcome {
    let shapes: Vec<Partition> = (0..=14).flat_map(partitions).collect();
    let row_checks: usize = shapes
        .par_iter()
        .map(|lam| {
            let hooks = lam.first_row_hooks();
            for m in 0..=lam.first() {
                let diagrams = BigInt::from(excitation_factor(lam, &Partition::row(m)));
                let stirling = excitation_row_stirling(&hooks, m);
                let series = excitation_row_pixton(&hooks, m);
                let direct = BigInt::from(excitation_row_direct(lam, m));
                if diagrams != stirling || diagrams != series || diagrams != direct {
                    return Err(format!("{lam} m={m}: {diagrams} {stirling} {series} {direct}"));
                }
            }
            Ok(lam.first() + 1)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    let column_checks: usize = shapes
        .par_iter()
        .filter(|lam| lam.size() <= 12)
        .map(|lam| {
            for m in 0..=lam.len() {
                let diagrams = BigInt::from(excitation_factor(lam, &Partition::column(m)));
                let series = excitation_column_pixton(lam, m);
                if diagrams != series {
                    return Err(format!("{lam} column m={m}: {diagrams} vs {series}"));
                }
            }
            Ok(lam.len() + 1)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!("{row_checks} row values, {column_checks} column values"))
}

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    let all: Vec<Partition> = partitions(n).collect();
    all[rng.gen_range(0..all.len())].clone()
}

fn counting_oracles() -> Outcome {
    let outers: Vec<Partition> = (0..=10).flat_map(partitions).collect();
    let pairs: usize = outers
        .par_iter()
        .map(|lam| {
            let mut counter = SkewCounter::default();
            let mut checked = 0;
            for k in 0..=lam.size() {
                for mu in lam.minors(k) {
                    let naruse = count_skew_syt_naruse(lam, &mu);
                    let dp = counter.count(lam, &mu);
                    let shape = SkewShape::new(lam.clone(), mu.clone()).map_err(|e| e.to_string())?;
                    let brute = enumerate_skew_syt(&shape, 12).map_err(|e| e.to_string())?.len();
                    if naruse != dp || dp != BigUint::from(brute) {
                        return Err(format!("{lam}/{mu}: naruse {naruse}, dp {dp}, brute {brute}"));
                    }
                    checked += 1;
                }
            }
            Ok(checked)
        })
        .collect::<Result<Vec<_>, String>>()?
        .into_iter()
        .sum();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd_5eed);
    for trial in 0..500 {
        let n = rng.gen_range(1..=18);
        let lam = random_partition(&mut rng, n);
        let minors = lam.minors(rng.gen_range(0..=n));
        let mu = minors[rng.gen_range(0..minors.len())].clone();
        let naruse = count_skew_syt_naruse(&lam, &mu);
        let dp = count_skew_syt_dp(&lam, &mu);
        ensure!(naruse == dp, "random trial {trial} {lam}/{mu}: {naruse} vs {dp}");
    }
    Ok(format!("{pairs} skew shapes three ways, 500 random shapes two ways"))
}

fn sonar_round_trip() -> Outcome {
    let singles: Vec<Partition> = (0..=20).flat_map(partitions).collect();
    singles.par_iter().try_for_each(|lam| {
        let got = sonar_reconstruct(&e_sequence(lam)).map_err(|e| format!("{lam}: {e}"))?;
        if &got != lam {
            return Err(format!("single SONAR gave {got} for {lam}"));
        }
        Ok(())
    })?;
    let hidden: Vec<Partition> = (2..=18).flat_map(partitions).collect();
    hidden.par_iter().try_for_each(|lam| {
        let mut oracle = MinorOracle::for_hidden(lam);
        let got = double_sonar_reconstruct(&mut oracle).map_err(|e| format!("{lam}: {e}"))?;
        let budget = query_budget(lam.size());
        if &got != lam || !oracle.violations().is_empty() || oracle.max_query_size() > budget {
            return Err(format!("double SONAR on {lam}: got {got}, max query {}", oracle.max_query_size()));
        }
        Ok(())
    })?;
    let blocking: Vec<Partition> = (2..=30).flat_map(partitions).collect();
    blocking.par_iter().try_for_each(|lam| {
        let mut oracle = MinorOracle::for_hidden(lam);
        let rho = find_blocking_rectangle(&mut oracle).map_err(|e| format!("{lam}: {e}"))?;
        let n = lam.size() as f64;
        if rho.size() > query_budget(lam.size()) || rho.size() as f64 >= 2.0 * n / n.ln() {
            return Err(format!("blocking rectangle {rho} of {lam} is too large"));
        }
        Ok(())
    })?;
    Ok(format!(
        "{} single round trips, {} double reconstructions, {} blocking rectangles",
        singles.len(),
        hidden.len(),
        blocking.len()
    ))
}

fn published_g_values() -> Outcome {
    let records: Vec<_> = (0..=30usize)
        .into_par_iter()
        .map(|n| compute_g(n, DEFAULT_CEILING).map_err(|e| format!("n={n}: {e}")))
        .collect::<Result<_, _>>()?;
    for rec in &records {
        let n = rec.n;
        ensure!(rec.method == GnMethod::Exhaustive, "n={n} was not computed exhaustively");
        let want_gap = published_gap(n).expect("published up to 81");
        ensure!(rec.gap() == want_gap, "G({n}) = {} but n-G(n) should be {want_gap}", rec.g);
        let two = (2..=11).contains(&n) || n == 13;
        let three = [12, 14, 17, 18, 23].contains(&n);
        ensure!((rec.gap() == 2) == two, "n-2 classification wrong at n={n}");
        ensure!((rec.gap() == 3) == three, "n-3 classification wrong at n={n}");
        if [15, 16, 19, 20, 21, 22].contains(&n) || n >= 24 {
            ensure!(rec.gap() == 4, "G({n}) should be n-4");
        }
    }
    let table: Vec<String> = records.iter().map(|r| format!("{}", r.gap())).collect();
    Ok(format!("n-G(n) for n=0..30: {}", table.join(" ")))
}

fn pixton_pair_check() -> Outcome {
    let (lam, mu) = pixton_pair();
    ensure!(lam.size() == 60 && mu.size() == 60, "sizes {} {}", lam.size(), mu.size());
    let results: Vec<(usize, bool, usize)> = [56usize, 55, 54]
        .into_par_iter()
        .map(|k| {
            let a = minor_multiset(&lam, k);
            let b = minor_multiset(&mu, k);
            (k, a.same_multiset(&b), a.entries().len())
        })
        .collect();
    for (k, equal, support) in results {
        let (want_equal, want_support) = match k {
            56 => (true, 5),
            55 => (true, 7),
            _ => (false, 11),
        };
        ensure!(equal == want_equal, "M_{k} equality is {equal}");
        if want_equal {
            ensure!(support == want_support, "M_{k} has {support} distinct minors");
        }
    }
    Ok("M_56 and M_55 equal (5 and 7 minors), M_54 differs".into())
}

fn family_checks() -> Outcome {
    for r in 1..=4 {
        for u in 0..=4 {
            let lam = family_lambda(r, u, &Partition::empty()).map_err(|e| e.to_string())?;
            let e2 = excitation_factor(&lam, &Partition::row(2));
            ensure!(e2 == family_e2_polynomial(r, u), "E_2 of family r={r} u={u}: {e2}");
            let square = Partition::rectangle(u, u);
            for s in 0..=u * u {
                for rho in partitions(s).filter(|q| q.is_self_conjugate() && q.is_minor_of(&square)) {
                    let shape = family_lambda(r, u, &rho).map_err(|e| e.to_string())?;
                    ensure!(e2_conjugate_gap(&shape).is_zero(), "nonzero gap for r={r} u={u} rho={rho}");
                }
            }
        }
    }
    let shapes: Vec<Partition> = (2..=16).flat_map(partitions).collect();
    shapes.par_iter().try_for_each(|lam| {
        let (m2, e2) = lemma62_equivalence(lam);
        if m2 != e2 {
            return Err(format!("{lam}: minors {m2} vs E_2 {e2}"));
        }
        if lam.size() >= 3 {
            let (a, b) = lemma65_equivalence(lam);
            if a != b {
                return Err(format!("{lam}: M_(n-2) {a} vs M_(n-3) {b}"));
            }
        }
        Ok(())
    })?;
    Ok(format!("family polynomial and gaps for r,u <= 4, equivalences on {} shapes", shapes.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("worked-example fidelity", worked_examples),
        ("identity suites", identity_suites),
        ("three-way excitation agreement", three_way_excitation),
        ("counting oracles", counting_oracles),
        ("SONAR round trip", sonar_round_trip),
        ("published G(n) values", published_g_values),
        ("Pixton pair verification", pixton_pair_check),
        ("family checks", family_checks),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({secs:.1}s) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.1}s) {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

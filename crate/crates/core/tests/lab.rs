use num_bigint::BigInt;

use partition_minors::excitation::excitation_factor;
use partition_minors::lab::{
    compute_g, e2_conjugate_gap, family_lambda, mrc_check, witness_for_n, DEFAULT_CEILING,
};
use partition_minors::partition::{partitions, Partition};
use partition_minors::syt::{count_skew_syt_naruse, minor_multiset};

#[test]
fn failures_propagate_to_larger_k() {
    // every failure sits above G(n) >= n - 4, so k >= n - 6 sees all of them
    for n in 2..=20usize {
        let first = n.saturating_sub(6);
        assert!(mrc_check(n, first, u64::MAX).unwrap().holds || n <= 3);
        for k in first..n {
            let verdict = mrc_check(n, k, u64::MAX).unwrap();
            if let Some((a, b)) = verdict.witness {
                assert!(minor_multiset(&a, k).same_multiset(&minor_multiset(&b, k)));
                let next = mrc_check(n, k + 1, u64::MAX).unwrap();
                assert!(!next.holds, "n={n} k={}", k + 1);
                assert!(minor_multiset(&a, k + 1).same_multiset(&minor_multiset(&b, k + 1)));
            }
        }
    }
}

#[test]
fn no_gap_of_one() {
    for n in 2..=25 {
        let rec = compute_g(n, DEFAULT_CEILING).unwrap();
        assert_ne!(rec.g, n - 1, "n={n}");
        assert!(rec.g <= n - 2);
    }
}

#[test]
fn gap_formula_matches_excited_diagrams() {
    let two = Partition::row(2);
    for n in 0..=14 {
        for tau in partitions(n) {
            let direct = BigInt::from(excitation_factor(&tau, &two)) - BigInt::from(excitation_factor(&tau.conjugate(), &two));
            assert_eq!(e2_conjugate_gap(&tau), direct, "{tau}");
        }
    }
}

#[test]
fn inserting_rho_keeps_the_gap_zero() {
    for r in 1..=3 {
        for u in 0..=4 {
            let square = Partition::rectangle(u, u);
            for s in 0..=u * u {
                for rho in partitions(s).filter(|q| q.is_self_conjugate() && q.is_minor_of(&square)) {
                    let lam = family_lambda(r, u, &rho).unwrap();
                    assert_eq!(lam.size(), 12 * r + 8 * u + 4 + s);
                    assert!(!lam.is_self_conjugate());
                    assert_eq!(e2_conjugate_gap(&lam), BigInt::from(0));
                }
            }
        }
    }
}

#[test]
fn large_witnesses_have_equal_two_cell_counts() {
    for n in [51, 52, 53, 54, 55, 56] {
        let w = witness_for_n(n).unwrap();
        let (a, b) = (&w.lambda, &w.conjugate);
        assert_eq!(a.size(), n);
        for mu in partitions(2) {
            assert_eq!(count_skew_syt_naruse(a, &mu), count_skew_syt_naruse(b, &mu), "n={n} {mu}");
        }
        // the counts of [2] and [1,1] swap under conjugation, so equality needs both to agree
        assert_eq!(
            count_skew_syt_naruse(a, &Partition::row(2)),
            count_skew_syt_naruse(a, &Partition::column(2))
        );
    }
}

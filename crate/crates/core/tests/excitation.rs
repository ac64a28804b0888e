use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use partition_minors::excitation::{
    enumerate_excited_diagrams, excitation_factor, gamma_coefficient, identity_lemma44, identity_lemma45,
    StirlingTable,
};
use partition_minors::partition::{partitions, Partition};

#[test]
fn transpose_equivariance_up_to_12() {
    for n in 0..=12 {
        for lam in partitions(n) {
            let conj = lam.conjugate();
            for k in 0..=n {
                for mu in lam.minors(k) {
                    let here = enumerate_excited_diagrams(&lam, &mu).len();
                    let there = enumerate_excited_diagrams(&conj, &mu.conjugate()).len();
                    assert_eq!(here, there, "{lam} / {mu}");
                    assert_eq!(excitation_factor(&lam, &mu), excitation_factor(&conj, &mu.conjugate()));
                }
            }
        }
    }
}

#[test]
fn gamma_is_always_integral() {
    let table = StirlingTable::shared(12);
    for m in 0..=12 {
        for i in 0..=m {
            for k in -30..=30 {
                // asserts integrality internally
                let _ = gamma_coefficient(&table, m, i, k);
            }
        }
    }
}

#[test]
fn stirling_definition_holds() {
    assert!(StirlingTable::new(10).check_definition());
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn concatenation_identity(x in prop::collection::vec(rational(), 0..6), ell in 0usize..=10, k in 0usize..=8) {
        let (l, r) = identity_lemma44(&x, ell, k);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn shift_identity(x in prop::collection::vec(rational(), 0..6), d in rational(), k in 0usize..=8) {
        let (l, r) = identity_lemma45(&x, &d, k);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn contained_iff_nonzero(n in 0usize..=9, idx in any::<usize>(), m in 0usize..=9, jdx in any::<usize>()) {
        let lams: Vec<Partition> = partitions(n).collect();
        let mus: Vec<Partition> = partitions(m).collect();
        let lam = &lams[idx % lams.len()];
        let mu = &mus[jdx % mus.len()];
        let e = excitation_factor(lam, mu);
        prop_assert_eq!(e == 0u32.into(), !mu.is_minor_of(lam));
    }
}

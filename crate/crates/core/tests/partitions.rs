use num_bigint::BigUint;
use proptest::prelude::*;

use partition_minors::partition::{hook_grid, partition_count, partitions, Cell, Partition};

fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_size, 0..=max_size)
        .prop_map(Partition::from_unsorted)
        .prop_filter("bounded size", move |p| p.size() <= 3 * max_size)
}

#[test]
fn conjugation_is_an_involution_up_to_30() {
    for n in 0..=30 {
        for lam in partitions(n) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }
}

#[test]
fn enumeration_counts_and_order() {
    let known = [1u32, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101];
    for (n, &want) in known.iter().enumerate() {
        let all: Vec<Partition> = partitions(n).collect();
        assert_eq!(all.len() as u32, want);
        assert_eq!(partition_count(n), BigUint::from(want));
        assert!(all.windows(2).all(|w| w[0] < w[1]), "reverse-lex order at n={n}");
        assert!(all.iter().all(|p| p.cells().count() == n));
    }
    assert_eq!(partition_count(60), BigUint::from(966_467u32));
}

#[test]
fn hooks_round_trip_up_to_25() {
    for n in 0..=25 {
        for lam in partitions(n) {
            assert_eq!(Partition::from_first_row_hooks(&lam.first_row_hooks()).unwrap(), lam);
        }
    }
}

#[test]
fn text_form_round_trips() {
    for n in 0..=8 {
        for lam in partitions(n) {
            assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
        }
    }
    assert!("[2,3]".parse::<Partition>().is_err());
    assert!("[2,,1]".parse::<Partition>().is_err());
    assert_eq!("[3,1,0]".parse::<Partition>().unwrap(), Partition::new(vec![3, 1]).unwrap());
}

proptest! {
    #[test]
    fn minor_relation_is_transpose_equivariant(a in arb_partition(6), b in arb_partition(6)) {
        prop_assert_eq!(a.is_minor_of(&b), a.conjugate().is_minor_of(&b.conjugate()));
    }

    #[test]
    fn one_minors_match_corners(lam in arb_partition(7)) {
        let mut distinct = lam.parts().to_vec();
        distinct.dedup();
        prop_assert_eq!(lam.minors(1).len(), distinct.len());
        prop_assert_eq!(lam.corners().len(), distinct.len());
        for mu in lam.minors(1) {
            prop_assert!(mu.is_minor_of(&lam));
            prop_assert_eq!(mu.size() + 1, lam.size());
        }
    }

    #[test]
    fn hooks_strictly_decrease(lam in arb_partition(7)) {
        let grid = hook_grid(&lam);
        for cell in lam.cells() {
            let h = grid.get(cell).unwrap();
            let right = Cell::new(cell.row, cell.col + 1);
            let below = Cell::new(cell.row + 1, cell.col);
            if let Some(r) = grid.get(right) { prop_assert!(r < h); }
            if let Some(d) = grid.get(below) { prop_assert!(d < h); }
            prop_assert_eq!(h, lam.conjugate().hook(Cell::new(cell.col, cell.row)));
        }
    }

    #[test]
    fn minors_are_exactly_the_contained_partitions(lam in arb_partition(4), k in 0usize..6) {
        let k = k.min(lam.size());
        let want: Vec<Partition> = partitions(lam.size() - k).filter(|mu| mu.is_minor_of(&lam)).collect();
        prop_assert_eq!(lam.minors(k), want);
    }
}

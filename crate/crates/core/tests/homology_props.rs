//! Homology and Smith-form properties on generated posets and random
//! integer matrices.

mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use poset_forge::complex::{homology, homology_of, OrderComplex};
use poset_forge::intmat::{smith_normal_form, IntMatrix};
use poset_forge::poset::Poset;

#[test]
fn boundary_squared_vanishes_everywhere() {
    let mut posets = common::dedup_posets(common::natural_posets(5));
    posets.push((*common::sphere()).clone());
    for p in posets {
        let k = OrderComplex::new(Arc::new(p));
        for n in 1..=(k.top_degree().max(0) as usize) {
            let a = k.boundary_or_zero(n);
            let b = k.boundary_or_zero(n + 1);
            if b.cols > 0 {
                assert!(a.mul(&b).is_zero());
            }
        }
    }
}

#[test]
fn h0_rank_counts_components_without_torsion() {
    for p in common::dedup_posets(common::natural_posets(5)) {
        let h = homology(&p, 0);
        assert_eq!(h.rank, p.components().len());
        assert!(h.torsion.is_empty());
    }
}

#[test]
fn euler_characteristic_equals_betti_alternation() {
    for p in common::dedup_posets(common::natural_posets(5)) {
        let k = OrderComplex::new(Arc::new(p));
        let mut chi = 0i64;
        for n in 0..=(k.top_degree().max(0) as usize) {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            chi += sign * homology_of(&k, n).rank as i64;
        }
        assert_eq!(chi, k.euler_characteristic());
    }
}

#[test]
fn posets_with_unique_minimum_are_acyclic() {
    for p in common::dedup_posets(common::natural_posets(5)) {
        if p.minimal_elements().len() != 1 {
            continue;
        }
        for n in 1..=4 {
            assert!(homology(&p, n).is_trivial(), "cone has trivial H_{n}");
        }
    }
}

#[test]
fn degrees_above_top_are_trivial_not_errors() {
    let p = Poset::chain(3);
    for n in 3..8 {
        assert!(homology(&p, n).is_trivial());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn snf_decomposition_properties(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        // small pseudo-random integer matrix from the seed
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 19) - 9
        };
        let mut m = IntMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = BigInt::from(next());
            }
        }
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s.clone());
        prop_assert_eq!(snf.u.determinant().abs(), BigInt::one());
        prop_assert_eq!(snf.v.determinant().abs(), BigInt::one());
        let d = snf.diagonal();
        for w in d.windows(2) {
            if !w[0].is_zero() && !w[1].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            }
        }
        for i in 0..snf.s.rows {
            for j in 0..snf.s.cols {
                if i != j {
                    prop_assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
    }
}

//! Property suites: randomized inputs against brute-force oracles and
//! algebraic invariants.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use flagorbit_core::{
    orbits, schubert, Pattern, Permutation, RealizationDescriptor, Region, RootSystem, Side,
    Weight, WeylGroup,
};

/// Brute-force containment: try every index subset of size k.
fn contains_by_enumeration(perm: &[usize], pat: &[usize]) -> bool {
    fn go(perm: &[usize], pat: &[usize], start: usize, picked: &mut Vec<usize>) -> bool {
        if picked.len() == pat.len() {
            let order_matches = (0..pat.len()).all(|a| {
                (0..pat.len()).all(|b| (pat[a] < pat[b]) == (picked[a] < picked[b]))
            });
            return order_matches;
        }
        for i in start..perm.len() {
            picked.push(perm[i]);
            if go(perm, pat, i + 1, picked) {
                picked.pop();
                return true;
            }
            picked.pop();
        }
        false
    }
    go(perm, pat, 0, &mut Vec::new())
}

fn permutation_strategy(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=m).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn pattern_scan_matches_subset_enumeration(
        perm in (4usize..=8).prop_flat_map(permutation_strategy),
        pat in (2usize..=4).prop_flat_map(permutation_strategy),
    ) {
        let p = Permutation::new(perm.clone()).unwrap();
        let q = Pattern::new(pat.clone()).unwrap();
        let fast = schubert::contains_pattern(&p, &q).unwrap();
        prop_assert_eq!(fast, contains_by_enumeration(&perm, &pat));
    }

    #[test]
    fn any_word_normalizes_consistently(word in proptest::collection::vec(1usize..=3, 0..12)) {
        let g = WeylGroup::parse("A3").unwrap();
        let w = g.element_from_word(&word).unwrap();
        prop_assert!(w.length() <= word.len());
        // Parity of the length is the parity of the word.
        prop_assert_eq!(w.length() % 2, word.len() % 2);
        // The canonical word reproduces the element and is reduced.
        let again = g.element_from_word(w.word()).unwrap();
        prop_assert_eq!(&again, &w);
        prop_assert_eq!(again.word().len(), w.length());
    }

    #[test]
    fn generator_multiplication_changes_length_by_one(
        word in proptest::collection::vec(1usize..=3, 0..10),
        s in 1usize..=3,
        right in proptest::bool::ANY,
    ) {
        let g = WeylGroup::parse("A3").unwrap();
        let w = g.element_from_word(&word).unwrap();
        let side = if right { Side::Right } else { Side::Left };
        let ws = g.multiply_generator(&w, s, side).unwrap();
        let diff = ws.length() as i64 - w.length() as i64;
        prop_assert_eq!(diff.abs(), 1);
    }

    #[test]
    fn serre_dual_is_an_involution(
        degree in 0u64..=6,
        coords in proptest::collection::vec((-20i64..=20, 1i64..=6), 2),
        open_set in proptest::bool::ANY,
    ) {
        let sys = RootSystem::parse("A2").unwrap();
        let weight = Weight::new(
            coords
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        );
        let descriptor = RealizationDescriptor {
            degree,
            weight,
            region: if open_set { Region::OpenSet } else { Region::Orbit },
        };
        let dual = orbits::serre_dual(&sys, &descriptor).unwrap();
        prop_assert_eq!(descriptor.degree + dual.degree, 6);
        let back = orbits::serre_dual(&sys, &dual).unwrap();
        prop_assert_eq!(back, descriptor);
    }

    #[test]
    fn integrality_is_stable_under_negation_and_rho_shift(
        coords in proptest::collection::vec(-30i64..=30, 3),
    ) {
        let sys = RootSystem::parse("A3").unwrap();
        let mu = Weight::from_integers(&coords);
        prop_assert!(sys.is_integral(&mu));
        prop_assert!(sys.is_integral(&mu.negate()));
        prop_assert!(sys.is_integral(&sys.shift_to_d_module_parameter(&mu)));
    }

    #[test]
    fn integral_weights_split_under_negation(
        coords in proptest::collection::vec(-8i64..=8, 2),
    ) {
        let sys = RootSystem::parse("B2").unwrap();
        let lambda = Weight::from_integers(&coords);
        // Push every positive-coroot value strictly below zero; such a weight
        // is antidominant, and for integral data its negation never is.
        let shifted = lambda.sub(&Weight::from_integers(&[100, 100]));
        prop_assert!(sys.is_antidominant(&shifted));
        prop_assert!(sys.is_regular(&shifted));
        prop_assert!(!sys.is_antidominant(&shifted.negate()));
    }
}

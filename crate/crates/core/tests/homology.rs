mod common;

use std::sync::Arc;

use common::{groups, oracle_homology, report_groups};
use hocolim_core::fincat::{nerve, FinCat};
use hocolim_core::fixtures;
use hocolim_core::homology::{homology, is_homology_iso, maps_equal_on_homology};
use hocolim_core::sset::*;
use hocolim_core::Budget;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(x: &SimplicialSet, expected: Vec<(usize, Vec<u64>)>) {
    let report = homology(x);
    assert_eq!(oracle_homology(x), expected, "oracle disagrees with the expected groups");
    assert_eq!(report_groups(&report), expected, "{}", report.summary());
}

#[test]
fn boundary_of_the_three_simplex_is_a_sphere() {
    check(&boundary(3, 3).unwrap(), groups(&[(1, &[]), (0, &[]), (1, &[])]));
}

#[test]
fn square_is_contractible() {
    let d1 = standard_simplex(1, 3).unwrap();
    let sq = product(&d1, &d1).unwrap();
    check(&sq, groups(&[(1, &[]), (0, &[]), (0, &[])]));
    assert!(homology(&sq).is_point());
}

#[test]
fn nerve_of_z2_has_two_torsion_in_odd_degrees() {
    let (x, _) = nerve(&FinCat::cyclic_group(2), 4, Budget::default()).unwrap();
    check(&x, groups(&[(1, &[]), (0, &[2]), (0, &[]), (0, &[2])]));
}

#[test]
fn coequalizer_circle() {
    let pt = Arc::new(point(3));
    let d1 = Arc::new(standard_simplex(1, 3).unwrap());
    let (c, q) = coequalizer(&vertex_map(&pt, &d1, 0), &vertex_map(&pt, &d1, 1)).unwrap();
    check(&c, groups(&[(1, &[]), (1, &[]), (0, &[])]));
    assert!(!is_homology_iso(&q).iso);
}

#[test]
fn simplices_horns_and_spheres() {
    for n in 0..=3 {
        assert!(homology(&standard_simplex(n, 3).unwrap()).is_point(), "Δ[{n}]");
    }
    for n in 1..=3 {
        for k in 0..=n {
            assert!(homology(&horn(n, k, 3).unwrap()).is_point(), "Λ[{n},{k}]");
        }
    }
    // ∂Δ[1] is two points, ∂Δ[2] a circle
    check(&boundary(1, 3).unwrap(), groups(&[(2, &[]), (0, &[]), (0, &[])]));
    check(&boundary(2, 3).unwrap(), groups(&[(1, &[]), (1, &[]), (0, &[])]));
}

#[test]
fn nerve_of_z3_and_of_a_span() {
    let (x, _) = nerve(&FinCat::cyclic_group(3), 4, Budget::default()).unwrap();
    check(&x, groups(&[(1, &[]), (0, &[3]), (0, &[]), (0, &[3])]));
    let (s, _) = nerve(&FinCat::span(), 3, Budget::default()).unwrap();
    assert!(homology(&s).is_point());
}

#[test]
fn only_degrees_below_the_truncation_are_reported() {
    let r = homology(&boundary(3, 3).unwrap());
    assert_eq!(r.degrees.len(), 3);
    assert_eq!(r.reliable_up_to, 2);
}

#[test]
fn identity_and_vertex_inclusions() {
    let x = Arc::new(boundary(3, 3).unwrap());
    assert!(is_homology_iso(&SimplicialMap::identity(x.clone())).iso);
    let pt = Arc::new(point(3));
    let d2 = Arc::new(standard_simplex(2, 3).unwrap());
    assert!(is_homology_iso(&vertex_map(&pt, &d2, 1)).iso);
    // a point into the sphere misses H2
    let v = is_homology_iso(&vertex_map(&pt, &x, 0));
    assert!(!v.iso);
    assert!(v.pi0_bijective);
    assert_eq!(v.failing_degree, Some(2));
    // two points onto one fail on π0
    let two = Arc::new(boundary(1, 3).unwrap());
    let v = is_homology_iso(&to_point(&two, &pt));
    assert!(!v.pi0_bijective);
    assert_eq!(v.failing_degree, Some(0));
}

#[test]
fn four_cycle_and_a_wedge_of_circles() {
    let four_cycle = Arc::new(simplicial_complex(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], 3).unwrap());
    let pt = Arc::new(point(3));
    let d1 = Arc::new(standard_simplex(1, 3).unwrap());
    let (circle, _) = coequalizer(&vertex_map(&pt, &d1, 0), &vertex_map(&pt, &d1, 1)).unwrap();
    let square = homology(&four_cycle);
    assert_eq!(square.betti_numbers(), vec![1, 1, 0]);
    assert_eq!(homology(&circle).betti_numbers(), vec![1, 1, 0]);
    // quotienting two opposite vertices of the 4-cycle gives a wedge of two circles
    let (wedge, q) = quotient(&four_cycle, [(0, 0, 2)]);
    assert_eq!(homology(&wedge).betti_numbers(), vec![1, 2, 0]);
    assert!(!is_homology_iso(&q).iso);
}

#[test]
fn homotopic_maps_agree_on_homology() {
    let pt = Arc::new(point(3));
    let d2 = Arc::new(standard_simplex(2, 3).unwrap());
    let a = vertex_map(&pt, &d2, 0);
    let b = vertex_map(&pt, &d2, 2);
    assert!(maps_equal_on_homology(&a, &b).unwrap());
    let s0 = fixtures::s0(3);
    let id = SimplicialMap::identity(s0.clone());
    let swap = map_on_vertices(&s0, &s0, |v| 1 - v).unwrap();
    assert!(!maps_equal_on_homology(&id, &swap).unwrap());
    assert!(is_homology_iso(&swap).iso);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn library_homology_matches_the_unnormalized_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = fixtures::random_complex(&mut rng, 3);
        prop_assert_eq!(report_groups(&homology(&x)), oracle_homology(&x));
    }

    #[test]
    fn euler_characteristic_is_preserved_by_normalization(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = fixtures::random_complex(&mut rng, 3);
        // a complex of dimension ≤ 2 at truncation 3 has no nondegenerate 3-simplices,
        // so the alternating sum of nondegenerate counts is the Euler characteristic
        prop_assume!(x.nondegenerate(3).is_empty());
        let chi: i64 = x.nondegenerate_counts().iter().enumerate().map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        let h = homology(&x);
        let hchi: i64 = h.betti_numbers().iter().enumerate().map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(chi, hchi);
    }

    #[test]
    fn quotient_map_and_its_homology(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = Arc::new(fixtures::random_complex(&mut rng, 3));
        let (q, _) = quotient(&x, [(0, 0, x.count(0) - 1)]);
        prop_assert_eq!(report_groups(&homology(&q)), oracle_homology(&q));
    }
}

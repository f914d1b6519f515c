mod common;

use std::sync::Arc;

use common::{identity_violations, map_violations};
use hocolim_core::cosimp::{tensor, tensor_delta, CosimplicialSS};
use hocolim_core::diagcat::{srep, srep_diagonal};
use hocolim_core::fincat::{nerve, FinCat};
use hocolim_core::fixtures;
use hocolim_core::hocolim::bk_hocolim;
use hocolim_core::sset::*;
use hocolim_core::Budget;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: usize = 3;

fn corpus() -> Vec<(String, SimplicialSet)> {
    let mut out = Vec::new();
    for n in 0..=N {
        out.push((format!("Δ[{n}]"), standard_simplex(n, N).unwrap()));
    }
    for n in 1..=N + 1 {
        out.push((format!("∂Δ[{n}]"), boundary(n, N).unwrap()));
        for k in 0..=n {
            out.push((format!("Λ[{n},{k}]"), horn(n, k, N).unwrap()));
        }
    }
    let d1 = standard_simplex(1, N).unwrap();
    let d2 = standard_simplex(2, N).unwrap();
    out.push(("Δ[1]×Δ[1]".into(), product(&d1, &d1).unwrap()));
    out.push(("Δ[1]×Δ[2]".into(), product(&d1, &d2).unwrap()));
    out.push(("∂Δ[2]×Δ[1]".into(), product(&boundary(2, N).unwrap(), &d1).unwrap()));
    out.push(("Δ[1]⊔∂Δ[3]".into(), coproduct(&[&d1, &boundary(3, N).unwrap()]).unwrap()));
    let budget = Budget::default();
    for c in [FinCat::terminal(), FinCat::arrow(), FinCat::span(), FinCat::cyclic_group(2), FinCat::cyclic_group(3)] {
        let name = format!("N({})", c.name());
        out.push((name, nerve(&c, N, budget).unwrap().0));
    }
    out.push(("circle".into(), (*circle()).clone()));
    out
}

/// Δ[1] with its two vertices identified.
fn circle() -> Arc<SimplicialSet> {
    let pt = Arc::new(point(N));
    let d1 = Arc::new(standard_simplex(1, N).unwrap());
    let (c, _) = coequalizer(&vertex_map(&pt, &d1, 0), &vertex_map(&pt, &d1, 1)).unwrap();
    c
}

#[test]
fn simplicial_identities_hold_on_the_corpus() {
    for (name, x) in corpus() {
        assert_eq!(identity_violations(&x), 0, "{name}");
        assert!(x.check_identities().is_ok(), "{name}");
    }
}

#[test]
fn standard_simplex_counts() {
    // Δ[n]_k has C(n+k+1, k+1) simplices
    let binom = |a: usize, b: usize| if b > a { 0 } else { (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1)) };
    for n in 0..=N {
        let x = standard_simplex(n, N).unwrap();
        for k in 0..=N {
            assert_eq!(x.count(k), binom(n + k + 1, k + 1));
        }
        let nondeg: Vec<usize> = (0..=N).map(|k| binom(n + 1, k + 1)).collect();
        assert_eq!(x.nondegenerate_counts(), nondeg);
    }
}

#[test]
fn boundary_and_horn_drop_the_right_simplices() {
    let d3 = standard_simplex(3, N).unwrap();
    let b3 = boundary(3, N).unwrap();
    assert_eq!(b3.nondegenerate_counts(), vec![4, 6, 4, 0]);
    assert_eq!(d3.nondegenerate_counts(), vec![4, 6, 4, 1]);
    let h = horn(3, 1, N).unwrap();
    assert_eq!(h.nondegenerate_counts(), vec![4, 6, 3, 0]);
}

#[test]
fn product_of_intervals_has_two_triangles() {
    let d1 = standard_simplex(1, N).unwrap();
    let sq = product(&d1, &d1).unwrap();
    assert_eq!(sq.nondegenerate_counts(), vec![4, 5, 2, 0]);
    // product counts are products of counts levelwise
    for n in 0..=N {
        assert_eq!(sq.count(n), d1.count(n) * d1.count(n));
    }
}

#[test]
fn projections_and_injections_are_simplicial() {
    let x = Arc::new(boundary(2, N).unwrap());
    let y = Arc::new(standard_simplex(1, N).unwrap());
    let p = Arc::new(product(&x, &y).unwrap());
    assert_eq!(map_violations(&product_projection(&x, &y, &p, true)), 0);
    assert_eq!(map_violations(&product_projection(&x, &y, &p, false)), 0);
    let pt = Arc::new(point(N));
    for v in 0..3 {
        assert_eq!(map_violations(&vertex_map(&pt, &x, v)), 0);
    }
}

#[test]
fn nerve_of_a_group_has_all_chains() {
    let c = FinCat::cyclic_group(3);
    let (x, _) = nerve(&c, N, Budget::default()).unwrap();
    for n in 0..=N {
        assert_eq!(x.count(n), 3usize.pow(n as u32));
    }
    // nondegenerate chains avoid the identity
    assert_eq!(x.nondegenerate_counts(), vec![1, 2, 4, 8]);
}

#[test]
fn opposite_is_an_involution() {
    for c in [FinCat::arrow(), FinCat::span(), FinCat::cyclic_group(3), FinCat::poset("chain", &["a", "b", "c"], &[(0, 1), (1, 2)]).unwrap()] {
        let oo = c.opposite().opposite();
        assert!(oo == c, "{}", c.name());
        assert!(c.opposite().check().is_ok());
        for m in 0..c.morphism_count() {
            assert_eq!(c.opposite().source(m), c.target(m));
        }
    }
}

#[test]
fn cosimplicial_identities_on_resolutions_and_tensors() {
    let budget = Budget::default();
    let x = Arc::new(boundary(2, N).unwrap());
    let canon = Arc::new(CosimplicialSS::canonical_resolution(x.clone()).unwrap());
    assert!(canon.check().is_ok());
    for n in 0..=N {
        assert_eq!(identity_violations(canon.component(n)), 0);
    }
    let (t, pieces) = tensor(&canon, &Arc::new(standard_simplex(1, N).unwrap()), budget).unwrap();
    assert!(t.check().is_ok());
    for p in &pieces {
        assert_eq!(identity_violations(&p.set), 0);
    }
    let k = circle();
    let td = tensor_delta(&canon, &k, budget).unwrap();
    assert_eq!(identity_violations(&td.set), 0);
}

#[test]
fn coend_outputs_satisfy_the_identities() {
    let budget = Budget::default();
    for d in [fixtures::pushout(N), fixtures::swap_action(N)] {
        let bk = bk_hocolim(&d, None, false, budget).unwrap();
        assert_eq!(identity_violations(&bk.set), 0);
        assert_eq!(map_violations(&bk.to_colim), 0);
        let model = srep_diagonal(&d, budget).unwrap();
        assert_eq!(identity_violations(&model.set), 0);
        let (b, _) = srep(&d, budget).unwrap();
        assert!(b.check().is_ok());
        for p in 0..=N {
            assert_eq!(identity_violations(b.column(p)), 0);
        }
    }
}

#[test]
fn maps_on_vertices_respect_faces() {
    let x = Arc::new(standard_simplex(2, N).unwrap());
    let y = Arc::new(standard_simplex(1, N).unwrap());
    let f = map_on_vertices(&x, &y, |v| usize::from(v >= 1)).unwrap();
    assert_eq!(map_violations(&f), 0);
    assert!(map_on_vertices(&x, &y, |v| 1 - v.min(1)).is_err(), "not order preserving");
}

#[test]
fn enumerated_maps_are_all_simplicial_and_distinct() {
    let x = Arc::new(boundary(2, N).unwrap());
    let y = Arc::new(standard_simplex(1, N).unwrap());
    let maps = enumerate_maps(&x, &y, 100_000).unwrap();
    // a map ∂Δ[2] -> Δ[1] is a monotone vertex map {0,1,2} -> {0,1}
    assert_eq!(maps.len(), 4);
    for m in &maps {
        assert_eq!(map_violations(m), 0);
    }
    let mut images: Vec<_> = maps.iter().map(|m| m.nondegenerate_images()).collect();
    images.sort();
    images.dedup();
    assert_eq!(images.len(), 4);
    // into the circle the edge goes to the loop or to the degenerate edge
    let into_circle = enumerate_maps(&Arc::new(standard_simplex(1, N).unwrap()), &circle(), 100_000).unwrap();
    assert_eq!(into_circle.len(), 2);
}

#[test]
fn budget_exhaustion_is_an_error() {
    let x = Arc::new(standard_simplex(3, N).unwrap());
    let y = Arc::new(standard_simplex(3, N).unwrap());
    assert!(matches!(enumerate_maps(&x, &y, 3), Err(hocolim_core::Error::BudgetExceeded { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_complexes_and_products_are_simplicial(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = fixtures::random_complex(&mut rng, N);
        let b = fixtures::random_complex(&mut rng, N);
        prop_assert_eq!(identity_violations(&a), 0);
        let p = product(&a, &b).unwrap();
        prop_assert_eq!(identity_violations(&p), 0);
        for n in 0..=N {
            prop_assert_eq!(p.count(n), a.count(n) * b.count(n));
        }
        let c = coproduct(&[&a, &b]).unwrap();
        prop_assert_eq!(identity_violations(&c), 0);
    }

    #[test]
    fn quotients_by_vertex_pairs_are_simplicial(seed in any::<u64>(), u in 0usize..4, v in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = Arc::new(fixtures::random_complex(&mut rng, N));
        let (u, v) = (u % x.count(0), v % x.count(0));
        let (q, map) = quotient(&x, [(0, u, v)]);
        prop_assert_eq!(identity_violations(&q), 0);
        prop_assert_eq!(map_violations(&map), 0);
        prop_assert_eq!(map.apply(0, u), map.apply(0, v));
    }

    #[test]
    fn random_diagrams_have_simplicial_replacements(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = fixtures::random_diagram(&mut rng, N);
        prop_assert!(d.check().is_ok());
        let model = srep_diagonal(&d, Budget::default()).unwrap();
        prop_assert_eq!(identity_violations(&model.set), 0);
    }
}

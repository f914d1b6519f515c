mod common;

use std::sync::Arc;

use common::{identity_violations, map_violations};
use hocolim_core::diagcat::{overcat_exponential_iso, overcategory, realize, resolution_overcategory, sing, yoneda, CosimplicialDiagram};
use hocolim_core::fincat::{nerve, FinCat};
use hocolim_core::fixtures;
use hocolim_core::hocolim::{canonical_hocolim, naive_hocolim, re_q_sing, Method};
use hocolim_core::homology::{homology, is_homology_iso};
use hocolim_core::sset::*;
use hocolim_core::Budget;

const N: usize = 3;

fn budget() -> Budget {
    Budget::default()
}

fn bd() -> Arc<SimplicialSet> {
    Arc::new(boundary(2, N).unwrap())
}

#[test]
fn undercategory_of_an_arrow() {
    let c = Arc::new(FinCat::arrow());
    let (under, proj) = c.undercategory(0).unwrap();
    assert_eq!(under.object_count(), 2);
    // one non-identity arrow, from (a, id) to (b, a<b)
    assert_eq!(under.morphism_count(), 3);
    assert!(proj.check().is_ok());
    let (n, _) = nerve(&under, N, budget()).unwrap();
    assert!(homology(&n).is_point());
    let (under_b, _) = c.undercategory(1).unwrap();
    assert_eq!(under_b.object_count(), 1);
}

#[test]
fn overcategory_counts_follow_yoneda() {
    // objects over X are pairs (c, x ∈ X_dim c); a morphism over u: c -> c' is
    // determined by its target object, so there are Σ_u |X_{dim c'}| of them
    let c = fixtures::simplex_category(N, budget()).unwrap();
    for x in [bd(), Arc::new(standard_simplex(1, N).unwrap()), Arc::new(horn(2, 0, N).unwrap())] {
        let over = overcategory(&c, &x, budget()).unwrap();
        assert!(over.category.check().is_ok());
        assert_eq!(over.object_count(), x.count(0) + x.count(1));
        let shape = c.shape();
        // object k of the shape is Δ[k]
        let expected: usize = (0..shape.morphism_count()).map(|u| x.count(shape.target(u))).sum();
        assert_eq!(over.category.morphism_count(), expected);
        // the structure maps form a cocone over X
        for (o, phi) in over.maps.iter().enumerate() {
            assert_eq!(map_violations(phi), 0, "object {o}");
        }
        assert!(over.evaluation.check().is_ok());
    }
}

#[test]
fn naive_hocolim_over_vertices_is_discrete() {
    // only identities between vertices, so one point per vertex of X
    let c = fixtures::vertex_category(N, budget()).unwrap();
    for x in [bd(), Arc::new(standard_simplex(2, N).unwrap()), fixtures::s0(N)] {
        let h = naive_hocolim(&c, &x, Method::Srep, budget()).unwrap();
        let r = homology(&h.result.set);
        assert_eq!(r.betti(0), x.count(0));
        assert!((1..r.degrees.len()).all(|n| r.betti(n) == 0));
    }
}

#[test]
fn naive_hocolim_with_edges_recovers_x() {
    let c = fixtures::simplex_category(N, budget()).unwrap();
    for x in [bd(), Arc::new(standard_simplex(1, N).unwrap())] {
        for method in [Method::Srep, Method::Bk] {
            let h = naive_hocolim(&c, &x, method, budget()).unwrap();
            let v = is_homology_iso(h.result.comparison.as_ref().unwrap());
            assert!(v.iso, "{method:?}");
        }
    }
}

#[test]
fn exponential_iso_is_an_isomorphism_of_categories() {
    let c = fixtures::vertex_category(N, budget()).unwrap();
    for n in 0..=1 {
        let iso = overcat_exponential_iso(&c, &bd(), n, budget()).unwrap();
        iso.check().unwrap();
        assert_eq!(iso.slice.object_count(), iso.curried.object_count());
        assert_eq!(iso.slice.category.morphism_count(), iso.curried.category.morphism_count());
        // maps Δ[0] × Δ[n] -> X are the n-simplices of X
        assert_eq!(iso.slice.object_count(), bd().count(n));
        assert_eq!(identity_violations(&iso.exponential.set), 0);
    }
    let c = fixtures::simplex_category(N, budget()).unwrap();
    overcat_exponential_iso(&c, &bd(), 1, budget()).unwrap().check().unwrap();
}

#[test]
fn exponential_curry_uncurry_round_trip() {
    let x = bd();
    let k = Arc::new(standard_simplex(1, N).unwrap());
    let e = Exponential::new(&x, &k, budget()).unwrap();
    // X^Δ[0]-vertices are the maps Δ[1] -> X, i.e. edges of X
    assert_eq!(e.set.count(0), x.count(1));
    let a = Arc::new(standard_simplex(1, N).unwrap());
    let axk = Arc::new(product(&a, &k).unwrap());
    for f in enumerate_maps(&axk, &x, 1_000_000).unwrap() {
        let g = e.curry(&a, &f).unwrap();
        assert_eq!(map_violations(&g), 0);
        let back = e.uncurry(&g, &axk).unwrap();
        assert_eq!(back.levels(), f.levels());
    }
}

#[test]
fn resolution_overcategory_counts() {
    let c = fixtures::vertex_category(N, budget()).unwrap();
    let gamma = CosimplicialDiagram::canonical(&c).unwrap();
    let x = bd();
    for depth in 0..=2 {
        let r = resolution_overcategory(&gamma, &x, depth, budget()).unwrap();
        let expected: usize = (0..=depth).map(|n| x.count(n)).sum();
        assert_eq!(r.over.object_count(), expected);
        assert!(r.inclusion.check().is_ok());
        assert!(r.over.category.check().is_ok());
    }
}

#[test]
fn sing_and_realize() {
    let c = fixtures::vertex_category(N, budget()).unwrap();
    let gamma = CosimplicialDiagram::canonical(&c).unwrap();
    let x = bd();
    // Hom(Δ[0] × Δ[n], X) = X_n
    let s = sing(&gamma, &x, budget()).unwrap();
    assert_eq!(s.object(0).counts(), x.counts());
    // realizing the singular presheaf of the standard cosimplicial simplex gives X back
    let re = realize(&gamma, &s, budget()).unwrap();
    assert!(find_isomorphism(&re.set, &x, 1_000_000).unwrap().is_some());
    // a representable realizes to its value at level 0
    let c2 = fixtures::simplex_category(N, budget()).unwrap();
    let gamma2 = CosimplicialDiagram::canonical(&c2).unwrap();
    for o in 0..2 {
        let y = yoneda(c2.shape(), o, N).unwrap();
        let re = realize(&gamma2, &y, budget()).unwrap();
        assert_eq!(re.set.counts(), c2.object(o).counts());
    }
}

#[test]
fn canonical_hocolim_of_a_point_is_contractible() {
    let c = fixtures::vertex_category(N, budget()).unwrap();
    let gamma = CosimplicialDiagram::canonical(&c).unwrap();
    for depth in 0..=2 {
        let h = canonical_hocolim(&gamma, &Arc::new(point(N)), depth, Method::Srep, budget()).unwrap();
        assert!(homology(&h.result.set).is_point(), "depth {depth}");
        assert!(is_homology_iso(h.result.comparison.as_ref().unwrap()).iso);
    }
}

#[test]
fn canonical_hocolim_over_a_circle() {
    let c = fixtures::vertex_category(N, budget()).unwrap();
    let gamma = CosimplicialDiagram::canonical(&c).unwrap();
    let h = canonical_hocolim(&gamma, &bd(), 1, Method::Srep, budget()).unwrap();
    assert!(is_homology_iso(h.result.comparison.as_ref().unwrap()).iso);
    assert_eq!(homology(&h.result.set).betti_numbers(), vec![1, 1, 0]);
    // the naive part is three points, so i_* is not an equivalence here
    assert!(!is_homology_iso(&h.inclusion).iso);
    assert_eq!(map_violations(&h.inclusion), 0);
}

#[test]
fn canonical_hocolim_for_a_discrete_target() {
    // every column is the same discrete set, so i_* is an equivalence
    let c = fixtures::simplex_category(N, budget()).unwrap();
    let gamma = CosimplicialDiagram::canonical(&c).unwrap();
    let h = canonical_hocolim(&gamma, &fixtures::s0(N), 1, Method::Srep, budget()).unwrap();
    assert!(is_homology_iso(&h.inclusion).iso);
    assert!(is_homology_iso(h.result.comparison.as_ref().unwrap()).iso);
}

#[test]
fn re_q_sing_of_a_point_is_a_point() {
    let c = fixtures::vertex_category(N, budget()).unwrap();
    let q = re_q_sing(&c, &Arc::new(point(N)), budget()).unwrap();
    assert!(homology(&q.set).is_point());
    assert_eq!(q.set.counts(), vec![1; N + 1]);
}

#[test]
fn re_q_sing_over_a_circle() {
    let c = fixtures::vertex_category(N, budget()).unwrap();
    let x = bd();
    let q = re_q_sing(&c, &x, budget()).unwrap();
    assert!(q.bisimplicial.check().is_ok());
    assert_eq!(identity_violations(&q.set), 0);
    assert_eq!(map_violations(&q.to_target), 0);
    assert!(is_homology_iso(&q.to_target).iso);
    // level-0 triangle: column 0 -> diagonal -> X is the naive comparison
    let composite = q.column_zero.then(&q.to_target).unwrap();
    assert_eq!(composite.levels(), q.naive_comparison.levels());
    let gamma = CosimplicialDiagram::canonical(&c).unwrap();
    let can = canonical_hocolim(&gamma, &x, 1, Method::Srep, budget()).unwrap();
    assert!(homology(&q.set).same_groups(&homology(&can.result.set)));
}

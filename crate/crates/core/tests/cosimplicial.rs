mod common;

use std::sync::Arc;

use common::{discrete_pairs, identity_violations, map_violations};
use hocolim_core::cosimp::{co_yoneda, last_vertex_homotopy, power, tensor_delta, CosimplicialSS};
use hocolim_core::fixtures;
use hocolim_core::homology::homology;
use hocolim_core::sset::*;
use hocolim_core::Budget;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: usize = 3;

fn circle() -> Arc<SimplicialSet> {
    let pt = Arc::new(point(N));
    let d1 = Arc::new(standard_simplex(1, N).unwrap());
    coequalizer(&vertex_map(&pt, &d1, 0), &vertex_map(&pt, &d1, 1)).unwrap().0
}

#[test]
fn co_yoneda_on_the_canonical_resolution() {
    let a = Arc::new(CosimplicialSS::canonical_resolution(Arc::new(boundary(2, N).unwrap())).unwrap());
    for k in 0..=N {
        let td = tensor_delta(&a, &Arc::new(standard_simplex(k, N).unwrap()), Budget::default()).unwrap();
        let m = co_yoneda(&td, k).unwrap();
        assert_eq!(map_violations(&m), 0);
        assert!(m.is_bijective(), "k = {k}");
        assert_eq!(td.set.counts(), a.component(k).counts());
    }
}

#[test]
fn canonical_resolution_tensor_is_the_product() {
    // [n] ↦ X × Δ[n] tensored with K is X × K
    let x = Arc::new(boundary(2, N).unwrap());
    let a = Arc::new(CosimplicialSS::canonical_resolution(x.clone()).unwrap());
    for k in [circle(), Arc::new(boundary(1, N).unwrap()), Arc::new(horn(2, 1, N).unwrap())] {
        let td = tensor_delta(&a, &k, Budget::default()).unwrap();
        let p = Arc::new(product(&x, &k).unwrap());
        assert_eq!(td.set.counts(), p.counts());
        assert!(find_isomorphism(&td.set, &p, 1_000_000).unwrap().is_some());
        assert_eq!(identity_violations(&td.set), 0);
    }
}

#[test]
fn constant_tensor_sees_only_components() {
    let x = Arc::new(boundary(2, N).unwrap());
    let a = Arc::new(CosimplicialSS::constant(x.clone()));
    let k = Arc::new(coproduct(&[&circle(), &standard_simplex(2, N).unwrap(), &point(N)]).unwrap());
    let td = tensor_delta(&a, &k, Budget::default()).unwrap();
    let counts: Vec<usize> = x.counts().iter().map(|c| c * 3).collect();
    assert_eq!(td.set.counts(), counts);
}

#[test]
fn canonical_resolution_is_a_resolution_and_constant_is_too() {
    let x = Arc::new(boundary(2, N).unwrap());
    assert!(CosimplicialSS::canonical_resolution(x.clone()).unwrap().is_resolution());
    assert!(CosimplicialSS::constant(x).is_resolution());
}

#[test]
fn a_levelwise_discrete_object_is_not_a_resolution() {
    let a = discrete_pairs(N);
    assert_eq!(a.components().iter().map(|c| c.count(0)).collect::<Vec<_>>(), vec![1, 3, 6, 10]);
    assert!(!a.is_resolution());
    // co-Yoneda holds for any cosimplicial object
    let a = Arc::new(a);
    for k in 0..=N {
        let td = tensor_delta(&a, &Arc::new(standard_simplex(k, N).unwrap()), Budget::default()).unwrap();
        assert!(co_yoneda(&td, k).unwrap().is_bijective());
    }
}

#[test]
fn powers_are_cosimplicial() {
    let a = CosimplicialSS::canonical_resolution(Arc::new(point(N))).unwrap();
    let p = power(&a, &boundary(1, N).unwrap(), Budget::default()).unwrap();
    assert!(p.check().is_ok());
    // (Δ[n])^{two points} is Δ[n] × Δ[n]
    let d1 = standard_simplex(1, N).unwrap();
    assert_eq!(p.component(1).counts(), product(&d1, &d1).unwrap().counts());
}

#[test]
fn last_vertex_homotopy_ends() {
    for n in 0..N {
        let h = last_vertex_homotopy(n, N).unwrap();
        assert_eq!(map_violations(&h.h), 0);
        assert_eq!(map_violations(&h.j), 0);
        // one end is the identity, the other the constant map at the last vertex
        let start = h.ends[0].then(&h.h).unwrap();
        let end = h.ends[1].then(&h.h).unwrap();
        let images = |m: &SimplicialMap| (0..h.simplex.count(0)).map(|v| m.apply(0, v)).collect::<Vec<_>>();
        let id: Vec<usize> = (0..=n).collect();
        let (a, b) = (images(&start), images(&end));
        assert!(a == id || b == id);
        assert!(a == vec![n; n + 1] || b == vec![n; n + 1]);
        assert!(homology(&h.prism).is_point());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn co_yoneda_is_an_isomorphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Arc::new(fixtures::random_cosimplicial(&mut rng, N, Budget::default()).unwrap());
        prop_assert!(a.check().is_ok());
        for k in 0..=N {
            let td = tensor_delta(&a, &Arc::new(standard_simplex(k, N).unwrap()), Budget::default()).unwrap();
            let m = co_yoneda(&td, k).unwrap();
            prop_assert_eq!(map_violations(&m), 0);
            prop_assert!(m.is_bijective());
        }
    }
}

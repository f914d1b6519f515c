mod common;

use std::sync::Arc;

use common::{discrete_pairs, identity_violations, map_violations, oracle_homology, report_groups};
use hocolim_core::cosimp::CosimplicialMap;
use hocolim_core::diagcat::{CosimplicialDiagram, Diagram, DiagramMap};
use hocolim_core::fincat::{nerve, FinCat, Functor};
use hocolim_core::fixtures;
use hocolim_core::hocolim::{bk_hocolim, colim, hocolim, induced_by_map, pushforward, srep_hocolim, HocolimResult, Method};
use hocolim_core::homology::{homology, is_homology_iso};
use hocolim_core::sset::*;
use hocolim_core::{Budget, Error};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: usize = 3;

fn both(d: &Diagram) -> [HocolimResult; 2] {
    [srep_hocolim(d, Budget::default()).unwrap(), bk_hocolim(d, None, false, Budget::default()).unwrap()]
}

fn chain3() -> Arc<FinCat> {
    Arc::new(FinCat::poset("chain", &["a", "b", "c"], &[(0, 1), (1, 2)]).unwrap())
}

#[test]
fn terminal_shape_gives_the_value_back() {
    let x = Arc::new(boundary(3, N).unwrap());
    let d = Diagram::constant(Arc::new(FinCat::terminal()), x.clone());
    for h in both(&d) {
        assert!(is_homology_iso(&h.to_colim).iso, "{:?}", h.method);
        assert!(homology(&h.set).same_groups(&homology(&x)));
    }
    // the replacement over a point is the value itself
    let s = srep_hocolim(&d, Budget::default()).unwrap();
    assert_eq!(s.set.counts(), x.counts());
}

#[test]
fn shape_with_a_terminal_object() {
    // over a < b < c the hocolim is equivalent to the value at c
    let shape = chain3();
    let pt = Arc::new(point(N));
    let d1 = Arc::new(standard_simplex(1, N).unwrap());
    let circle = Arc::new(boundary(2, N).unwrap());
    let u = shape.find_morphism("a<b").unwrap();
    let v = shape.find_morphism("b<c").unwrap();
    let d = Diagram::from_generators(shape, vec![pt.clone(), d1.clone(), circle.clone()], vec![(u, vertex_map(&pt, &d1, 0)), (v, map_on_vertices(&d1, &circle, |x| x).unwrap())]).unwrap();
    for h in both(&d) {
        assert!(is_homology_iso(&h.to_colim).iso);
        assert_eq!(homology(&h.set).betti_numbers(), vec![1, 1, 0]);
    }
}

#[test]
fn pushout_of_points_is_a_circle() {
    let d = fixtures::pushout(N);
    for h in both(&d) {
        let r = homology(&h.set);
        assert_eq!(report_groups(&r), oracle_homology(&h.set));
        assert_eq!(r.betti_numbers(), vec![1, 1, 0], "{:?}", h.method);
        // the colimit is a point, so the comparison is not an equivalence
        assert!(homology(&h.colim.set).is_point());
        assert!(!is_homology_iso(&h.to_colim).iso);
    }
}

#[test]
fn constant_point_gives_the_nerve() {
    let shapes = [chain3(), Arc::new(FinCat::span()), Arc::new(FinCat::cyclic_group(2)), Arc::new(FinCat::cyclic_group(3))];
    for c in shapes {
        let d = fixtures::constant_point(&c, N);
        let (n, _) = nerve(&c, N, Budget::default()).unwrap();
        let s = srep_hocolim(&d, Budget::default()).unwrap();
        // exactly the nerve for the replacement
        assert!(find_isomorphism(&s.set, &Arc::new(n.clone()), 1_000_000).unwrap().is_some(), "{}", c.name());
        let b = bk_hocolim(&d, None, false, Budget::default()).unwrap();
        assert_eq!(report_groups(&homology(&b.set)), oracle_homology(&n), "{}", c.name());
    }
}

#[test]
fn z2_acting_by_swap_is_free() {
    // the homotopy quotient of a free action is the strict quotient, a point
    let d = fixtures::swap_action(N);
    for h in both(&d) {
        assert!(homology(&h.set).is_point(), "{:?}", h.method);
        assert!(is_homology_iso(&h.to_colim).iso);
    }
}

#[test]
fn discrete_shape_gives_the_coproduct() {
    let shape = Arc::new(FinCat::discrete("two", &["a", "b"]));
    let x = Arc::new(boundary(2, N).unwrap());
    let y = Arc::new(standard_simplex(1, N).unwrap());
    let d = Diagram::new(shape, vec![x.clone(), y.clone()], vec![SimplicialMap::identity(x.clone()), SimplicialMap::identity(y.clone())]).unwrap();
    let cop = coproduct(&[&x, &y]).unwrap();
    for h in both(&d) {
        assert!(homology(&h.set).same_groups(&homology(&cop)));
        assert!(is_homology_iso(&h.to_colim).iso);
    }
    assert_eq!(colim(&d).unwrap().set.counts(), cop.counts());
}

#[test]
fn comparison_factors_through_the_colimit() {
    // the comparison of a diagram over X is the map to colim followed by the induced map
    let c = fixtures::simplex_category(N, Budget::default()).unwrap();
    let x = Arc::new(boundary(2, N).unwrap());
    let h = hocolim_core::hocolim::naive_hocolim(&c, &x, Method::Srep, Budget::default()).unwrap();
    let comparison = h.result.comparison.as_ref().unwrap();
    let onward = h.result.colim.induced(&x, &h.over.maps).unwrap();
    let composite = h.result.to_colim.then(&onward).unwrap();
    assert_eq!(comparison.levels(), composite.levels());
    assert_eq!(map_violations(comparison), 0);
}

#[test]
fn functoriality_of_pushforward() {
    // terminal -> arrow -> span picks out a, then a < b
    let span = Arc::new(FinCat::span());
    let arrow = Arc::new(FinCat::arrow());
    let term = Arc::new(FinCat::terminal());
    let on_morphisms = (0..arrow.morphism_count()).map(|m| if arrow.is_identity(m) { span.identity(arrow.source(m)) } else { span.find_morphism("a<b").unwrap() }).collect();
    let g = Functor::new(arrow.clone(), span.clone(), vec![0, 1], on_morphisms).unwrap();
    let f = Functor::new(term.clone(), arrow.clone(), vec![0], vec![arrow.identity(0)]).unwrap();
    let gf = f.then(&g).unwrap();
    let x = fixtures::pushout(N);
    for method in [Method::Srep, Method::Bk] {
        let hk = hocolim(&x, method, Budget::default()).unwrap();
        let hj = hocolim(&x.pullback(&g).unwrap(), method, Budget::default()).unwrap();
        let hi = hocolim(&x.pullback(&gf).unwrap(), method, Budget::default()).unwrap();
        let f_star = pushforward(&f, &hi, &hj).unwrap();
        let g_star = pushforward(&g, &hj, &hk).unwrap();
        let gf_star = pushforward(&gf, &hi, &hk).unwrap();
        assert_eq!(map_violations(&gf_star), 0);
        assert_eq!(f_star.then(&g_star).unwrap().levels(), gf_star.levels(), "{method:?}");
        // identity functor pushes forward to the identity
        let id = pushforward(&Functor::identity(&span), &hk, &hk).unwrap();
        assert_eq!(id.levels(), SimplicialMap::identity(hk.set.clone()).levels());
    }
}

#[test]
fn objectwise_equivalences_give_equivalences() {
    // Δ[1] <- S0 -> Δ[1] maps to pt <- S0 -> pt by collapsing
    let shape = Arc::new(FinCat::span());
    let s = fixtures::s0(N);
    let pt = Arc::new(point(N));
    let d1 = Arc::new(standard_simplex(1, N).unwrap());
    let u = shape.find_morphism("a<b").unwrap();
    let v = shape.find_morphism("a<c").unwrap();
    let inc = map_on_vertices(&s, &d1, |x| x).unwrap();
    let thick = Arc::new(Diagram::from_generators(shape.clone(), vec![s.clone(), d1.clone(), d1.clone()], vec![(u, inc.clone()), (v, inc)]).unwrap());
    let thin = Arc::new(fixtures::pushout(N));
    let eta = DiagramMap::new(thick.clone(), thin.clone(), vec![SimplicialMap::identity(s.clone()), to_point(&d1, &pt), to_point(&d1, &pt)]).unwrap();
    for method in [Method::Srep, Method::Bk] {
        let a = hocolim(&thick, method, Budget::default()).unwrap();
        let b = hocolim(&thin, method, Budget::default()).unwrap();
        let m = induced_by_map(&eta, &a, &b, None).unwrap();
        assert_eq!(map_violations(&m), 0);
        assert!(is_homology_iso(&m).iso, "{method:?}");
    }
    // the strict colimits differ: Δ[1] ∪ Δ[1] along S0 is a circle, the other a point
    assert!(!homology(&colim(&thick).unwrap().set).same_groups(&homology(&colim(&thin).unwrap().set)));
}

#[test]
fn non_resolutions_need_force_and_taint_the_result() {
    let shape = Arc::new(FinCat::terminal());
    let a = Arc::new(discrete_pairs(N));
    let d = Diagram::constant(shape.clone(), a.component(0).clone());
    let gamma = CosimplicialDiagram::new(shape, vec![a.clone()], vec![CosimplicialMap::identity(&a)]).unwrap();
    assert!(!gamma.is_resolution());
    assert!(matches!(bk_hocolim(&d, Some(&gamma), false, Budget::default()), Err(Error::NotResolution(_))));
    let forced = bk_hocolim(&d, Some(&gamma), true, Budget::default()).unwrap();
    assert!(forced.provenance.tainted);
    assert_eq!(forced.provenance.resolution, Some(false));
    let clean = bk_hocolim(&d, None, false, Budget::default()).unwrap();
    assert!(!clean.provenance.tainted);
    assert_eq!(identity_violations(&forced.set), 0);
}

#[test]
fn budget_is_reported_not_ignored() {
    let d = fixtures::pushout(N);
    assert!(matches!(srep_hocolim(&d, Budget::new(5)), Err(Error::BudgetExceeded { .. })));
    assert!(matches!(bk_hocolim(&d, None, false, Budget::new(5)), Err(Error::BudgetExceeded { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn the_two_constructions_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = fixtures::random_diagram(&mut rng, N);
        let [s, b] = both(&d);
        let (hs, hb) = (homology(&s.set), homology(&b.set));
        prop_assert!(hs.same_groups(&hb), "srep {} vs bk {}", hs.summary(), hb.summary());
        prop_assert_eq!(report_groups(&hs), oracle_homology(&s.set));
        prop_assert_eq!(map_violations(&s.to_colim), 0);
        prop_assert_eq!(map_violations(&b.to_colim), 0);
    }
}

use std::sync::Arc;

use hocolim_core::fincat::{FinCat, Functor, NatTrans};
use hocolim_core::fixtures;
use hocolim_core::hocolim::{degeneracy_collapse_check, hocored_check, Method, Status, ZigZag, ZigZagStep};
use hocolim_core::homology::is_homology_iso;
use hocolim_core::sset::*;
use hocolim_core::Budget;

const N: usize = 3;

#[test]
fn collapse_on_constant_and_terminal_objects() {
    let x = Arc::new(boundary(2, N).unwrap());
    let v = degeneracy_collapse_check(&fixtures::collapse_constant(x.clone()));
    assert_eq!(v.status, Status::Iso);
    assert!(v.horizontal.iter().all(|c| c.iso));
    let v = degeneracy_collapse_check(&fixtures::collapse_terminal(x, Budget::default()).unwrap());
    assert_eq!(v.status, Status::Iso);
    assert!(v.conclusion.unwrap().iso);
}

#[test]
fn collapse_negative_control() {
    let v = degeneracy_collapse_check(&fixtures::collapse_negative(&fixtures::s0(N)).unwrap());
    assert_eq!(v.status, Status::HypothesesNotMet);
    assert!(v.horizontal.iter().any(|c| !c.iso));
    assert_eq!(Status::HypothesesNotMet.exit_code(), 2);
}

#[test]
fn collapse_of_a_diagonal_column() {
    // Δ[1] × X levelwise has every column X, but its faces are projections of
    // different copies; with X contractible the hypotheses hold
    let b = BisimplicialSet::levelwise_product(&point(N), &Arc::new(standard_simplex(2, N).unwrap())).unwrap();
    let v = degeneracy_collapse_check(&b);
    assert_eq!(v.status, Status::Iso);
    let d = Arc::new(b.diagonal());
    assert!(is_homology_iso(&b.column_zero_inclusion(&d)).iso);
}

#[test]
fn relabelling_is_vacuous() {
    let inst = fixtures::hocored_relabelling(N);
    for method in [Method::Srep, Method::Bk] {
        let v = hocored_check(&inst.f, &inst.g, &inst.eta, &inst.theta, &inst.x, method, Budget::default()).unwrap();
        assert_eq!(v.status, Status::Iso, "{method:?}");
        assert!(v.hypotheses.iter().all(|c| c.trivial));
    }
}

#[test]
fn replacement_functor_instance() {
    let inst = fixtures::hocored_replacement(&Arc::new(standard_simplex(1, N).unwrap()), Budget::default()).unwrap();
    assert!(inst.f.check().is_ok() && inst.g.check().is_ok());
    let v = hocored_check(&inst.f, &inst.g, &inst.eta, &inst.theta, &inst.x, Method::Srep, Budget::default()).unwrap();
    assert_eq!(v.status, Status::Iso);
    // some η component is a genuine equivalence (the diagonal into L), not an identity
    assert!(v.hypotheses.iter().any(|c| c.iso && !c.trivial));
}

#[test]
fn negative_instance_fails_its_hypotheses() {
    let inst = fixtures::hocored_negative(N);
    let v = hocored_check(&inst.f, &inst.g, &inst.eta, &inst.theta, &inst.x, Method::Srep, Budget::default()).unwrap();
    assert_eq!(v.status, Status::HypothesesNotMet);
    let bad: Vec<_> = v.hypotheses.iter().filter(|c| !c.iso).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].failing_degree, Some(0));
}

#[test]
fn zig_zags_are_checked_stepwise() {
    // η as a two-step zig-zag Id => Id <= Id still passes
    let inst = fixtures::hocored_relabelling(N);
    let i = inst.x.shape().clone();
    let id = NatTrans::identity(&Functor::identity(&i));
    let eta = ZigZag { steps: vec![ZigZagStep { trans: id.clone(), forward: true }, ZigZagStep { trans: id, forward: false }] };
    let v = hocored_check(&inst.f, &inst.g, &eta, &inst.theta, &inst.x, Method::Srep, Budget::default()).unwrap();
    assert_eq!(v.status, Status::Iso);
    // mismatched ends are rejected
    let other = Arc::new(FinCat::arrow());
    let wrong = ZigZag::single(NatTrans::identity(&Functor::identity(&other)));
    assert!(hocored_check(&inst.f, &inst.g, &wrong, &inst.theta, &inst.x, Method::Srep, Budget::default()).is_err());
}

#[test]
fn budget_exhaustion_becomes_a_verdict() {
    let inst = fixtures::hocored_relabelling(N);
    let v = hocored_check(&inst.f, &inst.g, &inst.eta, &inst.theta, &inst.x, Method::Bk, Budget::new(10)).unwrap();
    assert_eq!(v.status, Status::BudgetExceeded);
    assert_eq!(v.status.exit_code(), 3);
}

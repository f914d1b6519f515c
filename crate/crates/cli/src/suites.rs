//! Named property suites run by `verify`.

use std::sync::Arc;
use std::time::Instant;

use hocolim_core::cosimp::{co_yoneda, tensor_delta};
use hocolim_core::diagcat::{overcat_exponential_iso, CosimplicialDiagram, Diagram};
use hocolim_core::fincat::{nerve, FinCat};
use hocolim_core::fixtures;
use hocolim_core::hocolim::{bk_hocolim, canonical_hocolim, degeneracy_collapse_check, hocored_check, naive_hocolim, re_q_sing, srep_hocolim, Method, Status};
use hocolim_core::homology::{homology, is_homology_iso};
use hocolim_core::sset::{boundary, point, standard_simplex, SimplicialSet};
use hocolim_core::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value as Json};

use crate::docs::{Document, Env};
use crate::eval::{Context, Report};

pub const SUITES: [&str; 4] = ["appendix", "section4", "section5", "section8"];

struct Runner {
    ctx: Context,
    properties: Vec<Json>,
    pass: bool,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, Json)>) {
        let t = Instant::now();
        let (pass, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        let mut p = json!({ "name": name, "pass": pass, "detail": detail });
        if !self.ctx.deterministic {
            p["elapsed_ms"] = json!(t.elapsed().as_millis());
        }
        self.pass &= pass;
        self.properties.push(p);
    }
}

/// Runs a suite; `None` if there is no suite of that name.
pub fn run_suite(name: &str, env: &Env, ctx: Context) -> Option<Report> {
    let mut r = Runner { ctx, properties: Vec::new(), pass: true };
    match name {
        "appendix" => appendix(&mut r, env),
        "section4" => section4(&mut r),
        "section5" => section5(&mut r),
        "section8" => section8(&mut r),
        _ => return None,
    }
    let json = json!({ "kind": "suite", "suite": name, "pass": r.pass, "properties": r.properties });
    Some(Report { json, exit_code: if r.pass { 0 } else { 1 } })
}

/// Srep and BK models of `d` have the same homology.
fn agreement(d: &Diagram, budget: hocolim_core::Budget) -> Result<(bool, Json)> {
    let s = srep_hocolim(d, budget)?;
    let b = bk_hocolim(d, None, false, budget)?;
    let (hs, hb) = (homology(&s.set), homology(&b.set));
    Ok((hs.same_groups(&hb), json!({ "srep": hs.summary(), "bk": hb.summary() })))
}

fn agreement_many(diagrams: &[(String, Diagram)], budget: hocolim_core::Budget) -> Result<(bool, Json)> {
    let mut pass = true;
    let mut detail = Vec::new();
    for (label, d) in diagrams {
        let (ok, j) = agreement(d, budget)?;
        pass &= ok;
        detail.push(json!({ "diagram": label, "agree": ok, "homology": j }));
    }
    Ok((pass, json!(detail)))
}

fn status_is(v: Status, want: Status) -> bool {
    v == want
}

fn hocored(inst: &fixtures::HocoredInstance, want: Status, ctx: &Context) -> Result<(bool, Json)> {
    let v = hocored_check(&inst.f, &inst.g, &inst.eta, &inst.theta, &inst.x, Method::Srep, ctx.budget)?;
    Ok((status_is(v.status, want), json!({ "expected": want, "verdict": v })))
}

fn appendix(r: &mut Runner, env: &Env) {
    let ctx = r.ctx;
    let n = ctx.truncation;
    r.run("co-Yoneda: A ⊗ Δ[k] -> A^k is an isomorphism (10 random A, all k)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0);
        let mut detail = Vec::new();
        let mut pass = true;
        for _ in 0..10 {
            let a = Arc::new(fixtures::random_cosimplicial(&mut rng, n, ctx.budget)?);
            for k in 0..=n {
                let td = tensor_delta(&a, &Arc::new(standard_simplex(k, n)?), ctx.budget)?;
                let ok = co_yoneda(&td, k)?.is_bijective();
                pass &= ok;
                detail.push(json!({ "component": a.component(0).counts(), "k": k, "iso": ok }));
            }
        }
        Ok((pass, json!(detail)))
    });
    r.run("reduction criterion: relabelling (hypotheses vacuous)", || hocored(&fixtures::hocored_relabelling(n), Status::Iso, &ctx));
    r.run("reduction criterion: replacement functor instance", || {
        hocored(&fixtures::hocored_replacement(&Arc::new(standard_simplex(1, n)?), ctx.budget)?, Status::Iso, &ctx)
    });
    r.run("reduction criterion: negative control fails its hypotheses", || hocored(&fixtures::hocored_negative(n), Status::HypothesesNotMet, &ctx));
    r.run("bk and srep agree (20 random diagrams)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xA9);
        let ds: Vec<(String, Diagram)> = (0..20).map(|k| (format!("random {k}"), fixtures::random_diagram(&mut rng, n))).collect();
        agreement_many(&ds, ctx.budget)
    });
    r.run("bk and srep agree (fixtures and loaded diagrams)", || {
        let mut ds = vec![("pushout".to_string(), fixtures::pushout(n)), ("swap".to_string(), fixtures::swap_action(n))];
        for (name, doc) in env.documents() {
            if let Document::Diagram(d) = doc {
                if d.value.truncation() == n {
                    ds.push((name.clone(), (*d.value).clone()));
                }
            }
        }
        agreement_many(&ds, ctx.budget)
    });
}

fn section4(r: &mut Runner) {
    let ctx = r.ctx;
    let n = ctx.truncation;
    let b = ctx.budget;
    let bd = || -> Result<Arc<SimplicialSet>> { Ok(Arc::new(boundary(2, n)?)) };
    r.run("naive hocolim for C = {Δ[0]} is one point per vertex", || {
        let x = bd()?;
        let h = naive_hocolim(&fixtures::vertex_category(n, b)?, &x, ctx.method, b)?;
        let hom = homology(&h.result.set);
        let pass = hom.betti(0) == x.count(0) && (1..hom.degrees.len()).all(|k| hom.betti(k) == 0);
        Ok((pass, json!({ "vertices": x.count(0), "homology": hom.summary() })))
    });
    r.run("naive hocolim for C = {Δ[0], Δ[1]} over ∂Δ[2] maps isomorphically to X", || {
        let h = naive_hocolim(&fixtures::simplex_category(n, b)?, &bd()?, ctx.method, b)?;
        let v = is_homology_iso(h.result.comparison.as_ref().expect("comparison"));
        Ok((v.iso, json!(v)))
    });
    r.run("naive hocolim over X = Δ[1] in C maps isomorphically to X", || {
        let h = naive_hocolim(&fixtures::simplex_category(n, b)?, &Arc::new(standard_simplex(1, n)?), ctx.method, b)?;
        let v = is_homology_iso(h.result.comparison.as_ref().expect("comparison"));
        Ok((v.iso, json!(v)))
    });
    // depth 3 needs several million simplices in one replacement level
    r.run("canonical hocolim over X = Δ[0] at depth 2 is contractible", || {
        let gamma = CosimplicialDiagram::canonical(&fixtures::vertex_category(n, b)?)?;
        let h = canonical_hocolim(&gamma, &Arc::new(point(n)), 2.min(n), ctx.method, b)?;
        let v = is_homology_iso(h.result.comparison.as_ref().expect("comparison"));
        Ok((v.iso && homology(&h.result.set).is_point(), json!(v)))
    });
    for depth in [1, 2] {
        r.run(&format!("canonical hocolim for C = {{Δ[0]}} over ∂Δ[2] at depth {depth} maps isomorphically to X"), || {
            let gamma = CosimplicialDiagram::canonical(&fixtures::vertex_category(n, b)?)?;
            let h = canonical_hocolim(&gamma, &bd()?, depth.min(n), ctx.method, b)?;
            let v = is_homology_iso(h.result.comparison.as_ref().expect("comparison"));
            Ok((v.iso, json!({ "objects": h.resolution.over.object_count(), "verdict": v })))
        });
    }
    r.run("re_q_sing over Δ[0] is a point", || {
        let q = re_q_sing(&fixtures::vertex_category(n, b)?, &Arc::new(point(n)), b)?;
        let h = homology(&q.set);
        Ok((h.is_point(), json!(h.summary())))
    });
    r.run("re_q_sing for C = {Δ[0]} over ∂Δ[2]: map to X, agreement with canonical, level-0 triangle", || {
        let c = fixtures::vertex_category(n, b)?;
        let x = bd()?;
        let q = re_q_sing(&c, &x, b)?;
        let to_x = is_homology_iso(&q.to_target);
        let gamma = CosimplicialDiagram::canonical(&c)?;
        let can = canonical_hocolim(&gamma, &x, 1.min(n), ctx.method, b)?;
        let same = homology(&q.set).same_groups(&homology(&can.result.set));
        let triangle = q.column_zero.then(&q.to_target)?.levels() == q.naive_comparison.levels();
        Ok((to_x.iso && same && triangle, json!({ "to_target": to_x, "same_homology_as_canonical": same, "triangle": triangle })))
    });
}

fn section5(r: &mut Runner) {
    let ctx = r.ctx;
    let n = ctx.truncation;
    let b = ctx.budget;
    let cases: Vec<(&str, fn(usize, hocolim_core::Budget) -> Result<Diagram>, usize)> = vec![
        ("{Δ[0]}", fixtures::vertex_category, 0),
        ("{Δ[0]}", fixtures::vertex_category, 1),
        ("{Δ[0]}", fixtures::vertex_category, 2),
        ("{Δ[0], Δ[1]}", fixtures::simplex_category, 1),
    ];
    for (label, make, k) in cases {
        if k > n {
            continue;
        }
        r.run(&format!("(C^{k} ↓ X) ≅ (C ↓ X^Δ[{k}]) for C = {label}, X = ∂Δ[2]"), || {
            let e = overcat_exponential_iso(&make(n, b)?, &Arc::new(boundary(2, n)?), k, b)?;
            let ok = e.check().is_ok();
            Ok((ok, json!({ "objects": e.slice.object_count(), "morphisms": e.slice.category.morphism_count() })))
        });
    }
}

fn section8(r: &mut Runner) {
    let ctx = r.ctx;
    let n = ctx.truncation;
    let b = ctx.budget;
    r.run("Bousfield-Kan and simplicial replacement agree", || {
        let poset = Arc::new(FinCat::poset("P", &["a", "b", "c"], &[(0, 1), (1, 2)]).map_err(|e| Error::Invalid(e.to_string()))?);
        let ds = vec![
            ("pushout".to_string(), fixtures::pushout(n)),
            ("swap".to_string(), fixtures::swap_action(n)),
            ("constant point over a chain".to_string(), fixtures::constant_point(&poset, n)),
            ("constant point over Z/2".to_string(), fixtures::constant_point(&Arc::new(FinCat::cyclic_group(2)), n)),
        ];
        agreement_many(&ds, b)
    });
    r.run("constant point diagram gives the nerve", || {
        let poset = Arc::new(FinCat::span());
        let h = srep_hocolim(&fixtures::constant_point(&poset, n), b)?;
        let (nv, _) = nerve(&poset, n, b)?;
        Ok((h.set.same_structure(&nv), json!(h.set.counts())))
    });
    let collapse = |z: hocolim_core::Result<hocolim_core::sset::BisimplicialSet>, want: Status| -> Result<(bool, Json)> {
        let v = degeneracy_collapse_check(&z?);
        Ok((v.status == want, json!({ "expected": want, "status": v.status, "conclusion": v.conclusion })))
    };
    r.run("collapse: constant simplicial object", || collapse(Ok(fixtures::collapse_constant(Arc::new(boundary(2, n)?))), Status::Iso));
    r.run("collapse: replacement of a diagram over the terminal shape", || collapse(fixtures::collapse_terminal(Arc::new(boundary(2, n)?), b), Status::Iso));
    r.run("collapse: negative control", || collapse(fixtures::collapse_negative(&Arc::new(point(n))), Status::HypothesesNotMet));
    r.run("naive -> canonical (depth 1) is an iso when the columns are (discrete X)", || {
        let c = fixtures::simplex_category(n, b)?;
        let x = fixtures::s0(n);
        let q = re_q_sing(&c, &x, b)?;
        let v = degeneracy_collapse_check(&q.bisimplicial);
        let gamma = CosimplicialDiagram::canonical(&c)?;
        let can = canonical_hocolim(&gamma, &x, 1.min(n), ctx.method, b)?;
        let i = is_homology_iso(&can.inclusion);
        Ok((v.status == Status::Iso && i.iso, json!({ "collapse": v.status, "inclusion": i })))
    });
}

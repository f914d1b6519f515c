//! JSON renderings of values and the report envelope.

use hocolim_core::homology::{homology, is_homology_iso};
use hocolim_core::hocolim::degeneracy_collapse_check;
use hocolim_core::sset::text::write_sset;
use hocolim_core::sset::SimplicialSet;
use serde_json::{json, Value as Json};

use crate::eval::{Context, Value};

fn sset_json(x: &SimplicialSet, with_document: bool) -> Json {
    let mut j = json!({
        "truncation": x.truncation(),
        "counts": x.counts(),
        "nondegenerate": x.nondegenerate_counts(),
        "lossy": x.is_lossy(),
    });
    if with_document {
        j["document"] = json!(write_sset("result", x));
    }
    j
}

/// The result document of a value.
pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Number(n) => json!({ "kind": "number", "value": n }),
        Value::Str(s) => json!({ "kind": "string", "value": s }),
        Value::Category(c) => json!({
            "kind": "category",
            "name": c.name(),
            "objects": c.objects(),
            "morphisms": c.morphism_count(),
        }),
        Value::SSet(x) => {
            let mut j = sset_json(x, true);
            j["kind"] = json!("sset");
            j
        }
        Value::Map(m) => json!({
            "kind": "map",
            "source": sset_json(m.source(), false),
            "target": sset_json(m.target(), false),
            "injective": m.is_injective(),
            "bijective": m.is_bijective(),
        }),
        Value::Diagram(d) => json!({
            "kind": "diagram",
            "shape": d.shape().name(),
            "objects": (0..d.shape().object_count()).map(|o| json!({ "name": d.shape().object_name(o), "counts": d.object(o).counts() })).collect::<Vec<_>>(),
            "morphisms": d.shape().morphism_count(),
            "lossy": d.is_lossy(),
        }),
        Value::Cosimplicial(a) => json!({
            "kind": "cosimplicial",
            "components": a.components().iter().map(|x| x.counts()).collect::<Vec<_>>(),
            "resolution": a.is_resolution(),
        }),
        Value::Resolution(g) => json!({
            "kind": "resolution",
            "shape": g.shape().name(),
            "resolution": g.is_resolution(),
        }),
        Value::Hocolim(h) => {
            let (target, map) = match &h.comparison {
                Some(m) => ("X", m),
                None => ("colim", &h.to_colim),
            };
            json!({
                "kind": "hocolim",
                "set": sset_json(&h.set, true),
                "homology": homology(&h.set),
                "provenance": h.provenance,
                "colimit": sset_json(&h.colim.set, false),
                "comparison_target": target,
                "comparison": is_homology_iso(map),
            })
        }
        Value::Canonical(c) => json!({
            "kind": "canonical_hocolim",
            "set": sset_json(&c.result.set, true),
            "homology": homology(&c.result.set),
            "provenance": c.result.provenance,
            "overcategory": { "objects": c.resolution.over.object_count(), "morphisms": c.resolution.over.category.morphism_count() },
            "comparison": is_homology_iso(c.result.comparison.as_ref().expect("canonical results map to X")),
            "naive_homology": homology(&c.naive.set),
            "inclusion": is_homology_iso(&c.inclusion),
        }),
        Value::ReQSing(r) => json!({
            "kind": "re_q_sing",
            "set": sset_json(&r.set, true),
            "homology": homology(&r.set),
            "columns": r.columns.iter().map(|m| m.set.counts()).collect::<Vec<_>>(),
            "to_target": is_homology_iso(&r.to_target),
            "collapse": degeneracy_collapse_check(&r.bisimplicial),
        }),
        Value::Record(entries) => Json::Object(entries.iter().map(|(k, v)| (k.clone(), value_json(v))).collect()),
        Value::Report(r) => r.json.clone(),
    }
}

/// The envelope every command prints.
pub fn envelope(command: &str, input: Json, ctx: &Context, result: Json, exit_code: i32, elapsed_ms: u128) -> Json {
    let mut j = json!({
        "tool": "hocolim",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input": input,
        "truncation": ctx.truncation,
        "budget": { "visits": ctx.budget.visits, "simplices": ctx.budget.simplices },
        "method": ctx.method,
        "force": ctx.force,
        "result": result,
        "exit_code": exit_code,
    });
    if !ctx.deterministic {
        let now = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        j["timestamp"] = json!(now);
        j["elapsed_ms"] = json!(elapsed_ms);
    }
    j
}

//! Category documents.
//!
//! ```text
//! category span
//! objects a b c
//! morphism f : a -> b
//! morphism g : a -> c
//! end
//! ```
//!
//! Identities are implicit (`id_<object>`) unless given by
//! `identity <object> = <morphism>`. Composites of non-identity arrows are
//! listed as `compose g . f = h`.

use std::collections::HashMap;
use std::fmt::Write;

use super::{FinCat, Morphism};
use crate::error::Result;
use crate::text::{blocks, parse_error, valid_name, Block};

pub fn write_category(c: &FinCat) -> String {
    let mut s = String::new();
    writeln!(s, "category {}", c.name()).unwrap();
    writeln!(s, "objects {}", c.objects().join(" ")).unwrap();
    for m in c.morphisms() {
        writeln!(s, "morphism {} : {} -> {}", m.name, c.object_name(m.source), c.object_name(m.target)).unwrap();
    }
    for o in 0..c.object_count() {
        writeln!(s, "identity {} = {}", c.object_name(o), c.morphism(c.identity(o)).name).unwrap();
    }
    for f in 0..c.morphism_count() {
        if c.is_identity(f) {
            continue;
        }
        for &g in c.outgoing(c.target(f)) {
            if !c.is_identity(g) {
                let h = c.compose(g, f);
                writeln!(s, "compose {} . {} = {}", c.morphism(g).name, c.morphism(f).name, c.morphism(h).name).unwrap();
            }
        }
    }
    s.push_str("end\n");
    s
}

pub fn parse_category(block: &Block) -> Result<FinCat> {
    let mut objects: Vec<String> = Vec::new();
    let mut obj_index: HashMap<String, usize> = HashMap::new();
    let mut morphisms: Vec<Morphism> = Vec::new();
    let mut mor_index: HashMap<String, usize> = HashMap::new();
    let mut identities: HashMap<usize, usize> = HashMap::new();
    let mut rows: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut seen_objects = false;
    for line in &block.body {
        let t = &line.tokens;
        match t[0].as_str() {
            "objects" if !seen_objects => {
                seen_objects = true;
                for o in &t[1..] {
                    if !valid_name(o) || obj_index.contains_key(o) {
                        return parse_error(line.no, format!("bad or duplicate object id `{o}`"));
                    }
                    obj_index.insert(o.clone(), objects.len());
                    objects.push(o.clone());
                }
            }
            "morphism" => {
                if t.len() != 6 || t[2] != ":" || t[4] != "->" {
                    return parse_error(line.no, "expected `morphism <id> : <object> -> <object>`");
                }
                if !valid_name(&t[1]) || mor_index.contains_key(&t[1]) {
                    return parse_error(line.no, format!("bad or duplicate morphism id `{}`", t[1]));
                }
                let (Some(&a), Some(&b)) = (obj_index.get(&t[3]), obj_index.get(&t[5])) else {
                    return parse_error(line.no, "unknown object in morphism");
                };
                mor_index.insert(t[1].clone(), morphisms.len());
                morphisms.push(Morphism { name: t[1].clone(), source: a, target: b });
            }
            "identity" => {
                if t.len() != 4 || t[2] != "=" {
                    return parse_error(line.no, "expected `identity <object> = <morphism>`");
                }
                let (Some(&o), Some(&m)) = (obj_index.get(&t[1]), mor_index.get(&t[3])) else {
                    return parse_error(line.no, "unknown id in identity row");
                };
                if identities.insert(o, m).is_some() {
                    return parse_error(line.no, "identity given twice");
                }
            }
            "compose" => {
                if t.len() != 6 || t[2] != "." || t[4] != "=" {
                    return parse_error(line.no, "expected `compose <g> . <f> = <h>`");
                }
                let ids: Vec<usize> = match [&t[1], &t[3], &t[5]].iter().map(|s| mor_index.get(s.as_str()).copied()).collect::<Option<Vec<_>>>() {
                    Some(v) => v,
                    None => return parse_error(line.no, "unknown morphism in composition row"),
                };
                rows.push((ids[0], ids[1], ids[2], line.no));
            }
            other => return parse_error(line.no, format!("unexpected `{other}` in category document")),
        }
    }
    let mut ids = Vec::with_capacity(objects.len());
    for o in 0..objects.len() {
        match identities.get(&o) {
            Some(&m) => ids.push(m),
            None => {
                let name = format!("id_{}", objects[o]);
                if let Some(&m) = mor_index.get(&name) {
                    ids.push(m);
                } else {
                    mor_index.insert(name.clone(), morphisms.len());
                    ids.push(morphisms.len());
                    morphisms.push(Morphism { name, source: o, target: o });
                }
            }
        }
    }
    for &(g, f, _, no) in &rows {
        if morphisms[f].target != morphisms[g].source {
            return parse_error(no, "composition row for a non-composable pair");
        }
    }
    let plain: Vec<(usize, usize, usize)> = rows.iter().map(|&(g, f, h, _)| (g, f, h)).collect();
    FinCat::from_rows(block.name.clone(), objects, morphisms, ids, &plain).or_else(|e| parse_error(block.line, e.to_string()))
}

/// Loads the single category document in `text`.
pub fn load_category(text: &str) -> Result<FinCat> {
    let bs = blocks(text)?;
    match bs.as_slice() {
        [b] if b.kind == "category" => parse_category(b),
        _ => parse_error(1, "expected exactly one category document"),
    }
}

use std::collections::HashMap;
use std::sync::Arc;

use super::{precomposed_key, CosimplicialDiagram, Diagram};
use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::FinCat;
use crate::sset::{dot, enumerate_maps, point, RawTables, SimplicialMap, SimplicialSet};

/// The singular presheaf `c ↦ Hom(Γ(c)^•, X)`, as a diagram on `C^op`.
pub fn sing(gamma: &CosimplicialDiagram, x: &Arc<SimplicialSet>, budget: Budget) -> Result<Diagram> {
    let shape = gamma.shape();
    let top = gamma.truncation();
    let mut maps: Vec<Vec<Vec<SimplicialMap>>> = Vec::new();
    let mut lookups: Vec<Vec<HashMap<Vec<Vec<usize>>, usize>>> = Vec::new();
    let mut objects = Vec::new();
    for c in 0..shape.object_count() {
        let g = gamma.object(c);
        let mut per_level = Vec::new();
        let mut lookup = Vec::new();
        for n in 0..=top {
            let ms = enumerate_maps(g.component(n), x, budget.visits)?;
            budget.check_size("singular presheaf", ms.len() as u128)?;
            lookup.push(ms.iter().enumerate().map(|(k, m)| (m.nondegenerate_images(), k)).collect::<HashMap<_, _>>());
            per_level.push(ms);
        }
        let mut raw = RawTables::new(top);
        for n in 0..=top {
            raw.counts[n] = per_level[n].len();
            if n >= 1 {
                let mut f = Vec::with_capacity(raw.counts[n] * (n + 1));
                for phi in &per_level[n] {
                    for i in 0..=n {
                        f.push(lookup[n - 1][&precomposed_key(g.coface(n, i), phi)]);
                    }
                }
                raw.faces[n] = f;
            }
            if n < top {
                let mut d = Vec::with_capacity(raw.counts[n] * (n + 1));
                for phi in &per_level[n] {
                    for j in 0..=n {
                        d.push(lookup[n + 1][&precomposed_key(g.codegeneracy(n, j), phi)]);
                    }
                }
                raw.degens[n] = d;
            }
        }
        let cname = shape.object_name(c).to_string();
        let mut set = SimplicialSet::from_raw(raw, false, |n, k| format!("{cname}.{n}.{k}"));
        let lossy = x.is_lossy() || !set.nondegenerate(top).is_empty();
        set.set_lossy(lossy);
        objects.push(Arc::new(set));
        maps.push(per_level);
        lookups.push(lookup);
    }
    let mut morphisms = Vec::with_capacity(shape.morphism_count());
    for u in 0..shape.morphism_count() {
        let (c, c2) = (shape.source(u), shape.target(u));
        let gu = gamma.morphism(u);
        let levels = (0..=top)
            .map(|n| maps[c2][n].iter().map(|phi| lookups[c][n][&precomposed_key(gu.component(n), phi)]).collect())
            .collect();
        morphisms.push(SimplicialMap::new(objects[c2].clone(), objects[c].clone(), levels)?);
    }
    Diagram::new_unchecked(Arc::new(shape.opposite()), objects, morphisms)
}

/// The representable presheaf `Hom(-, c)` as a diagram of discrete
/// simplicial sets on `C^op`.
pub fn yoneda(shape: &Arc<FinCat>, c: usize, truncation: usize) -> Result<Diagram> {
    let pt = point(truncation);
    let homs: Vec<Vec<usize>> = (0..shape.object_count()).map(|a| shape.hom(a, c)).collect();
    let objects: Vec<Arc<SimplicialSet>> = homs
        .iter()
        .map(|h| {
            let names: Vec<String> = h.iter().map(|&m| shape.morphism(m).name.clone()).collect();
            dot(&pt, &names).map(Arc::new)
        })
        .collect::<Result<_>>()?;
    let mut morphisms = Vec::with_capacity(shape.morphism_count());
    for u in 0..shape.morphism_count() {
        let (a, b) = (shape.source(u), shape.target(u));
        let pos: HashMap<usize, usize> = homs[a].iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let level: Vec<usize> = homs[b].iter().map(|&h| pos[&shape.compose(h, u)]).collect();
        morphisms.push(SimplicialMap::new(objects[b].clone(), objects[a].clone(), vec![level; truncation + 1])?);
    }
    Diagram::new(Arc::new(shape.opposite()), objects, morphisms)
}

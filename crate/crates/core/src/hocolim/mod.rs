//! Homotopy colimits of diagrams of simplicial sets: the coend formula over
//! nerves of opposite undercategories, the diagonal of the simplicial
//! replacement, and hocolims over overcategories with their comparison maps.

mod checks;
mod over;

pub use checks::{degeneracy_collapse_check, hocored_check, Certificate, CollapseVerdict, HocoredVerdict, Status, ZigZag, ZigZagStep};
pub use over::{canonical_hocolim, naive_hocolim, re_q_sing, CanonicalHocolim, OverHocolim, ReQSing};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::budget::Budget;
use crate::cosimp::CosimplicialMap;
use crate::diagcat::{coend, srep_diagonal, Coend, CosimplicialDiagram, Diagram, DiagramMap, SrepModel};
use crate::error::{invalid, Error, Result};
use crate::fincat::{nerve, Chains, FinCat, Functor};
use crate::ops::Mono;
use crate::sset::{coproduct_labelled, quotient_raw, SimplicialMap, SimplicialSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bk,
    Srep,
}

impl Default for Method {
    fn default() -> Self {
        Method::Srep
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Bk => "bk",
            Method::Srep => "srep",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "bk" => Ok(Method::Bk),
            "srep" => Ok(Method::Srep),
            _ => Err(Error::ParameterRange(format!("unknown method `{s}` (expected bk or srep)"))),
        }
    }
}

/// The levelwise colimit with its cocone.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub set: Arc<SimplicialSet>,
    pub cocone: Vec<SimplicialMap>,
    reps: Vec<Vec<(usize, usize)>>,
}

impl Colimit {
    /// The map out of the colimit determined by a cocone `maps[i]: D(i) -> target`.
    pub fn induced(&self, target: &Arc<SimplicialSet>, maps: &[SimplicialMap]) -> Result<SimplicialMap> {
        if maps.len() != self.cocone.len() {
            return Err(Error::ShapeMismatch("cocone has the wrong number of legs".into()));
        }
        let top = self.set.truncation();
        let levels: Vec<Vec<usize>> =
            (0..=top).map(|n| self.reps[n].iter().map(|&(i, x)| maps[i].apply(n, x)).collect()).collect();
        for (i, leg) in self.cocone.iter().enumerate() {
            for (n, level) in levels.iter().enumerate() {
                for x in 0..leg.source().count(n) {
                    if level[leg.apply(n, x)] != maps[i].apply(n, x) {
                        return invalid("the given maps do not form a cocone");
                    }
                }
            }
        }
        SimplicialMap::new(self.set.clone(), target.clone(), levels)
    }
}

/// Coproduct of the `D(i)` modulo `x ~ D(u) x`.
pub fn colim(d: &Diagram) -> Result<Colimit> {
    let shape = d.shape();
    let top = d.truncation();
    let parts: Vec<&SimplicialSet> = d.objects().iter().map(|o| o.as_ref()).collect();
    let cop = coproduct_labelled(&parts, shape.objects(), top)?;
    let offsets = &cop.offsets;
    let mut seeds = Vec::new();
    for u in 0..shape.morphism_count() {
        if shape.is_identity(u) {
            continue;
        }
        let (s, t) = (shape.source(u), shape.target(u));
        let m = d.morphism(u);
        for n in 0..=top {
            for x in 0..d.object(s).count(n) {
                seeds.push((n, offsets[s][n] + x, offsets[t][n] + m.apply(n, x)));
            }
        }
    }
    let data = quotient_raw(&cop.set.to_raw(), seeds);
    let reps_raw = data.reps;
    let set = Arc::new(SimplicialSet::from_raw(data.raw, cop.set.is_lossy(), |n, c| cop.set.label(n, reps_raw[n][c])));
    let locate = |n: usize, g: usize| {
        let i = (0..parts.len()).rev().find(|&i| offsets[i][n] <= g && g - offsets[i][n] < parts[i].count(n)).unwrap();
        (i, g - offsets[i][n])
    };
    let reps = (0..=top).map(|n| reps_raw[n].iter().map(|&g| locate(n, g)).collect()).collect();
    let cocone = (0..parts.len())
        .map(|i| {
            let levels = (0..=top).map(|n| (0..parts[i].count(n)).map(|x| data.class_of[n][offsets[i][n] + x]).collect()).collect();
            SimplicialMap::new_unchecked(d.object(i).clone(), set.clone(), levels)
        })
        .collect();
    Ok(Colimit { set, cocone, reps })
}

/// Where a result came from and how far it can be trusted.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    /// `bk`, `srep`, `naive` or `canonical`.
    pub kind: String,
    pub method: Method,
    pub truncation: usize,
    pub shape_objects: usize,
    pub shape_morphisms: usize,
    /// Simplices per level of the result.
    pub sizes: Vec<usize>,
    pub nondegenerate: Vec<usize>,
    /// Some input or intermediate object had simplices cut off by truncation.
    pub lossy: bool,
    /// The nerves used have nondegenerate simplices past the truncation.
    pub nerve_saturated: bool,
    /// Result of the resolution oracle on the cosimplicial input, for `bk`.
    pub resolution: Option<bool>,
    /// A non-resolution was used on request; homotopy statements do not apply.
    pub tainted: bool,
    pub notes: Vec<String>,
}

/// Nerve of `(i ↓ I)^op` with the data needed to map it around.
#[derive(Clone, Debug)]
struct Weight {
    under: Arc<FinCat>,
    op: Arc<FinCat>,
    nerve: Arc<SimplicialSet>,
    chains: Chains,
}

#[derive(Clone, Debug)]
enum Model {
    Srep(SrepModel),
    Bk { coend: Coend, canonical: bool, weights: Vec<Weight> },
}

#[derive(Clone, Debug)]
pub struct HocolimResult {
    pub set: Arc<SimplicialSet>,
    pub method: Method,
    pub diagram: Diagram,
    pub colim: Colimit,
    /// `hocolim -> colim`, from the cocone of the model.
    pub to_colim: SimplicialMap,
    /// `hocolim -> colim -> X` when the diagram is an overcategory evaluation.
    pub comparison: Option<SimplicialMap>,
    pub provenance: Provenance,
    model: Model,
}

impl HocolimResult {
    /// Chains indexing the simplices, for the `srep` model.
    pub fn srep_model(&self) -> Option<&SrepModel> {
        match &self.model {
            Model::Srep(m) => Some(m),
            Model::Bk { .. } => None,
        }
    }
}

fn provenance(kind: &str, method: Method, d: &Diagram, set: &SimplicialSet, nerve_saturated: bool) -> Provenance {
    Provenance {
        kind: kind.to_string(),
        method,
        truncation: d.truncation(),
        shape_objects: d.shape().object_count(),
        shape_morphisms: d.shape().morphism_count(),
        sizes: set.counts(),
        nondegenerate: set.nondegenerate_counts(),
        lossy: set.is_lossy(),
        nerve_saturated,
        resolution: None,
        tainted: false,
        notes: Vec::new(),
    }
}

pub fn hocolim(d: &Diagram, method: Method, budget: Budget) -> Result<HocolimResult> {
    match method {
        Method::Srep => srep_hocolim(d, budget),
        Method::Bk => bk_hocolim(d, None, false, budget),
    }
}

/// The diagonal of the simplicial replacement.
pub fn srep_hocolim(d: &Diagram, budget: Budget) -> Result<HocolimResult> {
    let model = srep_diagonal(d, budget)?;
    let colim = colim(d)?;
    let top = d.truncation();
    let levels = (0..=top)
        .map(|p| {
            (0..model.set.count(p))
                .map(|x| {
                    let (k, a) = model.decode(p, x);
                    colim.cocone[model.chains.levels[p][k].start].apply(p, a)
                })
                .collect()
        })
        .collect();
    let to_colim = SimplicialMap::new(model.set.clone(), colim.set.clone(), levels)?;
    let saturated = model.chains.levels[top]
        .iter()
        .any(|ch| !ch.is_degenerate(d.shape()) && d.shape().outgoing(ch.end(d.shape())).iter().any(|&f| !d.shape().is_identity(f)));
    let mut prov = provenance("srep", Method::Srep, d, &model.set, saturated);
    prov.notes.push("diagonal of the simplicial replacement; every simplicial set is cofibrant, so no replacement of the values is needed".into());
    Ok(HocolimResult { set: model.set.clone(), method: Method::Srep, diagram: d.clone(), colim, to_colim, comparison: None, provenance: prov, model: Model::Srep(model) })
}

/// Morphism index of `(i ↓ I)` as built by [`FinCat::undercategory`]:
/// `(ψ, k)` for the morphism `ψ` out of object `k`.
fn under_index(c: &FinCat, i: usize) -> HashMap<(usize, usize), usize> {
    let mut index = HashMap::new();
    for (k, &phi) in c.outgoing(i).iter().enumerate() {
        for &psi in c.outgoing(c.target(phi)) {
            let m = index.len();
            index.insert((psi, k), m);
        }
    }
    index
}

/// The coend formula `∐_i Γ(i) ⊗_Δ B(i↓I)^op` modulo the relations from
/// `∐_{i→j} Γ(i) ⊗_Δ B(j↓I)^op`. `Γ` defaults to the canonical resolution;
/// a non-resolution is rejected unless `force` is set.
pub fn bk_hocolim(d: &Diagram, gamma: Option<&CosimplicialDiagram>, force: bool, budget: Budget) -> Result<HocolimResult> {
    let shape = d.shape().clone();
    let top = d.truncation();
    let canonical = gamma.is_none();
    let gamma = match gamma {
        Some(g) => {
            if !g.resolves(d) {
                return Err(Error::NotResolution("component 0 of the resolution differs from the diagram".into()));
            }
            g.clone()
        }
        None => CosimplicialDiagram::canonical(d)?,
    };
    let is_res = gamma.is_resolution();
    if !is_res && !force {
        return Err(Error::NotResolution("the cosimplicial diagram fails the resolution oracle; pass force to use it anyway".into()));
    }
    let mut weights = Vec::with_capacity(shape.object_count());
    for i in 0..shape.object_count() {
        let (under, _) = shape.undercategory(i)?;
        let op = Arc::new(under.opposite());
        let (n, chains) = nerve(&op, top, budget)?;
        weights.push(Weight { under, op, nerve: Arc::new(n), chains });
    }
    let mut kmaps = Vec::with_capacity(shape.morphism_count());
    for u in 0..shape.morphism_count() {
        let (i, j) = (shape.source(u), shape.target(u));
        let opos: HashMap<usize, usize> = shape.outgoing(i).iter().enumerate().map(|(k, &phi)| (phi, k)).collect();
        let index_i = under_index(&shape, i);
        let objects: Vec<usize> = shape.outgoing(j).iter().map(|&phi| opos[&shape.compose(phi, u)]).collect();
        let mut morphisms = Vec::new();
        for (k, &phi) in shape.outgoing(j).iter().enumerate() {
            for &psi in shape.outgoing(shape.target(phi)) {
                morphisms.push(index_i[&(psi, objects[k])]);
            }
        }
        let f = Functor::new_unchecked(weights[j].op.clone(), weights[i].op.clone(), objects, morphisms);
        let (wi, wj) = (&weights[i], &weights[j]);
        kmaps.push(crate::fincat::nerve_map(&f, (&wj.nerve, &wj.chains), (&wi.nerve, &wi.chains)));
    }
    let k = Diagram::new_unchecked(Arc::new(shape.opposite()), weights.iter().map(|w| w.nerve.clone()).collect(), kmaps)?;
    let ce = coend(&gamma, &k, budget)?;
    let colim = colim(d)?;
    let mut collapse: HashMap<(usize, usize), SimplicialMap> = HashMap::new();
    let mut levels = Vec::with_capacity(top + 1);
    for p in 0..=top {
        let mut level = Vec::with_capacity(ce.set.count(p));
        for x in 0..ce.set.count(p) {
            let (i, t) = ce.representative(p, x);
            let (m, _, a) = ce.pieces[i].representative(p, t);
            let op = collapse.entry((i, m)).or_insert_with(|| gamma.object(i).operator(&Mono::constant(m, 0, 0)));
            level.push(colim.cocone[i].apply(p, op.apply(p, a)));
        }
        levels.push(level);
    }
    let to_colim = SimplicialMap::new(ce.set.clone(), colim.set.clone(), levels)?;
    let saturated = weights.iter().any(|w| w.nerve.is_lossy());
    let mut prov = provenance("bk", Method::Bk, d, &ce.set, saturated);
    prov.resolution = Some(is_res);
    prov.tainted = !is_res;
    if !is_res {
        prov.notes.push("forced: the cosimplicial input is not a resolution".into());
    }
    let set = ce.set.clone();
    Ok(HocolimResult { set, method: Method::Bk, diagram: d.clone(), colim, to_colim, comparison: None, provenance: prov, model: Model::Bk { coend: ce, canonical, weights } })
}

/// `f_*: hocolim_I f^*X -> hocolim_J X` for `f: I -> J`; `src` must be
/// computed from `f^*X` (with the pulled-back resolution) and `tgt` from `X`
/// by the same method.
pub fn pushforward(f: &Functor, src: &HocolimResult, tgt: &HocolimResult) -> Result<SimplicialMap> {
    if **f.source() != **src.diagram.shape() || **f.target() != **tgt.diagram.shape() {
        return Err(Error::ShapeMismatch("pushforward along a functor with other ends".into()));
    }
    let top = src.set.truncation();
    let levels: Vec<Vec<usize>> = match (&src.model, &tgt.model) {
        (Model::Srep(a), Model::Srep(b)) => (0..=top)
            .map(|p| {
                (0..a.set.count(p))
                    .map(|x| {
                        let (k, v) = a.decode(p, x);
                        b.index(p, b.chains.lookup(&a.chains.levels[p][k].map(f)), v)
                    })
                    .collect()
            })
            .collect(),
        (Model::Bk { coend: ca, weights: wa, .. }, Model::Bk { coend: cb, weights: wb, .. }) => {
            let shape = f.source();
            let maps: Vec<Functor> = (0..shape.object_count())
                .map(|i| {
                    let g = f.on_undercategories(i, &wa[i].under, &wb[f.object(i)].under);
                    let (objs, mors) = functor_tables(&g);
                    Functor::new_unchecked(wa[i].op.clone(), wb[f.object(i)].op.clone(), objs, mors)
                })
                .collect();
            (0..=top)
                .map(|p| {
                    (0..ca.set.count(p))
                        .map(|x| {
                            let (i, t) = ca.representative(p, x);
                            let (m, kappa, v) = ca.pieces[i].representative(p, t);
                            let ch = wa[i].chains.levels[m][kappa].map(&maps[i]);
                            let j = f.object(i);
                            cb.class(j, p, cb.pieces[j].class(m, wb[j].chains.lookup(&ch), p, v))
                        })
                        .collect()
                })
                .collect()
        }
        _ => return Err(Error::ShapeMismatch("pushforward between results of different methods".into())),
    };
    SimplicialMap::new(src.set.clone(), tgt.set.clone(), levels)
}

/// Number of `p`-simplices of `Δ[m]`, i.e. monotone maps `[p] -> [m]`.
fn simplex_count(m: usize, p: usize) -> usize {
    (1..=m).fold(1usize, |acc, k| acc * (p + 1 + k) / k)
}

fn functor_tables(g: &Functor) -> (Vec<usize>, Vec<usize>) {
    let s = g.source();
    ((0..s.object_count()).map(|o| g.object(o)).collect(), (0..s.morphism_count()).map(|m| g.morphism(m)).collect())
}

/// The map of hocolims induced by a map of diagrams over the same shape.
/// For `bk`, the resolutions must be canonical unless the corresponding
/// maps of resolutions are supplied.
pub fn induced_by_map(eta: &DiagramMap, src: &HocolimResult, tgt: &HocolimResult, resolution_maps: Option<&[CosimplicialMap]>) -> Result<SimplicialMap> {
    let shape = src.diagram.shape();
    if **shape != **tgt.diagram.shape() || **shape != **eta.source().shape() {
        return Err(Error::ShapeMismatch("diagram map over another shape".into()));
    }
    let top = src.set.truncation();
    let levels: Vec<Vec<usize>> = match (&src.model, &tgt.model) {
        (Model::Srep(a), Model::Srep(b)) => (0..=top)
            .map(|p| {
                (0..a.set.count(p))
                    .map(|x| {
                        let (k, v) = a.decode(p, x);
                        b.index(p, k, eta.component(a.chains.levels[p][k].start).apply(p, v))
                    })
                    .collect()
            })
            .collect(),
        (Model::Bk { coend: ca, canonical: c1, .. }, Model::Bk { coend: cb, canonical: c2, .. }) => {
            if resolution_maps.is_none() && !(*c1 && *c2) {
                return invalid("maps of resolutions are needed for non-canonical resolutions");
            }
            let at = |i: usize, m: usize, p: usize, v: usize| -> usize {
                if let Some(maps) = resolution_maps {
                    return maps[i].component(m).apply(p, v);
                }
                if m == 0 {
                    return eta.component(i).apply(p, v);
                }
                // D(i) × Δ[m], index x * |Δ[m]_p| + s
                let w = simplex_count(m, p);
                eta.component(i).apply(p, v / w) * w + v % w
            };
            (0..=top)
                .map(|p| {
                    (0..ca.set.count(p))
                        .map(|x| {
                            let (i, t) = ca.representative(p, x);
                            let (m, kappa, v) = ca.pieces[i].representative(p, t);
                            cb.class(i, p, cb.pieces[i].class(m, kappa, p, at(i, m, p, v)))
                        })
                        .collect()
                })
                .collect()
        }
        _ => return Err(Error::ShapeMismatch("induced map between results of different methods".into())),
    };
    SimplicialMap::new(src.set.clone(), tgt.set.clone(), levels)
}

//! Diagrams of simplicial sets over finite categories, overcategories,
//! singular presheaves, realization and simplicial replacement.

mod coend;
mod overcat;
mod sing;
mod srep;

pub use coend::{coend, realize, Coend};
pub use overcat::{overcat_exponential_iso, overcategory, resolution_overcategory, slice_functor, slices, ExponentialIso, OverCat, ResolutionOverCat};
pub use sing::{sing, yoneda};
pub use srep::{srep, srep_diagonal, SrepModel};

use std::collections::HashMap;
use std::sync::Arc;

use crate::cosimp::{CosimplicialMap, CosimplicialSS};
use crate::error::{invalid, Error, Result};
use crate::fincat::{product_with_delta, DeltaProduct, FinCat, Functor, NatTrans};
use crate::ops::Mono;
use crate::sset::{product, product_map, standard_simplex, SimplicialMap, SimplicialSet};

/// A functor from a finite category to truncated simplicial sets.
#[derive(Clone, Debug)]
pub struct Diagram {
    shape: Arc<FinCat>,
    objects: Vec<Arc<SimplicialSet>>,
    morphisms: Vec<SimplicialMap>,
    truncation: usize,
}

impl Diagram {
    pub fn new(shape: Arc<FinCat>, objects: Vec<Arc<SimplicialSet>>, morphisms: Vec<SimplicialMap>) -> Result<Diagram> {
        let d = Diagram::new_unchecked(shape, objects, morphisms)?;
        d.check()?;
        Ok(d)
    }

    pub(crate) fn new_unchecked(shape: Arc<FinCat>, objects: Vec<Arc<SimplicialSet>>, morphisms: Vec<SimplicialMap>) -> Result<Diagram> {
        let Some(first) = objects.first() else {
            return Err(Error::ParameterRange("diagrams need a nonempty shape".into()));
        };
        let truncation = first.truncation();
        for o in &objects {
            if o.truncation() != truncation {
                return Err(Error::TruncationMismatch(o.truncation(), truncation));
            }
        }
        if objects.len() != shape.object_count() || morphisms.len() != shape.morphism_count() {
            return Err(Error::ShapeMismatch("diagram tables do not match the shape".into()));
        }
        Ok(Diagram { shape, objects, morphisms, truncation })
    }

    /// Builds a diagram from the images of generating morphisms, filling in
    /// identities and composites. `maps` pairs morphism indices with maps;
    /// every non-identity morphism must be listed or be a composite of
    /// listed ones.
    pub fn from_generators(shape: Arc<FinCat>, objects: Vec<Arc<SimplicialSet>>, maps: Vec<(usize, SimplicialMap)>) -> Result<Diagram> {
        let mut table: Vec<Option<SimplicialMap>> = vec![None; shape.morphism_count()];
        for o in 0..shape.object_count() {
            table[shape.identity(o)] = Some(SimplicialMap::identity(objects[o].clone()));
        }
        for (u, m) in maps {
            if u >= table.len() {
                return Err(Error::UnknownId(format!("morphism #{u}")));
            }
            table[u] = Some(m);
        }
        loop {
            let mut progress = false;
            for f in 0..shape.morphism_count() {
                let Some(mf) = table[f].clone() else { continue };
                for &g in shape.outgoing(shape.target(f)) {
                    let h = shape.compose(g, f);
                    if table[h].is_none() {
                        if let Some(mg) = &table[g] {
                            table[h] = Some(mf.then(mg)?);
                            progress = true;
                        }
                    }
                }
            }
            if !progress {
                break;
            }
        }
        let mut morphisms = Vec::with_capacity(table.len());
        for (u, m) in table.into_iter().enumerate() {
            match m {
                Some(m) => morphisms.push(m),
                None => return invalid(format!("no map given for morphism `{}`", shape.morphism(u).name)),
            }
        }
        Diagram::new(shape, objects, morphisms)
    }

    pub fn constant(shape: Arc<FinCat>, x: Arc<SimplicialSet>) -> Diagram {
        let id = SimplicialMap::identity(x.clone());
        let truncation = x.truncation();
        Diagram { objects: vec![x; shape.object_count()], morphisms: vec![id; shape.morphism_count()], shape, truncation }
    }

    pub fn shape(&self) -> &Arc<FinCat> {
        &self.shape
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn object(&self, i: usize) -> &Arc<SimplicialSet> {
        &self.objects[i]
    }

    pub fn objects(&self) -> &[Arc<SimplicialSet>] {
        &self.objects
    }

    pub fn morphism(&self, u: usize) -> &SimplicialMap {
        &self.morphisms[u]
    }

    pub fn morphisms(&self) -> &[SimplicialMap] {
        &self.morphisms
    }

    pub fn is_lossy(&self) -> bool {
        self.objects.iter().any(|o| o.is_lossy())
    }

    /// Exhaustive functoriality check.
    pub fn check(&self) -> Result<()> {
        let c = &self.shape;
        let same = |a: &Arc<SimplicialSet>, b: &Arc<SimplicialSet>| Arc::ptr_eq(a, b) || a.same_structure(b);
        for u in 0..c.morphism_count() {
            let m = &self.morphisms[u];
            if !same(m.source(), &self.objects[c.source(u)]) || !same(m.target(), &self.objects[c.target(u)]) {
                return invalid(format!("map for `{}` has the wrong ends", c.morphism(u).name));
            }
        }
        for o in 0..c.object_count() {
            let id = &self.morphisms[c.identity(o)];
            if id.levels().iter().any(|l| l.iter().enumerate().any(|(x, &y)| x != y)) {
                return invalid(format!("identity of `{}` is not sent to an identity", c.object_name(o)));
            }
        }
        for f in 0..c.morphism_count() {
            for &g in c.outgoing(c.target(f)) {
                let h = c.compose(g, f);
                let lhs = self.morphisms[f].then(&self.morphisms[g])?;
                if lhs.levels() != self.morphisms[h].levels() {
                    return invalid(format!(
                        "diagram does not preserve {} . {}",
                        c.morphism(g).name,
                        c.morphism(f).name
                    ));
                }
            }
        }
        Ok(())
    }

    /// `f^* X = X ∘ f`.
    pub fn pullback(&self, f: &Functor) -> Result<Diagram> {
        if **f.target() != *self.shape {
            return Err(Error::ShapeMismatch("pullback along a functor into another shape".into()));
        }
        let src = f.source();
        let objects = (0..src.object_count()).map(|i| self.objects[f.object(i)].clone()).collect();
        let morphisms = (0..src.morphism_count()).map(|u| self.morphisms[f.morphism(u)].clone()).collect();
        Diagram::new_unchecked(src.clone(), objects, morphisms)
    }

    /// The map of diagrams `f^*X -> g^*X` with components `X(η_i)`.
    pub fn whisker(&self, eta: &NatTrans) -> Result<DiagramMap> {
        let src = Arc::new(self.pullback(eta.source())?);
        let tgt = Arc::new(self.pullback(eta.target())?);
        let components = eta.components().iter().map(|&m| self.morphisms[m].clone()).collect();
        DiagramMap::new(src, tgt, components)
    }
}

/// A natural transformation between diagrams of the same shape.
#[derive(Clone, Debug)]
pub struct DiagramMap {
    source: Arc<Diagram>,
    target: Arc<Diagram>,
    components: Vec<SimplicialMap>,
}

impl DiagramMap {
    pub fn new(source: Arc<Diagram>, target: Arc<Diagram>, components: Vec<SimplicialMap>) -> Result<DiagramMap> {
        if *source.shape != *target.shape || components.len() != source.shape.object_count() {
            return Err(Error::ShapeMismatch("diagram map between different shapes".into()));
        }
        let c = source.shape.clone();
        for u in 0..c.morphism_count() {
            let lhs = source.morphisms[u].then(&components[c.target(u)])?;
            let rhs = components[c.source(u)].then(&target.morphisms[u])?;
            if lhs.levels() != rhs.levels() {
                return invalid(format!("diagram map is not natural at `{}`", c.morphism(u).name));
            }
        }
        Ok(DiagramMap { source, target, components })
    }

    pub fn source(&self) -> &Arc<Diagram> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Diagram> {
        &self.target
    }

    pub fn component(&self, i: usize) -> &SimplicialMap {
        &self.components[i]
    }
}

/// A functor from a finite category to cosimplicial simplicial sets, such
/// as a cosimplicial resolution of a diagram.
#[derive(Clone, Debug)]
pub struct CosimplicialDiagram {
    shape: Arc<FinCat>,
    objects: Vec<Arc<CosimplicialSS>>,
    morphisms: Vec<CosimplicialMap>,
}

impl CosimplicialDiagram {
    pub fn new(shape: Arc<FinCat>, objects: Vec<Arc<CosimplicialSS>>, morphisms: Vec<CosimplicialMap>) -> Result<Self> {
        if objects.len() != shape.object_count() || morphisms.len() != shape.morphism_count() {
            return Err(Error::ShapeMismatch("resolution tables do not match the shape".into()));
        }
        let g = CosimplicialDiagram { shape, objects, morphisms };
        for n in 0..=g.truncation() {
            g.component_diagram(n).check()?;
        }
        Ok(g)
    }

    /// `Γ(i) = D(i) × Δ[•]` with component 0 equal to `D(i)`, and
    /// `Γ(u) = D(u) × id`.
    pub fn canonical(d: &Diagram) -> Result<CosimplicialDiagram> {
        let top = d.truncation();
        let objects: Vec<Arc<CosimplicialSS>> =
            d.objects.iter().map(|x| CosimplicialSS::canonical_resolution(x.clone()).map(Arc::new)).collect::<Result<_>>()?;
        let simplices: Vec<Arc<SimplicialSet>> = (0..=top).map(|n| standard_simplex(n, top).map(Arc::new)).collect::<Result<_>>()?;
        let mut morphisms = Vec::with_capacity(d.morphisms.len());
        for (u, m) in d.morphisms.iter().enumerate() {
            let (a, b) = (&objects[d.shape.source(u)], &objects[d.shape.target(u)]);
            let comps = (0..=top)
                .map(|n| {
                    if n == 0 {
                        m.clone()
                    } else {
                        product_map(m, &SimplicialMap::identity(simplices[n].clone()), a.component(n), b.component(n))
                    }
                })
                .collect();
            morphisms.push(CosimplicialMap::new(a.clone(), b.clone(), comps)?);
        }
        Ok(CosimplicialDiagram { shape: d.shape.clone(), objects, morphisms })
    }

    pub fn shape(&self) -> &Arc<FinCat> {
        &self.shape
    }

    pub fn truncation(&self) -> usize {
        self.objects[0].truncation()
    }

    pub fn object(&self, i: usize) -> &Arc<CosimplicialSS> {
        &self.objects[i]
    }

    pub fn morphism(&self, u: usize) -> &CosimplicialMap {
        &self.morphisms[u]
    }

    /// Whether every `Γ(i)` passes the resolution oracle.
    pub fn is_resolution(&self) -> bool {
        self.objects.iter().all(|o| o.is_resolution())
    }

    /// Whether `Γ^0` is the given diagram on the nose.
    pub fn resolves(&self, d: &Diagram) -> bool {
        *self.shape == *d.shape
            && (0..self.shape.object_count()).all(|i| self.objects[i].component(0).same_structure(&d.objects[i]))
            && (0..self.shape.morphism_count()).all(|u| self.morphisms[u].component(0).levels() == d.morphisms[u].levels())
    }

    /// The diagram `i ↦ Γ(i)^n`.
    pub fn component_diagram(&self, n: usize) -> Diagram {
        Diagram::new_unchecked(
            self.shape.clone(),
            self.objects.iter().map(|o| o.component(n).clone()).collect(),
            self.morphisms.iter().map(|m| m.component(n).clone()).collect(),
        )
        .expect("resolution shapes match")
    }

    pub fn pullback(&self, f: &Functor) -> Result<CosimplicialDiagram> {
        if **f.target() != *self.shape {
            return Err(Error::ShapeMismatch("pullback along a functor into another shape".into()));
        }
        let src = f.source();
        Ok(CosimplicialDiagram {
            shape: src.clone(),
            objects: (0..src.object_count()).map(|i| self.objects[f.object(i)].clone()).collect(),
            morphisms: (0..src.morphism_count()).map(|u| self.morphisms[f.morphism(u)].clone()).collect(),
        })
    }

    /// The diagram `(c, [n]) ↦ Γ(c)^n` on `C × Δ_{≤depth}`, with
    /// `(u, θ) ↦ Γ(u)^n ∘ Γ(c)(θ)`.
    pub fn delta_diagram(&self, depth: usize) -> Result<(DeltaProduct, Diagram)> {
        if depth > self.truncation() {
            return Err(Error::ParameterRange(format!("depth {depth} above the truncation {}", self.truncation())));
        }
        let dp = product_with_delta(&self.shape, depth);
        let objects = dp.objects.iter().map(|&(c, n)| self.objects[c].component(n).clone()).collect();
        let mut morphisms = Vec::with_capacity(dp.morphisms.len());
        for (u, theta) in &dp.morphisms {
            let c = self.shape.source(*u);
            let op = self.objects[c].operator(theta);
            morphisms.push(op.then(self.morphisms[*u].component(theta.target()))?);
        }
        let d = Diagram::new_unchecked(dp.category.clone(), objects, morphisms)?;
        Ok((dp, d))
    }
}

/// The full subcategory of simplicial sets on the given objects, with the
/// inclusion diagram; all maps are enumerated.
pub fn full_subcategory(name: &str, objects: &[(String, Arc<SimplicialSet>)], budget: u64) -> Result<(Arc<FinCat>, Diagram)> {
    concrete_category(name, objects, |_, _, _| true, budget)
}

/// The subcategory of simplicial sets on the given objects whose maps are
/// the enumerated maps accepted by `keep(source, target, map)`. Identities
/// are always kept; the selection must be closed under composition.
pub fn concrete_category(
    name: &str,
    objects: &[(String, Arc<SimplicialSet>)],
    keep: impl Fn(usize, usize, &SimplicialMap) -> bool,
    budget: u64,
) -> Result<(Arc<FinCat>, Diagram)> {
    let mut morphisms = Vec::new();
    let mut maps: Vec<SimplicialMap> = Vec::new();
    let mut identities = vec![0; objects.len()];
    let mut lookup: HashMap<(usize, usize, Vec<Vec<usize>>), usize> = HashMap::new();
    for (a, (na, xa)) in objects.iter().enumerate() {
        for (b, (nb, xb)) in objects.iter().enumerate() {
            let mut k = 0;
            for m in crate::sset::enumerate_maps(xa, xb, budget)? {
                let is_id = a == b && m.levels().iter().all(|l| l.iter().enumerate().all(|(x, &y)| x == y));
                if !is_id && !keep(a, b, &m) {
                    continue;
                }
                let mname = if is_id {
                    identities[a] = morphisms.len();
                    format!("id_{na}")
                } else {
                    k += 1;
                    format!("{na}>{nb}.{}", k - 1)
                };
                lookup.insert((a, b, m.nondegenerate_images()), morphisms.len());
                morphisms.push(crate::fincat::Morphism { name: mname, source: a, target: b });
                maps.push(m);
            }
        }
    }
    let mut compose = HashMap::new();
    for f in 0..maps.len() {
        for g in 0..maps.len() {
            if morphisms[f].target != morphisms[g].source {
                continue;
            }
            let key = (morphisms[f].source, morphisms[g].target, precomposed_key(&maps[f], &maps[g]));
            match lookup.get(&key) {
                Some(&h) => {
                    compose.insert((g, f), h);
                }
                None => return invalid(format!("{} . {} is not among the chosen maps", morphisms[g].name, morphisms[f].name)),
            }
        }
    }
    let names = objects.iter().map(|(n, _)| n.clone()).collect();
    let cat = Arc::new(FinCat::new(name, names, morphisms, identities, compose)?);
    let d = Diagram::new(cat.clone(), objects.iter().map(|(_, x)| x.clone()).collect(), maps)?;
    Ok((cat, d))
}

/// The functor between two concrete categories that is `objects` on objects
/// and the identity on underlying maps; fails if some map has no match.
pub fn concrete_functor(src: &Diagram, tgt: &Diagram, objects: Vec<usize>) -> Result<Functor> {
    let (sc, tc) = (src.shape(), tgt.shape());
    let mut morphisms = Vec::with_capacity(sc.morphism_count());
    for u in 0..sc.morphism_count() {
        let (a, b) = (objects[sc.source(u)], objects[sc.target(u)]);
        let key = src.morphism(u).nondegenerate_images();
        match tc.hom(a, b).into_iter().find(|&v| tgt.morphism(v).nondegenerate_images() == key) {
            Some(v) => morphisms.push(v),
            None => return invalid(format!("no counterpart for `{}`", sc.morphism(u).name)),
        }
    }
    Functor::new(sc.clone(), tc.clone(), objects, morphisms)
}

/// The map `Γ^0 c -> Γ^n c` or `Γ^n c -> Γ^0 c` induced by a monotone map;
/// re-exported for callers that build their own slices.
pub fn cosimplicial_operator(a: &CosimplicialSS, theta: &Mono) -> SimplicialMap {
    a.operator(theta)
}

/// `X × Δ[n]` with `n = 0` giving `X` itself, matching canonical resolutions.
pub fn with_simplex(x: &Arc<SimplicialSet>, n: usize) -> Result<Arc<SimplicialSet>> {
    if n == 0 {
        return Ok(x.clone());
    }
    Ok(Arc::new(product(x, &standard_simplex(n, x.truncation())?)?))
}

/// Images of the nondegenerate simplices of `pre.source()` under `phi ∘ pre`;
/// this is the lookup key of the composite map.
pub(crate) fn precomposed_key(pre: &SimplicialMap, phi: &SimplicialMap) -> Vec<Vec<usize>> {
    let src = pre.source();
    (0..=src.truncation()).map(|q| src.nondegenerate(q).iter().map(|&z| phi.apply(q, pre.apply(q, z))).collect()).collect()
}

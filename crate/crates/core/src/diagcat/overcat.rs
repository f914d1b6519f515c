use std::collections::HashMap;
use std::sync::Arc;

use super::{precomposed_key, CosimplicialDiagram, Diagram};
use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::fincat::{DeltaProduct, FinCat, Functor, Morphism};
use crate::ops::Mono;
use crate::sset::{enumerate_maps, product, product_map, standard_simplex, Exponential, SimplicialMap, SimplicialSet};

type Key = Vec<Vec<usize>>;

/// The overcategory `(F ↓ X)` of a diagram `F: C -> sSet` over a simplicial
/// set `X`: objects are pairs `(c, φ: F(c) -> X)`, and a morphism
/// `(c, φ) -> (c', φ')` is an arrow `u: c -> c'` with `φ' ∘ F(u) = φ`.
#[derive(Clone, Debug)]
pub struct OverCat {
    pub category: Arc<FinCat>,
    /// `(c, φ) ↦ c`.
    pub projection: Functor,
    /// `(c, φ) ↦ F(c)`.
    pub evaluation: Diagram,
    /// `φ` for each object; together a cocone from `evaluation` to `X`.
    pub maps: Vec<SimplicialMap>,
    pub target: Arc<SimplicialSet>,
    lookup: HashMap<(usize, Key), usize>,
    morphism_index: HashMap<(usize, usize), usize>,
}

impl OverCat {
    pub fn object_count(&self) -> usize {
        self.category.object_count()
    }

    /// The object `(c, φ)`, if `φ: F(c) -> X`.
    pub fn find(&self, c: usize, phi: &SimplicialMap) -> Option<usize> {
        self.lookup.get(&(c, phi.nondegenerate_images())).copied()
    }

    pub(crate) fn find_key(&self, c: usize, key: Key) -> Option<usize> {
        self.lookup.get(&(c, key)).copied()
    }

    /// The morphism lying over `u` with the given target object.
    pub fn morphism_over(&self, u: usize, target: usize) -> Option<usize> {
        self.morphism_index.get(&(u, target)).copied()
    }

    /// Objects over each object of the base shape.
    pub fn objects_over(&self, c: usize) -> Vec<usize> {
        (0..self.object_count()).filter(|&o| self.projection.object(o) == c).collect()
    }
}

pub fn overcategory(f: &Diagram, x: &Arc<SimplicialSet>, budget: Budget) -> Result<OverCat> {
    let shape = f.shape();
    if f.truncation() != x.truncation() {
        return Err(Error::TruncationMismatch(f.truncation(), x.truncation()));
    }
    let mut names = Vec::new();
    let mut over = Vec::new();
    let mut maps = Vec::new();
    let mut lookup = HashMap::new();
    for c in 0..shape.object_count() {
        let ms = enumerate_maps(f.object(c), x, budget.visits)?;
        budget.check_size("overcategory objects", (maps.len() + ms.len()) as u128)?;
        for (k, m) in ms.into_iter().enumerate() {
            lookup.insert((c, m.nondegenerate_images()), maps.len());
            names.push(format!("{}.{k}", shape.object_name(c)));
            over.push(c);
            maps.push(m);
        }
    }
    let mut morphisms = Vec::new();
    let mut lies_over = Vec::new();
    let mut morphism_index = HashMap::new();
    for t in 0..maps.len() {
        for &u in shape.incoming(over[t]) {
            let c = shape.source(u);
            let s = lookup[&(c, precomposed_key(f.morphism(u), &maps[t]))];
            morphism_index.insert((u, t), morphisms.len());
            morphisms.push(Morphism { name: format!("{}/{}", shape.morphism(u).name, names[t]), source: s, target: t });
            lies_over.push(u);
        }
        budget.check_size("overcategory morphisms", morphisms.len() as u128)?;
    }
    let identities: Vec<usize> = (0..maps.len()).map(|o| morphism_index[&(shape.identity(over[o]), o)]).collect();
    let mut compose = HashMap::new();
    for (m2, mor2) in morphisms.iter().enumerate() {
        let v = lies_over[m2];
        for &u in shape.incoming(over[mor2.source]) {
            let m1 = morphism_index[&(u, mor2.source)];
            compose.insert((m2, m1), morphism_index[&(shape.compose(v, u), mor2.target)]);
        }
    }
    let category = Arc::new(FinCat::new_unchecked(format!("({}/X)", shape.name()), names, morphisms, identities, compose));
    let projection = Functor::new_unchecked(category.clone(), shape.clone(), over.clone(), lies_over.clone());
    let evaluation = Diagram::new_unchecked(
        category.clone(),
        over.iter().map(|&c| f.object(c).clone()).collect(),
        lies_over.iter().map(|&u| f.morphism(u).clone()).collect(),
    )?;
    Ok(OverCat { category, projection, evaluation, maps, target: x.clone(), lookup, morphism_index })
}

/// Functor between overcategories of two diagrams on the same shape,
/// induced by a natural map `α: F -> G`: `(c, φ) ↦ (c, φ ∘ α_c)` from
/// `(G ↓ X)` to `(F ↓ X)`.
pub(crate) fn precompose_functor(alpha: &[SimplicialMap], from: &OverCat, to: &OverCat) -> Result<Functor> {
    let mut objects = Vec::with_capacity(from.object_count());
    for o in 0..from.object_count() {
        let c = from.projection.object(o);
        match to.find_key(c, precomposed_key(&alpha[c], &from.maps[o])) {
            Some(t) => objects.push(t),
            None => return invalid("precomposed map is missing from the overcategory"),
        }
    }
    let morphisms = (0..from.category.morphism_count())
        .map(|m| {
            let u = from.projection.morphism(m);
            to.morphism_over(u, objects[from.category.target(m)]).expect("precomposition preserves morphisms")
        })
        .collect();
    Functor::new(from.category.clone(), to.category.clone(), objects, morphisms)
}

/// `(C × Δ_{≤depth} ↓ X)` for a cosimplicial diagram `Γ`, with the
/// inclusion of `(C ↓ X)` as the objects over `[0]`.
#[derive(Clone, Debug)]
pub struct ResolutionOverCat {
    pub over: OverCat,
    pub delta: Arc<DeltaProduct>,
    pub depth: usize,
    pub base: OverCat,
    pub inclusion: Functor,
}

pub fn resolution_overcategory(gamma: &CosimplicialDiagram, x: &Arc<SimplicialSet>, depth: usize, budget: Budget) -> Result<ResolutionOverCat> {
    let (dp, dd) = gamma.delta_diagram(depth)?;
    let over = overcategory(&dd, x, budget)?;
    let base = overcategory(&gamma.component_diagram(0), x, budget)?;
    let mut objects = Vec::with_capacity(base.object_count());
    for o in 0..base.object_count() {
        let c = base.projection.object(o);
        objects.push(over.find(dp.object_index[&(c, 0)], &base.maps[o]).expect("level-zero objects agree"));
    }
    let morphisms = (0..base.category.morphism_count())
        .map(|m| {
            let u = base.projection.morphism(m);
            let v = dp.morphism_index[&(u, Mono::identity(0))];
            over.morphism_over(v, objects[base.category.target(m)]).expect("level-zero morphisms agree")
        })
        .collect();
    let inclusion = Functor::new(base.category.clone(), over.category.clone(), objects, morphisms)?;
    Ok(ResolutionOverCat { over, delta: Arc::new(dp), depth, base, inclusion })
}

/// The slices `(C^n ↓ X)` of a resolution, i.e. overcategories of the
/// diagrams `c ↦ Γ(c)^n`.
pub fn slices(gamma: &CosimplicialDiagram, x: &Arc<SimplicialSet>, depth: usize, budget: Budget) -> Result<Vec<OverCat>> {
    (0..=depth).map(|n| overcategory(&gamma.component_diagram(n), x, budget)).collect()
}

/// `θ^*: (C^n ↓ X) -> (C^m ↓ X)` for `θ: [m] -> [n]`.
pub fn slice_functor(gamma: &CosimplicialDiagram, slices: &[OverCat], theta: &Mono) -> Result<Functor> {
    let ops: Vec<SimplicialMap> = (0..gamma.shape().object_count()).map(|c| gamma.object(c).operator(theta)).collect();
    precompose_functor(&ops, &slices[theta.target()], &slices[theta.source()])
}

/// The isomorphism `(C^n ↓ X) ≅ (C^0 ↓ X^{Δ[n]})` for a canonical
/// resolution, given by currying.
pub struct ExponentialIso {
    pub slice: OverCat,
    pub curried: OverCat,
    pub exponential: Exponential,
    pub forward: Functor,
    pub backward: Functor,
}

impl ExponentialIso {
    /// Both composites are identities and both functors are functorial.
    pub fn check(&self) -> Result<()> {
        self.forward.check()?;
        self.backward.check()?;
        let fb = self.forward.then(&self.backward)?;
        let bf = self.backward.then(&self.forward)?;
        if fb != Functor::identity(&self.slice.category) || bf != Functor::identity(&self.curried.category) {
            return invalid("currying functors are not mutually inverse");
        }
        Ok(())
    }
}

pub fn overcat_exponential_iso(gamma0: &Diagram, x: &Arc<SimplicialSet>, n: usize, budget: Budget) -> Result<ExponentialIso> {
    let top = gamma0.truncation();
    let simplex = Arc::new(standard_simplex(n, top)?);
    let id = SimplicialMap::identity(simplex.clone());
    let objects: Vec<Arc<SimplicialSet>> = gamma0.objects().iter().map(|o| product(o, &simplex).map(Arc::new)).collect::<Result<_>>()?;
    let shape = gamma0.shape();
    let morphisms = (0..shape.morphism_count())
        .map(|u| product_map(gamma0.morphism(u), &id, &objects[shape.source(u)], &objects[shape.target(u)]))
        .collect();
    let level = Diagram::new_unchecked(shape.clone(), objects.clone(), morphisms)?;
    let slice = overcategory(&level, x, budget)?;
    let exponential = Exponential::new(x, &simplex, budget)?;
    let curried = overcategory(gamma0, &exponential.set, budget)?;
    let mut fwd = Vec::with_capacity(slice.object_count());
    for o in 0..slice.object_count() {
        let c = slice.projection.object(o);
        let g = exponential.curry(gamma0.object(c), &slice.maps[o])?;
        fwd.push(curried.find(c, &g).ok_or_else(|| Error::Invalid("curried map missing".into()))?);
    }
    let mut bwd = Vec::with_capacity(curried.object_count());
    for o in 0..curried.object_count() {
        let c = curried.projection.object(o);
        let f = exponential.uncurry(&curried.maps[o], &objects[c])?;
        bwd.push(slice.find(c, &f).ok_or_else(|| Error::Invalid("uncurried map missing".into()))?);
    }
    let lift = |from: &OverCat, to: &OverCat, objs: &[usize]| -> Functor {
        let ms = (0..from.category.morphism_count())
            .map(|m| to.morphism_over(from.projection.morphism(m), objs[from.category.target(m)]).unwrap_or(usize::MAX))
            .collect();
        Functor::new_unchecked(from.category.clone(), to.category.clone(), objs.to_vec(), ms)
    };
    let forward = lift(&slice, &curried, &fwd);
    let backward = lift(&curried, &slice, &bwd);
    Ok(ExponentialIso { slice, curried, exponential, forward, backward })
}

//! Small named instances and seeded random generators used by the test
//! suites and the CLI `verify` command.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::budget::Budget;
use crate::cosimp::{tensor, CosimplicialSS};
use crate::diagcat::{concrete_category, concrete_functor, full_subcategory, overcategory, srep, Diagram, OverCat};
use crate::error::{invalid, Result};
use crate::fincat::{FinCat, Functor, NatTrans};
use crate::hocolim::ZigZag;
use crate::sset::{map_on_vertices, point, product, simplicial_complex, standard_simplex, to_point, BisimplicialSet, SimplicialMap, SimplicialSet};

/// Most nondegenerate simplices a random complex may have.
pub const MAX_NONDEGENERATE: usize = 12;

/// Two points.
pub fn s0(truncation: usize) -> Arc<SimplicialSet> {
    Arc::new(simplicial_complex(2, &[vec![0], vec![1]], truncation).unwrap())
}

/// `pt <- S⁰ -> pt` on the span shape; its homotopy colimit is a circle
/// while its colimit is a point.
pub fn pushout(truncation: usize) -> Diagram {
    let shape = Arc::new(FinCat::span());
    let (s, pt) = (s0(truncation), Arc::new(point(truncation)));
    let u = shape.find_morphism("a<b").unwrap();
    let v = shape.find_morphism("a<c").unwrap();
    let m = to_point(&s, &pt);
    Diagram::from_generators(shape, vec![s, pt.clone(), pt], vec![(u, m.clone()), (v, m)]).unwrap()
}

/// `Z/2` acting on `S⁰` by swapping the points.
pub fn swap_action(truncation: usize) -> Diagram {
    let shape = Arc::new(FinCat::cyclic_group(2));
    let s = s0(truncation);
    let swap = map_on_vertices(&s, &s, |v| 1 - v).unwrap();
    Diagram::new(shape, vec![s.clone()], vec![SimplicialMap::identity(s), swap]).unwrap()
}

/// The constant diagram at a point over `c`.
pub fn constant_point(c: &Arc<FinCat>, truncation: usize) -> Diagram {
    Diagram::constant(c.clone(), Arc::new(point(truncation)))
}

fn with_all_vertices(vertices: usize, facets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0..vertices).map(|v| vec![v]).collect();
    all.extend(facets.iter().cloned());
    all
}

fn random_facet(rng: &mut impl Rng, vertices: usize) -> Vec<usize> {
    let size = rng.gen_range(1..=vertices.min(3));
    let mut vs: Vec<usize> = (0..vertices).collect();
    vs.shuffle(rng);
    vs.truncate(size);
    vs.sort_unstable();
    vs
}

fn nondegenerate_total(x: &SimplicialSet) -> usize {
    x.nondegenerate_counts().iter().sum()
}

/// A random ordered complex on at most 4 vertices with at most
/// `MAX_NONDEGENERATE` nondegenerate simplices.
pub fn random_complex(rng: &mut impl Rng, truncation: usize) -> SimplicialSet {
    loop {
        let vertices = rng.gen_range(1..=4);
        let facets: Vec<Vec<usize>> = (0..rng.gen_range(0..=3)).map(|_| random_facet(rng, vertices)).collect();
        let x = simplicial_complex(vertices, &with_all_vertices(vertices, &facets), truncation).unwrap();
        if nondegenerate_total(&x) <= MAX_NONDEGENERATE {
            return x;
        }
    }
}

/// A random poset on 1 to 4 objects; objects are numbered compatibly with
/// the order.
pub fn random_poset(rng: &mut impl Rng) -> FinCat {
    let n = rng.gen_range(1..=4);
    let names: Vec<String> = (0..n).map(|k| ((b'a' + k as u8) as char).to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut less = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.5) {
                less.push((a, b));
            }
        }
    }
    FinCat::poset("P", &refs, &less).unwrap()
}

/// A random diagram of complexes over a random poset: each value contains the
/// values below it, maps are inclusions, and values at maximal objects may be
/// replaced by a monotone vertex quotient.
pub fn random_diagram(rng: &mut impl Rng, truncation: usize) -> Diagram {
    'retry: loop {
        let shape = Arc::new(random_poset(rng));
        let n = shape.object_count();
        if n == 1 && rng.gen_bool(0.7) {
            continue;
        }
        let vertices = rng.gen_range(2..=4);
        let mut facets: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
        for b in 0..n {
            let mut fs: Vec<Vec<usize>> = Vec::new();
            for a in 0..b {
                if !shape.hom(a, b).is_empty() {
                    fs.extend(facets[a].iter().cloned());
                }
            }
            for _ in 0..rng.gen_range(0..=2) {
                fs.push(random_facet(rng, vertices));
            }
            facets.push(fs);
        }
        let mut objects: Vec<Arc<SimplicialSet>> = Vec::with_capacity(n);
        for fs in &facets {
            let x = simplicial_complex(vertices, &with_all_vertices(vertices, fs), truncation).unwrap();
            if nondegenerate_total(&x) > MAX_NONDEGENERATE {
                continue 'retry;
            }
            objects.push(Arc::new(x));
        }
        let maximal = |a: usize| (0..n).all(|b| b == a || shape.hom(a, b).is_empty());
        let mut quotient: Vec<Option<Vec<usize>>> = vec![None; n];
        for a in 0..n {
            if maximal(a) && rng.gen_bool(0.4) {
                // a monotone surjection onto 1..vertices-1 vertices
                let mut q = vec![0];
                for _ in 1..vertices {
                    let step = usize::from(rng.gen_bool(0.4));
                    q.push(q[q.len() - 1] + step);
                }
                let size = q[vertices - 1] + 1;
                if size == vertices {
                    continue;
                }
                let image: Vec<Vec<usize>> = facets[a].iter().map(|f| f.iter().map(|&w| q[w]).collect()).collect();
                objects[a] = Arc::new(simplicial_complex(size, &with_all_vertices(size, &image), truncation).unwrap());
                quotient[a] = Some(q);
            }
        }
        let mut maps = Vec::new();
        for u in 0..shape.morphism_count() {
            let (a, b) = (shape.source(u), shape.target(u));
            let m = if a == b {
                SimplicialMap::identity(objects[a].clone())
            } else {
                let q = quotient[b].clone().unwrap_or_else(|| (0..vertices).collect());
                map_on_vertices(&objects[a], &objects[b], |w| q[w]).unwrap()
            };
            maps.push(m);
        }
        return Diagram::new(shape, objects, maps).unwrap();
    }
}

/// A random small truncated cosimplicial simplicial set: a canonical
/// resolution, a constant object, or a canonical resolution tensored with a
/// small simplicial set.
pub fn random_cosimplicial(rng: &mut impl Rng, truncation: usize, budget: Budget) -> Result<CosimplicialSS> {
    let x = Arc::new(random_small(rng, truncation));
    match rng.gen_range(0..3) {
        0 => CosimplicialSS::canonical_resolution(x),
        1 => Ok(CosimplicialSS::constant(x)),
        _ => {
            let k = Arc::new(if rng.gen_bool(0.5) { standard_simplex(1, truncation)? } else { (*s0(truncation)).clone() });
            let a = Arc::new(CosimplicialSS::canonical_resolution(x)?);
            Ok(tensor(&a, &k, budget)?.0)
        }
    }
}

fn random_small(rng: &mut impl Rng, truncation: usize) -> SimplicialSet {
    loop {
        let x = random_complex(rng, truncation);
        if nondegenerate_total(&x) <= 4 {
            return x;
        }
    }
}

/// An instance of the reduction criterion: `f: I -> J`, `g: J -> I`,
/// `η: gf ⇝ Id`, `θ: fg ⇝ Id` and a diagram `X` on `I`.
#[derive(Clone, Debug)]
pub struct HocoredInstance {
    pub label: String,
    pub f: Functor,
    pub g: Functor,
    pub eta: ZigZag,
    pub theta: ZigZag,
    pub x: Diagram,
}

/// The pushout diagram against a relabelled copy of its shape; both
/// transformations are identities.
pub fn hocored_relabelling(truncation: usize) -> HocoredInstance {
    let x = pushout(truncation);
    let i = x.shape().clone();
    let j = Arc::new(FinCat::poset("span'", &["p", "q", "r"], &[(0, 1), (0, 2)]).unwrap());
    let ids = |c: &FinCat| (0..c.object_count()).collect::<Vec<_>>();
    let mids = |c: &FinCat| (0..c.morphism_count()).collect::<Vec<_>>();
    let f = Functor::new(i.clone(), j.clone(), ids(&i), mids(&i)).unwrap();
    let g = Functor::new(j.clone(), i.clone(), ids(&j), mids(&j)).unwrap();
    let eta = ZigZag::single(NatTrans::identity(&Functor::identity(&i)));
    let theta = ZigZag::single(NatTrans::identity(&Functor::identity(&j)));
    HocoredInstance { label: "relabelling".into(), f, g, eta, theta, x }
}

/// The replacement instance. `C = {Δ[0], Δ[1], L}` with `L = Δ[1]×Δ[1]`,
/// where maps into `L` are only those through the diagonal; every object has
/// a replacement `Fc -> c` in `C' = {Δ[0], Δ[1]}` (the diagonal for `L`).
/// `I = (C ↓ Y)`, `J = (C' ↓ Y)`, `g` is the inclusion and
/// `f(c, φ) = (Fc, φ ε_c)`.
pub fn hocored_replacement(y: &Arc<SimplicialSet>, budget: Budget) -> Result<HocoredInstance> {
    let n = y.truncation();
    let d0 = Arc::new(standard_simplex(0, n)?);
    let d1 = Arc::new(standard_simplex(1, n)?);
    let l = Arc::new(product(&d1, &d1)?);
    let diagonal_vertices = [0, 3];
    let objects = vec![("D0".to_string(), d0.clone()), ("D1".to_string(), d1.clone()), ("L".to_string(), l.clone())];
    let (_, big) = concrete_category("C", &objects, |_, b, m| b != 2 || m.level(0).iter().all(|v| diagonal_vertices.contains(v)), budget.visits)?;
    let (_, small) = full_subcategory("C'", &objects[..2], budget.visits)?;
    let incl = concrete_functor(&small, &big, vec![0, 1])?;
    let diag = map_on_vertices(&d1, &l, |v| 3 * v)?;
    let replace = [0, 1, 1];
    let eps = [SimplicialMap::identity(d0), SimplicialMap::identity(d1.clone()), diag];
    let (cb, cs) = (big.shape().clone(), small.shape().clone());
    // F(u) is the unique v with ε_b v = u ε_a
    let mut f_mor = Vec::with_capacity(cb.morphism_count());
    for u in 0..cb.morphism_count() {
        let (a, b) = (cb.source(u), cb.target(u));
        let want = eps[a].then(big.morphism(u))?.nondegenerate_images();
        let found = cs.hom(replace[a], replace[b]).into_iter().find(|&v| small.morphism(v).then(&eps[b]).map(|m| m.nondegenerate_images() == want).unwrap_or(false));
        match found {
            Some(v) => f_mor.push(v),
            None => return invalid("replacement is not functorial"),
        }
    }
    let eps_mor: Vec<usize> = (0..3)
        .map(|c| {
            let key = eps[c].nondegenerate_images();
            cb.hom(replace[c], c).into_iter().find(|&u| big.morphism(u).nondegenerate_images() == key).unwrap()
        })
        .collect();
    let oi = overcategory(&big, y, budget)?;
    let oj = overcategory(&small, y, budget)?;
    let f = over_functor(&oi, &oj, |c| replace[c], |u| f_mor[u], |c, phi| eps[c].then(phi))?;
    let g = over_functor(&oj, &oi, |c| incl.object(c), |u| incl.morphism(u), |_, phi| Ok(phi.clone()))?;
    let gf = f.then(&g)?;
    let eta_components = (0..oi.object_count())
        .map(|o| oi.morphism_over(eps_mor[oi.projection.object(o)], o).expect("ε lies over the overcategory"))
        .collect();
    let eta = ZigZag::single(NatTrans::new(gf, Functor::identity(&oi.category), eta_components)?);
    let theta = ZigZag::single(NatTrans::identity(&Functor::identity(&oj.category)));
    Ok(HocoredInstance { label: "replacement".into(), f, g, eta, theta, x: oi.evaluation })
}

/// The functor between overcategories induced by a functor on the bases and
/// a rule for transporting the structure maps.
fn over_functor(
    src: &OverCat,
    tgt: &OverCat,
    on_objects: impl Fn(usize) -> usize,
    on_morphisms: impl Fn(usize) -> usize,
    transport: impl Fn(usize, &SimplicialMap) -> Result<SimplicialMap>,
) -> Result<Functor> {
    let (sc, tc) = (&src.category, &tgt.category);
    let mut objects = Vec::with_capacity(sc.object_count());
    for o in 0..sc.object_count() {
        let c = src.projection.object(o);
        let phi = transport(c, &src.maps[o])?;
        match tgt.find(on_objects(c), &phi) {
            Some(t) => objects.push(t),
            None => return invalid(format!("no image for `{}`", sc.object_name(o))),
        }
    }
    let mut morphisms = Vec::with_capacity(sc.morphism_count());
    for m in 0..sc.morphism_count() {
        let u = src.projection.morphism(m);
        match tgt.morphism_over(on_morphisms(u), objects[sc.target(m)]) {
            Some(t) => morphisms.push(t),
            None => return invalid(format!("no image for `{}`", sc.morphism(m).name)),
        }
    }
    Functor::new(sc.clone(), tc.clone(), objects, morphisms)
}

/// Negative control: `a -> b` with `X(a) = S⁰`, `X(b) = pt`, `J` a point
/// sent to `a`;
/// the component of `η` at `b` is `S⁰ -> pt`.
pub fn hocored_negative(truncation: usize) -> HocoredInstance {
    let i = Arc::new(FinCat::arrow());
    let j = Arc::new(FinCat::terminal());
    let (s, pt) = (s0(truncation), Arc::new(point(truncation)));
    let u = i.find_morphism("a<b").unwrap();
    let x = Diagram::from_generators(i.clone(), vec![s.clone(), pt.clone()], vec![(u, to_point(&s, &pt))]).unwrap();
    let f = Functor::constant(&i, &j, 0);
    let g = Functor::point(&i, 0);
    let gf = f.then(&g).unwrap();
    let eta = ZigZag::single(NatTrans::new(gf, Functor::identity(&i), vec![i.identity(0), u]).unwrap());
    let theta = ZigZag::single(NatTrans::identity(&Functor::identity(&j)));
    HocoredInstance { label: "negative".into(), f, g, eta, theta, x }
}

/// The constant simplicial object at `X`.
pub fn collapse_constant(x: Arc<SimplicialSet>) -> BisimplicialSet {
    BisimplicialSet::constant(x)
}

/// The simplicial replacement of a diagram over the terminal shape.
pub fn collapse_terminal(x: Arc<SimplicialSet>, budget: Budget) -> Result<BisimplicialSet> {
    let d = Diagram::constant(Arc::new(FinCat::terminal()), x);
    Ok(srep(&d, budget)?.0)
}

/// `Δ[1] × Y` levelwise: its faces change the number of components.
pub fn collapse_negative(y: &Arc<SimplicialSet>) -> Result<BisimplicialSet> {
    BisimplicialSet::levelwise_product(&standard_simplex(1, y.truncation())?, y)
}

/// `C = {Δ[0], Δ[1]}` with all maps, as a diagram of simplicial sets.
pub fn simplex_category(truncation: usize, budget: Budget) -> Result<Diagram> {
    let objects = vec![("D0".to_string(), Arc::new(standard_simplex(0, truncation)?)), ("D1".to_string(), Arc::new(standard_simplex(1, truncation)?))];
    Ok(full_subcategory("C", &objects, budget.visits)?.1)
}

/// `C = {Δ[0]}`.
pub fn vertex_category(truncation: usize, budget: Budget) -> Result<Diagram> {
    let objects = vec![("D0".to_string(), Arc::new(standard_simplex(0, truncation)?))];
    Ok(full_subcategory("C", &objects, budget.visits)?.1)
}

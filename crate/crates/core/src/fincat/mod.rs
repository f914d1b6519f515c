//! Finite categories given by explicit composition tables, with functors,
//! natural transformations, undercategories, opposites and nerves.

mod nerve;
pub mod text;

pub use nerve::{chain_name, nerve, nerve_map, Chain, Chains};

use std::collections::HashMap;
use std::sync::Arc;

use crate::budget::Meter;
use crate::error::{invalid, Error, Result};
use crate::ops::Mono;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct FinCat {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.compose == other.compose
    }
}

impl Eq for FinCat {}

impl FinCat {
    /// Validated constructor. `compose` maps `(g, f)` to `g ∘ f` and must be
    /// total on composable pairs, identities included.
    pub fn new(
        name: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<FinCat> {
        let c = FinCat::new_unchecked(name.into(), objects, morphisms, identities, compose);
        c.check()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(
        name: String,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> FinCat {
        let mut outgoing = vec![Vec::new(); objects.len()];
        let mut incoming = vec![Vec::new(); objects.len()];
        for (m, mor) in morphisms.iter().enumerate() {
            if mor.source < objects.len() && mor.target < objects.len() {
                outgoing[mor.source].push(m);
                incoming[mor.target].push(m);
            }
        }
        FinCat { name, objects, morphisms, identities, compose, outgoing, incoming }
    }

    /// Builds a category from composition rows `(g, f, g∘f)` among non-identity
    /// morphisms; rows involving identities are filled in.
    pub fn from_rows(
        name: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        rows: &[(usize, usize, usize)],
    ) -> Result<FinCat> {
        let mut compose = HashMap::new();
        for &(g, f, h) in rows {
            if compose.insert((g, f), h).is_some() {
                return invalid("duplicate composition row");
            }
        }
        for (m, mor) in morphisms.iter().enumerate() {
            if mor.source >= objects.len() || mor.target >= objects.len() {
                return invalid(format!("morphism `{}` has an unknown endpoint", mor.name));
            }
            if let (Some(&is), Some(&it)) = (identities.get(mor.source), identities.get(mor.target)) {
                compose.entry((m, is)).or_insert(m);
                compose.entry((it, m)).or_insert(m);
            }
        }
        FinCat::new(name, objects, morphisms, identities, compose)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FinCat {
        self.name = name.into();
        self
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, m: usize) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn source(&self, m: usize) -> usize {
        self.morphisms[m].source
    }

    pub fn target(&self, m: usize) -> usize {
        self.morphisms[m].target
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].source] == m
    }

    /// `g ∘ f`; panics unless `target(f) = source(g)`.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.compose[&(g, f)]
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    pub fn outgoing(&self, o: usize) -> &[usize] {
        &self.outgoing[o]
    }

    pub fn incoming(&self, o: usize) -> &[usize] {
        &self.incoming[o]
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        self.outgoing[a].iter().copied().filter(|&m| self.morphisms[m].target == b).collect()
    }

    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_morphism(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// Exhaustive check of identities, totality and associativity.
    pub fn check(&self) -> Result<()> {
        let no = self.objects.len();
        if self.identities.len() != no {
            return invalid("identity map must cover every object");
        }
        let mut seen = std::collections::HashSet::new();
        for o in &self.objects {
            if !seen.insert(o) {
                return invalid(format!("duplicate object id `{o}`"));
            }
        }
        seen.clear();
        for m in &self.morphisms {
            if !seen.insert(&m.name) {
                return invalid(format!("duplicate morphism id `{}`", m.name));
            }
            if m.source >= no || m.target >= no {
                return invalid(format!("morphism `{}` has an unknown endpoint", m.name));
            }
        }
        for (o, &i) in self.identities.iter().enumerate() {
            if i >= self.morphisms.len() || self.morphisms[i].source != o || self.morphisms[i].target != o {
                return invalid(format!("identity of `{}` is not an endomorphism of it", self.objects[o]));
            }
        }
        for (&(g, f), &h) in &self.compose {
            if g >= self.morphisms.len() || f >= self.morphisms.len() || h >= self.morphisms.len() {
                return invalid("composition row out of range");
            }
            if self.target(f) != self.source(g) {
                return invalid(format!("composition row for non-composable pair {} . {}", self.morphisms[g].name, self.morphisms[f].name));
            }
            if self.source(h) != self.source(f) || self.target(h) != self.target(g) {
                return invalid(format!("composite {} . {} has the wrong endpoints", self.morphisms[g].name, self.morphisms[f].name));
            }
        }
        for f in 0..self.morphisms.len() {
            for &g in &self.outgoing[self.target(f)] {
                if !self.compose.contains_key(&(g, f)) {
                    return invalid(format!("composition table misses {} . {}", self.morphisms[g].name, self.morphisms[f].name));
                }
            }
            if self.compose[&(f, self.identity(self.source(f)))] != f || self.compose[&(self.identity(self.target(f)), f)] != f {
                return invalid(format!("identities are not units for `{}`", self.morphisms[f].name));
            }
        }
        for f in 0..self.morphisms.len() {
            for &g in &self.outgoing[self.target(f)] {
                let gf = self.compose[&(g, f)];
                for &h in &self.outgoing[self.target(g)] {
                    if self.compose[&(h, gf)] != self.compose[&(self.compose[&(h, g)], f)] {
                        return invalid("composition is not associative");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn terminal() -> FinCat {
        FinCat::from_rows("pt", vec!["*".into()], vec![Morphism { name: "id_*".into(), source: 0, target: 0 }], vec![0], &[]).unwrap()
    }

    pub fn discrete(name: &str, objects: &[&str]) -> FinCat {
        let morphisms = objects.iter().enumerate().map(|(o, n)| Morphism { name: format!("id_{n}"), source: o, target: o }).collect();
        FinCat::from_rows(name, objects.iter().map(|s| s.to_string()).collect(), morphisms, (0..objects.len()).collect(), &[]).unwrap()
    }

    /// The poset on `objects` generated by `less` pairs (reflexive-transitive closure).
    pub fn poset(name: &str, objects: &[&str], less: &[(usize, usize)]) -> Result<FinCat> {
        let n = objects.len();
        let mut le = vec![vec![false; n]; n];
        for (a, row) in le.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in less {
            if a >= n || b >= n {
                return Err(Error::ParameterRange("poset relation out of range".into()));
            }
            le[a][b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if le[a][k] && le[k][b] {
                        le[a][b] = true;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && le[a][b] && le[b][a] {
                    return invalid("poset relation has a cycle");
                }
            }
        }
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if le[a][b] {
                    let name = if a == b { format!("id_{}", objects[a]) } else { format!("{}<{}", objects[a], objects[b]) };
                    index.insert((a, b), morphisms.len());
                    morphisms.push(Morphism { name, source: a, target: b });
                }
            }
        }
        let identities = (0..n).map(|a| index[&(a, a)]).collect();
        let mut compose = HashMap::new();
        for (&(a, b), &f) in &index {
            for c in 0..n {
                if let Some(&g) = index.get(&(b, c)) {
                    compose.insert((g, f), index[&(a, c)]);
                }
            }
        }
        FinCat::new(name, objects.iter().map(|s| s.to_string()).collect(), morphisms, identities, compose)
    }

    /// The arrow category `[1] = {a -> b}`.
    pub fn arrow() -> FinCat {
        FinCat::poset("arrow", &["a", "b"], &[(0, 1)]).unwrap()
    }

    /// The span `b <- a -> c`, shape of pushouts.
    pub fn span() -> FinCat {
        FinCat::poset("span", &["a", "b", "c"], &[(0, 1), (0, 2)]).unwrap()
    }

    /// One object with morphisms the cyclic group of order `n`.
    pub fn cyclic_group(n: usize) -> FinCat {
        let morphisms = (0..n).map(|k| Morphism { name: format!("g{k}"), source: 0, target: 0 }).collect();
        let mut compose = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                compose.insert((a, b), (a + b) % n);
            }
        }
        FinCat::new(format!("Z{n}"), vec!["*".into()], morphisms, vec![0], compose).unwrap()
    }

    /// Same objects, arrows reversed, composition reversed. The name toggles
    /// an `op(...)` wrapper so that taking the opposite twice gives back the
    /// original category.
    pub fn opposite(&self) -> FinCat {
        let name = match self.name.strip_prefix("op(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("op({})", self.name),
        };
        let morphisms = self.morphisms.iter().map(|m| Morphism { name: m.name.clone(), source: m.target, target: m.source }).collect();
        let compose = self.compose.iter().map(|(&(g, f), &h)| ((f, g), h)).collect();
        FinCat::new_unchecked(name, self.objects.clone(), morphisms, self.identities.clone(), compose)
    }

    /// The undercategory `(i ↓ I)`: objects are arrows `φ: i -> j`, morphisms
    /// `ψ: (j, φ) -> (j', ψφ)`. Object `k` is the `k`-th outgoing arrow of `i`.
    pub fn undercategory(self: &Arc<Self>, i: usize) -> Result<(Arc<FinCat>, Functor)> {
        if i >= self.objects.len() {
            return Err(Error::UnknownId(format!("object #{i}")));
        }
        let objs: Vec<usize> = self.outgoing[i].clone();
        let pos: HashMap<usize, usize> = objs.iter().enumerate().map(|(k, &phi)| (phi, k)).collect();
        let mut morphisms = Vec::new();
        let mut under_of = Vec::new();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        for (k, &phi) in objs.iter().enumerate() {
            for &psi in &self.outgoing[self.target(phi)] {
                let t = pos[&self.compose(psi, phi)];
                index.insert((psi, k), morphisms.len());
                morphisms.push(Morphism { name: format!("{}/{}", self.morphisms[psi].name, self.morphisms[phi].name), source: k, target: t });
                under_of.push(psi);
            }
        }
        let identities = objs.iter().enumerate().map(|(k, &phi)| index[&(self.identity(self.target(phi)), k)]).collect();
        let mut compose = HashMap::new();
        for (m1, mor1) in morphisms.iter().enumerate() {
            for (&(psi2, k2), &m2) in index.iter() {
                if k2 == mor1.target {
                    compose.insert((m2, m1), index[&(self.compose(psi2, under_of[m1]), mor1.source)]);
                }
            }
        }
        let names = objs.iter().map(|&phi| self.morphisms[phi].name.clone()).collect();
        let under = Arc::new(FinCat::new_unchecked(format!("({}/{})", self.objects[i], self.name), names, morphisms, identities, compose));
        let proj = Functor::new_unchecked(under.clone(), self.clone(), objs.iter().map(|&phi| self.target(phi)).collect(), under_of);
        Ok((under, proj))
    }

    /// Searches for an isomorphism of categories; small instances only.
    pub fn find_isomorphism(self: &Arc<Self>, other: &Arc<FinCat>, budget: u64) -> Result<Option<Functor>> {
        if self.objects.len() > 12 {
            return Err(Error::ParameterRange("isomorphism search is limited to 12 objects".into()));
        }
        if self.objects.len() != other.objects.len() || self.morphisms.len() != other.morphisms.len() {
            return Ok(None);
        }
        let mut meter = Meter::new(budget, "searching for a category isomorphism");
        let n = self.objects.len();
        let mut obj = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut found = None;
        iso_objects(self, other, 0, &mut obj, &mut used, &mut meter, &mut found)?;
        Ok(found)
    }
}

fn iso_objects(a: &Arc<FinCat>, b: &Arc<FinCat>, k: usize, obj: &mut Vec<usize>, used: &mut Vec<bool>, meter: &mut Meter, found: &mut Option<Functor>) -> Result<()> {
    let n = obj.len();
    if k == n {
        let mut mor = vec![usize::MAX; a.morphisms.len()];
        let mut mused = vec![false; b.morphisms.len()];
        for o in 0..n {
            mor[a.identity(o)] = b.identity(obj[o]);
            mused[b.identity(obj[o])] = true;
        }
        let order: Vec<usize> = (0..a.morphisms.len()).filter(|&m| !a.is_identity(m)).collect();
        return iso_morphisms(a, b, &order, 0, obj, &mut mor, &mut mused, meter, found);
    }
    for t in 0..n {
        if used[t] {
            continue;
        }
        let compatible = (0..k).all(|p| a.hom(p, k).len() == b.hom(obj[p], t).len() && a.hom(k, p).len() == b.hom(t, obj[p]).len())
            && a.hom(k, k).len() == b.hom(t, t).len();
        if !compatible {
            continue;
        }
        meter.tick()?;
        obj[k] = t;
        used[t] = true;
        iso_objects(a, b, k + 1, obj, used, meter, found)?;
        used[t] = false;
        if found.is_some() {
            return Ok(());
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn iso_morphisms(
    a: &Arc<FinCat>,
    b: &Arc<FinCat>,
    order: &[usize],
    k: usize,
    obj: &[usize],
    mor: &mut Vec<usize>,
    mused: &mut Vec<bool>,
    meter: &mut Meter,
    found: &mut Option<Functor>,
) -> Result<()> {
    if k == order.len() {
        let f = Functor::new_unchecked(a.clone(), b.clone(), obj.to_vec(), mor.clone());
        if f.check().is_ok() {
            *found = Some(f);
        }
        return Ok(());
    }
    let m = order[k];
    for t in b.hom(obj[a.source(m)], obj[a.target(m)]) {
        if mused[t] {
            continue;
        }
        meter.tick()?;
        mor[m] = t;
        // composites among assigned arrows must match
        let ok = order[..=k].iter().all(|&f| {
            a.outgoing[a.target(f)].iter().all(|&g| {
                let h = a.compose(g, f);
                if mor[g] == usize::MAX || mor[h] == usize::MAX {
                    return true;
                }
                b.compose(mor[g], mor[f]) == mor[h]
            })
        });
        if ok {
            mused[t] = true;
            iso_morphisms(a, b, order, k + 1, obj, mor, mused, meter, found)?;
            mused[t] = false;
            if found.is_some() {
                return Ok(());
            }
        }
        mor[m] = usize::MAX;
    }
    Ok(())
}

/// A functor between finite categories.
#[derive(Clone, Debug)]
pub struct Functor {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    objects: Vec<usize>,
    morphisms: Vec<usize>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects && self.morphisms == other.morphisms && self.source == other.source && self.target == other.target
    }
}

impl Functor {
    pub fn new(source: Arc<FinCat>, target: Arc<FinCat>, objects: Vec<usize>, morphisms: Vec<usize>) -> Result<Functor> {
        let f = Functor::new_unchecked(source, target, objects, morphisms);
        f.check()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Arc<FinCat>, target: Arc<FinCat>, objects: Vec<usize>, morphisms: Vec<usize>) -> Functor {
        Functor { source, target, objects, morphisms }
    }

    pub fn identity(c: &Arc<FinCat>) -> Functor {
        Functor::new_unchecked(c.clone(), c.clone(), (0..c.object_count()).collect(), (0..c.morphism_count()).collect())
    }

    /// The functor from the terminal category picking object `o`.
    pub fn point(c: &Arc<FinCat>, o: usize) -> Functor {
        Functor::new_unchecked(Arc::new(FinCat::terminal()), c.clone(), vec![o], vec![c.identity(o)])
    }

    /// The constant functor at object `o`.
    pub fn constant(source: &Arc<FinCat>, target: &Arc<FinCat>, o: usize) -> Functor {
        Functor::new_unchecked(source.clone(), target.clone(), vec![o; source.object_count()], vec![target.identity(o); source.morphism_count()])
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn object(&self, o: usize) -> usize {
        self.objects[o]
    }

    pub fn morphism(&self, m: usize) -> usize {
        self.morphisms[m]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if *self.target != *other.source {
            return Err(Error::ShapeMismatch("composing functors with mismatched categories".into()));
        }
        Ok(Functor::new_unchecked(
            self.source.clone(),
            other.target.clone(),
            self.objects.iter().map(|&o| other.objects[o]).collect(),
            self.morphisms.iter().map(|&m| other.morphisms[m]).collect(),
        ))
    }

    /// Exhaustive check of the functor laws.
    pub fn check(&self) -> Result<()> {
        let (c, d) = (&self.source, &self.target);
        if self.objects.len() != c.object_count() || self.morphisms.len() != c.morphism_count() {
            return invalid("functor tables have the wrong size");
        }
        if self.objects.iter().any(|&o| o >= d.object_count()) || self.morphisms.iter().any(|&m| m >= d.morphism_count()) {
            return invalid("functor points outside its target");
        }
        for m in 0..c.morphism_count() {
            let fm = self.morphisms[m];
            if d.source(fm) != self.objects[c.source(m)] || d.target(fm) != self.objects[c.target(m)] {
                return invalid(format!("functor does not preserve the endpoints of `{}`", c.morphism(m).name));
            }
        }
        for o in 0..c.object_count() {
            if self.morphisms[c.identity(o)] != d.identity(self.objects[o]) {
                return invalid("functor does not preserve identities");
            }
        }
        for f in 0..c.morphism_count() {
            for &g in c.outgoing(c.target(f)) {
                if self.morphisms[c.compose(g, f)] != d.compose(self.morphisms[g], self.morphisms[f]) {
                    return invalid("functor does not preserve composition");
                }
            }
        }
        Ok(())
    }

    /// The induced functor `(i ↓ I) -> (F i ↓ J)`, given both undercategories
    /// as produced by [`FinCat::undercategory`].
    pub fn on_undercategories(&self, i: usize, under_src: &Arc<FinCat>, under_tgt: &Arc<FinCat>) -> Functor {
        let (c, d) = (&self.source, &self.target);
        let fi = self.objects[i];
        let tpos: HashMap<usize, usize> = d.outgoing(fi).iter().enumerate().map(|(k, &phi)| (phi, k)).collect();
        let objects: Vec<usize> = c.outgoing(i).iter().map(|&phi| tpos[&self.morphisms[phi]]).collect();
        let mut tindex: HashMap<(usize, usize), usize> = HashMap::new();
        {
            let mut m = 0;
            for k in 0..d.outgoing(fi).len() {
                let phi = d.outgoing(fi)[k];
                for &psi in d.outgoing(d.target(phi)) {
                    tindex.insert((psi, k), m);
                    m += 1;
                }
            }
        }
        let mut morphisms = Vec::with_capacity(under_src.morphism_count());
        for k in 0..c.outgoing(i).len() {
            let phi = c.outgoing(i)[k];
            for &psi in c.outgoing(c.target(phi)) {
                morphisms.push(tindex[&(self.morphisms[psi], objects[k])]);
            }
        }
        Functor::new_unchecked(under_src.clone(), under_tgt.clone(), objects, morphisms)
    }
}

/// A natural transformation between parallel functors.
#[derive(Clone, Debug)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    components: Vec<usize>,
}

impl NatTrans {
    pub fn new(source: Functor, target: Functor, components: Vec<usize>) -> Result<NatTrans> {
        let t = NatTrans { source, target, components };
        t.check()?;
        Ok(t)
    }

    pub fn identity(f: &Functor) -> NatTrans {
        let comps = (0..f.source.object_count()).map(|o| f.target.identity(f.objects[o])).collect();
        NatTrans { source: f.clone(), target: f.clone(), components: comps }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, o: usize) -> usize {
        self.components[o]
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn check(&self) -> Result<()> {
        let (f, g) = (&self.source, &self.target);
        if *f.source != *g.source || *f.target != *g.target {
            return Err(Error::ShapeMismatch("natural transformation between non-parallel functors".into()));
        }
        let (c, d) = (&f.source, &f.target);
        if self.components.len() != c.object_count() {
            return invalid("natural transformation needs one component per object");
        }
        for o in 0..c.object_count() {
            let m = self.components[o];
            if m >= d.morphism_count() || d.source(m) != f.objects[o] || d.target(m) != g.objects[o] {
                return invalid(format!("component at `{}` has the wrong endpoints", c.object_name(o)));
            }
        }
        for u in 0..c.morphism_count() {
            let (a, b) = (c.source(u), c.target(u));
            if d.compose(g.morphisms[u], self.components[a]) != d.compose(self.components[b], f.morphisms[u]) {
                return invalid(format!("naturality fails at `{}`", c.morphism(u).name));
            }
        }
        Ok(())
    }
}

/// `C × Δ_{≤N}` with its object and morphism decodings.
#[derive(Clone, Debug)]
pub struct DeltaProduct {
    pub category: Arc<FinCat>,
    pub objects: Vec<(usize, usize)>,
    pub morphisms: Vec<(usize, Mono)>,
    pub object_index: HashMap<(usize, usize), usize>,
    pub morphism_index: HashMap<(usize, Mono), usize>,
}

fn mono_label(m: &Mono) -> String {
    let v = m.values();
    if v.iter().all(|&x| x < 10) {
        v.iter().map(|x| x.to_string()).collect()
    } else {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-")
    }
}

/// Objects `(c, [n])` for `n ≤ N`; morphisms pairs of a `C`-arrow and a monotone map.
pub fn product_with_delta(c: &FinCat, truncation: usize) -> DeltaProduct {
    let mut objects = Vec::new();
    let mut object_index = HashMap::new();
    let mut names = Vec::new();
    for o in 0..c.object_count() {
        for n in 0..=truncation {
            object_index.insert((o, n), objects.len());
            objects.push((o, n));
            names.push(format!("{}[{}]", c.object_name(o), n));
        }
    }
    let mut morphisms = Vec::new();
    let mut morphism_index = HashMap::new();
    let mut mors = Vec::new();
    for u in 0..c.morphism_count() {
        for a in 0..=truncation {
            for b in 0..=truncation {
                for theta in Mono::all(a, b) {
                    morphism_index.insert((u, theta.clone()), morphisms.len());
                    mors.push(Morphism {
                        name: format!("{}*{}>{}", c.morphism(u).name, mono_label(&theta), b),
                        source: object_index[&(c.source(u), a)],
                        target: object_index[&(c.target(u), b)],
                    });
                    morphisms.push((u, theta));
                }
            }
        }
    }
    let identities = objects.iter().map(|&(o, n)| morphism_index[&(c.identity(o), Mono::identity(n))]).collect();
    let mut compose = HashMap::new();
    for (f, (u1, t1)) in morphisms.iter().enumerate() {
        for &u2 in c.outgoing(c.target(*u1)) {
            let b = t1.target();
            for cc in 0..=truncation {
                for t2 in Mono::all(b, cc) {
                    let g = morphism_index[&(u2, t2.clone())];
                    compose.insert((g, f), morphism_index[&(c.compose(u2, *u1), t2.compose(t1))]);
                }
            }
        }
    }
    let category = Arc::new(FinCat::new_unchecked(format!("{}xD{}", c.name(), truncation), names, mors, identities, compose));
    DeltaProduct { category, objects, morphisms, object_index, morphism_index }
}

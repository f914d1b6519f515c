use std::collections::HashMap;
use std::sync::Arc;

use super::{enumerate_maps, product, standard_simplex, vertex_index, RawTables, SimplicialMap, SimplicialSet};
use crate::budget::Budget;
use crate::error::{invalid, Result};
use crate::ops::Mono;

/// The mapping object `Y^K`, whose `p`-simplices are the maps `K × Δ[p] -> Y`.
pub struct Exponential {
    pub set: Arc<SimplicialSet>,
    pub base: Arc<SimplicialSet>,
    pub target: Arc<SimplicialSet>,
    /// `K × Δ[p]` for each `p`.
    pub domains: Vec<Arc<SimplicialSet>>,
    /// `maps[p][e]` is the map represented by simplex `e` of level `p`.
    pub maps: Vec<Vec<SimplicialMap>>,
    lookup: Vec<HashMap<Vec<Vec<usize>>, usize>>,
    /// Simplices of Δ[p] at each level, as monotone maps.
    monos: Vec<Vec<Vec<Mono>>>,
    simplex_index: Vec<Vec<HashMap<Vec<usize>, usize>>>,
}

impl Exponential {
    pub fn new(y: &Arc<SimplicialSet>, k: &Arc<SimplicialSet>, budget: Budget) -> Result<Exponential> {
        super::require_same_truncation(y, k)?;
        let top = y.truncation();
        let mut deltas = Vec::new();
        let mut domains = Vec::new();
        let mut maps = Vec::new();
        let mut lookup = Vec::new();
        let mut monos = Vec::new();
        let mut simplex_index = Vec::new();
        for p in 0..=top {
            let d = standard_simplex(p, top)?;
            let vi = vertex_index(&d);
            monos.push((0..=top).map(|q| (0..d.count(q)).map(|s| Mono::new(&d.vertices(q, s), p)).collect()).collect());
            simplex_index.push(vi);
            let dom = Arc::new(product(k, &d)?);
            budget.check_size("exponential domain", dom.counts().iter().map(|&c| c as u128).max().unwrap_or(0))?;
            let ms = enumerate_maps(&dom, y, budget.visits)?;
            budget.check_size("exponential level", ms.len() as u128)?;
            lookup.push(ms.iter().enumerate().map(|(e, m)| (m.nondegenerate_images(), e)).collect());
            maps.push(ms);
            domains.push(dom);
            deltas.push(d);
        }
        let mut raw = RawTables::new(top);
        for p in 0..=top {
            raw.counts[p] = maps[p].len();
        }
        let mut exp = Exponential {
            set: Arc::new(crate::sset::empty(top)),
            base: k.clone(),
            target: y.clone(),
            domains,
            maps,
            lookup,
            monos,
            simplex_index,
        };
        for p in 0..=top {
            if p >= 1 {
                let mut f = Vec::with_capacity(raw.counts[p] * (p + 1));
                let pre: Vec<Vec<Vec<usize>>> = (0..=p).map(|i| exp.precompose_table(p, &Mono::coface(p, i))).collect();
                for e in 0..raw.counts[p] {
                    for table in &pre {
                        f.push(exp.pull(p, e, p - 1, table)?);
                    }
                }
                raw.faces[p] = f;
            }
            if p < top {
                let mut d = Vec::with_capacity(raw.counts[p] * (p + 1));
                let pre: Vec<Vec<Vec<usize>>> = (0..=p).map(|j| exp.precompose_table(p, &Mono::codegeneracy(p, j))).collect();
                for e in 0..raw.counts[p] {
                    for table in &pre {
                        d.push(exp.pull(p, e, p + 1, table)?);
                    }
                }
                raw.degens[p] = d;
            }
        }
        let lossy = y.is_lossy() || k.is_lossy() || k.dim().unwrap_or(0) > 0;
        exp.set = Arc::new(SimplicialSet::from_raw(raw, lossy, |p, e| format!("m{p}_{e}")));
        Ok(exp)
    }

    /// For `θ: [p'] -> [p]`, the map `K × Δ[p'] -> K × Δ[p]` as level tables.
    fn precompose_table(&self, p: usize, theta: &Mono) -> Vec<Vec<usize>> {
        let pp = theta.source();
        let k = &self.base;
        (0..=k.truncation())
            .map(|q| {
                let wp = self.monos[pp][q].len();
                let w = self.monos[p][q].len();
                (0..k.count(q) * wp)
                    .map(|z| {
                        let (a, b) = (z / wp, z % wp);
                        let img = theta.compose(&self.monos[pp][q][b]);
                        a * w + self.simplex_index[p][q][&img.values()]
                    })
                    .collect()
            })
            .collect()
    }

    fn pull(&self, p: usize, e: usize, pp: usize, table: &[Vec<usize>]) -> Result<usize> {
        let g = &self.maps[p][e];
        let dom = &self.domains[pp];
        let key: Vec<Vec<usize>> = (0..=dom.truncation())
            .map(|q| dom.nondegenerate(q).iter().map(|&z| g.apply(q, table[q][z])).collect())
            .collect();
        match self.lookup[pp].get(&key) {
            Some(&i) => Ok(i),
            None => invalid("precomposed map missing from the exponential"),
        }
    }

    /// The level-`p` simplex representing a map `K × Δ[p] -> Y`.
    pub fn element_of(&self, p: usize, map: &SimplicialMap) -> Option<usize> {
        self.lookup[p].get(&map.nondegenerate_images()).copied()
    }

    /// Adjoint `A -> Y^K` of a map `f: A × K -> Y`.
    pub fn curry(&self, a: &Arc<SimplicialSet>, f: &SimplicialMap) -> Result<SimplicialMap> {
        let k = &self.base;
        let top = a.truncation();
        let mut levels = Vec::with_capacity(top + 1);
        for p in 0..=top {
            let dom = &self.domains[p];
            let mut lv = Vec::with_capacity(a.count(p));
            for x in 0..a.count(p) {
                let key: Vec<Vec<usize>> = (0..=top)
                    .map(|q| {
                        let wp = self.monos[p][q].len();
                        dom.nondegenerate(q)
                            .iter()
                            .map(|&z| {
                                let (kk, b) = (z / wp, z % wp);
                                let ax = a.apply(&self.monos[p][q][b], x);
                                f.apply(q, ax * k.count(q) + kk)
                            })
                            .collect()
                    })
                    .collect();
                match self.lookup[p].get(&key) {
                    Some(&e) => lv.push(e),
                    None => return invalid("curried map is not simplicial"),
                }
            }
            levels.push(lv);
        }
        SimplicialMap::new(a.clone(), self.set.clone(), levels)
    }

    /// Adjoint `A × K -> Y` of a map `g: A -> Y^K`; `axk` must be `product(A, K)`.
    pub fn uncurry(&self, g: &SimplicialMap, axk: &Arc<SimplicialSet>) -> Result<SimplicialMap> {
        let k = &self.base;
        let top = axk.truncation();
        let mut levels = Vec::with_capacity(top + 1);
        for q in 0..=top {
            let iota = self.simplex_index[q][q][&(0..=q).collect::<Vec<_>>()];
            let wq = self.monos[q][q].len();
            let lv = (0..axk.count(q))
                .map(|z| {
                    let (x, kk) = (z / k.count(q), z % k.count(q));
                    self.maps[q][g.apply(q, x)].apply(q, kk * wq + iota)
                })
                .collect();
            levels.push(lv);
        }
        SimplicialMap::new(axk.clone(), self.target.clone(), levels)
    }
}

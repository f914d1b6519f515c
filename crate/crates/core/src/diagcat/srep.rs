use std::sync::Arc;

use super::Diagram;
use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::{chain_name, Chains};
use crate::sset::{coproduct_labelled, BisimplicialSet, RawTables, SimplicialMap, SimplicialSet};

/// The simplicial replacement of `D`: column `p` is the coproduct over
/// chains `c_0 -> ... -> c_p` of `D(c_0)`. `d_0` pushes along the first
/// arrow; the other horizontal faces and degeneracies act on the chain.
pub fn srep(d: &Diagram, budget: Budget) -> Result<(BisimplicialSet, Chains)> {
    let shape = d.shape();
    let top = d.truncation();
    let chains = Chains::new(shape, top, budget)?;
    let mut columns = Vec::with_capacity(top + 1);
    let mut offsets = Vec::with_capacity(top + 1);
    for p in 0..=top {
        for q in 0..=top {
            budget.check_size("simplicial replacement", chains.levels[p].iter().map(|ch| d.object(ch.start).count(q) as u128).sum())?;
        }
        let parts: Vec<&SimplicialSet> = chains.levels[p].iter().map(|ch| d.object(ch.start).as_ref()).collect();
        let tags: Vec<String> = chains.levels[p].iter().map(|ch| chain_name(shape, ch)).collect();
        let cop = coproduct_labelled(&parts, &tags, top)?;
        columns.push(Arc::new(cop.set));
        offsets.push(cop.offsets);
    }
    let mut hfaces = vec![Vec::new()];
    for p in 1..=top {
        let mut fs = Vec::with_capacity(p + 1);
        for i in 0..=p {
            let mut levels = vec![Vec::new(); top + 1];
            for ch in &chains.levels[p] {
                let k2 = chains.lookup(&ch.face(shape, i));
                let push = (i == 0).then(|| d.morphism(ch.arrows[0]));
                for (q, level) in levels.iter_mut().enumerate() {
                    for a in 0..d.object(ch.start).count(q) {
                        let a2 = push.map_or(a, |m| m.apply(q, a));
                        level.push(offsets[p - 1][k2][q] + a2);
                    }
                }
            }
            fs.push(SimplicialMap::new_unchecked(columns[p].clone(), columns[p - 1].clone(), levels));
        }
        hfaces.push(fs);
    }
    let mut hdegens = Vec::with_capacity(top + 1);
    for p in 0..=top {
        let mut ds = Vec::new();
        if p < top {
            for j in 0..=p {
                let mut levels = vec![Vec::new(); top + 1];
                for ch in &chains.levels[p] {
                    let k2 = chains.lookup(&ch.degeneracy(shape, j));
                    for (q, level) in levels.iter_mut().enumerate() {
                        level.extend((0..d.object(ch.start).count(q)).map(|a| offsets[p + 1][k2][q] + a));
                    }
                }
                ds.push(SimplicialMap::new_unchecked(columns[p].clone(), columns[p + 1].clone(), levels));
            }
        }
        hdegens.push(ds);
    }
    Ok((BisimplicialSet::new_unchecked(columns, hfaces, hdegens), chains))
}

/// The diagonal of the simplicial replacement, built directly. A
/// `p`-simplex is a chain of length `p` together with a `p`-simplex of
/// `D` at the start of the chain.
#[derive(Clone, Debug)]
pub struct SrepModel {
    pub set: Arc<SimplicialSet>,
    pub chains: Chains,
    offsets: Vec<Vec<usize>>,
}

impl SrepModel {
    /// Index of `(chain k, a)` at level `p`.
    pub fn index(&self, p: usize, k: usize, a: usize) -> usize {
        self.offsets[p][k] + a
    }

    /// Inverse of [`SrepModel::index`].
    pub fn decode(&self, p: usize, x: usize) -> (usize, usize) {
        let k = self.offsets[p].partition_point(|&o| o <= x) - 1;
        (k, x - self.offsets[p][k])
    }
}

pub fn srep_diagonal(d: &Diagram, budget: Budget) -> Result<SrepModel> {
    let shape = d.shape();
    let top = d.truncation();
    let chains = Chains::new(shape, top, budget)?;
    let mut offsets = Vec::with_capacity(top + 1);
    let mut raw = RawTables::new(top);
    for p in 0..=top {
        let mut acc = 0usize;
        let mut off = Vec::with_capacity(chains.levels[p].len() + 1);
        for ch in &chains.levels[p] {
            off.push(acc);
            acc += d.object(ch.start).count(p);
        }
        off.push(acc);
        budget.check_size("simplicial replacement", acc as u128)?;
        raw.counts[p] = acc;
        offsets.push(off);
    }
    for p in 0..=top {
        if p >= 1 {
            let mut f = Vec::with_capacity(raw.counts[p] * (p + 1));
            for ch in &chains.levels[p] {
                let x = d.object(ch.start);
                let ks: Vec<usize> = (0..=p).map(|i| chains.lookup(&ch.face(shape, i))).collect();
                let push = d.morphism(ch.arrows[0]);
                for a in 0..x.count(p) {
                    for i in 0..=p {
                        let b = x.face(p, i, a);
                        let b = if i == 0 { push.apply(p - 1, b) } else { b };
                        f.push(offsets[p - 1][ks[i]] + b);
                    }
                }
            }
            raw.faces[p] = f;
        }
        if p < top {
            let mut g = Vec::with_capacity(raw.counts[p] * (p + 1));
            for ch in &chains.levels[p] {
                let x = d.object(ch.start);
                let ks: Vec<usize> = (0..=p).map(|j| chains.lookup(&ch.degeneracy(shape, j))).collect();
                for a in 0..x.count(p) {
                    for j in 0..=p {
                        g.push(offsets[p + 1][ks[j]] + x.degen(p, j, a));
                    }
                }
            }
            raw.degens[p] = g;
        }
    }
    let nerve_lossy = chains.levels[top]
        .iter()
        .any(|ch| !ch.is_degenerate(shape) && shape.outgoing(ch.end(shape)).iter().any(|&f| !shape.is_identity(f)));
    let lossy = d.is_lossy() || nerve_lossy;
    let set = SimplicialSet::from_raw(raw, lossy, |p, x| {
        let k = offsets[p].partition_point(|&o| o <= x) - 1;
        let ch = &chains.levels[p][k];
        format!("{}|{}", chain_name(shape, ch), d.object(ch.start).label(p, x - offsets[p][k]))
    });
    Ok(SrepModel { set: Arc::new(set), chains, offsets })
}

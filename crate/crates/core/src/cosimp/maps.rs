use std::sync::Arc;

use super::CosimplicialSS;
use crate::budget::Meter;
use crate::error::{invalid, Result};
use crate::sset::{enumerate_maps, SimplicialMap};

/// A levelwise family of simplicial maps commuting with all structure maps.
#[derive(Clone, Debug)]
pub struct CosimplicialMap {
    source: Arc<CosimplicialSS>,
    target: Arc<CosimplicialSS>,
    components: Vec<SimplicialMap>,
}

impl CosimplicialMap {
    pub fn new(source: Arc<CosimplicialSS>, target: Arc<CosimplicialSS>, components: Vec<SimplicialMap>) -> Result<Self> {
        let f = CosimplicialMap { source, target, components };
        f.check()?;
        Ok(f)
    }

    pub fn identity(a: &Arc<CosimplicialSS>) -> Self {
        let components = a.components().iter().map(|c| SimplicialMap::identity(c.clone())).collect();
        CosimplicialMap { source: a.clone(), target: a.clone(), components }
    }

    pub fn source(&self) -> &Arc<CosimplicialSS> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CosimplicialSS> {
        &self.target
    }

    pub fn component(&self, n: usize) -> &SimplicialMap {
        &self.components[n]
    }

    pub fn check(&self) -> Result<()> {
        let (a, b) = (&self.source, &self.target);
        if a.truncation() != b.truncation() || self.components.len() != a.truncation() + 1 {
            return invalid("cosimplicial map needs one component per level");
        }
        for n in 0..=a.truncation() {
            if !natural_at(a, b, &self.components, n) {
                return invalid(format!("cosimplicial map is not natural at level {n}"));
            }
        }
        Ok(())
    }
}

/// Naturality for the structure maps between levels `n-1` and `n`.
fn natural_at(a: &CosimplicialSS, b: &CosimplicialSS, f: &[SimplicialMap], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let same = |x: &SimplicialMap, y: &SimplicialMap| x.levels() == y.levels();
    for i in 0..=n {
        let lhs = a.coface(n, i).then(&f[n]).unwrap();
        let rhs = f[n - 1].then(b.coface(n, i)).unwrap();
        if !same(&lhs, &rhs) {
            return false;
        }
    }
    for j in 0..n {
        let lhs = a.codegeneracy(n - 1, j).then(&f[n - 1]).unwrap();
        let rhs = f[n].then(b.codegeneracy(n - 1, j)).unwrap();
        if !same(&lhs, &rhs) {
            return false;
        }
    }
    true
}

/// All cosimplicial maps `A -> B`; small instances only.
pub fn enumerate_cosimplicial_maps(a: &Arc<CosimplicialSS>, b: &Arc<CosimplicialSS>, budget: u64) -> Result<Vec<CosimplicialMap>> {
    let top = a.truncation();
    let candidates: Vec<Vec<SimplicialMap>> = (0..=top).map(|n| enumerate_maps(a.component(n), b.component(n), budget)).collect::<Result<_>>()?;
    let mut meter = Meter::new(budget, "enumerating cosimplicial maps");
    let mut out = Vec::new();
    let mut chosen: Vec<SimplicialMap> = Vec::new();
    search(a, b, &candidates, &mut chosen, &mut out, &mut meter)?;
    Ok(out)
}

fn search(
    a: &Arc<CosimplicialSS>,
    b: &Arc<CosimplicialSS>,
    candidates: &[Vec<SimplicialMap>],
    chosen: &mut Vec<SimplicialMap>,
    out: &mut Vec<CosimplicialMap>,
    meter: &mut Meter,
) -> Result<()> {
    let n = chosen.len();
    if n == candidates.len() {
        out.push(CosimplicialMap { source: a.clone(), target: b.clone(), components: chosen.clone() });
        return Ok(());
    }
    for f in &candidates[n] {
        meter.tick()?;
        chosen.push(f.clone());
        if natural_at(a, b, chosen, n) {
            search(a, b, candidates, chosen, out, meter)?;
        }
        chosen.pop();
    }
    Ok(())
}

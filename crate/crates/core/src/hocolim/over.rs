use std::sync::Arc;

use super::{hocolim, pushforward, HocolimResult, Method};
use crate::budget::Budget;
use crate::diagcat::{overcategory, resolution_overcategory, slice_functor, srep_diagonal, CosimplicialDiagram, Diagram, OverCat, ResolutionOverCat, SrepModel};
use crate::error::Result;
use crate::fincat::Functor;
use crate::ops::Mono;
use crate::sset::{standard_simplex, BisimplicialSet, SimplicialMap, SimplicialSet};

/// A hocolim over an overcategory `(F ↓ X)` together with the overcategory.
#[derive(Clone, Debug)]
pub struct OverHocolim {
    pub result: HocolimResult,
    pub over: OverCat,
}

fn over_hocolim(over: OverCat, kind: &str, method: Method, budget: Budget) -> Result<OverHocolim> {
    let mut result = hocolim(&over.evaluation, method, budget)?;
    let down = result.colim.induced(&over.target, &over.maps)?;
    result.comparison = Some(result.to_colim.then(&down)?);
    result.provenance.kind = kind.to_string();
    Ok(OverHocolim { result, over })
}

/// `hocolim (C ↓ X)` of the evaluation diagram, with its map to `X`.
pub fn naive_hocolim(gamma0: &Diagram, x: &Arc<SimplicialSet>, method: Method, budget: Budget) -> Result<OverHocolim> {
    over_hocolim(overcategory(gamma0, x, budget)?, "naive", method, budget)
}

/// `hocolim (C × Δ_{≤depth} ↓ X)` with its map to `X`, the naive hocolim,
/// and the map `i_*` between them.
#[derive(Clone, Debug)]
pub struct CanonicalHocolim {
    pub result: HocolimResult,
    pub resolution: ResolutionOverCat,
    pub naive: HocolimResult,
    pub inclusion: SimplicialMap,
}

pub fn canonical_hocolim(gamma: &CosimplicialDiagram, x: &Arc<SimplicialSet>, depth: usize, method: Method, budget: Budget) -> Result<CanonicalHocolim> {
    let resolution = resolution_overcategory(gamma, x, depth, budget)?;
    let full = over_hocolim(resolution.over.clone(), "canonical", method, budget)?;
    let naive = over_hocolim(resolution.base.clone(), "naive", method, budget)?;
    // The naive evaluation is the pullback of the full one along i.
    let inclusion = pushforward(&resolution.inclusion, &naive.result, &full.result)?;
    let mut result = full.result;
    if depth < gamma.truncation() {
        result.provenance.notes.push(format!("resolution direction cut at depth {depth} below the truncation {}", gamma.truncation()));
    }
    Ok(CanonicalHocolim { result, resolution, naive: naive.result, inclusion })
}

/// The diagonal of `n ↦ hocolim (C^n ↓ X)` for a canonical resolution of
/// `γ`, where the `n`-th column takes values `γ c` over the slice
/// `(C^n ↓ X)`.
#[derive(Clone, Debug)]
pub struct ReQSing {
    pub bisimplicial: BisimplicialSet,
    pub set: Arc<SimplicialSet>,
    pub slices: Vec<OverCat>,
    pub columns: Vec<SrepModel>,
    /// `diag -> X`, `(chain, a) ↦ φ_0(a, ι_n)`.
    pub to_target: SimplicialMap,
    /// Column 0 (the naive hocolim) into the diagonal.
    pub column_zero: SimplicialMap,
    /// Column 0 straight to `X`, through the colimit.
    pub naive_comparison: SimplicialMap,
}

pub fn re_q_sing(gamma0: &Diagram, x: &Arc<SimplicialSet>, budget: Budget) -> Result<ReQSing> {
    let top = gamma0.truncation();
    let gamma = CosimplicialDiagram::canonical(gamma0)?;
    let slices: Vec<OverCat> = (0..=top).map(|n| overcategory(&gamma.component_diagram(n), x, budget)).collect::<Result<_>>()?;
    let diagrams: Vec<Diagram> = slices.iter().map(|s| gamma0.pullback(&s.projection)).collect::<Result<_>>()?;
    let columns: Vec<SrepModel> = diagrams.iter().map(|d| srep_diagonal(d, budget)).collect::<Result<_>>()?;
    let horizontal = |theta: &Mono| -> Result<SimplicialMap> {
        let f: Functor = slice_functor(&gamma, &slices, theta)?;
        let (a, b) = (&columns[theta.target()], &columns[theta.source()]);
        let levels = (0..=top)
            .map(|q| {
                (0..a.set.count(q))
                    .map(|z| {
                        let (k, v) = a.decode(q, z);
                        b.index(q, b.chains.lookup(&a.chains.levels[q][k].map(&f)), v)
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(a.set.clone(), b.set.clone(), levels)
    };
    let mut hfaces = vec![Vec::new()];
    for n in 1..=top {
        hfaces.push((0..=n).map(|i| horizontal(&Mono::coface(n, i))).collect::<Result<Vec<_>>>()?);
    }
    let mut hdegens = Vec::new();
    for n in 0..=top {
        hdegens.push(if n < top { (0..=n).map(|j| horizontal(&Mono::codegeneracy(n, j))).collect::<Result<Vec<_>>>()? } else { Vec::new() });
    }
    let bisimplicial = BisimplicialSet::new(columns.iter().map(|c| c.set.clone()).collect(), hfaces, hdegens)?;
    let set = Arc::new(bisimplicial.diagonal());
    let mut levels = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let col = &columns[n];
        let (width, iota) = if n == 0 {
            (1, 0)
        } else {
            let simplex = standard_simplex(n, top)?;
            (simplex.count(n), simplex.nondegenerate(n)[0])
        };
        let level = (0..col.set.count(n))
            .map(|z| {
                let (k, a) = col.decode(n, z);
                let start = col.chains.levels[n][k].start;
                slices[n].maps[start].apply(n, a * width + iota)
            })
            .collect();
        levels.push(level);
    }
    let to_target = SimplicialMap::new(set.clone(), x.clone(), levels)?;
    let column_zero = bisimplicial.column_zero_inclusion(&set);
    let naive_levels = (0..=top)
        .map(|n| {
            (0..columns[0].set.count(n))
                .map(|z| {
                    let (k, a) = columns[0].decode(n, z);
                    slices[0].maps[columns[0].chains.levels[n][k].start].apply(n, a)
                })
                .collect()
        })
        .collect();
    let naive_comparison = SimplicialMap::new(columns[0].set.clone(), x.clone(), naive_levels)?;
    Ok(ReQSing { bisimplicial, set, slices, columns, to_target, column_zero, naive_comparison })
}

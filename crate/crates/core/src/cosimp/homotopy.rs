use std::sync::Arc;

use super::{co_yoneda, tensor_delta, tensor_delta_induced, CosimplicialSS, TensorDelta};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::sset::{map_on_vertices, point, product, standard_simplex, to_point, vertex_index, vertex_map, SimplicialMap, SimplicialSet};

/// `H: Δ[n] × Δ[1] -> Δ[n]` with `H(v, 0) = v` and `H(v, 1) = n`, together
/// with the last-vertex inclusion `j: Δ[0] -> Δ[n]`.
pub struct LastVertexHomotopy {
    pub simplex: Arc<SimplicialSet>,
    pub prism: Arc<SimplicialSet>,
    pub h: SimplicialMap,
    pub j: SimplicialMap,
    pub pi: SimplicialMap,
    /// `v ↦ (v, 0)` and `v ↦ (v, 1)`.
    pub ends: [SimplicialMap; 2],
}

pub fn last_vertex_homotopy(n: usize, truncation: usize) -> Result<LastVertexHomotopy> {
    if truncation < n + 1 {
        return Err(Error::ParameterRange(format!("the prism on Δ[{n}] needs truncation at least {}", n + 1)));
    }
    let simplex = Arc::new(standard_simplex(n, truncation)?);
    let interval = standard_simplex(1, truncation)?;
    let prism = Arc::new(product(&simplex, &interval)?);
    // prism vertex (v, e) has index 2v + e
    let h = map_on_vertices(&prism, &simplex, |x| if x % 2 == 0 { x / 2 } else { n })?;
    let pt = Arc::new(point(truncation));
    let j = vertex_map(&pt, &simplex, n);
    let pi = to_point(&simplex, &pt);
    let ends = [map_on_vertices(&simplex, &prism, |v| 2 * v)?, map_on_vertices(&simplex, &prism, |v| 2 * v + 1)?];
    Ok(LastVertexHomotopy { simplex, prism, h, j, pi, ends })
}

/// The level map `H: (A ⊗ Δ[1])^n -> A^n` induced by the last-vertex
/// homotopy, and the two maps `A^n -> (A ⊗ Δ[1])^n` induced by the
/// vertices of `Δ[1]`.
pub struct PrismLevelMap {
    pub presentation: TensorDelta,
    pub h: SimplicialMap,
    pub ends: [SimplicialMap; 2],
}

pub fn prism_level_map(a: &Arc<CosimplicialSS>, n: usize, budget: Budget) -> Result<PrismLevelMap> {
    let top = a.truncation();
    if n > top {
        return Err(Error::ParameterRange(format!("level {n} above the truncation {top}")));
    }
    let interval = standard_simplex(1, top)?;
    let simplex = Arc::new(standard_simplex(n, top)?);
    // Δ[1] × Δ[n]: vertex (e, v) has index e(n+1) + v
    let k = Arc::new(product(&interval, &simplex)?);
    let hk = map_on_vertices(&k, &simplex, |x| if x <= n { x } else { n })?;
    let td = tensor_delta(a, &k, budget)?;
    let td_n = tensor_delta(a, &simplex, budget)?;
    let h = tensor_delta_induced(None, &hk, &td, &td_n)?.then(&co_yoneda(&td_n, n)?)?;
    let index = vertex_index(&k);
    let mut ends = Vec::new();
    for e in 0..2 {
        let verts: Vec<usize> = (0..=n).map(|t| e * (n + 1) + t).collect();
        let kappa = index[n][&verts];
        let levels = (0..=top).map(|p| (0..a.component(n).count(p)).map(|v| td.class(n, kappa, p, v)).collect()).collect();
        ends.push(SimplicialMap::new(a.component(n).clone(), td.set.clone(), levels)?);
    }
    let ends: [SimplicialMap; 2] = ends.try_into().unwrap();
    Ok(PrismLevelMap { presentation: td, h, ends })
}

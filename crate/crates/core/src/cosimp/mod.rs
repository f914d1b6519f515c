//! Truncated cosimplicial objects in simplicial sets and the simplicial
//! structure on them: the coend `A ⊗_Δ K`, the tensor `A ⊗ K` and the
//! power `A^K`.

mod homotopy;
mod maps;
mod tensor;

pub use homotopy::{last_vertex_homotopy, prism_level_map, LastVertexHomotopy, PrismLevelMap};
pub use maps::{enumerate_cosimplicial_maps, CosimplicialMap};
pub use tensor::{co_yoneda, power, tensor, tensor_delta, tensor_delta_induced, TensorDelta};

use std::sync::{Arc, OnceLock};

use crate::error::{invalid, Error, Result};
use crate::homology::is_homology_iso;
use crate::ops::Mono;
use crate::sset::{product, product_map, standard_simplex, SimplicialMap, SimplicialSet};

/// Components `A^0 .. A^N`, each truncated at `N`.
#[derive(Clone, Debug)]
pub struct CosimplicialSS {
    truncation: usize,
    components: Vec<Arc<SimplicialSet>>,
    /// `cofaces[n][i]: A^{n-1} -> A^n`, `n ≥ 1`.
    cofaces: Vec<Vec<SimplicialMap>>,
    /// `codegens[n][j]: A^{n+1} -> A^n`, `n < N`.
    codegens: Vec<Vec<SimplicialMap>>,
    resolution: OnceLock<bool>,
}

impl CosimplicialSS {
    /// Validated constructor: shapes plus the full identity suite.
    pub fn new(components: Vec<Arc<SimplicialSet>>, cofaces: Vec<Vec<SimplicialMap>>, codegens: Vec<Vec<SimplicialMap>>) -> Result<Self> {
        let a = CosimplicialSS::new_unchecked(components, cofaces, codegens)?;
        a.check()?;
        Ok(a)
    }

    pub(crate) fn new_unchecked(
        components: Vec<Arc<SimplicialSet>>,
        cofaces: Vec<Vec<SimplicialMap>>,
        codegens: Vec<Vec<SimplicialMap>>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ParameterRange("a cosimplicial object needs component 0".into()));
        }
        let truncation = components.len() - 1;
        for c in &components {
            if c.truncation() != truncation {
                return Err(Error::TruncationMismatch(c.truncation(), truncation));
            }
        }
        if cofaces.len() != truncation + 1 || codegens.len() != truncation + 1 {
            return Err(Error::ShapeMismatch("one list of cofaces and codegeneracies per level".into()));
        }
        Ok(CosimplicialSS { truncation, components, cofaces, codegens, resolution: OnceLock::new() })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn component(&self, n: usize) -> &Arc<SimplicialSet> {
        &self.components[n]
    }

    pub fn components(&self) -> &[Arc<SimplicialSet>] {
        &self.components
    }

    pub fn coface(&self, n: usize, i: usize) -> &SimplicialMap {
        &self.cofaces[n][i]
    }

    pub fn codegeneracy(&self, n: usize, j: usize) -> &SimplicialMap {
        &self.codegens[n][j]
    }

    /// `A(θ): A^a -> A^b` for a monotone `θ: [a] -> [b]`.
    pub fn operator(&self, theta: &Mono) -> SimplicialMap {
        let (a, b) = (theta.source(), theta.target());
        if theta.is_identity() {
            return SimplicialMap::identity(self.components[a].clone());
        }
        if let Some(&i) = theta.missing().last() {
            // θ = δ^i ∘ θ'
            let vals: Vec<usize> = theta.values().into_iter().map(|v| if v > i { v - 1 } else { v }).collect();
            let inner = self.operator(&Mono::new(&vals, b - 1));
            return inner.then(&self.cofaces[b][i]).expect("matching components");
        }
        // surjective: θ = θ' ∘ s^t for the first repeated value
        let vals = theta.values();
        let t = (0..a).find(|&t| vals[t] == vals[t + 1]).expect("non-identity surjection repeats a value");
        let rest: Vec<usize> = (0..a).map(|u| if u <= t { vals[u] } else { vals[u + 1] }).collect();
        let inner = self.operator(&Mono::new(&rest, b));
        self.codegens[a - 1][t].then(&inner).expect("matching components")
    }

    /// Exhaustive check of the cosimplicial identities: every composite of
    /// two elementary operators agrees with the normal form of the composite.
    pub fn check(&self) -> Result<()> {
        let top = self.truncation;
        for n in 1..=top {
            if self.cofaces[n].len() != n + 1 {
                return invalid(format!("level {n} needs {} cofaces", n + 1));
            }
            for m in &self.cofaces[n] {
                self.check_ends(m, n - 1, n)?;
            }
        }
        for n in 0..top {
            if self.codegens[n].len() != n + 1 {
                return invalid(format!("level {n} needs {} codegeneracies", n + 1));
            }
            for m in &self.codegens[n] {
                self.check_ends(m, n + 1, n)?;
            }
        }
        if !self.cofaces[0].is_empty() || (top < self.codegens.len() && !self.codegens[top].is_empty()) {
            return invalid("structure maps out of range");
        }
        let mut elementary: Vec<(Mono, &SimplicialMap)> = Vec::new();
        for n in 1..=top {
            for i in 0..=n {
                elementary.push((Mono::coface(n, i), &self.cofaces[n][i]));
            }
        }
        for n in 0..top {
            for j in 0..=n {
                elementary.push((Mono::codegeneracy(n, j), &self.codegens[n][j]));
            }
        }
        for (alpha, fa) in &elementary {
            for (beta, fb) in &elementary {
                if alpha.target() != beta.source() {
                    continue;
                }
                let lhs = fa.then(fb)?;
                let rhs = self.operator(&beta.compose(alpha));
                if lhs.levels() != rhs.levels() {
                    return invalid(format!("cosimplicial identity fails for {alpha:?} then {beta:?}"));
                }
            }
        }
        Ok(())
    }

    fn check_ends(&self, m: &SimplicialMap, a: usize, b: usize) -> Result<()> {
        let ok = |x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>| Arc::ptr_eq(x, y) || x.same_structure(y);
        if !ok(m.source(), &self.components[a]) || !ok(m.target(), &self.components[b]) {
            return invalid(format!("structure map between levels {a} and {b} has the wrong ends"));
        }
        Ok(())
    }

    /// Whether every coface and codegeneracy is a homology isomorphism.
    pub fn is_resolution(&self) -> bool {
        *self.resolution.get_or_init(|| {
            self.cofaces.iter().chain(self.codegens.iter()).flatten().all(|m| is_homology_iso(m).iso)
        })
    }

    pub fn is_lossy(&self) -> bool {
        self.components.iter().any(|c| c.is_lossy())
    }

    /// Every component `X`, every structure map the identity.
    pub fn constant(x: Arc<SimplicialSet>) -> CosimplicialSS {
        let top = x.truncation();
        let id = SimplicialMap::identity(x.clone());
        let cofaces = (0..=top).map(|n| vec![id.clone(); if n == 0 { 0 } else { n + 1 }]).collect();
        let codegens = (0..=top).map(|n| vec![id.clone(); if n < top { n + 1 } else { 0 }]).collect();
        CosimplicialSS {
            truncation: top,
            components: vec![x; top + 1],
            cofaces,
            codegens,
            resolution: OnceLock::from(true),
        }
    }

    /// `[n] ↦ X × Δ[n]`, with component 0 equal to `X` itself.
    pub fn canonical_resolution(x: Arc<SimplicialSet>) -> Result<CosimplicialSS> {
        let top = x.truncation();
        let simplices: Vec<Arc<SimplicialSet>> = (0..=top).map(|n| standard_simplex(n, top).map(Arc::new)).collect::<Result<_>>()?;
        let mut components = vec![x.clone()];
        for s in simplices.iter().skip(1) {
            components.push(Arc::new(product(&x, s)?));
        }
        let id = SimplicialMap::identity(x.clone());
        let induced = |theta: &Mono| -> Result<SimplicialMap> {
            let (a, b) = (theta.source(), theta.target());
            let g = crate::sset::map_on_vertices(&simplices[a], &simplices[b], |v| theta.at(v))?;
            Ok(product_map(&id, &g, &components[a], &components[b]))
        };
        let mut cofaces = vec![Vec::new()];
        for n in 1..=top {
            cofaces.push((0..=n).map(|i| induced(&Mono::coface(n, i))).collect::<Result<_>>()?);
        }
        let mut codegens = Vec::new();
        for n in 0..=top {
            codegens.push(if n < top { (0..=n).map(|j| induced(&Mono::codegeneracy(n, j))).collect::<Result<_>>()? } else { Vec::new() });
        }
        CosimplicialSS::new_unchecked(components, cofaces, codegens)
    }
}

use std::sync::Arc;

use super::{CosimplicialDiagram, Diagram};
use crate::budget::Budget;
use crate::cosimp::{tensor_delta, TensorDelta};
use crate::error::{Error, Result};
use crate::sset::{coproduct_labelled, quotient_raw, SimplicialMap, SimplicialSet};

/// `∫^{c} Γ(c) ⊗_Δ K(c)` for a cosimplicial diagram `Γ` on `C` and a
/// contravariant diagram `K` (a diagram on `C^op`).
///
/// Built as the coproduct of the pieces `Γ(c) ⊗_Δ K(c)` modulo
/// `[Γ(u) a, κ]_{c'} ~ [a, K(u) κ]_c` for `u: c -> c'`.
#[derive(Clone, Debug)]
pub struct Coend {
    pub set: Arc<SimplicialSet>,
    pub pieces: Vec<TensorDelta>,
    offsets: Vec<Vec<usize>>,
    class_of: Vec<Vec<usize>>,
    reps: Vec<Vec<usize>>,
}

impl Coend {
    /// Class of simplex `t` (level `p`) of piece `c`.
    pub fn class(&self, c: usize, p: usize, t: usize) -> usize {
        self.class_of[p][self.offsets[c][p] + t]
    }

    /// A piece and simplex representing class `x` of level `p`.
    pub fn representative(&self, p: usize, x: usize) -> (usize, usize) {
        let g = self.reps[p][x];
        let c = self.offsets.partition_point(|o| o[p] <= g) - 1;
        (c, g - self.offsets[c][p])
    }

    /// The map from piece `c` into the coend.
    pub fn injection(&self, c: usize) -> SimplicialMap {
        let piece = &self.pieces[c].set;
        let levels = (0..=piece.truncation()).map(|p| (0..piece.count(p)).map(|t| self.class(c, p, t)).collect()).collect();
        SimplicialMap::new_unchecked(piece.clone(), self.set.clone(), levels)
    }
}

pub fn coend(gamma: &CosimplicialDiagram, k: &Diagram, budget: Budget) -> Result<Coend> {
    let shape = gamma.shape();
    let ks = k.shape();
    if ks.object_count() != shape.object_count()
        || ks.morphism_count() != shape.morphism_count()
        || (0..shape.morphism_count()).any(|u| ks.source(u) != shape.target(u) || ks.target(u) != shape.source(u))
    {
        return Err(Error::ShapeMismatch("the contravariant factor must live on the opposite shape".into()));
    }
    let top = gamma.truncation();
    if k.truncation() != top {
        return Err(Error::TruncationMismatch(k.truncation(), top));
    }
    let pieces: Vec<TensorDelta> =
        (0..shape.object_count()).map(|c| tensor_delta(gamma.object(c), k.object(c), budget)).collect::<Result<_>>()?;
    for p in 0..=top {
        budget.check_size("coend", pieces.iter().map(|t| t.set.count(p) as u128).sum())?;
    }
    let parts: Vec<&SimplicialSet> = pieces.iter().map(|t| t.set.as_ref()).collect();
    let tags: Vec<String> = shape.objects().to_vec();
    let cop = coproduct_labelled(&parts, &tags, top)?;
    let offsets = cop.offsets;
    let mut seeds = Vec::new();
    for u in 0..shape.morphism_count() {
        if shape.is_identity(u) {
            continue;
        }
        let (c, c2) = (shape.source(u), shape.target(u));
        let (gc, gu, ku) = (gamma.object(c), gamma.morphism(u), k.morphism(u));
        let kc2 = k.object(c2);
        for m in 0..=top {
            for &kappa in kc2.nondegenerate(m) {
                let pulled = ku.apply(m, kappa);
                for p in 0..=top {
                    for a in 0..gc.component(m).count(p) {
                        let lhs = offsets[c2][p] + pieces[c2].class(m, kappa, p, gu.component(m).apply(p, a));
                        let rhs = offsets[c][p] + pieces[c].class(m, pulled, p, a);
                        seeds.push((p, lhs, rhs));
                    }
                }
            }
        }
    }
    let data = quotient_raw(&cop.set.to_raw(), seeds);
    let lossy = cop.set.is_lossy();
    let reps = data.reps;
    let set = Arc::new(SimplicialSet::from_raw(data.raw, lossy, |p, x| cop.set.label(p, reps[p][x])));
    Ok(Coend { set, pieces, offsets, class_of: data.class_of, reps })
}

/// Realization of a presheaf of simplicial sets `F` (a diagram on `C^op`)
/// along `Γ`: `∫^{c,n} F(c)_n · Γ(c)^n`.
pub fn realize(gamma: &CosimplicialDiagram, f: &Diagram, budget: Budget) -> Result<Coend> {
    coend(gamma, f, budget)
}

use std::sync::Arc;

use super::{require_same_truncation, SimplicialSet};
use crate::error::{invalid, Result};
use crate::ops;

/// A simplicial map, stored as one function per level.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    levels: Vec<Vec<usize>>,
}

impl PartialEq for SimplicialMap {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
            && (Arc::ptr_eq(&self.source, &other.source) || self.source == other.source)
            && (Arc::ptr_eq(&self.target, &other.target) || self.target == other.target)
    }
}

impl SimplicialMap {
    /// Validated constructor.
    pub fn new(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, levels: Vec<Vec<usize>>) -> Result<Self> {
        let m = SimplicialMap::new_unchecked(source, target, levels);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, levels: Vec<Vec<usize>>) -> Self {
        SimplicialMap { source, target, levels }
    }

    /// Extends images of nondegenerate simplices (`images[n][ordinal]`)
    /// to a full map, then validates it.
    pub fn from_nondegenerate(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, images: &[Vec<usize>]) -> Result<Self> {
        let m = Self::extend_unchecked(source, target, images)?;
        m.check()?;
        Ok(m)
    }

    pub(crate) fn extend_unchecked(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, images: &[Vec<usize>]) -> Result<Self> {
        require_same_truncation(&source, &target)?;
        let top = source.truncation();
        let mut levels = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let mut lv = Vec::with_capacity(source.count(n));
            for x in 0..source.count(n) {
                let t = source.ez(n, x);
                let m = n - ops::word_len(t.word);
                let o = source.ordinal(m, t.base).unwrap();
                let img = *images.get(m).and_then(|v| v.get(o)).ok_or_else(|| {
                    crate::error::Error::Invalid(format!("missing image for nondegenerate simplex in dimension {m}"))
                })?;
                if img >= target.count(m) {
                    return invalid("image out of range");
                }
                lv.push(if t.word == 0 { img } else { target.apply_word(m, t.word, img) });
            }
            levels.push(lv);
        }
        Ok(SimplicialMap { source, target, levels })
    }

    pub fn identity(x: Arc<SimplicialSet>) -> Self {
        let levels = (0..=x.truncation()).map(|n| (0..x.count(n)).collect()).collect();
        SimplicialMap { source: x.clone(), target: x, levels }
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    /// Images of nondegenerate simplices, by dimension and ordinal.
    pub fn nondegenerate_images(&self) -> Vec<Vec<usize>> {
        (0..=self.source.truncation())
            .map(|n| self.source.nondegenerate(n).iter().map(|&x| self.levels[n][x]).collect())
            .collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if !(Arc::ptr_eq(&self.target, &other.source) || self.target == other.source) {
            return invalid("composing maps with mismatched ends");
        }
        let levels = self.levels.iter().enumerate().map(|(n, lv)| lv.iter().map(|&x| other.levels[n][x]).collect()).collect();
        Ok(SimplicialMap { source: self.source.clone(), target: other.target.clone(), levels })
    }

    /// Replaces the recorded target by an equal set (checked structurally).
    pub fn retarget(&self, target: Arc<SimplicialSet>) -> Result<SimplicialMap> {
        if !self.target.same_structure(&target) {
            return invalid("retarget to a different simplicial set");
        }
        Ok(SimplicialMap { source: self.source.clone(), target, levels: self.levels.clone() })
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().enumerate().all(|(n, lv)| {
            let mut seen = vec![false; self.target.count(n)];
            lv.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && (0..=self.source.truncation()).all(|n| self.source.count(n) == self.target.count(n))
    }

    /// Exhaustive check that the map commutes with faces and degeneracies.
    pub fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        require_same_truncation(s, t)?;
        let top = s.truncation();
        if self.levels.len() != top + 1 {
            return invalid("map has the wrong number of levels");
        }
        for n in 0..=top {
            if self.levels[n].len() != s.count(n) {
                return invalid(format!("map level {n} has the wrong size"));
            }
            for x in 0..s.count(n) {
                let y = self.levels[n][x];
                if y >= t.count(n) {
                    return invalid(format!("map level {n} points outside the target"));
                }
                if n >= 1 {
                    for i in 0..=n {
                        if self.levels[n - 1][s.face(n, i, x)] != t.face(n, i, y) {
                            return invalid(format!("map does not commute with d{i} at level {n}"));
                        }
                    }
                }
                if n < top {
                    for j in 0..=n {
                        if self.levels[n + 1][s.degen(n, j, x)] != t.degen(n, j, y) {
                            return invalid(format!("map does not commute with s{j} at level {n}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

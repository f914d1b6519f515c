//! Dimension-truncated simplicial sets.
//!
//! Every simplex up to the truncation is stored, degenerate ones included,
//! together with its Eilenberg–Zilber tag. Levels are dense index ranges
//! `0..count(n)`.

mod bisimplicial;
mod build;
mod constructions;
mod enumerate;
mod exponential;
mod map;
pub mod text;

pub use bisimplicial::BisimplicialSet;
pub use build::{FaceRef, NondegSpec};
pub use constructions::*;
pub use enumerate::{enumerate_map_images, enumerate_maps, find_isomorphism};
pub use exponential::Exponential;
pub use map::SimplicialMap;

use crate::error::{invalid, Result};
use crate::ops::{self, Mono};

/// Eilenberg–Zilber tag: the simplex is `word` applied to `base`, a
/// nondegenerate simplex of dimension `n - |word|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ez {
    pub word: u16,
    pub base: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Level {
    pub(crate) count: usize,
    pub(crate) faces: Vec<usize>,
    pub(crate) degens: Vec<usize>,
    pub(crate) ez: Vec<Ez>,
    pub(crate) nondeg: Vec<usize>,
    pub(crate) names: Vec<String>,
    pub(crate) ordinal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    truncation: usize,
    levels: Vec<Level>,
    lossy: bool,
}

/// Face and degeneracy tables without normalization data.
///
/// `faces[n]` has stride `n+1` for `n >= 1`; `degens[n]` has stride `n+1`
/// for `n < truncation`.
#[derive(Clone, Debug, Default)]
pub struct RawTables {
    pub truncation: usize,
    pub counts: Vec<usize>,
    pub faces: Vec<Vec<usize>>,
    pub degens: Vec<Vec<usize>>,
}

impl RawTables {
    pub fn new(truncation: usize) -> Self {
        RawTables {
            truncation,
            counts: vec![0; truncation + 1],
            faces: vec![Vec::new(); truncation + 1],
            degens: vec![Vec::new(); truncation + 1],
        }
    }

    #[inline]
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][x * (n + 1) + i]
    }

    #[inline]
    pub fn degen(&self, n: usize, j: usize, x: usize) -> usize {
        self.degens[n][x * (n + 1) + j]
    }
}

impl SimplicialSet {
    /// Normalizes raw tables, computing EZ tags. Names are requested for
    /// nondegenerate simplices only. The tables are trusted; call
    /// [`SimplicialSet::check_identities`] to validate.
    pub fn from_raw(raw: RawTables, lossy: bool, mut namer: impl FnMut(usize, usize) -> String) -> SimplicialSet {
        let n_top = raw.truncation;
        let mut levels: Vec<Level> = Vec::with_capacity(n_top + 1);
        let RawTables { truncation, counts, mut faces, mut degens } = raw;
        for n in 0..=n_top {
            let count = counts[n];
            let mut ez = Vec::with_capacity(count);
            let mut nondeg = Vec::new();
            let mut ordinal = vec![usize::MAX; count];
            for x in 0..count {
                let mut tag = None;
                if n >= 1 {
                    let prev = &levels[n - 1];
                    for j in 0..n {
                        let y = faces[n][x * (n + 1) + j];
                        if prev.degens[y * n + j] == x {
                            let t = prev.ez[y];
                            tag = Some(Ez { word: ops::word_after_degeneracy(t.word, j), base: t.base });
                            break;
                        }
                    }
                }
                match tag {
                    Some(t) => ez.push(t),
                    None => {
                        ordinal[x] = nondeg.len();
                        nondeg.push(x);
                        ez.push(Ez { word: 0, base: x });
                    }
                }
            }
            let names = nondeg.iter().map(|&x| namer(n, x)).collect();
            levels.push(Level {
                count,
                faces: std::mem::take(&mut faces[n]),
                degens: std::mem::take(&mut degens[n]),
                ez,
                nondeg,
                names,
                ordinal,
            });
        }
        SimplicialSet { truncation, levels, lossy }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_lossy(&self) -> bool {
        self.lossy
    }

    pub(crate) fn set_lossy(&mut self, lossy: bool) {
        self.lossy = lossy;
    }

    #[inline]
    pub fn count(&self, n: usize) -> usize {
        self.levels[n].count
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.count).collect()
    }

    #[inline]
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        debug_assert!(n >= 1 && i <= n);
        self.levels[n].faces[x * (n + 1) + i]
    }

    #[inline]
    pub fn degen(&self, n: usize, j: usize, x: usize) -> usize {
        debug_assert!(n < self.truncation && j <= n);
        self.levels[n].degens[x * (n + 1) + j]
    }

    #[inline]
    pub fn ez(&self, n: usize, x: usize) -> Ez {
        self.levels[n].ez[x]
    }

    #[inline]
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        self.levels[n].ez[x].word != 0
    }

    pub fn nondegenerate(&self, n: usize) -> &[usize] {
        &self.levels[n].nondeg
    }

    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.nondeg.len()).collect()
    }

    /// Position of a nondegenerate simplex among the nondegenerate simplices of its level.
    pub fn ordinal(&self, n: usize, x: usize) -> Option<usize> {
        let o = self.levels[n].ordinal[x];
        (o != usize::MAX).then_some(o)
    }

    /// Name of a nondegenerate simplex.
    pub fn name(&self, n: usize, x: usize) -> &str {
        &self.levels[n].names[self.levels[n].ordinal[x]]
    }

    pub fn nondegenerate_name(&self, n: usize, ordinal: usize) -> &str {
        &self.levels[n].names[ordinal]
    }

    /// Readable label: the name for nondegenerate simplices, `word.base` otherwise.
    pub fn label(&self, n: usize, x: usize) -> String {
        let t = self.ez(n, x);
        if t.word == 0 {
            self.name(n, x).to_string()
        } else {
            let m = n - ops::word_len(t.word);
            format!("{}.{}", ops::word_to_string(t.word), self.name(m, t.base))
        }
    }

    pub fn find_name(&self, n: usize, name: &str) -> Option<usize> {
        let l = &self.levels[n];
        l.names.iter().position(|s| s == name).map(|o| l.nondeg[o])
    }

    /// Largest dimension holding a nondegenerate simplex.
    pub fn dim(&self) -> Option<usize> {
        (0..=self.truncation).rev().find(|&n| !self.levels[n].nondeg.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.levels[0].count == 0
    }

    /// Degenerate `x` by a word: apply `s_j` for the word's indices, smallest first.
    pub fn apply_word(&self, mut n: usize, word: u16, mut x: usize) -> usize {
        for j in 0..16 {
            if word & (1 << j) != 0 {
                x = self.degen(n, j, x);
                n += 1;
            }
        }
        x
    }

    /// `θ^* x` for `θ: [a] -> [b]` and `x` in level `b`.
    pub fn apply(&self, theta: &Mono, x: usize) -> usize {
        let (surj, inj) = theta.factor();
        let mut y = x;
        let mut n = theta.target();
        for k in inj.missing().into_iter().rev() {
            y = self.face(n, k, y);
            n -= 1;
        }
        if surj.is_identity() {
            y
        } else {
            self.apply_word(n, surj.word(), y)
        }
    }

    pub fn vertices(&self, n: usize, x: usize) -> Vec<usize> {
        (0..=n).map(|k| self.apply(&Mono::constant(0, n, k), x)).collect()
    }

    pub fn to_raw(&self) -> RawTables {
        RawTables {
            truncation: self.truncation,
            counts: self.counts(),
            faces: self.levels.iter().map(|l| l.faces.clone()).collect(),
            degens: self.levels.iter().map(|l| l.degens.clone()).collect(),
        }
    }

    /// Same tables and tags, ignoring names and metadata.
    pub fn same_structure(&self, other: &SimplicialSet) -> bool {
        self.truncation == other.truncation
            && self.levels.iter().zip(&other.levels).all(|(a, b)| {
                a.count == b.count && a.faces == b.faces && a.degens == b.degens && a.ez == b.ez
            })
    }

    /// Exhaustive check of the simplicial identities and the EZ tags.
    pub fn check_identities(&self) -> Result<()> {
        let top = self.truncation;
        for n in 0..=top {
            for x in 0..self.count(n) {
                // d_i d_j = d_{j-1} d_i for i < j
                if n >= 2 {
                    for j in 0..=n {
                        for i in 0..j {
                            let a = self.face(n - 1, i, self.face(n, j, x));
                            let b = self.face(n - 1, j - 1, self.face(n, i, x));
                            if a != b {
                                return invalid(format!("d{i}d{j} != d{}d{i} at level {n}, simplex {x}", j - 1));
                            }
                        }
                    }
                }
                if n < top {
                    for j in 0..=n {
                        let s = self.degen(n, j, x);
                        for i in 0..=n + 1 {
                            let lhs = self.face(n + 1, i, s);
                            let ok = if i < j {
                                n >= 1 && lhs == self.degen(n - 1, j - 1, self.face(n, i, x))
                            } else if i == j || i == j + 1 {
                                lhs == x
                            } else {
                                lhs == self.degen(n - 1, j, self.face(n, i - 1, x))
                            };
                            if !ok {
                                return invalid(format!("d{i}s{j} identity fails at level {n}, simplex {x}"));
                            }
                        }
                        if n + 1 < top {
                            for i in 0..=j {
                                let a = self.degen(n + 1, i, s);
                                let b = self.degen(n + 1, j + 1, self.degen(n, i, x));
                                if a != b {
                                    return invalid(format!("s{i}s{j} identity fails at level {n}, simplex {x}"));
                                }
                            }
                        }
                    }
                }
                let t = self.ez(n, x);
                let m = n - ops::word_len(t.word);
                if self.is_degenerate(m, t.base) || self.apply_word(m, t.word, t.base) != x {
                    return invalid(format!("bad EZ tag at level {n}, simplex {x}"));
                }
            }
            for (o, &x) in self.levels[n].nondeg.iter().enumerate() {
                if self.levels[n].ordinal[x] != o || self.is_degenerate(n, x) {
                    return invalid(format!("nondegenerate index broken at level {n}"));
                }
            }
        }
        Ok(())
    }

    /// Components as a union-find labelling of vertices.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut ds = crate::unionfind::DisjointSets::new(self.count(0));
        if self.truncation >= 1 {
            for e in 0..self.count(1) {
                ds.merge(self.face(1, 0, e), self.face(1, 1, e));
            }
        }
        ds.classes()
    }
}

pub(crate) fn require_same_truncation(a: &SimplicialSet, b: &SimplicialSet) -> Result<()> {
    if a.truncation() != b.truncation() {
        return Err(crate::error::Error::TruncationMismatch(a.truncation(), b.truncation()));
    }
    Ok(())
}

use std::sync::Arc;

use super::{RawTables, SimplicialMap, SimplicialSet};
use crate::error::{invalid, Result};

/// A truncated bisimplicial set, stored as a simplicial object in simplicial
/// sets: column `p` is the simplicial set `B(p, •)` (vertical direction) and
/// the horizontal operators are simplicial maps between columns.
#[derive(Clone, Debug)]
pub struct BisimplicialSet {
    truncation: usize,
    columns: Vec<Arc<SimplicialSet>>,
    /// `hfaces[p][i]: column p -> column p-1`, for `p >= 1`.
    hfaces: Vec<Vec<SimplicialMap>>,
    /// `hdegens[p][j]: column p -> column p+1`, for `p < N`.
    hdegens: Vec<Vec<SimplicialMap>>,
}

impl BisimplicialSet {
    pub fn new(columns: Vec<Arc<SimplicialSet>>, hfaces: Vec<Vec<SimplicialMap>>, hdegens: Vec<Vec<SimplicialMap>>) -> Result<Self> {
        let b = BisimplicialSet { truncation: columns.len().saturating_sub(1), columns, hfaces, hdegens };
        b.check()?;
        Ok(b)
    }

    pub(crate) fn new_unchecked(columns: Vec<Arc<SimplicialSet>>, hfaces: Vec<Vec<SimplicialMap>>, hdegens: Vec<Vec<SimplicialMap>>) -> Self {
        BisimplicialSet { truncation: columns.len().saturating_sub(1), columns, hfaces, hdegens }
    }

    /// The bisimplicial set constant in the horizontal direction.
    pub fn constant(x: Arc<SimplicialSet>) -> Self {
        let top = x.truncation();
        let id = SimplicialMap::identity(x.clone());
        BisimplicialSet {
            truncation: top,
            columns: vec![x; top + 1],
            hfaces: (0..=top).map(|p| vec![id.clone(); if p == 0 { 0 } else { p + 1 }]).collect(),
            hdegens: (0..=top).map(|p| vec![id.clone(); if p < top { p + 1 } else { 0 }]).collect(),
        }
    }

    /// `(p, q) ↦ X_p × Y_q`: column `p` is one copy of `Y` per `p`-simplex of `X`.
    pub fn levelwise_product(x: &SimplicialSet, y: &Arc<SimplicialSet>) -> Result<Self> {
        super::require_same_truncation(x, y)?;
        let top = x.truncation();
        let columns: Vec<Arc<SimplicialSet>> = (0..=top)
            .map(|p| {
                let tags: Vec<String> = (0..x.count(p)).map(|s| x.label(p, s)).collect();
                super::dot(y, &tags).map(Arc::new)
            })
            .collect::<Result<_>>()?;
        let copy_map = |p: usize, p2: usize, f: &dyn Fn(usize) -> usize| {
            let levels = (0..=top)
                .map(|q| {
                    let w = y.count(q);
                    (0..columns[p].count(q)).map(|z| f(z / w) * w + z % w).collect()
                })
                .collect();
            SimplicialMap::new_unchecked(columns[p].clone(), columns[p2].clone(), levels)
        };
        let hfaces = (0..=top)
            .map(|p| if p == 0 { Vec::new() } else { (0..=p).map(|i| copy_map(p, p - 1, &|s| x.face(p, i, s))).collect() })
            .collect();
        let hdegens = (0..=top)
            .map(|p| if p == top { Vec::new() } else { (0..=p).map(|j| copy_map(p, p + 1, &|s| x.degen(p, j, s))).collect() })
            .collect();
        Ok(BisimplicialSet { truncation: top, columns, hfaces, hdegens })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn column(&self, p: usize) -> &Arc<SimplicialSet> {
        &self.columns[p]
    }

    pub fn hface(&self, p: usize, i: usize) -> &SimplicialMap {
        &self.hfaces[p][i]
    }

    pub fn hdegen(&self, p: usize, j: usize) -> &SimplicialMap {
        &self.hdegens[p][j]
    }

    /// Horizontal operators between columns, i.e. the face and degeneracy
    /// maps of the simplicial object `p ↦ B(p, •)`.
    pub fn horizontal_maps(&self) -> impl Iterator<Item = &SimplicialMap> {
        self.hfaces.iter().flatten().chain(self.hdegens.iter().flatten())
    }

    /// Horizontal identities, vertical identities, and the requirement that
    /// horizontal operators are simplicial maps (so they commute with the
    /// vertical ones).
    pub fn check(&self) -> Result<()> {
        let top = self.truncation;
        for c in &self.columns {
            if c.truncation() != top {
                return invalid("column truncation differs from the horizontal truncation");
            }
            c.check_identities()?;
        }
        for p in 0..=top {
            if self.hfaces[p].len() != if p == 0 { 0 } else { p + 1 } || self.hdegens[p].len() != if p < top { p + 1 } else { 0 } {
                return invalid(format!("column {p} has the wrong number of horizontal operators"));
            }
            for m in self.hfaces[p].iter().chain(&self.hdegens[p]) {
                m.check()?;
            }
        }
        let eq = |a: &SimplicialMap, b: &SimplicialMap| a.levels() == b.levels();
        for p in 0..=top {
            for j in 0..=p {
                if p >= 2 {
                    for i in 0..j {
                        if !eq(&self.hfaces[p][j].then(&self.hfaces[p - 1][i])?, &self.hfaces[p][i].then(&self.hfaces[p - 1][j - 1])?) {
                            return invalid(format!("horizontal d{i}d{j} identity fails at column {p}"));
                        }
                    }
                }
            }
            if p < top {
                for j in 0..=p {
                    let s = &self.hdegens[p][j];
                    for i in 0..=p + 1 {
                        let lhs = s.then(&self.hfaces[p + 1][i])?;
                        let ok = if i < j {
                            eq(&lhs, &self.hfaces[p][i].then(&self.hdegens[p - 1][j - 1])?)
                        } else if i == j || i == j + 1 {
                            lhs.levels().iter().all(|lv| lv.iter().enumerate().all(|(a, &b)| a == b))
                        } else {
                            eq(&lhs, &self.hfaces[p][i - 1].then(&self.hdegens[p - 1][j])?)
                        };
                        if !ok {
                            return invalid(format!("horizontal d{i}s{j} identity fails at column {p}"));
                        }
                    }
                    if p + 1 < top {
                        for i in 0..=j {
                            if !eq(&s.then(&self.hdegens[p + 1][i])?, &self.hdegens[p][i].then(&self.hdegens[p + 1][j + 1])?) {
                                return invalid(format!("horizontal s{i}s{j} identity fails at column {p}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Level `n` is `B(n, n)`; `d_i = d_i^h d_i^v` and `s_i = s_i^h s_i^v`.
    pub fn diagonal(&self) -> SimplicialSet {
        let top = self.truncation;
        let mut raw = RawTables::new(top);
        for n in 0..=top {
            let col = &self.columns[n];
            raw.counts[n] = col.count(n);
            if n >= 1 {
                let mut f = Vec::with_capacity(col.count(n) * (n + 1));
                for x in 0..col.count(n) {
                    for i in 0..=n {
                        f.push(self.hfaces[n][i].apply(n - 1, col.face(n, i, x)));
                    }
                }
                raw.faces[n] = f;
            }
            if n < top {
                let mut d = Vec::with_capacity(col.count(n) * (n + 1));
                for x in 0..col.count(n) {
                    for j in 0..=n {
                        d.push(self.hdegens[n][j].apply(n + 1, col.degen(n, j, x)));
                    }
                }
                raw.degens[n] = d;
            }
        }
        let lossy = self.columns.iter().any(|c| c.is_lossy());
        SimplicialSet::from_raw(raw, lossy, |n, x| format!("{n}|{}", self.columns[n].label(n, x)))
    }

    /// The map `column 0 -> diagonal` sending `z` to its total horizontal
    /// degeneracy `s_0^h ... s_0^h z` at the matching vertical level.
    pub fn column_zero_inclusion(&self, diag: &Arc<SimplicialSet>) -> SimplicialMap {
        let top = self.truncation;
        let levels = (0..=top)
            .map(|n| {
                (0..self.columns[0].count(n))
                    .map(|z| (0..n).fold(z, |acc, p| self.hdegens[p][0].apply(n, acc)))
                    .collect()
            })
            .collect();
        SimplicialMap::new_unchecked(self.columns[0].clone(), diag.clone(), levels)
    }
}

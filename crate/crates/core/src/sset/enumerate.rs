use std::collections::HashMap;
use std::sync::Arc;

use super::{SimplicialMap, SimplicialSet};
use crate::budget::Meter;
use crate::error::Result;
use crate::ops;

type FaceIndex = HashMap<Vec<usize>, Vec<usize>>;

struct Search<'a> {
    x: &'a SimplicialSet,
    y: &'a SimplicialSet,
    order: Vec<(usize, usize)>,
    index: Vec<Option<FaceIndex>>,
    images: Vec<Vec<usize>>,
    meter: Meter,
    nondeg_only: bool,
    used: Vec<Vec<bool>>,
}

impl<'a> Search<'a> {
    fn new(x: &'a SimplicialSet, y: &'a SimplicialSet, up_to: usize, limit: u64, nondeg_only: bool) -> Self {
        let top = up_to.min(x.truncation());
        let order = (0..=top).flat_map(|n| x.nondegenerate(n).iter().map(move |&s| (n, s))).collect();
        Search {
            x,
            y,
            order,
            index: vec![None; top + 1],
            images: (0..=top).map(|n| vec![usize::MAX; x.nondegenerate(n).len()]).collect(),
            meter: Meter::new(limit, "enumerating simplicial maps"),
            nondeg_only,
            used: (0..=top).map(|n| vec![false; y.count(n)]).collect(),
        }
    }

    fn image_of(&self, n: usize, s: usize) -> usize {
        let t = self.x.ez(n, s);
        let m = n - ops::word_len(t.word);
        let img = self.images[m][self.x.ordinal(m, t.base).unwrap()];
        self.y.apply_word(m, t.word, img)
    }

    fn candidates(&mut self, n: usize, s: usize) -> Vec<usize> {
        let y = self.y;
        let nondeg_only = self.nondeg_only;
        if n == 0 {
            return (0..y.count(0)).filter(|&v| !nondeg_only || !y.is_degenerate(0, v)).collect();
        }
        if self.index[n].is_none() {
            let mut idx: FaceIndex = HashMap::new();
            for t in 0..y.count(n) {
                if nondeg_only && y.is_degenerate(n, t) {
                    continue;
                }
                idx.entry((0..=n).map(|i| y.face(n, i, t)).collect()).or_default().push(t);
            }
            self.index[n] = Some(idx);
        }
        let key: Vec<usize> = (0..=n).map(|i| self.image_of(n - 1, self.x.face(n, i, s))).collect();
        self.index[n].as_ref().unwrap().get(&key).cloned().unwrap_or_default()
    }

    fn run(&mut self, pos: usize, out: &mut Vec<Vec<Vec<usize>>>, first_only: bool) -> Result<()> {
        if pos == self.order.len() {
            out.push(self.images.clone());
            return Ok(());
        }
        let (n, s) = self.order[pos];
        let o = self.x.ordinal(n, s).unwrap();
        for t in self.candidates(n, s) {
            if self.nondeg_only && self.used[n][t] {
                continue;
            }
            self.meter.tick()?;
            self.images[n][o] = t;
            self.used[n][t] = true;
            self.run(pos + 1, out, first_only)?;
            self.used[n][t] = false;
            if first_only && !out.is_empty() {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// All simplicial maps from the `up_to`-skeleton of `x` to `y`, as images of
/// nondegenerate simplices (`images[n][ordinal]`), in a fixed deterministic
/// order. Fails once more than `budget` partial assignments are visited.
pub fn enumerate_map_images(x: &SimplicialSet, y: &SimplicialSet, up_to: usize, budget: u64) -> Result<Vec<Vec<Vec<usize>>>> {
    super::require_same_truncation(x, y)?;
    let mut search = Search::new(x, y, up_to, budget, false);
    let mut out = Vec::new();
    search.run(0, &mut out, false)?;
    Ok(out)
}

/// All simplicial maps `x -> y`.
pub fn enumerate_maps(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>, budget: u64) -> Result<Vec<SimplicialMap>> {
    let images = enumerate_map_images(x, y, x.truncation(), budget)?;
    images
        .into_iter()
        .map(|img| {
            let m = SimplicialMap::extend_unchecked(x.clone(), y.clone(), &img)?;
            debug_assert!(m.check().is_ok());
            Ok(m)
        })
        .collect()
}

/// Searches for an isomorphism by matching nondegenerate simplices.
pub fn find_isomorphism(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>, budget: u64) -> Result<Option<SimplicialMap>> {
    super::require_same_truncation(x, y)?;
    if x.counts() != y.counts() || x.nondegenerate_counts() != y.nondegenerate_counts() {
        return Ok(None);
    }
    let mut search = Search::new(x, y, x.truncation(), budget, true);
    let mut out = Vec::new();
    search.run(0, &mut out, true)?;
    match out.pop() {
        None => Ok(None),
        Some(img) => {
            let m = SimplicialMap::extend_unchecked(x.clone(), y.clone(), &img)?;
            Ok((m.check().is_ok() && m.is_bijective()).then_some(m))
        }
    }
}

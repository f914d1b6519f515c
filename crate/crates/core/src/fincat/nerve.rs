use std::collections::HashMap;
use std::sync::Arc;

use smallvec::SmallVec;

use super::{FinCat, Functor};
use crate::budget::Budget;
use crate::error::Result;
use crate::sset::{RawTables, SimplicialMap, SimplicialSet};

/// A composable chain `c0 -f1-> c1 -> ... -fn-> cn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    pub start: usize,
    pub arrows: SmallVec<[usize; 4]>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, c: &FinCat) -> usize {
        self.arrows.last().map_or(self.start, |&f| c.target(f))
    }

    /// `c_k`.
    pub fn object(&self, c: &FinCat, k: usize) -> usize {
        if k == 0 {
            self.start
        } else {
            c.target(self.arrows[k - 1])
        }
    }

    /// The composite `c_a -> c_b`.
    pub fn composite(&self, c: &FinCat, a: usize, b: usize) -> usize {
        let mut m = c.identity(self.object(c, a));
        for k in a..b {
            m = c.compose(self.arrows[k], m);
        }
        m
    }

    pub fn face(&self, c: &FinCat, i: usize) -> Chain {
        let n = self.arrows.len();
        let mut arrows = self.arrows.clone();
        if i == 0 {
            let f = arrows.remove(0);
            Chain { start: c.target(f), arrows }
        } else if i == n {
            arrows.pop();
            Chain { start: self.start, arrows }
        } else {
            let g = arrows.remove(i);
            arrows[i - 1] = c.compose(g, self.arrows[i - 1]);
            Chain { start: self.start, arrows }
        }
    }

    pub fn degeneracy(&self, c: &FinCat, j: usize) -> Chain {
        let mut arrows = self.arrows.clone();
        arrows.insert(j, c.identity(self.object(c, j)));
        Chain { start: self.start, arrows }
    }

    pub fn is_degenerate(&self, c: &FinCat) -> bool {
        self.arrows.iter().any(|&f| c.is_identity(f))
    }

    pub fn map(&self, f: &Functor) -> Chain {
        Chain { start: f.object(self.start), arrows: self.arrows.iter().map(|&m| f.morphism(m)).collect() }
    }
}

/// All chains of length at most `N`, with lookup.
#[derive(Clone, Debug)]
pub struct Chains {
    pub levels: Vec<Vec<Chain>>,
    pub index: Vec<HashMap<Chain, usize>>,
}

impl Chains {
    pub fn new(c: &FinCat, truncation: usize, budget: Budget) -> Result<Chains> {
        let mut levels: Vec<Vec<Chain>> = vec![(0..c.object_count()).map(|o| Chain { start: o, arrows: SmallVec::new() }).collect()];
        for n in 1..=truncation {
            let size: u128 = levels[n - 1].iter().map(|ch| c.outgoing(ch.end(c)).len() as u128).sum();
            budget.check_size("nerve", size)?;
            let mut next = Vec::with_capacity(size as usize);
            for ch in &levels[n - 1] {
                for &f in c.outgoing(ch.end(c)) {
                    let mut arrows = ch.arrows.clone();
                    arrows.push(f);
                    next.push(Chain { start: ch.start, arrows });
                }
            }
            levels.push(next);
        }
        let index = levels.iter().map(|l| l.iter().cloned().enumerate().map(|(k, ch)| (ch, k)).collect()).collect();
        Ok(Chains { levels, index })
    }

    pub fn lookup(&self, ch: &Chain) -> usize {
        self.index[ch.len()][ch]
    }
}

pub fn chain_name(c: &FinCat, ch: &Chain) -> String {
    if ch.arrows.is_empty() {
        c.object_name(ch.start).to_string()
    } else {
        ch.arrows.iter().map(|&f| c.morphism(f).name.as_str()).collect::<Vec<_>>().join(">")
    }
}

/// The nerve truncated at `N`, with simplices indexed like [`Chains`].
/// It is lossy when a nondegenerate chain of length `N + 1` exists.
pub fn nerve(c: &FinCat, truncation: usize, budget: Budget) -> Result<(SimplicialSet, Chains)> {
    let chains = Chains::new(c, truncation, budget)?;
    let mut raw = RawTables::new(truncation);
    for n in 0..=truncation {
        raw.counts[n] = chains.levels[n].len();
        if n >= 1 {
            let mut faces = Vec::with_capacity(raw.counts[n] * (n + 1));
            for ch in &chains.levels[n] {
                for i in 0..=n {
                    faces.push(chains.lookup(&ch.face(c, i)));
                }
            }
            raw.faces[n] = faces;
        }
        if n < truncation {
            let mut degens = Vec::with_capacity(raw.counts[n] * (n + 1));
            for ch in &chains.levels[n] {
                for j in 0..=n {
                    degens.push(chains.lookup(&ch.degeneracy(c, j)));
                }
            }
            raw.degens[n] = degens;
        }
    }
    let lossy = chains.levels[truncation]
        .iter()
        .any(|ch| !ch.is_degenerate(c) && c.outgoing(ch.end(c)).iter().any(|&f| !c.is_identity(f)));
    let set = SimplicialSet::from_raw(raw, lossy, |n, x| chain_name(c, &chains.levels[n][x]));
    Ok((set, chains))
}

/// The map of nerves induced by a functor.
pub fn nerve_map(f: &Functor, src: (&Arc<SimplicialSet>, &Chains), tgt: (&Arc<SimplicialSet>, &Chains)) -> SimplicialMap {
    let levels = src.1.levels.iter().map(|l| l.iter().map(|ch| tgt.1.lookup(&ch.map(f))).collect()).collect();
    SimplicialMap::new_unchecked(src.0.clone(), tgt.0.clone(), levels)
}

use super::{Ez, Level, SimplicialSet};
use crate::error::{invalid, Result};
use crate::ops::{self, Mono};

/// A face given as a degeneracy word applied to a nondegenerate simplex,
/// referenced by its ordinal in its own dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FaceRef {
    pub word: u16,
    pub base: usize,
}

/// A nondegenerate simplex with its faces `d_0 .. d_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegSpec {
    pub name: String,
    pub faces: Vec<FaceRef>,
}

impl SimplicialSet {
    /// Builds a simplicial set from its nondegenerate simplices.
    ///
    /// Level `n` lists the nondegenerate simplices first, then the degenerate
    /// ones grouped by degeneracy word in lexicographic order, each group in
    /// base order.
    pub fn from_nondegenerate(truncation: usize, specs: Vec<Vec<NondegSpec>>) -> Result<SimplicialSet> {
        if truncation > ops::MAX_DIM {
            return invalid(format!("truncation {truncation} exceeds {}", ops::MAX_DIM));
        }
        if specs.len() > truncation + 1 && specs[truncation + 1..].iter().any(|s| !s.is_empty()) {
            return invalid("nondegenerate simplex above the truncation");
        }
        let nd: Vec<usize> = (0..=truncation).map(|m| specs.get(m).map_or(0, |s| s.len())).collect();
        let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(truncation + 1);
        let mut entries: Vec<Vec<(u16, usize)>> = Vec::with_capacity(truncation + 1);
        for n in 0..=truncation {
            let mut off = vec![0usize; 1 << n];
            let mut ent = Vec::new();
            for w in ops::words_in_order(n) {
                off[w as usize] = ent.len();
                let m = n - ops::word_len(w);
                ent.extend((0..nd[m]).map(|o| (w, o)));
            }
            offsets.push(off);
            entries.push(ent);
        }
        let mut levels: Vec<Level> = Vec::with_capacity(truncation + 1);
        for n in 0..=truncation {
            let count = entries[n].len();
            let mut faces = Vec::new();
            if n >= 1 {
                faces.reserve(count * (n + 1));
                for (x, &(w, o)) in entries[n].iter().enumerate() {
                    if w == 0 {
                        let spec = &specs[n][o];
                        if spec.faces.len() != n + 1 {
                            return invalid(format!("simplex `{}` needs {} faces, got {}", spec.name, n + 1, spec.faces.len()));
                        }
                        for f in &spec.faces {
                            let wl = ops::word_len(f.word);
                            if (f.word as usize) >= (1 << (n - 1)) || wl > n - 1 || f.base >= nd[n - 1 - wl] {
                                return invalid(format!("simplex `{}` has a face out of range", spec.name));
                            }
                            faces.push(offsets[n - 1][f.word as usize] + f.base);
                        }
                    } else {
                        let m = n - ops::word_len(w);
                        let sigma = Mono::from_word(n, w);
                        for i in 0..=n {
                            let (eps, eta) = sigma.compose(&Mono::coface(n, i)).factor();
                            if eta.is_identity() {
                                faces.push(offsets[n - 1][eps.word() as usize] + o);
                            } else {
                                let k = eta.missing()[0];
                                let r = levels[m].faces[o * (m + 1) + k];
                                let t = levels[m - 1].ez[r];
                                let word = Mono::from_word(m - 1, t.word).compose(&eps).word();
                                faces.push(offsets[n - 1][word as usize] + t.base);
                            }
                        }
                    }
                    debug_assert_eq!(faces.len(), (x + 1) * (n + 1));
                }
            }
            let mut degens = Vec::new();
            if n < truncation {
                degens.reserve(count * (n + 1));
                for &(w, o) in &entries[n] {
                    for j in 0..=n {
                        degens.push(offsets[n + 1][ops::word_after_degeneracy(w, j) as usize] + o);
                    }
                }
            }
            let ez = entries[n].iter().map(|&(w, o)| Ez { word: w, base: o }).collect();
            let mut ordinal = vec![usize::MAX; count];
            for o in 0..nd[n] {
                ordinal[o] = o;
            }
            levels.push(Level {
                count,
                faces,
                degens,
                ez,
                nondeg: (0..nd[n]).collect(),
                names: specs.get(n).map_or(Vec::new(), |s| s.iter().map(|x| x.name.clone()).collect()),
                ordinal,
            });
        }
        let set = SimplicialSet { truncation, levels, lossy: false };
        set.check_identities()
            .map_err(|e| crate::error::Error::Invalid(format!("face data violates the simplicial identities: {e}")))?;
        Ok(set)
    }

    /// Nondegenerate data of this set, in the form accepted by
    /// [`SimplicialSet::from_nondegenerate`].
    pub fn nondegenerate_specs(&self) -> Vec<Vec<NondegSpec>> {
        let top = self.dim().map_or(0, |d| d + 1);
        (0..top)
            .map(|n| {
                self.nondegenerate(n)
                    .iter()
                    .map(|&x| NondegSpec {
                        name: self.name(n, x).to_string(),
                        faces: if n == 0 {
                            Vec::new()
                        } else {
                            (0..=n)
                                .map(|i| {
                                    let t = self.ez(n - 1, self.face(n, i, x));
                                    let m = n - 1 - ops::word_len(t.word);
                                    FaceRef { word: t.word, base: self.ordinal(m, t.base).unwrap() }
                                })
                                .collect()
                        },
                    })
                    .collect()
            })
            .collect()
    }

    /// Rebuilds the set in the canonical level ordering used by the loader.
    pub fn canonical(&self) -> SimplicialSet {
        let mut out = SimplicialSet::from_nondegenerate(self.truncation, self.nondegenerate_specs())
            .expect("a valid set rebuilds from its nondegenerate data");
        out.lossy = self.lossy;
        out
    }
}

use std::collections::HashMap;
use std::sync::Arc;

use super::{CosimplicialMap, CosimplicialSS};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ops::{self, Mono};
use crate::sset::{coproduct_labelled, map_on_vertices, power_dot, product, product_map, quotient_raw, standard_simplex, SimplicialMap, SimplicialSet};

/// `A ⊗_Δ K` together with its presentation.
///
/// Generators are pairs `(κ, a)` with `κ` a nondegenerate `m`-simplex of
/// `K` and `a` a simplex of `A^m`; a pair whose `K`-part is degenerate,
/// `(σ^*κ₀, a)`, is identified with `(κ₀, A(σ) a)`. The relations are
/// `(κ, A(δ^i) a) ~ (d_i κ, a)` for the elementary cofaces.
#[derive(Clone, Debug)]
pub struct TensorDelta {
    pub set: Arc<SimplicialSet>,
    a: Arc<CosimplicialSS>,
    k: Arc<SimplicialSet>,
    summands: Vec<(usize, usize)>,
    summand_of: HashMap<(usize, usize), usize>,
    offsets: Vec<Vec<usize>>,
    starts: Vec<Vec<usize>>,
    class_of: Vec<Vec<usize>>,
    reps: Vec<Vec<usize>>,
    degeneracies: HashMap<(usize, u16), SimplicialMap>,
}

impl TensorDelta {
    pub fn cosimplicial(&self) -> &Arc<CosimplicialSS> {
        &self.a
    }

    pub fn simplicial(&self) -> &Arc<SimplicialSet> {
        &self.k
    }

    /// Number of generators `(κ, a)` with `a` in level `p`.
    pub fn generator_count(&self, p: usize) -> usize {
        self.class_of[p].len()
    }

    /// Decodes generator `g` of level `p` as `(m, κ, a)`.
    pub fn generator(&self, p: usize, g: usize) -> (usize, usize, usize) {
        let s = self.starts[p].partition_point(|&o| o <= g) - 1;
        let (m, kappa) = self.summands[s];
        (m, kappa, g - self.offsets[s][p])
    }

    pub fn class_of_generator(&self, p: usize, g: usize) -> usize {
        self.class_of[p][g]
    }

    /// The generator chosen to represent a class.
    pub fn representative(&self, p: usize, c: usize) -> (usize, usize, usize) {
        self.generator(p, self.reps[p][c])
    }

    /// Class of `(x, a)` for any `m`-simplex `x` of `K`, degenerate or not,
    /// and `a` in level `p` of `A^m`.
    pub fn class(&self, m: usize, x: usize, p: usize, a: usize) -> usize {
        let t = self.k.ez(m, x);
        let k0 = m - ops::word_len(t.word);
        let s = self.summand_of[&(k0, t.base)];
        let a0 = if t.word == 0 { a } else { self.degeneracies[&(m, t.word)].apply(p, a) };
        self.class_of[p][self.offsets[s][p] + a0]
    }
}

/// The coend `A ⊗_Δ K` over `Δ_{≤N}`.
pub fn tensor_delta(a: &Arc<CosimplicialSS>, k: &Arc<SimplicialSet>, budget: Budget) -> Result<TensorDelta> {
    let top = a.truncation();
    if k.truncation() != top {
        return Err(Error::TruncationMismatch(k.truncation(), top));
    }
    let mut summands = Vec::new();
    for m in 0..=top {
        for &x in k.nondegenerate(m) {
            summands.push((m, x));
        }
    }
    for p in 0..=top {
        let size: u128 = summands.iter().map(|&(m, _)| a.component(m).count(p) as u128).sum();
        budget.check_size("coend", size)?;
    }
    let summand_of: HashMap<(usize, usize), usize> = summands.iter().enumerate().map(|(s, &mk)| (mk, s)).collect();
    let parts: Vec<&SimplicialSet> = summands.iter().map(|&(m, _)| a.component(m).as_ref()).collect();
    let tags: Vec<String> = summands.iter().map(|&(m, x)| k.name(m, x).to_string()).collect();
    let cop = coproduct_labelled(&parts, &tags, top)?;
    let offsets = cop.offsets;
    let starts: Vec<Vec<usize>> = (0..=top).map(|p| offsets.iter().map(|o| o[p]).collect()).collect();
    let mut degeneracies = HashMap::new();
    for m in 1..=top {
        for w in 1..(1u16 << m) {
            degeneracies.insert((m, w), a.operator(&Mono::from_word(m, w)));
        }
    }
    let normal = |m: usize, x: usize, p: usize, v: usize| -> usize {
        let t = k.ez(m, x);
        let k0 = m - ops::word_len(t.word);
        let s = summand_of[&(k0, t.base)];
        let v0 = if t.word == 0 { v } else { degeneracies[&(m, t.word)].apply(p, v) };
        offsets[s][p] + v0
    };
    let mut seeds = Vec::new();
    for (s, &(m, kappa)) in summands.iter().enumerate() {
        if m == 0 {
            continue;
        }
        for i in 0..=m {
            let y = k.face(m, i, kappa);
            let d = a.coface(m, i);
            for p in 0..=top {
                for v in 0..a.component(m - 1).count(p) {
                    seeds.push((p, offsets[s][p] + d.apply(p, v), normal(m - 1, y, p, v)));
                }
            }
        }
    }
    let raw = cop.set.to_raw();
    let data = quotient_raw(&raw, seeds);
    let lossy = a.is_lossy() || k.is_lossy();
    let reps = data.reps;
    let set = Arc::new(SimplicialSet::from_raw(data.raw, lossy, |p, c| cop.set.label(p, reps[p][c])));
    Ok(TensorDelta { set, a: a.clone(), k: k.clone(), summands, summand_of, offsets, starts, class_of: data.class_of, reps, degeneracies })
}

/// The map `A ⊗_Δ K -> B ⊗_Δ L` induced by `f: A -> B` (identity when
/// `None`) and `g: K -> L`.
pub fn tensor_delta_induced(f: Option<&CosimplicialMap>, g: &SimplicialMap, src: &TensorDelta, tgt: &TensorDelta) -> Result<SimplicialMap> {
    let top = src.set.truncation();
    let mut levels = Vec::with_capacity(top + 1);
    for p in 0..=top {
        let level = (0..src.set.count(p))
            .map(|c| {
                let (m, kappa, v) = src.representative(p, c);
                let v2 = f.map_or(v, |f| f.component(m).apply(p, v));
                tgt.class(m, g.apply(m, kappa), p, v2)
            })
            .collect();
        levels.push(level);
    }
    SimplicialMap::new(src.set.clone(), tgt.set.clone(), levels)
}

/// The comparison `A ⊗_Δ Δ[n] -> A^n`, `(θ, a) ↦ A(θ) a`.
pub fn co_yoneda(td: &TensorDelta, n: usize) -> Result<SimplicialMap> {
    let a = &td.a;
    let k = &td.k;
    let top = a.truncation();
    let mut ops_cache: HashMap<(usize, usize), SimplicialMap> = HashMap::new();
    let mut levels = Vec::with_capacity(top + 1);
    for p in 0..=top {
        let mut level = Vec::with_capacity(td.set.count(p));
        for c in 0..td.set.count(p) {
            let (m, kappa, v) = td.representative(p, c);
            let op = ops_cache.entry((m, kappa)).or_insert_with(|| {
                let vs = k.vertices(m, kappa);
                a.operator(&Mono::new(&vs, n))
            });
            level.push(op.apply(p, v));
        }
        levels.push(level);
    }
    SimplicialMap::new(td.set.clone(), a.component(n).clone(), levels)
}

/// `A ⊗ K`: `[n] ↦ A ⊗_Δ (K × Δ[n])`, returned with the presentations.
pub fn tensor(a: &Arc<CosimplicialSS>, k: &Arc<SimplicialSet>, budget: Budget) -> Result<(CosimplicialSS, Vec<TensorDelta>)> {
    let top = a.truncation();
    let simplices: Vec<Arc<SimplicialSet>> = (0..=top).map(|n| standard_simplex(n, top).map(Arc::new)).collect::<Result<_>>()?;
    let ks: Vec<Arc<SimplicialSet>> = simplices.iter().map(|s| product(k, s).map(Arc::new)).collect::<Result<_>>()?;
    let tds: Vec<TensorDelta> = ks.iter().map(|kn| tensor_delta(a, kn, budget)).collect::<Result<_>>()?;
    let id = SimplicialMap::identity(k.clone());
    let induced = |theta: &Mono| -> Result<SimplicialMap> {
        let (x, y) = (theta.source(), theta.target());
        let g = map_on_vertices(&simplices[x], &simplices[y], |v| theta.at(v))?;
        let kg = product_map(&id, &g, &ks[x], &ks[y]);
        tensor_delta_induced(None, &kg, &tds[x], &tds[y])
    };
    let mut cofaces = vec![Vec::new()];
    for n in 1..=top {
        cofaces.push((0..=n).map(|i| induced(&Mono::coface(n, i))).collect::<Result<_>>()?);
    }
    let mut codegens = Vec::new();
    for n in 0..=top {
        codegens.push(if n < top { (0..=n).map(|j| induced(&Mono::codegeneracy(n, j))).collect::<Result<_>>()? } else { Vec::new() });
    }
    let components = tds.iter().map(|t| t.set.clone()).collect();
    Ok((CosimplicialSS::new_unchecked(components, cofaces, codegens)?, tds))
}

/// `A^K`: `[n] ↦ (A^n)^{·K_n}` with the evident operators.
pub fn power(a: &CosimplicialSS, k: &SimplicialSet, budget: Budget) -> Result<CosimplicialSS> {
    let top = a.truncation();
    if k.truncation() != top {
        return Err(Error::TruncationMismatch(k.truncation(), top));
    }
    for n in 0..=top {
        for p in 0..=top {
            let size = (a.component(n).count(p) as u128).checked_pow(k.count(n) as u32).unwrap_or(u128::MAX);
            budget.check_size("power", size)?;
        }
    }
    let components: Vec<Arc<SimplicialSet>> = (0..=top)
        .map(|n| {
            let names: Vec<String> = (0..k.count(n)).map(|x| k.label(n, x)).collect();
            power_dot(a.component(n), &names).map(Arc::new)
        })
        .collect::<Result<_>>()?;
    // tuples are mixed-radix with the first factor most significant
    let induced = |theta: &Mono, op: &SimplicialMap| -> SimplicialMap {
        let (x, y) = (theta.source(), theta.target());
        let levels = (0..=top)
            .map(|p| {
                let rx = a.component(x).count(p);
                let ry = a.component(y).count(p);
                let nx = k.count(x);
                (0..components[x].count(p))
                    .map(|t| {
                        let mut digits = vec![0usize; nx];
                        let mut r = t;
                        for d in digits.iter_mut().rev() {
                            *d = r % rx;
                            r /= rx;
                        }
                        (0..k.count(y)).fold(0usize, |acc, z| acc * ry + op.apply(p, digits[k.apply(theta, z)]))
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new_unchecked(components[x].clone(), components[y].clone(), levels)
    };
    let mut cofaces = vec![Vec::new()];
    for n in 1..=top {
        cofaces.push((0..=n).map(|i| induced(&Mono::coface(n, i), a.coface(n, i))).collect());
    }
    let mut codegens = Vec::new();
    for n in 0..=top {
        codegens.push(if n < top { (0..=n).map(|j| induced(&Mono::codegeneracy(n, j), a.codegeneracy(n, j))).collect() } else { Vec::new() });
    }
    CosimplicialSS::new_unchecked(components, cofaces, codegens)
}

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::{require_same_truncation, RawTables, SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};
use crate::unionfind::DisjointSets;

fn vertex_label(vs: &[usize]) -> String {
    if vs.iter().all(|&v| v < 10) {
        vs.iter().map(|v| v.to_string()).collect()
    } else {
        vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-")
    }
}

/// The ordered simplicial complex on vertices `0..vertices` whose simplices
/// are the given vertex sets (closed under subsets by the caller or not;
/// faces of listed sets are added). Level `k` consists of nondecreasing
/// vertex sequences of length `k+1` spanning a simplex.
pub fn simplicial_complex(vertices: usize, simplices: &[Vec<usize>], truncation: usize) -> Result<SimplicialSet> {
    if vertices > 64 {
        return Err(Error::ParameterRange("at most 64 vertices".into()));
    }
    let mut masks: HashSet<u64> = HashSet::new();
    let mut top = 0;
    for s in simplices {
        let mut m = 0u64;
        for &v in s {
            if v >= vertices {
                return Err(Error::ParameterRange(format!("vertex {v} out of range")));
            }
            m |= 1 << v;
        }
        if m == 0 {
            continue;
        }
        top = top.max(m.count_ones() as usize - 1);
        // close under nonempty subsets
        let mut sub = m;
        loop {
            if sub != 0 {
                masks.insert(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
    }
    let mut raw = RawTables::new(truncation);
    let mut seqs: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
    for k in 0..=truncation {
        let mut level = Vec::new();
        let mut cur = vec![0usize; k + 1];
        if vertices > 0 {
            loop {
                let m = cur.iter().fold(0u64, |a, &v| a | (1 << v));
                if masks.contains(&m) {
                    level.push(cur.clone());
                }
                let mut t = k as isize;
                while t >= 0 && cur[t as usize] == vertices - 1 {
                    t -= 1;
                }
                if t < 0 {
                    break;
                }
                let v = cur[t as usize] + 1;
                for s in t as usize..=k {
                    cur[s] = v;
                }
            }
        }
        index.push(level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect());
        raw.counts[k] = level.len();
        seqs.push(level);
    }
    for k in 0..=truncation {
        if k >= 1 {
            let mut f = Vec::with_capacity(seqs[k].len() * (k + 1));
            for s in &seqs[k] {
                for i in 0..=k {
                    let mut t = s.clone();
                    t.remove(i);
                    f.push(index[k - 1][&t]);
                }
            }
            raw.faces[k] = f;
        }
        if k < truncation {
            let mut d = Vec::with_capacity(seqs[k].len() * (k + 1));
            for s in &seqs[k] {
                for j in 0..=k {
                    let mut t = s.clone();
                    t.insert(j, s[j]);
                    d.push(index[k + 1][&t]);
                }
            }
            raw.degens[k] = d;
        }
    }
    Ok(SimplicialSet::from_raw(raw, top > truncation, |k, x| vertex_label(&seqs[k][x])))
}

/// The standard simplex Δ[n]; its `k`-simplices are the monotone maps `[k] -> [n]`.
pub fn standard_simplex(n: usize, truncation: usize) -> Result<SimplicialSet> {
    if n > truncation {
        return Err(Error::ParameterRange(format!("Δ[{n}] needs truncation at least {n}")));
    }
    simplicial_complex(n + 1, &[(0..=n).collect()], truncation)
}

/// ∂Δ[n], for `n >= 1`.
pub fn boundary(n: usize, truncation: usize) -> Result<SimplicialSet> {
    if n == 0 || n > truncation + 1 {
        return Err(Error::ParameterRange(format!("∂Δ[{n}] needs n ≥ 1 and truncation ≥ n−1")));
    }
    let facets: Vec<Vec<usize>> = (0..=n).map(|i| (0..=n).filter(|&v| v != i).collect()).collect();
    simplicial_complex(n + 1, &facets, truncation)
}

/// The horn Λ[n,k]: ∂Δ[n] without its `k`-th face.
pub fn horn(n: usize, k: usize, truncation: usize) -> Result<SimplicialSet> {
    if n == 0 || k > n || n > truncation + 1 {
        return Err(Error::ParameterRange(format!("Λ[{n},{k}] needs 0 ≤ k ≤ n, n ≥ 1, truncation ≥ n−1")));
    }
    let facets: Vec<Vec<usize>> = (0..=n).filter(|&i| i != k).map(|i| (0..=n).filter(|&v| v != i).collect()).collect();
    simplicial_complex(n + 1, &facets, truncation)
}

pub fn point(truncation: usize) -> SimplicialSet {
    standard_simplex(0, truncation).expect("Δ[0] exists at every truncation")
}

pub fn empty(truncation: usize) -> SimplicialSet {
    SimplicialSet::from_raw(RawTables::new(truncation), false, |_, _| unreachable!())
}

/// Tuples of simplices, one from each factor, with componentwise operators.
pub fn product_many(factors: &[&SimplicialSet]) -> Result<SimplicialSet> {
    let Some(first) = factors.first() else {
        return Err(Error::ParameterRange("empty product needs a truncation; use point()".into()));
    };
    let top = first.truncation();
    for f in factors {
        require_same_truncation(first, f)?;
    }
    let mut raw = RawTables::new(top);
    let k = factors.len();
    let radix: Vec<Vec<usize>> = (0..=top).map(|n| factors.iter().map(|f| f.count(n)).collect()).collect();
    for n in 0..=top {
        raw.counts[n] = radix[n].iter().product();
    }
    let decode = |n: usize, mut x: usize, out: &mut Vec<usize>| {
        out.clear();
        out.resize(k, 0);
        for c in (0..k).rev() {
            out[c] = x % radix[n][c];
            x /= radix[n][c];
        }
    };
    let encode = |n: usize, parts: &[usize]| parts.iter().enumerate().fold(0usize, |a, (c, &p)| a * radix[n][c] + p);
    let mut parts = Vec::new();
    let mut image = vec![0usize; k];
    for n in 0..=top {
        if n >= 1 {
            let mut f = Vec::with_capacity(raw.counts[n] * (n + 1));
            for x in 0..raw.counts[n] {
                decode(n, x, &mut parts);
                for i in 0..=n {
                    for c in 0..k {
                        image[c] = factors[c].face(n, i, parts[c]);
                    }
                    f.push(encode(n - 1, &image));
                }
            }
            raw.faces[n] = f;
        }
        if n < top {
            let mut d = Vec::with_capacity(raw.counts[n] * (n + 1));
            for x in 0..raw.counts[n] {
                decode(n, x, &mut parts);
                for j in 0..=n {
                    for c in 0..k {
                        image[c] = factors[c].degen(n, j, parts[c]);
                    }
                    d.push(encode(n + 1, &image));
                }
            }
            raw.degens[n] = d;
        }
    }
    let dims: usize = factors.iter().map(|f| f.dim().unwrap_or(0)).sum();
    let lossy = factors.iter().any(|f| f.is_lossy()) || dims > top;
    let mut scratch = Vec::new();
    Ok(SimplicialSet::from_raw(raw, lossy, |n, x| {
        decode(n, x, &mut scratch);
        let labels: Vec<String> = scratch.iter().enumerate().map(|(c, &p)| factors[c].label(n, p)).collect();
        format!("({})", labels.join(","))
    }))
}

/// X × Y; the simplex `(x, y)` of level `n` has index `x * |Y_n| + y`.
pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet> {
    product_many(&[x, y])
}

/// Index of `(x, y)` in level `n` of `product(X, Y)`.
#[inline]
pub fn product_index(y: &SimplicialSet, n: usize, a: usize, b: usize) -> usize {
    a * y.count(n) + b
}

pub fn product_projection(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>, p: &Arc<SimplicialSet>, first: bool) -> SimplicialMap {
    let levels = (0..=p.truncation())
        .map(|n| {
            let w = y.count(n);
            (0..p.count(n)).map(|z| if first { z / w } else { z % w }).collect()
        })
        .collect();
    SimplicialMap::new_unchecked(p.clone(), if first { x.clone() } else { y.clone() }, levels)
}

/// Disjoint union together with per-summand level offsets.
pub struct Coproduct {
    pub set: SimplicialSet,
    pub offsets: Vec<Vec<usize>>,
}

pub fn coproduct_labelled(parts: &[&SimplicialSet], tags: &[String], truncation: usize) -> Result<Coproduct> {
    for p in parts {
        if p.truncation() != truncation {
            return Err(Error::TruncationMismatch(p.truncation(), truncation));
        }
    }
    let mut raw = RawTables::new(truncation);
    let mut offsets = vec![vec![0usize; truncation + 1]; parts.len()];
    for n in 0..=truncation {
        let mut acc = 0;
        for (k, p) in parts.iter().enumerate() {
            offsets[k][n] = acc;
            acc += p.count(n);
        }
        raw.counts[n] = acc;
    }
    for n in 0..=truncation {
        if n >= 1 {
            let mut f = Vec::with_capacity(raw.counts[n] * (n + 1));
            for (k, p) in parts.iter().enumerate() {
                for x in 0..p.count(n) {
                    for i in 0..=n {
                        f.push(offsets[k][n - 1] + p.face(n, i, x));
                    }
                }
            }
            raw.faces[n] = f;
        }
        if n < truncation {
            let mut d = Vec::with_capacity(raw.counts[n] * (n + 1));
            for (k, p) in parts.iter().enumerate() {
                for x in 0..p.count(n) {
                    for j in 0..=n {
                        d.push(offsets[k][n + 1] + p.degen(n, j, x));
                    }
                }
            }
            raw.degens[n] = d;
        }
    }
    let lossy = parts.iter().any(|p| p.is_lossy());
    let set = SimplicialSet::from_raw(raw, lossy, |n, x| {
        let k = (0..parts.len()).rev().find(|&k| offsets[k][n] <= x && x - offsets[k][n] < parts[k].count(n)).unwrap();
        format!("{}:{}", tags[k], parts[k].name(n, x - offsets[k][n]))
    });
    Ok(Coproduct { set, offsets })
}

pub fn coproduct(parts: &[&SimplicialSet]) -> Result<SimplicialSet> {
    let Some(first) = parts.first() else {
        return Err(Error::ParameterRange("empty coproduct needs a truncation; use empty()".into()));
    };
    let tags: Vec<String> = (0..parts.len()).map(|k| k.to_string()).collect();
    Ok(coproduct_labelled(parts, &tags, first.truncation())?.set)
}

pub fn coproduct_injection(cop: &Arc<SimplicialSet>, offsets: &[usize], part: &Arc<SimplicialSet>) -> SimplicialMap {
    let levels = (0..=part.truncation()).map(|n| (0..part.count(n)).map(|x| offsets[n] + x).collect()).collect();
    SimplicialMap::new_unchecked(part.clone(), cop.clone(), levels)
}

/// W·S: one copy of `W` per element of `S`.
pub fn dot(w: &SimplicialSet, s: &[String]) -> Result<SimplicialSet> {
    let parts: Vec<&SimplicialSet> = s.iter().map(|_| w).collect();
    Ok(coproduct_labelled(&parts, s, w.truncation())?.set)
}

/// W^{·S}: the product of one copy of `W` per element of `S`.
pub fn power_dot(w: &SimplicialSet, s: &[String]) -> Result<SimplicialSet> {
    if s.is_empty() {
        return Ok(point(w.truncation()));
    }
    let parts: Vec<&SimplicialSet> = s.iter().map(|_| w).collect();
    product_many(&parts)
}

/// Result of a quotient by a generated congruence.
pub struct QuotientData {
    /// Class index of each simplex of the original tables.
    pub class_of: Vec<Vec<usize>>,
    /// First member of each class.
    pub reps: Vec<Vec<usize>>,
    pub raw: RawTables,
}

/// Levelwise quotient of raw tables by the smallest congruence containing
/// the seed pairs `(level, a, b)` and closed under faces and degeneracies.
pub fn quotient_raw(t: &RawTables, seeds: impl IntoIterator<Item = (usize, usize, usize)>) -> QuotientData {
    let top = t.truncation;
    let mut ds: Vec<DisjointSets> = (0..=top).map(|n| DisjointSets::new(t.counts[n])).collect();
    let mut work: Vec<(usize, usize, usize)> = Vec::new();
    let merge = |ds: &mut Vec<DisjointSets>, work: &mut Vec<(usize, usize, usize)>, n: usize, a: usize, b: usize| {
        if ds[n].merge(a, b) {
            work.push((n, a, b));
        }
    };
    for (n, a, b) in seeds {
        merge(&mut ds, &mut work, n, a, b);
        while let Some((n, a, b)) = work.pop() {
            if n >= 1 {
                for i in 0..=n {
                    let (fa, fb) = (t.face(n, i, a), t.face(n, i, b));
                    merge(&mut ds, &mut work, n - 1, fa, fb);
                }
            }
            if n < top {
                for j in 0..=n {
                    let (da, db) = (t.degen(n, j, a), t.degen(n, j, b));
                    merge(&mut ds, &mut work, n + 1, da, db);
                }
            }
        }
    }
    let mut class_of = Vec::with_capacity(top + 1);
    let mut reps = Vec::with_capacity(top + 1);
    let mut raw = RawTables::new(top);
    for n in 0..=top {
        let (cls, k) = ds[n].classes();
        let mut rep = vec![usize::MAX; k];
        for (x, &c) in cls.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = x;
            }
        }
        raw.counts[n] = k;
        class_of.push(cls);
        reps.push(rep);
    }
    for n in 0..=top {
        if n >= 1 {
            raw.faces[n] = reps[n].iter().flat_map(|&x| (0..=n).map(move |i| (x, i))).map(|(x, i)| class_of[n - 1][t.face(n, i, x)]).collect();
        }
        if n < top {
            raw.degens[n] = reps[n].iter().flat_map(|&x| (0..=n).map(move |j| (x, j))).map(|(x, j)| class_of[n + 1][t.degen(n, j, x)]).collect();
        }
    }
    QuotientData { class_of, reps, raw }
}

fn quotient_map(t: &Arc<SimplicialSet>, q: &Arc<SimplicialSet>, class_of: Vec<Vec<usize>>) -> SimplicialMap {
    SimplicialMap::new_unchecked(t.clone(), q.clone(), class_of)
}

/// Quotient of `t` by the congruence generated by the given pairs.
pub fn quotient(t: &Arc<SimplicialSet>, pairs: impl IntoIterator<Item = (usize, usize, usize)>) -> (Arc<SimplicialSet>, SimplicialMap) {
    let data = quotient_raw(&t.to_raw(), pairs);
    let reps = data.reps;
    let q = Arc::new(SimplicialSet::from_raw(data.raw, t.is_lossy(), |n, c| t.label(n, reps[n][c])));
    let map = quotient_map(t, &q, data.class_of);
    (q, map)
}

/// Coequalizer of two parallel maps, with the quotient map from the target.
pub fn coequalizer(f: &SimplicialMap, g: &SimplicialMap) -> Result<(Arc<SimplicialSet>, SimplicialMap)> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::ShapeMismatch("coequalizer of non-parallel maps".into()));
    }
    let src = f.source();
    let pairs = (0..=src.truncation()).flat_map(|n| (0..src.count(n)).map(move |x| (n, x))).map(|(n, x)| (n, f.apply(n, x), g.apply(n, x)));
    Ok(quotient(f.target(), pairs.collect::<Vec<_>>()))
}

/// Unique map to the point.
pub fn to_point(x: &Arc<SimplicialSet>, pt: &Arc<SimplicialSet>) -> SimplicialMap {
    let levels = (0..=x.truncation()).map(|n| vec![0; x.count(n)]).collect();
    SimplicialMap::new_unchecked(x.clone(), pt.clone(), levels)
}

/// The map Δ[0] → X picking vertex `v`.
pub fn vertex_map(pt: &Arc<SimplicialSet>, x: &Arc<SimplicialSet>, v: usize) -> SimplicialMap {
    let levels = (0..=x.truncation()).map(|n| vec![x.apply_word(0, ((1u32 << n) - 1) as u16, v)]).collect();
    SimplicialMap::new_unchecked(pt.clone(), x.clone(), levels)
}

/// Lookup from vertex tuples to simplices, for sets whose simplices are
/// determined by their vertices (ordered complexes, nerves of posets).
pub fn vertex_index(x: &SimplicialSet) -> Vec<HashMap<Vec<usize>, usize>> {
    (0..=x.truncation()).map(|n| (0..x.count(n)).map(|s| (x.vertices(n, s), s)).collect()).collect()
}

/// `f × g` between binary products built by [`product`].
pub fn product_map(f: &SimplicialMap, g: &SimplicialMap, source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>) -> SimplicialMap {
    let levels = (0..=source.truncation())
        .map(|n| {
            let (ws, wt) = (g.source().count(n), g.target().count(n));
            (0..source.count(n)).map(|z| f.apply(n, z / ws) * wt + g.apply(n, z % ws)).collect()
        })
        .collect();
    SimplicialMap::new_unchecked(source.clone(), target.clone(), levels)
}

/// The map determined by a vertex function, for targets whose simplices are
/// determined by their vertices (ordered complexes, nerves of posets and
/// their products).
pub fn map_on_vertices(source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>, vf: impl Fn(usize) -> usize) -> Result<SimplicialMap> {
    let index = vertex_index(target);
    let mut levels = Vec::with_capacity(source.truncation() + 1);
    for n in 0..=source.truncation() {
        let mut level = Vec::with_capacity(source.count(n));
        for s in 0..source.count(n) {
            let vs: Vec<usize> = source.vertices(n, s).into_iter().map(&vf).collect();
            match index[n].get(&vs) {
                Some(&t) => level.push(t),
                None => return Err(Error::Invalid(format!("vertices {vs:?} span no simplex of the target"))),
            }
        }
        levels.push(level);
    }
    SimplicialMap::new(source.clone(), target.clone(), levels)
}

//! Oracles shared by the integration tests. They only read face and
//! degeneracy tables, so they do not depend on the library's own checkers
//! or its normalized chain complexes.

#![allow(dead_code)]

use std::sync::Arc;

use hocolim_core::cosimp::CosimplicialSS;
use hocolim_core::sset::{map_on_vertices, simplicial_complex, SimplicialMap, SimplicialSet};

/// Number of violated simplicial identities among all simplices of `x`.
pub fn identity_violations(x: &SimplicialSet) -> usize {
    let top = x.truncation();
    let mut bad = 0;
    for n in 0..=top {
        for s in 0..x.count(n) {
            // d_i d_j = d_{j-1} d_i for i < j
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        if x.face(n - 1, i, x.face(n, j, s)) != x.face(n - 1, j - 1, x.face(n, i, s)) {
                            bad += 1;
                        }
                    }
                }
            }
            if n < top {
                for j in 0..=n {
                    let t = x.degen(n, j, s);
                    for i in 0..=n + 1 {
                        let lhs = x.face(n + 1, i, t);
                        let rhs = if i == j || i == j + 1 {
                            s
                        } else if i < j {
                            x.degen(n - 1, j - 1, x.face(n, i, s))
                        } else {
                            x.degen(n - 1, j, x.face(n, i - 1, s))
                        };
                        if lhs != rhs {
                            bad += 1;
                        }
                    }
                    // s_i s_j = s_{j+1} s_i for i <= j
                    if n + 1 < top {
                        for i in 0..=j {
                            if x.degen(n + 1, i, x.degen(n, j, s)) != x.degen(n + 1, j + 1, x.degen(n, i, s)) {
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    bad
}

/// Number of (level, simplex, operator) triples where `f` fails to commute
/// with a face or degeneracy.
pub fn map_violations(f: &SimplicialMap) -> usize {
    let (x, y) = (f.source(), f.target());
    let top = x.truncation();
    let mut bad = 0;
    for n in 0..=top {
        for s in 0..x.count(n) {
            if n >= 1 {
                for i in 0..=n {
                    if f.apply(n - 1, x.face(n, i, s)) != y.face(n, i, f.apply(n, s)) {
                        bad += 1;
                    }
                }
            }
            if n < top {
                for j in 0..=n {
                    if f.apply(n + 1, x.degen(n, j, s)) != y.degen(n, j, f.apply(n, s)) {
                        bad += 1;
                    }
                }
            }
        }
    }
    bad
}

/// Invariant factors (the nonzero diagonal of the Smith form) of a dense
/// integer matrix, by plain elimination.
pub fn invariant_factors(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if a[r][c] != 0 && best.map_or(true, |(br, bc)| a[r][c].abs() < a[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = a[r][t] / a[t][t];
            if q != 0 {
                for c in t..cols {
                    a[r][c] -= q * a[t][c];
                }
            }
            clean &= a[r][t] == 0;
        }
        for c in t + 1..cols {
            let q = a[t][c] / a[t][t];
            if q != 0 {
                for row in a.iter_mut().skip(t) {
                    row[c] -= q * row[t];
                }
            }
            clean &= a[t][c] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let p = a[t][t];
        if let Some(r) = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % p != 0)) {
            for c in t..cols {
                let v = a[r][c];
                a[t][c] += v;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

/// Unnormalized boundary `C_n -> C_{n-1}` over all simplices, as rows × columns.
fn full_boundary(x: &SimplicialSet, n: usize) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; x.count(n)]; x.count(n - 1)];
    for s in 0..x.count(n) {
        for i in 0..=n {
            m[x.face(n, i, s)][s] += if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// `(betti, torsion)` in degrees `0..N`, from the unnormalized chain complex.
pub fn oracle_homology(x: &SimplicialSet) -> Vec<(usize, Vec<u64>)> {
    let top = x.truncation();
    let factors: Vec<Vec<i128>> = (0..=top).map(|n| if n == 0 { Vec::new() } else { invariant_factors(full_boundary(x, n)) }).collect();
    (0..top)
        .map(|n| {
            let rank_out = factors[n].len();
            let into = &factors[n + 1];
            let betti = x.count(n) - rank_out - into.len();
            let mut torsion: Vec<u64> = into.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
            torsion.sort_unstable();
            (betti, torsion)
        })
        .collect()
}

/// The same data read off a library report.
pub fn report_groups(r: &hocolim_core::homology::HomologyReport) -> Vec<(usize, Vec<u64>)> {
    (0..r.degrees.len())
        .map(|n| {
            let mut t = r.torsion(n);
            t.sort_unstable();
            (r.betti(n), t)
        })
        .collect()
}

/// `Z^b` plus torsion, in the order the library prints.
pub fn groups(spec: &[(usize, &[u64])]) -> Vec<(usize, Vec<u64>)> {
    spec.iter().map(|(b, t)| (*b, t.to_vec())).collect()
}

/// The levelwise discrete object `[n] ↦ Δ([1], [n])`, whose components have
/// 1, 3, 6, ... points.
pub fn discrete_pairs(top: usize) -> CosimplicialSS {
    let pairs = |n: usize| -> Vec<(usize, usize)> { (0..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).collect() };
    let discrete = |k: usize| Arc::new(simplicial_complex(k, &(0..k).map(|v| vec![v]).collect::<Vec<_>>(), top).unwrap());
    let components: Vec<Arc<SimplicialSet>> = (0..=top).map(|n| discrete(pairs(n).len())).collect();
    let on_pairs = |from: usize, to: usize, f: &dyn Fn(usize) -> usize| {
        let target = pairs(to);
        let table: Vec<usize> = pairs(from).iter().map(|&(a, b)| target.iter().position(|&p| p == (f(a), f(b))).unwrap()).collect();
        map_on_vertices(&components[from], &components[to], |v| table[v]).unwrap()
    };
    let cofaces = (0..=top).map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| on_pairs(n - 1, n, &move |x| if x < i { x } else { x + 1 })).collect() }).collect();
    let codegens = (0..=top).map(|n| if n == top { Vec::new() } else { (0..=n).map(|j| on_pairs(n + 1, n, &move |x| if x <= j { x } else { x - 1 })).collect() }).collect();
    CosimplicialSS::new(components, cofaces, codegens).unwrap()
}

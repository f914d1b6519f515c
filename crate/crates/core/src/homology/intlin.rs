//! Exact integer linear algebra on sparse matrices: invariant factors,
//! integral kernels and lattice membership.
//!
//! Work starts in `i64` with checked arithmetic and restarts in `BigInt` when
//! anything overflows.

use std::collections::HashMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub trait Scalar: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// Truncating quotient; exact when `o` divides `self`.
    fn div(&self, o: &Self) -> Option<Self>;
    fn divides(&self, b: &Self) -> bool;
    /// `(g, s, t)` with `s*self + t*o = g > 0`.
    fn ext_gcd(&self, o: &Self) -> Option<(Self, Self, Self)>;
    fn to_big(&self) -> BigInt;
    fn to_i64(&self) -> Option<i64>;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(*o)
    }
    fn divides(&self, b: &Self) -> bool {
        *self != 0 && b.checked_rem(*self) == Some(0)
    }
    fn ext_gcd(&self, o: &Self) -> Option<(Self, Self, Self)> {
        let e = (*self as i128).extended_gcd(&(*o as i128));
        let (g, s, t) = if e.gcd < 0 { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) };
        Some((i64::try_from(g).ok()?, i64::try_from(s).ok()?, i64::try_from(t).ok()?))
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn to_i64(&self) -> Option<i64> {
        Some(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn divides(&self, b: &Self) -> bool {
        !Zero::is_zero(self) && Zero::is_zero(&(b % self))
    }
    fn ext_gcd(&self, o: &Self) -> Option<(Self, Self, Self)> {
        let e = self.extended_gcd(o);
        Some(if e.gcd.is_negative() { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) })
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn to_i64(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
}

pub type SparseVec<T> = Vec<(usize, T)>;

/// Column-major sparse matrix; each column sorted by row, no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T = i64> {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<SparseVec<T>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    /// Builds from unsorted column entries, summing duplicates.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec<T>>) -> Option<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for mut c in columns {
            c.sort_by_key(|e| e.0);
            let mut merged: SparseVec<T> = Vec::with_capacity(c.len());
            for (r, v) in c {
                match merged.last_mut() {
                    Some(last) if last.0 == r => last.1 = last.1.add(&v)?,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|e| !e.1.is_zero());
            out.push(merged);
        }
        Some(SparseMatrix { rows, cols, columns: out })
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(|i| vec![(i, T::from_i64(1))]).collect() }
    }

    pub fn entry(&self, r: usize, c: usize) -> T {
        match self.columns[c].binary_search_by_key(&r, |e| e.0) {
            Ok(k) => self.columns[c][k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                d[*r][c] = v.clone();
            }
        }
        d
    }

    pub fn to_big(&self) -> SparseMatrix<BigInt> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|c| c.iter().map(|(r, v)| (*r, v.to_big())).collect()).collect(),
        }
    }

    pub fn to_i64(&self) -> Option<SparseMatrix<i64>> {
        let mut columns = Vec::with_capacity(self.cols);
        for c in &self.columns {
            columns.push(c.iter().map(|(r, v)| v.to_i64().map(|x| (*r, x))).collect::<Option<Vec<_>>>()?);
        }
        Some(SparseMatrix { rows: self.rows, cols: self.cols, columns })
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &SparseVec<T>) -> Option<SparseVec<T>> {
        let mut acc: SparseVec<T> = Vec::new();
        for (c, x) in v {
            acc = axpy(&acc, x, &self.columns[*c])?;
        }
        Some(acc)
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix<T>) -> Option<SparseMatrix<T>> {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let columns = other.columns.iter().map(|c| self.apply(c)).collect::<Option<Vec<_>>>()?;
        Some(SparseMatrix { rows: self.rows, cols: other.cols, columns })
    }

    pub fn sub(&self, other: &SparseMatrix<T>) -> Option<SparseMatrix<T>> {
        assert!(self.rows == other.rows && self.cols == other.cols, "matrix shapes differ");
        let m1 = T::from_i64(-1);
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| axpy(a, &m1, b)).collect::<Option<Vec<_>>>()?;
        Some(SparseMatrix { rows: self.rows, cols: self.cols, columns })
    }

    /// `[self | extra]`.
    pub fn with_columns(&self, extra: &[SparseVec<T>]) -> SparseMatrix<T> {
        let mut columns = self.columns.clone();
        columns.extend(extra.iter().cloned());
        SparseMatrix { rows: self.rows, cols: columns.len(), columns }
    }

    pub fn transpose(&self) -> SparseMatrix<T> {
        let mut columns: Vec<SparseVec<T>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                columns[*r].push((c, v.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, columns }
    }
}

/// `v + c·w` on sorted sparse vectors.
pub fn axpy<T: Scalar>(v: &[(usize, T)], c: &T, w: &[(usize, T)]) -> Option<SparseVec<T>> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        if j == w.len() || (i < v.len() && v[i].0 < w[j].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i == v.len() || w[j].0 < v[i].0 {
            out.push((w[j].0, c.mul(&w[j].1)?));
            j += 1;
        } else {
            let x = v[i].1.add(&c.mul(&w[j].1)?)?;
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Rank and the invariant factors greater than one, in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

pub fn smith<T: Scalar>(m: &SparseMatrix<T>) -> Smith {
    if let Some(small) = m.to_i64() {
        if let Some(s) = smith_generic(&small) {
            return s;
        }
    }
    smith_generic(&m.to_big()).expect("bigint arithmetic does not overflow")
}

fn smith_generic<T: Scalar>(m: &SparseMatrix<T>) -> Option<Smith> {
    let (units, core) = eliminate_units(m)?;
    let diag = dense_smith(core);
    let rank = units + diag.len();
    let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
    Some(Smith { rank, torsion })
}

/// Eliminates unit pivots and returns their number plus the remaining core.
fn eliminate_units<T: Scalar>(m: &SparseMatrix<T>) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let t = m.transpose();
    let mut rows: Vec<SparseVec<T>> = t.columns;
    let mut col_rows: Vec<Vec<usize>> = m.columns.iter().map(|c| c.iter().map(|e| e.0).collect()).collect();
    let mut row_alive = vec![true; m.rows];
    let mut col_alive = vec![true; m.cols];
    let mut order: Vec<usize> = (0..m.cols).collect();
    order.sort_by_key(|&c| m.columns[c].len());
    let mut rank = 0;
    loop {
        let mut progress = false;
        for &c in &order {
            if !col_alive[c] {
                continue;
            }
            let mut live: Vec<usize> = Vec::new();
            {
                let list = &mut col_rows[c];
                list.sort_unstable();
                list.dedup();
                list.retain(|&r| row_alive[r] && rows[r].binary_search_by_key(&c, |e| e.0).is_ok());
                live.extend_from_slice(list);
            }
            if live.is_empty() {
                col_alive[c] = false;
                continue;
            }
            let mut pivot: Option<usize> = None;
            for &r in &live {
                let k = rows[r].binary_search_by_key(&c, |e| e.0).unwrap();
                if rows[r][k].1.is_unit() && pivot.is_none_or(|p| rows[r].len() < rows[p].len()) {
                    pivot = Some(r);
                }
            }
            let Some(p) = pivot else { continue };
            let prow = std::mem::take(&mut rows[p]);
            let u = prow[prow.binary_search_by_key(&c, |e| e.0).unwrap()].1.clone();
            for &r in &live {
                if r == p {
                    continue;
                }
                let a = rows[r][rows[r].binary_search_by_key(&c, |e| e.0).unwrap()].1.clone();
                // u is ±1, so u⁻¹ = u
                let factor = a.mul(&u)?.neg()?;
                let new = axpy(&rows[r], &factor, &prow)?;
                for (cc, _) in &prow {
                    if *cc != c && rows[r].binary_search_by_key(cc, |e| e.0).is_err() {
                        col_rows[*cc].push(r);
                    }
                }
                rows[r] = new;
            }
            row_alive[p] = false;
            col_alive[c] = false;
            rank += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let mut live_cols: Vec<usize> = live_rows.iter().flat_map(|&r| rows[r].iter().map(|e| e.0)).collect();
    live_cols.sort_unstable();
    live_cols.dedup();
    let cpos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut core = vec![vec![<BigInt as Zero>::zero(); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[r] {
            core[i][cpos[c]] = v.to_big();
        }
    }
    Some((rank, core))
}

/// Nonzero invariant factors of a dense matrix, positive and in divisibility order.
pub fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot of minimal absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !Zero::is_zero(v) && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut moved = false;
            for i in t + 1..rows {
                if Zero::is_zero(&a[i][t]) {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..cols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !Zero::is_zero(&a[i][t]) {
                    moved = true;
                }
            }
            for j in t + 1..cols {
                if Zero::is_zero(&a[t][j]) {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !Zero::is_zero(&a[t][j]) {
                    moved = true;
                }
            }
            if !moved {
                break;
            }
            // move the smallest remaining entry of row/column t onto the pivot
            let mut best = (t, t);
            for i in t + 1..rows {
                if !Zero::is_zero(&a[i][t]) && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !Zero::is_zero(&a[t][j]) && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // normalize to a divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// A basis of the integral kernel of `m`, by column reduction with
/// unimodular transforms.
pub fn kernel_basis<T: Scalar>(m: &SparseMatrix<T>) -> Vec<SparseVec<BigInt>> {
    if let Some(small) = m.to_i64() {
        if let Some(k) = kernel_generic(&small) {
            return k.into_iter().map(|v| v.into_iter().map(|(i, x)| (i, BigInt::from(x))).collect()).collect();
        }
    }
    kernel_generic(&m.to_big()).expect("bigint arithmetic does not overflow")
}

fn kernel_generic<T: Scalar>(m: &SparseMatrix<T>) -> Option<Vec<SparseVec<T>>> {
    let one = T::from_i64(1);
    // reduced columns, keyed by their lowest nonzero row
    let mut owner: HashMap<usize, (SparseVec<T>, SparseVec<T>)> = HashMap::new();
    let mut kernel = Vec::new();
    for (j, col) in m.columns.iter().enumerate() {
        let mut v = col.clone();
        let mut tr: SparseVec<T> = vec![(j, one.clone())];
        while let Some((p, b)) = v.last().cloned() {
            let Some((w, tw)) = owner.get_mut(&p) else { break };
            let a = w.last().unwrap().1.clone();
            if a.divides(&b) {
                let q = b.div(&a)?.neg()?;
                v = axpy(&v, &q, w)?;
                tr = axpy(&tr, &q, tw)?;
            } else {
                let (g, s, t) = a.ext_gcd(&b)?;
                let (ag, bg) = (a.div(&g)?, b.div(&g)?);
                let scale = |x: &SparseVec<T>, c: &T| -> Option<SparseVec<T>> { axpy(&[], c, x) };
                let new_w = axpy(&scale(w, &s)?, &t, &v)?;
                let new_tw = axpy(&scale(tw, &s)?, &t, &tr)?;
                let nbg = bg.neg()?;
                let new_v = axpy(&scale(&v, &ag)?, &nbg, w)?;
                let new_tr = axpy(&scale(&tr, &ag)?, &nbg, tw)?;
                *w = new_w;
                *tw = new_tw;
                v = new_v;
                tr = new_tr;
            }
        }
        match v.last() {
            None => kernel.push(tr),
            Some(&(p, _)) => {
                owner.insert(p, (v, tr));
            }
        }
    }
    Some(kernel)
}

/// Whether every vector in `vs` lies in the integral column span of `m`.
pub fn span_contains<T: Scalar>(m: &SparseMatrix<T>, vs: &[SparseVec<T>]) -> bool {
    if vs.iter().all(Vec::is_empty) {
        return true;
    }
    smith(m) == smith(&m.with_columns(vs))
}

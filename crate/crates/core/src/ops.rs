//! Monotone maps between finite ordinals and degeneracy words.
//!
//! A degeneracy word is a bitmask over positions of a surjection
//! `[n] -> [m]`: bit `t` is set when `t` and `t+1` have the same image.
//! The simplex `s_{j1} ... s_{jk} y` with `j1 > ... > jk` has word
//! `{j1, ..., jk}`; it is written `s<j1>...s<jk>` in text.

use smallvec::SmallVec;
use std::fmt;

/// Largest supported simplicial dimension.
pub const MAX_DIM: usize = 15;

/// A monotone map `[a] -> [b]`, stored by its values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    vals: SmallVec<[u8; 8]>,
    target: u8,
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->[{}]", self.vals.as_slice(), self.target)
    }
}

impl Mono {
    pub fn new(vals: &[usize], target: usize) -> Mono {
        assert!(!vals.is_empty(), "monotone map needs a nonempty source");
        assert!(vals.windows(2).all(|w| w[0] <= w[1]), "not monotone: {vals:?}");
        assert!(*vals.last().unwrap() <= target);
        Mono { vals: vals.iter().map(|&v| v as u8).collect(), target: target as u8 }
    }

    pub fn identity(n: usize) -> Mono {
        Mono { vals: (0..=n as u8).collect(), target: n as u8 }
    }

    /// The coface `[n-1] -> [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Mono {
        debug_assert!(n >= 1 && i <= n);
        Mono { vals: (0..n as u8).map(|t| if t < i as u8 { t } else { t + 1 }).collect(), target: n as u8 }
    }

    /// The codegeneracy `[n+1] -> [n]` hitting `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Mono {
        debug_assert!(j <= n);
        Mono { vals: (0..=(n + 1) as u8).map(|t| if t <= j as u8 { t } else { t - 1 }).collect(), target: n as u8 }
    }

    pub fn constant(a: usize, b: usize, v: usize) -> Mono {
        Mono { vals: std::iter::repeat(v as u8).take(a + 1).collect(), target: b as u8 }
    }

    pub fn source(&self) -> usize {
        self.vals.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target as usize
    }

    pub fn at(&self, t: usize) -> usize {
        self.vals[t] as usize
    }

    pub fn values(&self) -> Vec<usize> {
        self.vals.iter().map(|&v| v as usize).collect()
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Mono) -> Mono {
        debug_assert_eq!(f.target(), self.source());
        Mono { vals: f.vals.iter().map(|&t| self.vals[t as usize]).collect(), target: self.target }
    }

    pub fn is_identity(&self) -> bool {
        self.source() == self.target() && self.vals.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn is_injective(&self) -> bool {
        self.vals.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.vals[0] == 0
            && *self.vals.last().unwrap() == self.target
            && self.vals.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Epi-mono factorization: `self = inj ∘ surj`.
    pub fn factor(&self) -> (Mono, Mono) {
        let mut image: SmallVec<[u8; 8]> = self.vals.clone();
        image.dedup();
        let m = image.len() - 1;
        let mut surj: SmallVec<[u8; 8]> = SmallVec::new();
        let mut k = 0u8;
        for (t, &v) in self.vals.iter().enumerate() {
            if t > 0 && v != self.vals[t - 1] {
                k += 1;
            }
            surj.push(k);
        }
        (Mono { vals: surj, target: m as u8 }, Mono { vals: image, target: self.target })
    }

    /// Points of the target not in the image, increasing.
    pub fn missing(&self) -> Vec<usize> {
        let mut hit = [false; MAX_DIM + 2];
        for &v in &self.vals {
            hit[v as usize] = true;
        }
        (0..=self.target()).filter(|&v| !hit[v]).collect()
    }

    /// Degeneracy word of a surjection.
    pub fn word(&self) -> u16 {
        debug_assert!(self.is_surjective());
        let mut w = 0u16;
        for t in 0..self.source() {
            if self.vals[t] == self.vals[t + 1] {
                w |= 1 << t;
            }
        }
        w
    }

    /// The surjection `[n] -> [n - |word|]` with the given word.
    pub fn from_word(n: usize, word: u16) -> Mono {
        let mut vals: SmallVec<[u8; 8]> = SmallVec::new();
        let mut v = 0u8;
        vals.push(0);
        for t in 0..n {
            if word & (1 << t) == 0 {
                v += 1;
            }
            vals.push(v);
        }
        Mono { vals, target: v }
    }

    /// All monotone maps `[a] -> [b]` in lexicographic order of values.
    pub fn all(a: usize, b: usize) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = vec![0; a + 1];
        loop {
            out.push(Mono::new(&cur, b));
            let mut t = a as isize;
            while t >= 0 && cur[t as usize] == b {
                t -= 1;
            }
            if t < 0 {
                break;
            }
            let v = cur[t as usize] + 1;
            for s in t as usize..=a {
                cur[s] = v;
            }
        }
        out
    }
}

pub fn word_len(word: u16) -> usize {
    word.count_ones() as usize
}

/// Word of `σ_w ∘ σ_j` where `σ_j` is the codegeneracy hitting `j` twice.
pub fn word_after_degeneracy(word: u16, j: usize) -> u16 {
    let low = word & ((1u16 << j) - 1);
    let high = (word >> j) << (j + 1);
    low | high | (1 << j)
}

/// Indices of a word, decreasing.
pub fn word_indices(word: u16) -> Vec<usize> {
    (0..16).rev().filter(|&t| word & (1 << t) != 0).collect()
}

pub fn word_to_string(word: u16) -> String {
    word_indices(word).iter().map(|j| format!("s{j}")).collect()
}

/// Parses `s2s0`-style words; indices must strictly decrease.
pub fn parse_word(s: &str) -> Option<u16> {
    if s.is_empty() {
        return Some(0);
    }
    let mut word = 0u16;
    let mut last: Option<usize> = None;
    for part in s.split('s').skip(1) {
        let j: usize = part.parse().ok()?;
        if j > MAX_DIM || last.map_or(false, |l| j >= l) {
            return None;
        }
        if !s.starts_with('s') {
            return None;
        }
        word |= 1 << j;
        last = Some(j);
    }
    if !s.starts_with('s') {
        return None;
    }
    Some(word)
}

/// Sort key giving lexicographic order on decreasing index sequences.
pub fn word_order_key(word: u16) -> Vec<usize> {
    word_indices(word)
}

/// All words on `[n]` (subsets of `0..n`), in lexicographic order, the empty word first.
pub fn words_in_order(n: usize) -> Vec<u16> {
    let mut ws: Vec<u16> = (0..(1u32 << n)).map(|w| w as u16).collect();
    ws.sort_by_key(|&w| word_order_key(w));
    ws
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_recomposes() {
        for a in 0..4 {
            for b in 0..4 {
                for m in Mono::all(a, b) {
                    let (s, i) = m.factor();
                    assert!(s.is_surjective() && i.is_injective());
                    assert_eq!(i.compose(&s), m);
                }
            }
        }
    }

    #[test]
    fn words_roundtrip() {
        for n in 0..6 {
            for w in 0..(1u16 << n) {
                let s = Mono::from_word(n, w);
                assert!(s.is_surjective());
                assert_eq!(s.word(), w);
                assert_eq!(parse_word(&word_to_string(w)), Some(w));
                for j in 0..=n {
                    let composed = s.compose(&Mono::codegeneracy(n, j));
                    assert_eq!(composed.word(), word_after_degeneracy(w, j));
                }
            }
        }
    }

    #[test]
    fn monotone_counts() {
        // C(a+b+1, a+1)
        assert_eq!(Mono::all(1, 2).len(), 6);
        assert_eq!(Mono::all(2, 2).len(), 10);
        assert_eq!(Mono::all(3, 1).len(), 5);
    }

    #[test]
    fn bad_words_rejected() {
        assert_eq!(parse_word("s0s1"), None);
        assert_eq!(parse_word("s1s1"), None);
        assert_eq!(parse_word("x1"), None);
        assert_eq!(parse_word("s2s0"), Some(0b101));
    }
}

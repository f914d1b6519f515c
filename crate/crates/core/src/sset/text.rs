//! Simplicial-set documents.
//!
//! ```text
//! sset circle
//! truncation 2
//! simplex 0 v
//! simplex 1 e : s0@v s0@v
//! end
//! ```
//!
//! Only nondegenerate simplices are listed, with faces `d_0 .. d_n` written
//! as `id` or `word@id`. An optional `lossy` line follows the truncation.

use std::collections::HashMap;
use std::fmt::Write;

use super::{FaceRef, NondegSpec, SimplicialSet};
use crate::error::Result;
use crate::ops;
use crate::text::{blocks, parse_error, parse_usize, valid_name, Block};

pub fn write_sset(name: &str, x: &SimplicialSet) -> String {
    let mut s = String::new();
    writeln!(s, "sset {name}").unwrap();
    writeln!(s, "truncation {}", x.truncation()).unwrap();
    if x.is_lossy() {
        writeln!(s, "lossy").unwrap();
    }
    for n in 0..=x.truncation() {
        for &v in x.nondegenerate(n) {
            write!(s, "simplex {n} {}", x.name(n, v)).unwrap();
            if n > 0 {
                s.push_str(" :");
                for i in 0..=n {
                    let f = x.face(n, i, v);
                    let t = x.ez(n - 1, f);
                    let m = n - 1 - ops::word_len(t.word);
                    if t.word == 0 {
                        write!(s, " {}", x.name(m, t.base)).unwrap();
                    } else {
                        write!(s, " {}@{}", ops::word_to_string(t.word), x.name(m, t.base)).unwrap();
                    }
                }
            }
            s.push('\n');
        }
    }
    s.push_str("end\n");
    s
}

pub fn parse_sset(block: &Block) -> Result<SimplicialSet> {
    let mut truncation = None;
    let mut lossy = false;
    let mut specs: Vec<Vec<NondegSpec>> = Vec::new();
    let mut names: Vec<HashMap<String, usize>> = Vec::new();
    for line in &block.body {
        let t = &line.tokens;
        match t[0].as_str() {
            "truncation" if t.len() == 2 && truncation.is_none() => {
                let n = parse_usize(line, &t[1])?;
                if n > ops::MAX_DIM {
                    return parse_error(line.no, "truncation too large");
                }
                truncation = Some(n);
                specs = vec![Vec::new(); n + 1];
                names = vec![HashMap::new(); n + 1];
            }
            "lossy" if t.len() == 1 => lossy = true,
            "simplex" => {
                let Some(top) = truncation else {
                    return parse_error(line.no, "`truncation` must come first");
                };
                if t.len() < 3 {
                    return parse_error(line.no, "expected `simplex <dim> <id>`");
                }
                let n = parse_usize(line, &t[1])?;
                if n > top {
                    return parse_error(line.no, "simplex above the truncation");
                }
                let id = &t[2];
                if !valid_name(id) || names[n].contains_key(id.as_str()) {
                    return parse_error(line.no, format!("bad or duplicate simplex id `{id}`"));
                }
                let mut faces = Vec::new();
                if n == 0 {
                    if t.len() != 3 {
                        return parse_error(line.no, "vertices have no faces");
                    }
                } else {
                    if t.len() != 4 + n + 1 || t[3] != ":" {
                        return parse_error(line.no, format!("expected `: ` followed by {} faces", n + 1));
                    }
                    for tok in &t[4..] {
                        let (word, base) = match tok.split_once('@') {
                            Some((w, b)) => match ops::parse_word(w) {
                                Some(w) if !w_is_empty(w) => (w, b),
                                _ => return parse_error(line.no, format!("bad degeneracy word in `{tok}`")),
                            },
                            None => (0, tok.as_str()),
                        };
                        let wl = ops::word_len(word);
                        if wl > n - 1 || (word as usize) >= (1 << (n - 1)) {
                            return parse_error(line.no, format!("degeneracy word in `{tok}` does not fit dimension {}", n - 1));
                        }
                        let m = n - 1 - wl;
                        match names[m].get(base) {
                            Some(&o) => faces.push(FaceRef { word, base: o }),
                            None => return parse_error(line.no, format!("unknown {m}-simplex `{base}`")),
                        }
                    }
                }
                names[n].insert(id.clone(), specs[n].len());
                specs[n].push(NondegSpec { name: id.clone(), faces });
            }
            other => return parse_error(line.no, format!("unexpected `{other}` in sset document")),
        }
    }
    let Some(top) = truncation else {
        return parse_error(block.line, "missing `truncation`");
    };
    let mut x = SimplicialSet::from_nondegenerate(top, specs).or_else(|e| parse_error(block.line, e.to_string()))?;
    x.set_lossy(lossy);
    Ok(x)
}

fn w_is_empty(w: u16) -> bool {
    w == 0
}

/// Loads the single sset document in `text`.
pub fn load_sset(text: &str) -> Result<(String, SimplicialSet)> {
    let bs = blocks(text)?;
    match bs.as_slice() {
        [b] if b.kind == "sset" => Ok((b.name.clone(), parse_sset(b)?)),
        _ => parse_error(1, "expected exactly one sset document"),
    }
}

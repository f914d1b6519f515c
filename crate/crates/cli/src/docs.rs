//! Documents and manifests.
//!
//! A manifest lists document files, one path per line, relative to the
//! manifest. Each file holds one or more documents; a document may refer to
//! documents defined before it.
//!
//! ```text
//! map collapse
//! source S0
//! target pt
//! image 0 a v
//! image 0 b v
//! end
//!
//! diagram pushout
//! shape span
//! object a S0
//! object b pt
//! object c pt
//! map a<b collapse
//! map a<c collapse
//! end
//!
//! cosimplicial G
//! canonical S0
//! end
//! ```
//!
//! A map lists the image of every nondegenerate simplex as `word@id` or
//! `id`. A diagram names its shape, the value at every object and maps for
//! enough morphisms to generate the rest. A cosimplicial document is
//! `canonical <sset>`, `constant <sset>` or `tensor <cosimplicial> <sset>`.

use std::collections::HashMap;
use std::fmt::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use hocolim_core::cosimp::{tensor, CosimplicialSS};
use hocolim_core::diagcat::Diagram;
use hocolim_core::error::{Error, Result};
use hocolim_core::fincat::text::{parse_category, write_category};
use hocolim_core::fincat::FinCat;
use hocolim_core::ops;
use hocolim_core::sset::text::{parse_sset, write_sset};
use hocolim_core::sset::{SimplicialMap, SimplicialSet};
use hocolim_core::text::{blocks, parse_error, Block, Line};
use hocolim_core::Budget;

#[derive(Clone, Debug)]
pub struct MapDoc {
    pub source: String,
    pub target: String,
    pub map: SimplicialMap,
}

#[derive(Clone, Debug)]
pub struct DiagramDoc {
    pub shape: String,
    pub objects: Vec<String>,
    /// `(morphism, map document)` generators, in file order.
    pub maps: Vec<(String, String)>,
    pub value: Arc<Diagram>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CosSpec {
    Canonical(String),
    Constant(String),
    Tensor(String, String),
}

#[derive(Clone, Debug)]
pub struct CosDoc {
    pub spec: CosSpec,
    pub value: Arc<CosimplicialSS>,
}

#[derive(Clone, Debug)]
pub enum Document {
    Category(Arc<FinCat>),
    SSet(Arc<SimplicialSet>),
    Map(MapDoc),
    Diagram(DiagramDoc),
    Cosimplicial(CosDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Category(_) => "category",
            Document::SSet(_) => "sset",
            Document::Map(_) => "map",
            Document::Diagram(_) => "diagram",
            Document::Cosimplicial(_) => "cosimplicial",
        }
    }
}

/// Loaded documents by name, remembering which file each came from.
#[derive(Clone, Debug, Default)]
pub struct Env {
    docs: Vec<(String, Document)>,
    index: HashMap<String, usize>,
    pub files: Vec<(PathBuf, Vec<String>)>,
}

fn ref_error<T>(line: &Line, kind: &str, name: &str) -> Result<T> {
    parse_error(line.no, format!("no {kind} document named `{name}` before this line"))
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Document> {
        self.index.get(name).map(|&k| &self.docs[k].1)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.docs.iter().map(|(n, _)| n.as_str())
    }

    pub fn documents(&self) -> &[(String, Document)] {
        &self.docs
    }

    fn insert(&mut self, name: String, doc: Document, line: usize) -> Result<()> {
        if self.index.contains_key(&name) {
            return parse_error(line, format!("document `{name}` is defined twice"));
        }
        self.index.insert(name.clone(), self.docs.len());
        self.docs.push((name, doc));
        Ok(())
    }

    fn sset(&self, line: &Line, name: &str) -> Result<Arc<SimplicialSet>> {
        match self.get(name) {
            Some(Document::SSet(x)) => Ok(x.clone()),
            _ => ref_error(line, "sset", name),
        }
    }

    /// Parses the documents in `text` into the environment, returning their
    /// names in order.
    pub fn load_text(&mut self, text: &str, budget: Budget) -> Result<Vec<String>> {
        let mut names = Vec::new();
        for b in blocks(text)? {
            let doc = match b.kind.as_str() {
                "category" => {
                    let c = parse_category(&b)?;
                    if c.name() != b.name {
                        return parse_error(b.line, "category name mismatch");
                    }
                    Document::Category(Arc::new(c))
                }
                "sset" => Document::SSet(Arc::new(parse_sset(&b)?)),
                "map" => Document::Map(self.parse_map(&b)?),
                "diagram" => Document::Diagram(self.parse_diagram(&b)?),
                "cosimplicial" => Document::Cosimplicial(self.parse_cosimplicial(&b, budget)?),
                other => return parse_error(b.line, format!("unknown document kind `{other}`")),
            };
            self.insert(b.name.clone(), doc, b.line)?;
            names.push(b.name);
        }
        Ok(names)
    }

    pub fn load_file(&mut self, path: &Path, budget: Budget) -> Result<Vec<String>> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        let names = self.load_text(&text, budget).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        self.files.push((path.to_path_buf(), names.clone()));
        Ok(names)
    }

    pub fn load_manifest(path: &Path, budget: Budget) -> Result<Env> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        let dir = path.parent().unwrap_or(Path::new("."));
        let mut env = Env::default();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                env.load_file(&dir.join(line), budget)?;
            }
        }
        Ok(env)
    }

    fn parse_map(&self, b: &Block) -> Result<MapDoc> {
        let (mut source, mut target): (Option<(String, Arc<SimplicialSet>)>, Option<(String, Arc<SimplicialSet>)>) = (None, None);
        let mut images: Vec<Vec<Option<usize>>> = Vec::new();
        for line in &b.body {
            let t = &line.tokens;
            match (t[0].as_str(), t.len()) {
                ("source", 2) if source.is_none() => {
                    let x = self.sset(line, &t[1])?;
                    images = (0..=x.truncation()).map(|n| vec![None; x.nondegenerate(n).len()]).collect();
                    source = Some((t[1].clone(), x));
                }
                ("target", 2) if target.is_none() => target = Some((t[1].clone(), self.sset(line, &t[1])?)),
                ("image", 4) => {
                    let (Some((_, x)), Some((_, y))) = (&source, &target) else {
                        return parse_error(line.no, "`source` and `target` must come first");
                    };
                    let n: usize = t[1].parse().or_else(|_| parse_error(line.no, "expected a dimension"))?;
                    if n > x.truncation() {
                        return parse_error(line.no, "dimension above the truncation");
                    }
                    let Some(s) = x.find_name(n, &t[2]) else {
                        return parse_error(line.no, format!("unknown {n}-simplex `{}` of the source", t[2]));
                    };
                    let Some(k) = x.ordinal(n, s) else {
                        return parse_error(line.no, format!("`{}` is degenerate", t[2]));
                    };
                    if images[n][k].is_some() {
                        return parse_error(line.no, format!("image of `{}` given twice", t[2]));
                    }
                    images[n][k] = Some(parse_ref(line, y, n, &t[3])?);
                }
                (other, _) => return parse_error(line.no, format!("unexpected `{other}` in map document")),
            }
        }
        let (Some((sname, x)), Some((tname, y))) = (source, target) else {
            return parse_error(b.line, "map needs `source` and `target`");
        };
        let mut full = Vec::with_capacity(images.len());
        for (n, level) in images.into_iter().enumerate() {
            let mut out = Vec::with_capacity(level.len());
            for (k, im) in level.into_iter().enumerate() {
                match im {
                    Some(v) => out.push(v),
                    None => return parse_error(b.line, format!("no image for `{}`", x.nondegenerate_name(n, k))),
                }
            }
            full.push(out);
        }
        let map = SimplicialMap::from_nondegenerate(x, y, &full).or_else(|e| parse_error(b.line, e.to_string()))?;
        Ok(MapDoc { source: sname, target: tname, map })
    }

    fn parse_diagram(&self, b: &Block) -> Result<DiagramDoc> {
        let mut shape: Option<(String, Arc<FinCat>)> = None;
        let mut objects: Vec<Option<String>> = Vec::new();
        let mut maps = Vec::new();
        let mut generators = Vec::new();
        for line in &b.body {
            let t = &line.tokens;
            match (t[0].as_str(), t.len()) {
                ("shape", 2) if shape.is_none() => match self.get(&t[1]) {
                    Some(Document::Category(c)) => {
                        objects = vec![None; c.object_count()];
                        shape = Some((t[1].clone(), c.clone()));
                    }
                    _ => return ref_error(line, "category", &t[1]),
                },
                ("object", 3) => {
                    let Some((_, c)) = &shape else {
                        return parse_error(line.no, "`shape` must come first");
                    };
                    let Some(o) = c.find_object(&t[1]) else {
                        return parse_error(line.no, format!("unknown object `{}`", t[1]));
                    };
                    if objects[o].is_some() {
                        return parse_error(line.no, format!("object `{}` given twice", t[1]));
                    }
                    self.sset(line, &t[2])?;
                    objects[o] = Some(t[2].clone());
                }
                ("map", 3) => {
                    let Some((_, c)) = &shape else {
                        return parse_error(line.no, "`shape` must come first");
                    };
                    let Some(u) = c.find_morphism(&t[1]) else {
                        return parse_error(line.no, format!("unknown morphism `{}`", t[1]));
                    };
                    let Some(Document::Map(m)) = self.get(&t[2]) else {
                        return ref_error(line, "map", &t[2]);
                    };
                    for (end, o) in [(&m.source, c.source(u)), (&m.target, c.target(u))] {
                        if objects[o].as_ref() != Some(end) {
                            return parse_error(line.no, format!("map `{}` does not run between the values at `{}`", t[2], t[1]));
                        }
                    }
                    maps.push((t[1].clone(), t[2].clone()));
                    generators.push((u, m.map.clone()));
                }
                (other, _) => return parse_error(line.no, format!("unexpected `{other}` in diagram document")),
            }
        }
        let Some((sname, c)) = shape else {
            return parse_error(b.line, "diagram needs a `shape`");
        };
        let mut names = Vec::with_capacity(objects.len());
        let mut values = Vec::with_capacity(objects.len());
        for (o, v) in objects.into_iter().enumerate() {
            let Some(v) = v else {
                return parse_error(b.line, format!("no value for object `{}`", c.object_name(o)));
            };
            let Some(Document::SSet(x)) = self.get(&v) else { unreachable!() };
            values.push(x.clone());
            names.push(v);
        }
        let value = Diagram::from_generators(c, values, generators).or_else(|e| parse_error(b.line, e.to_string()))?;
        Ok(DiagramDoc { shape: sname, objects: names, maps, value: Arc::new(value) })
    }

    fn parse_cosimplicial(&self, b: &Block, budget: Budget) -> Result<CosDoc> {
        let [line] = b.body.as_slice() else {
            return parse_error(b.line, "a cosimplicial document has exactly one line");
        };
        let t = &line.tokens;
        let (spec, value) = match (t[0].as_str(), t.len()) {
            ("canonical", 2) => (CosSpec::Canonical(t[1].clone()), CosimplicialSS::canonical_resolution(self.sset(line, &t[1])?)),
            ("constant", 2) => (CosSpec::Constant(t[1].clone()), Ok(CosimplicialSS::constant(self.sset(line, &t[1])?))),
            ("tensor", 3) => {
                let Some(Document::Cosimplicial(a)) = self.get(&t[1]) else {
                    return ref_error(line, "cosimplicial", &t[1]);
                };
                let k = self.sset(line, &t[2])?;
                (CosSpec::Tensor(t[1].clone(), t[2].clone()), tensor(&a.value, &k, budget).map(|r| r.0))
            }
            (other, _) => return parse_error(line.no, format!("unexpected `{other}` in cosimplicial document")),
        };
        let value = value.or_else(|e| parse_error(line.no, e.to_string()))?;
        Ok(CosDoc { spec, value: Arc::new(value) })
    }

    /// The text of the named documents, in order.
    pub fn save(&self, names: &[String]) -> String {
        let parts: Vec<String> = names.iter().map(|n| write_document(n, self.get(n).expect("known document"))).collect();
        parts.join("\n")
    }
}

/// `word@id` or `id`, naming an `n`-simplex of `y`.
fn parse_ref(line: &Line, y: &SimplicialSet, n: usize, tok: &str) -> Result<usize> {
    let (word, base) = match tok.split_once('@') {
        Some((w, b)) => match ops::parse_word(w) {
            Some(w) if w != 0 && ops::word_len(w) <= n && (w as usize) < (1 << n) => (w, b),
            _ => return parse_error(line.no, format!("bad degeneracy word in `{tok}`")),
        },
        None => (0, tok),
    };
    let m = n - ops::word_len(word);
    match y.find_name(m, base) {
        Some(x) if !y.is_degenerate(m, x) => Ok(y.apply_word(m, word, x)),
        _ => parse_error(line.no, format!("unknown {m}-simplex `{base}` of the target")),
    }
}

fn write_ref(y: &SimplicialSet, n: usize, x: usize) -> String {
    let ez = y.ez(n, x);
    let m = n - ops::word_len(ez.word);
    if ez.word == 0 {
        y.name(m, ez.base).to_string()
    } else {
        format!("{}@{}", ops::word_to_string(ez.word), y.name(m, ez.base))
    }
}

pub fn write_map(name: &str, doc: &MapDoc) -> String {
    let (x, y) = (doc.map.source(), doc.map.target());
    let mut s = String::new();
    writeln!(s, "map {name}").unwrap();
    writeln!(s, "source {}", doc.source).unwrap();
    writeln!(s, "target {}", doc.target).unwrap();
    for n in 0..=x.truncation() {
        for &v in x.nondegenerate(n) {
            writeln!(s, "image {n} {} {}", x.name(n, v), write_ref(y, n, doc.map.apply(n, v))).unwrap();
        }
    }
    s.push_str("end\n");
    s
}

pub fn write_diagram(name: &str, doc: &DiagramDoc) -> String {
    let c = doc.value.shape();
    let mut s = String::new();
    writeln!(s, "diagram {name}").unwrap();
    writeln!(s, "shape {}", doc.shape).unwrap();
    for (o, v) in doc.objects.iter().enumerate() {
        writeln!(s, "object {} {v}", c.object_name(o)).unwrap();
    }
    for (u, m) in &doc.maps {
        writeln!(s, "map {u} {m}").unwrap();
    }
    s.push_str("end\n");
    s
}

pub fn write_cosimplicial(name: &str, doc: &CosDoc) -> String {
    let line = match &doc.spec {
        CosSpec::Canonical(x) => format!("canonical {x}"),
        CosSpec::Constant(x) => format!("constant {x}"),
        CosSpec::Tensor(a, k) => format!("tensor {a} {k}"),
    };
    format!("cosimplicial {name}\n{line}\nend\n")
}

pub fn write_document(name: &str, doc: &Document) -> String {
    match doc {
        Document::Category(c) => write_category(c),
        Document::SSet(x) => write_sset(name, x),
        Document::Map(m) => write_map(name, m),
        Document::Diagram(d) => write_diagram(name, d),
        Document::Cosimplicial(c) => write_cosimplicial(name, c),
    }
}

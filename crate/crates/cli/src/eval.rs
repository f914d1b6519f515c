//! Evaluation of parsed expressions against loaded documents.

use std::sync::Arc;

use hocolim_core::cosimp::{CosimplicialMap, CosimplicialSS};
use hocolim_core::diagcat::{full_subcategory, overcategory, CosimplicialDiagram, Diagram};
use hocolim_core::error::Error;
use hocolim_core::fincat::{nerve, FinCat};
use hocolim_core::fixtures;
use hocolim_core::hocolim::{bk_hocolim, canonical_hocolim, colim, hocolim, hocored_check, re_q_sing, CanonicalHocolim, HocolimResult, Method, ReQSing};
use hocolim_core::homology::{homology, is_homology_iso};
use hocolim_core::sset::{boundary, coequalizer, coproduct, horn, point, product, standard_simplex, to_point, Exponential, SimplicialMap, SimplicialSet};
use hocolim_core::Budget;
use serde_json::json;

use crate::docs::{Document, Env};
use crate::syntax::{Diagnostic, Expr, ExprKind, Pos};

/// Settings shared by every evaluation.
#[derive(Clone, Copy, Debug)]
pub struct Context {
    pub truncation: usize,
    pub budget: Budget,
    pub method: Method,
    pub force: bool,
    pub deterministic: bool,
    /// Depth of the resolution direction for `canonical_hocolim` when not
    /// given in the expression; the truncation if `None`.
    pub depth: Option<usize>,
}

impl Default for Context {
    fn default() -> Self {
        Context { truncation: 3, budget: Budget::default(), method: Method::Srep, force: false, deterministic: false, depth: None }
    }
}

/// A JSON report with the exit code it calls for.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: serde_json::Value,
    pub exit_code: i32,
}

#[derive(Clone, Debug)]
pub enum Value {
    Number(u64),
    Str(String),
    Category(Arc<FinCat>),
    SSet(Arc<SimplicialSet>),
    Map(SimplicialMap),
    Diagram(Arc<Diagram>),
    Cosimplicial(Arc<CosimplicialSS>),
    Resolution(Arc<CosimplicialDiagram>),
    Hocolim(Box<HocolimResult>),
    Canonical(Box<CanonicalHocolim>),
    ReQSing(Box<ReQSing>),
    Record(Vec<(String, Value)>),
    Report(Report),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Number(_) => "number",
            Value::Str(_) => "string",
            Value::Category(_) => "category",
            Value::SSet(_) => "sset",
            Value::Map(_) => "map",
            Value::Diagram(_) => "diagram",
            Value::Cosimplicial(_) => "cosimplicial",
            Value::Resolution(_) => "resolution",
            Value::Hocolim(_) => "hocolim",
            Value::Canonical(_) => "canonical_hocolim",
            Value::ReQSing(_) => "re_q_sing",
            Value::Record(_) => "record",
            Value::Report(_) => "report",
        }
    }

    /// The simplicial set underlying a value, where there is one.
    pub fn underlying(&self) -> Option<Arc<SimplicialSet>> {
        match self {
            Value::SSet(x) => Some(x.clone()),
            Value::Hocolim(h) => Some(h.set.clone()),
            Value::Canonical(c) => Some(c.result.set.clone()),
            Value::ReQSing(r) => Some(r.set.clone()),
            _ => None,
        }
    }
}

/// An evaluation failure: the diagnostic and the exit code it maps to.
#[derive(Clone, Debug)]
pub struct EvalError {
    pub diagnostic: Diagnostic,
    pub exit_code: i32,
}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.diagnostic.fmt(f)
    }
}

pub const EXIT_USAGE: i32 = 64;

impl From<Diagnostic> for EvalError {
    fn from(diagnostic: Diagnostic) -> Self {
        EvalError { diagnostic, exit_code: EXIT_USAGE }
    }
}

fn fail(pos: Pos, message: impl Into<String>) -> EvalError {
    crate::syntax::eval_error(pos, message).into()
}

fn core_error(pos: Pos, e: Error) -> EvalError {
    let exit_code = match e {
        Error::BudgetExceeded { .. } => 3,
        Error::NotResolution(_) => 2,
        _ => EXIT_USAGE,
    };
    EvalError { diagnostic: crate::syntax::eval_error(pos, e.to_string()), exit_code }
}

type Eval<T> = Result<T, EvalError>;

pub struct Evaluator<'a> {
    pub env: &'a Env,
    pub ctx: Context,
}

impl<'a> Evaluator<'a> {
    pub fn new(env: &'a Env, ctx: Context) -> Self {
        Evaluator { env, ctx }
    }

    /// Evaluates `e`; errors carry the path of calls leading to the failure.
    pub fn eval(&self, e: &Expr) -> Eval<Value> {
        match &e.kind {
            ExprKind::Number(n) => Ok(Value::Number(*n)),
            ExprKind::Str(s) => Ok(Value::Str(s.clone())),
            ExprKind::Ident(name) => self.lookup(e.pos, name),
            ExprKind::Record(entries) => Ok(Value::Record(entries.iter().map(|(k, v)| Ok((k.clone(), self.eval(v)?))).collect::<Eval<_>>()?)),
            ExprKind::Call { op, method, args } => {
                let mut values = Vec::with_capacity(args.len());
                for (k, a) in args.iter().enumerate() {
                    match self.eval(a) {
                        Ok(v) => values.push(v),
                        Err(mut err) => {
                            err.diagnostic.message = format!("{op} > argument {}: {}", k + 1, err.diagnostic.message);
                            return Err(err);
                        }
                    }
                }
                let method = match method {
                    Some(m) => Some(m.parse::<Method>().map_err(|err| core_error(e.pos, err))?),
                    None => None,
                };
                self.apply(e.pos, op, method, args, values).map_err(|mut err| {
                    if !err.diagnostic.message.starts_with(op.as_str()) {
                        err.diagnostic.message = format!("{op}: {}", err.diagnostic.message);
                    }
                    err
                })
            }
        }
    }

    fn lookup(&self, pos: Pos, name: &str) -> Eval<Value> {
        let n = self.ctx.truncation;
        match self.env.get(name) {
            None => Err(Diagnostic { code: crate::syntax::Code::Unbound, pos, message: format!("unbound identifier `{name}`"), expected: Vec::new() }.into()),
            Some(Document::Category(c)) => Ok(Value::Category(c.clone())),
            Some(Document::SSet(x)) => {
                if x.truncation() != n {
                    return Err(fail(pos, format!("`{name}` has truncation {}, expected {n}", x.truncation())));
                }
                Ok(Value::SSet(x.clone()))
            }
            Some(Document::Map(m)) => {
                if m.map.source().truncation() != n {
                    return Err(fail(pos, format!("`{name}` has truncation {}, expected {n}", m.map.source().truncation())));
                }
                Ok(Value::Map(m.map.clone()))
            }
            Some(Document::Diagram(d)) => {
                if d.value.truncation() != n {
                    return Err(fail(pos, format!("`{name}` has truncation {}, expected {n}", d.value.truncation())));
                }
                Ok(Value::Diagram(d.value.clone()))
            }
            Some(Document::Cosimplicial(c)) => {
                if c.value.truncation() != n {
                    return Err(fail(pos, format!("`{name}` has truncation {}, expected {n}", c.value.truncation())));
                }
                Ok(Value::Cosimplicial(c.value.clone()))
            }
        }
    }

    fn apply(&self, pos: Pos, op: &str, method: Option<Method>, exprs: &[Expr], args: Vec<Value>) -> Eval<Value> {
        let n = self.ctx.truncation;
        let budget = self.ctx.budget;
        macro_rules! c {
            ($e:expr) => {
                $e.map_err(|e| core_error(pos, e))
            };
        }
        let arg_pos = |k: usize| exprs.get(k).map(|e| e.pos).unwrap_or(pos);
        let num = |k: usize| -> Eval<usize> {
            match &args[k] {
                Value::Number(v) => usize::try_from(*v).map_err(|_| fail(arg_pos(k), "number too large")),
                v => Err(fail(arg_pos(k), format!("expected a number, found {}", v.kind()))),
            }
        };
        let sset = |k: usize| -> Eval<Arc<SimplicialSet>> {
            args[k].underlying().ok_or_else(|| fail(arg_pos(k), format!("expected a simplicial set, found {}", args[k].kind())))
        };
        let map = |k: usize| -> Eval<SimplicialMap> {
            match &args[k] {
                Value::Map(m) => Ok(m.clone()),
                v => Err(fail(arg_pos(k), format!("expected a map, found {}", v.kind()))),
            }
        };
        let cat = |k: usize| -> Eval<Arc<FinCat>> {
            match &args[k] {
                Value::Category(x) => Ok(x.clone()),
                Value::Diagram(d) => Ok(d.shape().clone()),
                v => Err(fail(arg_pos(k), format!("expected a category, found {}", v.kind()))),
            }
        };
        let diagram = |k: usize| -> Eval<Arc<Diagram>> {
            match &args[k] {
                Value::Diagram(d) => Ok(d.clone()),
                v => Err(fail(arg_pos(k), format!("expected a diagram, found {}", v.kind()))),
            }
        };
        let string = |k: usize| -> Eval<String> {
            match &args[k] {
                Value::Str(s) => Ok(s.clone()),
                v => Err(fail(arg_pos(k), format!("expected a string, found {}", v.kind()))),
            }
        };
        let record = |k: usize| -> Eval<&Vec<(String, Value)>> {
            match &args[k] {
                Value::Record(r) => Ok(r),
                v => Err(fail(arg_pos(k), format!("expected a record, found {}", v.kind()))),
            }
        };
        let method = method.unwrap_or(self.ctx.method);
        let sset_value = |x: hocolim_core::Result<SimplicialSet>| -> Eval<Value> { Ok(Value::SSet(Arc::new(c!(x)?))) };
        match op {
            "simplex" => sset_value(standard_simplex(num(0)?, n)),
            "boundary" => sset_value(boundary(num(0)?, n)),
            "horn" => sset_value(horn(num(0)?, num(1)?, n)),
            "point" => Ok(Value::SSet(Arc::new(point(n)))),
            "nerve" => sset_value(nerve(&*cat(0)?, n, budget).map(|r| r.0)),
            "terminal" => Ok(Value::Category(Arc::new(FinCat::terminal()))),
            "arrow" => Ok(Value::Category(Arc::new(FinCat::arrow()))),
            "span" => Ok(Value::Category(Arc::new(FinCat::span()))),
            "cyclic" => {
                let k = num(0)?;
                if k == 0 {
                    return Err(fail(arg_pos(0), "the order must be positive"));
                }
                Ok(Value::Category(Arc::new(FinCat::cyclic_group(k))))
            }
            "opposite" => Ok(Value::Category(Arc::new(cat(0)?.opposite()))),
            "product" => sset_value(product(&*sset(0)?, &*sset(1)?)),
            "coproduct" => sset_value(coproduct(&[&*sset(0)?, &*sset(1)?])),
            "exponential" => Ok(Value::SSet(c!(Exponential::new(&sset(0)?, &sset(1)?, budget))?.set)),
            "quotient" => Ok(Value::SSet(c!(coequalizer(&map(0)?, &map(1)?))?.0)),
            "identity" => Ok(Value::Map(SimplicialMap::identity(sset(0)?))),
            "to_point" => Ok(Value::Map(to_point(&sset(0)?, &Arc::new(point(n))))),
            "compose" => Ok(Value::Map(c!(map(1)?.then(&map(0)?))?)),
            "comparison" => match &args[0] {
                Value::Hocolim(h) => Ok(Value::Map(h.comparison.clone().unwrap_or_else(|| h.to_colim.clone()))),
                Value::Canonical(h) => Ok(Value::Map(h.result.comparison.clone().expect("canonical results map to X"))),
                Value::ReQSing(r) => Ok(Value::Map(r.to_target.clone())),
                v => Err(fail(arg_pos(0), format!("expected a homotopy colimit, found {}", v.kind()))),
            },
            "diagram" => {
                let shape = cat(0)?;
                let mut objects: Vec<Option<Arc<SimplicialSet>>> = vec![None; shape.object_count()];
                let mut generators = Vec::new();
                for (key, v) in record(1)? {
                    if let Some(o) = shape.find_object(key) {
                        match v {
                            Value::SSet(x) => objects[o] = Some(x.clone()),
                            other => return Err(fail(arg_pos(1), format!("value at `{key}` must be a simplicial set, found {}", other.kind()))),
                        }
                    } else if let Some(u) = shape.find_morphism(key) {
                        match v {
                            Value::Map(m) => generators.push((u, m.clone())),
                            other => return Err(fail(arg_pos(1), format!("value at `{key}` must be a map, found {}", other.kind()))),
                        }
                    } else {
                        return Err(fail(arg_pos(1), format!("`{key}` is neither an object nor a morphism of `{}`", shape.name())));
                    }
                }
                let objects = objects
                    .into_iter()
                    .enumerate()
                    .map(|(o, x)| x.ok_or_else(|| fail(arg_pos(1), format!("no value for object `{}`", shape.object_name(o)))))
                    .collect::<Eval<Vec<_>>>()?;
                Ok(Value::Diagram(Arc::new(c!(Diagram::from_generators(shape, objects, generators))?)))
            }
            "constant" => Ok(Value::Diagram(Arc::new(Diagram::constant(cat(0)?, sset(1)?)))),
            "full" => {
                let objects = record(0)?
                    .iter()
                    .map(|(k, v)| match v {
                        Value::SSet(x) => Ok((k.clone(), x.clone())),
                        other => Err(fail(arg_pos(0), format!("value at `{k}` must be a simplicial set, found {}", other.kind()))),
                    })
                    .collect::<Eval<Vec<_>>>()?;
                Ok(Value::Diagram(Arc::new(c!(full_subcategory("C", &objects, budget.visits))?.1)))
            }
            "overcat" => Ok(Value::Diagram(Arc::new(c!(overcategory(&*diagram(0)?, &sset(1)?, budget))?.evaluation))),
            "resolution" => Ok(Value::Resolution(Arc::new(c!(CosimplicialDiagram::canonical(&*diagram(0)?))?))),
            "constant_resolution" => Ok(Value::Resolution(Arc::new(c!(constant_resolution(&*diagram(0)?))?))),
            "hocolim" => {
                let d = diagram(0)?;
                let result = if args.len() == 2 {
                    let Value::Resolution(g) = &args[1] else {
                        return Err(fail(arg_pos(1), format!("expected a resolution, found {}", args[1].kind())));
                    };
                    if method != Method::Bk {
                        return Err(fail(pos, "a resolution can only be used with the bk method"));
                    }
                    c!(bk_hocolim(&d, Some(g), self.ctx.force, budget))?
                } else {
                    c!(hocolim(&d, method, budget))?
                };
                Ok(Value::Hocolim(Box::new(result)))
            }
            "canonical_hocolim" => {
                let gamma = c!(CosimplicialDiagram::canonical(&*diagram(0)?))?;
                let depth = if args.len() == 3 { num(2)? } else { self.ctx.depth.unwrap_or(n) };
                if depth > n {
                    return Err(fail(arg_pos(2), format!("depth {depth} exceeds the truncation {n}")));
                }
                Ok(Value::Canonical(Box::new(c!(canonical_hocolim(&gamma, &sset(1)?, depth, method, budget))?)))
            }
            "re_q_sing" => Ok(Value::ReQSing(Box::new(c!(re_q_sing(&*diagram(0)?, &sset(1)?, budget))?))),
            "colim" => Ok(Value::SSet(c!(colim(&*diagram(0)?))?.set)),
            "homology" => {
                let x = sset(0)?;
                let h = homology(&x);
                Ok(Value::Report(Report { json: json!({ "kind": "homology", "summary": h.summary(), "homology": h }), exit_code: 0 }))
            }
            "check_we" => {
                let v = is_homology_iso(&map(0)?);
                let exit_code = if v.iso { 0 } else { 1 };
                Ok(Value::Report(Report { json: json!({ "kind": "check_we", "verdict": v }), exit_code }))
            }
            "hocored_check" => {
                let name = string(0)?;
                let inst = match name.as_str() {
                    "relabelling" => fixtures::hocored_relabelling(n),
                    "replacement" => c!(fixtures::hocored_replacement(&Arc::new(c!(standard_simplex(1, n))?), budget))?,
                    "negative" => fixtures::hocored_negative(n),
                    _ => return Err(fail(arg_pos(0), format!("unknown instance `{name}` (expected relabelling, replacement or negative)"))),
                };
                let v = c!(hocored_check(&inst.f, &inst.g, &inst.eta, &inst.theta, &inst.x, method, budget))?;
                let exit_code = v.status.exit_code();
                Ok(Value::Report(Report { json: json!({ "kind": "hocored_check", "instance": name, "verdict": v }), exit_code }))
            }
            "verify" => {
                let name = string(0)?;
                match crate::suites::run_suite(&name, self.env, self.ctx) {
                    Some(r) => Ok(Value::Report(r)),
                    None => Err(fail(arg_pos(0), format!("unknown suite `{name}`"))),
                }
            }
            _ => Err(fail(pos, format!("unknown operation `{op}`"))),
        }
    }
}

/// The constant cosimplicial diagram on `D`; not a resolution.
pub fn constant_resolution(d: &Diagram) -> hocolim_core::Result<CosimplicialDiagram> {
    let objects: Vec<Arc<CosimplicialSS>> = d.objects().iter().map(|x| Arc::new(CosimplicialSS::constant(x.clone()))).collect();
    let top = d.truncation();
    let morphisms = (0..d.shape().morphism_count())
        .map(|u| {
            let (a, b) = (d.shape().source(u), d.shape().target(u));
            CosimplicialMap::new(objects[a].clone(), objects[b].clone(), vec![d.morphism(u).clone(); top + 1])
        })
        .collect::<hocolim_core::Result<Vec<_>>>()?;
    CosimplicialDiagram::new(d.shape().clone(), objects, morphisms)
}

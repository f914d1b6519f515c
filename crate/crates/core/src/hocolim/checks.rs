use serde::Serialize;

use super::{hocolim, pushforward, Method};
use crate::budget::Budget;
use crate::diagcat::Diagram;
use crate::error::{invalid, Error, Result};
use crate::fincat::{Functor, NatTrans};
use crate::homology::{is_homology_iso, IsoVerdict};
use crate::sset::{BisimplicialSet, SimplicialMap};

/// Outcome of a check; the exit code of the command line tool.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Iso,
    NotIso,
    HypothesesNotMet,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Iso => 0,
            Status::NotIso => 1,
            Status::HypothesesNotMet => 2,
            Status::BudgetExceeded => 3,
        }
    }
}

/// One map checked by the homology oracle.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub label: String,
    pub iso: bool,
    /// Identity maps are accepted without running the oracle.
    pub trivial: bool,
    pub failing_degree: Option<usize>,
    pub source: String,
    pub target: String,
}

impl Certificate {
    fn from_verdict(label: String, v: &IsoVerdict) -> Certificate {
        Certificate {
            label,
            iso: v.iso,
            trivial: false,
            failing_degree: v.failing_degree,
            source: v.source.summary(),
            target: v.target.summary(),
        }
    }

    fn check(label: String, f: &SimplicialMap) -> Certificate {
        let identity = std::sync::Arc::ptr_eq(f.source(), f.target()) && f.levels().iter().all(|l| l.iter().enumerate().all(|(a, &b)| a == b));
        if identity {
            return Certificate { label, iso: true, trivial: true, failing_degree: None, source: String::new(), target: String::new() };
        }
        Certificate::from_verdict(label, &is_homology_iso(f))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseVerdict {
    pub status: Status,
    pub horizontal: Vec<Certificate>,
    pub conclusion: Option<Certificate>,
}

/// If every horizontal operator of `Z` is a homology iso, checks that the
/// inclusion of column 0 into the diagonal is one too.
pub fn degeneracy_collapse_check(z: &BisimplicialSet) -> CollapseVerdict {
    let top = z.truncation();
    let mut horizontal = Vec::new();
    for p in 1..=top {
        for i in 0..=p {
            horizontal.push(Certificate::check(format!("d{i} from column {p}"), z.hface(p, i)));
        }
    }
    for p in 0..top {
        for j in 0..=p {
            horizontal.push(Certificate::check(format!("s{j} from column {p}"), z.hdegen(p, j)));
        }
    }
    if horizontal.iter().any(|c| !c.iso) {
        return CollapseVerdict { status: Status::HypothesesNotMet, horizontal, conclusion: None };
    }
    let diag = std::sync::Arc::new(z.diagonal());
    let v = is_homology_iso(&z.column_zero_inclusion(&diag));
    let status = if v.iso { Status::Iso } else { Status::NotIso };
    CollapseVerdict { status, horizontal, conclusion: Some(Certificate::from_verdict("column 0 -> diagonal".into(), &v)) }
}

/// One natural transformation in a zig-zag, pointing forward (from the
/// current stage to the next) or backward.
#[derive(Clone, Debug)]
pub struct ZigZagStep {
    pub trans: NatTrans,
    pub forward: bool,
}

/// A zig-zag of natural transformations between two functors.
#[derive(Clone, Debug)]
pub struct ZigZag {
    pub steps: Vec<ZigZagStep>,
}

impl ZigZag {
    pub fn single(trans: NatTrans) -> ZigZag {
        ZigZag { steps: vec![ZigZagStep { trans, forward: true }] }
    }

    /// The zig-zag connects `from` to `to`.
    pub fn check(&self, from: &Functor, to: &Functor) -> Result<()> {
        let mut stage = from.clone();
        for (k, s) in self.steps.iter().enumerate() {
            s.trans.check()?;
            let (start, end) = if s.forward { (s.trans.source(), s.trans.target()) } else { (s.trans.target(), s.trans.source()) };
            if *start != stage {
                return invalid(format!("zig-zag step {k} does not start where the previous one ended"));
            }
            stage = end.clone();
        }
        if stage != *to {
            return invalid("zig-zag does not end at the identity");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HocoredVerdict {
    pub status: Status,
    pub method: Method,
    /// Hypothesis (i): `X(η_i)`, and (ii): `X(g θ_j)`, for every step.
    pub hypotheses: Vec<Certificate>,
    /// `g_*: hocolim_J g^*X -> hocolim_I X`, when the hypotheses hold.
    pub conclusion: Option<Certificate>,
    pub notes: Vec<String>,
}

/// Checks the hypotheses of the reduction criterion for `g: J -> I`,
/// `f: I -> J`, zig-zags `η: gf ⇝ Id_I` and `θ: fg ⇝ Id_J`, and then
/// whether `g_*` is a homology iso.
pub fn hocored_check(f: &Functor, g: &Functor, eta: &ZigZag, theta: &ZigZag, x: &Diagram, method: Method, budget: Budget) -> Result<HocoredVerdict> {
    let (i_cat, j_cat) = (f.source(), f.target());
    if **g.source() != **j_cat || **g.target() != **i_cat || **x.shape() != **i_cat {
        return Err(Error::ShapeMismatch("expected f: I -> J, g: J -> I and a diagram on I".into()));
    }
    eta.check(&f.then(g)?, &Functor::identity(i_cat))?;
    theta.check(&g.then(f)?, &Functor::identity(j_cat))?;
    let mut hypotheses = Vec::new();
    for (k, s) in eta.steps.iter().enumerate() {
        for i in 0..i_cat.object_count() {
            let m = s.trans.component(i);
            hypotheses.push(Certificate::check(format!("(i) step {k}: X({}) at {}", i_cat.morphism(m).name, i_cat.object_name(i)), x.morphism(m)));
        }
    }
    for (k, s) in theta.steps.iter().enumerate() {
        for j in 0..j_cat.object_count() {
            let m = g.morphism(s.trans.component(j));
            hypotheses.push(Certificate::check(format!("(ii) step {k}: X(g {}) at {}", j_cat.morphism(s.trans.component(j)).name, j_cat.object_name(j)), x.morphism(m)));
        }
    }
    let mut notes = Vec::new();
    if hypotheses.iter().all(|c| c.trivial) {
        notes.push("every hypothesis map is an identity".into());
    }
    if hypotheses.iter().any(|c| !c.iso) {
        return Ok(HocoredVerdict { status: Status::HypothesesNotMet, method, hypotheses, conclusion: None, notes });
    }
    let computed = (|| -> Result<SimplicialMap> {
        let src = hocolim(&x.pullback(g)?, method, budget)?;
        let tgt = hocolim(x, method, budget)?;
        pushforward(g, &src, &tgt)
    })();
    let g_star = match computed {
        Ok(m) => m,
        Err(Error::BudgetExceeded { what, limit }) => {
            notes.push(format!("budget exceeded while {what} (limit {limit})"));
            return Ok(HocoredVerdict { status: Status::BudgetExceeded, method, hypotheses, conclusion: None, notes });
        }
        Err(e) => return Err(e),
    };
    let v = is_homology_iso(&g_star);
    let status = if v.iso { Status::Iso } else { Status::NotIso };
    Ok(HocoredVerdict { status, method, hypotheses, conclusion: Some(Certificate::from_verdict("g_*".into(), &v)), notes })
}

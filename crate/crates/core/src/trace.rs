//! Machine- and human-readable renderings of chain runs and invariant
//! reports. Both are deterministic: generators are printed monic with
//! grevlex-descending terms, and entries keep arena order.

use std::fmt::Write as _;

use num_rational::Rational64;
use serde::Serialize;
use serde_json::Value;

use crate::chain::{ChainReport, GenId, Payload, Provenance};
use crate::groebner::RadicalQuality;
use crate::invariants::InvariantReport;
use crate::monomial::MonomialOrder;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GeneratorText {
    Function(String),
    /// One polynomial per `dz^j` slot.
    Form(Vec<String>),
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TraceEntry {
    pub id: GenId,
    pub generator: GeneratorText,
    pub order: String,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TraceStep {
    pub k: usize,
    #[serde(rename = "M")]
    pub m: Vec<TraceEntry>,
    #[serde(rename = "J")]
    pub j: Vec<TraceEntry>,
    #[serde(rename = "I")]
    pub i: Vec<TraceEntry>,
    pub radical_quality: RadicalQuality,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InequalityTrace {
    pub name: String,
    pub holds: bool,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvariantTrace {
    pub s: Option<usize>,
    pub q: Option<u32>,
    pub p_lower: Option<String>,
    pub p_upper: Option<u32>,
    pub type_lower: Option<String>,
    pub type_upper: Option<u32>,
    pub inequalities: Vec<InequalityTrace>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ChainTrace {
    pub n: usize,
    pub convention: crate::chain::Convention,
    pub steps: Vec<TraceStep>,
    pub status: crate::chain::ChainStatus,
    pub final_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantTrace>,
}

fn rational(r: Rational64) -> String {
    r.to_string()
}

fn id_list(ids: &[GenId]) -> String {
    ids.iter().map(|id| format!("g{id}")).collect::<Vec<_>>().join(",")
}

pub fn provenance_text(p: &Provenance) -> String {
    match p {
        Provenance::InitR => "init_r".into(),
        Provenance::InitSigma { index } => format!("init_sigma({})", index + 1),
        Provenance::Gradient { of } => format!("gradient(g{of})"),
        Provenance::Determinant { rows } => format!("determinant({})", id_list(rows)),
        Provenance::Radical { witnesses, root } => format!("radical(root={root}; {})", id_list(witnesses)),
        Provenance::Carried { from } => format!("carried(g{from})"),
    }
}

fn entry(report: &ChainReport, id: GenId) -> TraceEntry {
    let g = report.generator(id);
    let order = MonomialOrder::Grevlex;
    let generator = match &g.payload {
        Payload::DefiningFunction => GeneratorText::Function("r".into()),
        Payload::Function(p) => GeneratorText::Function(p.monic(&order).to_string()),
        Payload::Form(c) => GeneratorText::Form(c.monic().coeffs().iter().map(|p| p.to_string()).collect()),
    };
    TraceEntry { id, generator, order: rational(g.order), provenance: provenance_text(&g.provenance) }
}

pub fn invariant_trace(report: &InvariantReport) -> InvariantTrace {
    let number = |v: &num_bigint::BigUint| -> Value {
        match u64::try_from(v) {
            Ok(x) => Value::from(x),
            Err(_) => Value::from(v.to_string()),
        }
    };
    InvariantTrace {
        s: report.s.finite(),
        q: report.q,
        p_lower: report.p_lower.map(rational),
        p_upper: report.p_upper,
        type_lower: report.type_lower.map(rational),
        type_upper: report.type_upper,
        inequalities: report
            .inequalities
            .iter()
            .map(|c| InequalityTrace { name: c.name.to_string(), holds: c.holds, lhs: number(&c.lhs), rhs: number(&c.rhs) })
            .collect(),
    }
}

pub fn chain_trace(report: &ChainReport, invariants: Option<&InvariantReport>) -> ChainTrace {
    let steps = report
        .steps
        .iter()
        .map(|s| TraceStep {
            k: s.k,
            m: s.m.iter().map(|&id| entry(report, id)).collect(),
            j: s.j.iter().map(|&id| entry(report, id)).collect(),
            i: s.i.iter().map(|&id| entry(report, id)).collect(),
            radical_quality: s.radical_quality,
        })
        .collect();
    ChainTrace {
        n: report.spec.n(),
        convention: report.convention,
        steps,
        status: report.status,
        final_order: report.final_order.map(rational),
        invariants: invariants.map(invariant_trace),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json(trace: &ChainTrace) -> String {
    let mut s = serde_json::to_string_pretty(trace).expect("trace serializes");
    s.push('\n');
    s
}

pub fn invariants_to_json(t: &InvariantTrace) -> String {
    let mut s = serde_json::to_string_pretty(t).expect("report serializes");
    s.push('\n');
    s
}

fn generator_text(g: &GeneratorText) -> String {
    match g {
        GeneratorText::Function(s) => s.clone(),
        GeneratorText::Form(slots) => format!("[{}]", slots.join(", ")),
    }
}

fn status_text(s: crate::chain::ChainStatus) -> &'static str {
    use crate::chain::ChainStatus::*;
    match s {
        Running => "RUNNING",
        Success => "SUCCESS",
        Stalled => "STALLED",
        CapExceeded => "CAP_EXCEEDED",
    }
}

fn quality_text(q: RadicalQuality) -> &'static str {
    match q {
        RadicalQuality::Exact => "EXACT",
        RadicalQuality::MembershipOnly => "MEMBERSHIP_ONLY",
    }
}

pub fn invariants_text(t: &InvariantTrace) -> String {
    let mut out = String::new();
    let show = |v: Option<String>| v.unwrap_or_else(|| "unknown (cap)".into());
    let _ = writeln!(out, "s = {}", show(t.s.map(|v| v.to_string())));
    let _ = writeln!(out, "q = {}", show(t.q.map(|v| v.to_string())));
    let _ = writeln!(out, "p in [{}, {}]", show(t.p_lower.clone()), show(t.p_upper.map(|v| v.to_string())));
    let _ = writeln!(out, "type in [{}, {}]", show(t.type_lower.clone()), show(t.type_upper.map(|v| v.to_string())));
    for c in &t.inequalities {
        let verdict = if c.holds { "holds" } else { "VIOLATED" };
        let _ = writeln!(out, "  {:<20} {} <= {}  {verdict}", c.name, c.lhs, c.rhs);
    }
    out
}

pub fn to_text(trace: &ChainTrace) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, convention = {}", trace.n, serde_json::to_value(trace.convention).unwrap().as_str().unwrap());
    for step in &trace.steps {
        let _ = writeln!(out, "step {}", step.k);
        for (label, list) in [("M", &step.m), ("J", &step.j), ("I", &step.i)] {
            let _ = writeln!(out, "  {label}_{}:", step.k);
            for e in list {
                let _ = writeln!(out, "    g{:<4} order {:<6} {}  <- {}", e.id, e.order, generator_text(&e.generator), e.provenance);
            }
        }
        let _ = writeln!(out, "  radical: {}", quality_text(step.radical_quality));
    }
    let _ = writeln!(out, "status: {}", status_text(trace.status));
    if let Some(o) = &trace.final_order {
        let _ = writeln!(out, "final order: {o}");
    }
    if let Some(inv) = &trace.invariants {
        out.push_str(&invariants_text(inv));
    }
    out
}

//! The multiplier chain `M_1 -> J_1 -> I_1 -> M_2 -> ...` for a special
//! domain `r = Re(w) + sum_j |F_j(z)|^2`, restricted to (0,1)-forms.
//!
//! Every generator ever produced lives in an arena together with its assigned
//! order of subellipticity and the rule that produced it, so the whole
//! derivation can be replayed and checked after the fact.

use num_rational::Rational64;
use rayon::prelude::*;

use crate::covector::{jacobian_determinant, Covector};
use crate::error::{AlgebraError, Result};
use crate::groebner::{
    ideal_equal, ideal_member, radical_generators, radical_member, Ideal, RadicalCase, RadicalQuality,
    ResourceCaps,
};
use crate::poly::Polynomial;

/// The input of the algorithm: `n` and the holomorphic data `F_1..F_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainSpec {
    n: usize,
    functions: Vec<Polynomial>,
}

impl DomainSpec {
    pub fn new(n: usize, functions: Vec<Polynomial>) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::Invalid("need at least one variable".into()));
        }
        if functions.is_empty() {
            return Err(AlgebraError::Invalid("need at least one function F".into()));
        }
        for f in &functions {
            if f.nvars() != n {
                return Err(AlgebraError::VarCountMismatch { left: n, right: f.nvars() });
            }
            if !f.vanishes_at_origin() {
                return Err(AlgebraError::NotVanishing(format!("F = {f}")));
            }
        }
        Ok(Self { n, functions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn functions(&self) -> &[Polynomial] {
        &self.functions
    }

    /// `<F_1, ..., F_N>`.
    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.n, self.functions.clone()).unwrap()
    }
}

/// How the initial module `M_1` is populated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `{dF_j}`, `j = 1..N`.
    #[default]
    SiuDirect,
    /// `{sum_k conj(dF_k/dz_j) dF_k}`, `j = 1..n`.
    Hermitian,
}

pub type GenId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    /// The defining function `r`, which lives outside the z-polynomials.
    DefiningFunction,
    Function(Polynomial),
    Form(Covector),
}

/// The rule that produced a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `r` itself.
    InitR,
    /// Initial form number `index` of `M_1`.
    InitSigma { index: usize },
    /// `df` for the function generator `of`.
    Gradient { of: GenId },
    /// Coefficient of `rows[0] ^ ... ^ rows[n-1] ^ dr`.
    Determinant { rows: Vec<GenId> },
    /// `f` with `f^root` in the ideal generated by `witnesses`.
    Radical { witnesses: Vec<GenId>, root: u32 },
    /// Carried unchanged from `from`.
    Carried { from: GenId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGenerator {
    pub id: GenId,
    pub payload: Payload,
    pub order: Rational64,
    pub provenance: Provenance,
}

impl OrderedGenerator {
    pub fn function(&self) -> Option<&Polynomial> {
        match &self.payload {
            Payload::Function(p) => Some(p),
            _ => None,
        }
    }

    pub fn form(&self) -> Option<&Covector> {
        match &self.payload {
            Payload::Form(c) => Some(c),
            _ => None,
        }
    }
}

/// Order assigned by each rule, given the orders of the inputs.
pub mod rules {
    use num_rational::Rational64;

    /// `r` has order 1.
    pub fn defining_function() -> Rational64 {
        Rational64::from_integer(1)
    }

    /// Initial forms have order 1/2.
    pub fn initial_form() -> Rational64 {
        Rational64::new(1, 2)
    }

    /// `df` has half the order of `f`.
    pub fn gradient(of: Rational64) -> Rational64 {
        of / 2
    }

    /// A determinant has the minimum order of its rows.
    pub fn determinant(rows: &[Rational64]) -> Rational64 {
        rows.iter().copied().min().expect("at least one row")
    }

    /// An `m`-th root divides the witness order by `m`.
    pub fn radical(witnesses: &[Rational64], root: u32) -> Rational64 {
        rows_min(witnesses) / root as i64
    }

    fn rows_min(v: &[Rational64]) -> Rational64 {
        v.iter().copied().min().expect("at least one witness")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ChainStatus {
    Running,
    Success,
    Stalled,
    CapExceeded,
}

/// Record of one completed step `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub k: usize,
    pub m: Vec<GenId>,
    pub j: Vec<GenId>,
    pub i: Vec<GenId>,
    pub radical_quality: RadicalQuality,
    pub radical_case: RadicalCase,
}

/// The live state of a chain between steps.
#[derive(Clone, Debug)]
pub struct ChainState {
    pub spec: DomainSpec,
    pub convention: Convention,
    pub arena: Vec<OrderedGenerator>,
    /// Index of `r` in the arena.
    pub r: GenId,
    /// Current step `k`.
    pub step: usize,
    pub m: Vec<GenId>,
    pub j: Vec<GenId>,
    /// `I_{k-1}` until [`radical_step`](Self::radical_step) runs, `I_k` after.
    pub i: Vec<GenId>,
    pub status: ChainStatus,
    pub radical_quality: RadicalQuality,
    pub radical_case: Option<RadicalCase>,
}

/// Builds `M_1` and the empty `I_0`; records `r` at order 1.
pub fn init_chain(spec: &DomainSpec, convention: Convention) -> ChainState {
    let n = spec.n();
    let mut state = ChainState {
        spec: spec.clone(),
        convention,
        arena: Vec::new(),
        r: 0,
        step: 1,
        m: Vec::new(),
        j: Vec::new(),
        i: Vec::new(),
        status: ChainStatus::Running,
        radical_quality: RadicalQuality::Exact,
        radical_case: None,
    };
    state.r = state.push(Payload::DefiningFunction, rules::defining_function(), Provenance::InitR);

    let differentials: Vec<Covector> = spec.functions().iter().map(Covector::differential).collect();
    let forms: Vec<Covector> = match convention {
        Convention::SiuDirect => differentials,
        Convention::Hermitian => (0..n)
            .map(|j| {
                let mut acc = Covector::new(vec![Polynomial::zero(n); n]).unwrap();
                for (f, df) in spec.functions().iter().zip(&differentials) {
                    let c = f.partial_derivative(j).unwrap().conjugate_coeffs();
                    acc = acc.add(&df.scale(&c));
                }
                acc
            })
            .collect(),
    };
    for (index, form) in forms.into_iter().enumerate() {
        if form.is_zero() {
            continue;
        }
        let cand = (form, rules::initial_form(), Provenance::InitSigma { index });
        state.insert_form(cand);
    }
    state
}

impl ChainState {
    pub fn generator(&self, id: GenId) -> &OrderedGenerator {
        &self.arena[id]
    }

    fn push(&mut self, payload: Payload, order: Rational64, provenance: Provenance) -> GenId {
        let id = self.arena.len();
        self.arena.push(OrderedGenerator { id, payload, order, provenance });
        id
    }

    fn order_of(&self, id: GenId) -> Rational64 {
        self.arena[id].order
    }

    /// Adds a covector to `M` unless it is already there up to a constant; on
    /// a duplicate the larger order wins.
    fn insert_form(&mut self, (form, order, prov): (Covector, Rational64, Provenance)) {
        if let Some(pos) = self.m.iter().position(|&id| self.arena[id].form().unwrap().equal_up_to_constant(&form)) {
            if order > self.order_of(self.m[pos]) {
                let id = self.push(Payload::Form(form), order, prov);
                self.m[pos] = id;
            }
            return;
        }
        let id = self.push(Payload::Form(form), order, prov);
        self.m.push(id);
    }

    fn functions_of(&self, ids: &[GenId]) -> Vec<Polynomial> {
        ids.iter().map(|&id| self.arena[id].function().unwrap().clone()).collect()
    }

    /// The ideal spanned by a list of function generators.
    pub fn ideal_of(&self, ids: &[GenId]) -> Ideal {
        Ideal::new(self.spec.n(), self.functions_of(ids)).unwrap()
    }

    /// `J_k`: `I_{k-1}` carried forward plus every nonzero `n x n` determinant
    /// of generators of `M_k`, deduplicated up to constants.
    pub fn determinant_step(&mut self) -> Vec<GenId> {
        let n = self.spec.n();
        let mut entries: Vec<(Polynomial, Rational64, Provenance)> = self
            .i
            .iter()
            .map(|&id| (self.arena[id].function().unwrap().clone(), self.order_of(id), Provenance::Carried { from: id }))
            .collect();

        let subsets = combinations(self.m.len(), n);
        let dets: Vec<Option<(Polynomial, Rational64, Provenance)>> = subsets
            .par_iter()
            .map(|subset| {
                let rows: Vec<GenId> = subset.iter().map(|&s| self.m[s]).collect();
                let forms: Vec<Covector> = rows.iter().map(|&id| self.arena[id].form().unwrap().clone()).collect();
                let det = jacobian_determinant(&forms).expect("square by construction");
                if det.is_zero() {
                    return None;
                }
                let orders: Vec<Rational64> = rows.iter().map(|&id| self.arena[id].order).collect();
                Some((det, rules::determinant(&orders), Provenance::Determinant { rows }))
            })
            .collect();
        let mut dets: Vec<_> = dets.into_iter().flatten().collect();
        dets.sort_by(|a, b| canonical_key(&a.0).cmp(&canonical_key(&b.0)).then(b.1.cmp(&a.1)));
        entries.extend(dets);

        let mut j: Vec<GenId> = Vec::new();
        for (poly, order, prov) in entries {
            let dup = j.iter().position(|&id| self.arena[id].function().unwrap().equal_up_to_constant(&poly));
            match dup {
                Some(pos) if order > self.order_of(j[pos]) => {
                    let id = self.push(Payload::Function(poly), order, prov);
                    j[pos] = id;
                }
                Some(_) => {}
                None => {
                    let id = self.push(Payload::Function(poly), order, prov);
                    j.push(id);
                }
            }
        }
        self.j = j.clone();
        j
    }

    /// `I_k`: generators of the radical of `J_k`, each root extraction
    /// dividing the witness order by the root taken.
    pub fn radical_step(&mut self, caps: &ResourceCaps) -> Result<Vec<GenId>> {
        let n = self.spec.n();
        let j_ideal = self.ideal_of(&self.j);
        let result = radical_generators(&j_ideal, self.spec.functions(), caps)?;
        let j_ids = self.j.clone();

        let witnesses: Vec<GenId> = match result.case {
            RadicalCase::Unit => {
                // a constant generator certifies 1 directly; otherwise 1 comes
                // from a combination of all of J
                let constants: Vec<GenId> =
                    j_ids.iter().copied().filter(|&id| self.arena[id].function().unwrap().as_constant().is_some()).collect();
                best_single(&constants, self).map(|id| vec![id]).unwrap_or_else(|| j_ids.clone())
            }
            RadicalCase::LocalUnit => {
                let units: Vec<GenId> =
                    j_ids.iter().copied().filter(|&id| !self.arena[id].function().unwrap().vanishes_at_origin()).collect();
                best_single(&units, self).map(|id| vec![id]).unwrap_or_else(|| j_ids.clone())
            }
            _ => j_ids.clone(),
        };

        let mut out = Vec::new();
        let mut carried = j_ids.iter();
        for g in &result.generators {
            let id = match g.root {
                None => {
                    let from = *carried.next().expect("carried generators come first");
                    self.push(Payload::Function(g.poly.clone()), self.order_of(from), Provenance::Carried { from })
                }
                Some(root) => {
                    let orders: Vec<Rational64> = witnesses.iter().map(|&w| self.order_of(w)).collect();
                    let order = rules::radical(&orders, root);
                    self.push(
                        Payload::Function(g.poly.clone()),
                        order,
                        Provenance::Radical { witnesses: witnesses.clone(), root },
                    )
                }
            };
            out.push(id);
        }
        debug_assert!(out.iter().all(|&id| self.arena[id].function().unwrap().nvars() == n));
        self.i = out.clone();
        self.radical_quality = result.quality;
        self.radical_case = Some(result.case);
        Ok(out)
    }

    /// `M_{k+1} = M_k ∪ {df : f ∈ I_k}`, each `df` at half the order of `f`.
    pub fn gradient_step(&mut self) -> Vec<GenId> {
        let ids = self.i.clone();
        for id in ids {
            let f = self.arena[id].function().unwrap();
            let df = Covector::differential(f);
            if df.is_zero() {
                continue;
            }
            let order = rules::gradient(self.order_of(id));
            self.insert_form((df, order, Provenance::Gradient { of: id }));
        }
        self.step += 1;
        self.m.clone()
    }

    /// Order recomputed from the provenance tree alone.
    pub fn derived_order(&self, id: GenId) -> Rational64 {
        match &self.arena[id].provenance {
            Provenance::InitR => rules::defining_function(),
            Provenance::InitSigma { .. } => rules::initial_form(),
            Provenance::Gradient { of } => rules::gradient(self.derived_order(*of)),
            Provenance::Determinant { rows } => {
                let o: Vec<_> = rows.iter().map(|&r| self.derived_order(r)).collect();
                rules::determinant(&o)
            }
            Provenance::Radical { witnesses, root } => {
                let o: Vec<_> = witnesses.iter().map(|&w| self.derived_order(w)).collect();
                rules::radical(&o, *root)
            }
            Provenance::Carried { from } => self.derived_order(*from),
        }
    }
}

fn best_single(ids: &[GenId], state: &ChainState) -> Option<GenId> {
    ids.iter().copied().max_by(|&a, &b| state.order_of(a).cmp(&state.order_of(b)).then(b.cmp(&a)))
}

/// Sort key independent of how the polynomial was produced.
fn canonical_key(p: &Polynomial) -> String {
    p.monic(&crate::monomial::MonomialOrder::Grevlex).to_string()
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for t in i..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Everything a finished run produced.
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub spec: DomainSpec,
    pub convention: Convention,
    pub arena: Vec<OrderedGenerator>,
    pub r: GenId,
    pub steps: Vec<StepRecord>,
    pub status: ChainStatus,
    /// Order of the unit generator on success.
    pub final_order: Option<Rational64>,
    /// The error that stopped the run, when `status` is `CapExceeded`.
    pub cap_error: Option<AlgebraError>,
}

impl ChainReport {
    pub fn step(&self, k: usize) -> Option<&StepRecord> {
        self.steps.iter().find(|s| s.k == k)
    }

    pub fn generator(&self, id: GenId) -> &OrderedGenerator {
        &self.arena[id]
    }

    fn ideal_of(&self, ids: &[GenId]) -> Ideal {
        let polys = ids.iter().map(|&id| self.arena[id].function().unwrap().clone()).collect();
        Ideal::new(self.spec.n(), polys).unwrap()
    }

    /// `J_k` as an ideal.
    pub fn j_ideal(&self, k: usize) -> Option<Ideal> {
        self.step(k).map(|s| self.ideal_of(&s.j))
    }

    /// `I_k` as an ideal.
    pub fn i_ideal(&self, k: usize) -> Option<Ideal> {
        self.step(k).map(|s| self.ideal_of(&s.i))
    }

    /// Resolve names like `J2` or `I1`.
    pub fn named_ideal(&self, name: &str) -> Option<Ideal> {
        let (kind, idx) = name.split_at(1.min(name.len()));
        let k: usize = idx.parse().ok()?;
        match kind {
            "J" | "j" => self.j_ideal(k),
            "I" | "i" => self.i_ideal(k),
            _ => None,
        }
    }

    pub fn final_step(&self) -> Option<&StepRecord> {
        self.steps.last()
    }
}

/// Runs the chain until `1 ∈ I_k` (success), `I_k = I_{k-1}` (stalled), or a
/// cap is hit.
pub fn run_chain(spec: &DomainSpec, caps: &ResourceCaps, convention: Convention) -> ChainReport {
    let mut state = init_chain(spec, convention);
    let mut steps = Vec::new();
    let mut prev_i = Ideal::zero(spec.n());
    let mut final_order = None;
    let mut cap_error = None;

    let status = loop {
        state.determinant_step();
        if let Err(e) = state.radical_step(caps) {
            cap_error = Some(e);
            break ChainStatus::CapExceeded;
        }
        steps.push(StepRecord {
            k: state.step,
            m: state.m.clone(),
            j: state.j.clone(),
            i: state.i.clone(),
            radical_quality: state.radical_quality,
            radical_case: state.radical_case.unwrap(),
        });
        let cur_i = state.ideal_of(&state.i);
        match cur_i.contains_unit(caps) {
            Ok(true) => {
                final_order = state
                    .i
                    .iter()
                    .filter(|&&id| state.arena[id].function().unwrap().as_constant().is_some())
                    .map(|&id| state.arena[id].order)
                    .max();
                break ChainStatus::Success;
            }
            Ok(false) => {}
            Err(e) => {
                cap_error = Some(e);
                break ChainStatus::CapExceeded;
            }
        }
        match ideal_equal(&cur_i, &prev_i, caps) {
            Ok(true) => break ChainStatus::Stalled,
            Ok(false) => {}
            Err(e) => {
                cap_error = Some(e);
                break ChainStatus::CapExceeded;
            }
        }
        if state.step >= caps.max_steps {
            break ChainStatus::CapExceeded;
        }
        prev_i = cur_i;
        state.gradient_step();
    };
    state.status = status;

    ChainReport {
        spec: spec.clone(),
        convention,
        arena: state.arena,
        r: state.r,
        steps,
        status,
        final_order,
        cap_error,
    }
}

/// `candidate ∉ J_2` but `candidate ∈ sqrt(J_2)`: reaching it needed a root
/// of order greater than one.
pub fn non_effectiveness_witness(report: &ChainReport, candidate: &Polynomial, caps: &ResourceCaps) -> Result<bool> {
    let j2 = report
        .j_ideal(2)
        .ok_or_else(|| AlgebraError::Invalid("chain did not reach step 2".into()))?;
    if ideal_member(candidate, &j2, caps)? {
        return Ok(false);
    }
    radical_member(candidate, &j2, caps)
}

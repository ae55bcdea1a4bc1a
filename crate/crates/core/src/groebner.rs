//! Gröbner bases: normal forms, Buchberger's algorithm, and the ideal-level
//! queries built on them (membership, equality, elimination, radical
//! membership, colength at the origin).

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet, VecDeque};
use std::sync::OnceLock;

use crate::coeff::GaussianRational;
use crate::error::{AlgebraError, CapKind, Result};
use crate::gcd::{max_multiplicity, squarefree_part};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

type C = GaussianRational;

/// Limits on the work a single computation may do. Exceeding one is an
/// explicit [`AlgebraError::CapExceeded`], never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResourceCaps {
    /// Largest total degree a polynomial may reach during reduction.
    pub max_degree: u32,
    /// Largest number of S-pairs a single basis computation may reduce.
    pub max_pairs: usize,
    /// Largest truncation degree tried when measuring colength.
    pub max_colength_degree: u32,
    /// Longest multiplier chain before giving up.
    pub max_steps: usize,
}

impl Default for ResourceCaps {
    fn default() -> Self {
        Self { max_degree: 60, max_pairs: 20_000, max_colength_degree: 40, max_steps: 12 }
    }
}

// ---------------------------------------------------------------------------
// Sorted-term representation used inside the engine.
// ---------------------------------------------------------------------------

/// Terms in ascending order under the active term order; the leading term is
/// the last element.
#[derive(Clone, Debug)]
struct SPoly {
    terms: Vec<(Monomial, C)>,
    max_deg: u32,
}

impl SPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, C)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Self::from_sorted(terms)
    }

    fn from_sorted(terms: Vec<(Monomial, C)>) -> Self {
        let max_deg = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        Self { terms, max_deg }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn lead_coeff(&self) -> &C {
        &self.terms.last().expect("nonzero").1
    }

    fn make_monic(&mut self) {
        let inv = self.lead_coeff().inv().unwrap();
        if inv.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.1 = &t.1 * &inv;
        }
    }

    fn truncate(&mut self, degree: u32) {
        self.terms.retain(|(m, _)| m.degree() < degree);
        self.max_deg = self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
    }

    /// `self - c * m * other`, merged in order.
    fn sub_scaled(&self, c: &C, m: &Monomial, other: &SPoly, order: &MonomialOrder) -> SPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(bm, bc)| (bm.mul(m), bc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, -bc));
                }
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let s = ac - &bc;
                    if !s.is_zero() {
                        out.push((am.clone(), s));
                    }
                }
            }
        }
        SPoly::from_sorted(out)
    }
}

fn cap_err(kind: CapKind, limit: usize) -> AlgebraError {
    AlgebraError::CapExceeded { kind, limit }
}

/// Full reduction of `p` by monic `basis`. With `trunc = Some(D)` all terms of
/// degree `>= D` are discarded as they appear (reduction modulo `m^D`).
fn reduce(
    p: SPoly,
    basis: &[SPoly],
    order: &MonomialOrder,
    caps: &ResourceCaps,
    trunc: Option<u32>,
) -> Result<SPoly> {
    let mut p = p;
    if let Some(d) = trunc {
        p.truncate(d);
    }
    let mut rem: Vec<(Monomial, C)> = Vec::new();
    while let Some((m, c)) = p.terms.last() {
        let hit = basis.iter().find(|g| g.lead().divides(m));
        match hit {
            Some(g) => {
                let q = g.lead().quotient_of(m).unwrap();
                if q.degree() + g.max_deg > caps.max_degree {
                    return Err(cap_err(CapKind::Degree, caps.max_degree as usize));
                }
                let c = c.clone();
                p = p.sub_scaled(&c, &q, g, order);
                if let Some(d) = trunc {
                    p.truncate(d);
                }
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    Ok(SPoly::from_sorted(rem))
}

fn s_polynomial(f: &SPoly, g: &SPoly, order: &MonomialOrder) -> SPoly {
    let l = f.lead().lcm(g.lead());
    let mf = f.lead().quotient_of(&l).unwrap();
    let mg = g.lead().quotient_of(&l).unwrap();
    // both monic: mf*f - mg*g
    let zero = SPoly::from_sorted(Vec::new());
    let a = zero.sub_scaled(&-C::one(), &mf, f, order);
    a.sub_scaled(&C::one(), &mg, g, order)
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    lcm_degree: u32,
    j: usize,
    i: usize,
}

/// Buchberger's algorithm with the normal selection strategy and both of
/// Buchberger's criteria. Returns the reduced basis, sorted ascending by
/// leading monomial.
fn gb_core(
    gens: &[Polynomial],
    order: &MonomialOrder,
    caps: &ResourceCaps,
    trunc: Option<u32>,
) -> Result<Vec<SPoly>> {
    let nvars = gens.first().map(Polynomial::nvars).unwrap_or(0);
    let mut basis: Vec<SPoly> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    let mut extra: VecDeque<SPoly> = gens.iter().map(|g| SPoly::from_poly(g, order)).collect();
    let mut processed = 0usize;

    loop {
        let candidate = if let Some(p) = extra.pop_front() {
            p
        } else if let Some(Reverse(key)) = heap.pop() {
            let (i, j) = (key.i, key.j);
            pending.remove(&(i, j));
            let (li, lj) = (basis[i].lead(), basis[j].lead());
            if li.is_coprime(lj) {
                continue;
            }
            let l = li.lcm(lj);
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lead().divides(&l)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            processed += 1;
            if processed > caps.max_pairs {
                return Err(cap_err(CapKind::Pairs, caps.max_pairs));
            }
            let mut s = s_polynomial(&basis[i], &basis[j], order);
            if let Some(d) = trunc {
                s.truncate(d);
            }
            s
        } else {
            break;
        };

        let mut h = reduce(candidate, &basis, order, caps, trunc)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lead().is_one() {
            return Ok(vec![h]);
        }
        let new = basis.len();
        if let Some(d) = trunc {
            // pairs against the implicit generators of m^D
            let lead_deg = h.lead().degree();
            let min_deg = h.terms.iter().map(|(m, _)| m.degree()).min().unwrap();
            if min_deg < lead_deg {
                let tail = SPoly::from_sorted(h.terms[..h.terms.len() - 1].to_vec());
                for shift in Monomial::all_of_degree(nvars, d - lead_deg) {
                    processed += 1;
                    if processed > caps.max_pairs {
                        return Err(cap_err(CapKind::Pairs, caps.max_pairs));
                    }
                    let zero = SPoly::from_sorted(Vec::new());
                    let mut m = zero.sub_scaled(&-C::one(), &shift, &tail, order);
                    m.truncate(d);
                    if !m.is_zero() {
                        extra.push_back(m);
                    }
                }
            }
        }
        for (i, b) in basis.iter().enumerate() {
            let l = b.lead().lcm(h.lead());
            pending.insert((i, new));
            heap.push(Reverse(PairKey { lcm_degree: l.degree(), j: new, i }));
        }
        basis.push(h);
    }

    interreduce(basis, order, caps, trunc)
}

fn interreduce(
    basis: Vec<SPoly>,
    order: &MonomialOrder,
    caps: &ResourceCaps,
    trunc: Option<u32>,
) -> Result<Vec<SPoly>> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<SPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && h.lead().divides(g.lead()) && (h.lead() != g.lead() || k < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let lead = keep[idx].terms.last().unwrap().clone();
        let tail = SPoly::from_sorted(keep[idx].terms[..keep[idx].terms.len() - 1].to_vec());
        let others: Vec<SPoly> =
            keep.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, g)| g.clone()).collect();
        let mut r = reduce(tail, &others, order, caps, trunc)?;
        r.terms.push(lead);
        r = SPoly::from_sorted(r.terms);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    Ok(reduced)
}

/// Remainder of multivariate division of `p` by `basis` under `order`:
/// no term of the result is divisible by a leading term of `basis`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let caps = ResourceCaps { max_degree: u32::MAX, ..ResourceCaps::default() };
    let monic: Vec<SPoly> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let mut s = SPoly::from_poly(b, order);
            s.make_monic();
            s
        })
        .collect();
    reduce(SPoly::from_poly(p, order), &monic, order, &caps, None)
        .expect("uncapped reduction")
        .to_poly(p.nvars())
}

/// Reduced Gröbner basis of the ideal generated by `gens` (zero generators are
/// ignored; the zero ideal has the empty basis).
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder, caps: &ResourceCaps) -> Result<Vec<Polynomial>> {
    let nvars = match gens.first() {
        Some(g) => g.nvars(),
        None => return Ok(Vec::new()),
    };
    if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(AlgebraError::VarCountMismatch { left: nvars, right: bad.nvars() });
    }
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    Ok(gb_core(&gens, order, caps, None)?.iter().map(|s| s.to_poly(nvars)).collect())
}

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

/// A finitely generated ideal with a lazily computed grevlex Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl PartialEq for Ideal {
    /// Structural equality of generator lists; use [`ideal_equal`] for
    /// equality of ideals.
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.generators == other.generators
    }
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.nvars() != nvars) {
            return Err(AlgebraError::VarCountMismatch { left: nvars, right: bad.nvars() });
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self { nvars, generators, gb: OnceLock::new() })
    }

    pub fn zero(nvars: usize) -> Self {
        Self { nvars, generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(nvars, vec![Polynomial::one(nvars)]).unwrap()
    }

    /// `<z1, ..., zn>`.
    pub fn maximal(nvars: usize) -> Self {
        Self::new(nvars, (0..nvars).map(|i| Polynomial::var(nvars, i)).collect()).unwrap()
    }

    /// `m^d`, generated by all monomials of degree `d`.
    pub fn maximal_power(nvars: usize, d: u32) -> Self {
        Self::new(nvars, Monomial::all_of_degree(nvars, d).into_iter().map(Polynomial::monomial_of).collect())
            .unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sum of two ideals.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(self.nvars, g)
    }

    /// The reduced grevlex Gröbner basis, computed once and cached.
    pub fn groebner(&self, caps: &ResourceCaps) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.generators, &MonomialOrder::Grevlex, caps)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().unwrap())
    }

    pub fn cached_groebner(&self) -> Option<&[Polynomial]> {
        self.gb.get().map(Vec::as_slice)
    }

    pub fn contains_unit(&self, caps: &ResourceCaps) -> Result<bool> {
        Ok(self.groebner(caps)?.iter().any(|g| g.as_constant().is_some()))
    }
}

impl Polynomial {
    pub(crate) fn monomial_of(m: Monomial) -> Polynomial {
        Polynomial::term(m, C::one())
    }
}

/// `p` lies in the polynomial ideal `ideal`.
pub fn ideal_member(p: &Polynomial, ideal: &Ideal, caps: &ResourceCaps) -> Result<bool> {
    if p.nvars() != ideal.nvars() {
        return Err(AlgebraError::VarCountMismatch { left: p.nvars(), right: ideal.nvars() });
    }
    if p.is_zero() {
        return Ok(true);
    }
    let order = MonomialOrder::Grevlex;
    let gb: Vec<SPoly> = ideal.groebner(caps)?.iter().map(|g| SPoly::from_poly(g, &order)).collect();
    Ok(reduce(SPoly::from_poly(p, &order), &gb, &order, caps, None)?.is_zero())
}

/// Equality of ideals, by comparing reduced Gröbner bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal, caps: &ResourceCaps) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(AlgebraError::VarCountMismatch { left: a.nvars(), right: b.nvars() });
    }
    Ok(a.groebner(caps)? == b.groebner(caps)?)
}

/// `ideal ∩ Q(i)[keep]`, via a block elimination order.
pub fn eliminate(ideal: &Ideal, keep: &[usize], caps: &ResourceCaps) -> Result<Ideal> {
    let n = ideal.nvars();
    if let Some(&bad) = keep.iter().find(|&&k| k >= n) {
        return Err(AlgebraError::VarIndexOutOfRange { index: bad, nvars: n });
    }
    let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    let gb = buchberger(ideal.generators(), &MonomialOrder::Elimination(elim.clone()), caps)?;
    let kept = gb.into_iter().filter(|g| g.support().iter().all(|v| keep.contains(v))).collect();
    Ideal::new(n, kept)
}

/// Some power of `p` lies in `ideal` (Rabinowitsch: `1 ∈ I + <1 - t p>`).
pub fn radical_member(p: &Polynomial, ideal: &Ideal, caps: &ResourceCaps) -> Result<bool> {
    if p.nvars() != ideal.nvars() {
        return Err(AlgebraError::VarCountMismatch { left: p.nvars(), right: ideal.nvars() });
    }
    if p.is_zero() {
        return Ok(true);
    }
    let n = ideal.nvars();
    let t = Polynomial::var(n + 1, n);
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.extend_vars(1)).collect();
    gens.push(&Polynomial::one(n + 1) - &(&t * &p.extend_vars(1)));
    let gb = buchberger(&gens, &MonomialOrder::Grevlex, caps)?;
    Ok(gb.iter().any(|g| g.as_constant().is_some()))
}

/// Smallest `k <= max_power` with `p^k ∈ ideal`.
pub fn membership_exponent(p: &Polynomial, ideal: &Ideal, max_power: u32, caps: &ResourceCaps) -> Result<Option<u32>> {
    let mut pw = p.clone();
    for k in 1..=max_power {
        if pw.total_degree().unwrap_or(0) > caps.max_degree {
            return Ok(None);
        }
        if ideal_member(&pw, ideal, caps)? {
            return Ok(Some(k));
        }
        pw = &pw * p;
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Colength at the origin
// ---------------------------------------------------------------------------

/// Reduced grevlex basis of `I + m^D`, kept without the implicit degree-`D`
/// monomials.
#[derive(Clone, Debug)]
pub struct TruncatedBasis {
    nvars: usize,
    degree: u32,
    basis: Vec<Polynomial>,
}

impl TruncatedBasis {
    pub fn compute(ideal: &Ideal, degree: u32, caps: &ResourceCaps) -> Result<Self> {
        let order = MonomialOrder::Grevlex;
        let n = ideal.nvars();
        let gens: Vec<Polynomial> =
            ideal.generators().iter().map(|g| g.truncate(degree)).filter(|g| !g.is_zero()).collect();
        let basis = gb_core(&gens, &order, caps, Some(degree))?.iter().map(|s| s.to_poly(n)).collect();
        Ok(Self { nvars: n, degree, basis })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// Number of standard monomials: monomials of degree `< D` outside the
    /// leading-term ideal.
    pub fn standard_monomial_count(&self) -> usize {
        let order = MonomialOrder::Grevlex;
        let leads: Vec<Monomial> =
            self.basis.iter().map(|g| g.leading_term(&order).unwrap().0.clone()).collect();
        if leads.iter().any(Monomial::is_one) {
            return 0;
        }
        (0..self.degree)
            .flat_map(|d| Monomial::all_of_degree(self.nvars, d))
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count()
    }

    /// Membership in `I + m^D`.
    pub fn contains(&self, p: &Polynomial, caps: &ResourceCaps) -> Result<bool> {
        let order = MonomialOrder::Grevlex;
        let gb: Vec<SPoly> = self.basis.iter().map(|g| SPoly::from_poly(g, &order)).collect();
        Ok(reduce(SPoly::from_poly(p, &order), &gb, &order, caps, Some(self.degree))?.is_zero())
    }
}

/// `dim Q(i)[z] / (I + m^D)`.
pub fn truncated_colength(ideal: &Ideal, degree: u32, caps: &ResourceCaps) -> Result<usize> {
    if degree == 0 {
        return Err(AlgebraError::Invalid("truncation degree must be at least 1".into()));
    }
    Ok(TruncatedBasis::compute(ideal, degree, caps)?.standard_monomial_count())
}

/// Colength of the germ of an ideal at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColengthReport {
    /// `None` stands for "not determined" (infinite or cap reached).
    pub value: Option<usize>,
    /// Truncation degree at which the value was read off (or the last tried).
    pub truncation_degree: u32,
    pub stable: bool,
}

impl ColengthReport {
    pub fn finite(&self) -> Option<usize> {
        if self.stable {
            self.value
        } else {
            None
        }
    }
}

/// Grows `D` until two consecutive truncated colengths agree. Once they do,
/// `m^D ⊂ I + m^(D+1)` near the origin and Nakayama gives `m^D ⊂ I` there.
pub fn local_colength(ideal: &Ideal, caps: &ResourceCaps) -> ColengthReport {
    local_colength_with_basis(ideal, caps).0
}

pub(crate) fn local_colength_with_basis(ideal: &Ideal, caps: &ResourceCaps) -> (ColengthReport, Option<TruncatedBasis>) {
    let mut prev: Option<usize> = None;
    for d in 1..=caps.max_colength_degree {
        let tb = match TruncatedBasis::compute(ideal, d, caps) {
            Ok(tb) => tb,
            Err(_) => break,
        };
        let count = tb.standard_monomial_count();
        if prev == Some(count) {
            return (ColengthReport { value: Some(count), truncation_degree: d - 1, stable: true }, Some(tb));
        }
        prev = Some(count);
    }
    (ColengthReport { value: None, truncation_degree: caps.max_colength_degree, stable: false }, None)
}

/// Membership of `p` in the germ of `ideal` at the origin, when that germ has
/// finite colength. `None` when the colength could not be certified.
pub fn local_member(p: &Polynomial, ideal: &Ideal, caps: &ResourceCaps) -> Result<Option<bool>> {
    let (report, basis) = local_colength_with_basis(ideal, caps);
    match (report.stable, basis) {
        (true, Some(tb)) => Ok(Some(tb.contains(p, caps)?)),
        _ => Ok(None),
    }
}

// ---------------------------------------------------------------------------
// Radicals
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RadicalQuality {
    Exact,
    MembershipOnly,
}

/// Which branch of [`radical_generators`] fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalCase {
    /// The zero ideal is its own radical.
    Zero,
    /// `1 ∈ I` globally.
    Unit,
    /// The germ at the origin is the unit ideal (a generator is a unit there).
    LocalUnit,
    /// `I = <g>`; radical generated by the squarefree part of `g`.
    Principal,
    /// Finite colength at the origin; the local radical is the maximal ideal.
    MaximalIdeal,
    /// Enlarged by every pool candidate certified by `radical_member`.
    Candidates,
}

/// A generator of a radical together with the root taken to reach it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalGenerator {
    pub poly: Polynomial,
    /// `Some(m)`: `poly^m` lies in the input ideal (locally for
    /// `MaximalIdeal`). `None`: carried over unchanged from the input.
    pub root: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct RadicalResult {
    pub ideal: Ideal,
    pub generators: Vec<RadicalGenerator>,
    pub quality: RadicalQuality,
    pub case: RadicalCase,
}

/// Largest power tried when extracting a root exponent for a candidate.
const MAX_ROOT_SEARCH: u32 = 64;

/// Generators of the radical of `ideal` at the origin. `pool` supplies extra
/// candidates for the membership-only fallback.
pub fn radical_generators(ideal: &Ideal, pool: &[Polynomial], caps: &ResourceCaps) -> Result<RadicalResult> {
    let n = ideal.nvars();
    let finish = |gens: Vec<RadicalGenerator>, quality, case| -> Result<RadicalResult> {
        let ideal = Ideal::new(n, gens.iter().map(|g| g.poly.clone()).collect())?;
        Ok(RadicalResult { ideal, generators: gens, quality, case })
    };
    if ideal.is_zero_ideal() {
        return finish(Vec::new(), RadicalQuality::Exact, RadicalCase::Zero);
    }
    let gb = ideal.groebner(caps)?.to_vec();
    if gb.iter().any(|g| g.as_constant().is_some()) {
        let one = RadicalGenerator { poly: Polynomial::one(n), root: Some(1) };
        return finish(vec![one], RadicalQuality::Exact, RadicalCase::Unit);
    }
    if gb.len() == 1 {
        let g = &gb[0];
        let s = squarefree_part(g)?;
        let m = max_multiplicity(g)?;
        return finish(vec![RadicalGenerator { poly: s, root: Some(m) }], RadicalQuality::Exact, RadicalCase::Principal);
    }
    let (report, tb) = local_colength_with_basis(ideal, caps);
    if let (true, Some(tb)) = (report.stable, tb) {
        if report.value == Some(0) {
            let one = RadicalGenerator { poly: Polynomial::one(n), root: Some(1) };
            return finish(vec![one], RadicalQuality::Exact, RadicalCase::LocalUnit);
        }
        // m^D ⊂ I locally, so the search below terminates by e = D
        let mut e = 1;
        loop {
            let mut all = true;
            for i in 0..n {
                let zi = Polynomial::monomial_of(Monomial::var(n, i, e));
                if !tb.contains(&zi, caps)? {
                    all = false;
                    break;
                }
            }
            if all || e >= tb.degree() {
                break;
            }
            e += 1;
        }
        let gens = (0..n).map(|i| RadicalGenerator { poly: Polynomial::var(n, i), root: Some(e) }).collect();
        return finish(gens, RadicalQuality::Exact, RadicalCase::MaximalIdeal);
    }

    let mut gens: Vec<RadicalGenerator> =
        ideal.generators().iter().map(|g| RadicalGenerator { poly: g.clone(), root: None }).collect();
    let mut candidates: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
    for g in ideal.generators() {
        candidates.push(squarefree_part(g)?);
    }
    candidates.extend(pool.iter().cloned());
    for cand in candidates {
        if cand.is_zero() || gens.iter().any(|g| g.poly.equal_up_to_constant(&cand)) {
            continue;
        }
        if ideal_member(&cand, ideal, caps)? || !radical_member(&cand, ideal, caps)? {
            continue;
        }
        if let Some(k) = membership_exponent(&cand, ideal, MAX_ROOT_SEARCH, caps)? {
            gens.push(RadicalGenerator { poly: cand.monic(&MonomialOrder::Grevlex), root: Some(k) });
        }
    }
    finish(gens, RadicalQuality::MembershipOnly, RadicalCase::Candidates)
}

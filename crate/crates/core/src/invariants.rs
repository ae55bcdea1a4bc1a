//! The effective constants of a special domain and the checks that relate
//! them:
//!
//! * `s`: colength of `<F_1..F_N>` at the origin,
//! * `q`: least `q` with `m^q ⊂ <F>`,
//! * `p`: least `p` with `|z|^p <= C sum |F_j|`, bracketed from below by
//!   monomial curve probes and from above by `q`,
//! * the order of finite type `2p`.

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::chain::DomainSpec;
use crate::coeff::GaussianRational;
use crate::covector::jacobian_of;
use crate::error::{AlgebraError, CapKind, Result};
use crate::groebner::{ideal_member, local_colength_with_basis, local_member, ColengthReport, Ideal, ResourceCaps};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// `s`, the colength of `<F>` at the origin.
pub fn compute_s(spec: &DomainSpec, caps: &ResourceCaps) -> ColengthReport {
    crate::groebner::local_colength(&spec.ideal(), caps)
}

/// `q`, the least exponent with every monomial of degree `q` in `<F>` near
/// the origin. Needs a finite colength.
pub fn compute_q(spec: &DomainSpec, caps: &ResourceCaps) -> Result<u32> {
    let ideal = spec.ideal();
    let (report, basis) = local_colength_with_basis(&ideal, caps);
    let (Some(s), Some(basis)) = (report.finite(), basis) else {
        return Err(AlgebraError::CapExceeded { kind: CapKind::Degree, limit: caps.max_colength_degree as usize });
    };
    let bound = (s as u32).max(1).max(basis.degree());
    for q in 1..=bound {
        let mut all = true;
        for m in Monomial::all_of_degree(spec.n(), q) {
            if !basis.contains(&Polynomial::monomial_of(m), caps)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(q);
        }
    }
    unreachable!("m^D lies in the ideal once the colength is stable")
}

/// Coefficients tried on every slot before random retries.
fn fixed_coefficients() -> Vec<GaussianRational> {
    vec![
        GaussianRational::from_int(1),
        GaussianRational::from_int(-1),
        GaussianRational::i(),
        GaussianRational::from_parts((1, 1), (1, 1)),
    ]
}

fn cartesian<T: Clone>(choices: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Result of probing a curve family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeBound {
    /// Every probed curve left the zero set; the best ratio seen.
    Finite(Rational64),
    /// Some probed curve lies inside `V(F)`, so no finite `p` exists.
    Unbounded,
}

impl ProbeBound {
    pub fn finite(&self) -> Option<Rational64> {
        match self {
            ProbeBound::Finite(r) => Some(*r),
            ProbeBound::Unbounded => None,
        }
    }
}

/// Ratio `min_j ord(F_j ∘ φ) / min_i a_i` for one monomial curve, `None` when
/// the curve lies in the zero set.
fn curve_ratio(functions: &[Polynomial], exps: &[u32], coeffs: &[GaussianRational]) -> Option<Rational64> {
    let ord = functions
        .iter()
        .filter_map(|f| f.substitute_curve(exps, coeffs).unwrap().ord0())
        .min()?;
    let mult = *exps.iter().min().unwrap() as i64;
    Some(Rational64::new(ord as i64, mult))
}

/// Lower bound for `p` from monomial curves `t -> (c_i t^{a_i})` with
/// `1 <= a_i <= exponent_cap`. Each exponent vector is tried with every
/// combination of the fixed coefficients and then `trials` random Gaussian
/// rationals (seeded, so runs are reproducible).
pub fn probe_p_lower(spec: &DomainSpec, exponent_cap: u32, trials: usize) -> ProbeBound {
    let n = spec.n();
    let exps: Vec<u32> = (1..=exponent_cap.max(1)).collect();
    let exponent_vectors = cartesian(&exps, n);
    let fixed = cartesian(&fixed_coefficients(), n);

    let results: Vec<Option<Rational64>> = exponent_vectors
        .par_iter()
        .enumerate()
        .map(|(idx, a)| {
            let mut best: Option<Rational64> = Some(Rational64::from_integer(0));
            let mut consider = |r: Option<Rational64>| {
                best = match (best, r) {
                    (None, _) | (_, None) => None,
                    (Some(x), Some(y)) => Some(x.max(y)),
                };
            };
            for c in &fixed {
                consider(curve_ratio(spec.functions(), a, c));
            }
            let mut rng = StdRng::seed_from_u64(0x5eed_0000 + idx as u64);
            for _ in 0..trials {
                let c: Vec<GaussianRational> = (0..n)
                    .map(|_| loop {
                        let g = GaussianRational::from_parts(
                            (rng.gen_range(-4..=4), rng.gen_range(1..=3)),
                            (rng.gen_range(-4..=4), rng.gen_range(1..=3)),
                        );
                        if !g.is_zero() {
                            break g;
                        }
                    })
                    .collect();
                consider(curve_ratio(spec.functions(), a, &c));
            }
            best
        })
        .collect();

    let mut best = Rational64::from_integer(0);
    for r in results {
        match r {
            None => return ProbeBound::Unbounded,
            Some(r) => best = best.max(r),
        }
    }
    ProbeBound::Finite(best)
}

/// Certified bracket `lower <= p <= upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBracket {
    pub lower: Rational64,
    pub upper: u32,
}

impl PBracket {
    /// The bracket pins `p` down: `ceil(lower) = upper`.
    pub fn agreement(&self) -> bool {
        self.lower.ceil().to_integer() == self.upper as i64
    }
}

pub fn p_bracket(spec: &DomainSpec, caps: &ResourceCaps, exponent_cap: u32, trials: usize) -> Result<PBracket> {
    let q = compute_q(spec, caps)?;
    let lower = probe_p_lower(spec, exponent_cap, trials)
        .finite()
        .ok_or_else(|| AlgebraError::Invalid("a probe curve lies in the zero set of F".into()))?;
    Ok(PBracket { lower, upper: q })
}

/// `(2 * p_lower, 2 * p_upper)`: bracket for the order of finite type.
pub fn finite_type_bracket(bracket: &PBracket) -> (Rational64, u32) {
    (bracket.lower * 2, bracket.upper * 2)
}

/// `C(n, k)` exactly.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub holds: bool,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub s: ColengthReport,
    pub q: Option<u32>,
    pub p_lower: Option<Rational64>,
    pub p_upper: Option<u32>,
    pub type_lower: Option<Rational64>,
    pub type_upper: Option<u32>,
    pub inequalities: Vec<InequalityCheck>,
}

impl InvariantReport {
    /// All four inequalities were evaluated and hold.
    pub fn all_hold(&self) -> bool {
        self.inequalities.len() == 4 && self.inequalities.iter().all(|c| c.holds)
    }

    /// Some quantity could not be computed within the caps.
    pub fn incomplete(&self) -> bool {
        self.s.finite().is_none() || self.q.is_none() || self.p_lower.is_none()
    }
}

fn check(name: &'static str, lhs: BigUint, rhs: BigUint) -> InequalityCheck {
    InequalityCheck { name, holds: lhs <= rhs, lhs, rhs }
}

/// Evaluates, with `p` in bracket form:
/// `ceil(p_lower) <= q`, `q <= (n+2) p_upper`, `q <= s`, `s <= C(n+q-1, q-1)`.
pub fn verify_inequalities(s: u64, q: u32, bracket: &PBracket, n: usize) -> Vec<InequalityCheck> {
    let q = q as u64;
    let n = n as u64;
    let p_low = bracket.lower.ceil().to_integer().max(0) as u64;
    vec![
        check("p <= q", p_low.into(), q.into()),
        check("q <= (n+2)p", q.into(), ((n + 2) * bracket.upper as u64).into()),
        check("q <= s", q.into(), s.into()),
        check("s <= C(n+q-1, q-1)", s.into(), binomial(n + q - 1, q.saturating_sub(1))),
    ]
}

/// Computes `s`, `q`, the `p` bracket and the finite-type bracket, then the
/// inequality chain. Quantities blocked by caps are left empty.
pub fn invariant_report(spec: &DomainSpec, caps: &ResourceCaps, exponent_cap: u32, trials: usize) -> InvariantReport {
    let s = compute_s(spec, caps);
    let q = if s.finite().is_some() { compute_q(spec, caps).ok() } else { None };
    let p_lower = probe_p_lower(spec, exponent_cap, trials).finite();
    let mut report = InvariantReport {
        n: spec.n(),
        s: s.clone(),
        q,
        p_lower,
        p_upper: q,
        type_lower: p_lower.map(|p| p * 2),
        type_upper: q.map(|q| q * 2),
        inequalities: Vec::new(),
    };
    if let (Some(sv), Some(qv), Some(pl)) = (s.finite(), q, p_lower) {
        let bracket = PBracket { lower: pl, upper: qv };
        report.inequalities = verify_inequalities(sv as u64, qv, &bracket, spec.n());
    }
    report
}

/// How a membership claim was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certificate {
    /// Membership in the polynomial ideal (implies membership of germs).
    Global,
    /// Membership of germs at the origin, via `I + m^D` with `m^D ⊂ I` there.
    Local,
    NotCertified,
}

impl Certificate {
    pub fn certified(self) -> bool {
        self != Certificate::NotCertified
    }
}

fn certify(p: &Polynomial, ideal: &Ideal, caps: &ResourceCaps) -> Result<Certificate> {
    if ideal_member(p, ideal, caps)? {
        return Ok(Certificate::Global);
    }
    Ok(match local_member(p, ideal, caps)? {
        Some(true) => Certificate::Local,
        _ => Certificate::NotCertified,
    })
}

/// `f^(d^2) ∈ I` for `f` vanishing at the origin and colength of `I` at most `d`.
pub fn effective_nullstellensatz_check(f: &Polynomial, ideal: &Ideal, d: u32, caps: &ResourceCaps) -> Result<Certificate> {
    if !f.vanishes_at_origin() {
        return Err(AlgebraError::NotVanishing(format!("f = {f}")));
    }
    let colength = crate::groebner::local_colength(ideal, caps);
    match colength.finite() {
        Some(s) if s as u64 <= d as u64 => {}
        Some(s) => return Err(AlgebraError::Invalid(format!("colength {s} exceeds d = {d}"))),
        None => {
            return Err(AlgebraError::CapExceeded {
                kind: CapKind::Degree,
                limit: caps.max_colength_degree as usize,
            })
        }
    }
    let e = d.checked_mul(d).ok_or_else(|| AlgebraError::Invalid("exponent overflow".into()))?;
    if f.total_degree().unwrap_or(0) as u64 * e as u64 > caps.max_degree as u64 {
        return Err(AlgebraError::CapExceeded { kind: CapKind::Degree, limit: caps.max_degree as usize });
    }
    certify(&f.pow(e), ideal, caps)
}

/// `f^(n+1) ∈ <df/dz_1, ..., df/dz_n>`.
pub fn skoda_jacobian_check(f: &Polynomial, caps: &ResourceCaps) -> Result<Certificate> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !f.vanishes_at_origin() {
        return Err(AlgebraError::NotVanishing(format!("f = {f}")));
    }
    let n = f.nvars();
    let jac = Ideal::new(n, f.gradient())?;
    certify(&f.pow(n as u32 + 1), &jac, caps)
}

/// `rho * det(dg_i/dz_j) ∈ <g_1, ..., g_n>`.
pub fn skoda_division_check(rho: &Polynomial, g: &[Polynomial], caps: &ResourceCaps) -> Result<Certificate> {
    let n = rho.nvars();
    if g.len() != n {
        return Err(AlgebraError::RowCountMismatch { expected: n, got: g.len() });
    }
    let jac = jacobian_of(g)?;
    let ideal = Ideal::new(n, g.to_vec())?;
    certify(&(rho * &jac), &ideal, caps)
}

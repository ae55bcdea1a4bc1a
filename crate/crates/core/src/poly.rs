//! Sparse multivariate polynomials over `Q(i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::GaussianRational;
use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};

type C = GaussianRational;

/// Canonical sparse polynomial: zero coefficients are never stored, so two
/// equal polynomials have identical term maps.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact ring arithmetic with a variable-count check.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    a.check_same(b)?;
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { nvars, terms }
    }

    pub fn monomial(exps: Vec<u32>) -> Self {
        Self::term(Monomial(exps), C::one())
    }

    /// `z_{index+1}` (0-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::term(Monomial::var(nvars, index, 1), C::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant value, if the polynomial is a nonzero constant.
    pub fn as_constant(&self) -> Option<&C> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c);
            }
        }
        None
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Vanishing order at the origin: minimal total degree of a term.
    /// `None` stands for infinity (the zero polynomial).
    pub fn ord0(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn value_at_origin(&self) -> C {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.value_at_origin().is_zero()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(AlgebraError::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn scale(&self, c: &C) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.nvars {
            return Err(AlgebraError::VarIndexOutOfRange { index: var, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[var] -= 1;
            out.add_term(d, &(c * &C::from_int(e as i64)));
        }
        Ok(out)
    }

    /// All first partials, in variable order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars).map(|j| self.partial_derivative(j).unwrap()).collect()
    }

    /// Replace every coefficient with its complex conjugate.
    pub fn conjugate_coeffs(&self) -> Polynomial {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Pull back along the monomial curve `t -> (c_1 t^{a_1}, ..., c_n t^{a_n})`.
    pub fn substitute_curve(&self, exponents: &[u32], coefficients: &[C]) -> Result<UnivariatePolynomial> {
        if exponents.len() != self.nvars {
            return Err(AlgebraError::VarCountMismatch { left: self.nvars, right: exponents.len() });
        }
        if coefficients.len() != self.nvars {
            return Err(AlgebraError::VarCountMismatch { left: self.nvars, right: coefficients.len() });
        }
        let mut out: BTreeMap<u64, C> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut deg: u64 = 0;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                coef = &coef * &coefficients[i].pow(e);
                deg += exponents[i] as u64 * e as u64;
            }
            let slot = out.entry(deg).or_default();
            *slot += &coef;
        }
        Ok(UnivariatePolynomial::from_sparse(out))
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Scale so that the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().unwrap();
                self.scale(&inv)
            }
        }
    }

    /// True when `self = c * other` for a nonzero constant `c`.
    pub fn equal_up_to_constant(&self, other: &Polynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let o = MonomialOrder::Grevlex;
        self.monic(&o) == other.monic(&o)
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Same polynomial in `nvars + extra` variables; new variables come last.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        Self {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.extend(std::iter::repeat_n(0, extra));
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drop the trailing `count` variables; `None` if any of them occurs.
    pub fn restrict_vars(&self, count: usize) -> Option<Polynomial> {
        let n = self.nvars - count;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[n..].iter().any(|&e| e != 0) {
                return None;
            }
            terms.insert(Monomial(m.0[..n].to_vec()), c.clone());
        }
        Some(Self { nvars: n, terms })
    }

    /// Drop all terms of total degree `>= degree` (reduction modulo `m^degree`).
    pub fn truncate(&self, degree: u32) -> Polynomial {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.terms.keys().any(|m| m.0[i] > 0)).collect()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Coefficients of `self` viewed as a polynomial in `var` (index = power).
    /// Each coefficient is free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut rest = m.clone();
            rest.0[var] = 0;
            out[e].add_term(rest, c);
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(nvars: usize, var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Self::zero(nvars);
        for (e, p) in coeffs.iter().enumerate() {
            let shift = Monomial::var(nvars, var, e as u32);
            for (m, c) in &p.terms {
                out.add_term(m.mul(&shift), c);
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let order = MonomialOrder::Grevlex;
        let (dm, dc) = d.leading_term(&order).map(|(m, c)| (m.clone(), c.clone()))?;
        let dinv = dc.inv().unwrap();
        let mut rem = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
            let t = dm.quotient_of(&rm)?;
            let c = &rc * &dinv;
            rem = &rem - &d.mul_term(&t, &c);
            q.add_term(t, &c);
        }
        Some(q)
    }

    /// Render with an explicit variable prefix, terms descending in grevlex.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn fmt_monomial(m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "z{}", i + 1)?;
        } else {
            write!(f, "z{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.sorted_terms(&MonomialOrder::Grevlex).into_iter().enumerate() {
            let (neg, mag) = if c.is_negative_simple() { (true, -c) } else { (false, c.clone()) };
            match (idx == 0, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs).expect("polynomial add");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs).expect("polynomial sub");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs).expect("polynomial mul");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-C::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Dense univariate polynomial in `t`; index = power of `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnivariatePolynomial {
    coeffs: Vec<C>,
}

impl UnivariatePolynomial {
    fn from_sparse(map: BTreeMap<u64, C>) -> Self {
        let deg = map.iter().filter(|(_, c)| !c.is_zero()).map(|(d, _)| *d).max();
        let mut coeffs = match deg {
            None => Vec::new(),
            Some(d) => vec![C::zero(); d as usize + 1],
        };
        for (d, c) in map {
            if !c.is_zero() {
                coeffs[d as usize] = c;
            }
        }
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(C::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Vanishing order at `t = 0`; `None` for the zero polynomial.
    pub fn ord0(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self { coeffs: Vec::new() };
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::from_coeffs(out)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Polynomial::from_terms(
            1,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| (Monomial(vec![d as u32]), c.clone())),
        );
        write!(f, "{}", p.to_string().replace("z1", "t"))
    }
}

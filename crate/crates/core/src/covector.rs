//! (1,0)-forms with polynomial coefficients, `sum_j c_j dz^j`.

use std::fmt;

use crate::coeff::GaussianRational;
use crate::error::{AlgebraError, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Covector {
    coeffs: Vec<Polynomial>,
}

impl Covector {
    pub fn new(coeffs: Vec<Polynomial>) -> Result<Self> {
        let n = coeffs.len();
        if let Some(bad) = coeffs.iter().find(|c| c.nvars() != n) {
            return Err(AlgebraError::VarCountMismatch { left: n, right: bad.nvars() });
        }
        Ok(Self { coeffs })
    }

    /// `df = sum_j (df/dz_j) dz^j`.
    pub fn differential(f: &Polynomial) -> Self {
        Self { coeffs: f.gradient() }
    }

    /// `dz^j`.
    pub fn basis(n: usize, j: usize) -> Self {
        let coeffs = (0..n)
            .map(|i| if i == j { Polynomial::one(n) } else { Polynomial::zero(n) })
            .collect();
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, c: &Polynomial) -> Covector {
        Self { coeffs: self.coeffs.iter().map(|p| p * c).collect() }
    }

    pub fn add(&self, other: &Covector) -> Covector {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    /// Normalize so the first nonzero slot has leading coefficient 1.
    pub fn monic(&self) -> Covector {
        let order = MonomialOrder::Grevlex;
        let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()) else {
            return self.clone();
        };
        let inv: GaussianRational = lead.leading_term(&order).unwrap().1.inv().unwrap();
        Self { coeffs: self.coeffs.iter().map(|p| p.scale(&inv)).collect() }
    }

    pub fn equal_up_to_constant(&self, other: &Covector) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.monic() == other.monic()
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*dz{}", c, j + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Determinant of the `n x n` coefficient matrix whose rows are `rows`.
pub fn jacobian_determinant(rows: &[Covector]) -> Result<Polynomial> {
    let Some(first) = rows.first() else {
        return Err(AlgebraError::RowCountMismatch { expected: 1, got: 0 });
    };
    let n = first.dim();
    if rows.len() != n {
        return Err(AlgebraError::RowCountMismatch { expected: n, got: rows.len() });
    }
    if let Some(r) = rows.iter().find(|r| r.dim() != n) {
        return Err(AlgebraError::VarCountMismatch { left: n, right: r.dim() });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace(rows, 0, &cols))
}

fn laplace(rows: &[Covector], row: usize, cols: &[usize]) -> Polynomial {
    let nv = rows[0].coeffs[0].nvars();
    if cols.len() == 1 {
        return rows[row].coeffs[cols[0]].clone();
    }
    let mut acc = Polynomial::zero(nv);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &rows[row].coeffs[c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = laplace(rows, row + 1, &rest);
        let term = entry * &minor;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Jacobian determinant `det(dg_i/dz_j)` of `n` functions in `n` variables.
pub fn jacobian_of(funcs: &[Polynomial]) -> Result<Polynomial> {
    let rows: Vec<Covector> = funcs.iter().map(Covector::differential).collect();
    jacobian_determinant(&rows)
}

//! Multivariate GCD by recursive content/primitive-part splitting, with a
//! subresultant remainder sequence in the main variable.

use crate::error::{AlgebraError, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// GCD normalized to leading coefficient 1 under grevlex.
///
/// `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.nvars() != b.nvars() {
        return Err(AlgebraError::VarCountMismatch { left: a.nvars(), right: b.nvars() });
    }
    Ok(gcd_rec(a, b).monic(&MonomialOrder::Grevlex))
}

fn main_var(a: &Polynomial, b: &Polynomial) -> Option<usize> {
    let sa = a.support();
    let sb = b.support();
    sa.into_iter().chain(sb).max()
}

fn gcd_rec(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let n = a.nvars();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let Some(v) = main_var(a, b) else {
        return Polynomial::one(n);
    };
    let da = a.degree_in(v);
    let db = b.degree_in(v);
    if da == 0 {
        return gcd_rec(a, &content(b, v));
    }
    if db == 0 {
        return gcd_rec(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_rec(&ca, &cb);
    let g = subresultant_gcd(&pa, &pb, v);
    let g = primitive_part(&g, v);
    &c * &g
}

/// GCD of the coefficients of `p` viewed in `var`.
fn content(p: &Polynomial, var: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.nvars());
    for c in p.coefficients_in(var) {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &c);
        if g.is_constant() {
            return Polynomial::one(p.nvars());
        }
    }
    g
}

fn primitive_part(p: &Polynomial, var: usize) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let c = content(p, var);
    p.div_exact(&c).expect("content divides")
}

fn leading_coeff_in(p: &Polynomial, var: usize) -> Polynomial {
    p.coefficients_in(var).pop().unwrap()
}

/// Pseudo-remainder of `a` by `b` in `var`: `lc(b)^(da-db+1) * a mod b`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let n = a.nvars();
    let db = b.degree_in(var) as usize;
    let bc = b.coefficients_in(var);
    let lb = bc[db].clone();
    let mut r = a.coefficients_in(var);
    let da = r.len() - 1;
    let mut steps = da + 1 - db;
    while r.len() > db && !r.iter().all(Polynomial::is_zero) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        let shift = dr - db;
        for (i, bci) in bc.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&lr * bci);
        }
        r.pop();
        while r.last().is_some_and(Polynomial::is_zero) {
            r.pop();
        }
        steps -= 1;
        if r.is_empty() {
            break;
        }
    }
    let mut rem = Polynomial::from_coefficients_in(n, var, &r);
    if steps > 0 {
        rem = &rem * &lb.pow(steps as u32);
    }
    rem
}

/// Collins/Brown subresultant PRS; returns the last nonzero remainder.
fn subresultant_gcd(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let n = a.nvars();
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut g = Polynomial::one(n);
    let mut h = Polynomial::one(n);
    loop {
        let delta = a.degree_in(var) - b.degree_in(var);
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            return b;
        }
        if r.degree_in(var) == 0 {
            return Polynomial::one(n);
        }
        let divisor = &g * &h.pow(delta);
        let next = r.div_exact(&divisor).expect("subresultant division is exact");
        a = b;
        b = next;
        g = leading_coeff_in(&a, var);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h update is exact")
        };
    }
}

/// Product of the distinct irreducible factors of `p`, monic under grevlex.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut cur = p.clone();
    loop {
        let mut g = cur.clone();
        for d in cur.gradient() {
            g = gcd_rec(&g, &d);
            if g.is_constant() {
                break;
            }
        }
        if g.is_constant() {
            return Ok(cur.monic(&MonomialOrder::Grevlex));
        }
        cur = cur.div_exact(&g).expect("gcd divides");
    }
}

/// Largest multiplicity of an irreducible factor of `p`, i.e. the smallest
/// `m` with `p | squarefree_part(p)^m`.
pub fn max_multiplicity(p: &Polynomial) -> Result<u32> {
    let s = squarefree_part(p)?;
    let mut m = 1;
    let mut pw = s.clone();
    while pw.div_exact(p).is_none() {
        pw = &pw * &s;
        m += 1;
    }
    Ok(m)
}

//! Independent reference computations used to cross-check the engine. None of
//! these touch Gröbner bases.

#![allow(dead_code)]

use std::collections::BTreeMap;

use kohn_core::{GaussianRational, Ideal, Monomial, MonomialOrder, Polynomial, ResourceCaps};
use rand::Rng;

/// Number of monomials outside the staircase of a monomial ideal, counted
/// over the box cut out by the pure powers. `None` if some variable has no
/// pure power (infinite colength).
pub fn staircase_count(gens: &[Vec<u32>], n: usize) -> Option<usize> {
    let mut bounds = vec![u32::MAX; n];
    for g in gens {
        let support: Vec<usize> = (0..n).filter(|&i| g[i] > 0).collect();
        if support.len() == 1 {
            let i = support[0];
            bounds[i] = bounds[i].min(g[i]);
        }
        if support.is_empty() {
            return Some(0);
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    let mut count = 0;
    let mut e = vec![0u32; n];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Some(count);
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponent_vectors(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Smallest `q` with every degree-`q` monomial divisible by a generator.
pub fn monomial_q(gens: &[Vec<u32>], n: usize) -> u32 {
    (1..)
        .find(|&q| {
            exponent_vectors(n, q)
                .iter()
                .all(|e| gens.iter().any(|g| g.iter().zip(e).all(|(a, b)| a <= b)))
        })
        .unwrap()
}

/// Degree-bounded linear algebra: is `p` a combination of `m * g_i` with
/// `deg(m) + deg(g_i) <= bound`? Exact for homogeneous data with
/// `bound = deg p`; one-sided otherwise.
pub fn span_member(p: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    let n = p.nvars();
    let order = MonomialOrder::Lex;
    let mut rows: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    let reduce = |rows: &BTreeMap<Monomial, Polynomial>, mut v: Polynomial| -> Polynomial {
        loop {
            let Some((lead, c)) = v.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) else {
                return v;
            };
            let Some(row) = rows.get(&lead) else {
                return v;
            };
            // rows are normalized to leading coefficient 1
            v = &v - &row.scale(&c);
        }
    };
    for g in gens {
        let Some(dg) = g.total_degree() else { continue };
        if dg > bound {
            continue;
        }
        for d in 0..=(bound - dg) {
            for e in exponent_vectors(n, d) {
                let row = g.mul_term(&Monomial(e), &GaussianRational::one());
                let r = reduce(&rows, row);
                if let Some((lead, c)) = r.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
                    let r = r.scale(&c.inv().unwrap());
                    // keep the table fully reduced against the new pivot
                    let pivot_lead = lead.clone();
                    let updated: Vec<(Monomial, Polynomial)> = rows
                        .iter()
                        .map(|(k, v)| {
                            let c = v.coeff(&pivot_lead);
                            (k.clone(), if c.is_zero() { v.clone() } else { v - &r.scale(&c) })
                        })
                        .collect();
                    rows = updated.into_iter().collect();
                    rows.insert(lead, r);
                }
            }
        }
    }
    reduce(&rows, p.clone()).is_zero()
}

/// Smallest `k <= max_k` with `p^k ∈ I`, by repeated membership tests.
pub fn power_search(p: &Polynomial, ideal: &Ideal, max_k: u32, caps: &ResourceCaps) -> Option<u32> {
    let mut pw = p.clone();
    for k in 1..=max_k {
        if kohn_core::ideal_member(&pw, ideal, caps).unwrap() {
            return Some(k);
        }
        pw = &pw * p;
    }
    None
}

pub fn monomial_poly(e: &[u32]) -> Polynomial {
    Polynomial::monomial(e.to_vec())
}

pub fn small_coeff<R: Rng>(rng: &mut R) -> GaussianRational {
    loop {
        let c = match rng.gen_range(0..4) {
            0 => GaussianRational::from_parts((rng.gen_range(-3..=3), 1), (rng.gen_range(-2..=2), 1)),
            1 => GaussianRational::from_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4)),
            _ => GaussianRational::from_int(rng.gen_range(-4..=4)),
        };
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random polynomial with `terms` terms of total degree in `lo..=hi`.
pub fn random_poly<R: Rng>(rng: &mut R, n: usize, lo: u32, hi: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..terms {
        let d = rng.gen_range(lo..=hi);
        let all = exponent_vectors(n, d);
        let e = all[rng.gen_range(0..all.len())].clone();
        p = &p + &Polynomial::term(Monomial(e), small_coeff(rng));
    }
    p
}

/// Random homogeneous polynomial of degree `d`.
pub fn random_homogeneous<R: Rng>(rng: &mut R, n: usize, d: u32, terms: usize) -> Polynomial {
    random_poly(rng, n, d, d, terms)
}

/// Random monomial ideal in `n` variables with every pure power present.
pub fn random_monomial_ideal<R: Rng>(rng: &mut R, n: usize, max_exp: u32) -> Vec<Vec<u32>> {
    let mut gens = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = rng.gen_range(1..=max_exp);
        gens.push(e);
    }
    for _ in 0..rng.gen_range(0..=3) {
        gens.push((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
    }
    gens.retain(|g| g.iter().any(|&x| x > 0));
    gens
}

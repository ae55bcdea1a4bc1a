//! Exponent vectors and the admissible orders on them.

use std::cmp::Ordering;

/// `z1^a1 * ... * zn^an`, stored as its exponent vector.
///
/// The derived `Ord` is plain lexicographic on the exponent vector and is only
/// used as a storage key; term orders go through [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials in `nvars` variables of total degree exactly `deg`,
    /// in descending lexicographic order.
    pub fn all_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e;
                rec(pos + 1, left - e, cur, out);
            }
            cur[pos] = 0;
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if deg == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(0, deg, &mut vec![0; nvars], &mut out);
        out
    }
}

/// A term order. Variable 0 is the largest variable in every order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    Lex,
    /// Product order: grevlex on the listed variables, ties broken by grevlex
    /// on the remaining ones. Used for elimination.
    Elimination(Vec<usize>),
}

fn grevlex_masked(a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
    let da: u32 = a.iter().enumerate().filter(|(i, _)| keep(*i)).map(|(_, e)| e).sum();
    let db: u32 = b.iter().enumerate().filter(|(i, _)| keep(*i)).map(|(_, e)| e).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if !keep(i) {
            continue;
        }
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_masked(&a.0, &b.0, |_| true),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Elimination(elim) => {
                grevlex_masked(&a.0, &b.0, |i| elim.contains(&i))
                    .then_with(|| grevlex_masked(&a.0, &b.0, |i| !elim.contains(&i)))
            }
        }
    }
}

mod oracles;

use kohn_core::gcd::max_multiplicity;
use kohn_core::{
    buchberger, compute_q, compute_s, effective_nullstellensatz_check, ideal_member, jacobian_determinant,
    local_colength, parse_polynomial, probe_p_lower, radical_member, squarefree_part, truncated_colength, Covector,
    DomainSpec, GaussianRational, Ideal, Monomial, MonomialOrder, Polynomial, ResourceCaps,
};
use oracles::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn coeff() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, -2i64..=2, 1i64..=3).prop_map(|(re, im, d)| GaussianRational::from_parts((re, d), (im, 1)))
}

fn poly(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), coeff()), 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial(e), c)))
    })
}

fn caps() -> ResourceCaps {
    ResourceCaps::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(2, 3, 4), b in poly(2, 3, 4), c in poly(2, 3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(2), a.clone());
    }

    #[test]
    fn leibniz_rule(a in poly(3, 3, 4), b in poly(3, 3, 4), var in 0usize..3) {
        let lhs = (&a * &b).partial_derivative(var).unwrap();
        let rhs = &(&a.partial_derivative(var).unwrap() * &b) + &(&a * &b.partial_derivative(var).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ord0_is_additive(a in poly(2, 4, 4), b in poly(2, 4, 4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).ord0(), Some(a.ord0().unwrap() + b.ord0().unwrap()));
    }

    #[test]
    fn print_parse_round_trip(a in poly(3, 4, 5)) {
        let back = parse_polynomial(&a.to_string(), 3).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn gaussian_field_inverse(c in coeff()) {
        prop_assume!(!c.is_zero());
        prop_assert!((&c * &c.inv().unwrap()).is_one());
    }

    #[test]
    fn squarefree_is_idempotent(a in poly(2, 2, 3), e in 1u32..=3) {
        prop_assume!(!a.is_constant());
        let p = a.pow(e);
        let s = squarefree_part(&p).unwrap();
        prop_assert_eq!(squarefree_part(&s).unwrap(), s.clone());
        prop_assert!(squarefree_part(&a).unwrap().equal_up_to_constant(&s));
        let m = max_multiplicity(&p).unwrap();
        prop_assert!(s.pow(m).div_exact(&p).is_some());
    }

    #[test]
    fn determinant_is_alternating(rows in prop::collection::vec(prop::collection::vec(poly(2, 2, 3), 2), 2)) {
        let r: Vec<Covector> = rows.into_iter().map(|c| Covector::new(c).unwrap()).collect();
        let d = jacobian_determinant(&r).unwrap();
        let swapped = jacobian_determinant(&[r[1].clone(), r[0].clone()]).unwrap();
        prop_assert_eq!(&swapped, &-&d);
        prop_assert!(jacobian_determinant(&[r[0].clone(), r[0].clone()]).unwrap().is_zero());
    }

    #[test]
    fn three_by_three_determinant_is_alternating(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let r: Vec<Covector> = (0..3)
            .map(|_| Covector::new((0..3).map(|_| random_poly(&mut rng, 3, 0, 2, 2)).collect()).unwrap())
            .collect();
        let d = jacobian_determinant(&r).unwrap();
        let cyc = jacobian_determinant(&[r[1].clone(), r[2].clone(), r[0].clone()]).unwrap();
        let odd = jacobian_determinant(&[r[0].clone(), r[2].clone(), r[1].clone()]).unwrap();
        prop_assert_eq!(cyc, d.clone());
        prop_assert_eq!(odd, -&d);
    }

    #[test]
    fn curve_substitution_is_multiplicative(
        a in poly(2, 3, 3), b in poly(2, 3, 3),
        e in prop::collection::vec(1u32..=3, 2), c in prop::collection::vec(coeff(), 2),
    ) {
        prop_assume!(c.iter().all(|x| !x.is_zero()));
        let fa = a.substitute_curve(&e, &c).unwrap();
        let fb = b.substitute_curve(&e, &c).unwrap();
        prop_assert_eq!((&a * &b).substitute_curve(&e, &c).unwrap(), fa.mul(&fb));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_basis_is_canonical(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, n, 1, 3, 3)).collect();
        let gb = buchberger(&gens, &MonomialOrder::Grevlex, &caps()).unwrap();
        // same ideal, different generators
        let mixed = vec![&gens[0] + &(&gens[1] * &random_poly(&mut rng, n, 0, 1, 2)), gens[1].clone(), gens[2].clone()];
        let mut shuffled = mixed;
        shuffled.reverse();
        prop_assert_eq!(buchberger(&shuffled, &MonomialOrder::Grevlex, &caps()).unwrap(), gb.clone());
        let ideal = Ideal::new(n, gens.clone()).unwrap();
        for g in &gens {
            prop_assert!(ideal_member(g, &ideal, &caps()).unwrap());
        }
    }

    #[test]
    fn membership_matches_linear_algebra(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let gens: Vec<Polynomial> =
            (0..2).map(|_| { let d = rand::Rng::gen_range(&mut rng, 1..=2); random_homogeneous(&mut rng, n, d, 2) }).collect();
        prop_assume!(gens.iter().all(|g| !g.is_zero()));
        let ideal = Ideal::new(n, gens.clone()).unwrap();
        for d in 2..=4 {
            // a random element of degree d and a random form of degree d
            let mut inside = Polynomial::zero(n);
            for g in &gens {
                let dg = g.total_degree().unwrap();
                if dg <= d {
                    inside = &inside + &(g * &random_homogeneous(&mut rng, n, d - dg, 2));
                }
            }
            let other = random_homogeneous(&mut rng, n, d, 3);
            for p in [inside, other] {
                prop_assert_eq!(ideal_member(&p, &ideal, &caps()).unwrap(), span_member(&p, &gens, d));
            }
        }
    }

    #[test]
    fn radical_membership_matches_power_search(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let n = 2;
        let a = random_poly(&mut rng, n, 1, 2, 2);
        let b = random_poly(&mut rng, n, 1, 2, 2);
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ideal = Ideal::new(n, vec![a.pow(2), b.pow(3)]).unwrap();
        for cand in [a.clone(), b.clone(), &a + &b, &a * &b, random_poly(&mut rng, n, 1, 2, 2)] {
            if cand.is_zero() {
                continue;
            }
            let rad = radical_member(&cand, &ideal, &caps()).unwrap();
            let found = power_search(&cand, &ideal, 12, &caps());
            if found.is_some() {
                prop_assert!(rad);
            }
            if rad {
                prop_assert!(found.is_some(), "{} in the radical but no power <= 12 found", cand);
            }
        }
    }

    #[test]
    fn colength_is_monotone_in_truncation_degree(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let n = 2;
        let gens: Vec<Polynomial> = (0..2).map(|_| random_poly(&mut rng, n, 1, 3, 3)).collect();
        let ideal = Ideal::new(n, gens).unwrap();
        let mut prev = 0;
        for d in 1..=8 {
            let c = truncated_colength(&ideal, d, &caps()).unwrap();
            prop_assert!(c >= prev);
            prev = c;
        }
    }

    #[test]
    fn monomial_colength_matches_staircase(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let gens = random_monomial_ideal(&mut rng, n, 4);
        let polys: Vec<Polynomial> = gens.iter().map(|g| monomial_poly(g)).collect();
        let report = local_colength(&Ideal::new(n, polys.clone()).unwrap(), &caps());
        prop_assert_eq!(report.finite(), staircase_count(&gens, n));
        let spec = DomainSpec::new(n, polys).unwrap();
        prop_assert_eq!(compute_q(&spec, &caps()).unwrap(), monomial_q(&gens, n));
        prop_assert_eq!(compute_s(&spec, &caps()).finite(), staircase_count(&gens, n));
    }

    #[test]
    fn probe_never_exceeds_q(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let gens = random_monomial_ideal(&mut rng, 2, 4);
        let spec = DomainSpec::new(2, gens.iter().map(|g| monomial_poly(g)).collect()).unwrap();
        let q = compute_q(&spec, &caps()).unwrap();
        let p = probe_p_lower(&spec, 4, 1).finite().unwrap();
        prop_assert!(p <= num_rational::Rational64::from_integer(q as i64));
    }
}

#[test]
fn nullstellensatz_is_monotone_in_d() {
    let i = Ideal::new(2, vec![parse_polynomial("z1^2", 2).unwrap(), parse_polynomial("z2^2", 2).unwrap()]).unwrap();
    for f in ["z1", "z2", "z1+z2", "z1*z2 + z2^2"] {
        let f = parse_polynomial(f, 2).unwrap();
        let mut last = false;
        // d = 6 squares to 36; degree-2 f needs room for degree 72
        let caps = ResourceCaps { max_degree: 80, ..caps() };
        for d in 4..=6 {
            let now = effective_nullstellensatz_check(&f, &i, d, &caps).unwrap().certified();
            assert!(now || !last, "certified at d-1 but not at d = {d}");
            assert!(now);
            last = now;
        }
    }
}

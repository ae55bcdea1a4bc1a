//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the test
//! harness so the lines always reach the terminal.

#[path = "../../core/tests/oracles/mod.rs"]
mod oracles;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use kohn_core::chain::{rules, OrderedGenerator, Payload, Provenance};
use kohn_core::*;
use num_rational::Rational64;
use oracles::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Wall-clock budget per worked-example chain run.
const CHAIN_BUDGET: Duration = Duration::from_secs(60);
/// Wall-clock budget for the invariants of one worked-example instance.
const INVARIANT_BUDGET: Duration = Duration::from_secs(30);
/// Random monomial ideals in the inequality suite.
const MONOMIAL_INSTANCES: usize = 24;
/// Largest exponent in those ideals.
const MONOMIAL_MAX_EXP: u32 = 5;
/// Random ideals in the Gröbner property suite.
const GB_INSTANCES: usize = 60;
/// Largest power tried by the power-search oracle.
const POWER_SEARCH_MAX: u32 = 12;
/// Seed shared by every randomized criterion.
const SEED: u64 = 0x00c0_ffee;

type Outcome = std::result::Result<String, String>;

fn p(s: &str) -> Polynomial {
    parse_polynomial(s, 2).unwrap()
}

fn caps() -> ResourceCaps {
    ResourceCaps::default()
}

fn example(m: u32, n: u32, k: u32) -> DomainSpec {
    DomainSpec::new(2, vec![p(&format!("z1^{m}")), p(&format!("z2^{n} + z2*z1^{k}"))]).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gb(i: &Ideal) -> Vec<Polynomial> {
    buchberger(i.generators(), &MonomialOrder::Grevlex, &caps()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for (m, n, k) in [(2, 3, 3), (2, 4, 5)] {
        let start = Instant::now();
        let rep = run_chain(&example(m, n, k), &caps(), Convention::SiuDirect);
        let elapsed = start.elapsed();
        ensure(rep.status == ChainStatus::Success, || format!("({m},{n},{k}) ended {:?}", rep.status))?;
        let df2 = p(&format!("z2^{n} + z2*z1^{k}")).partial_derivative(1).unwrap();
        let i1 = Ideal::new(2, vec![&p("z1") * &df2]).unwrap();
        ensure(gb(&rep.i_ideal(1).unwrap()) == gb(&i1), || format!("({m},{n},{k}) I1 differs"))?;
        ensure(gb(&rep.i_ideal(2).unwrap()) == gb(&Ideal::maximal(2)), || format!("({m},{n},{k}) I2 differs"))?;
        ensure(rep.i_ideal(3).map(|i| gb(&i)) == Some(vec![p("1")]), || format!("({m},{n},{k}) I3 differs"))?;
        ensure(elapsed < CHAIN_BUDGET, || format!("({m},{n},{k}) took {elapsed:?}"))?;
        notes.push(format!("({m},{n},{k}) in {:.1} ms", elapsed.as_secs_f64() * 1e3));
    }
    Ok(notes.join(", "))
}

fn criterion_2() -> Outcome {
    for (m, n, k) in [(2, 3, 3), (2, 4, 5)] {
        let rep = run_chain(&example(m, n, k), &caps(), Convention::SiuDirect);
        let j2 = rep.j_ideal(2).ok_or("no J2")?;
        let member = |s: String| ideal_member(&p(&s), &j2, &caps()).unwrap();
        ensure(member(format!("z1^{}", 2 * k + 2)), || format!("z1^(2K+2) ∉ J2 for K={k}"))?;
        ensure(member(format!("z2^{}", 2 * n - 2)), || format!("z2^(2N-2) ∉ J2 for N={n}"))?;
        ensure(!member(format!("z1^{k}")), || format!("z1^K ∈ J2 for K={k}"))?;
    }
    Ok("z1^(2K+2) ∈ J2, z2^(2N-2) ∈ J2, z1^K ∉ J2 for K=3,5".into())
}

fn criterion_3() -> Outcome {
    for (m, n, k) in [(2, 3, 3), (2, 4, 5)] {
        let rep = run_chain(&example(m, n, k), &caps(), Convention::SiuDirect);
        let w = non_effectiveness_witness(&rep, &p(&format!("z1^{k}")), &caps()).map_err(|e| e.to_string())?;
        ensure(w, || format!("no witness for K={k}"))?;
    }
    Ok("z1^K ∈ sqrt(J2) \\ J2 for K=3,5".into())
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for (m, n, k) in [(2, 3, 3), (2, 4, 5), (3, 3, 4)] {
        let start = Instant::now();
        let spec = example(m, n, k);
        let s = compute_s(&spec, &caps()).finite().ok_or("s not finite")?;
        let bracket = p_bracket(&spec, &caps(), m.max(n), 2).map_err(|e| e.to_string())?;
        let (type_lower, _) = finite_type_bracket(&bracket);
        let elapsed = start.elapsed();
        ensure(s == (m * n) as usize, || format!("({m},{n},{k}): s = {s}, want {}", m * n))?;
        let want = Rational64::from_integer(2 * m.max(n) as i64);
        ensure(type_lower == want, || format!("({m},{n},{k}): type lower {type_lower}, want {want}"))?;
        ensure(elapsed < INVARIANT_BUDGET, || format!("({m},{n},{k}) took {elapsed:?}"))?;
        notes.push(format!("({m},{n},{k}): s={s} type>={type_lower}"));
    }
    Ok(notes.join(", "))
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut checked = 0;
    for idx in 0..MONOMIAL_INSTANCES {
        let n = 2 + idx % 2;
        let gens = random_monomial_ideal(&mut rng, n, MONOMIAL_MAX_EXP);
        let polys: Vec<Polynomial> = gens.iter().map(|g| monomial_poly(g)).collect();
        let oracle = staircase_count(&gens, n).ok_or("oracle: infinite colength")?;
        let spec = DomainSpec::new(n, polys).unwrap();
        let s = compute_s(&spec, &caps()).finite();
        ensure(s == Some(oracle), || format!("{gens:?}: local_colength {s:?}, staircase {oracle}"))?;
        let q = compute_q(&spec, &caps()).map_err(|e| e.to_string())?;
        ensure(q == monomial_q(&gens, n), || format!("{gens:?}: q {q} vs oracle {}", monomial_q(&gens, n)))?;
        let bracket = p_bracket(&spec, &caps(), MONOMIAL_MAX_EXP, 1).map_err(|e| e.to_string())?;
        for c in verify_inequalities(oracle as u64, q, &bracket, n) {
            ensure(c.holds, || format!("{gens:?}: {} fails ({} vs {})", c.name, c.lhs, c.rhs))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} monomial ideals, staircase agreement and 4 inequalities each"))
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 6);
    let (mut la_checks, mut rad_checks, mut rad_positive) = (0, 0, 0);
    for idx in 0..GB_INSTANCES {
        let n = 2 + idx % 2;
        let homogeneous = idx % 4 < 2;
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| loop {
                let d = rng.gen_range(1..=3);
                let g = if homogeneous { random_homogeneous(&mut rng, n, d, 3) } else { random_poly(&mut rng, n, 1, d, 3) };
                if !g.is_zero() {
                    break g;
                }
            })
            .collect();
        let ideal = Ideal::new(n, gens.clone()).unwrap();
        let basis = buchberger(&gens, &MonomialOrder::Grevlex, &caps()).map_err(|e| e.to_string())?;
        for g in &gens {
            ensure(normal_form(g, &basis, &MonomialOrder::Grevlex).is_zero(), || format!("{g} does not reduce to 0"))?;
        }

        // linear algebra: exact on homogeneous data, sound on the rest
        for d in 2..=4u32 {
            let mut inside = Polynomial::zero(n);
            for g in &gens {
                let dg = g.total_degree().unwrap();
                if dg <= d {
                    let h = if homogeneous { random_homogeneous(&mut rng, n, d - dg, 2) } else { random_poly(&mut rng, n, 0, d - dg, 2) };
                    inside = &inside + &(g * &h);
                }
            }
            let other = if homogeneous { random_homogeneous(&mut rng, n, d, 3) } else { random_poly(&mut rng, n, 0, d, 3) };
            for cand in [inside, other] {
                let gb_says = ideal_member(&cand, &ideal, &caps()).map_err(|e| e.to_string())?;
                let la_says = span_member(&cand, &gens, d);
                if homogeneous {
                    ensure(gb_says == la_says, || format!("{cand}: GB {gb_says}, linear algebra {la_says}"))?;
                } else {
                    ensure(!la_says || gb_says, || format!("{cand}: linear algebra finds it, GB does not"))?;
                }
                la_checks += 1;
            }
        }

        let mut candidates: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
        candidates.push(squarefree_part(&gens[0]).map_err(|e| e.to_string())?);
        candidates.push(random_poly(&mut rng, n, 1, 2, 2));
        for cand in candidates.into_iter().filter(|c| !c.is_zero()) {
            let rad = radical_member(&cand, &ideal, &caps()).map_err(|e| e.to_string())?;
            let power = power_search(&cand, &ideal, POWER_SEARCH_MAX, &caps());
            ensure(rad == power.is_some(), || format!("{cand} vs {:?}: radical {rad}, power search {power:?}", gens))?;
            rad_checks += 1;
            rad_positive += rad as usize;
        }
    }
    Ok(format!(
        "{GB_INSTANCES} ideals: generators reduce to 0; {la_checks} membership checks vs linear algebra; \
         {rad_checks} radical checks ({rad_positive} positive) vs power search k <= {POWER_SEARCH_MAX}"
    ))
}

fn criterion_7() -> Outcome {
    let spec = example(2, 3, 3);
    let mut state = init_chain(&spec, Convention::SiuDirect);
    let mut push = |provenance: Provenance| {
        let id = state.arena.len();
        let order = Rational64::from_integer(0);
        state.arena.push(OrderedGenerator { id, payload: Payload::Function(p("z1")), order, provenance });
        id
    };
    let sigma = push(Provenance::InitSigma { index: 0 });
    let grad = push(Provenance::Gradient { of: sigma });
    let det = push(Provenance::Determinant { rows: vec![sigma, grad] });
    let root = push(Provenance::Radical { witnesses: vec![det], root: 5 });
    let r = state.r;
    let checks = [
        ("rule 1: r has order 1", state.derived_order(r), Rational64::from_integer(1)),
        ("rule 2: initial forms 1/2", state.derived_order(sigma), Rational64::new(1, 2)),
        ("rule 3: gradient halves", state.derived_order(grad), Rational64::new(1, 4)),
        ("rule 4: determinant takes min", state.derived_order(det), Rational64::new(1, 4)),
        ("radical root 5 divides by 5", state.derived_order(root), Rational64::new(1, 20)),
    ];
    for (name, got, want) in checks {
        ensure(got == want, || format!("{name}: got {got}, want {want}"))?;
    }
    ensure(rules::determinant(&[Rational64::new(1, 3), Rational64::new(1, 7)]) == Rational64::new(1, 7), || {
        "rules::determinant".into()
    })?;
    Ok("rules 1-4 and the radical rule on constructed trees".into())
}

fn criterion_8() -> Outcome {
    let squares = Ideal::new(2, vec![p("z1^2"), p("z2^2")]).unwrap();
    let ex = example(2, 3, 3).ideal();
    let mut kinds = Vec::new();
    for (ideal, d, label) in [(&squares, 4, "<z1^2, z2^2>"), (&ex, 6, "example")] {
        for f in ["z1", "z2", "z1+z2"] {
            let c = effective_nullstellensatz_check(&p(f), ideal, d, &caps()).map_err(|e| format!("{f}, {label}: {e}"))?;
            ensure(c.certified(), || format!("({f})^{} ∉ {label}", d * d))?;
            kinds.push(c);
        }
    }
    let global = kinds.iter().filter(|c| **c == Certificate::Global).count();
    Ok(format!("6/6 memberships f^(d^2) ∈ I ({global} global)"))
}

fn criterion_9() -> Outcome {
    let homogeneous = [
        ("z1^2 + z2^2", 2),
        ("z1^3 + z2^3", 2),
        ("z1^4 - z2^4 + z1*z2^3", 2),
        ("z1*z2", 2),
        ("z1^2 + z2^2 + z3^2", 3),
        ("z1^3 + z2^3 + z3^3 - z1*z2*z3", 3),
    ];
    for (f, n) in homogeneous {
        let f = parse_polynomial(f, n).unwrap();
        let c = skoda_jacobian_check(&f, &caps()).map_err(|e| e.to_string())?;
        ensure(c.certified(), || format!("{f}: NOT CERTIFIED"))?;
    }
    let odd = p("z1^3 + z2^3 + z1^2*z2^2");
    let recorded = skoda_jacobian_check(&odd, &caps()).map_err(|e| e.to_string())?;
    ensure(
        skoda_division_check(&p("z1"), &[p("z1"), p("z2")], &caps()).map_err(|e| e.to_string())?.certified(),
        || "rho = z1, g = (z1, z2)".into(),
    )?;
    ensure(
        skoda_division_check(&p("z1*z2"), &[p("z1^2"), p("z2^2")], &caps()).map_err(|e| e.to_string())?.certified(),
        || "rho = z1 z2, g = (z1^2, z2^2)".into(),
    )?;
    let third = skoda_division_check(&p("z1+z2"), &[p("z1^2"), p("z2^3")], &caps()).map_err(|e| e.to_string())?;
    Ok(format!(
        "{} Euler cases certified; {odd}: {recorded:?}; division examples certified; (z1+z2, (z1^2, z2^3)): {third:?}",
        homogeneous.len()
    ))
}

fn criterion_10() -> Outcome {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    let bin = env!("CARGO_BIN_EXE_kohn");
    for name in ["example_k3", "example_k5"] {
        let want = std::fs::read(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{name}.json")))
            .map_err(|e| e.to_string())?;
        for threads in ["1", "2", "3", "8"] {
            for _ in 0..2 {
                let spec = root.join(format!("specs/{name}.dom"));
                let out = Command::new(bin)
                    .args(["--threads", threads, "chain"])
                    .arg(&spec)
                    .arg("--json")
                    .output()
                    .map_err(|e| e.to_string())?;
                ensure(out.status.code() == Some(0), || format!("{name}: exit {:?}", out.status.code()))?;
                ensure(out.stdout == want, || format!("{name} differs from golden with {threads} threads"))?;
            }
        }
    }
    let script = Command::new("bash")
        .arg(root.join("scripts/e2e_exit_codes.sh"))
        .env("KOHN", bin)
        .env("SPECS", root.join("specs"))
        .output()
        .map_err(|e| e.to_string())?;
    let log = String::from_utf8_lossy(&script.stdout).into_owned();
    ensure(script.status.success(), || format!("exit-code script failed:\n{log}"))?;
    let exercised = log.lines().filter(|l| l.starts_with("ok")).count();
    Ok(format!("golden traces identical for 1/2/3/8 threads; {exercised} exit-code cases (0-4) pass"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("1 worked example I1, I2, I3", criterion_1),
        ("2 J2 membership triple", criterion_2),
        ("3 non-effectiveness witness", criterion_3),
        ("4 invariants on the example", criterion_4),
        ("5 inequality suite", criterion_5),
        ("6 Gröbner property suite", criterion_6),
        ("7 order bookkeeping", criterion_7),
        ("8 effective Nullstellensatz battery", criterion_8),
        ("9 Skoda conclusions", criterion_9),
        ("10 CLI golden files and exit codes", criterion_10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} [{secs:.2}s]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} [{secs:.2}s]: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}

//! Runs the chain and the invariant report on `F = (z1^M, z2^N + z2 z1^K)`.
//!
//! ```text
//! cargo run --release -p kohn-core --example worked -- 2 3 3
//! ```

use kohn_core::{
    chain_trace, invariant_report, parse_polynomial, run_chain, to_text, Convention, DomainSpec, ResourceCaps,
};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (m, n, k) = match args.as_slice() {
        [m, n, k] => (*m, *n, *k),
        _ => (2, 3, 3),
    };
    let f = vec![
        parse_polynomial(&format!("z1^{m}"), 2).unwrap(),
        parse_polynomial(&format!("z2^{n} + z2*z1^{k}"), 2).unwrap(),
    ];
    let spec = DomainSpec::new(2, f).unwrap();
    let caps = ResourceCaps::default();
    let started = std::time::Instant::now();
    let report = run_chain(&spec, &caps, Convention::SiuDirect);
    let invariants = invariant_report(&spec, &caps, m.max(n), 2);
    print!("{}", to_text(&chain_trace(&report, Some(&invariants))));
    eprintln!("elapsed: {:?}", started.elapsed());
}

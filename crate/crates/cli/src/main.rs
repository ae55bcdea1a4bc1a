//! `kohn`: run multiplier-ideal chains, effective invariants and membership
//! queries on special domains described by a key-value file.
//!
//! Exit codes: 0 success or member, 1 input error, 2 stalled, 3 cap
//! exceeded, 4 non-member.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kohn_core::{
    chain_trace, ideal_member, invariant_report, invariant_trace, invariants_text, invariants_to_json,
    load_domain_spec, parse_polynomial, radical_member, run_chain, to_json, to_text, ChainStatus, Convention,
    DomainFile, ResourceCaps,
};

mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const STALLED: u8 = 2;
    pub const CAP: u8 = 3;
    pub const NON_MEMBER: u8 = 4;
}

const DEFAULT_TRIALS: usize = 2;
const MAX_DEFAULT_PROBE_CAP: u32 = 8;

#[derive(Parser)]
#[command(name = "kohn", version, about = "Multiplier-ideal chains on special domains")]
struct Cli {
    /// Worker threads for the parallel parts (output never depends on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit JSON.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit human-readable text (default).
    #[arg(long)]
    text: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Siu,
    Hermitian,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Siu => Convention::SiuDirect,
            ConventionArg::Hermitian => Convention::Hermitian,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the chain M_k -> J_k -> I_k until 1 ∈ I_k.
    Chain {
        spec: PathBuf,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long, value_enum)]
        convention: Option<ConventionArg>,
    },
    /// Compute s, q, the p bracket and the inequality chain.
    Invariants {
        spec: PathBuf,
        #[command(flatten)]
        output: Output,
        /// Largest curve exponent probed.
        #[arg(long)]
        probe_cap: Option<u32>,
        /// Random coefficient retries per exponent vector.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Decide membership of a polynomial in a named chain ideal (J1, I2, ...).
    Member {
        spec: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        ideal: String,
        /// Test radical membership instead.
        #[arg(long)]
        radical: bool,
        #[arg(long, value_enum)]
        convention: Option<ConventionArg>,
    },
}

fn load(path: &PathBuf) -> Result<DomainFile, ExitCode> {
    load_domain_spec(path).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(exit::INPUT)
    })
}

fn cmd_chain(path: &PathBuf, output: &Output, max_steps: Option<usize>, conv: Option<ConventionArg>) -> Result<u8, ExitCode> {
    let file = load(path)?;
    let mut caps = file.caps;
    if let Some(s) = max_steps {
        caps.max_steps = s;
    }
    let convention = conv.map(Convention::from).unwrap_or(file.convention);
    let report = run_chain(&file.spec, &caps, convention);
    let trace = chain_trace(&report, None);
    if output.json {
        print!("{}", to_json(&trace));
    } else {
        print!("{}", to_text(&trace));
    }
    if let Some(e) = &report.cap_error {
        eprintln!("cap exceeded: {e}");
    }
    Ok(match report.status {
        ChainStatus::Success => exit::OK,
        ChainStatus::Stalled => exit::STALLED,
        ChainStatus::CapExceeded | ChainStatus::Running => exit::CAP,
    })
}

fn cmd_invariants(path: &PathBuf, output: &Output, probe_cap: Option<u32>, trials: Option<usize>) -> Result<u8, ExitCode> {
    let file = load(path)?;
    let default_cap = file
        .spec
        .functions()
        .iter()
        .filter_map(|f| f.total_degree())
        .max()
        .unwrap_or(1)
        .clamp(1, MAX_DEFAULT_PROBE_CAP);
    let cap = probe_cap.or(file.probe_cap).unwrap_or(default_cap);
    let trials = trials.or(file.trials).unwrap_or(DEFAULT_TRIALS);
    let report = invariant_report(&file.spec, &file.caps, cap, trials);
    let trace = invariant_trace(&report);
    if output.json {
        print!("{}", invariants_to_json(&trace));
    } else {
        print!("{}", invariants_text(&trace));
    }
    if report.incomplete() {
        eprintln!("caps blocked at least one quantity");
        return Ok(exit::CAP);
    }
    if !report.all_hold() {
        eprintln!("WARNING: an inequality is violated; this contradicts the expected chain p <= q <= s");
    }
    Ok(exit::OK)
}

fn cmd_member(path: &PathBuf, poly: &str, name: &str, radical: bool, conv: Option<ConventionArg>) -> Result<u8, ExitCode> {
    let file = load(path)?;
    let n = file.spec.n();
    let p = parse_polynomial(poly, n).map_err(|e| {
        eprintln!("error: --poly: {e}");
        ExitCode::from(exit::INPUT)
    })?;
    let k: usize = match name.get(1..).and_then(|s| s.parse().ok()) {
        Some(k) if k >= 1 && matches!(&name[..1], "J" | "I") => k,
        _ => {
            eprintln!("error: unknown ideal name '{name}' (expected J<k> or I<k>)");
            return Err(ExitCode::from(exit::INPUT));
        }
    };
    let mut caps: ResourceCaps = file.caps;
    caps.max_steps = caps.max_steps.max(k);
    let convention = conv.map(Convention::from).unwrap_or(file.convention);
    let report = run_chain(&file.spec, &caps, convention);
    let Some(ideal) = report.named_ideal(name) else {
        eprintln!("error: the chain stopped ({:?}) before materializing {name}", report.status);
        return Ok(if report.status == ChainStatus::CapExceeded { exit::CAP } else { exit::INPUT });
    };
    let verdict = if radical { radical_member(&p, &ideal, &caps) } else { ideal_member(&p, &ideal, &caps) };
    let relation = if radical { format!("sqrt({name})") } else { name.to_string() };
    match verdict {
        Ok(true) => {
            println!("{poly} ∈ {relation}: member (global membership, which certifies membership of germs at 0)");
            Ok(exit::OK)
        }
        Ok(false) => {
            println!("{poly} ∉ {relation}: non-member (global polynomial ideal)");
            Ok(exit::NON_MEMBER)
        }
        Err(e) => {
            eprintln!("cap exceeded: {e}");
            Ok(exit::CAP)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(exit::INPUT);
        }
    }
    let result = match &cli.command {
        Command::Chain { spec, output, max_steps, convention } => cmd_chain(spec, output, *max_steps, *convention),
        Command::Invariants { spec, output, probe_cap, trials } => cmd_invariants(spec, output, *probe_cap, *trials),
        Command::Member { spec, poly, ideal, radical, convention } => cmd_member(spec, poly, ideal, *radical, *convention),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(code) => code,
    }
}

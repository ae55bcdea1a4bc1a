//! Exact polynomial algebra over the Gaussian rationals and the multiplier
//! ideal chain for special domains `Re(w) + sum |F_j(z)|^2`.

pub mod chain;
pub mod coeff;
pub mod covector;
pub mod domain_file;
pub mod error;
pub mod gcd;
pub mod groebner;
pub mod invariants;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod trace;

pub use coeff::GaussianRational;
pub use covector::{jacobian_determinant, Covector};
pub use error::{AlgebraError, CapKind, Result};
pub use gcd::{poly_gcd, squarefree_part};
pub use groebner::{
    buchberger, eliminate, ideal_equal, ideal_member, local_colength, normal_form, radical_generators,
    radical_member, truncated_colength, ColengthReport, Ideal, RadicalQuality, ResourceCaps,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{poly_arith, ArithOp, Polynomial, UnivariatePolynomial};
pub use chain::{
    init_chain, non_effectiveness_witness, run_chain, ChainReport, ChainState, ChainStatus, Convention, DomainSpec,
    GenId, OrderedGenerator, Payload, Provenance,
};
pub use invariants::{
    compute_q, compute_s, effective_nullstellensatz_check, finite_type_bracket, invariant_report, p_bracket,
    probe_p_lower, skoda_division_check, skoda_jacobian_check, verify_inequalities, Certificate, InvariantReport,
    PBracket, ProbeBound,
};
pub use domain_file::{load_domain_spec, parse_domain_file, DomainFile, DomainFileError};
pub use parse::{parse_polynomial, ParseError};
pub use trace::{chain_trace, invariant_trace, invariants_text, invariants_to_json, to_json, to_text, ChainTrace, InvariantTrace};

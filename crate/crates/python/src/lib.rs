//! Python bindings: polynomials, ideals, chain runs and invariant reports.

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use kohn_core as core;
use kohn_core::{Convention, ResourceCaps};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_error(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn convention(name: &str) -> PyResult<Convention> {
    match name {
        "siu" | "siu_direct" => Ok(Convention::SiuDirect),
        "hermitian" => Ok(Convention::Hermitian),
        _ => Err(PyValueError::new_err(format!("unknown convention '{name}'"))),
    }
}

fn caps(max_steps: Option<usize>) -> ResourceCaps {
    let mut caps = ResourceCaps::default();
    if let Some(s) = max_steps {
        caps.max_steps = s;
    }
    caps
}

/// Polynomial in `z1..zn` with Gaussian-rational coefficients.
#[pyclass(name = "Polynomial", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPolynomial(core::Polynomial);

#[pymethods]
impl PyPolynomial {
    /// Parse `src`, e.g. `Polynomial("z2^3 + z2*z1^3", 2)`.
    #[new]
    fn new(src: &str, n: usize) -> PyResult<Self> {
        core::parse_polynomial(src, n).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn var(n: usize, index: usize) -> PyResult<Self> {
        if index == 0 || index > n {
            return Err(PyValueError::new_err(format!("z{index} out of range z1..z{n}")));
        }
        Ok(Self(core::Polynomial::var(n, index - 1)))
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    fn total_degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    /// Vanishing order at the origin; `None` for the zero polynomial.
    fn ord0(&self) -> Option<u32> {
        self.0.ord0()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn vanishes_at_origin(&self) -> bool {
        self.0.vanishes_at_origin()
    }

    /// `d/dz_index`, 1-based.
    fn partial(&self, index: usize) -> PyResult<Self> {
        let i = index.checked_sub(1).ok_or_else(|| PyValueError::new_err("indices start at 1"))?;
        self.0.partial_derivative(i).map(Self).map_err(value_error)
    }

    fn gradient(&self) -> Vec<Self> {
        self.0.gradient().into_iter().map(Self).collect()
    }

    fn monic(&self) -> Self {
        Self(self.0.monic(&core::MonomialOrder::Grevlex))
    }

    fn squarefree_part(&self) -> PyResult<Self> {
        core::squarefree_part(&self.0).map(Self).map_err(value_error)
    }

    fn gcd(&self, other: &Self) -> PyResult<Self> {
        core::poly_gcd(&self.0, &other.0).map(Self).map_err(value_error)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        core::poly_arith(&self.0, &other.0, core::ArithOp::Add).map(Self).map_err(value_error)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        core::poly_arith(&self.0, &other.0, core::ArithOp::Sub).map(Self).map_err(value_error)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        core::poly_arith(&self.0, &other.0, core::ArithOp::Mul).map(Self).map_err(value_error)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __pow__(&self, e: u32, _modulo: Option<Py<PyAny>>) -> Self {
        Self(self.0.pow(e))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}', {})", self.0, self.0.nvars())
    }
}

/// Ideal of the polynomial ring, with a cached Gröbner basis.
#[pyclass(name = "Ideal", frozen)]
struct PyIdeal(core::Ideal);

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(n: usize, generators: Vec<PyPolynomial>) -> PyResult<Self> {
        core::Ideal::new(n, generators.into_iter().map(|p| p.0).collect()).map(Self).map_err(value_error)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    fn generators(&self) -> Vec<PyPolynomial> {
        self.0.generators().iter().cloned().map(PyPolynomial).collect()
    }

    /// Reduced grevlex Gröbner basis.
    fn groebner(&self) -> PyResult<Vec<PyPolynomial>> {
        let gb = self.0.groebner(&ResourceCaps::default()).map_err(runtime_error)?;
        Ok(gb.iter().cloned().map(PyPolynomial).collect())
    }

    fn contains(&self, p: &PyPolynomial) -> PyResult<bool> {
        core::ideal_member(&p.0, &self.0, &ResourceCaps::default()).map_err(runtime_error)
    }

    fn __contains__(&self, p: &PyPolynomial) -> PyResult<bool> {
        self.contains(p)
    }

    fn radical_contains(&self, p: &PyPolynomial) -> PyResult<bool> {
        core::radical_member(&p.0, &self.0, &ResourceCaps::default()).map_err(runtime_error)
    }

    /// Local colength at the origin; `None` when it did not stabilize.
    fn colength(&self) -> Option<usize> {
        core::local_colength(&self.0, &ResourceCaps::default()).finite()
    }

    fn equals(&self, other: &PyIdeal) -> PyResult<bool> {
        core::ideal_equal(&self.0, &other.0, &ResourceCaps::default()).map_err(runtime_error)
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.0.generators().iter().map(|g| g.to_string()).collect();
        format!("Ideal(<{}>)", gens.join(", "))
    }
}

fn spec_from(n: usize, functions: Vec<String>) -> PyResult<core::DomainSpec> {
    let polys = functions
        .iter()
        .map(|s| core::parse_polynomial(s, n).map_err(value_error))
        .collect::<PyResult<Vec<_>>>()?;
    core::DomainSpec::new(n, polys).map_err(value_error)
}

/// Result of [`run_chain`].
#[pyclass(name = "ChainResult", frozen)]
struct PyChainResult(core::ChainReport);

#[pymethods]
impl PyChainResult {
    /// `SUCCESS`, `STALLED` or `CAP_EXCEEDED`.
    #[getter]
    fn status(&self) -> String {
        match self.0.status {
            core::ChainStatus::Success => "SUCCESS",
            core::ChainStatus::Stalled => "STALLED",
            core::ChainStatus::CapExceeded => "CAP_EXCEEDED",
            core::ChainStatus::Running => "RUNNING",
        }
        .to_string()
    }

    #[getter]
    fn steps(&self) -> usize {
        self.0.steps.len()
    }

    /// Assigned order of the unit generator, as a string like `"1/40"`.
    #[getter]
    fn final_order(&self) -> Option<String> {
        self.0.final_order.map(|r| r.to_string())
    }

    /// `J_k` or `I_k` by name, e.g. `"J2"`.
    fn ideal(&self, name: &str) -> PyResult<PyIdeal> {
        self.0
            .named_ideal(name)
            .map(PyIdeal)
            .ok_or_else(|| PyValueError::new_err(format!("no ideal named '{name}' in this run")))
    }

    fn non_effectiveness_witness(&self, candidate: &PyPolynomial) -> PyResult<bool> {
        core::non_effectiveness_witness(&self.0, &candidate.0, &ResourceCaps::default()).map_err(runtime_error)
    }

    fn json(&self) -> String {
        core::to_json(&core::chain_trace(&self.0, None))
    }

    fn text(&self) -> String {
        core::to_text(&core::chain_trace(&self.0, None))
    }
}

/// Runs the chain for `r = Re(w) + sum |F_j|^2` with `F_j` given as strings.
#[pyfunction]
#[pyo3(signature = (n, functions, convention = "siu", max_steps = None))]
fn run_chain(py: Python<'_>, n: usize, functions: Vec<String>, convention: &str, max_steps: Option<usize>) -> PyResult<PyChainResult> {
    let spec = spec_from(n, functions)?;
    let conv = self::convention(convention)?;
    let caps = caps(max_steps);
    let report = py.detach(|| core::run_chain(&spec, &caps, conv));
    Ok(PyChainResult(report))
}

/// Result of [`invariants`].
#[pyclass(name = "Invariants", frozen, get_all)]
struct PyInvariants {
    s: Option<usize>,
    q: Option<u32>,
    /// Rational lower bound for `p`, as a string.
    p_lower: Option<String>,
    p_upper: Option<u32>,
    type_lower: Option<String>,
    type_upper: Option<u32>,
    /// `(name, holds, lhs, rhs)` per inequality.
    inequalities: Vec<(String, bool, BigUint, BigUint)>,
}

#[pymethods]
impl PyInvariants {
    fn all_hold(&self) -> bool {
        self.inequalities.len() == 4 && self.inequalities.iter().all(|c| c.1)
    }

    fn __repr__(&self) -> String {
        format!(
            "Invariants(s={:?}, q={:?}, p in [{:?}, {:?}])",
            self.s, self.q, self.p_lower, self.p_upper
        )
    }
}

/// `s`, `q`, the `p` bracket, the finite-type bracket and the inequality chain.
#[pyfunction]
#[pyo3(signature = (n, functions, probe_cap = 4, trials = 2))]
fn invariants(py: Python<'_>, n: usize, functions: Vec<String>, probe_cap: u32, trials: usize) -> PyResult<PyInvariants> {
    let spec = spec_from(n, functions)?;
    let report = py.detach(|| core::invariant_report(&spec, &ResourceCaps::default(), probe_cap, trials));
    Ok(PyInvariants {
        s: report.s.finite(),
        q: report.q,
        p_lower: report.p_lower.map(|r| r.to_string()),
        p_upper: report.p_upper,
        type_lower: report.type_lower.map(|r| r.to_string()),
        type_upper: report.type_upper,
        inequalities: report.inequalities.into_iter().map(|c| (c.name.to_string(), c.holds, c.lhs, c.rhs)).collect(),
    })
}

/// Parses a domain file; returns `(n, [F_j as Polynomial], convention)`.
#[pyfunction]
fn load_domain(path: &str) -> PyResult<(usize, Vec<PyPolynomial>, String)> {
    let file = core::load_domain_spec(path).map_err(value_error)?;
    let conv = match file.convention {
        Convention::SiuDirect => "siu",
        Convention::Hermitian => "hermitian",
    };
    Ok((file.spec.n(), file.spec.functions().iter().cloned().map(PyPolynomial).collect(), conv.to_string()))
}

/// `f^(d^2) ∈ I`, certified globally or at the origin.
#[pyfunction]
fn nullstellensatz_check(f: &PyPolynomial, ideal: &PyIdeal, d: u32) -> PyResult<bool> {
    core::effective_nullstellensatz_check(&f.0, &ideal.0, d, &ResourceCaps::default())
        .map(|c| c.certified())
        .map_err(value_error)
}

/// `f^(n+1)` in the Jacobian ideal of `f`.
#[pyfunction]
fn skoda_jacobian_check(f: &PyPolynomial) -> PyResult<bool> {
    core::skoda_jacobian_check(&f.0, &ResourceCaps::default()).map(|c| c.certified()).map_err(value_error)
}

#[pymodule]
fn kohn(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyChainResult>()?;
    m.add_class::<PyInvariants>()?;
    m.add_function(wrap_pyfunction!(run_chain, m)?)?;
    m.add_function(wrap_pyfunction!(invariants, m)?)?;
    m.add_function(wrap_pyfunction!(load_domain, m)?)?;
    m.add_function(wrap_pyfunction!(nullstellensatz_check, m)?)?;
    m.add_function(wrap_pyfunction!(skoda_jacobian_check, m)?)?;
    Ok(())
}

//! Key-value domain files:
//!
//! ```text
//! # the worked example with K = 3
//! n = 2
//! F = z1^2
//! F = z2^3 + z2*z1^3
//! convention = siu
//! max_steps = 8
//! ```

use std::fmt;
use std::path::Path;

use crate::chain::{Convention, DomainSpec};
use crate::error::AlgebraError;
use crate::groebner::ResourceCaps;
use crate::parse::parse_polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainFile {
    pub spec: DomainSpec,
    pub convention: Convention,
    pub caps: ResourceCaps,
    pub probe_cap: Option<u32>,
    pub trials: Option<usize>,
}

#[derive(Debug)]
pub enum DomainFileError {
    Io(std::io::Error),
    /// `line` is 1-based; `column` is 1-based within the line, when known.
    Syntax { line: usize, column: Option<usize>, message: String },
    Invalid(String),
}

impl fmt::Display for DomainFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainFileError::Io(e) => write!(f, "I/O error: {e}"),
            DomainFileError::Syntax { line, column: Some(c), message } => write!(f, "line {line}, column {c}: {message}"),
            DomainFileError::Syntax { line, column: None, message } => write!(f, "line {line}: {message}"),
            DomainFileError::Invalid(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for DomainFileError {}

fn syntax(line: usize, column: Option<usize>, message: impl Into<String>) -> DomainFileError {
    DomainFileError::Syntax { line, column, message: message.into() }
}

fn parse_int<T: std::str::FromStr>(line: usize, key: &str, value: &str) -> Result<T, DomainFileError> {
    value
        .parse()
        .map_err(|_| syntax(line, None, format!("{key} expects a non-negative integer, got '{value}'")))
}

/// Parses the text of a domain file.
pub fn parse_domain_file(text: &str) -> Result<DomainFile, DomainFileError> {
    let mut n: Option<usize> = None;
    let mut sources: Vec<(usize, usize, String)> = Vec::new();
    let mut convention = Convention::default();
    let mut caps = ResourceCaps::default();
    let mut probe_cap = None;
    let mut trials = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        let Some(eq) = content.find('=') else {
            return Err(syntax(lineno, None, "expected 'key = value'"));
        };
        let key = content[..eq].trim();
        let value_raw = &content[eq + 1..];
        let value = value_raw.trim();
        let value_col = eq + 2 + (value_raw.len() - value_raw.trim_start().len());
        match key {
            "n" => n = Some(parse_int(lineno, key, value)?),
            "F" => sources.push((lineno, value_col, value.to_string())),
            "convention" => {
                convention = match value {
                    "siu" | "siu_direct" => Convention::SiuDirect,
                    "hermitian" => Convention::Hermitian,
                    _ => return Err(syntax(lineno, None, format!("unknown convention '{value}' (siu|hermitian)"))),
                }
            }
            "max_degree" => caps.max_degree = parse_int(lineno, key, value)?,
            "max_pairs" => caps.max_pairs = parse_int(lineno, key, value)?,
            "max_steps" => caps.max_steps = parse_int(lineno, key, value)?,
            "max_colength_degree" => caps.max_colength_degree = parse_int(lineno, key, value)?,
            "probe_cap" => probe_cap = Some(parse_int(lineno, key, value)?),
            "trials" => trials = Some(parse_int(lineno, key, value)?),
            _ => return Err(syntax(lineno, Some(1), format!("unknown key '{key}'"))),
        }
    }

    let n = n.ok_or_else(|| DomainFileError::Invalid("missing 'n = <int>'".into()))?;
    if n == 0 {
        return Err(DomainFileError::Invalid("n must be positive".into()));
    }
    if sources.is_empty() {
        return Err(DomainFileError::Invalid("missing 'F = <poly>'".into()));
    }
    let mut functions = Vec::with_capacity(sources.len());
    for (line, col, src) in &sources {
        let p = parse_polynomial(src, n).map_err(|e| syntax(*line, Some(col + e.column - 1), e.message))?;
        if !p.vanishes_at_origin() {
            return Err(syntax(*line, None, format!("F must vanish at the origin: {src}")));
        }
        functions.push(p);
    }
    let spec = DomainSpec::new(n, functions).map_err(|e| match e {
        AlgebraError::NotVanishing(m) => DomainFileError::Invalid(format!("F must vanish at the origin: {m}")),
        other => DomainFileError::Invalid(other.to_string()),
    })?;
    Ok(DomainFile { spec, convention, caps, probe_cap, trials })
}

/// Reads and parses a domain file from disk.
pub fn load_domain_spec(path: impl AsRef<Path>) -> Result<DomainFile, DomainFileError> {
    let text = std::fs::read_to_string(path).map_err(DomainFileError::Io)?;
    parse_domain_file(&text)
}

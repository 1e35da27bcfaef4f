//! Resolution of `--p`/`--q` distribution descriptors: inline generators
//! (`binomial:N:P`, `gaussian:MU:VAR`) or files (JSON object with a
//! `weights` array, or one weight per line).

use std::fmt;
use std::path::Path;

use serde::Deserialize;

use geoskew::{binomial_pmf, gaussian_density, normalize, Density, NormalizeMode, ProbVec};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::Parse(msg) => write!(f, "{msg}"),
            CliError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<geoskew::Error> for CliError {
    fn from(e: geoskew::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub enum Source {
    Discrete(ProbVec),
    Continuous(Density),
}

#[derive(Deserialize)]
struct DistFile {
    weights: Vec<f64>,
    #[serde(default = "default_true")]
    normalize: bool,
}

fn default_true() -> bool {
    true
}

/// Resolve a descriptor into a distribution. Generator specs are recognized
/// by their prefix; anything else is treated as a file path.
pub fn resolve(spec: &str, mode: NormalizeMode) -> Result<Source, CliError> {
    if let Some(rest) = spec.strip_prefix("binomial:") {
        let (n, prob) = split_two(rest, spec)?;
        if n.fract() != 0.0 || !(1.0..=u32::MAX as f64).contains(&n) {
            return Err(CliError::Parse(format!(
                "binomial count must be a positive integer, got `{n}`"
            )));
        }
        return Ok(Source::Discrete(binomial_pmf(n as u32, prob)?));
    }
    if let Some(rest) = spec.strip_prefix("gaussian:") {
        let (mu, var) = split_two(rest, spec)?;
        return Ok(Source::Continuous(gaussian_density(mu, var)?));
    }
    load_file(Path::new(spec), mode).map(Source::Discrete)
}

fn split_two(rest: &str, spec: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = rest.split(':').collect();
    if parts.len() != 2 {
        return Err(CliError::Parse(format!(
            "generator `{spec}` needs exactly two `:`-separated parameters"
        )));
    }
    let a = parts[0]
        .parse::<f64>()
        .map_err(|e| CliError::Parse(format!("bad generator parameter `{}`: {e}", parts[0])))?;
    let b = parts[1]
        .parse::<f64>()
        .map_err(|e| CliError::Parse(format!("bad generator parameter `{}`: {e}", parts[1])))?;
    Ok((a, b))
}

fn load_file(path: &Path, mode: NormalizeMode) -> Result<ProbVec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let parsed: DistFile = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        build(&parsed.weights, parsed.normalize, mode)
    } else {
        let mut weights = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let w = line.parse::<f64>().map_err(|e| {
                CliError::Parse(format!("{}:{}: `{line}`: {e}", path.display(), lineno + 1))
            })?;
            weights.push(w);
        }
        build(&weights, true, mode)
    }
}

fn build(weights: &[f64], renormalize: bool, mode: NormalizeMode) -> Result<ProbVec, CliError> {
    if renormalize {
        Ok(normalize(weights, mode)?)
    } else {
        Ok(ProbVec::new(weights.to_vec())?)
    }
}

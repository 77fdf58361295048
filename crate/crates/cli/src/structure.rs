//! The `nambu-structure/1` input format.

use std::fmt;

use nambu_core::{MultiIndex, Multivector, NambuStructure, Polynomial, Rational, VolumeForm};
use serde::Deserialize;

pub const SCHEMA: &str = "nambu-structure/1";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub schema: String,
    pub dimension: usize,
    pub order: usize,
    pub lambda: Vec<LambdaTerm>,
    #[serde(default)]
    pub volume: Option<VolumeSpec>,
    #[serde(default)]
    pub checks: Option<Vec<String>>,
    #[serde(default)]
    pub jet_degree: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaTerm {
    pub index: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VolumeSpec {
    #[serde(default = "one")]
    pub constant: String,
    #[serde(default = "zero")]
    pub exponent: String,
}

fn one() -> String {
    "1".into()
}

fn zero() -> String {
    "0".into()
}

/// A validation failure pinned to a location in the file.
#[derive(Debug)]
pub struct InputError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for InputError {}

fn fail<T>(location: impl Into<String>, message: impl fmt::Display) -> Result<T, InputError> {
    Err(InputError {
        location: location.into(),
        message: message.to_string(),
    })
}

/// A validated structure file.
pub struct Loaded {
    pub structure: NambuStructure,
    pub volume: VolumeForm,
    pub checks: Option<Vec<String>>,
    pub jet_degree: Option<u32>,
}

pub fn parse(text: &str) -> Result<StructureFile, InputError> {
    serde_json::from_str(text).map_err(|e| InputError {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

impl StructureFile {
    pub fn validate(self, known_checks: &[&str]) -> Result<Loaded, InputError> {
        if self.schema != SCHEMA {
            return fail("schema", format!("expected \"{SCHEMA}\", found \"{}\"", self.schema));
        }
        let (m, n) = (self.dimension, self.order);
        if m == 0 || m > MultiIndex::MAX_DIM {
            return fail("dimension", format!("must be between 1 and {}", MultiIndex::MAX_DIM));
        }
        if n < 2 || n > m {
            return fail("order", format!("must satisfy 2 <= order <= dimension ({m})"));
        }

        let mut lambda = Multivector::zero(m, n);
        for (i, term) in self.lambda.iter().enumerate() {
            let at = format!("lambda[{i}]");
            if term.index.len() != n {
                return fail(
                    format!("{at}.index"),
                    format!("expected {n} indices, found {}", term.index.len()),
                );
            }
            let blade = Multivector::basis(m, &term.index).or_else(|e| fail(format!("{at}.index"), e))?;
            let coeff = Polynomial::parse(&term.coeff, m).or_else(|e| fail(format!("{at}.coeff"), e))?;
            lambda = &lambda + &blade.scale(&coeff);
        }
        let structure = NambuStructure::new(lambda).or_else(|e| fail("lambda", e))?;

        let volume = match &self.volume {
            None => VolumeForm::standard(m),
            Some(v) => {
                let c: Rational = v.constant.trim().parse().or_else(|e| fail("volume.constant", e))?;
                let p = Polynomial::parse(&v.exponent, m).or_else(|e| fail("volume.exponent", e))?;
                VolumeForm::new(c, p).or_else(|e| fail("volume.constant", e))?
            }
        };

        if let Some(checks) = &self.checks {
            for (i, name) in checks.iter().enumerate() {
                if !known_checks.contains(&name.as_str()) {
                    return fail(format!("checks[{i}]"), format!("unknown check \"{name}\""));
                }
            }
        }
        if let Some(d) = self.jet_degree {
            if d < 2 {
                return fail("jet_degree", "must be at least 2");
            }
        }
        Ok(Loaded {
            structure,
            volume,
            checks: self.checks,
            jet_degree: self.jet_degree,
        })
    }
}

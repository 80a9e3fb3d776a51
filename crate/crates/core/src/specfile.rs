//! The JSON spec file format.
//!
//! ```json
//! {
//!   "P": [1],
//!   "seq": {"init": [1], "rec": [2]},
//!   "factor": [{"c": 1, "e": [0]}, {"c": 1, "e": [1]}, {"c": 1, "e": [2]}],
//!   "alpha": [2]
//! }
//! ```
//!
//! `P` lists the coefficients of `P(x)` in ascending order. `seq` gives
//! `f(0..L)` and the recurrence `f(n+L) = rec[0] f(n+L-1) + ... + rec[L-1] f(n)`.
//! Each factor term contributes `c * x^{<e, (f(i), ..., f(i+L-1))>}` to the
//! level-`i` factor. `alpha` is optional; commands that need it fail without
//! it.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::ZPoly;
use crate::cfinite::{CFiniteError, CFiniteSeq, DEFAULT_HORIZON};
use crate::stern::{FactorTerm, ProductSpec, SternError, TargetAlpha};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(rename = "P")]
    pub p: Vec<i64>,
    pub seq: SeqSection,
    pub factor: Vec<FactorSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeqSection {
    pub init: Vec<i64>,
    pub rec: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSection {
    pub c: i64,
    pub e: Vec<i64>,
}

#[derive(Debug, thiserror::Error)]
pub enum SpecFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("seq: {0}")]
    Seq(#[from] CFiniteError),
    #[error(transparent)]
    Spec(#[from] SternError),
    #[error("alpha is missing")]
    MissingAlpha,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecFileError> {
        serde_json::from_str(text).map_err(|e| SpecFileError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn read(path: &Path) -> Result<Self, SpecFileError> {
        let text = std::fs::read_to_string(path).map_err(|source| SpecFileError::Io {
            path: path.display().to_string(),
            source,
        })?;
        SpecFile::parse(&text)
    }

    pub fn from_spec(spec: &ProductSpec, alpha: Option<&TargetAlpha>) -> Self {
        SpecFile {
            p: spec
                .p()
                .coeffs()
                .iter()
                .map(|c| i64::try_from(c).expect("spec files carry 64-bit coefficients"))
                .collect(),
            seq: SeqSection {
                init: spec.seq().init().to_vec(),
                rec: spec.seq().rec().to_vec(),
            },
            factor: spec
                .terms()
                .iter()
                .map(|t| FactorSection {
                    c: t.c,
                    e: t.e.0.clone(),
                })
                .collect(),
            alpha: alpha.map(|a| a.as_slice().to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files serialize")
    }

    pub fn spec(&self) -> Result<ProductSpec, SpecFileError> {
        self.spec_with_horizon(DEFAULT_HORIZON)
    }

    pub fn spec_with_horizon(&self, horizon: usize) -> Result<ProductSpec, SpecFileError> {
        let seq = CFiniteSeq::new(self.seq.init.clone(), self.seq.rec.clone())?;
        let terms = self.factor.iter().map(|f| FactorTerm::new(f.c, f.e.clone())).collect();
        Ok(ProductSpec::with_horizon(
            ZPoly::from_i64s(&self.p),
            seq,
            terms,
            horizon,
        )?)
    }

    pub fn alpha(&self) -> Result<TargetAlpha, SpecFileError> {
        let a = self.alpha.clone().ok_or(SpecFileError::MissingAlpha)?;
        Ok(TargetAlpha::new(a)?)
    }
}

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{stream_terms, StateSystem};
use crate::arith::{bareiss_last_component, fit_recurrence, ArithError, FitError, RationalGF, ZPoly, DEFAULT_GUARD};
use crate::stern::{u_alpha_oracle_terms, OracleLimits, ProductSpec, SternError, TargetAlpha};

/// `auto` eliminates up to this dimension and fits above it.
pub const AUTO_ELIMINATE_MAX_DIM: usize = 64;

/// Extra terms past `2 dim + 1` that a fitted generating function must
/// reproduce.
pub const FIT_GUARD: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveMethod {
    Auto,
    Eliminate,
    Fit,
}

impl std::str::FromStr for SolveMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(SolveMethod::Auto),
            "eliminate" => Ok(SolveMethod::Eliminate),
            "fit" => Ok(SolveMethod::Fit),
            _ => Err(format!("unknown method {s:?}; expected auto, eliminate or fit")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedGf {
    pub gf: RationalGF,
    /// The method actually used (never `Auto`).
    pub method: SolveMethod,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Fit(#[from] FitError),
}

/// Root component of `(I - tM)^{-1} v`.
///
/// `eliminate` runs fraction-free elimination over `Z[t]`. `fit` streams
/// `2 dim + 1 + FIT_GUARD` terms and reconstructs with denominator degree at
/// most `dim`; since the linear complexity of the root sequence is at most
/// `dim`, the reconstruction is exact, not a guess.
pub fn solve_gf(sys: &StateSystem, method: SolveMethod) -> Result<SolvedGf, SolveError> {
    let method = match method {
        SolveMethod::Auto if sys.dim() <= AUTO_ELIMINATE_MAX_DIM => SolveMethod::Eliminate,
        SolveMethod::Auto => SolveMethod::Fit,
        m => m,
    };
    let gf = match method {
        SolveMethod::Eliminate => eliminate(sys)?,
        _ => fit(sys)?,
    };
    Ok(SolvedGf { gf, method })
}

fn eliminate(sys: &StateSystem) -> Result<RationalGF, SolveError> {
    let n = sys.dim();
    // Root last: Cramer's rule then reads off the last unknown.
    let perm: Vec<usize> = (1..n).chain(std::iter::once(0)).collect();
    let mut pos = vec![0; n];
    for (i, &s) in perm.iter().enumerate() {
        pos[s] = i;
    }
    let mut a: Vec<Vec<ZPoly>> = vec![vec![ZPoly::zero(); n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = ZPoly::one();
    }
    for (s, row) in sys.rows().iter().enumerate() {
        for (t, c) in row {
            let (i, j) = (pos[s], pos[*t]);
            let mut coeffs = a[i][j].coeffs().to_vec();
            coeffs.resize(2, BigInt::zero());
            coeffs[1] -= c;
            a[i][j] = ZPoly::new(coeffs);
        }
    }
    let b: Vec<ZPoly> = perm.iter().map(|&s| ZPoly::constant(sys.v()[s].clone())).collect();
    let (numer, det) = bareiss_last_component(a, b)?;
    Ok(RationalGF::new(numer, det)?)
}

fn fit(sys: &StateSystem) -> Result<RationalGF, SolveError> {
    let d = sys.dim();
    let terms = stream_terms(sys, 2 * d + FIT_GUARD);
    Ok(fit_recurrence(&terms, d, FIT_GUARD)?)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GuessError {
    #[error(transparent)]
    Oracle(#[from] SternError),
    #[error(transparent)]
    Fit(#[from] FitError),
}

/// Fits `u_alpha(0..=n_max)`, computed by brute force, with denominator
/// degree at most `max_den_deg`. Unlike [`solve_gf`] this is a guess: it is
/// only as good as the number of terms.
pub fn guess_gf(
    spec: &ProductSpec,
    alpha: &TargetAlpha,
    n_max: usize,
    max_den_deg: usize,
    limits: OracleLimits,
) -> Result<RationalGF, GuessError> {
    let terms = u_alpha_oracle_terms(spec, alpha, n_max, limits)?;
    Ok(fit_recurrence(&terms, max_den_deg, DEFAULT_GUARD)?)
}

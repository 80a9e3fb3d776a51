//! Exact arithmetic substrate: polynomials, rational generating functions,
//! linear solving and recurrence fitting.

mod fit;
mod linsolve;
mod modular;
mod poly;
mod ratfun;

pub use fit::{berlekamp_massey, fit_recurrence, FitError, DEFAULT_GUARD};
pub use linsolve::{bareiss_last_component, linsolve};
pub use poly::{poly_mul, zpoly_gcd, Poly, QPoly, Ring, ZPoly};
pub use ratfun::{series, series_of, RationalGF};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("denominator vanishes at t = 0; not a power series")]
    NotPowerSeries,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch")]
    DimensionMismatch,
}

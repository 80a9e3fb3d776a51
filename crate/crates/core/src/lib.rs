//! Generating functions for generalized Stern diatomic arrays.
//!
//! An array `a(n, k)` is given by `F_n(x) = P(x) * prod_{i<n} Q_i(x)` where
//! each factor `Q_i(x) = sum_j c_j x^{<e_j, (f(i), ..., f(i+L-1))>}` draws its
//! exponents from a C-finite sequence `f`. For a correlation pattern `alpha`
//! the crate closes the space of shifted correlation sums under the row
//! recurrence of `a`, producing a transfer matrix `M`, an initial vector `v`
//! and the rational generating function of
//! `u_alpha(n) = sum_k prod_i a(n, k+i)^{alpha_i}`.
//!
//! Everything is exact. Brute-force oracles expand `F_n` directly and are
//! used to cross-check every transfer-matrix result.

pub mod arith;
pub mod cfinite;
pub mod closure;
pub mod specfile;
pub mod stern;

pub use arith::{fit_recurrence, FitError, Poly, RationalGF, ZPoly};
pub use cfinite::{CFiniteSeq, LinForm, PvVerdict};
pub use closure::{build_system, guess_gf, solve_gf, stream_terms, ClosureReport, SolveMethod, StateSystem};
pub use specfile::SpecFile;
pub use stern::{ProductSpec, State, TargetAlpha};

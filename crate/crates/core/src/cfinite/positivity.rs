//! Sound positivity certificates for C-finite expressions.
//!
//! An expression is checked exactly on `0..=horizon`. Past the horizon a
//! certificate is built from an annihilating polynomial `p` of the sequence:
//!
//! * if every recurrence coefficient of `p` is nonnegative, `deg p`
//!   consecutive nonnegative values propagate nonnegativity forever;
//! * if `p(1) = 0`, the sequence is nondecreasing from `n0` on whenever its
//!   first difference (annihilated by `p / (X - 1)`) is nonnegative there;
//! * otherwise `p` is multiplied by a few small polynomials in search of a
//!   multiple with nonnegative recurrence coefficients.
//!
//! Anything else is `Unknown`. No numeric approximation is involved.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{dot, CFiniteSeq};
use crate::arith::{poly_mul, ZPoly};

pub const DEFAULT_HORIZON: usize = 64;

/// Extra lookahead values supplied to the tail certificate.
const TAIL_SLACK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    PositiveForAll,
    /// Smallest `n <= horizon` with a nonpositive value.
    NotAlwaysPositive(usize),
    Unknown,
}

/// `<form, x_n> + sum_{i<n} <partial, x_i> + constant` over a fixed sequence,
/// with `x_n = (f(n), ..., f(n+L-1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFiniteExpr {
    pub form: Vec<i64>,
    pub partial: Vec<i64>,
    pub constant: BigInt,
}

impl CFiniteExpr {
    pub fn new(form: Vec<i64>, partial: Vec<i64>, constant: impl Into<BigInt>) -> Self {
        CFiniteExpr {
            form,
            partial,
            constant: constant.into(),
        }
    }

    /// Values at `n = 0, ..., count - 1`.
    pub fn values(&self, seq: &CFiniteSeq, count: usize) -> Vec<BigInt> {
        let windows = seq.windows(count);
        let mut out = Vec::with_capacity(count);
        let mut running = BigInt::zero();
        for w in &windows {
            out.push(dot(&self.form, w) + &running + &self.constant);
            running += dot(&self.partial, w);
        }
        out
    }

    /// `chi(X) * (X - 1)`, which annihilates every expression of this shape.
    pub fn annihilator(seq: &CFiniteSeq) -> ZPoly {
        poly_mul(&seq.indicial_poly(), &ZPoly::from_i64s(&[-1, 1]))
    }
}

/// Decides whether the expression is positive for every `n >= 0`.
///
/// `PositiveForAll` is returned only with a proof; a nonpositive value at
/// some `n <= horizon` yields the smallest such `n`.
pub fn certify_eventually_positive(seq: &CFiniteSeq, expr: &CFiniteExpr, horizon: usize) -> Positivity {
    let ann = CFiniteExpr::annihilator(seq);
    let k = ann.degree().unwrap_or(0);
    let vals = expr.values(seq, horizon + k + TAIL_SLACK + 1);
    if let Some(n) = vals[..=horizon].iter().position(|v| !v.is_positive()) {
        return Positivity::NotAlwaysPositive(n);
    }
    // value >= 1 for all n >= horizon  <=>  value - 1 >= 0
    let shifted: Vec<BigInt> = vals[horizon..].iter().map(|v| v - 1).collect();
    if nonneg_from(&shifted, &ann) {
        Positivity::PositiveForAll
    } else {
        Positivity::Unknown
    }
}

/// Proves `s(n) >= 0` for all `n >= n0`, given `values = s(n0), s(n0+1), ...`
/// and a monic annihilator `p` (ascending coefficients) of `s`.
pub(crate) fn nonneg_from(values: &[BigInt], p: &ZPoly) -> bool {
    let Some(deg) = p.degree() else {
        return false;
    };
    if values.len() < deg {
        return false;
    }
    if deg == 0 {
        return values.iter().all(Zero::is_zero);
    }
    if has_nonneg_recurrence(p) {
        return values[..deg].iter().all(|v| !v.is_negative());
    }
    if p.eval(&BigInt::one()).is_zero() {
        if values[0].is_negative() {
            return false;
        }
        let diff: Vec<BigInt> = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        let reduced = p
            .div_exact(&ZPoly::from_i64s(&[-1, 1]))
            .expect("X - 1 divides a polynomial vanishing at 1");
        return nonneg_from(&diff, &reduced);
    }
    let mut mult = p.clone();
    let x_plus_1 = ZPoly::from_i64s(&[1, 1]);
    for extra in 1..=(values.len() - deg).min(6) {
        mult = poly_mul(&mult, &x_plus_1);
        if has_nonneg_recurrence(&mult) {
            return values[..deg + extra].iter().all(|v| !v.is_negative());
        }
    }
    false
}

/// `X^K - c_1 X^{K-1} - ... - c_K` with every `c_j >= 0`.
fn has_nonneg_recurrence(p: &ZPoly) -> bool {
    let c = p.coeffs();
    let (lead, rest) = c.split_last().expect("nonzero polynomial");
    lead.is_one() && rest.iter().all(|x| !x.is_positive())
}

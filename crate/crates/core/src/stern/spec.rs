use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::SternError;
use crate::arith::ZPoly;
use crate::cfinite::{certify_eventually_positive, dot, CFiniteExpr, CFiniteSeq, LinForm, Positivity, DEFAULT_HORIZON};

/// Lookahead past the horizon kept for tail certificates.
pub(crate) const TAIL_WINDOW: usize = 24;

/// One term `c * x^{<e, (f(i), ..., f(i+L-1))>}` of the level-`i` factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorTerm {
    pub c: i64,
    pub e: LinForm,
}

impl FactorTerm {
    pub fn new(c: i64, e: Vec<i64>) -> Self {
        FactorTerm { c, e: LinForm(e) }
    }
}

/// `F_n(x) = P(x) * prod_{i=0}^{n-1} sum_j c_j x^{<e_j, (f(i), ..., f(i+L-1))>}`
/// and its coefficient array `a(n, k)`.
#[derive(Debug, Clone)]
pub struct ProductSpec {
    p: ZPoly,
    seq: CFiniteSeq,
    terms: Vec<FactorTerm>,
    horizon: usize,
    bounds: SupportBounds,
}

/// Precomputed data for deadness decisions: exact windows, the exact support
/// bound `U(n)` up to the horizon, and a single dominating exponent for the
/// tail.
#[derive(Debug, Clone)]
pub(crate) struct SupportBounds {
    /// `x_n` for `n <= horizon + TAIL_WINDOW`.
    pub windows: Vec<Vec<BigInt>>,
    /// `x_n` as `i128` where every entry fits.
    pub small_windows: Vec<Option<Vec<i128>>>,
    /// `U(n) = deg P + sum_{i<n} max_j <e_j, x_i>` for `n <= horizon`.
    pub support: Vec<BigInt>,
    pub small_support: Vec<Option<i128>>,
    /// An exponent form `e*` with `<e*, x_i> >= <e_j, x_i>` for all `j` and
    /// all `i >= 0`, when one can be certified.
    pub tail_exponent: Option<LinForm>,
    /// `deg P + sum_{i<horizon} <e*, x_i>`.
    pub tail_support_at_horizon: Option<BigInt>,
}

impl ProductSpec {
    pub fn new(p: ZPoly, seq: CFiniteSeq, terms: Vec<FactorTerm>) -> Result<Self, SternError> {
        ProductSpec::with_horizon(p, seq, terms, DEFAULT_HORIZON)
    }

    pub fn with_horizon(p: ZPoly, seq: CFiniteSeq, terms: Vec<FactorTerm>, horizon: usize) -> Result<Self, SternError> {
        if p.is_zero() {
            return Err(SternError::InvalidSpec("P must be a nonzero polynomial".into()));
        }
        if terms.is_empty() {
            return Err(SternError::InvalidSpec("the factor needs at least one term".into()));
        }
        let l = seq.order();
        let mut seen = HashSet::new();
        for (idx, t) in terms.iter().enumerate() {
            if t.c == 0 {
                return Err(SternError::InvalidSpec(format!(
                    "factor term {idx}: coefficient must be nonzero"
                )));
            }
            if t.e.len() != l {
                return Err(SternError::InvalidSpec(format!(
                    "factor term {idx}: exponent vector has length {}, sequence order is {l}",
                    t.e.len()
                )));
            }
            if t.e.0.iter().any(|&x| x < 0) {
                return Err(SternError::InvalidSpec(format!(
                    "factor term {idx}: exponent vector entries must be nonnegative"
                )));
            }
            if !seen.insert(t.e.clone()) {
                return Err(SternError::InvalidSpec(format!(
                    "factor term {idx}: duplicate exponent vector {:?}",
                    t.e
                )));
            }
        }
        for (idx, t) in terms.iter().enumerate() {
            if t.e.is_zero() {
                continue;
            }
            let expr = CFiniteExpr::new(t.e.0.clone(), vec![0; l], 1);
            match certify_eventually_positive(&seq, &expr, horizon) {
                Positivity::PositiveForAll => {}
                Positivity::NotAlwaysPositive(n) => {
                    return Err(SternError::InvalidSpec(format!(
                        "factor term {idx}: exponent is negative at level {n}"
                    )))
                }
                Positivity::Unknown => {
                    return Err(SternError::InvalidSpec(format!(
                        "factor term {idx}: cannot certify that the exponent stays nonnegative"
                    )))
                }
            }
        }
        let bounds = SupportBounds::compute(&p, &seq, &terms, horizon);
        Ok(ProductSpec {
            p,
            seq,
            terms,
            horizon,
            bounds,
        })
    }

    /// `P(x) = 1`, factor `Q(X) = sum_j q_j X^j` evaluated at `X = x^{b^i}`.
    pub fn b_power(p: ZPoly, q: &[i64], b: i64) -> Result<Self, SternError> {
        let terms = q
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| FactorTerm::new(c, vec![j as i64]))
            .collect();
        ProductSpec::new(p, CFiniteSeq::powers(b), terms)
    }

    pub fn p(&self) -> &ZPoly {
        &self.p
    }

    pub fn seq(&self) -> &CFiniteSeq {
        &self.seq
    }

    pub fn terms(&self) -> &[FactorTerm] {
        &self.terms
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn order(&self) -> usize {
        self.seq.order()
    }

    /// `P(1) * sum_j c_j`, the value of `u_[1](n)` divided by `(sum_j c_j)^n`
    /// at `n = 0`.
    pub fn p_at_one(&self) -> BigInt {
        self.p.coeffs().iter().sum()
    }

    pub fn coeff_sum(&self) -> i64 {
        self.terms.iter().map(|t| t.c).sum()
    }

    /// Exponents `<e_j, x_i>` of the level-`i` factor.
    pub(crate) fn factor_exponents(&self, window: &[BigInt]) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|t| (t.c, dot(&t.e.0, window))).collect()
    }

    pub(crate) fn bounds(&self) -> &SupportBounds {
        &self.bounds
    }
}

impl PartialEq for ProductSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.seq == other.seq && self.terms == other.terms && self.horizon == other.horizon
    }
}

impl Eq for ProductSpec {}

impl SupportBounds {
    fn compute(p: &ZPoly, seq: &CFiniteSeq, terms: &[FactorTerm], horizon: usize) -> Self {
        let l = seq.order();
        let windows = seq.windows(horizon + TAIL_WINDOW + 1);
        let small_windows = windows
            .iter()
            .map(|w| w.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>())
            .collect();

        let deg_p = BigInt::from(p.degree().unwrap_or(0));
        let mut support = Vec::with_capacity(horizon + 1);
        let mut u = deg_p.clone();
        for w in windows.iter().take(horizon + 1) {
            support.push(u.clone());
            let step = terms.iter().map(|t| dot(&t.e.0, w)).max().unwrap_or_else(BigInt::zero);
            u += step;
        }
        let small_support = support.iter().map(|x| x.to_i128()).collect();

        let tail_exponent = dominating_exponent(seq, terms, horizon);
        let tail_support_at_horizon = tail_exponent.as_ref().map(|e| {
            windows
                .iter()
                .take(horizon)
                .fold(deg_p.clone(), |acc, w| acc + dot(&e.0, w))
        });
        debug_assert!(tail_exponent.as_ref().is_none_or(|e| e.len() == l));

        SupportBounds {
            windows,
            small_windows,
            support,
            small_support,
            tail_exponent,
            tail_support_at_horizon,
        }
    }
}

/// Finds `e*` dominating every exponent at every level: either one of the
/// `e_j` provably dominates all others, or the sequence is provably
/// nonnegative and the componentwise maximum works.
fn dominating_exponent(seq: &CFiniteSeq, terms: &[FactorTerm], horizon: usize) -> Option<LinForm> {
    let l = seq.order();
    let dominates = |a: &LinForm, b: &LinForm| {
        let diff: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect();
        if diff.iter().all(|&d| d == 0) {
            return true;
        }
        let expr = CFiniteExpr::new(diff, vec![0; l], 1);
        certify_eventually_positive(seq, &expr, horizon) == Positivity::PositiveForAll
    };
    if let Some(t) = terms
        .iter()
        .find(|t| terms.iter().all(|other| dominates(&t.e, &other.e)))
    {
        return Some(t.e.clone());
    }
    let nonneg = CFiniteExpr::new(LinForm::unit(l, 0).0, vec![0; l], 1);
    if certify_eventually_positive(seq, &nonneg, horizon) == Positivity::PositiveForAll {
        let max = (0..l)
            .map(|k| terms.iter().map(|t| t.e.0[k]).max().unwrap_or(0))
            .collect();
        return Some(LinForm(max));
    }
    None
}

/// The correlation pattern `alpha = [alpha_0, ..., alpha_{m-1}]` of
/// `u_alpha(n) = sum_k prod_i a(n, k+i)^{alpha_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TargetAlpha(Vec<u32>);

impl TargetAlpha {
    pub fn new(alpha: Vec<u32>) -> Result<Self, SternError> {
        match (alpha.first(), alpha.last()) {
            (None, _) => Err(SternError::InvalidAlpha("alpha must be nonempty".into())),
            (Some(0), _) => Err(SternError::InvalidAlpha("alpha_0 must be positive".into())),
            (_, Some(0)) => Err(SternError::InvalidAlpha("alpha must not end in zero".into())),
            _ => Ok(TargetAlpha(alpha)),
        }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Total number of factors `r = sum_i alpha_i`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// Offsets `0` repeated `alpha_0` times, `1` repeated `alpha_1` times, ...
    pub fn offsets(&self) -> Vec<i64> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i as i64, a as usize))
            .collect()
    }
}

pub(crate) fn is_nonneg(x: &BigInt) -> bool {
    !x.is_negative()
}

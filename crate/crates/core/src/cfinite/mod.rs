//! C-finite sequences: integer sequences satisfying
//! `f(i) = c_1 f(i-1) + ... + c_L f(i-L)` with integer initial values.
//!
//! Linear forms `<beta, (f(n), ..., f(n+L-1))>` are the currency of the state
//! calculus: any `f(n+J)` reduces to such a form, and a form at level `n`
//! translates to a form at level `n-1`.

mod positivity;
mod pv;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::ZPoly;

pub(crate) use positivity::nonneg_from;
pub use positivity::{certify_eventually_positive, CFiniteExpr, Positivity, DEFAULT_HORIZON};
pub use pv::{pv_classify, pv_classify_with_margin, NotPvReason, PvReport, PvVerdict, DEFAULT_MARGIN};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CFiniteError {
    #[error("recurrence order must be at least 1")]
    EmptyRecurrence,
    #[error("expected {expected} initial values, got {got}")]
    InitLength { expected: usize, got: usize },
    #[error("last recurrence coefficient must be nonzero")]
    ZeroTrailingCoefficient,
    #[error("linear form has length {got}, sequence order is {expected}")]
    FormLength { expected: usize, got: usize },
    #[error("integer overflow in linear form arithmetic")]
    Overflow,
}

/// `[[g_0, ..., g_{L-1}], [c_1, ..., c_L]]`: initial values and recurrence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CFiniteSeq {
    init: Vec<i64>,
    rec: Vec<i64>,
}

impl CFiniteSeq {
    pub fn new(init: Vec<i64>, rec: Vec<i64>) -> Result<Self, CFiniteError> {
        if rec.is_empty() {
            return Err(CFiniteError::EmptyRecurrence);
        }
        if init.len() != rec.len() {
            return Err(CFiniteError::InitLength {
                expected: rec.len(),
                got: init.len(),
            });
        }
        if *rec.last().unwrap() == 0 {
            return Err(CFiniteError::ZeroTrailingCoefficient);
        }
        Ok(CFiniteSeq { init, rec })
    }

    /// `{b^i}`
    pub fn powers(b: i64) -> Self {
        CFiniteSeq::new(vec![1], vec![b]).expect("valid first-order recurrence")
    }

    /// The `k`-bonacci recurrence `f(i) = f(i-1) + ... + f(i-k)` with the
    /// given initial values.
    pub fn k_bonacci(init: Vec<i64>) -> Result<Self, CFiniteError> {
        let k = init.len();
        CFiniteSeq::new(init, vec![1; k])
    }

    pub fn order(&self) -> usize {
        self.rec.len()
    }

    pub fn init(&self) -> &[i64] {
        &self.init
    }

    pub fn rec(&self) -> &[i64] {
        &self.rec
    }

    /// `f(n)`
    pub fn term(&self, n: usize) -> BigInt {
        self.terms(n + 1).pop().unwrap()
    }

    /// `f(0), ..., f(count - 1)`
    pub fn terms(&self, count: usize) -> Vec<BigInt> {
        let l = self.order();
        let mut out: Vec<BigInt> = self.init.iter().take(count).map(|&g| BigInt::from(g)).collect();
        while out.len() < count {
            let i = out.len();
            let mut next = BigInt::zero();
            for (j, &c) in self.rec.iter().enumerate() {
                if c != 0 {
                    next += &out[i - 1 - j] * c;
                }
            }
            out.push(next);
        }
        debug_assert!(out.len() == count || count < l);
        out
    }

    /// Expresses `f(n + shift)` over the basis `f(n), ..., f(n+L-1)`.
    pub fn reduce_shift(&self, shift: usize) -> Result<LinForm, CFiniteError> {
        let l = self.order();
        if shift < l {
            return Ok(LinForm::unit(l, shift));
        }
        // f(n+J) at level n is the basis vector e_{L-1} at level n + J - L + 1;
        // translating down J - L + 1 levels lands on level n.
        let mut form = LinForm::unit(l, l - 1);
        for _ in 0..(shift - l + 1) {
            form = self.shift_level(&form)?;
        }
        Ok(form)
    }

    /// Rewrites `<beta, (f(n), ..., f(n+L-1))>` as a form at level `n - 1`,
    /// valid for every `n >= 1`.
    pub fn shift_level(&self, beta: &LinForm) -> Result<LinForm, CFiniteError> {
        let l = self.order();
        if beta.len() != l {
            return Err(CFiniteError::FormLength {
                expected: l,
                got: beta.len(),
            });
        }
        let top = beta.0[l - 1];
        let mut out = vec![0i64; l];
        out[0] = top.checked_mul(self.rec[l - 1]).ok_or(CFiniteError::Overflow)?;
        for (j, slot) in out.iter_mut().enumerate().skip(1) {
            *slot = top
                .checked_mul(self.rec[l - 1 - j])
                .and_then(|x| x.checked_add(beta.0[j - 1]))
                .ok_or(CFiniteError::Overflow)?;
        }
        Ok(LinForm(out))
    }

    /// `X^L - c_1 X^{L-1} - ... - c_L`, ascending coefficients.
    pub fn indicial_poly(&self) -> ZPoly {
        let l = self.order();
        let mut coeffs = vec![BigInt::zero(); l + 1];
        coeffs[l] = BigInt::from(1);
        for (j, &c) in self.rec.iter().enumerate() {
            coeffs[l - 1 - j] = BigInt::from(-c);
        }
        ZPoly::new(coeffs)
    }

    /// Companion step: `(f(n+1), ..., f(n+L))` from `(f(n), ..., f(n+L-1))`.
    pub(crate) fn advance(&self, window: &[BigInt]) -> Vec<BigInt> {
        let l = self.order();
        let mut next: Vec<BigInt> = window[1..].to_vec();
        let mut top = BigInt::zero();
        for (j, &c) in self.rec.iter().enumerate() {
            if c != 0 {
                top += &window[l - 1 - j] * c;
            }
        }
        next.push(top);
        next
    }

    /// Windows `x_n = (f(n), ..., f(n+L-1))` for `n < count`.
    pub fn windows(&self, count: usize) -> Vec<Vec<BigInt>> {
        let t = self.terms(count + self.order());
        (0..count).map(|n| t[n..n + self.order()].to_vec()).collect()
    }
}

impl fmt::Debug for CFiniteSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.init, self.rec)
    }
}

/// Coefficient vector `beta` of the form `<beta, (f(n), ..., f(n+L-1))>`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LinForm(pub Vec<i64>);

impl LinForm {
    pub fn zero(len: usize) -> Self {
        LinForm(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        LinForm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn eval(&self, window: &[BigInt]) -> BigInt {
        dot(&self.0, window)
    }

    pub fn checked_add(&self, other: &LinForm) -> Option<LinForm> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(LinForm)
    }
}

impl fmt::Debug for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<i64>> for LinForm {
    fn from(v: Vec<i64>) -> Self {
        LinForm(v)
    }
}

pub(crate) fn dot(coeffs: &[i64], window: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (&c, x) in coeffs.iter().zip(window) {
        if c != 0 {
            acc += x * c;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fib() -> CFiniteSeq {
        CFiniteSeq::new(vec![0, 1], vec![1, 1]).unwrap()
    }

    fn two_pow_plus_one() -> CFiniteSeq {
        CFiniteSeq::new(vec![2, 3], vec![3, -2]).unwrap()
    }

    #[test]
    fn terms() {
        assert_eq!(CFiniteSeq::powers(2).term(5), BigInt::from(32));
        assert_eq!(two_pow_plus_one().term(5), BigInt::from(33));
        assert_eq!(fib().term(10), BigInt::from(55));
        assert_eq!(fib().terms(0), Vec::<BigInt>::new());
    }

    #[test]
    fn validation() {
        assert_eq!(CFiniteSeq::new(vec![], vec![]), Err(CFiniteError::EmptyRecurrence));
        assert_eq!(
            CFiniteSeq::new(vec![1], vec![1, 1]),
            Err(CFiniteError::InitLength { expected: 2, got: 1 })
        );
        assert_eq!(
            CFiniteSeq::new(vec![1, 1], vec![1, 0]),
            Err(CFiniteError::ZeroTrailingCoefficient)
        );
    }

    #[test]
    fn reduce_shift_fibonacci() {
        let f = fib();
        assert_eq!(f.reduce_shift(1).unwrap(), LinForm(vec![0, 1]));
        assert_eq!(f.reduce_shift(2).unwrap(), LinForm(vec![1, 1]));
        assert_eq!(f.reduce_shift(3).unwrap(), LinForm(vec![1, 2]));
    }

    #[test]
    fn shift_level_examples() {
        let p2 = CFiniteSeq::powers(2);
        assert_eq!(p2.shift_level(&LinForm(vec![1])).unwrap(), LinForm(vec![2]));
        assert_eq!(fib().shift_level(&LinForm(vec![0, 1])).unwrap(), LinForm(vec![1, 1]));
        assert_eq!(
            two_pow_plus_one().shift_level(&LinForm(vec![0, 1])).unwrap(),
            LinForm(vec![-2, 3])
        );
        assert!(fib().shift_level(&LinForm(vec![1])).is_err());
    }

    #[test]
    fn indicial_polynomials() {
        assert_eq!(CFiniteSeq::powers(2).indicial_poly(), ZPoly::from_i64s(&[-2, 1]));
        assert_eq!(fib().indicial_poly(), ZPoly::from_i64s(&[-1, -1, 1]));
        assert_eq!(two_pow_plus_one().indicial_poly(), ZPoly::from_i64s(&[2, -3, 1]));
    }

    fn any_seq() -> impl Strategy<Value = CFiniteSeq> {
        (1usize..4)
            .prop_flat_map(|l| {
                (
                    prop::collection::vec(-3i64..4, l),
                    prop::collection::vec(-3i64..4, l - 1),
                    prop_oneof![-3i64..0, 1i64..4],
                )
            })
            .prop_map(|(init, mut rec, last)| {
                rec.push(last);
                CFiniteSeq::new(init, rec).unwrap()
            })
    }

    proptest! {
        #[test]
        fn reduce_shift_matches_terms(seq in any_seq(), shift in 0usize..=12) {
            let form = seq.reduce_shift(shift).unwrap();
            let t = seq.terms(31 + shift + seq.order());
            for n in 0..=30 {
                prop_assert_eq!(&t[n + shift], &form.eval(&t[n..n + seq.order()]));
            }
        }

        #[test]
        fn shift_level_preserves_value(seq in any_seq(), beta in prop::collection::vec(-5i64..6, 1..4)) {
            prop_assume!(beta.len() == seq.order());
            let beta = LinForm(beta);
            let down = seq.shift_level(&beta).unwrap();
            let w = seq.windows(31);
            for n in 1..=30 {
                prop_assert_eq!(down.eval(&w[n - 1]), beta.eval(&w[n]));
            }
        }

        #[test]
        fn shift_level_is_linear(
            seq in any_seq(),
            a in prop::collection::vec(-5i64..6, 3),
            b in prop::collection::vec(-5i64..6, 3),
        ) {
            let l = seq.order();
            let a = LinForm(a[..l].to_vec());
            let b = LinForm(b[..l].to_vec());
            let lhs = seq.shift_level(&a.checked_add(&b).unwrap()).unwrap();
            let rhs = seq.shift_level(&a).unwrap().checked_add(&seq.shift_level(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

//! Brute-force evaluation by expanding `F_n(x)` coefficient by coefficient.
//!
//! `deg F_n <= U(n)`, which grows like `theta^n` for the dominant root
//! `theta` of the exponent sequence; each level costs `O(U(n) * #terms)`.
//! Coefficients are kept in `i64` when `|P|_1 * (sum_j |c_j|)^n` fits and in
//! big integers otherwise. The expansion refuses to allocate more than
//! [`OracleLimits::max_coefficients`] entries.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ProductSpec, State, SternError, TargetAlpha};
use crate::cfinite::dot;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_coefficients: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        // 2^28 i64 coefficients is 2 GiB.
        OracleLimits {
            max_coefficients: 1 << 28,
        }
    }
}

#[derive(Debug, Clone)]
enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// Row `n` of the array, advanced one factor at a time.
#[derive(Debug, Clone)]
pub struct ArrayRows<'a> {
    spec: &'a ProductSpec,
    limits: OracleLimits,
    level: usize,
    window: Vec<BigInt>,
    coeffs: Coeffs,
    /// `|P|_1 * (sum |c_j|)^level`, an upper bound on every `|a(level, k)|`.
    magnitude: BigInt,
}

impl<'a> ArrayRows<'a> {
    pub fn new(spec: &'a ProductSpec, limits: OracleLimits) -> Self {
        let p = spec.p().coeffs();
        let magnitude: BigInt = p.iter().map(|c| c.abs()).sum();
        let coeffs = match p.iter().map(|c| c.to_i64()).collect::<Option<Vec<_>>>() {
            Some(v) if magnitude.to_i64().is_some() => Coeffs::Small(v),
            _ => Coeffs::Big(p.to_vec()),
        };
        ArrayRows {
            spec,
            limits,
            level: 0,
            window: spec.seq().init().iter().map(|&g| BigInt::from(g)).collect(),
            coeffs,
            magnitude,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// `(f(n), ..., f(n+L-1))` at the current level.
    pub fn window(&self) -> &[BigInt] {
        &self.window
    }

    pub fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `a(level, k)`
    pub fn coeff(&self, k: i128) -> BigInt {
        if k < 0 || k as usize >= self.len() {
            return BigInt::zero();
        }
        match &self.coeffs {
            Coeffs::Small(v) => BigInt::from(v[k as usize]),
            Coeffs::Big(v) => v[k as usize].clone(),
        }
    }

    pub fn to_vec(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = match &self.coeffs {
            Coeffs::Small(v) => v.iter().map(|&c| BigInt::from(c)).collect(),
            Coeffs::Big(v) => v.clone(),
        };
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    /// Multiplies in the factor of the current level.
    pub fn advance(&mut self) -> Result<(), SternError> {
        let exps = self.spec.factor_exponents(&self.window);
        let shifts: Vec<(i64, usize)> = exps
            .iter()
            .map(|(c, e)| (*c, e.to_usize().expect("exponents are nonnegative and fit in memory")))
            .collect();
        let max_shift = shifts.iter().map(|s| s.1).max().unwrap_or(0);
        let new_len = self.len() + max_shift;
        if new_len > self.limits.max_coefficients {
            return Err(SternError::ResourceBound {
                needed: new_len,
                limit: self.limits.max_coefficients,
            });
        }
        let abs_sum: i64 = self.spec.terms().iter().map(|t| t.c.abs()).sum();
        self.magnitude *= abs_sum;
        if let Coeffs::Small(v) = &self.coeffs {
            if self.magnitude.to_i64().is_none() {
                self.coeffs = Coeffs::Big(v.iter().map(|&c| BigInt::from(c)).collect());
            }
        }
        match &mut self.coeffs {
            Coeffs::Small(v) => multiply_in_place(v, &shifts, new_len, 0i64, |acc, c, x| acc + c * x),
            Coeffs::Big(v) => multiply_in_place(v, &shifts, new_len, BigInt::zero(), |acc, c, x| acc + x * c),
        }
        self.window = self.spec.seq().advance(&self.window);
        self.level += 1;
        Ok(())
    }

    /// `sum_{k in Z} prod_i a(level, k + d_i - <beta_i, x_level>)`.
    pub fn state_value(&self, s: &State) -> BigInt {
        let shifts: Vec<i128> = s
            .factors()
            .map(|(d, beta)| {
                (dot(beta, &self.window) - d)
                    .to_i128()
                    .expect("state offsets fit the expanded row")
            })
            .collect();
        self.correlate(&shifts)
    }

    /// `u_alpha(level) = sum_k prod_i a(level, k+i)^{alpha_i}`.
    pub fn u_alpha(&self, alpha: &TargetAlpha) -> BigInt {
        let shifts: Vec<i128> = alpha.offsets().iter().map(|&d| -(d as i128)).collect();
        self.correlate(&shifts)
    }

    /// `sum_k prod_i a(k - shift_i)`.
    fn correlate(&self, shifts: &[i128]) -> BigInt {
        let n = self.len() as i128;
        if shifts.is_empty() || n == 0 {
            return BigInt::zero();
        }
        let lo = *shifts.iter().max().unwrap();
        let hi = *shifts.iter().min().unwrap() + n - 1;
        if lo > hi {
            return BigInt::zero();
        }
        let r = shifts.len() as u32;
        match &self.coeffs {
            Coeffs::Small(v) => {
                let bits = self.magnitude.bits() * r as u64 + (128 - (n as u128).leading_zeros()) as u64;
                if bits < 127 {
                    let mut total: i128 = 0;
                    for k in lo..=hi {
                        let mut prod: i128 = 1;
                        for &s in shifts {
                            prod *= v[(k - s) as usize] as i128;
                            if prod == 0 {
                                break;
                            }
                        }
                        total += prod;
                    }
                    BigInt::from(total)
                } else {
                    let mut total = BigInt::zero();
                    for k in lo..=hi {
                        let mut prod = BigInt::one();
                        for &s in shifts {
                            let c = v[(k - s) as usize];
                            if c == 0 {
                                prod = BigInt::zero();
                                break;
                            }
                            prod *= c;
                        }
                        total += prod;
                    }
                    total
                }
            }
            Coeffs::Big(v) => {
                let mut total = BigInt::zero();
                for k in lo..=hi {
                    let mut prod = BigInt::one();
                    for &s in shifts {
                        let c = &v[(k - s) as usize];
                        if c.is_zero() {
                            prod = BigInt::zero();
                            break;
                        }
                        prod *= c;
                    }
                    total += prod;
                }
                total
            }
        }
    }
}

/// In-place product with `sum_j c_j x^{s_j}`; all `s_j >= 0`, so a
/// descending sweep only reads entries it has not yet overwritten.
fn multiply_in_place<T: Clone + Zero, F: Fn(T, i64, &T) -> T>(
    v: &mut Vec<T>,
    shifts: &[(i64, usize)],
    new_len: usize,
    zero: T,
    fma: F,
) {
    let old_len = v.len();
    v.resize(new_len, zero.clone());
    for k in (0..new_len).rev() {
        let mut acc = zero.clone();
        for &(c, s) in shifts {
            if k >= s && k - s < old_len {
                acc = fma(acc, c, &v[k - s]);
            }
        }
        v[k] = acc;
    }
}

/// Coefficients `a(n, 0..=deg)` of `F_n(x)`.
pub fn expand_fn(spec: &ProductSpec, n: usize, limits: OracleLimits) -> Result<Vec<BigInt>, SternError> {
    let mut rows = ArrayRows::new(spec, limits);
    for _ in 0..n {
        rows.advance()?;
    }
    Ok(rows.to_vec())
}

pub fn state_oracle(spec: &ProductSpec, s: &State, n: usize, limits: OracleLimits) -> Result<BigInt, SternError> {
    let mut rows = ArrayRows::new(spec, limits);
    for _ in 0..n {
        rows.advance()?;
    }
    Ok(rows.state_value(s))
}

pub fn u_alpha_oracle(
    spec: &ProductSpec,
    alpha: &TargetAlpha,
    n: usize,
    limits: OracleLimits,
) -> Result<BigInt, SternError> {
    Ok(u_alpha_oracle_terms(spec, alpha, n, limits)?.pop().unwrap())
}

/// `u_alpha(0), ..., u_alpha(n_max)` from a single incremental expansion.
pub fn u_alpha_oracle_terms(
    spec: &ProductSpec,
    alpha: &TargetAlpha,
    n_max: usize,
    limits: OracleLimits,
) -> Result<Vec<BigInt>, SternError> {
    let mut rows = ArrayRows::new(spec, limits);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(rows.u_alpha(alpha));
    for _ in 0..n_max {
        rows.advance()?;
        out.push(rows.u_alpha(alpha));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ZPoly;
    use crate::cfinite::{CFiniteSeq, LinForm};
    use crate::stern::FactorTerm;

    fn base() -> ProductSpec {
        ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[1, 1, 1], 2).unwrap()
    }

    fn challenge() -> ProductSpec {
        ProductSpec::new(
            ZPoly::from_i64s(&[1]),
            CFiniteSeq::new(vec![2, 3], vec![3, -2]).unwrap(),
            vec![
                FactorTerm::new(1, vec![0, 0]),
                FactorTerm::new(1, vec![1, 0]),
                FactorTerm::new(1, vec![0, 1]),
            ],
        )
        .unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn expansion_small_levels() {
        let s = base();
        let lim = OracleLimits::default();
        assert_eq!(expand_fn(&s, 0, lim).unwrap(), big(&[1]));
        assert_eq!(expand_fn(&s, 2, lim).unwrap(), big(&[1, 1, 2, 1, 2, 1, 1]));
        for n in 0..8 {
            assert_eq!(expand_fn(&s, n, lim).unwrap().len() - 1, 2 * ((1 << n) - 1));
        }
    }

    #[test]
    fn state_values() {
        let s = base();
        let lim = OracleLimits::default();
        let f0 = State::canonicalize(&[(0, LinForm(vec![0])), (0, LinForm(vec![0]))]);
        let f1 = State::canonicalize(&[(0, LinForm(vec![0])), (0, LinForm(vec![1]))]);
        assert_eq!(state_oracle(&s, &f1, 1, lim).unwrap(), BigInt::from(1));
        assert_eq!(state_oracle(&s, &f0, 2, lim).unwrap(), BigInt::from(13));
        let dead = State::canonicalize(&[(0, LinForm(vec![0])), (0, LinForm(vec![2]))]);
        for n in 0..=10 {
            assert!(state_oracle(&s, &dead, n, lim).unwrap().is_zero());
        }
    }

    #[test]
    fn u_alpha_values() {
        let lim = OracleLimits::default();
        let two = TargetAlpha::new(vec![2]).unwrap();
        assert_eq!(u_alpha_oracle(&base(), &two, 3, lim).unwrap(), BigInt::from(59));
        assert_eq!(
            u_alpha_oracle_terms(&challenge(), &two, 5, lim).unwrap(),
            big(&[1, 3, 13, 55, 249, 1121])
        );
        let one = TargetAlpha::new(vec![1]).unwrap();
        let p = ProductSpec::b_power(ZPoly::from_i64s(&[2, 0, 1]), &[1, -1, 3], 3).unwrap();
        for n in 0..6u32 {
            assert_eq!(
                u_alpha_oracle(&p, &one, n as usize, lim).unwrap(),
                BigInt::from(3 * 3i64.pow(n))
            );
        }
    }

    #[test]
    fn resource_bound_enforced() {
        let lim = OracleLimits { max_coefficients: 100 };
        assert!(matches!(
            expand_fn(&base(), 10, lim),
            Err(SternError::ResourceBound { .. })
        ));
    }

    #[test]
    fn big_coefficient_path_agrees() {
        // coefficients 7 and 9 overflow i64 magnitudes after ~20 levels
        let s = ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[7, 9], 2).unwrap();
        let lim = OracleLimits::default();
        let row = expand_fn(&s, 22, lim).unwrap();
        // F_n(1) = 16^n
        let total: BigInt = row.iter().sum();
        assert_eq!(total, BigInt::from(16).pow(22));
        let two = TargetAlpha::new(vec![2]).unwrap();
        // product of (49 + 81) per level since shifts never collide
        assert_eq!(u_alpha_oracle(&s, &two, 22, lim).unwrap(), BigInt::from(130).pow(22));
    }
}

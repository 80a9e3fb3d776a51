use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{zpoly_gcd, ZPoly};
use super::ArithError;

/// A rational power series `num(t) / den(t)` with integer coefficients.
///
/// The stored form is canonical: no common polynomial factor, the combined
/// coefficient multiset of numerator and denominator has content 1, and
/// `den(0) > 0`. Two generating functions are equal iff their stored forms
/// are component-wise equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalGF {
    num: ZPoly,
    den: ZPoly,
}

impl RationalGF {
    pub fn new(num: ZPoly, den: ZPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalGF {
                num: ZPoly::zero(),
                den: ZPoly::one(),
            });
        }
        let g = zpoly_gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(ArithError::NotPowerSeries);
        }
        let mut content = num.content().gcd(&den.content());
        if d0.is_negative() {
            content = -content;
        }
        Ok(RationalGF {
            num: num.map(|c| c / &content),
            den: den.map(|c| c / &content),
        })
    }

    pub fn from_i64s(num: &[i64], den: &[i64]) -> Result<Self, ArithError> {
        RationalGF::new(ZPoly::from_i64s(num), ZPoly::from_i64s(den))
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    /// Degree of the denominator.
    pub fn den_degree(&self) -> usize {
        self.den.degree().unwrap_or(0)
    }

    /// First `n` Taylor coefficients.
    pub fn series(&self, n: usize) -> Vec<BigRational> {
        let d0 = self.den.coeff(0);
        if d0.is_one() {
            return self
                .integer_series(n)
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
        }
        let d0 = BigRational::from_integer(d0);
        let den: Vec<BigRational> = self
            .den
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = BigRational::from_integer(self.num.coeff(i));
            for (j, dj) in den.iter().enumerate().skip(1).take(i) {
                if !dj.is_zero() {
                    acc -= dj * &out[i - j];
                }
            }
            out.push(acc / &d0);
        }
        out
    }

    /// Integer Taylor coefficients; only valid when `den(0) == 1`.
    pub fn integer_series(&self, n: usize) -> Vec<BigInt> {
        assert!(self.den.coeff(0).is_one(), "integer series needs den(0) = 1");
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = self.num.coeff(i);
            for (j, dj) in den.iter().enumerate().skip(1).take(i) {
                if !dj.is_zero() {
                    acc -= dj * &out[i - j];
                }
            }
            out.push(acc);
        }
        out
    }

    pub fn pretty(&self) -> String {
        format!("({}) / ({})", self.num.pretty("t"), self.den.pretty("t"))
    }
}

/// Series expansion of `num / den`, rejecting `den(0) = 0`.
pub fn series(gf: &RationalGF, n: usize) -> Vec<BigRational> {
    gf.series(n)
}

/// Series expansion of an unnormalized quotient; fails when the constant
/// term of the denominator vanishes.
pub fn series_of(num: &ZPoly, den: &ZPoly, n: usize) -> Result<Vec<BigRational>, ArithError> {
    if den.coeff(0).is_zero() {
        return Err(ArithError::NotPowerSeries);
    }
    let gf = RationalGF::new(num.clone(), den.clone())?;
    Ok(gf.series(n))
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGF({:?} / {:?})", self.num, self.den)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

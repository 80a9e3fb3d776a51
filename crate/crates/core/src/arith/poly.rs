//! Dense univariate polynomials with exact coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modular::{mulmod, powmod, reduce_mod};

/// Coefficients are stored in ascending order; the representation never
/// carries trailing zeros, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T = BigInt> {
    coeffs: Vec<T>,
}

pub type ZPoly = Poly<BigInt>;
pub type QPoly = Poly<BigRational>;

/// Coefficient rings supported by the arithmetic operations.
pub trait Ring:
    Clone + Zero + One + PartialEq + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self;
}

impl Ring for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl<T: Zero> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

impl<T: Zero + Clone> Poly<T> {
    /// Coefficient of `t^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k];
        v.push(c);
        Poly::new(v)
    }

    /// Keeps the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Poly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn map<U: Zero, F: FnMut(&T) -> U>(&self, f: F) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T> Poly<T>
where
    T: Zero + One + Clone + PartialEq,
{
    pub fn one() -> Self {
        Poly::new(vec![T::one()])
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }
}

impl<T: Ring> Poly<T> {
    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        acc
    }
}

/// Exact convolution of two coefficient slices.
pub fn poly_mul<T: Ring>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] += &x.mul_ref(y);
        }
    }
    Poly::new(out)
}

impl<'a, T: Ring> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        poly_mul(self, rhs)
    }
}

impl<'a, T: Ring> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let (long, short) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        Poly::new(out)
    }
}

impl<'a, T: Ring> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.len() {
            out.resize(rhs.len(), T::zero());
        }
        for (o, c) in out.iter_mut().zip(&rhs.coeffs) {
            *o -= c;
        }
        Poly::new(out)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

impl<T: Ring> Poly<T> {
    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }
}

impl ZPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Gcd of all coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Poly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_rational(&self) -> QPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Exact division by a polynomial whose constant term is `±1`, computed
    /// as a truncated power series from the low end. Returns `None` if the
    /// division leaves a remainder.
    pub fn div_exact_unit_constant(&self, d: &ZPoly) -> Option<ZPoly> {
        let d0 = d.coeffs.first()?;
        if !d0.abs().is_one() {
            return self.div_exact(d);
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dd = d.degree()?;
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let qlen = nd - dd + 1;
        let mut rem = self.coeffs.clone();
        let mut q = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let qi = &rem[i] * d0;
            if !qi.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &qi * dj;
                }
            }
            q.push(qi);
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(q))
    }

    /// Exact division over the integers from the leading end.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = d.leading()?;
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * dj;
            }
            q[i] = qi;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(q))
    }
}

impl QPoly {
    /// Clears denominators and content, returning the primitive integer
    /// polynomial with positive leading coefficient.
    pub fn to_primitive_integer(&self) -> ZPoly {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        Poly::new(ints).primitive_part()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let qi = top / &lead;
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * dj;
            }
            q[i] = qi;
        }
        (Poly::new(q), Poly::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm over the rationals.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

/// Gcd of two integer polynomials, returned primitive with positive leading
/// coefficient. A modular degree test short-circuits the common coprime case.
pub fn zpoly_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if modular_coprime(a, b) {
        return ZPoly::one();
    }
    a.to_rational().gcd(&b.to_rational()).to_primitive_integer()
}

const GCD_PRIME: u64 = 4_611_686_018_427_387_847; // 2^62 - 57

/// If neither leading coefficient vanishes mod p, the degree of the gcd mod p
/// bounds the degree of the true gcd from above, so a unit gcd mod p proves
/// coprimality.
fn modular_coprime(a: &ZPoly, b: &ZPoly) -> bool {
    let p = GCD_PRIME;
    let red = |x: &ZPoly| -> Vec<u64> { x.coeffs().iter().map(|c| reduce_mod(c, p)).collect() };
    let (mut x, mut y) = (red(a), red(b));
    if *x.last().unwrap() == 0 || *y.last().unwrap() == 0 {
        return false;
    }
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    while !y.is_empty() {
        // x mod y
        let inv = powmod(*y.last().unwrap(), p - 2, p);
        while x.len() >= y.len() {
            let shift = x.len() - y.len();
            let f = mulmod(*x.last().unwrap(), inv, p);
            for (j, yj) in y.iter().enumerate() {
                let sub = mulmod(f, *yj, p);
                x[shift + j] = (x[shift + j] + p - sub) % p;
            }
            trim(&mut x);
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}

impl<T: fmt::Display + Zero + PartialOrd + Clone + Neg<Output = T> + One + PartialEq> Poly<T> {
    /// Renders e.g. `1 - 5*t + 2*t^2`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < T::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

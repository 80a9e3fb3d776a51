//! Rational generating function reconstruction from a finite prefix.
//!
//! The search is Berlekamp-Massey, kept integral: instead of the field update
//! `C <- C - (d/b) t^m B` the connection polynomial is rescaled to
//! `b C - d t^m B` and its content divided out. Scaling a connection
//! polynomial does not change the recurrence it encodes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modular::{berlekamp_massey_mod, primes, reduce_mod, Crt};
use super::poly::{poly_mul, ZPoly};
use super::{ArithError, RationalGF};

/// Windows at least this long go through the multi-modular search first.
const MODULAR_MIN_WINDOW: usize = 32;

/// Default number of extra terms a fit must reproduce beyond the ones that
/// determine it.
pub const DEFAULT_GUARD: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FitError {
    #[error("no rational generating function with denominator degree <= {max_den_deg} fits the data")]
    NoFit { max_den_deg: usize },
    #[error("{got} terms cannot decide denominator degree {max_den_deg} with guard {guard}; need {needed}")]
    InsufficientTerms {
        max_den_deg: usize,
        guard: usize,
        needed: usize,
        got: usize,
    },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Shortest linear recurrence of a sequence, as `(connection polynomial,
/// linear complexity)`. The connection polynomial `C` satisfies
/// `sum_i C_i s_{n-i} = 0` for `L <= n < len`, with `C_0 != 0`.
pub fn berlekamp_massey(terms: &[BigInt]) -> (ZPoly, usize) {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    let mut b_poly: Vec<BigInt> = vec![BigInt::one()];
    let mut b = BigInt::one();
    let mut l = 0usize;
    let mut m = 1usize;

    for n in 0..terms.len() {
        let mut d = BigInt::zero();
        for (i, ci) in c.iter().enumerate().take(l + 1) {
            if i > n {
                break;
            }
            if !ci.is_zero() {
                d += ci * &terms[n - i];
            }
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        // next = b*C - d * t^m * B
        let len = c.len().max(b_poly.len() + m);
        let mut next = vec![BigInt::zero(); len];
        for (i, ci) in c.iter().enumerate() {
            next[i] = ci * &b;
        }
        for (i, bi) in b_poly.iter().enumerate() {
            if !bi.is_zero() {
                next[i + m] -= &d * bi;
            }
        }
        let g = next.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !g.is_zero() && !g.is_one() {
            for x in next.iter_mut() {
                *x /= &g;
            }
        }
        while next.len() > 1 && next.last().is_some_and(Zero::is_zero) {
            next.pop();
        }
        if 2 * l <= n {
            let old = std::mem::replace(&mut c, next);
            l = n + 1 - l;
            b_poly = old;
            b = d;
            let gb = b_poly.iter().fold(b.abs(), |acc, x| acc.gcd(x));
            if !gb.is_one() {
                for x in b_poly.iter_mut() {
                    *x /= &gb;
                }
                b /= &gb;
            }
            m = 1;
        } else {
            c = next;
            m += 1;
        }
    }
    (ZPoly::new(c), l)
}

/// Rational generating function whose series starts with `terms`.
///
/// The linear complexity `L` is read off from all but the last `guard`
/// terms; it is accepted when `L <= max_den_deg`, those terms determine it
/// (`2L + 1` of them), and the resulting generating function reproduces every
/// supplied term including the guard window.
pub fn fit_recurrence(terms: &[BigInt], max_den_deg: usize, guard: usize) -> Result<RationalGF, FitError> {
    let got = terms.len();
    let insufficient = || FitError::InsufficientTerms {
        max_den_deg,
        guard,
        needed: 2 * max_den_deg + 1 + guard,
        got,
    };
    if got < 1 + guard {
        return Err(insufficient());
    }
    let window = got - guard;
    let supported = (window - 1) / 2;

    let accept = |conn: ZPoly, l: usize| -> Result<Option<RationalGF>, FitError> {
        if l > max_den_deg || l > supported {
            return Ok(None);
        }
        let series = ZPoly::new(terms[..l.max(1)].to_vec());
        let num = poly_mul(&series, &conn).truncate(l);
        let gf = RationalGF::new(num, conn)?;
        Ok(reproduces(&gf, terms).then_some(gf))
    };
    if window >= MODULAR_MIN_WINDOW {
        if let Some((conn, l)) = modular_connection(&terms[..window]) {
            if let Some(gf) = accept(conn, l)? {
                return Ok(gf);
            }
        }
    }
    let (conn, l) = berlekamp_massey(&terms[..window]);
    if let Some(gf) = accept(conn, l)? {
        return Ok(gf);
    }
    if max_den_deg > supported {
        Err(insufficient())
    } else {
        Err(FitError::NoFit { max_den_deg })
    }
}

/// Integer connection polynomial with `C_0 = 1` found by Berlekamp-Massey
/// modulo word-sized primes and Chinese remaindering. Only returned once it
/// is checked exactly against every term, so a wrong lift costs time, never
/// correctness. `None` means: use the exact search.
fn modular_connection(terms: &[BigInt]) -> Option<(ZPoly, usize)> {
    const MAX_PRIMES: usize = 4096;
    let mut best_l = 0;
    let mut crt: Option<Crt> = None;
    let mut previous: Option<Vec<BigInt>> = None;
    for p in primes().take(MAX_PRIMES) {
        let residues: Vec<u64> = terms.iter().map(|x| reduce_mod(x, p)).collect();
        let (c, l) = berlekamp_massey_mod(&residues, p);
        if l < best_l {
            continue;
        }
        if l > best_l || crt.is_none() {
            best_l = l;
            crt = Some(Crt::new(l + 1));
            previous = None;
        }
        let acc = crt.as_mut().expect("set above");
        acc.add(&c, p);
        let now = acc.values().to_vec();
        if previous.as_ref() == Some(&now) {
            if satisfies(&now, best_l, terms) {
                return Some((ZPoly::new(now), best_l));
            }
            // Stable but wrong: the maximal L seen so far is too small.
            return None;
        }
        previous = Some(now);
    }
    None
}

fn satisfies(c: &[BigInt], l: usize, terms: &[BigInt]) -> bool {
    (l..terms.len()).all(|n| {
        let mut acc = BigInt::zero();
        for (i, ci) in c.iter().enumerate() {
            if !ci.is_zero() {
                acc += ci * &terms[n - i];
            }
        }
        acc.is_zero()
    })
}

fn reproduces(gf: &RationalGF, terms: &[BigInt]) -> bool {
    if !gf.den().coeff(0).is_one() {
        // Integer sequences with rational generating functions always have a
        // reduced denominator with constant term 1.
        return false;
    }
    gf.integer_series(terms.len()).as_slice() == terms
}

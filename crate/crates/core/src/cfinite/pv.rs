//! Pisot-Vijayaraghavan classification of the indicial polynomial.
//!
//! Roots of unity are removed exactly by cyclotomic division first; the
//! remaining roots are located numerically (companion eigenvalues polished by
//! Newton steps) and compared against the unit circle with a margin.

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::CFiniteSeq;
use crate::arith::ZPoly;

pub const DEFAULT_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum NotPvReason {
    /// A root of unity (exactly detected cyclotomic factor `Phi_m`).
    RootOfModulusOne { cyclotomic_index: u64 },
    /// No root of modulus greater than one.
    NoRootAboveOne,
    /// More than one root (with multiplicity) outside the closed unit disc.
    SeveralRootsOutside { count: usize },
    /// The unique root outside the unit disc is not a positive real.
    DominantNotPositiveReal,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PvVerdict {
    Pv,
    NotPv(NotPvReason),
    /// Some root lies within `margin` of the unit circle and no exact test
    /// applies.
    Undecided {
        margin: f64,
    },
}

#[derive(Debug, Clone)]
pub struct PvReport {
    pub verdict: PvVerdict,
    pub indicial: ZPoly,
    /// All roots of the indicial polynomial, largest modulus first.
    pub roots: Vec<Complex<f64>>,
}

impl PvVerdict {
    pub fn is_pv(&self) -> bool {
        matches!(self, PvVerdict::Pv)
    }
}

pub fn pv_classify(seq: &CFiniteSeq) -> PvReport {
    pv_classify_with_margin(seq, DEFAULT_MARGIN)
}

pub fn pv_classify_with_margin(seq: &CFiniteSeq, margin: f64) -> PvReport {
    let indicial = seq.indicial_poly();
    let roots = numeric_roots(&indicial);
    let degree = indicial.degree().unwrap_or(0);

    for m in cyclotomic_indices(degree) {
        if indicial.div_exact(&cyclotomic(m)).is_some() {
            return PvReport {
                verdict: PvVerdict::NotPv(NotPvReason::RootOfModulusOne { cyclotomic_index: m }),
                indicial,
                roots,
            };
        }
    }

    let verdict = classify_numeric(&roots, margin);
    PvReport {
        verdict,
        indicial,
        roots,
    }
}

fn classify_numeric(roots: &[Complex<f64>], margin: f64) -> PvVerdict {
    let outside: Vec<&Complex<f64>> = roots.iter().filter(|z| z.norm() > 1.0 + margin).collect();
    if outside.len() > 1 {
        return PvVerdict::NotPv(NotPvReason::SeveralRootsOutside { count: outside.len() });
    }
    let near = roots.iter().any(|z| (z.norm() - 1.0).abs() <= margin);
    match outside.first() {
        None if near => PvVerdict::Undecided { margin },
        None => PvVerdict::NotPv(NotPvReason::NoRootAboveOne),
        Some(z) => {
            if z.im.abs() > margin * z.norm() || z.re <= 0.0 {
                PvVerdict::NotPv(NotPvReason::DominantNotPositiveReal)
            } else if near {
                PvVerdict::Undecided { margin }
            } else {
                PvVerdict::Pv
            }
        }
    }
}

/// Indices `m` with `phi(m) <= degree`.
fn cyclotomic_indices(degree: usize) -> Vec<u64> {
    // phi(m) >= sqrt(m / 2), so m <= 2 degree^2 covers every candidate.
    let bound = (2 * degree * degree).max(2) as u64;
    (1..=bound).filter(|&m| (totient(m) as usize) <= degree).collect()
}

fn totient(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `Phi_m(X)` from `X^m - 1 = prod_{d | m} Phi_d(X)`.
fn cyclotomic(m: u64) -> ZPoly {
    let mut p = ZPoly::monomial(BigInt::from(1), m as usize);
    p = &p - &ZPoly::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic factor divides");
        }
    }
    p
}

/// Roots via companion-matrix eigenvalues, refined by Newton's method,
/// sorted by decreasing modulus.
pub(crate) fn numeric_roots(p: &ZPoly) -> Vec<Complex<f64>> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let lead = c[deg];
    let mut comp = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        comp[(i, deg - 1)] = -c[i] / lead;
    }
    let mut roots: Vec<Complex<f64>> = comp.complex_eigenvalues().iter().cloned().collect();
    for z in roots.iter_mut() {
        *z = polish(&c, *z);
    }
    roots.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap_or(std::cmp::Ordering::Equal));
    roots
}

fn polish(c: &[f64], mut z: Complex<f64>) -> Complex<f64> {
    for _ in 0..8 {
        let mut val = Complex::<f64>::zero();
        let mut der = Complex::<f64>::zero();
        for &a in c.iter().rev() {
            der = der * z + val;
            val = val * z + a;
        }
        if der.norm() == 0.0 {
            break;
        }
        let step: Complex<f64> = val / der;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if step.norm() < 1e-15 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), ZPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2), ZPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(6), ZPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), ZPoly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn k_bonacci_sequences_are_pv() {
        for k in 2..=6 {
            let mut init = vec![0; k];
            init[k - 1] = 1;
            let seq = CFiniteSeq::k_bonacci(init).unwrap();
            assert_eq!(pv_classify(&seq).verdict, PvVerdict::Pv, "k = {k}");
        }
    }

    #[test]
    fn powers_of_two_are_pv() {
        let r = pv_classify(&CFiniteSeq::powers(2));
        assert_eq!(r.verdict, PvVerdict::Pv);
        assert!((r.roots[0].re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn two_pow_plus_one_has_unit_root() {
        let seq = CFiniteSeq::new(vec![2, 3], vec![3, -2]).unwrap();
        assert_eq!(
            pv_classify(&seq).verdict,
            PvVerdict::NotPv(NotPvReason::RootOfModulusOne { cyclotomic_index: 1 })
        );
    }

    #[test]
    fn other_failures() {
        // X^2 - 4: roots +-2
        let seq = CFiniteSeq::new(vec![1, 1], vec![0, 4]).unwrap();
        assert_eq!(
            pv_classify(&seq).verdict,
            PvVerdict::NotPv(NotPvReason::SeveralRootsOutside { count: 2 })
        );
        // X + 2: root -2
        let seq = CFiniteSeq::new(vec![1], vec![-2]).unwrap();
        assert_eq!(
            pv_classify(&seq).verdict,
            PvVerdict::NotPv(NotPvReason::DominantNotPositiveReal)
        );
        // X^2 - X + 1 = Phi_6
        let seq = CFiniteSeq::new(vec![1, 1], vec![1, -1]).unwrap();
        assert!(matches!(
            pv_classify(&seq).verdict,
            PvVerdict::NotPv(NotPvReason::RootOfModulusOne { cyclotomic_index: 6 })
        ));
        // X^2 - 2X + 2: complex pair of modulus sqrt 2
        let seq = CFiniteSeq::new(vec![1, 1], vec![2, -2]).unwrap();
        assert!(matches!(pv_classify(&seq).verdict, PvVerdict::NotPv(_)));
    }
}

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{poly_mul, ZPoly};
use super::ArithError;

/// Solves `A x = b` exactly by Gaussian elimination over the rationals,
/// pivoting on the entry of largest magnitude in each column.
pub fn linsolve(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>, ArithError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(ArithError::DimensionMismatch);
    }
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&x, &y| m[x][col].abs().cmp(&m[y][col].abs()))
            .ok_or(ArithError::Singular)?;
        m.swap(col, pivot);
        let (upper, lower) = m.split_at_mut(col + 1);
        let prow = &upper[col];
        let p = prow[col].clone();
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &p;
            for j in col..=n {
                if !prow[j].is_zero() {
                    let d = &f * &prow[j];
                    row[j] -= d;
                }
            }
        }
    }

    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                acc -= &m[i][j] * &x[j];
            }
        }
        x[i] = acc / &m[i][i];
    }
    Ok(x)
}

/// Fraction-free (Bareiss) elimination on the augmented system `[A | b]`
/// over `Z[t]`, returning `(det A_b, det A)` where `A_b` is `A` with its last
/// column replaced by `b`. By Cramer's rule the last unknown is their
/// quotient.
///
/// Requires every leading principal minor of `A` to have constant term `±1`,
/// which holds for `I - tM`: at `t = 0` the matrix is the identity. No row
/// exchanges are then needed and each Bareiss division is an exact power
/// series division.
pub fn bareiss_last_component(a: Vec<Vec<ZPoly>>, b: Vec<ZPoly>) -> Result<(ZPoly, ZPoly), ArithError> {
    let n = a.len();
    if n == 0 {
        return Err(ArithError::DimensionMismatch);
    }
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(ArithError::DimensionMismatch);
    }
    let mut m: Vec<Vec<ZPoly>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, bi)| {
            row.push(bi);
            row
        })
        .collect();

    let mut prev = ZPoly::one();
    for k in 0..n - 1 {
        let pivot = m[k][k].clone();
        if !pivot.coeff(0).abs().is_one() {
            return Err(ArithError::Singular);
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let prow = &upper[k];
        for row in lower.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..=n {
                let mut val = poly_mul(&pivot, &row[j]);
                if !lead.is_zero() && !prow[j].is_zero() {
                    val = &val - &poly_mul(&lead, &prow[j]);
                }
                row[j] = val.div_exact_unit_constant(&prev).ok_or(ArithError::Singular)?;
            }
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if det.is_zero() {
        return Err(ArithError::Singular);
    }
    let numer = m[n - 1][n].clone();
    Ok((numer, det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalGF;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn identity_returns_rhs() {
        let a = vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]];
        let b = vec![q(3, 7), q(-2, 1)];
        assert_eq!(linsolve(&a, &b).unwrap(), b);
    }

    #[test]
    fn singular_matrix_signalled() {
        let a = vec![vec![q(0, 1), q(0, 1)], vec![q(0, 1), q(0, 1)]];
        assert_eq!(linsolve(&a, &[q(1, 1), q(1, 1)]), Err(ArithError::Singular));
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert_eq!(linsolve(&a, &[q(1, 1), q(1, 1)]), Err(ArithError::Singular));
    }

    #[test]
    fn u2_system_at_one_tenth() {
        // (I - tM) F = v with M = [[3,4],[1,2]], v = (1,0), t = 1/10.
        let t = q(1, 10);
        let one = q(1, 1);
        let a = vec![
            vec![&one - &t * q(3, 1), -(&t * q(4, 1))],
            vec![-(&t * q(1, 1)), &one - &t * q(2, 1)],
        ];
        let x = linsolve(&a, &[q(1, 1), q(0, 1)]).unwrap();
        // (1 - 2t) / (1 - 5t + 2t^2) at t = 1/10 is (8/10) / (52/100) = 20/13.
        assert_eq!(x[0], q(20, 13));
        // t / (1 - 5t + 2t^2) = (1/10) / (52/100) = 5/26.
        assert_eq!(x[1], q(5, 26));
    }

    #[test]
    fn bareiss_recovers_u2_gf() {
        let z = ZPoly::from_i64s;
        // Root placed last: unknowns (F1, F0).
        let a = vec![vec![z(&[1, -2]), z(&[0, -1])], vec![z(&[0, -4]), z(&[1, -3])]];
        let b = vec![z(&[0]), z(&[1])];
        let (num, den) = bareiss_last_component(a, b).unwrap();
        let g = RationalGF::new(num, den).unwrap();
        assert_eq!(g, RationalGF::from_i64s(&[1, -2], &[1, -5, 2]).unwrap());
    }
}

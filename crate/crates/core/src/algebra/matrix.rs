use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{AlgebraError, Rational};

/// Exact determinant of a square rational matrix.
///
/// Each row is scaled by the lcm of its denominators, the resulting integer
/// matrix goes through Bareiss elimination, and the row scalings are divided
/// back out at the end. The empty matrix has determinant one.
pub fn det_exact(rows: &[Vec<Rational>]) -> Result<Rational, AlgebraError> {
    let n = rows.len();
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != n {
            return Err(AlgebraError::NotSquare {
                rows: n,
                row,
                len: entries.len(),
            });
        }
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    let det = bareiss(&mut m);
    Ok(Rational::new(det, scale))
}

/// Fraction-free Gaussian elimination; consumes the matrix contents.
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn identity_and_two_by_two() {
        assert_eq!(
            det_exact(&ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap(),
            int(1)
        );
        assert_eq!(det_exact(&ints(&[&[1, 2], &[3, 4]])).unwrap(), int(-2));
        assert_eq!(det_exact(&[]).unwrap(), int(1));
    }

    #[test]
    fn hilbert_three() {
        let h: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| rat(1, i + j + 1)).collect())
            .collect();
        assert_eq!(det_exact(&h).unwrap(), rat(1, 2160));
    }

    #[test]
    fn pivoting_and_singular() {
        assert_eq!(det_exact(&ints(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
        assert_eq!(det_exact(&ints(&[&[1, 2], &[2, 4]])).unwrap(), int(0));
        assert_eq!(
            det_exact(&ints(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]])).unwrap(),
            int(-6)
        );
    }

    #[test]
    fn ragged_matrix_rejected() {
        let m = vec![vec![int(1), int(2)], vec![int(3)]];
        assert!(matches!(
            det_exact(&m),
            Err(AlgebraError::NotSquare { row: 1, .. })
        ));
    }
}

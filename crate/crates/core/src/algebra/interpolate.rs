use num_traits::Zero;

use super::{format_rational, AlgebraError, Poly, Rational};

/// Unique polynomial of degree below `points.len()` through every point.
///
/// Newton divided differences, expanded to monomial form at the end.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Poly, AlgebraError> {
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    for (i, x) in xs.iter().enumerate() {
        if xs[..i].contains(x) {
            return Err(AlgebraError::DuplicateAbscissa(format_rational(x)));
        }
    }
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = table.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = xs[i] - xs[i - level];
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
    }
    // Horner on the Newton basis: c0 + (z - x0)(c1 + (z - x1)(c2 + ...)).
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        let shift = Poly::new(vec![-xs[i].clone(), Rational::from_integer(1.into())]);
        acc = &(&acc * &shift) + &Poly::constant(table[i].clone());
    }
    debug_assert!(points.iter().all(|(x, y)| (acc.eval(x) - y).is_zero()));
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn constant_and_square() {
        let p = interpolate(&[(int(0), int(1)), (int(1), int(1))]).unwrap();
        assert_eq!(p, Poly::one());
        let p = interpolate(&[(int(0), int(0)), (int(1), int(1)), (int(2), int(4))]).unwrap();
        assert_eq!(p, Poly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn empty_input_gives_zero() {
        assert!(interpolate(&[]).unwrap().is_zero());
    }

    #[test]
    fn duplicate_abscissa_rejected() {
        let err = interpolate(&[(int(2), int(1)), (int(2), int(3))]).unwrap_err();
        assert_eq!(err, AlgebraError::DuplicateAbscissa("2".into()));
    }
}

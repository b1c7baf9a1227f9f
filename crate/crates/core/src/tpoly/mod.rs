//! The symmetric polynomial
//!
//! ```text
//! T(x_1..x_2n) = prod_{i,j} G(x_j, x_{n+i}) * det[1 / G(x_j, x_{n+i})]
//!                / (Delta(x_1..x_n) * Delta(x_{n+1}..x_{2n}))
//! ```
//!
//! evaluated exactly over the rationals, its value at coinciding arguments,
//! and the polynomial `p_{n-1}(z)` it defines through
//!
//! ```text
//! T(2psi+1, ..., 2psi+1, psi)
//!     = (psi / (2psi+1))^(n-1) * ((psi+1)(2psi+1)^2)^(n^2-n) * p_{n-1}(-1/(2psi+1)).
//! ```

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{det_exact, format_rational, int, interpolate, AlgebraError, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TPolyError {
    #[error("T takes an even number of arguments, got {0}")]
    OddArity(usize),
    #[error("arguments {i} and {j} of group {group} coincide")]
    CoincidentArguments { group: usize, i: usize, j: usize },
    #[error("G(x_{j}, x_{i}) vanishes")]
    ZeroG { i: usize, j: usize },
    #[error("invalid coalesced spec: {0}")]
    InvalidSpec(String),
    #[error("no nonsingular sample found after {0} candidates")]
    SamplesExhausted(usize),
    #[error("residual check failed: value at {at} is off the interpolant")]
    Residual { at: String },
    #[error("psi = {0} is not admissible")]
    InadmissiblePsi(String),
    #[error("n must be at least 1")]
    EmptyLattice,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `G(x, y) = (psi+2) x y (x+y) + psi(2psi+1)(x+y) - 2(psi^2+3psi+1) x y - psi(x^2+y^2)`.
pub fn g_eval(x: &Rational, y: &Rational, psi: &Rational) -> Rational {
    let s = x + y;
    let p = x * y;
    let two = int(2);
    let psi2 = psi * psi;
    (psi + &two) * &p * &s + psi * (&two * psi + int(1)) * &s
        - &two * (&psi2 + int(3) * psi + int(1)) * &p
        - psi * (x * x + y * y)
}

/// `prod_{i<j} (x_j - x_i)`.
fn vandermonde(xs: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for j in 0..xs.len() {
        for i in 0..j {
            acc *= &xs[j] - &xs[i];
        }
    }
    acc
}

/// `T` at pairwise distinct arguments within each group.
///
/// The first half of `xs` is the column group, the second half the row group.
pub fn t_eval_distinct(xs: &[Rational], psi: &Rational) -> Result<Rational, TPolyError> {
    if !xs.len().is_multiple_of(2) {
        return Err(TPolyError::OddArity(xs.len()));
    }
    let n = xs.len() / 2;
    let (cols, rows) = xs.split_at(n);
    for (group, g) in [cols, rows].into_iter().enumerate() {
        for j in 0..n {
            for i in 0..j {
                if g[i] == g[j] {
                    return Err(TPolyError::CoincidentArguments { group, i, j });
                }
            }
        }
    }
    let mut prod = Rational::one();
    let mut matrix = Vec::with_capacity(n);
    for (i, y) in rows.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for (j, x) in cols.iter().enumerate() {
            let g = g_eval(x, y, psi);
            if g.is_zero() {
                return Err(TPolyError::ZeroG { i: n + i, j });
            }
            row.push(g.recip());
            prod *= g;
        }
        matrix.push(row);
    }
    let det = det_exact(&matrix)?;
    Ok(prod * det / (vandermonde(cols) * vandermonde(rows)))
}

/// Arguments of `T` that may repeat, with the straight-line perturbation
/// `x_i(t) = target_i + direction_i * t` used to reach them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalescedSpec {
    pub first: Vec<Rational>,
    pub second: Vec<Rational>,
    /// One per argument, first group then second group; pairwise distinct.
    pub directions: Vec<Rational>,
    /// Extra candidate sample points tried when one hits a singular configuration.
    pub retries: usize,
}

impl CoalescedSpec {
    /// Directions `1, 2, ..., 2n`.
    pub fn new(first: Vec<Rational>, second: Vec<Rational>) -> Self {
        let directions = (1..=(first.len() + second.len()) as i64).map(int).collect();
        CoalescedSpec {
            first,
            second,
            directions,
            retries: 64,
        }
    }

    pub fn with_directions(mut self, directions: Vec<Rational>) -> Self {
        self.directions = directions;
        self
    }

    pub fn n(&self) -> usize {
        self.first.len()
    }

    fn validate(&self) -> Result<(), TPolyError> {
        let n = self.first.len();
        if self.second.len() != n {
            return Err(TPolyError::InvalidSpec(format!(
                "group sizes differ: {} vs {}",
                n,
                self.second.len()
            )));
        }
        if self.directions.len() != 2 * n {
            return Err(TPolyError::InvalidSpec(format!(
                "{} directions for {} arguments",
                self.directions.len(),
                2 * n
            )));
        }
        for j in 0..self.directions.len() {
            if self.directions[..j].contains(&self.directions[j]) {
                return Err(TPolyError::InvalidSpec(
                    "directions must be distinct".into(),
                ));
            }
        }
        Ok(())
    }

    fn point(&self, t: &Rational) -> Vec<Rational> {
        self.first
            .iter()
            .chain(&self.second)
            .zip(&self.directions)
            .map(|(x, c)| x + c * t)
            .collect()
    }
}

/// Total degree bound of `T` in `2n` variables.
pub fn t_degree_bound(n: usize) -> usize {
    2 * n * n.saturating_sub(1)
}

/// `T` at possibly repeated arguments.
///
/// Along the perturbation line `T` is a polynomial in `t` of degree at most
/// `2n(n-1)`; it is sampled at that many plus one nonsingular points
/// `t = 1, 2, ...`, interpolated, checked against one further sample, and
/// evaluated at `t = 0`.
pub fn t_eval_coalesced(spec: &CoalescedSpec, psi: &Rational) -> Result<Rational, TPolyError> {
    spec.validate()?;
    let needed = t_degree_bound(spec.n()) + 2;
    let budget = needed + spec.retries;
    let mut samples = Vec::with_capacity(needed);
    let mut candidate = 0i64;
    while samples.len() < needed {
        candidate += 1;
        if candidate as usize > budget {
            return Err(TPolyError::SamplesExhausted(budget));
        }
        let t = int(candidate);
        match t_eval_distinct(&spec.point(&t), psi) {
            Ok(v) => samples.push((t, v)),
            Err(TPolyError::ZeroG { .. } | TPolyError::CoincidentArguments { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let (check, fit) = samples.split_last().expect("at least two samples");
    let p = interpolate(fit)?;
    if p.eval(&check.0) != check.1 {
        return Err(TPolyError::Residual {
            at: format!("t = {}", format_rational(&check.0)),
        });
    }
    Ok(p.eval(&Rational::zero()))
}

/// `psi` for a given `z = -1/(2psi+1)`.
pub fn psi_from_z(z: &Rational) -> Rational {
    -(z + int(1)) / (int(2) * z)
}

/// `(psi / (2psi+1))^(n-1) * ((psi+1)(2psi+1)^2)^(n^2-n)`.
pub fn pn_prefactor(n: usize, psi: &Rational) -> Rational {
    let xi0 = int(2) * psi + int(1);
    let ratio = psi / &xi0;
    let inner = (psi + int(1)) * &xi0 * &xi0;
    pow(&ratio, n - 1) * pow(&inner, n * n - n)
}

fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// `T(2psi+1, ..., 2psi+1, psi)` with `2n - 1` copies of `2psi+1`.
pub fn t_specialized(n: usize, psi: &Rational) -> Result<Rational, TPolyError> {
    let xi0 = int(2) * psi + int(1);
    let first = vec![xi0.clone(); n];
    let mut second = vec![xi0; n - 1];
    second.push(psi.clone());
    t_eval_coalesced(&CoalescedSpec::new(first, second), psi)
}

/// `p_{n-1}(z)` reconstructed from `T`.
///
/// Samples `z = 2, 3, ...` (never `0` or `+-1`), divides the specialized `T`
/// by its prefactor, interpolates through `n(n-1) + 1` samples and checks one
/// more. Sample evaluations run on the current rayon pool.
pub fn pn_via_t(n: usize) -> Result<Poly, TPolyError> {
    if n == 0 {
        return Err(TPolyError::EmptyLattice);
    }
    let count = n * (n - 1) + 2;
    let zs: Vec<Rational> = (2..2 + count as i64).map(int).collect();
    let values = zs
        .par_iter()
        .map(|z| {
            let psi = psi_from_z(z);
            let pref = pn_prefactor(n, &psi);
            if pref.is_zero() {
                return Err(TPolyError::InadmissiblePsi(format_rational(&psi)));
            }
            Ok((z.clone(), t_specialized(n, &psi)? / pref))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (check, fit) = values.split_last().expect("at least two samples");
    let p = interpolate(fit)?;
    if p.eval(&check.0) != check.1 {
        return Err(TPolyError::Residual {
            at: format!("z = {}", format_rational(&check.0)),
        });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn g_special_values() {
        let (x, y) = (rat(3, 7), rat(-5, 2));
        for psi in [int(0), int(1), rat(2, 3)] {
            assert_eq!(g_eval(&x, &y, &psi), g_eval(&y, &x, &psi));
        }
        // psi = 0: G = 2xy(x + y - 1)
        assert_eq!(
            g_eval(&x, &y, &int(0)),
            int(2) * &x * &y * (&x + &y - int(1))
        );
        assert_eq!(g_eval(&int(1), &int(1), &int(1)), int(0));
    }

    #[test]
    fn n1_is_identically_one() {
        let psi = rat(5, 3);
        assert_eq!(
            t_eval_distinct(&[rat(1, 2), rat(7, 4)], &psi).unwrap(),
            int(1)
        );
        let spec = CoalescedSpec::new(vec![int(2) * &psi + int(1)], vec![psi.clone()]);
        assert_eq!(t_eval_coalesced(&spec, &psi).unwrap(), int(1));
    }

    #[test]
    fn singular_inputs_are_reported() {
        let psi = int(2);
        assert_eq!(
            t_eval_distinct(&[int(1), int(1), int(3), int(4)], &psi),
            Err(TPolyError::CoincidentArguments {
                group: 0,
                i: 0,
                j: 1
            })
        );
        assert_eq!(
            t_eval_distinct(&[int(1)], &psi),
            Err(TPolyError::OddArity(1))
        );
        // G(0, 0) = 0 for any psi.
        assert!(matches!(
            t_eval_distinct(&[int(0), int(0)], &psi),
            Err(TPolyError::ZeroG { .. })
        ));
    }

    #[test]
    fn spec_validation() {
        let spec = CoalescedSpec::new(vec![int(1)], vec![int(2), int(3)]);
        assert!(matches!(
            t_eval_coalesced(&spec, &int(2)),
            Err(TPolyError::InvalidSpec(_))
        ));
        let spec =
            CoalescedSpec::new(vec![int(1)], vec![int(2)]).with_directions(vec![int(1), int(1)]);
        assert!(matches!(
            t_eval_coalesced(&spec, &int(2)),
            Err(TPolyError::InvalidSpec(_))
        ));
    }

    #[test]
    fn coalesced_matches_distinct_when_distinct() {
        let psi = rat(3, 2);
        let first = vec![rat(1, 3), rat(5, 2)];
        let second = vec![rat(-2, 7), int(4)];
        let direct = t_eval_distinct(&[first.clone(), second.clone()].concat(), &psi).unwrap();
        let limit = t_eval_coalesced(&CoalescedSpec::new(first, second), &psi).unwrap();
        assert_eq!(direct, limit);
    }

    #[test]
    fn psi_z_round_trip() {
        for z in [int(2), rat(-3, 5), int(7)] {
            let psi = psi_from_z(&z);
            assert_eq!(-(int(2) * psi + int(1)).recip(), z);
        }
    }

    #[test]
    fn small_pn() {
        assert_eq!(pn_via_t(1).unwrap(), Poly::one());
        assert_eq!(pn_via_t(2).unwrap(), Poly::from_ints(&[1, 1, 2]));
        assert_eq!(pn_via_t(0), Err(TPolyError::EmptyLattice));
    }
}

//! Closed forms of the partition function at `eta = -2/3`, `lambda_i = 1`,
//! `mu_j = 0` for `j < n`, compared against the brute-force sum.
//!
//! Inside these forms `rho` and `zeta` denote the multiplicative variables
//! `q^rho` and `q^zeta`, and the lattice enters only through the counts
//! `N_{m,l}(k0, k1, k2)`.

use num_traits::ToPrimitive;

use super::identities::{run_trials, SuiteReport};
use super::{c, omega_pow, psi, rel_residual, theta, BrutePlan, ModelParams, ThetaError, C64};
use crate::algebra::{binomial, Poly};
use crate::lattice::{count_table, CountTable};
use crate::tpoly::pn_via_t;

/// Specialized model data shared by all closed forms.
struct Ctx<'a> {
    n: usize,
    p: C64,
    s: C64,
    rho: C64,
    zeta: C64,
    params: &'a ModelParams,
}

impl<'a> Ctx<'a> {
    fn new(n: usize, params: &'a ModelParams) -> Ctx<'a> {
        Ctx {
            n,
            p: params.nome(),
            s: params.sqrt_nome(),
            rho: params.q_pow(params.rho),
            zeta: params.q_pow(params.zeta),
            params,
        }
    }

    fn t(&self, x: C64) -> Result<C64, ThetaError> {
        theta(x, self.p)
    }

    fn w(&self, k: i64) -> C64 {
        omega_pow(k)
    }

    fn q(&self, x: C64) -> C64 {
        self.params.q_pow(x)
    }

    /// `sum_{states with m, l} prod_faces theta(rho omega^a)^-3`.
    fn colored_sum(&self, table: &CountTable, m: usize, l: usize) -> Result<C64, ThetaError> {
        let inv: Vec<C64> = (0..3)
            .map(|i| Ok(self.t(self.rho * self.w(i))?.powi(-3)))
            .collect::<Result<_, ThetaError>>()?;
        let mut total = c(0.0, 0.0);
        for (key, count) in table.iter() {
            if key.m == Some(m) && key.l == Some(l) {
                total += inv[0].powi(key.k0 as i32)
                    * inv[1].powi(key.k1 as i32)
                    * inv[2].powi(key.k2 as i32)
                    * count as f64;
            }
        }
        Ok(total)
    }

    /// The `m`-dependent factor common to the closed forms built from counts.
    fn m_factor(&self, m: usize) -> Result<C64, ThetaError> {
        let n = self.n as i32;
        let m = m as i32;
        let rho = self.rho;
        Ok(
            self.t(rho * self.w(1))?.powi(2 * (n - m)) * self.t(rho * self.w(2))?.powi(2 * m)
                / self.w(1).powi(2 * (n - m))
                * self.zeta_ratios(m)?,
        )
    }

    fn zeta_ratios(&self, m: i32) -> Result<C64, ThetaError> {
        let n = self.n as i32;
        let (rho, zeta) = (self.rho, self.zeta);
        let rz = self.t(rho * zeta * self.w(2))? / self.t(rho * zeta * self.w(1))?;
        let z = self.t(zeta * self.w(2))? / self.t(zeta * self.w(1))?;
        Ok(rz.powi(m) * z.powi(n - m))
    }

    fn leading(&self, theta_rho_power: i32) -> Result<C64, ThetaError> {
        let n = self.n as i32;
        let rho = self.rho;
        let tri = (n * (n + 1) / 2) + 1;
        Ok((-self.w(2)).powi(tri)
            * self.t(rho)?.powi(theta_rho_power)
            * theta(rho.powi(3), self.p.powi(3))?.powi(2 * n * (n + 1) - 1)
            / self.t(self.w(1))?.powi(2 * n - 1))
    }
}

/// Closed form for free last `mu`, taken from `params.mu[n-1]`.
pub fn free_mu_side(table: &CountTable, params: &ModelParams) -> Result<C64, ThetaError> {
    let n = table.n();
    let x = Ctx::new(n, params);
    let rho = x.rho;
    let mu = params.mu[n - 1];
    let one = c(1.0, 0.0);
    let x_tilde = match n % 3 {
        0 => x.t(rho)?.powi(2),
        1 => x.t(rho)? * x.t(rho * x.w(2))?,
        _ => x.t(rho * x.w(1))? * x.t(rho * x.w(2))?,
    };
    let lead = x.leading(n as i32 + 1)? * x_tilde;
    let up = x.t(x.q(one + mu))? * x.t(x.q(one * 2.0 - mu))?;
    let down = x.t(x.q(one * 2.0 + mu))? * x.t(x.q(one - mu))?;
    let mut total = c(0.0, 0.0);
    for m in 0..=n {
        let mut inner = c(0.0, 0.0);
        for l in 1..=2 * n {
            let k = l.div_ceil(2) as i32;
            let shift = l as f64 - n as f64;
            let y = if l % 2 == 1 {
                x.t(x.q(one - mu))?
            } else {
                x.q(-mu) * x.t(x.q(one + mu))?
            };
            inner += up.powi(k - 1)
                * down.powi(n as i32 - k)
                * x.t(rho * x.q(c(shift, 0.0)))?
                * x.t(rho * x.q(c(shift - 1.0, 0.0)))?
                * x.t(rho * x.q(mu + shift + 1.0))?
                * y
                * x.colored_sum(table, m, l)?;
        }
        total += x.m_factor(m)? * inner;
    }
    Ok(lead * total)
}

/// Closed form at last `mu = 1/4`.
pub fn quarter_side(table: &CountTable, params: &ModelParams) -> Result<C64, ThetaError> {
    let n = table.n();
    let x = Ctx::new(n, params);
    let rho = x.rho;
    let minus_one = c(-1.0, 0.0);
    let big_x = match n % 3 {
        0 => c(1.0, 0.0),
        1 => x.t(rho * x.w(2))? / x.t(rho)?,
        _ => x.t(rho * x.w(1))? * x.t(rho * x.w(2))? / x.t(rho)?.powi(2),
    };
    let lead = x.leading(n as i32 + 3)? * x.t(minus_one)?.powi(2 * n as i32 - 1) * big_x;
    let xi = x.w(1) * x.t(-x.w(1))? / x.t(minus_one)?;
    let mut total = c(0.0, 0.0);
    for m in 0..=n {
        let mut inner = c(0.0, 0.0);
        for l in 1..=2 * n {
            let li = l as i64;
            let ni = n as i64;
            inner += (-xi).powi(l as i32 - 1)
                * x.t(rho * x.w(li - ni))?
                * x.t(rho * x.w(li - ni - 1))?
                * x.t(-rho * x.w(li - ni + 2))?
                * x.colored_sum(table, m, l)?;
        }
        total += x.m_factor(m)? * inner;
    }
    Ok(lead * total)
}

/// Closed form at last `mu = 1/4` obtained from the determinant formula,
/// with `T(2psi+1, ..., 2psi+1, psi)` rebuilt from the exact `p_{n-1}`.
pub fn determinant_side(n: usize, pn: &Poly, params: &ModelParams) -> Result<C64, ThetaError> {
    let x = Ctx::new(n, params);
    let (rho, s) = (x.rho, x.s);
    let ni = n as i32;
    let minus_one = c(-1.0, 0.0);
    let ps = psi(params.tau)?;
    let xi0 = ps * 2.0 + 1.0;
    let zval = -xi0.inv();
    let pz = pn.coeffs().iter().rev().fold(c(0.0, 0.0), |acc, k| {
        acc * zval + k.to_f64().unwrap_or(f64::NAN)
    });
    let t_value = (ps / xi0).powi(ni - 1) * ((ps + 1.0) * xi0 * xi0).powi(ni * ni - ni) * pz;

    let w1 = x.w(1);
    let cc = x.t(-w1)?.powi(2) * x.t(-s)?
        / (w1 * x.t(minus_one)? * x.t(s)?.powi(2) * x.t(s * w1)? * x.t(-s * w1)?.powi(4));
    let b_tilde = if n % 3 == 1 {
        x.t(rho * x.w(2))? / x.t(rho)?
    } else {
        c(1.0, 0.0)
    };
    let lead = (-w1).powi(ni * (ni + 1) / 2 + ni)
        * (cc / x.t(w1)?.powi(2)).powi(ni * ni - ni)
        * t_value
        * b_tilde
        * x.t(s * w1)?.powi(2 * (ni - 1) * (2 * ni - 1))
        * (x.t(-s * x.w(2))? * x.t(-s)?).powi(ni - 1)
        / (x.t(rho)?.powi(ni) * x.t(w1)?);
    let mut total = c(0.0, 0.0);
    for m in 0..=ni {
        let b1 = binomial(ni as i64 - 1, m as i64 - 1)
            .to_f64()
            .unwrap_or(f64::NAN);
        let b2 = binomial(ni as i64 - 1, m as i64)
            .to_f64()
            .unwrap_or(f64::NAN);
        let mut term = c(0.0, 0.0);
        if b1 != 0.0 {
            term += x.w(-(m as i64))
                * b1
                * x.t(minus_one)?
                * x.t(-rho * x.w(2))?
                * x.t(rho * w1)?.powi(m - 1)
                * x.t(rho * x.w(2))?.powi(ni - m);
        }
        if b2 != 0.0 {
            term -= x.w(-(m as i64) - 2)
                * b2
                * x.t(-w1)?
                * x.t(-rho)?
                * x.t(rho * w1)?.powi(m)
                * x.t(rho * x.w(2))?.powi(ni - m - 1);
        }
        total += term * x.zeta_ratios(m)?;
    }
    Ok(lead * total)
}

/// Brute-force value and the closed forms at one parameter draw.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecializedSides {
    pub brute: C64,
    pub free_mu: C64,
    pub quarter: Option<C64>,
    pub determinant: Option<C64>,
}

/// Residual checks of the closed forms for each `n`, tolerance `1e-8`:
/// the free-`mu` form at a random last `mu`, and at last `mu = 1/4` both
/// the count form and the determinant form.
pub fn specialization_check(ns: &[usize], trials: usize, seed: u64) -> SuiteReport {
    const TOL: f64 = 1e-8;
    let mut checks = Vec::new();
    let quarter = c(0.25, 0.0);
    for &n in ns {
        if n == 0 {
            continue;
        }
        let plan = BrutePlan::new(n);
        let table = count_table(n).expect("enumeration succeeds");
        let pn = pn_via_t(n).expect("T route succeeds");
        checks.push(run_trials(
            &format!("free-mu-n{n}"),
            trials,
            seed,
            TOL,
            |rng| {
                let mu = super::random_exponent(rng);
                let params = ModelParams::specialized(n, mu, rng);
                Ok(rel_residual(
                    plan.partition_conditioned(&params)?,
                    free_mu_side(&table, &params)?,
                ))
            },
        ));
        checks.push(run_trials(
            &format!("quarter-counts-n{n}"),
            trials,
            seed,
            TOL,
            |rng| {
                let params = ModelParams::specialized(n, quarter, rng);
                Ok(rel_residual(
                    plan.partition_conditioned(&params)?,
                    quarter_side(&table, &params)?,
                ))
            },
        ));
        checks.push(run_trials(
            &format!("quarter-determinant-n{n}"),
            trials,
            seed,
            TOL,
            |rng| {
                let params = ModelParams::specialized(n, quarter, rng);
                Ok(rel_residual(
                    plan.partition_conditioned(&params)?,
                    determinant_side(n, &pn, &params)?,
                ))
            },
        ));
    }
    SuiteReport::new("specialization", seed, checks)
}

/// All sides at a single draw, for inspection.
pub fn specialized_sides(n: usize, params: &ModelParams) -> Result<SpecializedSides, ThetaError> {
    let table = count_table(n).expect("enumeration succeeds");
    let brute = BrutePlan::new(n).partition(params)?;
    let free_mu = free_mu_side(&table, params)?;
    let is_quarter = rel_residual(params.mu[n - 1], c(0.25, 0.0)) < 1e-15;
    let (quarter, determinant) = if is_quarter {
        let pn = pn_via_t(n).expect("T route succeeds");
        (
            Some(quarter_side(&table, params)?),
            Some(determinant_side(n, &pn, params)?),
        )
    } else {
        (None, None)
    };
    Ok(SpecializedSides {
        brute,
        free_mu,
        quarter,
        determinant,
    })
}

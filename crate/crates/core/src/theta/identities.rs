use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    bracket, c, e2pi, g_complex, omega_pow, partition_filali, psi, random_exponent, random_tau,
    rel_residual, theta, theta_truncated, x_of, BrutePlan, ModelParams, ThetaError, C64,
};

/// Redraws allowed per trial after a near-singular parameter draw.
const MAX_REDRAWS: usize = 64;

/// Outcome of one randomized identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub trials: usize,
    /// `None` when some trial could not be evaluated at all.
    pub max_rel_residual: Option<f64>,
    pub pass: bool,
}

/// A list of checks; passes iff all of them do.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, checks: Vec<CheckResult>) -> SuiteReport {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport {
            suite: suite.to_string(),
            seed,
            checks,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn stream_of(name: &str) -> u64 {
    // FNV-1a keeps per-check random streams independent of check order.
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    })
}

/// Runs `trial` on `trials` independent random streams derived from `seed`
/// and `name`, in parallel, and keeps the worst residual. A trial whose draw
/// is near-singular is redrawn from the same stream.
pub fn run_trials<F>(name: &str, trials: usize, seed: u64, tol: f64, trial: F) -> CheckResult
where
    F: Fn(&mut ChaCha8Rng) -> Result<f64, ThetaError> + Sync,
{
    let stream = stream_of(name);
    let residuals: Vec<Option<f64>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream.wrapping_add(t as u64));
            for _ in 0..MAX_REDRAWS {
                match trial(&mut rng) {
                    Ok(r) if r.is_finite() => return Some(r),
                    Ok(_) | Err(ThetaError::NearSingular(_)) | Err(ThetaError::NonFinite(_)) => {}
                    Err(_) => return None,
                }
            }
            None
        })
        .collect();
    let max = residuals
        .iter()
        .try_fold(0.0f64, |acc, r| r.map(|r| acc.max(r)));
    CheckResult {
        name: name.to_string(),
        trials,
        max_rel_residual: max,
        pass: max.is_some_and(|m| m <= tol),
    }
}

fn rand_x(rng: &mut ChaCha8Rng) -> C64 {
    e2pi(random_exponent(rng))
}

/// Pointwise theta identities, tolerance `1e-10` each.
pub fn identity_suite(trials: usize, seed: u64) -> SuiteReport {
    const TOL: f64 = 1e-10;
    let mut checks = Vec::new();
    let minus_one = c(-1.0, 0.0);
    let w = omega_pow(1);

    checks.push(run_trials("quasi-periodicity", trials, seed, TOL, |rng| {
        let p = e2pi(random_tau(rng));
        let x = rand_x(rng);
        let t = theta(x, p)?;
        let a = rel_residual(theta(p * x, p)?, -t / x);
        let b = rel_residual(theta(x.inv(), p)?, -t / x);
        Ok(a.max(b))
    }));

    checks.push(run_trials(
        "truncation-doubling",
        trials,
        seed,
        1e-12,
        |rng| {
            let p = e2pi(random_tau(rng));
            let x = rand_x(rng);
            let j =
                ((1e-17f64 / x.norm().max(1.0 / x.norm())).ln() / p.norm().ln()).ceil() as usize;
            Ok(rel_residual(theta(x, p)?, theta_truncated(x, p, 2 * j)?))
        },
    ));

    checks.push(run_trials(
        "bracket-antisymmetry",
        trials,
        seed,
        TOL,
        |rng| {
            let params = ModelParams::random(0, rng);
            let x = random_exponent(rng);
            Ok(rel_residual(bracket(-x, &params)?, -bracket(x, &params)?))
        },
    ));

    checks.push(run_trials("addition-rule", trials, seed, TOL, |rng| {
        let p = e2pi(random_tau(rng));
        let [x1, x2, x3, x4] = [rand_x(rng), rand_x(rng), rand_x(rng), rand_x(rng)];
        let t = |x| theta(x, p);
        let lhs = t(x1 * x3)? * t(x1 / x3)? * t(x2 * x4)? * t(x2 / x4)?
            - t(x1 * x4)? * t(x1 / x4)? * t(x2 * x3)? * t(x2 / x3)?;
        let rhs = x2 / x3 * t(x1 * x2)? * t(x1 / x2)? * t(x3 * x4)? * t(x3 / x4)?;
        Ok(rel_residual(lhs, rhs))
    }));

    checks.push(run_trials("omega-symmetry", trials, seed, TOL, |rng| {
        let tau = random_tau(rng);
        let p = e2pi(tau);
        let s = e2pi(tau / 2.0);
        Ok(rel_residual(theta(s * w, p)?, theta(s * omega_pow(2), p)?))
    }));

    checks.push(run_trials("triple-product", trials, seed, TOL, |rng| {
        let p = e2pi(random_tau(rng));
        let x = rand_x(rng);
        let a = (rng_int(rng) % 7) - 3;
        let lhs = theta(x * omega_pow(a), p)?
            * theta(x * omega_pow(a + 1), p)?
            * theta(x * omega_pow(a + 2), p)?;
        Ok(rel_residual(lhs, theta(x.powi(3), p.powi(3))?))
    }));

    checks.push(run_trials("psi-2psi+1", trials, seed, TOL, |rng| {
        let tau = random_tau(rng);
        let p = e2pi(tau);
        let s = e2pi(tau / 2.0);
        let t = |x| theta(x, p);
        let rhs = t(-s * w)?.powi(2) * t(w)?.powi(2) / (t(-w)?.powi(2) * t(s * w)?.powi(2));
        Ok(rel_residual(psi(tau)? * 2.0 + 1.0, rhs))
    }));

    checks.push(run_trials("psi+1", trials, seed, TOL, |rng| {
        let tau = random_tau(rng);
        let p = e2pi(tau);
        let s = e2pi(tau / 2.0);
        let t = |x| theta(x, p);
        let rhs = -t(s)? * t(-s * w)? / (t(-s)? * t(s * w)?);
        Ok(rel_residual(psi(tau)? + 1.0, rhs))
    }));

    checks.push(run_trials("x(0)=2psi+1", trials, seed, TOL, |rng| {
        let tau = random_tau(rng);
        Ok(rel_residual(x_of(c(0.0, 0.0), tau)?, psi(tau)? * 2.0 + 1.0))
    }));

    checks.push(run_trials("x(z)-x(w)", trials, seed, TOL, |rng| {
        let tau = random_tau(rng);
        let (z, wv) = (random_exponent(rng), random_exponent(rng));
        let p = e2pi(tau);
        let s = e2pi(tau / 2.0);
        let t = |x| theta(x, p);
        let pm =
            |a: C64, u: C64| -> Result<C64, ThetaError> { Ok(t(a * e2pi(u))? * t(a * e2pi(-u))?) };
        let lhs = x_of(z, tau)? - x_of(wv, tau)?;
        let rhs = t(-s * w)?.powi(2) * t(s * w)? * t(s)? * w / t(-w)?.powi(2)
            * e2pi(-wv)
            * t(e2pi(wv + z))?
            * t(e2pi(wv - z))?
            / (pm(s * w, z)? * pm(s * w, wv)?);
        Ok(rel_residual(lhs, rhs))
    }));

    checks.push(run_trials("theta-over-g", trials, seed, TOL, |rng| {
        let tau = random_tau(rng);
        let (z, wv) = (random_exponent(rng), random_exponent(rng));
        let p = e2pi(tau);
        let p3 = p.powi(3);
        let s = e2pi(tau / 2.0);
        let t = |x| theta(x, p);
        let pm =
            |a: C64, u: C64| -> Result<C64, ThetaError> { Ok(t(a * e2pi(u))? * t(a * e2pi(-u))?) };
        let ct =
            omega_pow(2) * t(minus_one)? * t(s)?.powi(3) * t(s * w)?.powi(2) * t(-s * w)?.powi(6)
                / (t(-w)?.powi(4) * t(-s)?);
        let lhs = t(e2pi(wv + z))? * t(e2pi(wv - z))?
            / (theta(e2pi((wv + z) * 3.0), p3)? * theta(e2pi((wv - z) * 3.0), p3)?);
        let ps = psi(tau)?;
        let g = g_complex(x_of(z, tau)?, x_of(wv, tau)?, ps);
        let rhs = ct * e2pi(wv * -2.0) / (pm(s * w, wv)?.powi(2) * pm(s * w, z)?.powi(2)) / g;
        Ok(rel_residual(lhs, rhs))
    }));

    SuiteReport::new("theta", seed, checks)
}

fn rng_int(rng: &mut ChaCha8Rng) -> i64 {
    use rand::Rng;
    rng.gen_range(0..1000)
}

/// Brute force against the determinant formula for each `n`, tolerance
/// `1e-8`, plus invariance of the brute-force sum under permuting the
/// `lambda`s.
pub fn filali_suite(ns: &[usize], trials: usize, seed: u64) -> SuiteReport {
    const TOL: f64 = 1e-8;
    let mut checks = Vec::new();
    for &n in ns {
        let plan = BrutePlan::new(n);
        checks.push(run_trials(
            &format!("filali-n{n}"),
            trials,
            seed,
            TOL,
            |rng| {
                let params = ModelParams::random(n, rng);
                let brute = plan.partition_conditioned(&params)?;
                let det = partition_filali(n, &params)?;
                Ok(rel_residual(brute, det))
            },
        ));
        if n >= 2 {
            checks.push(run_trials(
                &format!("lambda-permutation-n{n}"),
                trials,
                seed,
                TOL,
                |rng| {
                    let params = ModelParams::random(n, rng);
                    let mut swapped = params.clone();
                    swapped.lambda.rotate_left(1);
                    Ok(rel_residual(
                        plan.partition_conditioned(&params)?,
                        plan.partition_conditioned(&swapped)?,
                    ))
                },
            ));
        }
    }
    SuiteReport::new("filali", seed, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        let report = identity_suite(30, 1);
        for c in &report.checks {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn deterministic_reports() {
        assert_eq!(filali_suite(&[1, 2], 5, 7), filali_suite(&[1, 2], 5, 7));
        assert!(filali_suite(&[1, 2], 5, 7).pass);
    }

    #[test]
    fn failing_trials_are_reported() {
        let r = run_trials("always-bad", 3, 0, 1e-10, |_| Ok(1.0));
        assert!(!r.pass);
        assert_eq!(r.max_rel_residual, Some(1.0));
        let r = run_trials("always-singular", 2, 0, 1e-10, |_| {
            Err(ThetaError::NearSingular("test"))
        });
        assert_eq!(r.max_rel_residual, None);
        assert!(!r.pass);
    }
}

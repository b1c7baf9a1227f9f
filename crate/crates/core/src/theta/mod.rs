//! Complex floating-point evaluation of theta functions, the face-model
//! weights, and both sides of the determinant formula for the partition
//! function.
//!
//! Branch convention: every power `q^x` is `exp(2 pi i eta x)` computed from
//! the exponent, and `p^(1/2)` is `exp(pi i tau)`. No logarithm of a computed
//! value is ever taken, so results are single-valued in the exponents.

mod identities;
mod partition;
mod specialize;

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use identities::{filali_suite, identity_suite, run_trials, CheckResult, SuiteReport};
pub use partition::{complex_det, partition_brute, partition_filali, BrutePlan, MAX_CANCELLATION};
pub use specialize::{
    determinant_side, free_mu_side, quarter_side, specialization_check, specialized_sides,
    SpecializedSides,
};

pub type C64 = Complex64;

/// Magnitude below which a denominator counts as singular.
pub const SINGULAR: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ThetaError {
    #[error("theta argument is zero")]
    ZeroArgument,
    #[error("nome has modulus {0} >= 1")]
    NomeOutsideDisk(f64),
    #[error("near-singular denominator in {0}")]
    NearSingular(&'static str),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("parameters are for n = {params} but n = {requested} was requested")]
    SizeMismatch { params: usize, requested: usize },
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `exp(2 pi i t)`.
pub fn e2pi(t: C64) -> C64 {
    (C64::i() * 2.0 * PI * t).exp()
}

/// `omega^k` with `omega = exp(2 pi i / 3)`.
pub fn omega_pow(k: i64) -> C64 {
    e2pi(c(k.rem_euclid(3) as f64 / 3.0, 0.0))
}

/// `prod_{j>=0} (1 - p^j x)(1 - p^(j+1)/x)`, truncated once
/// `|p|^J max(|x|, 1/|x|) < 1e-17`.
pub fn theta(x: C64, p: C64) -> Result<C64, ThetaError> {
    theta_terms(x, p, None)
}

/// As [`theta`] with an explicit number of factors, for truncation studies.
pub fn theta_truncated(x: C64, p: C64, factors: usize) -> Result<C64, ThetaError> {
    theta_terms(x, p, Some(factors))
}

fn theta_terms(x: C64, p: C64, factors: Option<usize>) -> Result<C64, ThetaError> {
    if x == C64::new(0.0, 0.0) {
        return Err(ThetaError::ZeroArgument);
    }
    let ap = p.norm();
    if ap >= 1.0 || !ap.is_finite() {
        return Err(ThetaError::NomeOutsideDisk(ap));
    }
    let spread = x.norm().max(1.0 / x.norm());
    let needed = if ap == 0.0 {
        1
    } else {
        let j = ((1e-17f64 / spread).ln() / ap.ln()).ceil();
        (j.max(1.0) as usize).min(100_000)
    };
    let count = factors.unwrap_or(needed);
    let inv = x.inv();
    let mut out = C64::new(1.0, 0.0);
    let mut pj = C64::new(1.0, 0.0);
    for _ in 0..count {
        out *= (C64::new(1.0, 0.0) - pj * x) * (C64::new(1.0, 0.0) - pj * p * inv);
        pj *= p;
    }
    if !out.is_finite() {
        return Err(ThetaError::NonFinite("theta"));
    }
    Ok(out)
}

/// Numeric parameters of the model. Spectral, dynamical and boundary
/// parameters are stored as exponents: the multiplicative variables are
/// `q^lambda`, `q^rho`, `q^zeta`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub tau: C64,
    pub eta: f64,
    pub lambda: Vec<C64>,
    pub mu: Vec<C64>,
    pub rho: C64,
    pub zeta: C64,
}

impl ModelParams {
    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn nome(&self) -> C64 {
        e2pi(self.tau)
    }

    /// `p^(1/2) = exp(pi i tau)`.
    pub fn sqrt_nome(&self) -> C64 {
        e2pi(self.tau / 2.0)
    }

    /// `q^x = exp(2 pi i eta x)`.
    pub fn q_pow(&self, x: C64) -> C64 {
        e2pi(x * self.eta)
    }

    pub fn theta(&self, x: C64) -> Result<C64, ThetaError> {
        theta(x, self.nome())
    }

    /// Generic draw: exponents with real part in `[-0.4, 0.4]` and imaginary
    /// part in `[0.1, 0.5]`, `|p|` in `[0.05, 0.3]`, real `eta` in
    /// `[0.15, 0.35]`.
    pub fn random(n: usize, rng: &mut ChaCha8Rng) -> ModelParams {
        let tau = random_tau(rng);
        let eta = rng.gen_range(0.15..0.35);
        ModelParams {
            tau,
            eta,
            lambda: (0..n).map(|_| random_exponent(rng)).collect(),
            mu: (0..n).map(|_| random_exponent(rng)).collect(),
            rho: random_exponent(rng),
            zeta: random_exponent(rng),
        }
    }

    /// `eta = -2/3`, all `lambda = 1`, `mu_j = 0` for `j < n`, and the given
    /// last `mu`; nome, `rho` and `zeta` drawn as in [`ModelParams::random`].
    pub fn specialized(n: usize, mu_last: C64, rng: &mut ChaCha8Rng) -> ModelParams {
        let tau = random_tau(rng);
        let mut mu = vec![c(0.0, 0.0); n];
        if n > 0 {
            mu[n - 1] = mu_last;
        }
        ModelParams {
            tau,
            eta: -2.0 / 3.0,
            lambda: vec![c(1.0, 0.0); n],
            mu,
            rho: random_exponent(rng),
            zeta: random_exponent(rng),
        }
    }
}

pub fn random_exponent(rng: &mut ChaCha8Rng) -> C64 {
    c(rng.gen_range(-0.4..0.4), rng.gen_range(0.1..0.5))
}

/// `tau` with `|p| = |exp(2 pi i tau)|` uniform in `[0.05, 0.3]`.
pub fn random_tau(rng: &mut ChaCha8Rng) -> C64 {
    let modulus: f64 = rng.gen_range(0.05..0.3);
    c(rng.gen_range(0.0..1.0), -modulus.ln() / (2.0 * PI))
}

/// `[x] = q^(-x/2) theta(q^x, p)`.
pub fn bracket(x: C64, params: &ModelParams) -> Result<C64, ThetaError> {
    Ok(params.q_pow(-x / 2.0) * params.theta(params.q_pow(x))?)
}

fn ratio(num: C64, den: C64, what: &'static str) -> Result<C64, ThetaError> {
    if den.norm() < SINGULAR {
        return Err(ThetaError::NearSingular(what));
    }
    Ok(num / den)
}

/// Vertex weight `w(lambda, q^z)` where `z` is the full exponent
/// `rho + height`.
pub fn vertex_weight(
    kind: crate::lattice::VertexKind,
    lambda: C64,
    z: C64,
    params: &ModelParams,
) -> Result<C64, ThetaError> {
    use crate::lattice::VertexKind::*;
    let one = c(1.0, 0.0);
    let b = |x: C64| bracket(x, params);
    match kind {
        APlus | AMinus => ratio(b(lambda + one)?, b(one)?, "a weight"),
        BPlus => ratio(b(lambda)? * b(z - one)?, b(z)? * b(one)?, "b+ weight"),
        BMinus => ratio(b(lambda)? * b(z + one)?, b(z)? * b(one)?, "b- weight"),
        CPlus => ratio(b(z + lambda)?, b(z)?, "c+ weight"),
        CMinus => ratio(b(z - lambda)?, b(z)?, "c- weight"),
    }
}

/// Turn weight `k(lambda, q^z, q^zeta)`; `z` is the full exponent
/// `rho + height`, with the height taken outside the turn.
pub fn turn_weight(
    kind: crate::lattice::TurnKind,
    lambda: C64,
    z: C64,
    params: &ModelParams,
) -> Result<C64, ThetaError> {
    use crate::lattice::TurnKind::*;
    let zeta = params.zeta;
    let b = |x: C64| bracket(x, params);
    match kind {
        Positive => ratio(b(z + zeta - lambda)?, b(z + zeta + lambda)?, "k+ weight"),
        Negative => ratio(b(zeta - lambda)?, b(zeta + lambda)?, "k- weight"),
    }
}

/// `psi(tau) = omega^2 theta(-1) theta(-p^(1/2) omega) / (theta(-p^(1/2)) theta(-omega))`.
pub fn psi(tau: C64) -> Result<C64, ThetaError> {
    let p = e2pi(tau);
    let s = e2pi(tau / 2.0);
    let w = omega_pow(1);
    let t = |x| theta(x, p);
    ratio(
        omega_pow(2) * t(c(-1.0, 0.0))? * t(-s * w)?,
        t(-s)? * t(-w)?,
        "psi",
    )
}

/// `x(z) = theta(-p^(1/2) omega)^2 theta(omega e^(+-2 pi i z)) /
/// (theta(-omega)^2 theta(p^(1/2) omega e^(+-2 pi i z)))`.
pub fn x_of(z: C64, tau: C64) -> Result<C64, ThetaError> {
    let p = e2pi(tau);
    let s = e2pi(tau / 2.0);
    let w = omega_pow(1);
    let t = |x| theta(x, p);
    let (e, ei) = (e2pi(z), e2pi(-z));
    ratio(
        t(-s * w)?.powi(2) * t(w * e)? * t(w * ei)?,
        t(-w)?.powi(2) * t(s * w * e)? * t(s * w * ei)?,
        "x(z)",
    )
}

/// Complex counterpart of the exact `G(x, y)` with numeric `psi`.
pub fn g_complex(x: C64, y: C64, psi: C64) -> C64 {
    (psi + 2.0) * x * y * (x + y) + psi * (psi * 2.0 + 1.0) * (x + y)
        - (psi * psi + psi * 3.0 + 1.0) * x * y * 2.0
        - psi * (x * x + y * y)
}

/// `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn rel_residual(a: C64, b: C64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

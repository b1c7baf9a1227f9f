//! `p_{n-1}(z)` from three-color counts.
//!
//! Each variant fixes one color `c`, sums the marginal counts `N_{m,l}(k_c)`
//! over rows `l = n (mod 3)` with the signed weights
//! `(-1)^(n+l) (z(z-1))^e1 / (z+1)^e2`, and equals a binomial multiple of
//! `p_{n-1}(z)`. Individual terms may have poles at `z in {-1, 0, 1}`; only
//! the reduced sum has to be a polynomial.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{binomial, format_rational, int, Poly, RatFun, Rational};
use crate::lattice::{count_table, CountTable, LatticeError};
use crate::tpoly::{pn_via_t, TPolyError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PnError {
    #[error("p_(n-1) is undefined for n = 0")]
    EmptyLattice,
    #[error("table is for n = {table} but n = {requested} was requested")]
    TableMismatch { table: usize, requested: usize },
    #[error("variant {variant}, m = {m}, l = {l}, k = {k}: exponent numerator {numerator} is not divisible by 3")]
    Integrality {
        variant: Variant,
        m: usize,
        l: i64,
        k: usize,
        numerator: i64,
    },
    #[error(
        "variant {variant}, m = {m}: sum divided by its binomial is not a polynomial: {value}"
    )]
    NotPolynomial {
        variant: Variant,
        m: usize,
        value: String,
    },
    #[error("variant {variant}, m = {m}: binomial is zero but the sum is {value}")]
    ZeroBinomialNonzeroSum {
        variant: Variant,
        m: usize,
        value: String,
    },
    #[error("divergence: {0}")]
    Divergence(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    TPoly(#[from] TPolyError),
}

/// Which color the count formula is organized by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    /// Color 0, coefficient `C(n-1, m-1)`, rows `l` and `l-1`.
    A,
    /// Color 1, coefficient `C(n, m)`, rows `l` and `l+1`.
    B,
    /// Color 2, coefficient `C(n-1, m)`, rows `l+1` and `l+2`.
    C,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::A, Variant::B, Variant::C];

    pub fn color(self) -> usize {
        match self {
            Variant::A => 0,
            Variant::B => 1,
            Variant::C => 2,
        }
    }

    pub fn binomial(self, n: usize, m: usize) -> BigInt {
        let (n, m) = (n as i64, m as i64);
        match self {
            Variant::A => binomial(n - 1, m - 1),
            Variant::B => binomial(n, m),
            Variant::C => binomial(n - 1, m),
        }
    }

    /// Row offsets whose counts are added for summation index `l`.
    pub fn row_offsets(self) -> [i64; 2] {
        match self {
            Variant::A => [0, -1],
            Variant::B => [0, 1],
            Variant::C => [1, 2],
        }
    }

    /// The additive constant: `c` for variant A, `d` for B and C.
    pub fn constant(self, n: usize) -> i64 {
        let low = n % 3 != 2;
        match (self, low) {
            (Variant::A, true) => 3,
            (Variant::A, false) => 1,
            (_, true) => 0,
            (_, false) => 1,
        }
    }

    /// Numerators (before division by 3) of the exponents of `z(z-1)` and
    /// of `z+1` in the denominator.
    pub fn exponent_numerators(self, n: usize, m: usize, l: i64, k: usize) -> (i64, i64) {
        let (n, m, k) = (n as i64, m as i64, k as i64);
        let c = self.constant(n as usize);
        match self {
            Variant::A => (
                3 * k - n * n - 6 * n + l - c,
                6 * k - 5 * n * n - 9 * n + 2 * l - 2 * c,
            ),
            Variant::B => (
                3 * k - n * n - 6 * n + 3 * m + l - c,
                6 * k - 5 * n * n - 9 * n + 6 * m + 2 * l - 2 * c,
            ),
            Variant::C => (
                3 * k - n * n - 3 * n - 3 * m + l - c,
                6 * k - 5 * n * n - 3 * n - 6 * m + 2 * l - 2 * c,
            ),
        }
    }
}

/// Summation rows: every `l = n (mod 3)` in `[-2, 2n+2]`, so that each
/// referenced row `l-1 ..= l+2` covering `[1, 2n]` is reached.
fn summation_rows(n: usize) -> impl Iterator<Item = i64> {
    let n = n as i64;
    (-2..=2 * n + 2).filter(move |l| (l - n).rem_euclid(3) == 0)
}

/// Raw signed sum of one variant for a fixed `m`, before dividing by the
/// binomial coefficient.
pub fn pn_from_counts(
    table: &CountTable,
    n: usize,
    m: usize,
    variant: Variant,
) -> Result<RatFun, PnError> {
    if table.n() != n {
        return Err(PnError::TableMismatch {
            table: table.n(),
            requested: n,
        });
    }
    if n == 0 {
        return Err(PnError::EmptyLattice);
    }
    let marginal = table.marginal(variant.color());
    pn_from_marginal(&marginal, n, m, variant)
}

fn pn_from_marginal(
    marginal: &HashMap<(usize, usize, usize), u64>,
    n: usize,
    m: usize,
    variant: Variant,
) -> Result<RatFun, PnError> {
    let count = |l: i64, k: usize| -> u64 {
        if l < 1 {
            return 0;
        }
        marginal.get(&(m, l as usize, k)).copied().unwrap_or(0)
    };
    let ks: BTreeSet<usize> = marginal
        .keys()
        .filter(|(mm, _, _)| *mm == m)
        .map(|&(_, _, k)| k)
        .collect();
    let z_zm1 = Poly::from_ints(&[0, -1, 1]);
    let z_p1 = Poly::linear(1, 1);
    let [o1, o2] = variant.row_offsets();
    let mut terms = Vec::new();
    for l in summation_rows(n) {
        for &k in &ks {
            let c = count(l + o1, k) + count(l + o2, k);
            if c == 0 {
                continue;
            }
            let (e1, e2) = variant.exponent_numerators(n, m, l, k);
            if e1 % 3 != 0 || e2 % 3 != 0 {
                return Err(PnError::Integrality {
                    variant,
                    m,
                    l,
                    k,
                    numerator: if e1 % 3 != 0 { e1 } else { e2 },
                });
            }
            let sign = if (n as i64 + l).rem_euclid(2) == 0 {
                1
            } else {
                -1
            };
            let coeff = int(sign * c as i64);
            let num = RatFun::poly_pow(&z_zm1, e1 / 3).expect("nonzero base");
            let den = RatFun::poly_pow(&z_p1, -e2 / 3).expect("nonzero base");
            terms.push((&num * &den).scale(&coeff));
        }
    }
    Ok(crate::algebra::ratfun_sum(&terms))
}

/// One `(variant, m)` pair that was evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantCheck {
    pub variant: Variant,
    pub m: usize,
    pub binomial: String,
}

/// Result of cross-checking every count formula against the `T` route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PnReport {
    pub n: usize,
    pub poly: Poly,
    pub variants_checked: Vec<VariantCheck>,
    /// `(variant, m)` pairs with zero binomial whose raw sums were exactly zero.
    pub zero_sums_checked: Vec<VariantCheck>,
    pub symmetry_ok: bool,
    pub negative_coeffs: Vec<(usize, Rational)>,
}

#[derive(Serialize)]
struct PnJson<'a> {
    n: usize,
    degree: Option<usize>,
    coeffs: Vec<String>,
    variants_checked: &'a [VariantCheck],
    symmetry_ok: bool,
    negative_coeffs: Vec<(usize, String)>,
}

impl PnReport {
    /// `{n, degree, coeffs[], variants_checked, symmetry_ok, negative_coeffs[]}`.
    pub fn to_json(&self) -> String {
        let out = PnJson {
            n: self.n,
            degree: self.poly.degree(),
            coeffs: self.poly.coeffs().iter().map(format_rational).collect(),
            variants_checked: &self.variants_checked,
            symmetry_ok: self.symmetry_ok,
            negative_coeffs: self
                .negative_coeffs
                .iter()
                .map(|(i, c)| (*i, format_rational(c)))
                .collect(),
        };
        serde_json::to_string(&out).expect("report serializes")
    }

    pub fn all_ok(&self) -> bool {
        self.symmetry_ok && self.negative_coeffs.is_empty()
    }
}

/// Every count formula, divided by its binomial, must give the same
/// polynomial, and that polynomial must match the `T` route.
pub fn pn_consistent(n: usize) -> Result<PnReport, PnError> {
    if n == 0 {
        return Err(PnError::EmptyLattice);
    }
    let table = count_table(n)?;
    pn_consistent_with(&table)
}

/// As [`pn_consistent`] with a precomputed table.
pub fn pn_consistent_with(table: &CountTable) -> Result<PnReport, PnError> {
    let n = table.n();
    if n == 0 {
        return Err(PnError::EmptyLattice);
    }
    let reference = pn_via_t(n)?;
    let mut checked = Vec::new();
    let mut zero_sums = Vec::new();
    for variant in Variant::ALL {
        let marginal = table.marginal(variant.color());
        for m in 0..=n {
            let raw = pn_from_marginal(&marginal, n, m, variant)?;
            let b = variant.binomial(n, m);
            let check = VariantCheck {
                variant,
                m,
                binomial: b.to_string(),
            };
            if b.is_zero() {
                if !raw.is_zero() {
                    return Err(PnError::ZeroBinomialNonzeroSum {
                        variant,
                        m,
                        value: raw.to_string(),
                    });
                }
                zero_sums.push(check);
                continue;
            }
            let scaled = raw.scale(&Rational::from_integer(b).recip());
            let p = scaled
                .as_poly()
                .cloned()
                .ok_or_else(|| PnError::NotPolynomial {
                    variant,
                    m,
                    value: scaled.to_string(),
                })?;
            if p != reference {
                return Err(PnError::Divergence(describe_divergence(
                    &format!("variant {variant}, m = {m}"),
                    &p,
                    &reference,
                )));
            }
            checked.push(check);
        }
    }
    Ok(PnReport {
        n,
        symmetry_ok: symmetry_check(&reference, n),
        negative_coeffs: positivity_report(&reference),
        poly: reference,
        variants_checked: checked,
        zero_sums_checked: zero_sums,
    })
}

fn describe_divergence(what: &str, got: &Poly, reference: &Poly) -> String {
    let len = got.coeffs().len().max(reference.coeffs().len());
    let diffs: Vec<String> = (0..len)
        .filter(|&k| got.coeff(k) != reference.coeff(k))
        .map(|k| {
            format!(
                "z^{k}: {} vs {}",
                format_rational(&got.coeff(k)),
                format_rational(&reference.coeff(k))
            )
        })
        .collect();
    format!("{what} differs from the T route at {}", diffs.join(", "))
}

/// Whether `p` satisfies `p(z) = ((1+3z)/2)^D p((1-z)/(1+3z))` with
/// `D = (n-1)n`, compared as polynomials after clearing denominators.
pub fn symmetry_check(p: &Poly, n: usize) -> bool {
    let d = n.saturating_sub(1) * n;
    if p.degree().is_some_and(|deg| deg > d) {
        return false;
    }
    let one_minus_z = Poly::linear(1, -1);
    let one_plus_3z = Poly::linear(1, 3);
    let mut rhs = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let term = &one_minus_z.pow(k as u32) * &one_plus_3z.pow((d - k) as u32);
        rhs = &rhs + &term.scale(c);
    }
    let lhs = p.scale(&num_traits::pow(int(2), d));
    lhs == rhs
}

/// Indices and values of negative coefficients.
pub fn positivity_report(p: &Poly) -> Vec<(usize, Rational)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_negative())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::{AlgebraError, Poly, Rational};

/// Reduced quotient of two polynomials: `gcd(num, den) = 1`, `den` monic.
/// Zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().expect("nonzero denominator").clone();
        let inv = lead.recip();
        Ok(RatFun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this reduces to, if the denominator is constant.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn scale(&self, factor: &Rational) -> RatFun {
        if factor.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(factor),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RatFun, AlgebraError> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// `base^exp` for a polynomial base and any integer exponent.
    pub fn poly_pow(base: &Poly, exp: i64) -> Result<RatFun, AlgebraError> {
        let p = base.pow(exp.unsigned_abs() as u32);
        if exp >= 0 {
            RatFun::new(p, Poly::one())
        } else {
            RatFun::new(Poly::one(), p)
        }
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_zero() || self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Exact sum of a sequence of rational functions; the empty sum is zero.
pub fn ratfun_sum<'a, I>(terms: I) -> RatFun
where
    I: IntoIterator<Item = &'a RatFun>,
{
    terms.into_iter().fold(RatFun::zero(), |acc, t| &acc + t)
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{LaurentV, Rational};
use crate::error::{Error, Result};

/// Element of `Q(v)` kept in canonical form.
///
/// `num / den` with `gcd(num, den) = 1`, `den` monic with lowest exponent zero.
/// Canonical form makes equality structural; Laurent polynomials have `den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatV {
    num: LaurentV,
    den: LaurentV,
}

impl Default for RatV {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatV {
    pub fn zero() -> Self {
        Self {
            num: LaurentV::zero(),
            den: LaurentV::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentV::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentV::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentV::constant(c))
    }

    pub fn from_laurent(num: LaurentV) -> Self {
        Self {
            num,
            den: LaurentV::one(),
        }
    }

    pub fn v_pow(k: i64) -> Self {
        Self::from_laurent(LaurentV::v_pow(k))
    }

    /// `v - v^{-1}`.
    pub fn v_minus_v_inv() -> Self {
        Self::from_laurent(LaurentV::v_minus_v_inv())
    }

    pub fn new(num: LaurentV, den: LaurentV) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentV, den: LaurentV) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_unit() {
            let (e, c) = den.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
            let inv = Rational::one() / c;
            return Self::from_laurent(num.scale(&inv).shift(-e));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lo = den.min_exp().unwrap();
        let lead = den.leading_coeff().unwrap().clone();
        let inv = Rational::one() / lead;
        Self {
            num: num.shift(-lo).scale(&inv),
            den: den.shift(-lo).scale(&inv),
        }
    }

    /// Re-run canonicalization; idempotent on canonical values.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn num(&self) -> &LaurentV {
        &self.num
    }

    pub fn den(&self) -> &LaurentV {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True iff the value lies in `Q[v, v^{-1}]`.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentV> {
        self.is_laurent_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    pub fn div_checked(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }
}

impl From<LaurentV> for RatV {
    fn from(l: LaurentV) -> Self {
        Self::from_laurent(l)
    }
}

impl Add for &RatV {
    type Output = RatV;
    fn add(self, rhs: &RatV) -> RatV {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatV::from_laurent(num);
            }
            return RatV::canonical(num, self.den.clone());
        }
        RatV::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Add for RatV {
    type Output = RatV;
    fn add(self, rhs: RatV) -> RatV {
        &self + &rhs
    }
}

impl AddAssign<&RatV> for RatV {
    fn add_assign(&mut self, rhs: &RatV) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&RatV> for RatV {
    fn sub_assign(&mut self, rhs: &RatV) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
        } else {
            *self = &*self - rhs;
        }
    }
}

impl Sub for &RatV {
    type Output = RatV;
    fn sub(self, rhs: &RatV) -> RatV {
        self + &(-rhs)
    }
}

impl Sub for RatV {
    type Output = RatV;
    fn sub(self, rhs: RatV) -> RatV {
        &self - &rhs
    }
}

impl Neg for &RatV {
    type Output = RatV;
    fn neg(self) -> RatV {
        RatV {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatV {
    type Output = RatV;
    fn neg(self) -> RatV {
        -&self
    }
}

impl Mul for &RatV {
    type Output = RatV;
    fn mul(self, rhs: &RatV) -> RatV {
        if self.den.is_one() && rhs.den.is_one() {
            return RatV::from_laurent(&self.num * &rhs.num);
        }
        RatV::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RatV {
    type Output = RatV;
    fn mul(self, rhs: RatV) -> RatV {
        &self * &rhs
    }
}

/// Panics on division by zero; use [`RatV::div_checked`] for a fallible form.
impl Div for &RatV {
    type Output = RatV;
    fn div(self, rhs: &RatV) -> RatV {
        self.div_checked(rhs).expect("division by zero in Q(v)")
    }
}

impl fmt::Display for RatV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatV({self})")
    }
}

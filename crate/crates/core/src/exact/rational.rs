//! Signed rationals kept in canonical form.
//!
//! A [`BigRational`] always has a positive denominator and coprime
//! numerator/denominator, with zero stored as `0/1`. The canonical form is
//! enforced at construction so that `==` is plain structural comparison.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ArithError;

/// Exact signed rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigRational(Ratio<BigInt>);

impl BigRational {
    /// Builds `num/den` in canonical form. Fails when `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, ArithError> {
        let den = den.into();
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self(Ratio::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(Ratio::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(Ratio::zero())
    }

    pub fn one() -> Self {
        Self(Ratio::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always strictly positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Exact quotient `self / rhs`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    /// Integer power. Negative exponents require a non-zero base.
    pub fn pow(&self, exp: i64) -> Result<Self, ArithError> {
        let magnitude = u32::try_from(exp.unsigned_abs()).map_err(|_| ArithError::ExponentTooLarge(exp))?;
        let numer = self.0.numer().pow(magnitude);
        let denom = self.0.denom().pow(magnitude);
        if exp >= 0 {
            Ok(Self(Ratio::new_raw(numer, denom)))
        } else {
            Self::new(denom, numer)
        }
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// True when the stored pair is reduced with a positive denominator.
    /// Always holds for values produced by this type; exposed for tests.
    pub fn is_canonical(&self) -> bool {
        let (n, d) = (self.0.numer(), self.0.denom());
        d.is_positive() && n.gcd(d).is_one()
    }
}

impl Default for BigRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<BigInt> for BigRational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<i64> for BigRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

/// Always renders as `num/den`, including integers (`3/1`).
impl fmt::Display for BigRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for BigRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BigRational {
    type Err = ArithError;

    /// Accepts `p/q` or a bare integer `p`. The result is reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_owned());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                Self::new(n, d)
            }
            None => Ok(Self::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for BigRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BigRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&BigRational> for &BigRational {
            type Output = BigRational;
            fn $method(self, rhs: &BigRational) -> BigRational {
                BigRational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<BigRational> for BigRational {
            type Output = BigRational;
            fn $method(self, rhs: BigRational) -> BigRational {
                BigRational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&BigRational> for BigRational {
            type Output = BigRational;
            fn $method(self, rhs: &BigRational) -> BigRational {
                BigRational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<BigRational> for &BigRational {
            type Output = BigRational;
            fn $method(self, rhs: BigRational) -> BigRational {
                BigRational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&BigRational> for BigRational {
    fn add_assign(&mut self, rhs: &BigRational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for BigRational {
    fn add_assign(&mut self, rhs: BigRational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&BigRational> for BigRational {
    fn sub_assign(&mut self, rhs: &BigRational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&BigRational> for BigRational {
    fn mul_assign(&mut self, rhs: &BigRational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for BigRational {
    type Output = BigRational;
    fn neg(self) -> BigRational {
        BigRational(-self.0)
    }
}

impl Neg for &BigRational {
    type Output = BigRational;
    fn neg(self) -> BigRational {
        BigRational(-&self.0)
    }
}

impl Sum for BigRational {
    fn sum<I: Iterator<Item = BigRational>>(iter: I) -> Self {
        let mut acc = RationalSum::new();
        for x in iter {
            acc.add(&x);
        }
        acc.finish()
    }
}

/// Accumulates many rationals over a running common denominator and reduces
/// once at the end. Produces the same value as repeated `+`, without a gcd
/// per term.
#[derive(Clone, Debug)]
pub struct RationalSum {
    num: BigInt,
    den: BigInt,
}

impl RationalSum {
    pub fn new() -> Self {
        Self { num: BigInt::zero(), den: BigInt::one() }
    }

    /// Adds `num/den`. Panics if `den` is zero.
    pub fn add_frac(&mut self, num: BigInt, den: &BigInt) {
        assert!(!den.is_zero(), "zero denominator in rational sum");
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den.clone()) };
        if den.is_one() {
            self.num += num * &self.den;
            return;
        }
        let (q, r) = self.den.div_rem(&den);
        if r.is_zero() {
            self.num += num * q;
            return;
        }
        let g = self.den.gcd(&den);
        let scale_self = &den / &g;
        let scale_term = &self.den / &g;
        self.num = &self.num * &scale_self + num * scale_term;
        self.den *= scale_self;
    }

    pub fn add_integer(&mut self, n: BigInt) {
        self.num += n * &self.den;
    }

    pub fn add(&mut self, x: &BigRational) {
        self.add_frac(x.numer().clone(), x.denom());
    }

    pub fn finish(self) -> BigRational {
        BigRational(Ratio::new(self.num, self.den))
    }
}

impl Default for RationalSum {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n, d).unwrap()
    }

    #[test]
    fn small_denominator_arithmetic() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(1, 2) - q(1, 3), q(1, 6));
        assert_eq!(q(2, 3) * q(3, 4), q(1, 2));
        assert_eq!(q(1, 6).checked_div(&q(1, 2)).unwrap(), q(1, 3));
    }

    #[test]
    fn additive_identity() {
        for x in [q(0, 1), q(-7, 3), q(22, 7)] {
            assert_eq!(&x + &BigRational::zero(), x);
        }
    }

    #[test]
    fn canonical_on_construction() {
        let x = q(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let z = q(0, -5);
        assert_eq!(z.denom(), &BigInt::from(1));
        assert!(z.is_canonical());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(BigRational::new(1, 0), Err(ArithError::DivisionByZero));
        assert_eq!(q(1, 2).checked_div(&BigRational::zero()), Err(ArithError::DivisionByZero));
        assert_eq!(BigRational::zero().recip(), Err(ArithError::DivisionByZero));
        assert_eq!(BigRational::zero().pow(-1), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn powers() {
        assert_eq!(q(-2, 3).pow(3).unwrap(), q(-8, 27));
        assert_eq!(q(-2, 3).pow(-2).unwrap(), q(9, 4));
        assert_eq!(q(5, 7).pow(0).unwrap(), BigRational::one());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(q(3, 1).to_string(), "3/1");
        assert_eq!(q(-1, 2).to_string(), "-1/2");
        assert_eq!("4/-6".parse::<BigRational>().unwrap(), q(-2, 3));
        assert_eq!("17".parse::<BigRational>().unwrap(), q(17, 1));
        assert!("1/0".parse::<BigRational>().is_err());
        assert!("x/2".parse::<BigRational>().is_err());
    }

    #[test]
    fn running_sum_matches_pairwise_addition() {
        let terms = [q(1, 2), q(-1, 3), q(5, 12), q(7, 1), q(-11, 30), q(1, 7)];
        let mut acc = RationalSum::new();
        let mut plain = BigRational::zero();
        for t in &terms {
            acc.add(t);
            plain += t;
        }
        assert_eq!(acc.finish(), plain);
    }

    #[test]
    fn running_sum_negative_denominator() {
        let mut acc = RationalSum::new();
        acc.add_frac(BigInt::from(1), &BigInt::from(-3));
        acc.add_integer(BigInt::from(1));
        assert_eq!(acc.finish(), q(2, 3));
    }
}

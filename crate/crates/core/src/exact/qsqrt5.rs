//! Elements `a + b√5` of the quadratic field Q(√5) with rational `a`, `b`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{ArithError, BigRational};

/// `a + b√5`. Both parts are canonical rationals, so the pair is unique and
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    a: BigRational,
    b: BigRational,
}

impl QSqrt5 {
    pub fn new(rational: BigRational, surd: BigRational) -> Self {
        Self { a: rational, b: surd }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero() }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    /// The element `0 + 1·√5`.
    pub fn sqrt5() -> Self {
        Self { a: BigRational::zero(), b: BigRational::one() }
    }

    /// Golden ratio `(1 + √5)/2`.
    pub fn alpha() -> Self {
        let half = BigRational::new(1, 2).expect("non-zero denominator");
        Self { a: half.clone(), b: half }
    }

    /// Conjugate of the golden ratio, `(1 − √5)/2 = −1/α`.
    pub fn beta() -> Self {
        let half = BigRational::new(1, 2).expect("non-zero denominator");
        Self { a: half.clone(), b: -half }
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of √5.
    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The element as a rational, if its √5 coefficient vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a² − 5b²`, i.e. `x · conj(x)`.
    pub fn norm(&self) -> BigRational {
        let five = BigRational::from_integer(5);
        &self.a * &self.a - five * &self.b * &self.b
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { a: &self.a * c, b: &self.b * c }
    }

    /// `conj(x) / norm(x)`. The norm vanishes only at zero because √5 is
    /// irrational.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(ArithError::NotInvertible);
        }
        let inv_norm = norm.recip()?;
        Ok(self.conj().scale(&inv_norm))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Square-and-multiply power for any signed exponent.
    pub fn pow(&self, exp: i64) -> Result<Self, ArithError> {
        let mut base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})√5", self.a, self.b)
    }
}

impl fmt::Debug for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<BigRational> for QSqrt5 {
    fn from(a: BigRational) -> Self {
        Self::from_rational(a)
    }
}

impl Add<&QSqrt5> for &QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: &QSqrt5) -> QSqrt5 {
        QSqrt5 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub<&QSqrt5> for &QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: &QSqrt5) -> QSqrt5 {
        QSqrt5 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

// (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
impl Mul<&QSqrt5> for &QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: &QSqrt5) -> QSqrt5 {
        let five = BigRational::from_integer(5);
        let a = &self.a * &rhs.a + five * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QSqrt5 { a, b }
    }
}

impl Add for QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: QSqrt5) -> QSqrt5 {
        &self + &rhs
    }
}

impl Sub for QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: QSqrt5) -> QSqrt5 {
        &self - &rhs
    }
}

impl Mul for QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: QSqrt5) -> QSqrt5 {
        &self * &rhs
    }
}

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5 { a: -self.a, b: -self.b }
    }
}

impl Neg for &QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5 { a: -&self.a, b: -&self.b }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n, d).unwrap()
    }

    fn el(a: (i64, i64), b: (i64, i64)) -> QSqrt5 {
        QSqrt5::new(q(a.0, a.1), q(b.0, b.1))
    }

    #[test]
    fn golden_ratio_powers() {
        let alpha = QSqrt5::alpha();
        assert_eq!(alpha.pow(1).unwrap(), el((1, 2), (1, 2)));
        assert_eq!(alpha.pow(0).unwrap(), QSqrt5::one());
        // α·α = (1/4 + 5/4) + (1/4 + 1/4)√5
        assert_eq!(alpha.pow(2).unwrap(), el((3, 2), (1, 2)));
    }

    #[test]
    fn alpha_beta_relations() {
        let (alpha, beta) = (QSqrt5::alpha(), QSqrt5::beta());
        assert_eq!(&alpha + &beta, QSqrt5::one());
        assert_eq!(&alpha * &beta, QSqrt5::from_integer(-1));
        assert_eq!(&alpha - &beta, QSqrt5::sqrt5());
        assert_eq!(alpha.inverse().unwrap(), -&beta);
    }

    #[test]
    fn negative_power_of_zero_fails() {
        assert_eq!(QSqrt5::zero().pow(-1), Err(ArithError::NotInvertible));
        assert_eq!(QSqrt5::zero().pow(0).unwrap(), QSqrt5::one());
        assert_eq!(QSqrt5::zero().pow(3).unwrap(), QSqrt5::zero());
    }

    #[test]
    fn norm_kills_surd_part() {
        let x = el((3, 4), (-2, 5));
        let prod = &x * &x.conj();
        assert!(prod.surd_part().is_zero());
        assert_eq!(prod.rational_part(), &x.norm());
    }

    #[test]
    fn inverse_round_trip() {
        let x = el((-7, 3), (5, 11));
        assert_eq!(&x * &x.inverse().unwrap(), QSqrt5::one());
        assert_eq!(x.pow(-3).unwrap(), x.pow(3).unwrap().inverse().unwrap());
    }
}

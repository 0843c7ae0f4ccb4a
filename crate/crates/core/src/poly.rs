//! Dense univariate polynomials over [`BigRational`], and the exact
//! polynomial identities in `x` that the Fibonacci sums are built from.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

use crate::exact::{sign_of_parity, BigRational};
use crate::sequences::binomial;

/// Coefficient `i` belongs to `x^i`. Trailing zeros are always stripped, so
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(BigRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `c · x^degree`.
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
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
        acc
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Largest `n` accepted by [`check_dattoli`].
pub const DATTOLI_MAX_N: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("n = {0} exceeds the supported bound {DATTOLI_MAX_N}")]
    DegreeOutOfRange(u32),
    #[error("unknown polynomial identity {0:?} (expected dat1, dat2, dat3 or rel4)")]
    UnknownIdentity(String),
}

/// The four polynomial identities in `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dattoli {
    /// `Σ C(n,k)(−1)^k x^{k+1}(1+x)^{n−k}/(k+1) = ((1+x)^{n+1} − 1)/(n+1)`
    Dat1,
    /// `Σ C(n,k)(−1)^k x^{k+2}(1+x)^{n−k}/(k+2) = ((1+x)^{n+2} − (n+2)x − 1)/((n+1)(n+2))`
    Dat2,
    /// `Σ C(n,k)(−1)^k x^{k+2}(1+x)^{n−k}/((k+1)(k+2))
    ///   = ((n+1)x(1+x)^{n+1} − (1+x)^{n+1} + 1)/((n+1)(n+2))`
    Dat3,
    /// `Σ C(n,k)(−1)^k x^k(1+x)^{n−k}/(k+2) = Σ C(n,k) x^k/((k+1)(k+2))`
    Rel4,
}

impl Dattoli {
    pub const ALL: [Dattoli; 4] = [Dattoli::Dat1, Dattoli::Dat2, Dattoli::Dat3, Dattoli::Rel4];

    pub fn name(self) -> &'static str {
        match self {
            Dattoli::Dat1 => "dat1",
            Dattoli::Dat2 => "dat2",
            Dattoli::Dat3 => "dat3",
            Dattoli::Rel4 => "rel4",
        }
    }
}

impl fmt::Display for Dattoli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dattoli {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, PolyError> {
        Dattoli::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| PolyError::UnknownIdentity(s.to_owned()))
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num, den).expect("positive denominator")
}

fn weight(n: u32, k: u32, den: i64) -> BigRational {
    BigRational::from_integer(binomial(n.into(), k.into()) * sign_of_parity(k.into())) * ratio(1, den)
}

/// Both sides of the chosen identity as polynomials in `x`, each assembled
/// term by term.
pub fn dattoli_sides(which: Dattoli, n: u32) -> Result<(Poly, Poly), PolyError> {
    if n > DATTOLI_MAX_N {
        return Err(PolyError::DegreeOutOfRange(n));
    }
    let one_plus_x = Poly::from_integers(&[1, 1]);
    let powers: Vec<Poly> = std::iter::successors(Some(Poly::one()), |p| Some(p * &one_plus_x))
        .take(n as usize + 3)
        .collect();
    let big_n = i64::from(n);
    let x = Poly::x();
    let one = Poly::one();

    let sum = |term: &dyn Fn(u32) -> Poly| (0..=n).fold(Poly::zero(), |acc, k| &acc + &term(k));
    let shifted = |k: u32, shift: u32, den: i64| {
        let c = weight(n, k, den);
        &Poly::monomial(c, (k + shift) as usize) * &powers[(n - k) as usize]
    };

    let sides = match which {
        Dattoli::Dat1 => {
            let lhs = sum(&|k| shifted(k, 1, i64::from(k) + 1));
            let rhs = (&one_plus_x.pow(n + 1) - &one).scale(&ratio(1, big_n + 1));
            (lhs, rhs)
        }
        Dattoli::Dat2 => {
            let lhs = sum(&|k| shifted(k, 2, i64::from(k) + 2));
            let linear = x.scale(&BigRational::from_integer(big_n + 2));
            let rhs = (&(&one_plus_x.pow(n + 2) - &linear) - &one).scale(&ratio(1, (big_n + 1) * (big_n + 2)));
            (lhs, rhs)
        }
        Dattoli::Dat3 => {
            let lhs = sum(&|k| shifted(k, 2, (i64::from(k) + 1) * (i64::from(k) + 2)));
            let p = one_plus_x.pow(n + 1);
            let first = (&x * &p).scale(&BigRational::from_integer(big_n + 1));
            let rhs = (&(&first - &p) + &one).scale(&ratio(1, (big_n + 1) * (big_n + 2)));
            (lhs, rhs)
        }
        Dattoli::Rel4 => {
            let lhs = sum(&|k| shifted(k, 0, i64::from(k) + 2));
            let rhs = sum(&|k| {
                let den = (i64::from(k) + 1) * (i64::from(k) + 2);
                let c = BigRational::from_integer(binomial(n.into(), k.into())) * ratio(1, den);
                Poly::monomial(c, k as usize)
            });
            (lhs, rhs)
        }
    };
    Ok(sides)
}

/// True iff both sides are the same polynomial.
pub fn check_dattoli(which: Dattoli, n: u32) -> Result<bool, PolyError> {
    let (lhs, rhs) = dattoli_sides(which, n)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n, d).unwrap()
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = Poly::new(vec![q(1, 1), q(0, 1), q(0, 3)]);
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(Poly::new(vec![q(0, 1)]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(&Poly::x() - &Poly::x(), Poly::zero());
    }

    #[test]
    fn basic_arithmetic() {
        let p = Poly::from_integers(&[1, 1]);
        assert_eq!(&p * &p, Poly::from_integers(&[1, 2, 1]));
        assert_eq!(&p + &Poly::zero(), p);
        assert_eq!(p.scale(&q(1, 2)), Poly::new(vec![q(1, 2), q(1, 2)]));
        assert_eq!(p.scale(&q(0, 1)), Poly::zero());
        assert_eq!(&p * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn powers() {
        let p = Poly::from_integers(&[1, 1]);
        assert_eq!(p.pow(2), Poly::from_integers(&[1, 2, 1]));
        assert_eq!(Poly::x().pow(3), Poly::from_integers(&[0, 0, 0, 1]));
        assert_eq!(p.pow(0), Poly::one());
        assert_eq!(p.pow(5).degree(), Some(5));
    }

    #[test]
    fn evaluation() {
        let p = Poly::from_integers(&[1, -3, 2]);
        assert_eq!(p.eval(&q(1, 2)), q(0, 1));
        assert_eq!(p.eval(&q(3, 1)), q(10, 1));
    }

    #[test]
    fn n_zero_collapses() {
        let (l, r) = dattoli_sides(Dattoli::Dat1, 0).unwrap();
        assert_eq!(l, Poly::x());
        assert_eq!(r, Poly::x());

        let half_x2 = Poly::monomial(q(1, 2), 2);
        let (l, r) = dattoli_sides(Dattoli::Dat3, 0).unwrap();
        assert_eq!(l, half_x2);
        assert_eq!(r, half_x2);

        let (l, r) = dattoli_sides(Dattoli::Rel4, 0).unwrap();
        assert_eq!(l, Poly::constant(q(1, 2)));
        assert_eq!(r, Poly::constant(q(1, 2)));
    }

    #[test]
    fn all_identities_hold_for_small_n() {
        for which in Dattoli::ALL {
            for n in 0..=12 {
                assert!(check_dattoli(which, n).unwrap(), "{which} n={n}");
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(check_dattoli(Dattoli::Dat1, 257), Err(PolyError::DegreeOutOfRange(257)));
        assert!(check_dattoli(Dattoli::Dat1, DATTOLI_MAX_N).is_ok());
    }

    #[test]
    fn names_parse() {
        assert_eq!("DAT2".parse::<Dattoli>().unwrap(), Dattoli::Dat2);
        assert_eq!("rel4".parse::<Dattoli>().unwrap(), Dattoli::Rel4);
        assert!("dat9".parse::<Dattoli>().is_err());
    }
}

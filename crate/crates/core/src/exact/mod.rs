//! Exact arithmetic: canonical rationals and the quadratic field Q(√5).
//!
//! Nothing in this crate rounds. Integers are `num_bigint::BigInt`.

mod qsqrt5;
mod rational;

pub use qsqrt5::QSqrt5;
pub use rational::{BigRational, RationalSum};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("exponent {0} is out of range")]
    ExponentTooLarge(i64),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// `(-1)^e` for any signed `e`, decided by the parity of `e`.
pub fn sign_of_parity(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_sign_handles_negative_exponents() {
        assert_eq!(sign_of_parity(0), 1);
        assert_eq!(sign_of_parity(-1), -1);
        assert_eq!(sign_of_parity(-4), 1);
        assert_eq!(sign_of_parity(7), -1);
        assert_eq!(sign_of_parity(i64::MIN), 1);
    }
}

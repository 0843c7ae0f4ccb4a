//! Fibonacci and Lucas numbers for every integer index, binomial
//! coefficients, and the Binet-form / golden-ratio lemma checks in Q(√5).
//!
//! [`fib`] and [`lucas`] use fast doubling on `|n|` and then apply the sign
//! rules `F₋ₙ = (−1)ⁿ⁻¹ Fₙ` and `L₋ₙ = (−1)ⁿ Lₙ`. [`fib_oracle`] and
//! [`lucas_oracle`] walk the recurrence one step at a time and share no code
//! with the fast path, so agreement between the two is real evidence.

use std::borrow::Cow;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{sign_of_parity, QSqrt5};

/// Largest accepted `|n|` for [`fib`] and [`lucas`].
pub const MAX_INDEX: i64 = 1 << 31;

/// Largest accepted `|n|` for the linear-time oracles.
pub const ORACLE_MAX_INDEX: i64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("index {0} is outside |n| <= 2^31")]
    IndexOutOfRange(i64),
    #[error("oracle index {0} is outside |n| <= {ORACLE_MAX_INDEX}")]
    OracleOutOfRange(i64),
}

/// A validated sequence index, `|n| <= 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeqIndex(i64);

impl SeqIndex {
    pub fn new(n: i64) -> Result<Self, SeqError> {
        if n.checked_abs().is_some_and(|a| a <= MAX_INDEX) {
            Ok(Self(n))
        } else {
            Err(SeqError::IndexOutOfRange(n))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

impl TryFrom<i64> for SeqIndex {
    type Error = SeqError;
    fn try_from(n: i64) -> Result<Self, SeqError> {
        Self::new(n)
    }
}

/// `(F_m, F_{m+1})` by fast doubling, scanning the bits of `m` from the top:
/// `F_{2k} = F_k (2F_{k+1} − F_k)`, `F_{2k+1} = F_k² + F_{k+1}²`.
fn fib_pair(m: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if m == 0 {
        return (a, b);
    }
    for bit in (0..64 - m.leading_zeros()).rev() {
        let two_b_minus_a = (&b << 1u32) - &a;
        let even = &a * two_b_minus_a;
        let odd = &a * &a + &b * &b;
        if (m >> bit) & 1 == 1 {
            b = &even + &odd;
            a = odd;
        } else {
            a = even;
            b = odd;
        }
    }
    (a, b)
}

fn checked_magnitude(n: i64) -> u64 {
    assert!(SeqIndex::new(n).is_ok(), "sequence index {n} outside |n| <= 2^31");
    n.unsigned_abs()
}

/// Exact `F_n` for `|n| <= 2^31`.
///
/// Panics when the index is out of range; use [`SeqIndex::new`] to validate
/// untrusted input first.
pub fn fib(n: i64) -> BigInt {
    let m = checked_magnitude(n);
    let (f, _) = fib_pair(m);
    if n < 0 && m % 2 == 0 {
        -f
    } else {
        f
    }
}

/// Exact `L_n` for `|n| <= 2^31`, from the same doubling pair as [`fib`]:
/// `L_m = 2F_{m+1} − F_m`.
pub fn lucas(n: i64) -> BigInt {
    let m = checked_magnitude(n);
    let (f, f_next) = fib_pair(m);
    let l = (f_next << 1u32) - f;
    if n < 0 && m % 2 == 1 {
        -l
    } else {
        l
    }
}

/// Both `F_n` and `L_n` from a single doubling pass.
pub fn fib_lucas(n: i64) -> (BigInt, BigInt) {
    let m = checked_magnitude(n);
    let (f, f_next) = fib_pair(m);
    let l = (f_next << 1u32) - &f;
    let f = if n < 0 && m % 2 == 0 { -f } else { f };
    let l = if n < 0 && m % 2 == 1 { -l } else { l };
    (f, l)
}

fn walk_recurrence(x0: i64, x1: i64, n: i64) -> Result<BigInt, SeqError> {
    if n.checked_abs().map_or(true, |a| a > ORACLE_MAX_INDEX) {
        return Err(SeqError::OracleOutOfRange(n));
    }
    let mut lo = BigInt::from(x0);
    let mut hi = BigInt::from(x1);
    if n >= 0 {
        for _ in 0..n {
            let next = &lo + &hi;
            lo = std::mem::replace(&mut hi, next);
        }
        Ok(lo)
    } else {
        // x_{k-1} = x_{k+1} − x_k
        for _ in 0..n.unsigned_abs() {
            let prev = &hi - &lo;
            hi = std::mem::replace(&mut lo, prev);
        }
        Ok(lo)
    }
}

/// `F_n` by plain iteration of the recurrence, forwards or backwards.
pub fn fib_oracle(n: i64) -> Result<BigInt, SeqError> {
    walk_recurrence(0, 1, n)
}

/// `L_n` by plain iteration of the recurrence, forwards or backwards.
pub fn lucas_oracle(n: i64) -> Result<BigInt, SeqError> {
    walk_recurrence(2, 1, n)
}

/// `C(n, k)`, zero when `k < 0` or `k > n`. Multiplicative formula; each
/// intermediate division is exact.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

const MEMO_BOUND: i64 = 4096;

struct Memo {
    fib: Vec<BigInt>,
    lucas: Vec<BigInt>,
}

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| {
        let (fib, lucas) = (-MEMO_BOUND..=MEMO_BOUND).map(fib_lucas).unzip();
        Memo { fib, lucas }
    })
}

/// [`fib`] backed by a process-wide table for `|n| <= 4096`. Same values,
/// fewer multiplications in the identity evaluators.
pub fn fib_memo(n: i64) -> Cow<'static, BigInt> {
    if (-MEMO_BOUND..=MEMO_BOUND).contains(&n) {
        Cow::Borrowed(&memo().fib[(n + MEMO_BOUND) as usize])
    } else {
        Cow::Owned(fib(n))
    }
}

/// [`lucas`] backed by the same table as [`fib_memo`].
pub fn lucas_memo(n: i64) -> Cow<'static, BigInt> {
    if (-MEMO_BOUND..=MEMO_BOUND).contains(&n) {
        Cow::Borrowed(&memo().lucas[(n + MEMO_BOUND) as usize])
    } else {
        Cow::Owned(lucas(n))
    }
}

fn golden_powers(n: i64) -> (QSqrt5, QSqrt5) {
    let alpha = QSqrt5::alpha().pow(n).expect("alpha is invertible");
    let beta = QSqrt5::beta().pow(n).expect("beta is invertible");
    (alpha, beta)
}

fn embed(n: BigInt) -> QSqrt5 {
    QSqrt5::from_integer(n)
}

/// Binet forms in Q(√5): `(αⁿ − βⁿ)/(α − β) = Fₙ` and `αⁿ + βⁿ = Lₙ`.
pub fn check_binet(n: i64) -> bool {
    let (alpha_n, beta_n) = golden_powers(n);
    let gap = &QSqrt5::alpha() - &QSqrt5::beta();
    let binet_fib = (&alpha_n - &beta_n).checked_div(&gap).expect("alpha - beta = sqrt5");
    let binet_lucas = &alpha_n + &beta_n;
    binet_fib == embed(fib(n)) && binet_lucas == embed(lucas(n))
}

/// `(−1)ˢ + α²ˢ = αˢ Lₛ` and `(−1)ˢ + β²ˢ = βˢ Lₛ`.
pub fn check_lemma1(s: i64) -> bool {
    let sign = QSqrt5::from_integer(sign_of_parity(s));
    let l_s = embed(lucas(s));
    [QSqrt5::alpha(), QSqrt5::beta()].iter().all(|root| {
        let lhs = &sign + &root.pow(2 * s).expect("invertible");
        let rhs = &root.pow(s).expect("invertible") * &l_s;
        lhs == rhs
    })
}

/// The four relations
///
/// ```text
/// L_{r+s} − L_r αˢ = −βʳ F_s √5
/// L_{r+s} − L_r βˢ =  αʳ F_s √5
/// F_{r+s} − F_r αˢ =  βʳ F_s
/// F_{r+s} − F_r βˢ =  αʳ F_s
/// ```
///
/// each evaluated exactly in Q(√5).
pub fn check_lemma2(r: i64, s: i64) -> bool {
    let (alpha_r, beta_r) = golden_powers(r);
    let (alpha_s, beta_s) = golden_powers(s);
    let sqrt5 = QSqrt5::sqrt5();
    let (f_r, l_r) = (embed(fib(r)), embed(lucas(r)));
    let f_s = embed(fib(s));
    let (f_rs, l_rs) = (embed(fib(r + s)), embed(lucas(r + s)));

    let hog1 = &l_rs - &(&l_r * &alpha_s) == -(&(&beta_r * &f_s) * &sqrt5);
    let hog2 = &l_rs - &(&l_r * &beta_s) == &(&alpha_r * &f_s) * &sqrt5;
    let hog3 = &f_rs - &(&f_r * &alpha_s) == &beta_r * &f_s;
    let hog4 = &f_rs - &(&f_r * &beta_s) == &alpha_r * &f_s;
    hog1 && hog2 && hog3 && hog4
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Pascal's triangle, row by row.
    fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
        let mut tri = vec![vec![BigInt::one()]];
        for n in 1..rows {
            let prev = &tri[n - 1];
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            tri.push(row);
        }
        tri
    }

    #[test]
    fn initial_values() {
        assert_eq!(fib(0), int(0));
        assert_eq!(fib(1), int(1));
        assert_eq!(lucas(0), int(2));
        assert_eq!(lucas(1), int(1));
    }

    #[test]
    fn small_values_from_iteration() {
        assert_eq!(fib(10), int(55));
        assert_eq!(lucas(10), int(123));
        assert_eq!(fib(-4), int(-3));
        assert_eq!(lucas(-3), int(-4));
        assert_eq!(fib_oracle(12).unwrap(), int(144));
        assert_eq!(lucas_oracle(0).unwrap(), int(2));
        assert_eq!(fib_oracle(-1).unwrap(), int(1));
    }

    #[test]
    fn oracle_agrees_on_moderate_range() {
        for n in -300..=300 {
            assert_eq!(fib(n), fib_oracle(n).unwrap(), "F_{n}");
            assert_eq!(lucas(n), lucas_oracle(n).unwrap(), "L_{n}");
            assert_eq!(fib_lucas(n), (fib(n), lucas(n)));
        }
    }

    #[test]
    fn oracle_range_is_enforced() {
        assert_eq!(fib_oracle(100_001), Err(SeqError::OracleOutOfRange(100_001)));
        assert_eq!(lucas_oracle(-100_001), Err(SeqError::OracleOutOfRange(-100_001)));
        assert_eq!(fib_oracle(i64::MIN), Err(SeqError::OracleOutOfRange(i64::MIN)));
    }

    #[test]
    fn index_validation() {
        assert!(SeqIndex::new(MAX_INDEX).is_ok());
        assert!(SeqIndex::new(-MAX_INDEX).is_ok());
        assert_eq!(SeqIndex::new(MAX_INDEX + 1), Err(SeqError::IndexOutOfRange(MAX_INDEX + 1)));
        assert!(SeqIndex::new(i64::MIN).is_err());
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn fib_rejects_huge_index() {
        fib(MAX_INDEX + 1);
    }

    #[test]
    fn cross_identities() {
        for n in -200..=200 {
            assert_eq!(lucas(n), fib(n - 1) + fib(n + 1));
            assert_eq!(fib(2 * n), fib(n) * lucas(n));
        }
    }

    #[test]
    fn memo_matches_kernel() {
        for n in [-5000, -4096, -17, 0, 1, 4096, 4097] {
            assert_eq!(*fib_memo(n), fib(n));
            assert_eq!(*lucas_memo(n), lucas(n));
        }
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(3, -1), int(0));
        for n in 0..20 {
            assert_eq!(binomial(n, 0), int(1));
        }
    }

    #[test]
    fn binomial_matches_pascal() {
        let tri = pascal(61);
        for (n, row) in tri.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as i64), v, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binet_examples() {
        assert!(check_binet(0));
        assert!(check_binet(7));
        assert!(check_binet(-7));
    }

    #[test]
    fn lemma_examples() {
        assert!(check_lemma1(0));
        assert!(check_lemma1(3));
        assert!(check_lemma1(-2));
        assert!(check_lemma2(0, 0));
        assert!(check_lemma2(2, 3));
        assert!(check_lemma2(-1, 4));
    }
}

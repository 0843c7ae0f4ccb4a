//! Side evaluators for every catalog identity.
//!
//! Notation in the doc comments: `C = C(n,k)`, sums run over `k = 0..=n`,
//! `F`/`L` are Fibonacci/Lucas numbers and `S` stands for either one when the
//! two printed forms are otherwise identical.

use std::borrow::Cow;

use num_bigint::BigInt;

use super::{Constraint, Family, IdentityDescriptor, ParamSpace, ParamTuple};
use crate::exact::{sign_of_parity, BigRational, RationalSum};
use crate::sequences::{binomial, fib_memo, lucas_memo};

pub(super) trait Seq {
    fn at(i: i64) -> Cow<'static, BigInt>;
}

pub(super) struct Fib;
pub(super) struct Luc;

impl Seq for Fib {
    fn at(i: i64) -> Cow<'static, BigInt> {
        fib_memo(i)
    }
}

impl Seq for Luc {
    fn at(i: i64) -> Cow<'static, BigInt> {
        lucas_memo(i)
    }
}

pub(super) fn fib(i: i64) -> BigInt {
    fib_memo(i).into_owned()
}

pub(super) fn luc(i: i64) -> BigInt {
    lucas_memo(i).into_owned()
}

/// `base^exp`. Every printed power has a non-negative exponent; a negative
/// one here means the transcription is wrong.
pub(super) fn pow(base: &BigInt, exp: i64) -> BigInt {
    assert!(exp >= 0, "negative exponent {exp} in transcription");
    base.pow(u32::try_from(exp).expect("exponent fits in u32"))
}

pub(super) fn int_pow(base: i64, exp: i64) -> BigInt {
    pow(&BigInt::from(base), exp)
}

/// `(-1)^e` by parity.
pub(super) fn sign(e: i64) -> BigInt {
    BigInt::from(sign_of_parity(e))
}

pub(super) fn binom(n: i64, k: i64) -> BigInt {
    binomial(n.try_into().expect("n is non-negative"), k)
}

/// `num / den` for a non-zero denominator.
pub(super) fn frac(num: BigInt, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num, den).expect("denominator is non-zero by construction")
}

pub(super) fn ratio_of(num: &BigInt, den: &BigInt) -> BigRational {
    frac(num.clone(), den.clone())
}

/// `Σ_{k=0}^{n} num_k / den_k`.
pub(super) fn sum_k(n: i64, term: impl Fn(i64) -> (BigInt, i64)) -> BigRational {
    let mut acc = RationalSum::new();
    for k in 0..=n {
        let (num, den) = term(k);
        acc.add_frac(num, &BigInt::from(den));
    }
    acc.finish()
}

/// `Σ_{k=0}^{n}` of rational terms.
pub(super) fn sum_rational(n: i64, term: impl Fn(i64) -> BigRational) -> BigRational {
    (0..=n).map(term).sum()
}

pub(super) fn unpack(p: &ParamTuple) -> (i64, i64, i64, i64) {
    (i64::from(p.n), p.r, p.s, p.t)
}

// ---------------------------------------------------------------------------
// Problem-proposal identities

/// `Σ C (F_k + L_k)/(k+1)`
fn intro1_lhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * (fib(k) + luc(k)), k + 1))
}

/// `(F_{2n+1} + L_{2n+1})/(n+1)`
fn intro1_rhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(fib(2 * n + 1) + luc(2 * n + 1), n + 1)
}

/// `Σ C (F_k + L_k)/((k+1)(k+2))`
fn intro2_lhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * (fib(k) + luc(k)), (k + 1) * (k + 2)))
}

/// `(F_{2n+2} + L_{2n+2} − 2)/((n+1)(n+2))`
fn intro2_rhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(fib(2 * n + 2) + luc(2 * n + 2) - 2, (n + 1) * (n + 2))
}

// ---------------------------------------------------------------------------
// First class: weight 1/(k+1)

/// `Σ C/(k+1) (−1)^{s(k+1)+t} F_r^{k+1} F_s^{n−k} F_{rn−s(k+1)−rk−t}`
fn thm1_f_lhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s) = (fib(r), fib(s));
    sum_k(n, |k| {
        let term = binom(n, k)
            * sign(s * (k + 1) + t)
            * pow(&f_r, k + 1)
            * pow(&f_s, n - k)
            * &*Fib::at(r * n - s * (k + 1) - r * k - t);
        (term, k + 1)
    })
}

/// `1/(n+1) ((−1)^{t+1} F_s^{n+1} F_{r(n+1)−t} − F_t F_{r+s}^{n+1})`
fn thm1_f_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let inner = sign(t + 1) * pow(&fib(s), n + 1) * fib(r * (n + 1) - t) - fib(t) * pow(&fib(r + s), n + 1);
    frac(inner, n + 1)
}

/// `Σ C/(k+1) (−1)^{s(k+1)+1+t} F_r^{k+1} F_s^{n−k} L_{rn−s(k+1)−rk−t}`
fn thm1_l_lhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s) = (fib(r), fib(s));
    sum_k(n, |k| {
        let term = binom(n, k)
            * sign(s * (k + 1) + 1 + t)
            * pow(&f_r, k + 1)
            * pow(&f_s, n - k)
            * &*Luc::at(r * n - s * (k + 1) - r * k - t);
        (term, k + 1)
    })
}

/// `1/(n+1) ((−1)^t F_s^{n+1} L_{r(n+1)−t} − L_t F_{r+s}^{n+1})`
fn thm1_l_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let inner = sign(t) * pow(&fib(s), n + 1) * luc(r * (n + 1) - t) - luc(t) * pow(&fib(r + s), n + 1);
    frac(inner, n + 1)
}

/// `Σ C/(k+1) (−1)^k S_{n−2k−1+t}`
fn cor1_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(k) * &*S::at(n - 2 * k - 1 + t), k + 1))
}

/// `1/(n+1) (S_{n+1+t} − S_t)`
fn cor1_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(&*S::at(n + 1 + t) - &*S::at(t), n + 1)
}

/// `Σ C/(k+1) (−1)^t F_{n−3k−2−t}`
fn cor2_f_lhs(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(t) * fib(n - 3 * k - 2 - t), k + 1))
}

/// `1/(n+1) ((−1)^{t+1} F_{n+1−t} − F_t 2^{n+1})`
fn cor2_f_rhs(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(sign(t + 1) * fib(n + 1 - t) - fib(t) * int_pow(2, n + 1), n + 1)
}

/// `Σ C/(k+1) (−1)^{t+1} L_{n−3k−2−t}`
fn cor2_l_lhs(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(t + 1) * luc(n - 3 * k - 2 - t), k + 1))
}

/// `1/(n+1) ((−1)^t L_{n+1−t} − L_t 2^{n+1})`
fn cor2_l_rhs(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(sign(t) * luc(n + 1 - t) - luc(t) * int_pow(2, n + 1), n + 1)
}

/// `Σ C/(k+1) (−1)^k S_{2n−3k−1+t}`
fn cor3_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(k) * &*S::at(2 * n - 3 * k - 1 + t), k + 1))
}

/// `1/(n+1) (S_{2n+2+t} − S_t 2^{n+1})`
fn cor3_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(&*S::at(2 * n + 2 + t) - &*S::at(t) * int_pow(2, n + 1), n + 1)
}

/// `Σ C/(k+1) (−1)^t F_{2n−4k−2−t}`
fn cor4_f_lhs(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(t) * fib(2 * n - 4 * k - 2 - t), k + 1))
}

/// `1/(n+1) ((−1)^{t+1} F_{2n+2−t} − F_t 3^{n+1})`
fn cor4_f_rhs(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(sign(t + 1) * fib(2 * n + 2 - t) - fib(t) * int_pow(3, n + 1), n + 1)
}

/// `Σ C/(k+1) (−1)^{t+1} L_{2n−4k−2−t}`
fn cor4_l_lhs(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(t + 1) * luc(2 * n - 4 * k - 2 - t), k + 1))
}

/// `1/(n+1) ((−1)^t L_{2n+2−t} − L_t 3^{n+1})`
fn cor4_l_rhs(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(sign(t) * luc(2 * n + 2 - t) - luc(t) * int_pow(3, n + 1), n + 1)
}

/// `Σ C/(k+1) (−1)^k S_{2n−k+1+t}`
fn cor5_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(k) * &*S::at(2 * n - k + 1 + t), k + 1))
}

/// `1/(n+1) (S_{2n+2+t} − S_t)`
fn cor5_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(&*S::at(2 * n + 2 + t) - &*S::at(t), n + 1)
}

/// `Σ C/(k+1) (−1)^{n+k+1} 2^{n−k} S_{n+2k+3+t}`
fn cor6_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(n + k + 1) * int_pow(2, n - k) * &*S::at(n + 2 * k + 3 + t), k + 1))
}

/// `1/(n+1) ((−2)^{n+1} S_{n+1+t} − S_t)`
fn cor6_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(int_pow(-2, n + 1) * &*S::at(n + 1 + t) - &*S::at(t), n + 1)
}

/// `Σ C/(k+1) (−1)^k 2^{n−k} S_{2n+k+3+t}`
fn cor7_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(k) * int_pow(2, n - k) * &*S::at(2 * n + k + 3 + t), k + 1))
}

/// `1/(n+1) (2^{n+1} S_{2n+2+t} − S_t)`
fn cor7_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(int_pow(2, n + 1) * &*S::at(2 * n + 2 + t) - &*S::at(t), n + 1)
}

/// `Σ C/(k+1) (−1)^k 3^{n−k} S_{2(n+k+2)+t}`
fn cor8_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(k) * int_pow(3, n - k) * &*S::at(2 * (n + k + 2) + t), k + 1))
}

/// `1/(n+1) (3^{n+1} S_{2n+2+t} − S_t)`
fn cor8_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(int_pow(3, n + 1) * &*S::at(2 * n + 2 + t) - &*S::at(t), n + 1)
}

/// `Σ C/(k+1) (−1)^k L_s^{n−k} S_{s(n+k+2)+t}`, s even
fn thm2_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    let l_s = luc(s);
    sum_k(n, |k| (binom(n, k) * sign(k) * pow(&l_s, n - k) * &*S::at(s * (n + k + 2) + t), k + 1))
}

/// `1/(n+1) (L_s^{n+1} S_{s(n+1)+t} − S_t)`
fn thm2_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    frac(pow(&luc(s), n + 1) * &*S::at(s * (n + 1) + t) - &*S::at(t), n + 1)
}

/// `Σ C/(k+1) (−1)^k F_{r+s}^{k+1} F_s^{n−k} F_{s(k+1)+(r+s)(n−k)−t}`
fn thm3_f_lhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_rs, f_s) = (fib(r + s), fib(s));
    sum_k(n, |k| {
        let term = binom(n, k)
            * sign(k)
            * pow(&f_rs, k + 1)
            * pow(&f_s, n - k)
            * &*Fib::at(s * (k + 1) + (r + s) * (n - k) - t);
        (term, k + 1)
    })
}

/// `1/(n+1) (F_s^{n+1} F_{(r+s)(n+1)−t} + (−1)^{(s+1)(n+1)+t} F_t F_r^{n+1})`
fn thm3_f_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let inner = pow(&fib(s), n + 1) * fib((r + s) * (n + 1) - t)
        + sign((s + 1) * (n + 1) + t) * fib(t) * pow(&fib(r), n + 1);
    frac(inner, n + 1)
}

/// `Σ C/(k+1) (−1)^k F_{r+s}^{k+1} F_s^{n−k} L_{s(k+1)+(r+s)(n−k)−t}`
fn thm3_l_lhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_rs, f_s) = (fib(r + s), fib(s));
    sum_k(n, |k| {
        let term = binom(n, k)
            * sign(k)
            * pow(&f_rs, k + 1)
            * pow(&f_s, n - k)
            * &*Luc::at(s * (k + 1) + (r + s) * (n - k) - t);
        (term, k + 1)
    })
}

/// `1/(n+1) (F_s^{n+1} L_{(r+s)(n+1)−t} + (−1)^{(s+1)(n+1)+t+1} L_t F_r^{n+1})`
fn thm3_l_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let inner = pow(&fib(s), n + 1) * luc((r + s) * (n + 1) - t)
        + sign((s + 1) * (n + 1) + t + 1) * luc(t) * pow(&fib(r), n + 1);
    frac(inner, n + 1)
}

// ---------------------------------------------------------------------------
// Second and third classes: weights 1/(k+2) and 1/((k+1)(k+2))

/// `Σ C/(k+2) (−1)^{r(n−k)} F_r^{k+2} F_s^{n−k} S_{s(k+2)−r(n−k)+t}`
///
/// Shared by both forms of the `1/(k+2)` theorem: the two printed sums differ
/// only in the sequence of the last factor.
fn thm4_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s) = (fib(r), fib(s));
    sum_k(n, |k| {
        let term = binom(n, k)
            * sign(r * (n - k))
            * pow(&f_r, k + 2)
            * pow(&f_s, n - k)
            * &*S::at(s * (k + 2) - r * (n - k) + t);
        (term, k + 2)
    })
}

/// `1/((n+1)(n+2)) ((−1)^{t+1} F_s^{n+2} F_{r(n+2)−t} − F_t F_{r+s}^{n+2})
///  + 1/(n+1) F_r F_{s+t} F_{r+s}^{n+1}`
fn thm4_f_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let f_rs = fib(r + s);
    let first = sign(t + 1) * pow(&fib(s), n + 2) * fib(r * (n + 2) - t) - fib(t) * pow(&f_rs, n + 2);
    let second = fib(r) * fib(s + t) * pow(&f_rs, n + 1);
    frac(first, (n + 1) * (n + 2)) + frac(second, n + 1)
}

/// `1/((n+1)(n+2)) ((−1)^t F_s^{n+2} L_{r(n+2)−t} − L_t F_{r+s}^{n+2})
///  + 1/(n+1) F_r L_{s+t} F_{r+s}^{n+1}`
fn thm4_l_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let f_rs = fib(r + s);
    let first = sign(t) * pow(&fib(s), n + 2) * luc(r * (n + 2) - t) - luc(t) * pow(&f_rs, n + 2);
    let second = fib(r) * luc(s + t) * pow(&f_rs, n + 1);
    frac(first, (n + 1) * (n + 2)) + frac(second, n + 1)
}

/// `Σ C/(k+2) (−1)^k L_s^{n−k} S_{2s(k+2)+s(n−k)+t}`, s even
fn thm5_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    let l_s = luc(s);
    sum_k(n, |k| {
        (binom(n, k) * sign(k) * pow(&l_s, n - k) * &*S::at(2 * s * (k + 2) + s * (n - k) + t), k + 2)
    })
}

/// `1/((n+1)(n+2)) (L_s^{n+2} S_{s(n+2)+t} − S_t) − 1/(n+1) S_{2s+t}`
fn thm5_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    let first = pow(&luc(s), n + 2) * &*S::at(s * (n + 2) + t) - &*S::at(t);
    frac(first, (n + 1) * (n + 2)) - frac(S::at(2 * s + t).into_owned(), n + 1)
}

/// `Σ C/((k+1)(k+2)) (−1)^{r(n−k)} F_r^{k+2} F_s^{n−k} S_{s(k+2)−r(n−k)+t}`
fn thm6_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s) = (fib(r), fib(s));
    sum_k(n, |k| {
        let term = binom(n, k)
            * sign(r * (n - k))
            * pow(&f_r, k + 2)
            * pow(&f_s, n - k)
            * &*S::at(s * (k + 2) - r * (n - k) + t);
        (term, (k + 1) * (k + 2))
    })
}

/// `−1/((n+1)(n+2)) ((−1)^{t+1} F_s^{n+1} F_{r+s} F_{r(n+1)−t} − F_t F_{r+s}^{n+2})
///  + 1/(n+2) F_s^{n+1} F_r (−1)^{s+t} F_{r(n+1)−s−t}`
fn thm6_f_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_s, f_rs) = (fib(s), fib(r + s));
    let first = sign(t + 1) * pow(&f_s, n + 1) * &f_rs * fib(r * (n + 1) - t) - fib(t) * pow(&f_rs, n + 2);
    let second = pow(&f_s, n + 1) * fib(r) * sign(s + t) * fib(r * (n + 1) - s - t);
    -frac(first, (n + 1) * (n + 2)) + frac(second, n + 2)
}

/// `−1/((n+1)(n+2)) ((−1)^t F_s^{n+1} F_{r+s} L_{r(n+1)−t} − L_t F_{r+s}^{n+2})
///  + 1/(n+2) F_s^{n+1} F_r (−1)^{s+t+1} L_{r(n+1)−s−t}`
fn thm6_l_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_s, f_rs) = (fib(s), fib(r + s));
    let first = sign(t) * pow(&f_s, n + 1) * &f_rs * luc(r * (n + 1) - t) - luc(t) * pow(&f_rs, n + 2);
    let second = pow(&f_s, n + 1) * fib(r) * sign(s + t + 1) * luc(r * (n + 1) - s - t);
    -frac(first, (n + 1) * (n + 2)) + frac(second, n + 2)
}

/// `Σ C/((k+1)(k+2)) (−1)^k L_s^{n−k} S_{s(n+k+4)+t}`, s even
fn thm7_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    let l_s = luc(s);
    sum_k(n, |k| {
        (binom(n, k) * sign(k) * pow(&l_s, n - k) * &*S::at(s * (n + k + 4) + t), (k + 1) * (k + 2))
    })
}

/// `−1/((n+1)(n+2)) (L_s^{n+1} S_{s(n+1)+t} − S_t) + 1/(n+2) L_s^{n+1} S_{s(n+3)+t}`
fn thm7_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    let l_pow = pow(&luc(s), n + 1);
    let first = &l_pow * &*S::at(s * (n + 1) + t) - &*S::at(t);
    let second = l_pow * &*S::at(s * (n + 3) + t);
    -frac(first, (n + 1) * (n + 2)) + frac(second, n + 2)
}

// ---------------------------------------------------------------------------
// Additional sum relations

/// `Σ C (−1)^k/(k+2) S_{2n−k}`
fn sec4_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * sign(k) * &*S::at(2 * n - k), k + 2))
}

/// `Σ C S_k/((k+1)(k+2))`
fn sec4_rhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * &*S::at(k), (k + 1) * (k + 2)))
}

/// `Σ C (−1)^k (F_{2n−k} + L_{2n−k})/(k+2)`
fn sec4_fl_lhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * sign(k) * (fib(2 * n - k) + luc(2 * n - k)), k + 2))
}

/// `Σ C (F_k + L_k)/((k+1)(k+2))`
fn sec4_fl_mid(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * (fib(k) + luc(k)), (k + 1) * (k + 2)))
}

/// `(F_{2n+2} + L_{2n+2} − 2)/((n+1)(n+2))`
fn sec4_fl_rhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(fib(2 * n + 2) + luc(2 * n + 2) - 2, (n + 1) * (n + 2))
}

/// `F_{r+s}^{−n} Σ C/(k+2) (−1)^{r(n−k)} F_r^k F_s^{n−k} S_{sk−r(n−k)+t}`
fn rel1_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s) = (fib(r), fib(s));
    let sum = sum_k(n, |k| {
        let term = binom(n, k) * sign(r * (n - k)) * pow(&f_r, k) * pow(&f_s, n - k) * &*S::at(s * k - r * (n - k) + t);
        (term, k + 2)
    });
    let scale = BigRational::from_integer(fib(r + s)).pow(-n).expect("r + s is non-zero");
    scale * sum
}

/// `Σ C/((k+1)(k+2)) (−1)^k (F_r/F_{r+s})^k S_{sk+t}`
fn rel1_mid<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let quotient = ratio_of(&fib(r), &fib(r + s));
    sum_rational(n, |k| {
        let coeff = frac(binom(n, k) * sign(k) * &*S::at(s * k + t), (k + 1) * (k + 2));
        coeff * quotient.pow(k).expect("non-negative exponent")
    })
}

/// `1/((n+1)(n+2)) ((F_s/F_r)² (F_s/F_{r+s})^n (−1)^{t+1} F_{2s+r(n+2)−t}
///   − (F_{r+s}/F_r)² (−1)^{t+1} F_{2s−t})
///  + 1/(n+1) (F_{r+s}/F_r) (−1)^{s+t+1} F_{s−t}`
fn rel1_f_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s, f_rs) = (fib(r), fib(s), fib(r + s));
    let s_over_r = ratio_of(&f_s, &f_r);
    let s_over_rs = ratio_of(&f_s, &f_rs);
    let rs_over_r = ratio_of(&f_rs, &f_r);
    let sq = |q: &BigRational| q.pow(2).expect("square");
    let first = sq(&s_over_r)
        * s_over_rs.pow(n).expect("non-negative exponent")
        * BigRational::from_integer(sign(t + 1) * fib(2 * s + r * (n + 2) - t))
        - sq(&rs_over_r) * BigRational::from_integer(sign(t + 1) * fib(2 * s - t));
    let second = rs_over_r * BigRational::from_integer(sign(s + t + 1) * fib(s - t));
    frac(1.into(), (n + 1) * (n + 2)) * first + frac(1.into(), n + 1) * second
}

/// Same as [`rel1_f_rhs`] with `L` in place of the sequence factors and signs
/// `(−1)^t`, `(−1)^t`, `(−1)^{s+t}`.
fn rel1_l_rhs(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s, f_rs) = (fib(r), fib(s), fib(r + s));
    let s_over_r = ratio_of(&f_s, &f_r);
    let s_over_rs = ratio_of(&f_s, &f_rs);
    let rs_over_r = ratio_of(&f_rs, &f_r);
    let sq = |q: &BigRational| q.pow(2).expect("square");
    let first = sq(&s_over_r)
        * s_over_rs.pow(n).expect("non-negative exponent")
        * BigRational::from_integer(sign(t) * luc(2 * s + r * (n + 2) - t))
        - sq(&rs_over_r) * BigRational::from_integer(sign(t) * luc(2 * s - t));
    let second = rs_over_r * BigRational::from_integer(sign(s + t) * luc(s - t));
    frac(1.into(), (n + 1) * (n + 2)) * first + frac(1.into(), n + 1) * second
}

/// `Σ C/(k+2) (−1)^{k+1} F_{n−2k}`
fn rel1p_f_lhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * sign(k + 1) * fib(n - 2 * k), k + 2))
}

/// `Σ C (−1)^k F_k/((k+1)(k+2))`
fn rel1p_f_mid(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * sign(k) * fib(k), (k + 1) * (k + 2)))
}

/// `(1 − F_{n+4})/((n+1)(n+2)) + 1/(n+1)`
fn rel1p_f_rhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(1 - fib(n + 4), (n + 1) * (n + 2)) + frac(1.into(), n + 1)
}

/// `Σ C/(k+2) (−1)^k L_{n−2k}`
fn rel1p_l_lhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * sign(k) * luc(n - 2 * k), k + 2))
}

/// `Σ C (−1)^k L_k/((k+1)(k+2))`
fn rel1p_l_mid(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * sign(k) * luc(k), (k + 1) * (k + 2)))
}

/// `(L_{n+4} − 3)/((n+1)(n+2)) − 1/(n+1)`
fn rel1p_l_rhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(luc(n + 4) - 3, (n + 1) * (n + 2)) - frac(1.into(), n + 1)
}

/// `Σ C/(k+2) (−1)^k L_s^{n−k} S_{s(n+k)+t}`, s even
fn rel2_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    let l_s = luc(s);
    sum_k(n, |k| (binom(n, k) * sign(k) * pow(&l_s, n - k) * &*S::at(s * (n + k) + t), k + 2))
}

/// `Σ C S_{2sk+t}/((k+1)(k+2))`
fn rel2_mid<S: Seq>(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * &*S::at(2 * s * k + t), (k + 1) * (k + 2)))
}

/// `1/((n+1)(n+2)) (L_s^{n+2} F_{s(n−2)+t} + (−1)^t F_{4s−t}) + (−1)^t/(n+1) F_{2s−t}`
fn rel2_f_rhs(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    let first = pow(&luc(s), n + 2) * fib(s * (n - 2) + t) + sign(t) * fib(4 * s - t);
    frac(first, (n + 1) * (n + 2)) + frac(sign(t) * fib(2 * s - t), n + 1)
}

/// `1/((n+1)(n+2)) (L_s^{n+2} L_{s(n−2)+t} − (−1)^t L_{4s−t}) − (−1)^t/(n+1) L_{2s−t}`
fn rel2_l_rhs(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    let first = pow(&luc(s), n + 2) * luc(s * (n - 2) + t) - sign(t) * luc(4 * s - t);
    frac(first, (n + 1) * (n + 2)) - frac(sign(t) * luc(2 * s - t), n + 1)
}

/// `Σ C/(k+2) (−1)^k 3^{n−k} S_{2(n+k)}`
fn rel2p_lhs<S: Seq>(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * sign(k) * int_pow(3, n - k) * &*S::at(2 * (n + k)), k + 2))
}

/// `Σ C S_{4k}/((k+1)(k+2))`
fn rel2p_mid<S: Seq>(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    sum_k(n, |k| (binom(n, k) * &*S::at(4 * k), (k + 1) * (k + 2)))
}

/// `1/((n+1)(n+2)) (3^{n+2} F_{2(n−2)} + 21) + 3/(n+1)`
fn rel2p_f_rhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(int_pow(3, n + 2) * fib(2 * (n - 2)) + 21, (n + 1) * (n + 2)) + frac(3.into(), n + 1)
}

/// `1/((n+1)(n+2)) (3^{n+2} L_{2(n−2)} − 47) − 7/(n+1)`
fn rel2p_l_rhs(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(int_pow(3, n + 2) * luc(2 * (n - 2)) - 47, (n + 1) * (n + 2)) - frac(7.into(), n + 1)
}

// ---------------------------------------------------------------------------

const REL1_CONSTRAINTS: &[Constraint] = &[Constraint::RNonzero, Constraint::RPlusSNonzero];
const REL1_SPACE: ParamSpace = ParamSpace::new(true, true, true, REL1_CONSTRAINTS);

const fn two_way(
    id: &'static str,
    family: Family,
    anchor: &'static str,
    params: ParamSpace,
    lhs: super::Evaluator,
    rhs: super::Evaluator,
) -> IdentityDescriptor {
    IdentityDescriptor { id, family, anchor, params, lhs, mid: None, rhs }
}

const fn chain(
    id: &'static str,
    family: Family,
    anchor: &'static str,
    params: ParamSpace,
    lhs: super::Evaluator,
    mid: super::Evaluator,
    rhs: super::Evaluator,
) -> IdentityDescriptor {
    IdentityDescriptor { id, family, anchor, params, lhs, mid: Some(mid), rhs }
}

use Family::{Both, Fib as F, Lucas as L};

pub(super) static CATALOG: &[IdentityDescriptor] = &[
    two_way("INTRO-1", Both, "Problem proposal, weight 1/(k+1)", ParamSpace::N_ONLY, intro1_lhs, intro1_rhs),
    two_way("INTRO-2", Both, "Problem proposal, weight 1/((k+1)(k+2))", ParamSpace::N_ONLY, intro2_lhs, intro2_rhs),
    two_way("THM1-F", F, "Theorem 1, Fibonacci form", ParamSpace::RST, thm1_f_lhs, thm1_f_rhs),
    two_way("THM1-L", L, "Theorem 1, Lucas form", ParamSpace::RST, thm1_l_lhs, thm1_l_rhs),
    two_way("COR1-F", F, "Corollary 1, Fibonacci form", ParamSpace::T, cor1_lhs::<Fib>, cor1_rhs::<Fib>),
    two_way("COR1-L", L, "Corollary 1, Lucas form", ParamSpace::T, cor1_lhs::<Luc>, cor1_rhs::<Luc>),
    two_way("COR2-F", F, "Corollary 2, Fibonacci form", ParamSpace::T, cor2_f_lhs, cor2_f_rhs),
    two_way("COR2-L", L, "Corollary 2, Lucas form", ParamSpace::T, cor2_l_lhs, cor2_l_rhs),
    two_way("COR3-F", F, "Corollary 3, Fibonacci form", ParamSpace::T, cor3_lhs::<Fib>, cor3_rhs::<Fib>),
    two_way("COR3-L", L, "Corollary 3, Lucas form", ParamSpace::T, cor3_lhs::<Luc>, cor3_rhs::<Luc>),
    two_way("COR4-F", F, "Corollary 4, Fibonacci form", ParamSpace::T, cor4_f_lhs, cor4_f_rhs),
    two_way("COR4-L", L, "Corollary 4, Lucas form", ParamSpace::T, cor4_l_lhs, cor4_l_rhs),
    two_way("COR5-F", F, "Corollary 5, Fibonacci form", ParamSpace::T, cor5_lhs::<Fib>, cor5_rhs::<Fib>),
    two_way("COR5-L", L, "Corollary 5, Lucas form", ParamSpace::T, cor5_lhs::<Luc>, cor5_rhs::<Luc>),
    two_way("COR6-F", F, "Corollary 6, Fibonacci form", ParamSpace::T, cor6_lhs::<Fib>, cor6_rhs::<Fib>),
    two_way("COR6-L", L, "Corollary 6, Lucas form", ParamSpace::T, cor6_lhs::<Luc>, cor6_rhs::<Luc>),
    two_way("COR7-F", F, "Corollary 7, Fibonacci form", ParamSpace::T, cor7_lhs::<Fib>, cor7_rhs::<Fib>),
    two_way("COR7-L", L, "Corollary 7, Lucas form", ParamSpace::T, cor7_lhs::<Luc>, cor7_rhs::<Luc>),
    two_way("COR8-F", F, "Corollary 8, Fibonacci form", ParamSpace::T, cor8_lhs::<Fib>, cor8_rhs::<Fib>),
    two_way("COR8-L", L, "Corollary 8, Lucas form", ParamSpace::T, cor8_lhs::<Luc>, cor8_rhs::<Luc>),
    two_way("THM2-F", F, "Theorem 2, Fibonacci form", ParamSpace::EVEN_S_T, thm2_lhs::<Fib>, thm2_rhs::<Fib>),
    two_way("THM2-L", L, "Theorem 2, Lucas form", ParamSpace::EVEN_S_T, thm2_lhs::<Luc>, thm2_rhs::<Luc>),
    two_way("THM3-F", F, "Theorem 3, Fibonacci form", ParamSpace::RST, thm3_f_lhs, thm3_f_rhs),
    two_way("THM3-L", L, "Theorem 3, Lucas form", ParamSpace::RST, thm3_l_lhs, thm3_l_rhs),
    two_way("THM4-F", F, "Theorem 4, Fibonacci form", ParamSpace::RST, thm4_lhs::<Fib>, thm4_f_rhs),
    two_way("THM4-L", L, "Theorem 4, Lucas form", ParamSpace::RST, thm4_lhs::<Luc>, thm4_l_rhs),
    two_way("THM5-F", F, "Theorem 5, Fibonacci form", ParamSpace::EVEN_S_T, thm5_lhs::<Fib>, thm5_rhs::<Fib>),
    two_way("THM5-L", L, "Theorem 5, Lucas form", ParamSpace::EVEN_S_T, thm5_lhs::<Luc>, thm5_rhs::<Luc>),
    two_way("THM6-F", F, "Theorem 6, Fibonacci form", ParamSpace::RST, thm6_lhs::<Fib>, thm6_f_rhs),
    two_way("THM6-L", L, "Theorem 6, Lucas form", ParamSpace::RST, thm6_lhs::<Luc>, thm6_l_rhs),
    two_way("THM7-F", F, "Theorem 7, Fibonacci form", ParamSpace::EVEN_S_T, thm7_lhs::<Fib>, thm7_rhs::<Fib>),
    two_way("THM7-L", L, "Theorem 7, Lucas form", ParamSpace::EVEN_S_T, thm7_lhs::<Luc>, thm7_rhs::<Luc>),
    two_way("SEC4-F", F, "Sum relation specialization, Fibonacci form", ParamSpace::N_ONLY, sec4_lhs::<Fib>, sec4_rhs::<Fib>),
    two_way("SEC4-L", L, "Sum relation specialization, Lucas form", ParamSpace::N_ONLY, sec4_lhs::<Luc>, sec4_rhs::<Luc>),
    chain("SEC4-FL", Both, "Sum relation specialization, F + L chain", ParamSpace::N_ONLY, sec4_fl_lhs, sec4_fl_mid, sec4_fl_rhs),
    chain("REL1-F", F, "Sum relation theorem 1, Fibonacci chain", REL1_SPACE, rel1_lhs::<Fib>, rel1_mid::<Fib>, rel1_f_rhs),
    chain("REL1-L", L, "Sum relation theorem 1, Lucas chain", REL1_SPACE, rel1_lhs::<Luc>, rel1_mid::<Luc>, rel1_l_rhs),
    chain("REL1P-F", F, "Sum relation theorem 1, Fibonacci particular case", ParamSpace::N_ONLY, rel1p_f_lhs, rel1p_f_mid, rel1p_f_rhs),
    chain("REL1P-L", L, "Sum relation theorem 1, Lucas particular case", ParamSpace::N_ONLY, rel1p_l_lhs, rel1p_l_mid, rel1p_l_rhs),
    chain("REL2-F", F, "Sum relation theorem 2, Fibonacci chain", ParamSpace::EVEN_S_T, rel2_lhs::<Fib>, rel2_mid::<Fib>, rel2_f_rhs),
    chain("REL2-L", L, "Sum relation theorem 2, Lucas chain", ParamSpace::EVEN_S_T, rel2_lhs::<Luc>, rel2_mid::<Luc>, rel2_l_rhs),
    chain("REL2P-F", F, "Sum relation theorem 2, Fibonacci particular case", ParamSpace::N_ONLY, rel2p_lhs::<Fib>, rel2p_mid::<Fib>, rel2p_f_rhs),
    chain("REL2P-L", L, "Sum relation theorem 2, Lucas particular case", ParamSpace::N_ONLY, rel2p_lhs::<Luc>, rel2p_mid::<Luc>, rel2p_l_rhs),
];

//! Deliberately corrupted copies of catalog entries.
//!
//! Each mutant changes exactly one token of one side of a real identity. A
//! verifier that reports no failure on a mutant is not actually comparing
//! anything.

use std::fmt;

use num_bigint::BigInt;

use super::entries::{binom, fib, frac, int_pow, luc, pow, sign, sum_k, unpack, Luc, Seq};
use super::{find, IdentityDescriptor, ParamTuple};
use crate::exact::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MutationKind {
    SignFlip,
    IndexShift,
    SequenceSwap,
    ConstantChange,
}

impl fmt::Display for MutationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MutationKind::SignFlip => "sign flip",
            MutationKind::IndexShift => "index shift",
            MutationKind::SequenceSwap => "F/L swap",
            MutationKind::ConstantChange => "constant change",
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Mutant {
    /// Id of the entry the mutant was derived from.
    pub original: &'static str,
    pub kind: MutationKind,
    /// The single token that was changed, `before -> after`.
    pub change: &'static str,
    pub descriptor: IdentityDescriptor,
}

/// `1/(n+1) (F_{n+1+t} − L_t)`: `F_t` swapped for `L_t`.
fn cor1_f_rhs_swapped(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    frac(fib(n + 1 + t) - luc(t), n + 1)
}

/// Sign exponent `s(k+1)+t` changed to `s(k+1)+t+1`.
fn thm1_f_lhs_sign_flipped(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s) = (fib(r), fib(s));
    sum_k(n, |k| {
        let term = binom(n, k)
            * sign(s * (k + 1) + t + 1)
            * pow(&f_r, k + 1)
            * pow(&f_s, n - k)
            * fib(r * n - s * (k + 1) - r * k - t);
        (term, k + 1)
    })
}

/// Last index `s(k+2)−r(n−k)+t` shifted to `s(k+2)−r(n−k)+t+1`.
fn thm4_l_lhs_shifted(p: &ParamTuple) -> BigRational {
    let (n, r, s, t) = unpack(p);
    let (f_r, f_s) = (fib(r), fib(s));
    sum_k(n, |k| {
        let term = binom(n, k)
            * sign(r * (n - k))
            * pow(&f_r, k + 2)
            * pow(&f_s, n - k)
            * luc(s * (k + 2) - r * (n - k) + t + 1);
        (term, k + 2)
    })
}

/// `L_s^{n+1}` replaced by `F_s^{n+1}`.
fn thm2_l_rhs_swapped(p: &ParamTuple) -> BigRational {
    let (n, _, s, t) = unpack(p);
    frac(pow(&fib(s), n + 1) * &*Luc::at(s * (n + 1) + t) - &*Luc::at(t), n + 1)
}

/// `+ 1/(n+1)` flipped to `− 1/(n+1)`.
fn rel1p_f_rhs_flipped(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(1 - fib(n + 4), (n + 1) * (n + 2)) - frac(BigInt::from(1), n + 1)
}

/// `F_{2n+1}` shifted to `F_{2n+2}`.
fn intro1_rhs_shifted(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(fib(2 * n + 2) + luc(2 * n + 1), n + 1)
}

/// Printed constant `21` changed to `22`.
fn rel2p_f_rhs_constant(p: &ParamTuple) -> BigRational {
    let n = i64::from(p.n);
    frac(int_pow(3, n + 2) * fib(2 * (n - 2)) + 22, (n + 1) * (n + 2)) + frac(BigInt::from(3), n + 1)
}

/// `3^{n−k}` changed to `2^{n−k}`.
fn cor8_l_lhs_base(p: &ParamTuple) -> BigRational {
    let (n, _, _, t) = unpack(p);
    sum_k(n, |k| (binom(n, k) * sign(k) * int_pow(2, n - k) * &*Luc::at(2 * (n + k + 2) + t), k + 1))
}

fn mutate_lhs(id: &'static str, mutant_id: &'static str, lhs: super::Evaluator) -> IdentityDescriptor {
    IdentityDescriptor { id: mutant_id, lhs, ..*find(id).expect("catalog id") }
}

fn mutate_rhs(id: &'static str, mutant_id: &'static str, rhs: super::Evaluator) -> IdentityDescriptor {
    IdentityDescriptor { id: mutant_id, rhs, ..*find(id).expect("catalog id") }
}

/// The documented single-token mutants, in a fixed order.
pub fn mutants() -> Vec<Mutant> {
    vec![
        Mutant {
            original: "COR1-F",
            kind: MutationKind::SequenceSwap,
            change: "rhs F_t -> L_t",
            descriptor: mutate_rhs("COR1-F", "COR1-F~swap-rhs", cor1_f_rhs_swapped),
        },
        Mutant {
            original: "THM1-F",
            kind: MutationKind::SignFlip,
            change: "lhs (-1)^(s(k+1)+t) -> (-1)^(s(k+1)+t+1)",
            descriptor: mutate_lhs("THM1-F", "THM1-F~sign-lhs", thm1_f_lhs_sign_flipped),
        },
        Mutant {
            original: "THM4-L",
            kind: MutationKind::IndexShift,
            change: "lhs L_(s(k+2)-r(n-k)+t) -> L_(s(k+2)-r(n-k)+t+1)",
            descriptor: mutate_lhs("THM4-L", "THM4-L~shift-lhs", thm4_l_lhs_shifted),
        },
        Mutant {
            original: "THM2-L",
            kind: MutationKind::SequenceSwap,
            change: "rhs L_s^(n+1) -> F_s^(n+1)",
            descriptor: mutate_rhs("THM2-L", "THM2-L~swap-rhs", thm2_l_rhs_swapped),
        },
        Mutant {
            original: "REL1P-F",
            kind: MutationKind::SignFlip,
            change: "rhs +1/(n+1) -> -1/(n+1)",
            descriptor: mutate_rhs("REL1P-F", "REL1P-F~sign-rhs", rel1p_f_rhs_flipped),
        },
        Mutant {
            original: "INTRO-1",
            kind: MutationKind::IndexShift,
            change: "rhs F_(2n+1) -> F_(2n+2)",
            descriptor: mutate_rhs("INTRO-1", "INTRO-1~shift-rhs", intro1_rhs_shifted),
        },
        Mutant {
            original: "REL2P-F",
            kind: MutationKind::ConstantChange,
            change: "rhs constant 21 -> 22",
            descriptor: mutate_rhs("REL2P-F", "REL2P-F~const-rhs", rel2p_f_rhs_constant),
        },
        Mutant {
            original: "COR8-L",
            kind: MutationKind::ConstantChange,
            change: "lhs 3^(n-k) -> 2^(n-k)",
            descriptor: mutate_lhs("COR8-L", "COR8-L~base-lhs", cor8_l_lhs_base),
        },
    ]
}

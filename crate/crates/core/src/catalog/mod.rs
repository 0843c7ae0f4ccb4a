//! Registry of the binomial Fibonacci/Lucas sum identities.
//!
//! Each [`IdentityDescriptor`] carries two (or, for printed equality chains,
//! three) independently written evaluators. They are transcribed exactly as
//! the identities are stated, sign factors and all; nothing is simplified.
//! Verification is then nothing more than comparing exact rationals.

mod entries;
mod mutants;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::BigRational;

pub use mutants::{mutants, Mutant, MutationKind};

/// Which sequence the summand is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Fib,
    Lucas,
    /// Both `F` and `L` appear as a sum `F + L`.
    Both,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Fib => "FIB",
            Family::Lucas => "LUC",
            Family::Both => "FIB+LUC",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    SEven,
    RNonzero,
    /// `F_{r+s}` appears in a denominator.
    RPlusSNonzero,
}

impl Constraint {
    pub fn holds(self, p: &ParamTuple) -> bool {
        match self {
            Constraint::SEven => p.s.rem_euclid(2) == 0,
            Constraint::RNonzero => p.r != 0,
            Constraint::RPlusSNonzero => p.r + p.s != 0,
        }
    }

    /// Short flag used in listings.
    pub fn flag(self) -> &'static str {
        match self {
            Constraint::SEven => "s even",
            Constraint::RNonzero => "r nonzero",
            Constraint::RPlusSNonzero => "r+s nonzero",
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

/// Which of `r`, `s`, `t` an identity depends on, and what must hold for a
/// tuple to be admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpace {
    pub uses_r: bool,
    pub uses_s: bool,
    pub uses_t: bool,
    pub constraints: &'static [Constraint],
    pub n_min: u32,
}

impl ParamSpace {
    pub const N_ONLY: ParamSpace = ParamSpace::new(false, false, false, &[]);
    pub const T: ParamSpace = ParamSpace::new(false, false, true, &[]);
    pub const RST: ParamSpace = ParamSpace::new(true, true, true, &[]);
    pub const EVEN_S_T: ParamSpace = ParamSpace::new(false, true, true, &[Constraint::SEven]);

    pub const fn new(uses_r: bool, uses_s: bool, uses_t: bool, constraints: &'static [Constraint]) -> Self {
        Self { uses_r, uses_s, uses_t, constraints, n_min: 0 }
    }

    /// First violated requirement, if any.
    pub fn violation(&self, p: &ParamTuple) -> Option<Violation> {
        if p.n < self.n_min {
            return Some(Violation::NTooSmall(self.n_min));
        }
        for (used, value, name) in [(self.uses_r, p.r, 'r'), (self.uses_s, p.s, 's'), (self.uses_t, p.t, 't')] {
            if !used && value != 0 {
                return Some(Violation::UnusedNonZero(name));
            }
        }
        self.constraints.iter().find(|c| !c.holds(p)).map(|&c| Violation::Constraint(c))
    }

    pub fn admits(&self, p: &ParamTuple) -> bool {
        self.violation(p).is_none()
    }

    pub fn flags(&self) -> String {
        if self.constraints.is_empty() {
            return "-".to_owned();
        }
        self.constraints.iter().map(|c| c.flag()).collect::<Vec<_>>().join(", ")
    }

    pub fn used_names(&self) -> String {
        let mut names = String::from("n");
        for (used, name) in [(self.uses_r, 'r'), (self.uses_s, 's'), (self.uses_t, 't')] {
            if used {
                names.push(name);
            }
        }
        names
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    NTooSmall(u32),
    UnusedNonZero(char),
    Constraint(Constraint),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NTooSmall(min) => write!(f, "n must be at least {min}"),
            Violation::UnusedNonZero(name) => write!(f, "parameter {name} is unused and must be 0"),
            Violation::Constraint(c) => write!(f, "constraint `{c}` violated"),
        }
    }
}

/// `(n, r, s, t)`. Slots an identity does not use are pinned to 0. The
/// derived ordering is lexicographic in that field order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct ParamTuple {
    pub n: u32,
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl ParamTuple {
    pub const fn new(n: u32, r: i64, s: i64, t: i64) -> Self {
        Self { n, r, s, t }
    }

    pub const fn n(n: u32) -> Self {
        Self::new(n, 0, 0, 0)
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, r={}, s={}, t={})", self.n, self.r, self.s, self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Lhs,
    Mid,
    Rhs,
}

/// Exact evaluator for one side of an identity. Only called on admissible
/// tuples.
pub type Evaluator = fn(&ParamTuple) -> BigRational;

#[derive(Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub family: Family,
    /// Where the identity is stated, e.g. "Theorem 2, Fibonacci form".
    pub anchor: &'static str,
    pub params: ParamSpace,
    pub lhs: Evaluator,
    /// Middle expression of a printed chain `lhs = mid = rhs`.
    pub mid: Option<Evaluator>,
    pub rhs: Evaluator,
}

impl IdentityDescriptor {
    pub fn is_three_way(&self) -> bool {
        self.mid.is_some()
    }
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("anchor", &self.anchor)
            .field("params", &self.params)
            .field("three_way", &self.is_three_way())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{id}: tuple {tuple} is not admissible: {violation}")]
    Inadmissible { id: &'static str, tuple: ParamTuple, violation: Violation },
    #[error("{0} has no middle expression")]
    NoMiddle(&'static str),
}

/// Evaluates one side of `desc` at `p`, after checking admissibility.
pub fn eval_side(desc: &IdentityDescriptor, side: Side, p: &ParamTuple) -> Result<BigRational, EvalError> {
    if let Some(violation) = desc.params.violation(p) {
        return Err(EvalError::Inadmissible { id: desc.id, tuple: *p, violation });
    }
    let evaluator = match side {
        Side::Lhs => desc.lhs,
        Side::Mid => desc.mid.ok_or(EvalError::NoMiddle(desc.id))?,
        Side::Rhs => desc.rhs,
    };
    Ok(evaluator(p))
}

/// The full catalog in its fixed order.
pub fn enumerate_catalog() -> &'static [IdentityDescriptor] {
    entries::CATALOG
}

pub fn find(id: &str) -> Option<&'static IdentityDescriptor> {
    entries::CATALOG.iter().find(|d| d.id.eq_ignore_ascii_case(id))
}

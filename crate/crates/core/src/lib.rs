//! Exact verification of binomial sum identities for Fibonacci and Lucas
//! numbers.
//!
//! - [`exact`]: canonical big rationals and the field Q(√5).
//! - [`sequences`]: `F_n`, `L_n` by fast doubling for any signed index, an
//!   iterative oracle, binomials, and the Binet form and two lemmas in Q(√5).
//! - [`poly`]: rational polynomials and the Dattoli identities.
//! - [`catalog`]: every identity with independently written sides.
//! - [`verifier`]: grid and seeded random checks with deterministic reports.
//! - [`cli`]: the `fibsum` command line.
//!
//! ```
//! use fibsum::catalog::{find, ParamTuple};
//! use fibsum::verifier::{verify_grid, GridSpec};
//!
//! let desc = find("COR1-F").unwrap();
//! assert_eq!((desc.lhs)(&ParamTuple::new(3, 0, 0, 2)), (desc.rhs)(&ParamTuple::new(3, 0, 0, 2)));
//! assert!(verify_grid(desc, &GridSpec::default()).passed());
//! ```

pub mod catalog;
pub mod cli;
pub mod exact;
pub mod poly;
pub mod sequences;
pub mod verifier;

// SPDX-License-Identifier: Apache-2.0

//! Permutation binomials `a x^n + x^m` over finite fields.
//!
//! The crate decides whether a binomial permutes `F_q` (by exhaustive
//! evaluation, by the full Hermite-Dickson criterion, and by a reduced
//! criterion that inspects only exponents divisible by
//! `d = gcd(n - m, q - 1)`), enumerates every permutation binomial of small
//! fields, audits the known bounds on `p` in terms of `d`, groups binomials
//! into d-equivalence classes, and moves a permutation binomial's
//! coefficient into a subfield when that is possible.
//!
//! ```
//! use permbin::{binomial::Binomial, field::FieldCtx, permtest};
//!
//! let f7 = FieldCtx::prime(7).unwrap();
//! let f = Binomial::new(&f7, f7.from_int(5), 4, 1).unwrap();
//! assert!(permtest::binomial_criterion(&f).is_perm);
//! ```

pub mod arith;
pub mod binomial;
pub mod bounds;
pub mod cli;
pub mod config;
pub mod descent;
pub mod equivalence;
pub mod error;
pub mod field;
pub mod permtest;
pub mod verify;

pub use binomial::Binomial;
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use permtest::PermVerdict;

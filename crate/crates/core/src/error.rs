// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by field construction, binomial handling and the analyses
/// built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over F_{p}")]
    NotIrreducible { p: u64 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field size {q} exceeds the configured cap {cap}")]
    CapExceeded { q: u64, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("target is not in the subgroup generated by the base")]
    NotInSubgroup,
    #[error("{d} does not divide q-1 = {q_minus_1}")]
    DNotDividing { d: u64, q_minus_1: u64 },
    #[error("subfield degree {s} does not divide extension degree {r}")]
    SNotDividingR { s: u64, r: u64 },
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("binomial coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("degenerate exponents n={n}, m={m} (need 0 < m < n after reduction)")]
    DegenerateExponents { n: u64, m: u64 },
    #[error("substitution parameter eta must be nonzero")]
    ZeroEta,
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("d = {d} does not divide l = {l}")]
    DNotDividingL { d: u64, l: u64 },
    #[error("operation requires d > 1")]
    DEqualsOne,
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("binomial is not a permutation of the field")]
    PreconditionNotPermutation,
    #[error("binomials differ in field or exponent shape")]
    ShapeMismatch,
    #[error("binomials are not d-equivalent")]
    NotEquivalent,
    #[error("{delta} does not divide lcm({u}, {v})")]
    NoDecomposition { delta: u64, u: u64, v: u64 },
    #[error("binomial does not permute the field")]
    NotPermutation,
    #[error("coefficient does not lie in the subfield of degree {s}")]
    NotInSubfield { s: u64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

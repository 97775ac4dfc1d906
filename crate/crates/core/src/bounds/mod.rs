// SPDX-License-Identifier: Apache-2.0

//! Bounds on `p` in terms of `d = gcd(n - m, p - 1)` for permutation
//! binomials, the exceptional cases they carve out, and the enumeration
//! engine that audits them.
//!
//! The claim tags (`thm7`, `cor4`, ...) are the column names used in survey
//! output.

mod survey;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::binomial::{Binomial, RawBinomial};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::permtest::binomial_criterion;

pub use survey::{
    enumerate_perm_binomials, field_for_q, survey_report, Cor5Violation, EnumFilters, EnumOptions,
    NonexistenceConfirmation, Pruning, SurveyRecord, SurveyReport, SurveyRow,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    /// `p - 1 <= d(d - 1)`.
    Thm7,
    /// `p - 1 <= d(d - 2)` outside one exceptional family.
    Cor4,
    /// `p - 1 <= (n - 1)(n - 3)` when `m = 1`.
    Cor5,
    /// The four exceptional binomials of `F_7` with `d <= 4`.
    Cor6,
    /// Parameter families admitting no permutation binomial.
    Cor8,
}

impl Claim {
    pub const ALL: [Claim; 5] = [Claim::Thm7, Claim::Cor4, Claim::Cor5, Claim::Cor6, Claim::Cor8];

    pub fn tag(self) -> &'static str {
        match self {
            Claim::Thm7 => "thm7",
            Claim::Cor4 => "cor4",
            Claim::Cor5 => "cor5",
            Claim::Cor6 => "cor6",
            Claim::Cor8 => "cor8",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.tag() == tag)
    }
}

/// Structured data for the exceptional family `d = 0 mod 3`,
/// `p = d^2 - d + 1`, `n` or `m` divisible by `(p-1)/d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExceptionData {
    pub d_mod_3: u64,
    pub p_is_d2_minus_d_plus_1: bool,
    pub n_divisible: bool,
    pub m_divisible: bool,
}

impl ExceptionData {
    pub fn compute(p: u64, d: u64, n: u64, m: u64) -> Self {
        let period = (p - 1) / d;
        ExceptionData {
            d_mod_3: d % 3,
            p_is_d2_minus_d_plus_1: d * d >= d && p == d * d - d + 1,
            n_divisible: n % period == 0,
            m_divisible: m % period == 0,
        }
    }

    pub fn applies(&self) -> bool {
        self.d_mod_3 == 0 && self.p_is_d2_minus_d_plus_1 && (self.n_divisible || self.m_divisible)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cor4Outcome {
    Holds,
    Exceptional,
    Inadmissible,
}

impl Cor4Outcome {
    pub fn tag(self) -> &'static str {
        match self {
            Cor4Outcome::Holds => "holds",
            Cor4Outcome::Exceptional => "exceptional",
            Cor4Outcome::Inadmissible => "inadmissible",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [Cor4Outcome::Holds, Cor4Outcome::Exceptional, Cor4Outcome::Inadmissible]
            .into_iter()
            .find(|o| o.tag() == tag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub claim: Claim,
    pub holds: bool,
    pub exceptional: Option<ExceptionData>,
    pub detail: String,
    pub p: u64,
    pub d: u64,
    pub n: u64,
    pub m: u64,
}

impl BoundReport {
    /// Recomputes the exception data from the stored parameters alone.
    pub fn exception_recomputes(&self) -> bool {
        match self.exceptional {
            None => true,
            Some(data) => data == ExceptionData::compute(self.p, self.d, self.n, self.m),
        }
    }

    pub fn cor4_outcome(&self) -> Cor4Outcome {
        match (self.holds, self.exceptional) {
            (true, _) => Cor4Outcome::Holds,
            (false, Some(e)) if e.applies() => Cor4Outcome::Exceptional,
            _ => Cor4Outcome::Inadmissible,
        }
    }
}

/// `p - 1 <= d(d - 1)`: necessary for a permutation binomial of `F_p`.
pub fn prime_bound_holds(p: u64, d: u64) -> bool {
    p - 1 <= d * d.saturating_sub(1)
}

/// The sharpened bound `p - 1 <= d(d - 2)`, with its exceptional family.
pub fn sharpened_bound(p: u64, d: u64, n: u64, m: u64) -> Result<BoundReport> {
    if d == 0 || (p - 1) % d != 0 {
        return Err(Error::ParameterMismatch(format!("d = {d} does not divide p - 1 = {}", p - 1)));
    }
    let actual = gcd(n.abs_diff(m), p - 1);
    if actual != d {
        return Err(Error::ParameterMismatch(format!(
            "gcd(n - m, p - 1) = {actual}, not {d}"
        )));
    }
    let bound = d * d.saturating_sub(2);
    let holds = p - 1 <= bound;
    let exceptional = (!holds).then(|| ExceptionData::compute(p, d, n, m));
    let detail = match exceptional {
        None => format!("p - 1 = {} <= d(d-2) = {bound}", p - 1),
        Some(e) if e.applies() => format!(
            "p - 1 = {} > d(d-2) = {bound}; exceptional family (d = 0 mod 3, p = d^2-d+1, (p-1)/d divides {})",
            p - 1,
            if e.n_divisible { "n" } else { "m" }
        ),
        Some(_) => format!("p - 1 = {} > d(d-2) = {bound}; no permutation binomial possible", p - 1),
    };
    Ok(BoundReport {
        claim: Claim::Cor4,
        holds,
        exceptional,
        detail,
        p,
        d,
        n,
        m,
    })
}

/// Audits `p - 1 <= (n - 1)(n - 3)` for a permutation binomial `a x^n + x`
/// of a prime field. Violations are reported, not treated as errors.
pub fn linear_term_bound_audit(f: &Binomial) -> Result<BoundReport> {
    let ctx = f.ctx();
    if ctx.r() != 1 || f.m() != 1 {
        return Err(Error::ParameterMismatch("needs a prime field and m = 1".into()));
    }
    if !binomial_criterion(f).is_perm {
        return Err(Error::PreconditionNotPermutation);
    }
    let p = ctx.p();
    let n = f.n() as i64;
    let bound = (n - 1) * (n - 3);
    let holds = (p as i64 - 1) <= bound;
    Ok(BoundReport {
        claim: Claim::Cor5,
        holds,
        exceptional: None,
        detail: format!(
            "p - 1 = {} {} (n-1)(n-3) = {bound}",
            p - 1,
            if holds { "<=" } else { ">" }
        ),
        p,
        d: f.d(),
        n: f.n(),
        m: f.m(),
    })
}

/// The four permutation binomials of `F_7` with `d <= 4`, in the monic
/// high-term form `x^n + c x^m`: `(n, m, c)`.
pub const F7_EXCEPTIONS_MONIC_HIGH: [(u64, u64, i64); 4] = [(4, 1, 3), (4, 1, -3), (5, 2, 2), (5, 2, -2)];

/// The exceptional `F_7` list, canonicalized to `a x^n + x^m`.
pub fn f7_exceptions(ctx: &FieldCtx) -> Result<Vec<Binomial>> {
    if ctx.q() != 7 {
        return Err(Error::ParameterMismatch("the exceptional list lives over F_7".into()));
    }
    F7_EXCEPTIONS_MONIC_HIGH
        .iter()
        .map(|&(n, m, c)| RawBinomial::monic_high(ctx, n, m, ctx.from_int(c)).canonicalize())
        .collect()
}

/// Is `f` one of the four exceptional `F_7` binomials?
pub fn is_f7_exception(f: &Binomial) -> bool {
    let ctx = f.ctx();
    if ctx.r() != 1 || ctx.p() != 7 {
        return false;
    }
    f7_exceptions(ctx).map(|list| list.contains(f)).unwrap_or(false)
}

/// Families of `(p, r, d)` for which no permutation binomial of `F_{p^r}` exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NonexistenceCase {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl NonexistenceCase {
    pub fn tag(self) -> &'static str {
        match self {
            NonexistenceCase::I => "i",
            NonexistenceCase::II => "ii",
            NonexistenceCase::III => "iii",
            NonexistenceCase::IV => "iv",
            NonexistenceCase::V => "v",
            NonexistenceCase::VI => "vi",
            NonexistenceCase::VII => "vii",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        use NonexistenceCase::*;
        [I, II, III, IV, V, VI, VII].into_iter().find(|c| c.tag() == tag)
    }
}

impl fmt::Display for NonexistenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// First family `(i)`-`(vii)` matching `(p, r, d)`, if any.
pub fn nonexistence_case(p: u64, r: u64, d: u64) -> Option<NonexistenceCase> {
    use NonexistenceCase::*;
    let odd = r % 2 == 1;
    let cases: [(bool, NonexistenceCase); 7] = [
        (odd && d == 2 && p != 3, I),
        (odd && d == 4 && p != 5, II),
        (gcd(r, 6) == 1 && d == 3 && p != 7, III),
        (gcd(r, 10) == 1 && d == 5 && p != 11, IV),
        (gcd(r, 6) == 1 && d == 6 && ![7, 13, 19, 31].contains(&p), V),
        (gcd(r, 42) == 1 && d == 7 && p != 29, VI),
        (odd && d == 8 && p != 17, VII),
    ];
    cases.into_iter().find(|(cond, _)| *cond).map(|(_, c)| c)
}

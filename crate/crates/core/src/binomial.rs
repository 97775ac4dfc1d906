// SPDX-License-Identifier: Apache-2.0

//! Binomials `a*x^n + x^m` in canonical form, reduction modulo `x^q - x`,
//! exponent normalization and the scaling substitution that links
//! d-equivalent binomials.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mod_inverse};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// Exponent of `x^k` after reduction modulo `x^q - x`: 0 stays 0 (the
/// constant), every `k > 0` lands in `1..=q-1` with the same residue mod `q-1`.
pub fn reduce_exponent(q: u64, k: u64) -> u64 {
    if k == 0 {
        0
    } else {
        (k - 1) % (q - 1) + 1
    }
}

/// A canonical binomial `a*x^n + x^m` over `F_q`, `1 <= m < n <= q-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    ctx: FieldCtx,
    a: FieldElement,
    n: u64,
    m: u64,
}

impl Binomial {
    /// Exponents above `q-1` are reduced first; the result must still have
    /// `0 < m < n`.
    pub fn new(ctx: &FieldCtx, a: FieldElement, n: u64, m: u64) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        if m == 0 || n <= m {
            return Err(Error::DegenerateExponents { n, m });
        }
        let q = ctx.q();
        let (rn, rm) = (reduce_exponent(q, n), reduce_exponent(q, m));
        if rn <= rm {
            return Err(Error::DegenerateExponents { n: rn, m: rm });
        }
        Ok(Binomial {
            ctx: ctx.clone(),
            a,
            n: rn,
            m: rm,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn a(&self) -> FieldElement {
        self.a
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// `gcd(n - m, q - 1)`.
    pub fn d(&self) -> u64 {
        gcd(self.n - self.m, self.ctx.q() - 1)
    }

    /// Same exponents, different coefficient.
    pub fn with_coefficient(&self, a: FieldElement) -> Result<Self> {
        Binomial::new(&self.ctx, a, self.n, self.m)
    }

    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        let ctx = &self.ctx;
        let hi = ctx.mul(self.a, ctx.pow_u(x, self.n));
        ctx.add(hi, ctx.pow_u(x, self.m))
    }

    /// The polynomial as an exponent -> coefficient map.
    pub fn terms(&self) -> Vec<(u64, FieldElement)> {
        vec![(self.m, FieldElement::ONE), (self.n, self.a)]
    }

    /// `f(x) = inner(x^k)` with `k = gcd(m, n)`.
    pub fn normalize(&self) -> NormalizationResult {
        let k = gcd(self.m, self.n);
        let inner = Binomial {
            ctx: self.ctx.clone(),
            a: self.a,
            n: self.n / k,
            m: self.m / k,
        };
        NormalizationResult {
            k,
            inner,
            k_coprime_q_minus_1: gcd(k, self.ctx.q() - 1) == 1,
        }
    }

    /// `eta^(u(n-m)) * a * x^n + x^m`, which equals `eta^(-um) f(eta^u x)`
    /// as a function.
    pub fn scale_substitute(&self, eta: FieldElement, u: i64) -> Result<Self> {
        if eta.is_zero() {
            return Err(Error::ZeroEta);
        }
        let ctx = &self.ctx;
        let factor = ctx.pow(eta, u * (self.n - self.m) as i64)?;
        self.with_coefficient(ctx.mul(factor, self.a))
    }

    /// `c * f` before canonicalization.
    pub fn scalar_multiple(&self, c: FieldElement) -> Result<RawBinomial> {
        if c.is_zero() {
            return Err(Error::ZeroScalar);
        }
        Ok(RawBinomial {
            ctx: self.ctx.clone(),
            hi: self.ctx.mul(c, self.a),
            lo: c,
            n: self.n,
            m: self.m,
        })
    }

    /// Text form `a,n,m` with `a` in element text format.
    pub fn to_text(&self) -> String {
        format!("{},{},{}", self.ctx.format(self.a), self.n, self.m)
    }

    /// Parses `a,n,m`; for extension fields `a` contributes `r` comma
    /// separated coefficients, so the last two fields are always `n` and `m`.
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let r = ctx.r() as usize;
        if parts.len() != r + 2 {
            return Err(Error::Parse(format!(
                "binomial needs {} comma separated fields (a as {} coefficient(s), n, m), got {}",
                r + 2,
                r,
                parts.len()
            )));
        }
        let a = ctx.parse(&parts[..r].join(","))?;
        let parse_exp = |s: &str| {
            s.parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad exponent {s:?}: {e}")))
        };
        Binomial::new(ctx, a, parse_exp(parts[r])?, parse_exp(parts[r + 1])?)
    }

    pub fn to_json(&self) -> BinomialJson {
        BinomialJson {
            a: self.ctx.format(self.a),
            n: self.n,
            m: self.m,
            d: self.d(),
        }
    }

    pub fn from_json(ctx: &FieldCtx, json: &BinomialJson) -> Result<Self> {
        let f = Binomial::new(ctx, ctx.parse(&json.a)?, json.n, json.m)?;
        if f.d() != json.d {
            return Err(Error::ParameterMismatch(format!(
                "stored d = {} but gcd(n - m, q - 1) = {}",
                json.d,
                f.d()
            )));
        }
        Ok(f)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})*x^{} + x^{}",
            self.ctx.format(self.a),
            self.n,
            self.m
        )
    }
}

/// Wire form of a binomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialJson {
    pub a: String,
    pub n: u64,
    pub m: u64,
    pub d: u64,
}

/// Output of [`Binomial::normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationResult {
    pub k: u64,
    pub inner: Binomial,
    /// `gcd(k, q-1) = 1`, i.e. `x -> x^k` is a bijection.
    pub k_coprime_q_minus_1: bool,
}

impl NormalizationResult {
    /// Exponent `k'` with `k k' = 1 mod q-1`, when the flag holds.
    pub fn k_inverse(&self) -> Option<u64> {
        let qm1 = self.inner.ctx.q() - 1;
        if !self.k_coprime_q_minus_1 {
            return None;
        }
        mod_inverse(self.k % qm1, qm1)
    }
}

/// A binomial `hi*x^n + lo*x^m` with arbitrary nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawBinomial {
    pub ctx: FieldCtx,
    pub hi: FieldElement,
    pub lo: FieldElement,
    pub n: u64,
    pub m: u64,
}

impl RawBinomial {
    /// `x^n + c*x^m`, the monic-high form.
    pub fn monic_high(ctx: &FieldCtx, n: u64, m: u64, c: FieldElement) -> Self {
        RawBinomial {
            ctx: ctx.clone(),
            hi: FieldElement::ONE,
            lo: c,
            n,
            m,
        }
    }

    /// Divides through by the low coefficient.
    pub fn canonicalize(&self) -> Result<Binomial> {
        if self.lo.is_zero() {
            return Err(Error::ZeroScalar);
        }
        let a = self.ctx.div(self.hi, self.lo)?;
        Binomial::new(&self.ctx, a, self.n, self.m)
    }

    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        let ctx = &self.ctx;
        ctx.add(
            ctx.mul(self.hi, ctx.pow_u(x, self.n)),
            ctx.mul(self.lo, ctx.pow_u(x, self.m)),
        )
    }
}

/// A polynomial of degree at most `q-1`, the canonical representative
/// modulo `x^q - x`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReducedPoly {
    terms: BTreeMap<u64, FieldElement>,
}

impl ReducedPoly {
    pub fn terms(&self) -> &BTreeMap<u64, FieldElement> {
        &self.terms
    }

    pub fn coefficient(&self, e: u64) -> FieldElement {
        self.terms.get(&e).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        self.terms.iter().fold(FieldElement::ZERO, |acc, (&e, &c)| {
            ctx.add(acc, ctx.mul(c, ctx.pow_u(x, e)))
        })
    }
}

/// Reduces modulo `x^q - x`, combining like terms and dropping zeros.
pub fn reduce_poly<I>(ctx: &FieldCtx, poly: I) -> ReducedPoly
where
    I: IntoIterator<Item = (u64, FieldElement)>,
{
    let q = ctx.q();
    let mut terms = BTreeMap::new();
    for (e, c) in poly {
        let slot = terms.entry(reduce_exponent(q, e)).or_insert(FieldElement::ZERO);
        *slot = ctx.add(*slot, c);
    }
    terms.retain(|_, c| !c.is_zero());
    ReducedPoly { terms }
}

// SPDX-License-Identifier: Apache-2.0

//! Prime and extension finite fields `F_q`, `q = p^r`.
//!
//! An element is stored as its packed coefficient vector
//! `c_0 + c_1 p + ... + c_{r-1} p^{r-1}` in the power basis of a root `t` of
//! the modulus. The packed integer doubles as the canonical enumeration
//! order, so the prime subfield occupies the indices `0..p`.
//!
//! Multiplication goes through exponent/logarithm tables built once per
//! context from the cached generator; addition works digit-wise.

mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::{factorize, gcd, is_prime};
use crate::error::{Error, Result};

/// Default cap on `q`.
pub const DEFAULT_MAX_Q: u64 = 1 << 20;

/// Above this size `dlog` switches from exhaustive search to baby-step/giant-step.
pub const DLOG_BRUTE_FORCE_MAX_Q: u64 = 1 << 16;

/// A canonical element of some `F_q`. Meaningful only together with the
/// [`FieldCtx`] that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Position of the element in canonical enumeration order.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The four basic field operations, for callers that dispatch on an operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

struct Inner {
    p: u64,
    r: u32,
    q: u64,
    max_q: u64,
    modulus: Option<Vec<u64>>,
    generator: FieldElement,
    factors_q_minus_1: Vec<(u64, u32)>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Immutable description of `F_q`. Cloning is cheap (shared handle).
#[derive(Clone)]
pub struct FieldCtx(Arc<Inner>);

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.0.p)
            .field("r", &self.0.r)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.r == other.0.r && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds `F_{p^r}` under the default cap. Without a modulus, extension
    /// fields use the lexicographically smallest monic irreducible, comparing
    /// `(c_0, ..., c_{r-1})` from the constant term upward.
    pub fn new(p: u64, r: u32, modulus: Option<&[u64]>) -> Result<Self> {
        Self::with_cap(p, r, modulus, DEFAULT_MAX_Q)
    }

    /// Prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn with_cap(p: u64, r: u32, modulus: Option<&[u64]>, max_q: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(r)
            .filter(|&q| q <= max_q)
            .ok_or(Error::CapExceeded {
                q: p.saturating_pow(r),
                cap: max_q,
            })?;
        let modulus = match (r, modulus) {
            (1, None) => None,
            (1, Some(_)) => {
                return Err(Error::InvalidModulus("prime fields take no modulus".into()));
            }
            (_, Some(m)) => {
                if m.len() != r as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected degree {r}, got {} coefficients",
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus("coefficients must lie in [0, p)".into()));
                }
                if m[r as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !poly::is_irreducible(m, p) {
                    return Err(Error::NotIrreducible { p });
                }
                Some(m.to_vec())
            }
            (_, None) => Some(poly::default_modulus(p, r)),
        };
        let factors = factorize(q - 1);
        let slow = SlowArith {
            p,
            r,
            modulus: modulus.as_deref(),
        };
        let generator = (1..q)
            .map(|i| i as u32)
            .find(|&g| slow.is_generator(g, q, &factors))
            .expect("multiplicative group is cyclic");

        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            *slot = cur;
            log[cur as usize] = i as u32;
            cur = slow.mul(cur, generator);
        }
        for i in 0..order {
            exp[order + i] = exp[i];
        }

        Ok(FieldCtx(Arc::new(Inner {
            p,
            r,
            q,
            max_q,
            modulus,
            generator: FieldElement(generator),
            factors_q_minus_1: factors,
            exp,
            log,
        })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn r(&self) -> u32 {
        self.0.r
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn max_q(&self) -> u64 {
        self.0.max_q
    }

    /// Monic modulus, little-endian with the leading 1; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    pub fn factors_q_minus_1(&self) -> &[(u64, u32)] {
        &self.0.factors_q_minus_1
    }

    /// The cached generator: the first element, in canonical order, of order `q-1`.
    pub fn generator(&self) -> FieldElement {
        self.0.generator
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element from little-endian coefficients; missing high coefficients are zero.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.r as usize {
            return Err(Error::Parse(format!(
                "expected at most {} coefficients, got {}",
                self.0.r,
                coeffs.len()
            )));
        }
        let p = self.0.p as i64;
        let mut packed = 0u64;
        for &c in coeffs.iter().rev() {
            packed = packed * self.0.p + c.rem_euclid(p) as u64;
        }
        Ok(FieldElement(packed as u32))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        unpack(a.0, self.0.p, self.0.r)
    }

    /// Element with the given canonical index.
    pub fn element(&self, index: u64) -> Option<FieldElement> {
        (index < self.0.q).then_some(FieldElement(index as u32))
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q as u32).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.0.q as u32).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        if self.0.r == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return FieldElement(if s >= p { s - p } else { s } as u32);
        }
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let p = p as u32;
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            let mut d = x % p + y % p;
            if d >= p {
                d -= p;
            }
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.0.p;
        if self.0.r == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { (p - a.0 as u64) as u32 });
        }
        if p == 2 {
            return a;
        }
        let p = p as u32;
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            let d = x % p;
            if d != 0 {
                out += (p - d) * place;
            }
            place *= p;
            x /= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.0;
        let idx = inner.log[a.0 as usize] as usize + inner.log[b.0 as usize] as usize;
        FieldElement(inner.exp[idx])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = (self.0.q - 1) as usize;
        let l = self.0.log[a.0 as usize] as usize;
        Ok(FieldElement(self.0.exp[(order - l) % order]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn arith(&self, a: FieldElement, b: FieldElement, op: ArithOp) -> Result<FieldElement> {
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    /// `a^e`; negative exponents go through the inverse. `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        if a.0 == 0 {
            return match e {
                0 => Ok(FieldElement::ONE),
                e if e > 0 => Ok(FieldElement::ZERO),
                _ => Err(Error::ZeroToNegativePower),
            };
        }
        let order = (self.0.q - 1) as i128;
        let l = self.0.log[a.0 as usize] as i128;
        let idx = (l * e as i128).rem_euclid(order) as usize;
        Ok(FieldElement(self.0.exp[idx]))
    }

    /// `a^e` for a non-negative exponent; never fails.
    pub fn pow_u(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.0 == 0 {
            return if e == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let order = self.0.q - 1;
        let l = self.0.log[a.0 as usize] as u128;
        let idx = (l * e as u128 % order as u128) as usize;
        FieldElement(self.0.exp[idx])
    }

    /// Discrete logarithm to the cached generator, read from the tables.
    pub fn log_generator(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroElement);
        }
        Ok(self.0.log[a.0 as usize] as u64)
    }

    /// `generator^e`.
    pub fn gen_pow(&self, e: i64) -> FieldElement {
        let order = (self.0.q - 1) as i64;
        FieldElement(self.0.exp[e.rem_euclid(order) as usize])
    }

    /// Multiplicative order, found by stripping prime factors of `q-1` while
    /// the power stays 1.
    pub fn element_order(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroElement);
        }
        let mut order = self.0.q - 1;
        for &(prime, _) in &self.0.factors_q_minus_1 {
            while order % prime == 0 && self.pow_u(a, order / prime) == FieldElement::ONE {
                order /= prime;
            }
        }
        Ok(order)
    }

    /// First element in canonical order whose order is `q-1`.
    pub fn find_generator(&self) -> FieldElement {
        let full = self.0.q - 1;
        self.nonzero_elements()
            .find(|&a| self.element_order(a) == Ok(full))
            .expect("multiplicative group is cyclic")
    }

    /// Least `e >= 0` with `base^e = target`.
    pub fn dlog(&self, base: FieldElement, target: FieldElement) -> Result<u64> {
        if base.0 == 0 || target.0 == 0 {
            return Err(Error::ZeroElement);
        }
        if self.0.q <= DLOG_BRUTE_FORCE_MAX_Q {
            let mut acc = FieldElement::ONE;
            let mut e = 0u64;
            loop {
                if acc == target {
                    return Ok(e);
                }
                acc = self.mul(acc, base);
                e += 1;
                if acc == FieldElement::ONE {
                    return Err(Error::NotInSubgroup);
                }
            }
        }
        self.dlog_bsgs(base, target)
    }

    /// Baby-step/giant-step discrete logarithm in the cyclic group generated by `base`.
    pub fn dlog_bsgs(&self, base: FieldElement, target: FieldElement) -> Result<u64> {
        if base.0 == 0 || target.0 == 0 {
            return Err(Error::ZeroElement);
        }
        let order = self.element_order(base)?;
        let m = (order as f64).sqrt().ceil() as u64;
        let m = m.max(1);
        let mut baby = HashMap::with_capacity(m as usize);
        let mut acc = FieldElement::ONE;
        for j in 0..m {
            baby.entry(acc).or_insert(j);
            acc = self.mul(acc, base);
        }
        let giant = self.inv(self.pow_u(base, m))?;
        let mut gamma = target;
        for i in 0..=m {
            if let Some(&j) = baby.get(&gamma) {
                let e = i * m + j;
                if e < order {
                    return Ok(e);
                }
            }
            gamma = self.mul(gamma, giant);
        }
        Err(Error::NotInSubgroup)
    }

    /// Is `a` a `d`-th power in `F_q^*`? Requires `d | q-1`.
    pub fn is_dth_power(&self, a: FieldElement, d: u64) -> Result<bool> {
        let qm1 = self.0.q - 1;
        if d == 0 || qm1 % d != 0 {
            return Err(Error::DNotDividing { d, q_minus_1: qm1 });
        }
        if a.0 == 0 {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow_u(a, qm1 / d) == FieldElement::ONE)
    }

    /// `a^(p^e)`.
    pub fn frobenius(&self, a: FieldElement, e: u64) -> FieldElement {
        let mut x = a;
        for _ in 0..e % self.0.r as u64 {
            x = self.pow_u(x, self.0.p);
        }
        x
    }

    /// Is `a` in the subfield `F_{p^s}`? Requires `s | r`.
    pub fn subfield_contains(&self, a: FieldElement, s: u64) -> Result<bool> {
        self.check_subfield_degree(s)?;
        Ok(self.frobenius(a, s) == a)
    }

    /// Elements of `F_{p^s}` in canonical order. Requires `s | r`.
    pub fn subfield_elements(&self, s: u64) -> Result<Vec<FieldElement>> {
        self.check_subfield_degree(s)?;
        Ok(self.elements().filter(|&a| self.frobenius(a, s) == a).collect())
    }

    fn check_subfield_degree(&self, s: u64) -> Result<()> {
        let r = self.0.r as u64;
        if s == 0 || r % s != 0 {
            return Err(Error::SNotDividingR { s, r });
        }
        Ok(())
    }

    /// Element text: a decimal residue for prime fields, `c0,c1,...` otherwise.
    pub fn format(&self, a: FieldElement) -> String {
        if self.0.r == 1 {
            return a.0.to_string();
        }
        self.coeffs(a)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(&self, text: &str) -> Result<FieldElement> {
        let parts = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.len() != self.0.r as usize {
            return Err(Error::Parse(format!(
                "expected {} coefficient(s), got {}",
                self.0.r,
                parts.len()
            )));
        }
        self.from_coeffs(&parts)
    }

    /// Reference multiplication straight from the modulus, bypassing the
    /// tables. Used to cross-check them.
    pub fn mul_reference(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let slow = SlowArith {
            p: self.0.p,
            r: self.0.r,
            modulus: self.0.modulus.as_deref(),
        };
        FieldElement(slow.mul(a.0, b.0))
    }
}

fn unpack(mut v: u32, p: u64, r: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(r as usize);
    for _ in 0..r {
        out.push(v as u64 % p);
        v /= p as u32;
    }
    out
}

fn pack(coeffs: &[u64], p: u64) -> u32 {
    coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
}

// Table-free arithmetic used while the tables are being built.
struct SlowArith<'a> {
    p: u64,
    r: u32,
    modulus: Option<&'a [u64]>,
}

impl SlowArith<'_> {
    fn mul(&self, a: u32, b: u32) -> u32 {
        match self.modulus {
            None => (a as u64 * b as u64 % self.p) as u32,
            Some(m) => {
                let x = poly::trim(unpack(a, self.p, self.r));
                let y = poly::trim(unpack(b, self.p, self.r));
                pack(&poly::mul_mod(&x, &y, m, self.p), self.p)
            }
        }
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    fn is_generator(&self, g: u32, q: u64, factors: &[(u64, u32)]) -> bool {
        factors.iter().all(|&(l, _)| self.pow(g, (q - 1) / l) != 1)
    }
}

/// `gcd(k, q-1) == 1`, i.e. `x -> x^k` permutes `F_q`.
pub fn is_monomial_permutation(k: u64, q: u64) -> bool {
    gcd(k, q - 1) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldCtx {
        FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn construction_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!((f7.p(), f7.r(), f7.q()), (7, 1, 7));
        assert!(f7.modulus().is_none());
        assert_eq!(f9().q(), 9);
        assert_eq!(
            FieldCtx::new(5, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::NotIrreducible { p: 5 }
        );
        assert_eq!(FieldCtx::prime(9).unwrap_err(), Error::NotPrime(9));
        assert!(matches!(
            FieldCtx::new(2, 21, None),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            FieldCtx::new(3, 2, Some(&[1, 0, 2])),
            Err(Error::InvalidModulus(_))
        ));
        // default modulus for F_9 is t^2 + 1
        assert_eq!(FieldCtx::new(3, 2, None).unwrap().modulus(), Some(&[1u64, 0, 1][..]));
    }

    #[test]
    fn arithmetic_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        let e = |v| f7.from_int(v);
        assert_eq!(f7.mul(e(3), e(5)), e(1));
        assert_eq!(f7.arith(e(4), e(0), ArithOp::Add).unwrap(), e(4));
        assert_eq!(f7.div(e(1), e(0)), Err(Error::DivisionByZero));
        let f9 = f9();
        let t = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f9.mul(t, t), f9.from_int(2));
        assert_eq!(f9.format(t), "0,1");
        assert_eq!(f9.parse("0,1").unwrap(), t);
        assert_eq!(f9.parse("2").unwrap_err(), Error::Parse("expected 2 coefficient(s), got 1".into()));
    }

    #[test]
    fn pow_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!(f7.pow(f7.from_int(3), 6).unwrap(), f7.one());
        assert_eq!(f7.pow(f7.from_int(2), 3).unwrap(), f7.one());
        assert_eq!(f7.pow(f7.from_int(3), -1).unwrap(), f7.from_int(5));
        assert_eq!(f7.pow(f7.zero(), -2), Err(Error::ZeroToNegativePower));
        let f9 = f9();
        let t = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f9.pow(t, 4).unwrap(), f9.one());
    }

    #[test]
    fn order_and_generator_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!(f7.element_order(f7.one()).unwrap(), 1);
        assert_eq!(f7.element_order(f7.from_int(2)).unwrap(), 3);
        assert_eq!(f7.element_order(f7.zero()), Err(Error::ZeroElement));
        let f9 = f9();
        assert_eq!(f9.element_order(f9.from_coeffs(&[0, 1]).unwrap()).unwrap(), 4);

        assert_eq!(f7.generator(), f7.from_int(3));
        assert_eq!(FieldCtx::prime(5).unwrap().generator().index(), 2);
        assert_eq!(FieldCtx::prime(2).unwrap().generator(), FieldElement::ONE);
        for (p, r) in [(2, 4), (3, 3), (5, 2), (7, 2), (2, 8)] {
            let ctx = FieldCtx::new(p, r, None).unwrap();
            assert_eq!(ctx.find_generator(), ctx.generator());
            assert_eq!(ctx.element_order(ctx.generator()).unwrap(), ctx.q() - 1);
        }
    }

    #[test]
    fn dlog_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        let e = |v| f7.from_int(v);
        assert_eq!(f7.dlog(e(3), e(1)).unwrap(), 0);
        assert_eq!(f7.dlog(e(3), e(6)).unwrap(), 3);
        assert_eq!(f7.dlog(e(2), e(5)), Err(Error::NotInSubgroup));
        assert_eq!(f7.dlog_bsgs(e(2), e(5)), Err(Error::NotInSubgroup));
        assert_eq!(f7.dlog_bsgs(e(3), e(6)).unwrap(), 3);
    }

    #[test]
    fn bsgs_agrees_with_brute_force() {
        let ctx = FieldCtx::new(2, 8, None).unwrap();
        let g = ctx.generator();
        let h = ctx.pow_u(g, 5);
        for a in ctx.nonzero_elements() {
            assert_eq!(ctx.dlog(g, a), ctx.dlog_bsgs(g, a));
            assert_eq!(ctx.dlog(h, a), ctx.dlog_bsgs(h, a));
        }
    }

    #[test]
    fn dlog_above_switch_uses_bsgs() {
        let ctx = FieldCtx::prime(65537).unwrap();
        let g = ctx.generator();
        let target = ctx.pow_u(g, 40000);
        assert_eq!(ctx.dlog(g, target).unwrap(), 40000);
        let sq = ctx.pow_u(g, 2);
        assert_eq!(ctx.dlog(sq, g), Err(Error::NotInSubgroup));
    }

    #[test]
    fn dth_power_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert!(f7.is_dth_power(f7.one(), 3).unwrap());
        assert!(!f7.is_dth_power(f7.from_int(2), 3).unwrap());
        assert!(f7.is_dth_power(f7.from_int(6), 3).unwrap());
        assert!(matches!(f7.is_dth_power(f7.one(), 4), Err(Error::DNotDividing { .. })));
        assert_eq!(f7.is_dth_power(f7.zero(), 3), Err(Error::ZeroElement));
    }

    #[test]
    fn frobenius_and_subfields() {
        let f9 = f9();
        let t = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f9.frobenius(t, 1), f9.neg(t));
        assert_eq!(f9.frobenius(t, 0), t);
        assert!(!f9.subfield_contains(t, 1).unwrap());
        assert!(f9.subfield_contains(f9.from_int(2), 1).unwrap());
        let f25 = FieldCtx::new(5, 2, None).unwrap();
        assert_eq!(f25.frobenius(f25.from_int(3), 1), f25.from_int(3));
        assert!(f25.subfield_contains(f25.from_int(3), 1).unwrap());
        assert!(matches!(f25.subfield_contains(t, 3), Err(Error::SNotDividingR { .. })));
        assert_eq!(f25.subfield_elements(1).unwrap().len(), 5);
        let f64 = FieldCtx::new(2, 6, None).unwrap();
        assert_eq!(f64.subfield_elements(2).unwrap().len(), 4);
        assert_eq!(f64.subfield_elements(3).unwrap().len(), 8);
    }

    #[test]
    fn tables_match_reference_multiplication() {
        for (p, r) in [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 6)] {
            let ctx = FieldCtx::new(p, r, None).unwrap();
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(ctx.mul(a, b), ctx.mul_reference(a, b));
                }
            }
        }
    }

    #[test]
    fn explicit_modulus_differs_from_default() {
        // x^2 + x + 2 is irreducible over F_3 and gives a differently labelled F_9
        let ctx = FieldCtx::new(3, 2, Some(&[2, 1, 1])).unwrap();
        assert_eq!(ctx.q(), 9);
        assert_eq!(ctx.element_order(ctx.generator()).unwrap(), 8);
        assert_ne!(ctx, f9());
    }
}

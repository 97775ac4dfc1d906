// SPDX-License-Identifier: Apache-2.0

//! Moving the coefficient of a permutation binomial into a subfield.
//!
//! For `f = a x^n + x^m` permuting `F_q`, `q = p^r`, and `s | r`, some
//! d-equivalent `b x^n + x^m` has `b` in `F_{p^s}` exactly when the order of
//! `a` divides `lcm(p^s - 1, (q-1)/d)`; there are then
//! `gcd(p^s - 1, (q-1)/d)` such `b`, and each one restricts to a permutation
//! of `F_{p^s}`.

use serde::{Deserialize, Serialize};

use crate::arith::{divides_lcm, divisors, ext_gcd, factorize, gcd, gcd_pow_minus_one, lcm};
use crate::binomial::{reduce_exponent, Binomial};
use crate::equivalence::are_d_equivalent;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::permtest::{binomial_criterion, brute_force_map};

/// Fields up to this size get every constructive descent cross-checked by
/// a direct scan of the subfield.
pub const SCAN_MAX_Q: u64 = 1 << 16;

/// Splits `delta = lcm(delta1, delta2)` with `delta1 | u` and `delta2 | v`,
/// sending each prime power of `delta` to `u` when it can.
pub fn split_order(delta: u64, u: u64, v: u64) -> Result<(u64, u64)> {
    let fail = Error::NoDecomposition { delta, u, v };
    if delta == 0 || u == 0 || v == 0 {
        return Err(fail);
    }
    let (mut d1, mut d2) = (1u64, 1u64);
    for (prime, e) in factorize(delta) {
        let pe = prime.pow(e);
        if u % pe == 0 {
            d1 *= pe;
        } else if v % pe == 0 {
            d2 *= pe;
        } else {
            return Err(fail);
        }
    }
    Ok((d1, d2))
}

/// `gcd(lcm(a, b), lcm(a, c)) == lcm(a, gcd(b, c))`, on absolute values.
pub fn gcd_lcm_identity_holds(a: i64, b: i64, c: i64) -> bool {
    let (a, b, c) = (a.unsigned_abs(), b.unsigned_abs(), c.unsigned_abs());
    if a == 0 || b == 0 || c == 0 {
        return false;
    }
    let lhs = gcd(lcm(a, b), lcm(a, c));
    lhs == lcm(a, gcd(b, c))
}

/// `f` restricted to `F_{p^s}` after reducing modulo `x^(p^s) - x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducedForm {
    /// `(b+1) x^k`, when `p^s - 1 | d`.
    Monomial {
        coeff: FieldElement,
        k: u64,
        lambda: u64,
        mu: u64,
    },
    /// `b x^n1 + x^m1`; `inner_n/inner_m` divide out `gcd(n1, m1)`.
    Binomial {
        b: FieldElement,
        n1: u64,
        m1: u64,
        inner_n: u64,
        inner_m: u64,
        lambda: u64,
        mu: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReducedFormJson {
    Monomial {
        coeff: String,
        k: u64,
        lambda: u64,
        mu: u64,
    },
    Binomial {
        b: String,
        n1: u64,
        m1: u64,
        inner_n: u64,
        inner_m: u64,
        lambda: u64,
        mu: u64,
    },
}

impl ReducedForm {
    pub fn evaluate(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        match *self {
            ReducedForm::Monomial { coeff, k, .. } => ctx.mul(coeff, ctx.pow_u(x, k)),
            ReducedForm::Binomial { b, n1, m1, .. } => {
                ctx.add(ctx.mul(b, ctx.pow_u(x, n1)), ctx.pow_u(x, m1))
            }
        }
    }

    pub fn to_json(&self, ctx: &FieldCtx) -> ReducedFormJson {
        match *self {
            ReducedForm::Monomial { coeff, k, lambda, mu } => ReducedFormJson::Monomial {
                coeff: ctx.format(coeff),
                k,
                lambda,
                mu,
            },
            ReducedForm::Binomial {
                b,
                n1,
                m1,
                inner_n,
                inner_m,
                lambda,
                mu,
            } => ReducedFormJson::Binomial {
                b: ctx.format(b),
                n1,
                m1,
                inner_n,
                inner_m,
                lambda,
                mu,
            },
        }
    }

    pub fn from_json(ctx: &FieldCtx, json: &ReducedFormJson) -> Result<Self> {
        Ok(match json {
            ReducedFormJson::Monomial { coeff, k, lambda, mu } => ReducedForm::Monomial {
                coeff: ctx.parse(coeff)?,
                k: *k,
                lambda: *lambda,
                mu: *mu,
            },
            ReducedFormJson::Binomial {
                b,
                n1,
                m1,
                inner_n,
                inner_m,
                lambda,
                mu,
            } => ReducedForm::Binomial {
                b: ctx.parse(b)?,
                n1: *n1,
                m1: *m1,
                inner_n: *inner_n,
                inner_m: *inner_m,
                lambda: *lambda,
                mu: *mu,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentReport {
    pub s: u64,
    /// The requested degree when the report came from [`descend_to_intersection`].
    pub t: Option<u64>,
    pub exists: bool,
    /// Order of `a` in `F_q^*`.
    pub delta: u64,
    pub delta1: Option<u64>,
    pub delta2: Option<u64>,
    /// Subfield coefficients `b`, sorted.
    pub coefficients: Vec<FieldElement>,
    pub reduced: Vec<ReducedForm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentJson {
    pub s: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    pub exists: bool,
    pub delta: u64,
    pub delta1: Option<u64>,
    pub delta2: Option<u64>,
    pub coefficients: Vec<String>,
    pub reduced: Vec<ReducedFormJson>,
}

impl DescentReport {
    pub fn to_json(&self, ctx: &FieldCtx) -> DescentJson {
        DescentJson {
            s: self.s,
            t: self.t,
            exists: self.exists,
            delta: self.delta,
            delta1: self.delta1,
            delta2: self.delta2,
            coefficients: self.coefficients.iter().map(|&b| ctx.format(b)).collect(),
            reduced: self.reduced.iter().map(|r| r.to_json(ctx)).collect(),
        }
    }

    pub fn from_json(ctx: &FieldCtx, json: &DescentJson) -> Result<Self> {
        Ok(DescentReport {
            s: json.s,
            t: json.t,
            exists: json.exists,
            delta: json.delta,
            delta1: json.delta1,
            delta2: json.delta2,
            coefficients: json
                .coefficients
                .iter()
                .map(|b| ctx.parse(b))
                .collect::<Result<_>>()?,
            reduced: json
                .reduced
                .iter()
                .map(|r| ReducedForm::from_json(ctx, r))
                .collect::<Result<_>>()?,
        })
    }

    /// The reduced maps are pairwise distinct as functions on `F_{p^s}`.
    pub fn reduced_maps_distinct(&self, ctx: &FieldCtx) -> Result<bool> {
        let points = ctx.subfield_elements(self.s)?;
        let mut tables: Vec<Vec<FieldElement>> = self
            .reduced
            .iter()
            .map(|r| points.iter().map(|&x| r.evaluate(ctx, x)).collect())
            .collect();
        tables.sort();
        tables.dedup();
        Ok(tables.len() == self.reduced.len())
    }
}

fn require_permutation(f: &Binomial) -> Result<()> {
    if binomial_criterion(f).is_perm {
        Ok(())
    } else {
        Err(Error::NotPermutation)
    }
}

fn check_degree(ctx: &FieldCtx, s: u64) -> Result<()> {
    let r = ctx.r() as u64;
    if s == 0 || r % s != 0 {
        return Err(Error::SNotDividingR { s, r });
    }
    Ok(())
}

fn subfield_order(ctx: &FieldCtx, s: u64) -> u64 {
    ctx.p().pow(s as u32)
}

/// Does a d-equivalent of `f` have its coefficient in `F_{p^s}`?
pub fn descent_exists(f: &Binomial, s: u64) -> Result<bool> {
    let ctx = f.ctx();
    check_degree(ctx, s)?;
    require_permutation(f)?;
    let delta = ctx.element_order(f.a())?;
    let period = (ctx.q() - 1) / f.d();
    Ok(divides_lcm(delta, subfield_order(ctx, s) - 1, period))
}

/// Every `b` in `F_{p^s}^*` with `b x^n + x^m` d-equivalent to `f`, by
/// trying them all.
pub fn scan_subfield_equivalents(f: &Binomial, s: u64) -> Result<Vec<FieldElement>> {
    let ctx = f.ctx();
    let mut found = Vec::new();
    for b in ctx.subfield_elements(s)? {
        if b.is_zero() {
            continue;
        }
        if are_d_equivalent(f, &f.with_coefficient(b)?)? {
            found.push(b);
        }
    }
    Ok(found)
}

/// Builds one subfield coefficient from the order decomposition and a
/// discrete logarithm, then the whole family by multiplying with the
/// elements of order dividing `gcd(p^s - 1, (q-1)/d)`.
pub fn descend(f: &Binomial, s: u64) -> Result<DescentReport> {
    let ctx = f.ctx();
    let exists = descent_exists(f, s)?;
    let q = ctx.q();
    let qs = subfield_order(ctx, s);
    let period = (q - 1) / f.d();
    let delta = ctx.element_order(f.a())?;
    let mut report = DescentReport {
        s,
        t: None,
        exists,
        delta,
        delta1: None,
        delta2: None,
        coefficients: Vec::new(),
        reduced: Vec::new(),
    };
    if !exists {
        if q <= SCAN_MAX_Q && !scan_subfield_equivalents(f, s)?.is_empty() {
            return Err(Error::Inconsistent(format!(
                "scan finds a subfield equivalent of {f} for s = {s} although the order test fails"
            )));
        }
        return Ok(report);
    }
    let (delta1, delta2) = split_order(delta, qs - 1, period)?;
    report.delta1 = Some(delta1);
    report.delta2 = Some(delta2);

    // a = xi^e with e = k (q-1)/delta; split 1/delta = i/delta1 + j/delta2.
    let e = ctx.log_generator(f.a())?;
    let k = e / ((q - 1) / delta);
    let bez = ext_gcd(delta2 as i64, delta1 as i64)?;
    let j = bez.v;
    let eps_exp = -(k as i128) * j as i128 * ((q - 1) / delta2) as i128;
    let eps = ctx.gen_pow(eps_exp.rem_euclid((q - 1) as i128) as i64);
    let b0 = ctx.mul(eps, f.a());

    let delta_s = gcd(qs - 1, period);
    let step = (q - 1) / delta_s;
    let mut coefficients: Vec<FieldElement> = (0..delta_s)
        .map(|i| ctx.mul(ctx.gen_pow((i * step) as i64), b0))
        .collect();
    coefficients.sort();

    for &b in &coefficients {
        let g = f.with_coefficient(b)?;
        if !ctx.subfield_contains(b, s)? || !are_d_equivalent(f, &g)? {
            return Err(Error::Inconsistent(format!(
                "constructed coefficient {} fails the subfield or equivalence check",
                ctx.format(b)
            )));
        }
        if q <= SCAN_MAX_Q && !binomial_criterion(&g).is_perm {
            return Err(Error::Inconsistent(format!("{g} does not permute F_{q}")));
        }
    }
    if q <= SCAN_MAX_Q && scan_subfield_equivalents(f, s)? != coefficients {
        return Err(Error::Inconsistent(format!(
            "constructed coefficients for {f}, s = {s} differ from the subfield scan"
        )));
    }
    report.reduced = coefficients
        .iter()
        .map(|&b| reduce_to_subfield(&f.with_coefficient(b)?, s))
        .collect::<Result<_>>()?;
    report.coefficients = coefficients;
    Ok(report)
}

/// Reduces `g = b x^n + x^m`, `b` in `F_{p^s}`, modulo `x^(p^s) - x` and
/// checks that the result permutes `F_{p^s}`.
pub fn reduce_to_subfield(g: &Binomial, s: u64) -> Result<ReducedForm> {
    let ctx = g.ctx();
    check_degree(ctx, s)?;
    if !ctx.subfield_contains(g.a(), s)? {
        return Err(Error::NotInSubfield { s });
    }
    let qs = subfield_order(ctx, s);
    let n1 = reduce_exponent(qs, g.n());
    let m1 = reduce_exponent(qs, g.m());
    let lambda = (g.n() - n1) / (qs - 1);
    let mu = (g.m() - m1) / (qs - 1);
    let form = if n1 == m1 {
        ReducedForm::Monomial {
            coeff: ctx.add(g.a(), ctx.one()),
            k: n1,
            lambda,
            mu,
        }
    } else {
        let k = gcd(n1, m1);
        ReducedForm::Binomial {
            b: g.a(),
            n1,
            m1,
            inner_n: n1 / k,
            inner_m: m1 / k,
            lambda,
            mu,
        }
    };
    let points = ctx.subfield_elements(s)?;
    let mut image: Vec<FieldElement> = points.iter().map(|&x| form.evaluate(ctx, x)).collect();
    image.sort();
    if image != points {
        return Err(Error::NotPermutation);
    }
    Ok(form)
}

/// Descent towards `F_{p^t}` for any `t`, realized over
/// `F_{p^t} ∩ F_q = F_{p^gcd(r, t)}`.
pub fn descend_to_intersection(f: &Binomial, t: u64) -> Result<DescentReport> {
    if t == 0 {
        return Err(Error::ParameterMismatch("t must be positive".into()));
    }
    let ctx = f.ctx();
    let s = gcd(ctx.r() as u64, t);
    let mut report = descend(f, s)?;
    let period = (ctx.q() - 1) / f.d();
    let delta = report.delta;
    // delta | lcm(p^t - 1, period) computed without forming p^t.
    let at_t = divides_lcm(delta, gcd_pow_minus_one(ctx.p(), t, delta), period);
    if at_t != report.exists {
        return Err(Error::Inconsistent(format!(
            "order test at t = {t} disagrees with s = {s}"
        )));
    }
    report.t = Some(t);
    Ok(report)
}

fn valid_degrees(f: &Binomial) -> Result<Vec<u64>> {
    let r = f.ctx().r() as u64;
    let mut valid = Vec::new();
    for s in divisors(r) {
        if descent_exists(f, s)? {
            valid.push(s);
        }
    }
    Ok(valid)
}

/// Least `s` whose subfield holds the coefficient of a d-equivalent of `f`,
/// as the gcd of all valid degrees; checked against an increasing scan.
pub fn smallest_field(f: &Binomial) -> Result<u64> {
    let valid = valid_degrees(f)?;
    let closure = valid.iter().fold(0, |acc, &s| gcd(acc, s));
    let scanned = valid[0];
    if closure != scanned {
        return Err(Error::Inconsistent(format!(
            "gcd of valid degrees {closure} differs from the first valid degree {scanned}"
        )));
    }
    Ok(closure)
}

/// Smallest valid degree found by trying the divisors of `r` in order.
pub fn smallest_field_by_scan(f: &Binomial) -> Result<u64> {
    let r = f.ctx().r() as u64;
    for s in divisors(r) {
        if descent_exists(f, s)? {
            return Ok(s);
        }
    }
    Err(Error::Inconsistent("s = r is always valid".into()))
}

/// Replacing `a` by `a^(p^e)` keeps the smallest field, and valid degrees
/// are closed under gcd.
pub fn conjugate_invariance(f: &Binomial, e: u64) -> Result<bool> {
    require_permutation(f)?;
    let ctx = f.ctx();
    let conj = f.with_coefficient(ctx.frobenius(f.a(), e))?;
    let same = smallest_field(f)? == smallest_field(&conj)?;
    let valid = valid_degrees(f)?;
    let closed = valid
        .iter()
        .all(|&s1| valid.iter().all(|&s2| valid.contains(&gcd(s1, s2))));
    Ok(same && closed)
}

/// For odd `p` and a valid degree `s`, `gcd(d, p^s - 1) != 1`.
pub fn gcd_nontrivial_property(f: &Binomial, s: u64) -> Result<bool> {
    let ctx = f.ctx();
    if ctx.p() == 2 {
        return Err(Error::PreconditionFailed("needs odd characteristic".into()));
    }
    if !descent_exists(f, s)? {
        return Err(Error::PreconditionFailed(format!("no descent to degree {s}")));
    }
    Ok(gcd(f.d(), subfield_order(ctx, s) - 1) != 1)
}

/// Brute-force permutation check of a descended binomial over `F_q`.
pub fn permutes_full_field(g: &Binomial) -> bool {
    brute_force_map(g.ctx(), |x| g.evaluate(x)).is_perm
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f25() -> FieldCtx {
        FieldCtx::new(5, 2, None).unwrap()
    }

    fn f9() -> FieldCtx {
        FieldCtx::new(3, 2, None).unwrap()
    }

    fn t9_binomial() -> Binomial {
        let ctx = f9();
        Binomial::new(&ctx, ctx.from_coeffs(&[0, 1]).unwrap(), 5, 1).unwrap()
    }

    #[test]
    fn split_order_examples() {
        assert_eq!(split_order(12, 4, 6), Ok((4, 3)));
        assert_eq!(split_order(1, 5, 7), Ok((1, 1)));
        assert_eq!(
            split_order(8, 4, 6),
            Err(Error::NoDecomposition { delta: 8, u: 4, v: 6 })
        );
    }

    #[test]
    fn gcd_lcm_identity_examples() {
        assert!(gcd_lcm_identity_holds(4, 6, 10));
        assert!(gcd_lcm_identity_holds(1, 9, 12));
        assert!(gcd_lcm_identity_holds(7, 7, 7));
        assert!(gcd_lcm_identity_holds(-6, 4, 15));
    }

    #[test]
    fn existence_examples() {
        let ctx = f25();
        let f = Binomial::new(&ctx, ctx.from_int(3), 5, 1).unwrap();
        assert!(descent_exists(&f, 1).unwrap());
        assert!(descent_exists(&f, 2).unwrap());
        assert!(!descent_exists(&t9_binomial(), 1).unwrap());
        assert_eq!(descent_exists(&f, 3), Err(Error::SNotDividingR { s: 3, r: 2 }));
        let g = Binomial::new(&ctx, ctx.from_int(1), 5, 1).unwrap();
        assert_eq!(descent_exists(&g, 1), Err(Error::NotPermutation));
    }

    #[test]
    fn f25_descent() {
        let ctx = f25();
        let f = Binomial::new(&ctx, ctx.from_int(3), 5, 1).unwrap();
        let rep = descend(&f, 1).unwrap();
        assert!(rep.exists);
        assert_eq!(rep.delta, 4);
        assert_eq!(rep.coefficients, vec![ctx.from_int(2), ctx.from_int(3)]);
        let monomial = |c: i64| ReducedForm::Monomial {
            coeff: ctx.from_int(c),
            k: 1,
            lambda: 1,
            mu: 0,
        };
        assert_eq!(rep.reduced, vec![monomial(3), monomial(4)]);
        assert!(rep.reduced_maps_distinct(&ctx).unwrap());
        for &b in &rep.coefficients {
            assert!(permutes_full_field(&f.with_coefficient(b).unwrap()));
        }
        let json = rep.to_json(&ctx);
        let text = serde_json::to_string(&json).unwrap();
        let back: DescentJson = serde_json::from_str(&text).unwrap();
        assert_eq!(DescentReport::from_json(&ctx, &back).unwrap(), rep);
    }

    #[test]
    fn f9_has_no_descent() {
        let f = t9_binomial();
        let rep = descend(&f, 1).unwrap();
        assert!(!rep.exists && rep.coefficients.is_empty());
        assert_eq!(rep.delta, 4);
        let full = descend(&f, 2).unwrap();
        assert!(full.exists);
        assert!(full.coefficients.contains(&f.a()));
    }

    #[test]
    fn reduce_examples() {
        let ctx = f25();
        let g = Binomial::new(&ctx, ctx.from_int(2), 5, 1).unwrap();
        assert!(matches!(
            reduce_to_subfield(&g, 1).unwrap(),
            ReducedForm::Monomial { k: 1, coeff, .. } if coeff == ctx.from_int(3)
        ));
        let form = reduce_to_subfield(&g, 2).unwrap();
        assert!(matches!(form, ReducedForm::Binomial { n1: 5, m1: 1, lambda: 0, mu: 0, .. }));
        let f = t9_binomial();
        assert_eq!(reduce_to_subfield(&f, 1), Err(Error::NotInSubfield { s: 1 }));
    }

    #[test]
    fn intersection_examples() {
        let ctx = f25();
        let f = Binomial::new(&ctx, ctx.from_int(3), 5, 1).unwrap();
        let rep = descend_to_intersection(&f, 3).unwrap();
        assert_eq!(rep.t, Some(3));
        assert_eq!(DescentReport { t: None, ..rep }, descend(&f, 1).unwrap());
        let rep = descend_to_intersection(&t9_binomial(), 5).unwrap();
        assert_eq!((rep.s, rep.exists), (1, false));
        for t in 1..=12 {
            let rep = descend_to_intersection(&f, t).unwrap();
            assert_eq!(rep.s, gcd(2, t));
        }
    }

    #[test]
    fn smallest_field_examples() {
        let ctx = f25();
        let f = Binomial::new(&ctx, ctx.from_int(3), 5, 1).unwrap();
        assert_eq!(smallest_field(&f), Ok(1));
        assert_eq!(smallest_field(&t9_binomial()), Ok(2));
        assert_eq!(smallest_field_by_scan(&t9_binomial()), Ok(2));
        let f7 = FieldCtx::prime(7).unwrap();
        let g = Binomial::new(&f7, f7.from_int(5), 4, 1).unwrap();
        assert_eq!(smallest_field(&g), Ok(1));
    }

    #[test]
    fn conjugate_examples() {
        let f = t9_binomial();
        assert!(conjugate_invariance(&f, 0).unwrap());
        assert!(conjugate_invariance(&f, 1).unwrap());
        let ctx = f.ctx();
        assert_eq!(ctx.frobenius(f.a(), 1), ctx.neg(f.a()));
        let g25 = f25();
        let g = Binomial::new(&g25, g25.from_int(3), 5, 1).unwrap();
        assert!(conjugate_invariance(&g, 1).unwrap());
    }

    #[test]
    fn gcd_property_examples() {
        let ctx = f25();
        let f = Binomial::new(&ctx, ctx.from_int(3), 5, 1).unwrap();
        assert_eq!(gcd_nontrivial_property(&f, 1), Ok(true));
        assert_eq!(gcd_nontrivial_property(&t9_binomial(), 2), Ok(true));
        assert!(matches!(
            gcd_nontrivial_property(&t9_binomial(), 1),
            Err(Error::PreconditionFailed(_))
        ));
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        for a in f4.nonzero_elements() {
            if let Ok(g) = Binomial::new(&f4, a, 2, 1) {
                assert!(matches!(gcd_nontrivial_property(&g, 1), Err(Error::PreconditionFailed(_))));
            }
        }
    }
}

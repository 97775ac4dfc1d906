// SPDX-License-Identifier: Apache-2.0

//! Three independent ways of deciding whether a binomial permutes `F_q`:
//!
//! * [`brute_force_is_perm`] evaluates the map everywhere;
//! * [`hermite_dickson_full`] applies the Hermite-Dickson criterion to an
//!   arbitrary polynomial, computing every reduced power `g^l`;
//! * [`binomial_criterion`] only inspects the exponents `l` divisible by
//!   `d`, and decides each one from a short sum of binomial coefficients
//!   instead of expanding `f^l`.
//!
//! Every negative verdict carries a witness that can be re-checked by
//! evaluation.

use serde::{Deserialize, Serialize};

use crate::arith::{binom_mod_p, gcd, mod_inverse};
use crate::binomial::{reduce_exponent, Binomial, ReducedPoly};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// Largest field the Hermite-Dickson oracle accepts.
pub const HD_MAX_Q: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Hd,
    Criterion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two distinct points with the same image.
    CollisionPair(FieldElement, FieldElement),
    /// The complete root list, whose length is not 1.
    ExtraRoots(Vec<FieldElement>),
    /// The reduced `l`-th power has this degree (always `q-1`).
    FailingExponent { l: u64, degree: u64 },
    Clean,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermVerdict {
    pub is_perm: bool,
    pub witness: Witness,
    pub method: Method,
    /// Exponents `l` examined by the power-degree condition, in order.
    pub checked_l: Vec<u64>,
}

impl PermVerdict {
    fn new(is_perm: bool, witness: Witness, method: Method, checked_l: Vec<u64>) -> Self {
        PermVerdict {
            is_perm,
            witness,
            method,
            checked_l,
        }
    }

    pub fn to_json(&self, ctx: &FieldCtx) -> VerdictJson {
        let witness = match &self.witness {
            Witness::CollisionPair(x1, x2) => WitnessJson::Collision {
                x1: ctx.format(*x1),
                x2: ctx.format(*x2),
            },
            Witness::ExtraRoots(roots) => WitnessJson::Roots {
                roots: roots.iter().map(|&x| ctx.format(x)).collect(),
            },
            Witness::FailingExponent { l, degree } => WitnessJson::FailingExponent {
                l: *l,
                degree: *degree,
            },
            Witness::Clean => WitnessJson::Clean,
        };
        VerdictJson {
            is_perm: self.is_perm,
            method: self.method,
            witness,
            checked_l: self.checked_l.clone(),
        }
    }

    pub fn from_json(ctx: &FieldCtx, json: &VerdictJson) -> Result<Self> {
        let witness = match &json.witness {
            WitnessJson::Collision { x1, x2 } => Witness::CollisionPair(ctx.parse(x1)?, ctx.parse(x2)?),
            WitnessJson::Roots { roots } => Witness::ExtraRoots(
                roots.iter().map(|s| ctx.parse(s)).collect::<Result<Vec<_>>>()?,
            ),
            WitnessJson::FailingExponent { l, degree } => Witness::FailingExponent {
                l: *l,
                degree: *degree,
            },
            WitnessJson::Clean => Witness::Clean,
        };
        Ok(PermVerdict::new(json.is_perm, witness, json.method, json.checked_l.clone()))
    }
}

/// Wire form of a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub is_perm: bool,
    pub method: Method,
    pub witness: WitnessJson,
    pub checked_l: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    Collision { x1: String, x2: String },
    Roots { roots: Vec<String> },
    FailingExponent { l: u64, degree: u64 },
    Clean,
}

/// Exhaustive evaluation; reports the first collision in canonical order.
pub fn brute_force_is_perm(f: &Binomial) -> PermVerdict {
    brute_force_map(f.ctx(), |x| f.evaluate(x))
}

/// Exhaustive bijectivity test for any map on `F_q`.
pub fn brute_force_map<F>(ctx: &FieldCtx, eval: F) -> PermVerdict
where
    F: Fn(FieldElement) -> FieldElement,
{
    let mut preimage: Vec<Option<FieldElement>> = vec![None; ctx.q() as usize];
    for x in ctx.elements() {
        let y = eval(x);
        match preimage[y.index() as usize] {
            Some(prev) => {
                return PermVerdict::new(false, Witness::CollisionPair(prev, x), Method::Brute, Vec::new());
            }
            None => preimage[y.index() as usize] = Some(x),
        }
    }
    PermVerdict::new(true, Witness::Clean, Method::Brute, Vec::new())
}

/// Is 0 the only root? Nonzero roots solve `x^(n-m) = -1/a`, which has a
/// solution exactly when `-1/a` is a d-th power.
pub fn unique_root_check(f: &Binomial) -> bool {
    let ctx = f.ctx();
    let target = ctx.neg(ctx.inv(f.a()).expect("coefficient is nonzero"));
    !ctx.is_dth_power(target, f.d()).expect("d divides q-1")
}

/// All roots of `f` in canonical order, found from the discrete logarithm
/// of `-1/a` rather than by evaluation.
pub fn roots(f: &Binomial) -> Vec<FieldElement> {
    let ctx = f.ctx();
    let qm1 = ctx.q() - 1;
    let d = f.d();
    let mut out = vec![FieldElement::ZERO];
    let target = ctx.neg(ctx.inv(f.a()).expect("coefficient is nonzero"));
    let e = ctx.log_generator(target).expect("nonzero");
    if e % d == 0 {
        let period = qm1 / d;
        let step = mod_inverse(((f.n() - f.m()) / d) % period, period).expect("coprime after dividing by d");
        let t0 = ((e / d) as u128 * step as u128 % period as u128) as u64;
        out.extend((0..d).map(|i| ctx.gen_pow((t0 + i * period) as i64)));
    }
    out.sort();
    out
}

/// `g^l` reduced modulo `x^q - x`, by `l` successive reduced multiplications.
pub fn reduced_power<I>(ctx: &FieldCtx, poly: I, l: u64) -> ReducedPoly
where
    I: IntoIterator<Item = (u64, FieldElement)>,
{
    let base = crate::binomial::reduce_poly(ctx, poly);
    let terms: Vec<(u64, FieldElement)> = base.terms().iter().map(|(&e, &c)| (e, c)).collect();
    let mut dense = vec![FieldElement::ZERO; ctx.q() as usize];
    dense[0] = FieldElement::ONE;
    for _ in 0..l {
        dense = mul_dense_sparse(ctx, &dense, &terms);
    }
    crate::binomial::reduce_poly(
        ctx,
        dense
            .iter()
            .enumerate()
            .map(|(e, &c)| (e as u64, c)),
    )
}

fn mul_dense_sparse(ctx: &FieldCtx, dense: &[FieldElement], sparse: &[(u64, FieldElement)]) -> Vec<FieldElement> {
    let q = ctx.q();
    let mut out = vec![FieldElement::ZERO; dense.len()];
    for (i, &c) in dense.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for &(e, s) in sparse {
            let k = reduce_exponent(q, i as u64 + e) as usize;
            out[k] = ctx.add(out[k], ctx.mul(c, s));
        }
    }
    out
}

/// The Hermite-Dickson criterion for an arbitrary polynomial: exactly one
/// root, and every reduced power `g^l`, `1 <= l <= q-2`, has degree at most
/// `q-2`.
pub fn hermite_dickson_full<I>(ctx: &FieldCtx, poly: I) -> Result<PermVerdict>
where
    I: IntoIterator<Item = (u64, FieldElement)>,
{
    let q = ctx.q();
    if q > HD_MAX_Q {
        return Err(Error::CapExceeded { q, cap: HD_MAX_Q });
    }
    let reduced = crate::binomial::reduce_poly(ctx, poly);
    let roots: Vec<FieldElement> = ctx
        .elements()
        .filter(|&x| reduced.evaluate(ctx, x).is_zero())
        .collect();
    if roots.len() != 1 {
        return Ok(PermVerdict::new(false, Witness::ExtraRoots(roots), Method::Hd, Vec::new()));
    }
    let terms: Vec<(u64, FieldElement)> = reduced.terms().iter().map(|(&e, &c)| (e, c)).collect();
    let top = (q - 1) as usize;
    let mut power = vec![FieldElement::ZERO; q as usize];
    power[0] = FieldElement::ONE;
    let mut checked = Vec::new();
    for l in 1..=q.saturating_sub(2) {
        power = mul_dense_sparse(ctx, &power, &terms);
        checked.push(l);
        if !power[top].is_zero() {
            return Ok(PermVerdict::new(
                false,
                Witness::FailingExponent { l, degree: q - 1 },
                Method::Hd,
                checked,
            ));
        }
    }
    Ok(PermVerdict::new(true, Witness::Clean, Method::Hd, checked))
}

/// One term `C(l, j) * (a^((q-1)/d))^lambda` of the reduced sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumTerm {
    pub j: u64,
    pub binom_mod_p: u64,
    pub lambda: u64,
}

/// The exponents `j` contributing to the `x^(q-1)` coefficient of `f^l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSpec {
    pub l: u64,
    /// Least `j >= 0` with `(n-m) j + l m = 0 mod q-1`.
    pub j0: u64,
    /// Largest `lambda` with `j0 + lambda (q-1)/d <= l`; `None` when `j0 > l`.
    pub gamma_l: Option<u64>,
    pub terms: Vec<SumTerm>,
}

/// Solves `j = -l m / (n - m) mod (q-1)/d` for the smallest `j0`, dividing
/// through by `d` and inverting `(n-m)/d` modulo `(q-1)/d`.
pub fn coefficient_sum_terms(f: &Binomial, l: u64) -> Result<SumSpec> {
    let ctx = f.ctx();
    let q = ctx.q();
    let d = f.d();
    if d == 1 {
        return Err(Error::DEqualsOne);
    }
    if l % d != 0 {
        return Err(Error::DNotDividingL { d, l });
    }
    if l == 0 || l > q - 2 {
        return Err(Error::ParameterMismatch(format!("l = {l} outside 1..={}", q - 2)));
    }
    let period = (q - 1) / d;
    let step = mod_inverse(((f.n() - f.m()) / d) % period, period)
        .expect("(n-m)/d and (q-1)/d are coprime");
    let rhs = ((l / d) as u128 * f.m() as u128 % period as u128) as u64;
    let neg_rhs = (period - rhs) % period;
    let j0 = (neg_rhs as u128 * step as u128 % period as u128) as u64;
    let p = ctx.p();
    let terms: Vec<SumTerm> = (0..)
        .map(|lambda| (lambda, j0 + lambda * period))
        .take_while(|&(_, j)| j <= l)
        .map(|(lambda, j)| SumTerm {
            j,
            binom_mod_p: binom_mod_p(l, j as i64, p),
            lambda,
        })
        .collect();
    let gamma_l = terms.last().map(|t| t.lambda);
    Ok(SumSpec {
        l,
        j0,
        gamma_l,
        terms,
    })
}

/// `sum_lambda C(l, j0 + lambda (q-1)/d) (a^((q-1)/d))^lambda`; zero exactly
/// when the reduced `f^l` has degree at most `q-2`.
pub fn top_coefficient_sum(f: &Binomial, l: u64) -> Result<FieldElement> {
    let spec = coefficient_sum_terms(f, l)?;
    Ok(evaluate_sum(f, &spec))
}

fn evaluate_sum(f: &Binomial, spec: &SumSpec) -> FieldElement {
    let ctx = f.ctx();
    let period = (ctx.q() - 1) / f.d();
    let ratio = ctx.pow_u(f.a(), period);
    spec.terms.iter().fold(FieldElement::ZERO, |acc, t| {
        let c = ctx.from_int(t.binom_mod_p as i64);
        ctx.add(acc, ctx.mul(c, ctx.pow_u(ratio, t.lambda)))
    })
}

/// Permutation test that only examines the `floor((q-2)/d)` exponents
/// `l` divisible by `d`. Non-coprime exponents are first routed through
/// [`Binomial::normalize`].
pub fn binomial_criterion(f: &Binomial) -> PermVerdict {
    let ctx = f.ctx();
    let q = ctx.q();
    let norm = f.normalize();
    if !norm.k_coprime_q_minus_1 {
        // x -> x^k collapses 1 and a nontrivial root of unity of order gcd(k, q-1).
        let g = gcd(norm.k, q - 1);
        let zeta = ctx.gen_pow(((q - 1) / g) as i64);
        return PermVerdict::new(
            false,
            Witness::CollisionPair(FieldElement::ONE, zeta),
            Method::Criterion,
            Vec::new(),
        );
    }
    let mut verdict = criterion_coprime(&norm.inner);
    if norm.k > 1 {
        if let Witness::ExtraRoots(rs) = &verdict.witness {
            let k_inv = norm.k_inverse().expect("k coprime to q-1");
            let mut mapped: Vec<FieldElement> = rs.iter().map(|&y| ctx.pow_u(y, k_inv)).collect();
            mapped.sort();
            verdict.witness = Witness::ExtraRoots(mapped);
        }
    }
    verdict
}

fn criterion_coprime(f: &Binomial) -> PermVerdict {
    let q = f.ctx().q();
    let d = f.d();
    if d == 1 || !unique_root_check(f) {
        return PermVerdict::new(false, Witness::ExtraRoots(roots(f)), Method::Criterion, Vec::new());
    }
    let mut checked = Vec::new();
    let mut l = d;
    while l <= q - 2 {
        checked.push(l);
        let spec = coefficient_sum_terms(f, l).expect("d > 1 and d | l");
        if !evaluate_sum(f, &spec).is_zero() {
            return PermVerdict::new(
                false,
                Witness::FailingExponent { l, degree: q - 1 },
                Method::Criterion,
                checked,
            );
        }
        l += d;
    }
    PermVerdict::new(true, Witness::Clean, Method::Criterion, checked)
}

/// Re-checks a verdict's witness against `f` by evaluation (and, for a
/// failing exponent, by recomputing the reduced power).
pub fn witness_holds(f: &Binomial, verdict: &PermVerdict) -> bool {
    let ctx = f.ctx();
    match &verdict.witness {
        Witness::CollisionPair(x1, x2) => x1 != x2 && f.evaluate(*x1) == f.evaluate(*x2),
        Witness::ExtraRoots(rs) => rs.len() != 1 && rs.iter().all(|&x| f.evaluate(x).is_zero()),
        Witness::FailingExponent { l, degree } => {
            ctx.q() <= HD_MAX_Q && reduced_power(ctx, f.terms(), *l).degree() == Some(*degree)
        }
        Witness::Clean => verdict.is_perm,
    }
}

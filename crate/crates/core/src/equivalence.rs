// SPDX-License-Identifier: Apache-2.0

//! d-equivalence: `a x^n + x^m ~ b x^n + x^m` when `b/a` is a nonzero d-th
//! power. Equivalent binomials are related by `g(x) = eta^(-um) f(eta^u x)`,
//! so they permute `F_q` together.

use serde::{Deserialize, Serialize};

use crate::arith::ext_gcd;
use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// A d-equivalence class for fixed `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DClass {
    pub base: Binomial,
    /// Coefficients `eps * a`, `eps` ranging over the d-th powers, in canonical order.
    pub members: Vec<FieldElement>,
    /// Smallest member in canonical order.
    pub class_id: FieldElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DClassJson {
    pub class_id: String,
    pub members: Vec<String>,
    pub size: usize,
    pub is_perm: bool,
}

impl DClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn to_json(&self, is_perm: bool) -> DClassJson {
        let ctx = self.base.ctx();
        DClassJson {
            class_id: ctx.format(self.class_id),
            members: self.members.iter().map(|&a| ctx.format(a)).collect(),
            size: self.members.len(),
            is_perm,
        }
    }
}

fn check_shape(f: &Binomial, g: &Binomial) -> Result<()> {
    if f.ctx() != g.ctx() || f.n() != g.n() || f.m() != g.m() {
        return Err(Error::ShapeMismatch);
    }
    Ok(())
}

pub fn are_d_equivalent(f: &Binomial, g: &Binomial) -> Result<bool> {
    check_shape(f, g)?;
    let ctx = f.ctx();
    let ratio = ctx.div(g.a(), f.a())?;
    ctx.is_dth_power(ratio, f.d())
}

/// The class of `f`: `(q-1)/d` coefficients generated by powers of `xi^d`.
pub fn d_class(f: &Binomial) -> DClass {
    let ctx = f.ctx();
    let d = f.d();
    let size = (ctx.q() - 1) / d;
    let mut members: Vec<FieldElement> = (0..size)
        .map(|i| ctx.mul(ctx.gen_pow((i * d) as i64), f.a()))
        .collect();
    members.sort();
    DClass {
        base: f.clone(),
        class_id: members[0],
        members,
    }
}

/// Canonical class identifier of the coefficient `a` for exponent gcd `d`:
/// the least `eps * a` over d-th powers `eps`. Cheaper than building the class.
pub fn class_id_of(f: &Binomial) -> FieldElement {
    let ctx = f.ctx();
    let d = f.d();
    // eps*a ranges over the coset of a in F_q^* / (F_q^*)^d, i.e. the
    // elements whose generator-log is congruent to log(a) mod d.
    let la = ctx.log_generator(f.a()).expect("nonzero coefficient") % d;
    ctx.nonzero_elements()
        .find(|&x| ctx.log_generator(x).expect("nonzero") % d == la)
        .expect("coset is nonempty")
}

/// Explicit data for `g(x) = eta^(-um) f(eta^u x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubstitutionWitness {
    /// `eta^d = b/a`.
    pub eta: FieldElement,
    /// `u (n-m) + v (q-1) = d`.
    pub u: i64,
    pub v: i64,
}

/// Finds `eta` with `eta^d = b/a` by discrete logarithm, takes `u` from the
/// Bézout identity for `(n-m, q-1)`, and checks the substitution identity
/// at every point of `F_q`.
pub fn substitution_witness(f: &Binomial, g: &Binomial) -> Result<SubstitutionWitness> {
    check_shape(f, g)?;
    let ctx = f.ctx();
    let q = ctx.q();
    let d = f.d();
    let ratio = ctx.div(g.a(), f.a())?;
    let xi = ctx.generator();
    let e = ctx.dlog(xi, ratio)?;
    if e % d != 0 {
        return Err(Error::NotEquivalent);
    }
    let eta = ctx.pow_u(xi, e / d);
    let bez = ext_gcd((f.n() - f.m()) as i64, (q - 1) as i64)?;
    debug_assert_eq!(bez.g as u64, d);
    let shift = ctx.pow(eta, bez.u)?;
    let scale = ctx.pow(eta, -bez.u * f.m() as i64)?;
    let identity = ctx
        .elements()
        .all(|x| g.evaluate(x) == ctx.mul(scale, f.evaluate(ctx.mul(shift, x))));
    if !identity {
        return Err(Error::Inconsistent(format!(
            "substitution identity fails for eta = {}, u = {}",
            ctx.format(eta),
            bez.u
        )));
    }
    Ok(SubstitutionWitness {
        eta,
        u: bez.u,
        v: bez.v,
    })
}

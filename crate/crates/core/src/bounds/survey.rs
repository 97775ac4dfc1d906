// SPDX-License-Identifier: Apache-2.0

//! Exhaustive enumeration of permutation binomials and the survey built on
//! top of it.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    is_f7_exception, nonexistence_case, prime_bound_holds, sharpened_bound, Cor4Outcome,
    NonexistenceCase,
};
use crate::arith::{divisors, factorize, gcd};
use crate::binomial::Binomial;
use crate::equivalence::class_id_of;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement, DEFAULT_MAX_Q};
use crate::permtest::binomial_criterion;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumFilters {
    pub d: Option<u64>,
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub max_n: Option<u64>,
}

impl EnumFilters {
    fn accepts(&self, n: u64, m: u64, d: u64) -> bool {
        self.n.map_or(true, |v| v == n)
            && self.m.map_or(true, |v| v == m)
            && self.d.map_or(true, |v| v == d)
            && self.max_n.map_or(true, |v| n <= v)
    }
}

/// Verdict-preserving shortcuts. All off by default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Pruning {
    /// Skip `(n, m)` with `d = 1`: such a binomial has two roots.
    pub trivial_d: bool,
    /// Over prime fields, skip `(n, m)` ruled out by the `d`-bounds.
    pub bounds: bool,
    /// Test one coefficient per d-class and expand the verdict to the class.
    pub classes: bool,
}

impl Pruning {
    pub const ALL: Pruning = Pruning {
        trivial_d: true,
        bounds: true,
        classes: true,
    };

    /// Everything except the bound-based shortcut, for runs that audit the
    /// bounds themselves.
    pub const SAFE: Pruning = Pruning {
        trivial_d: true,
        bounds: false,
        classes: true,
    };
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumOptions {
    pub filters: EnumFilters,
    pub pruning: Pruning,
    pub workers: usize,
    pub max_q: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            filters: EnumFilters::default(),
            pruning: Pruning::default(),
            workers: 1,
            max_q: DEFAULT_MAX_Q,
        }
    }
}

/// One permutation binomial, annotated with every bound check that applies
/// to its field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub ctx: FieldCtx,
    pub a: FieldElement,
    pub n: u64,
    pub m: u64,
    pub d: u64,
    pub is_perm: bool,
    pub class_id: FieldElement,
    pub thm7: Option<bool>,
    pub cor4: Option<Cor4Outcome>,
    pub cor5: Option<bool>,
    pub cor6: Option<bool>,
    pub cor8: Option<NonexistenceCase>,
}

impl SurveyRow {
    fn annotate(f: &Binomial, is_perm: bool, class_id: FieldElement) -> SurveyRow {
        let ctx = f.ctx();
        let (p, r, d) = (ctx.p(), ctx.r(), f.d());
        let prime = r == 1;
        SurveyRow {
            ctx: ctx.clone(),
            a: f.a(),
            n: f.n(),
            m: f.m(),
            d,
            is_perm,
            class_id,
            thm7: prime.then(|| prime_bound_holds(p, d)),
            cor4: prime
                .then(|| sharpened_bound(p, d, f.n(), f.m()).ok().map(|rep| rep.cor4_outcome()))
                .flatten(),
            cor5: (prime && f.m() == 1).then(|| {
                let n = f.n() as i64;
                (p as i64 - 1) <= (n - 1) * (n - 3)
            }),
            cor6: prime.then(|| is_f7_exception(f)),
            cor8: nonexistence_case(p, r as u64, d),
        }
    }

    pub fn q(&self) -> u64 {
        self.ctx.q()
    }

    pub fn binomial(&self) -> Binomial {
        Binomial::new(&self.ctx, self.a, self.n, self.m).expect("rows hold canonical binomials")
    }

    fn sort_key(&self) -> (u64, u64, u64, u32) {
        (self.ctx.q(), self.n, self.m, self.a.index())
    }

    pub fn to_record(&self) -> SurveyRecord {
        SurveyRecord {
            q: self.ctx.q(),
            p: self.ctx.p(),
            r: self.ctx.r(),
            a: self.ctx.format(self.a),
            n: self.n,
            m: self.m,
            d: self.d,
            is_perm: self.is_perm,
            class_id: self.ctx.format(self.class_id),
            thm7: self.thm7,
            cor4: self.cor4.map(|o| o.tag().to_string()),
            cor5: self.cor5,
            cor6: self.cor6,
            cor8: self.cor8.map(|c| c.tag().to_string()),
        }
    }

    pub fn from_record(ctx: &FieldCtx, rec: &SurveyRecord) -> Result<SurveyRow> {
        if rec.q != ctx.q() || rec.p != ctx.p() || rec.r != ctx.r() {
            return Err(Error::ParameterMismatch(format!("record for q = {} read over F_{}", rec.q, ctx.q())));
        }
        let tag = |t: &Option<String>, what: &str| -> Result<()> {
            match t {
                Some(s) if s.is_empty() => Err(Error::Parse(format!("empty {what} tag"))),
                _ => Ok(()),
            }
        };
        tag(&rec.cor4, "cor4")?;
        tag(&rec.cor8, "cor8")?;
        Ok(SurveyRow {
            ctx: ctx.clone(),
            a: ctx.parse(&rec.a)?,
            n: rec.n,
            m: rec.m,
            d: rec.d,
            is_perm: rec.is_perm,
            class_id: ctx.parse(&rec.class_id)?,
            thm7: rec.thm7,
            cor4: match &rec.cor4 {
                None => None,
                Some(t) => Some(
                    Cor4Outcome::from_tag(t).ok_or_else(|| Error::Parse(format!("cor4 tag {t:?}")))?,
                ),
            },
            cor5: rec.cor5,
            cor6: rec.cor6,
            cor8: match &rec.cor8 {
                None => None,
                Some(t) => Some(
                    NonexistenceCase::from_tag(t)
                        .ok_or_else(|| Error::Parse(format!("cor8 tag {t:?}")))?,
                ),
            },
        })
    }
}

/// Flat serialized row: CSV columns `q,p,r,a,n,m,d,is_perm,class_id,thm7,cor4,cor5,cor6,cor8`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub q: u64,
    pub p: u64,
    pub r: u32,
    pub a: String,
    pub n: u64,
    pub m: u64,
    pub d: u64,
    pub is_perm: bool,
    pub class_id: String,
    pub thm7: Option<bool>,
    pub cor4: Option<String>,
    pub cor5: Option<bool>,
    pub cor6: Option<bool>,
    pub cor8: Option<String>,
}

/// The field `F_q` with its default modulus, for a prime power `q`.
pub fn field_for_q(q: u64, max_q: u64) -> Result<FieldCtx> {
    if q > max_q {
        return Err(Error::CapExceeded { q, cap: max_q });
    }
    let f = factorize(q);
    match f.as_slice() {
        [(p, r)] => FieldCtx::with_cap(*p, *r, None, max_q),
        _ => Err(Error::ParameterMismatch(format!("{q} is not a prime power"))),
    }
}

fn pair_ruled_out(ctx: &FieldCtx, n: u64, m: u64, d: u64, pruning: Pruning) -> bool {
    if pruning.trivial_d && d == 1 {
        return true;
    }
    if pruning.bounds && ctx.r() == 1 {
        let p = ctx.p();
        if !prime_bound_holds(p, d) {
            return true;
        }
        if let Ok(rep) = sharpened_bound(p, d, n, m) {
            return rep.cor4_outcome() == Cor4Outcome::Inadmissible;
        }
    }
    false
}

fn rows_for_pair(ctx: &FieldCtx, n: u64, m: u64, d: u64, pruning: Pruning) -> Vec<SurveyRow> {
    let mut rows = Vec::new();
    if pruning.classes {
        let size = (ctx.q() - 1) / d;
        for i in 0..d {
            let rep = Binomial::new(ctx, ctx.gen_pow(i as i64), n, m).expect("canonical pair");
            if !binomial_criterion(&rep).is_perm {
                continue;
            }
            let members: Vec<FieldElement> =
                (0..size).map(|k| ctx.gen_pow((i + d * k) as i64)).collect();
            let class_id = *members.iter().min().expect("nonempty class");
            for a in members {
                let f = rep.with_coefficient(a).expect("nonzero member");
                rows.push(SurveyRow::annotate(&f, true, class_id));
            }
        }
    } else {
        for a in ctx.nonzero_elements() {
            let f = Binomial::new(ctx, a, n, m).expect("canonical pair");
            if binomial_criterion(&f).is_perm {
                rows.push(SurveyRow::annotate(&f, true, class_id_of(&f)));
            }
        }
    }
    rows
}

/// Every permutation binomial `a x^n + x^m` of `F_q` with `gcd(m, n) = 1`
/// matching the filters, sorted by `(n, m, a)`.
pub fn enumerate_perm_binomials(ctx: &FieldCtx, opts: &EnumOptions) -> Result<Vec<SurveyRow>> {
    let q = ctx.q();
    if q > opts.max_q {
        return Err(Error::CapExceeded { q, cap: opts.max_q });
    }
    let pairs: Vec<(u64, u64, u64)> = (2..q)
        .flat_map(|n| (1..n).map(move |m| (n, m)))
        .filter(|&(n, m)| gcd(n, m) == 1)
        .map(|(n, m)| (n, m, gcd(n - m, q - 1)))
        .filter(|&(n, m, d)| opts.filters.accepts(n, m, d))
        .filter(|&(n, m, d)| !pair_ruled_out(ctx, n, m, d, opts.pruning))
        .collect();
    let run = || -> Vec<SurveyRow> {
        pairs
            .par_iter()
            .flat_map_iter(|&(n, m, d)| rows_for_pair(ctx, n, m, d, opts.pruning))
            .collect()
    };
    let mut rows = if opts.workers <= 1 {
        pairs
            .iter()
            .flat_map(|&(n, m, d)| rows_for_pair(ctx, n, m, d, opts.pruning))
            .collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Inconsistent(format!("worker pool: {e}")))?
            .install(run)
    };
    rows.sort_by_key(SurveyRow::sort_key);
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cor5Violation {
    pub p: u64,
    pub n: u64,
    pub a: u64,
}

/// A `(p, r, d)` family predicted empty, and how many rows were found in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonexistenceConfirmation {
    pub q: u64,
    pub p: u64,
    pub r: u32,
    pub d: u64,
    pub case: NonexistenceCase,
    pub found: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
    /// Number of rows per `(q, d)`.
    pub counts: BTreeMap<(u64, u64), usize>,
    /// Prime-field rows with `p - 1 > d(d - 1)`.
    pub thm7_violations: Vec<SurveyRow>,
    /// `(p, d)` with `p - 1 = d(d - 1)` attained by some row.
    pub thm7_equality: BTreeSet<(u64, u64)>,
    /// Prime-field rows with `m = 1` and `p - 1 > (n - 1)(n - 3)`.
    pub cor5_violations: BTreeSet<Cor5Violation>,
    /// Prime-field rows with `d <= 4` outside the exceptional `F_7` list.
    pub small_d_outside_f7: Vec<SurveyRow>,
    pub nonexistence: Vec<NonexistenceConfirmation>,
}

impl SurveyReport {
    /// No row contradicts a claim that is stated without exceptions.
    pub fn consistent(&self) -> bool {
        self.thm7_violations.is_empty()
            && self.small_d_outside_f7.is_empty()
            && self.nonexistence.iter().all(|c| c.found == 0)
            && self
                .rows
                .iter()
                .all(|r| r.cor4 != Some(Cor4Outcome::Inadmissible))
    }
}

/// Enumerates each field and aggregates the bound checks.
pub fn survey_report(fields: &[FieldCtx], opts: &EnumOptions) -> Result<SurveyReport> {
    let mut report = SurveyReport::default();
    for ctx in fields {
        let rows = enumerate_perm_binomials(ctx, opts)?;
        let (p, r, q) = (ctx.p(), ctx.r(), ctx.q());
        for row in &rows {
            *report.counts.entry((q, row.d)).or_default() += 1;
            if row.thm7 == Some(false) {
                report.thm7_violations.push(row.clone());
            }
            if r == 1 && p - 1 == row.d * (row.d - 1) {
                report.thm7_equality.insert((p, row.d));
            }
            if row.cor5 == Some(false) {
                report.cor5_violations.insert(Cor5Violation {
                    p,
                    n: row.n,
                    a: row.a.index() as u64,
                });
            }
            if r == 1 && row.d <= 4 && row.cor6 != Some(true) {
                report.small_d_outside_f7.push(row.clone());
            }
        }
        for d in divisors(q - 1) {
            if opts.filters.d.is_some_and(|fd| fd != d) {
                continue;
            }
            if let Some(case) = nonexistence_case(p, r as u64, d) {
                report.nonexistence.push(NonexistenceConfirmation {
                    q,
                    p,
                    r,
                    d,
                    case,
                    found: rows.iter().filter(|row| row.d == d).count(),
                });
            }
        }
        report.rows.extend(rows);
    }
    Ok(report)
}

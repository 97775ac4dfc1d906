// SPDX-License-Identifier: Apache-2.0

//! The built-in acceptance suite: eleven end-to-end checks, each with a
//! time budget, run by `permbin verify` and by the `acceptance` test target.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{binom_mod_p, ext_gcd, factorize, gcd, is_prime};
use crate::binomial::Binomial;
use crate::bounds::{
    enumerate_perm_binomials, f7_exceptions, field_for_q, nonexistence_case, survey_report,
    Cor5Violation, EnumFilters, EnumOptions, Pruning,
};
use crate::descent::{descend, gcd_lcm_identity_holds, permutes_full_field, reduce_to_subfield, scan_subfield_equivalents, ReducedForm};
use crate::equivalence::d_class;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::permtest::{binomial_criterion, brute_force_is_perm, hermite_dickson_full};

/// Violations of `p - 1 <= (n - 1)(n - 3)` among permutation binomials
/// `a x^n + x` of `F_p`, `p <= 101`, as established by exhaustive evaluation.
pub const LINEAR_TERM_FIXTURE: &str = include_str!("../fixtures/linear_term_violations.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_q: u64,
    pub workers: usize,
    /// Replaces the embedded linear-term fixture.
    pub fixture: Option<PathBuf>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        let cfg = crate::config::Config::default();
        VerifyOptions {
            max_q: cfg.max_q,
            workers: cfg.workers,
            fixture: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        !matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, why) = match &self.status {
            Status::Pass => ("PASS", ""),
            Status::Fail(why) => ("FAIL", why.as_str()),
            Status::Skip(why) => ("SKIP", why.as_str()),
        };
        let note = [self.detail.as_str(), why]
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect::<Vec<_>>()
            .join("; ");
        write!(
            f,
            "{:>2}  {tag}  {:<28} {:>8.2}s / {:>4}s  {note}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
        )
    }
}

type Outcome = std::result::Result<String, String>;

enum Check {
    Done(Outcome),
    Skipped(String),
}

struct Criterion {
    name: &'static str,
    limit_secs: u64,
    run: fn(&VerifyOptions) -> Check,
}

const CRITERIA: [Criterion; 11] = [
    Criterion { name: "F_7 census", limit_secs: 1, run: f7_census },
    Criterion { name: "F_2 and F_3 empty", limit_secs: 1, run: tiny_fields },
    Criterion { name: "three-way oracle agreement", limit_secs: 300, run: oracle_agreement },
    Criterion { name: "d(d-1) bound sweep", limit_secs: 600, run: prime_bound_sweep },
    Criterion { name: "linear-term bound audit", limit_secs: 300, run: linear_term_audit },
    Criterion { name: "d-class coherence", limit_secs: 300, run: class_coherence },
    Criterion { name: "F_9 fixtures", limit_secs: 1, run: f9_fixtures },
    Criterion { name: "F_25 descent fixture", limit_secs: 1, run: f25_descent },
    Criterion { name: "descent iff scan", limit_secs: 600, run: descent_iff },
    Criterion { name: "nonexistence spot checks", limit_secs: 300, run: nonexistence_spots },
    Criterion { name: "helper properties", limit_secs: 30, run: helper_properties },
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

/// Runs criterion `id` (1-based).
pub fn run_one(id: usize, opts: &VerifyOptions) -> Result<CriterionResult> {
    let c = CRITERIA
        .get(id.wrapping_sub(1))
        .ok_or_else(|| Error::ParameterMismatch(format!("no criterion {id}")))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| Error::Inconsistent(format!("worker pool: {e}")))?;
    let start = Instant::now();
    let check = pool.install(|| (c.run)(opts));
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(c.limit_secs);
    let (status, detail) = match check {
        Check::Skipped(why) => (Status::Skip(why), String::new()),
        Check::Done(Err(why)) => (Status::Fail(why), String::new()),
        Check::Done(Ok(detail)) if elapsed > limit => {
            (Status::Fail(format!("over the {}s budget", c.limit_secs)), detail)
        }
        Check::Done(Ok(detail)) => (Status::Pass, detail),
    };
    Ok(CriterionResult {
        id,
        name: c.name,
        status,
        detail,
        elapsed,
        limit,
    })
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionResult> {
    (1..=CRITERIA.len())
        .map(|id| run_one(id, opts).expect("id in range"))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(q: u64, opts: &VerifyOptions) -> std::result::Result<FieldCtx, String> {
    field_for_q(q, opts.max_q).map_err(|e| e.to_string())
}

fn enum_opts(opts: &VerifyOptions, filters: EnumFilters) -> EnumOptions {
    EnumOptions {
        filters,
        pruning: Pruning::SAFE,
        workers: 1,
        max_q: opts.max_q,
    }
}

fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| factorize(q).len() == 1).collect()
}

fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&p| is_prime(p)).collect()
}

fn f7_census(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        let ctx = field(7, opts)?;
        let rows = enumerate_perm_binomials(&ctx, &enum_opts(opts, EnumFilters::default()))
            .map_err(|e| e.to_string())?;
        let found: BTreeSet<(u32, u64, u64)> = rows.iter().map(|r| (r.a.index(), r.n, r.m)).collect();
        let list = f7_exceptions(&ctx).map_err(|e| e.to_string())?;
        for f in &list {
            ensure(brute_force_is_perm(f).is_perm, || format!("{f} does not permute F_7"))?;
        }
        let expected: BTreeSet<(u32, u64, u64)> = list.iter().map(|f| (f.a().index(), f.n(), f.m())).collect();
        ensure(rows.len() == 4 && found == expected, || format!("found {found:?}, expected {expected:?}"))?;
        Ok(format!("{} rows", rows.len()))
    })())
}

fn tiny_fields(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        for q in [2, 3] {
            let ctx = field(q, opts)?;
            let rows = enumerate_perm_binomials(&ctx, &enum_opts(opts, EnumFilters::default()))
                .map_err(|e| e.to_string())?;
            ensure(rows.is_empty(), || format!("F_{q} has {} rows", rows.len()))?;
        }
        Ok("0 rows each".into())
    })())
}

fn all_binomials(ctx: &FieldCtx) -> Vec<Binomial> {
    let q = ctx.q();
    let mut out = Vec::new();
    for n in 2..q {
        for m in 1..n {
            for a in ctx.nonzero_elements() {
                out.push(Binomial::new(ctx, a, n, m).expect("canonical"));
            }
        }
    }
    out
}

fn oracle_agreement(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        let mut total = 0usize;
        for q in prime_powers_up_to(64) {
            let ctx = field(q, opts)?;
            let fs = all_binomials(&ctx);
            total += fs.len();
            let bad = fs.par_iter().find_any(|f| {
                let brute = brute_force_is_perm(f).is_perm;
                let hd = hermite_dickson_full(&ctx, f.terms()).map(|v| v.is_perm);
                binomial_criterion(f).is_perm != brute || hd != Ok(brute)
            });
            if let Some(f) = bad {
                return Err(format!("methods disagree on {f} over F_{q}"));
            }
        }
        Ok(format!("{total} binomials"))
    })())
}

fn prime_bound_sweep(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        let fields: Vec<FieldCtx> = primes_up_to(101)
            .into_iter()
            .map(|p| field(p, opts))
            .collect::<std::result::Result<_, _>>()?;
        let report = survey_report(&fields, &enum_opts(opts, EnumFilters::default()))
            .map_err(|e| e.to_string())?;
        ensure(report.thm7_violations.is_empty(), || {
            format!("{} rows exceed d(d-1)", report.thm7_violations.len())
        })?;
        for witness in [(7, 3), (31, 6)] {
            ensure(report.thm7_equality.contains(&witness), || {
                format!("no equality row at (p, d) = {witness:?}")
            })?;
        }
        Ok(format!(
            "{} rows, equality at {:?}",
            report.rows.len(),
            report.thm7_equality
        ))
    })())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct LinearTermFixture {
    pmax: u64,
    violations: Vec<[u64; 3]>,
}

fn load_fixture(opts: &VerifyOptions) -> std::result::Result<LinearTermFixture, String> {
    let text = match &opts.fixture {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("fixture {}: {e}", path.display()))?,
        None => LINEAR_TERM_FIXTURE.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| format!("fixture: {e}"))
}

/// Violations found by evaluating every `a x^n + x` of every `F_p`.
pub fn linear_term_oracle(pmax: u64) -> BTreeSet<Cor5Violation> {
    primes_up_to(pmax)
        .into_par_iter()
        .flat_map_iter(|p| {
            let ctx = FieldCtx::prime(p).expect("prime");
            let mut out = Vec::new();
            for n in 2..p {
                let bound = (n as i64 - 1) * (n as i64 - 3);
                if p as i64 - 1 <= bound {
                    continue;
                }
                for a in ctx.nonzero_elements() {
                    let f = Binomial::new(&ctx, a, n, 1).expect("canonical");
                    if brute_force_is_perm(&f).is_perm {
                        out.push(Cor5Violation { p, n, a: a.index() as u64 });
                    }
                }
            }
            out
        })
        .collect()
}

fn linear_term_audit(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        let fixture = load_fixture(opts)?;
        let fields: Vec<FieldCtx> = primes_up_to(fixture.pmax)
            .into_iter()
            .map(|p| field(p, opts))
            .collect::<std::result::Result<_, _>>()?;
        let filters = EnumFilters { m: Some(1), ..Default::default() };
        let report = survey_report(&fields, &enum_opts(opts, filters)).map_err(|e| e.to_string())?;
        let oracle = linear_term_oracle(fixture.pmax);
        ensure(report.cor5_violations == oracle, || {
            format!("report {:?} != oracle {:?}", report.cor5_violations, oracle)
        })?;
        let frozen: BTreeSet<Cor5Violation> = fixture
            .violations
            .iter()
            .map(|&[p, n, a]| Cor5Violation { p, n, a })
            .collect();
        ensure(frozen == oracle, || format!("fixture {frozen:?} != oracle {oracle:?}"))?;
        let shown: Vec<String> = oracle.iter().map(|v| format!("{}x^{}+x/F_{}", v.a, v.n, v.p)).collect();
        Ok(format!("violations: {}", shown.join(", ")))
    })())
}

fn class_coherence(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        let mut classes = 0usize;
        for q in prime_powers_up_to(64) {
            let ctx = field(q, opts)?;
            let pairs: Vec<(u64, u64)> = (2..q).flat_map(|n| (1..n).map(move |m| (n, m))).collect();
            let counts: Vec<std::result::Result<usize, String>> = pairs
                .par_iter()
                .map(|&(n, m)| {
                    let verdicts: HashMap<FieldElement, bool> = ctx
                        .nonzero_elements()
                        .map(|a| (a, brute_force_is_perm(&Binomial::new(&ctx, a, n, m).unwrap()).is_perm))
                        .collect();
                    let mut seen = BTreeSet::new();
                    let mut count = 0;
                    for a in ctx.nonzero_elements() {
                        if seen.contains(&a) {
                            continue;
                        }
                        let f = Binomial::new(&ctx, a, n, m).unwrap();
                        let class = d_class(&f);
                        let want = ((q - 1) / f.d()) as usize;
                        let distinct: BTreeSet<FieldElement> = class.members.iter().copied().collect();
                        ensure(class.size() == want && distinct.len() == want, || {
                            format!("class of {f} has {} members, expected {want}", distinct.len())
                        })?;
                        ensure(class.members.iter().all(|b| verdicts[b] == verdicts[&a]), || {
                            format!("class of {f} mixes verdicts")
                        })?;
                        ensure(distinct.iter().all(|b| seen.insert(*b)), || {
                            format!("classes for ({n}, {m}) over F_{q} overlap")
                        })?;
                        count += 1;
                    }
                    ensure(seen.len() as u64 == q - 1, || format!("classes miss coefficients for ({n}, {m})"))?;
                    Ok(count)
                })
                .collect();
            for c in counts {
                classes += c?;
            }
        }
        Ok(format!("{classes} classes"))
    })())
}

fn f9_fixtures(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        let ctx = field(9, opts)?;
        let t = ctx.from_coeffs(&[0, 1]).map_err(|e| e.to_string())?;
        for a in [t, ctx.neg(t)] {
            let f = Binomial::new(&ctx, a, 5, 1).unwrap();
            ensure(brute_force_is_perm(&f).is_perm && binomial_criterion(&f).is_perm, || {
                format!("{f} does not permute F_9")
            })?;
        }
        let mut count = 0;
        for a in ctx.nonzero_elements() {
            let f = Binomial::new(&ctx, a, 3, 1).unwrap();
            let perm = brute_force_is_perm(&f).is_perm;
            let neg_square = ctx.is_dth_power(ctx.neg(a), 2).unwrap();
            ensure(perm != neg_square, || format!("{f}: permutes = {perm}, -a square = {neg_square}"))?;
            ensure(perm == binomial_criterion(&f).is_perm, || format!("criterion disagrees on {f}"))?;
            count += perm as usize;
        }
        ensure(count == 4, || format!("a x^3 + x permutes for {count} coefficients"))?;
        Ok("t x^5 + x, -t x^5 + x, 4 cubic coefficients".into())
    })())
}

fn f25_descent(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        if opts.max_q < 25 {
            return Err("max_q below 25".into());
        }
        let ctx = FieldCtx::new(5, 2, None).map_err(|e| e.to_string())?;
        let f = Binomial::new(&ctx, ctx.from_int(3), 5, 1).unwrap();
        ensure(brute_force_is_perm(&f).is_perm, || "3x^5 + x does not permute F_25".into())?;
        ensure(!ctx.is_dth_power(ctx.from_int(2), 4).unwrap(), || "2 is a fourth power".into())?;
        let rep = descend(&f, 1).map_err(|e| e.to_string())?;
        ensure(rep.coefficients == vec![ctx.from_int(2), ctx.from_int(3)], || {
            format!("coefficients {:?}", rep.coefficients)
        })?;
        for (&b, form) in rep.coefficients.iter().zip(&rep.reduced) {
            let want = ReducedForm::Monomial { coeff: ctx.add(b, ctx.one()), k: 1, lambda: 1, mu: 0 };
            ensure(*form == want, || format!("reduced form {form:?}"))?;
            ensure(permutes_full_field(&f.with_coefficient(b).unwrap()), || "descended map is not a permutation".into())?;
        }
        Ok("coefficients {2, 3}, reduced 3x and 4x".into())
    })())
}

fn descent_iff(opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        let mut checked = 0usize;
        for q in [4, 8, 9, 16, 25, 27, 32, 49, 64] {
            let ctx = field(q, opts)?;
            let r = ctx.r() as u64;
            let perms: Vec<Binomial> = all_binomials(&ctx)
                .into_par_iter()
                .filter(|f| binomial_criterion(f).is_perm)
                .collect();
            let results: Vec<std::result::Result<usize, String>> = perms
                .par_iter()
                .map(|f| {
                    let mut n = 0;
                    for s in (1..=r).filter(|s| r % s == 0) {
                        let rep = descend(f, s).map_err(|e| format!("{f}, s = {s}: {e}"))?;
                        let scan = scan_subfield_equivalents(f, s).map_err(|e| e.to_string())?;
                        ensure(rep.exists == !scan.is_empty() && rep.coefficients == scan, || {
                            format!("{f}, s = {s}: construction {:?} vs scan {scan:?}", rep.coefficients)
                        })?;
                        if rep.exists {
                            let qs = ctx.p().pow(s as u32);
                            ensure(rep.coefficients.len() as u64 == gcd(qs - 1, (q - 1) / f.d()), || {
                                format!("{f}, s = {s}: wrong count")
                            })?;
                            ensure(rep.reduced_maps_distinct(&ctx).unwrap_or(false), || {
                                format!("{f}, s = {s}: reduced maps coincide")
                            })?;
                            for &b in &rep.coefficients {
                                let g = f.with_coefficient(b).unwrap();
                                ensure(permutes_full_field(&g), || format!("{g} does not permute F_{q}"))?;
                                reduce_to_subfield(&g, s).map_err(|e| format!("{g}: {e}"))?;
                            }
                        }
                        n += 1;
                    }
                    Ok(n)
                })
                .collect();
            for res in results {
                checked += res?;
            }
        }
        Ok(format!("{checked} (f, s) pairs"))
    })())
}

fn nonexistence_spots(opts: &VerifyOptions) -> Check {
    if opts.max_q < 125 {
        return Check::Skipped(format!("max_q = {} is below 125", opts.max_q));
    }
    Check::Done((|| {
        let mut notes = Vec::new();
        for (q, d) in [(125, 2), (13, 3), (49, 3)] {
            let ctx = field(q, opts)?;
            let Some(case) = nonexistence_case(ctx.p(), ctx.r() as u64, d) else {
                notes.push(format!("F_{q} d={d} SKIP (no case applies)"));
                continue;
            };
            let filters = EnumFilters { d: Some(d), ..Default::default() };
            let rows = enumerate_perm_binomials(&ctx, &enum_opts(opts, filters)).map_err(|e| e.to_string())?;
            ensure(rows.is_empty(), || format!("F_{q} has {} rows with d = {d}", rows.len()))?;
            let pairs: Vec<(u64, u64)> = (2..q)
                .flat_map(|n| (1..n).map(move |m| (n, m)))
                .filter(|&(n, m)| gcd(n - m, q - 1) == d)
                .collect();
            let hit = pairs.par_iter().find_map_any(|&(n, m)| {
                ctx.nonzero_elements()
                    .map(|a| Binomial::new(&ctx, a, n, m).unwrap())
                    .find(|f| brute_force_is_perm(f).is_perm)
            });
            if let Some(f) = hit {
                return Err(format!("{f} permutes F_{q} with d = {d}"));
            }
            notes.push(format!("F_{q} d={d} case {case}: 0 rows, brute force agrees"));
        }
        Ok(notes.join("; "))
    })())
}

fn factorial_binom_mod(l: u64, j: u64, p: u64) -> u64 {
    if j > l {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..j {
        acc = acc * (l - i) as u128 / (i + 1) as u128;
    }
    (acc % p as u128) as u64
}

fn helper_properties(_opts: &VerifyOptions) -> Check {
    Check::Done((|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let (a, b, c) = (rng.gen_range(1..=1_000_000), rng.gen_range(1..=1_000_000), rng.gen_range(1..=1_000_000));
            ensure(gcd_lcm_identity_holds(a, b, c), || format!("gcd/lcm identity fails at {a}, {b}, {c}"))?;
        }
        for p in primes_up_to(31) {
            for l in 0..=30u64 {
                for j in 0..=30u64 {
                    let lucas = binom_mod_p(l, j as i64, p);
                    ensure(lucas == factorial_binom_mod(l, j, p), || format!("C({l}, {j}) mod {p}"))?;
                }
            }
        }
        for _ in 0..10_000 {
            let x: i64 = rng.gen_range(-1_000_000_000_000..=1_000_000_000_000);
            let y: i64 = rng.gen_range(-1_000_000_000_000..=1_000_000_000_000);
            if x == 0 && y == 0 {
                continue;
            }
            let t = ext_gcd(x, y).map_err(|e| e.to_string())?;
            let lhs = t.u as i128 * x as i128 + t.v as i128 * y as i128;
            ensure(lhs == t.g as i128 && t.g as u64 == gcd(x.unsigned_abs(), y.unsigned_abs()), || {
                format!("Bezout fails at {x}, {y}")
            })?;
        }
        Ok("10^4 triples, l, j <= 30, 10^4 pairs".into())
    })())
}

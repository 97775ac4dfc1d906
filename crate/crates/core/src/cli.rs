// SPDX-License-Identifier: Apache-2.0

//! The `permbin` command line. [`run`] returns the text and exit code
//! instead of printing, so the binary stays a one-liner and tests can drive
//! every command in-process.
//!
//! Exit codes: 0 success (or "is a permutation"), 1 a violated check or a
//! non-permutation, 2 a usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::is_prime;
use crate::binomial::Binomial;
use crate::bounds::{
    enumerate_perm_binomials, field_for_q, survey_report, Claim, Cor4Outcome, EnumFilters,
    EnumOptions, Pruning, SurveyReport, SurveyRow,
};
use crate::config::{Config, OutputFormat};
use crate::descent::{descend, descend_to_intersection};
use crate::equivalence::d_class;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::permtest::{binomial_criterion, brute_force_is_perm, hermite_dickson_full, PermVerdict};
use crate::verify::{self, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "permbin", version, about = "Permutation binomials over finite fields")]
pub struct Cli {
    /// TOML file with max_q, workers, output_format, assert_mode.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Largest field size any command may build.
    #[arg(long, global = true)]
    pub max_q: Option<u64>,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Exit with status 1 when a requested check finds a violation.
    #[arg(long = "assert", global = true)]
    pub assert_mode: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Field size, a prime or prime power.
    #[arg(long, conflicts_with_all = ["p", "r", "modulus"])]
    pub q: Option<u64>,
    #[arg(long, requires = "r")]
    pub p: Option<u64>,
    #[arg(long, requires = "p")]
    pub r: Option<u32>,
    /// Monic irreducible modulus `c0,c1,...,1`, constant term first.
    #[arg(long, requires = "p")]
    pub modulus: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Hd,
    Criterion,
    /// Criterion and brute force.
    Both,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether `a x^n + x^m` permutes the field.
    Test {
        #[command(flatten)]
        field: FieldArgs,
        /// `a,n,m` with `a` in element text format.
        #[arg(long)]
        binomial: String,
        #[arg(long, value_enum, default_value = "criterion")]
        method: MethodArg,
    },
    /// List every permutation binomial with `gcd(m, n) = 1`.
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        max_n: Option<u64>,
        /// Enable all verdict-preserving shortcuts.
        #[arg(long)]
        prune: bool,
    },
    /// The d-class of a binomial, or every class for its exponents.
    Classes {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        binomial: String,
        #[arg(long)]
        all: bool,
    },
    /// Move the coefficient into a subfield.
    Descend {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        binomial: String,
        /// Subfield degree, dividing r.
        #[arg(long, conflicts_with = "t", required_unless_present = "t")]
        s: Option<u64>,
        /// Any degree; the subfield used is of degree gcd(r, t).
        #[arg(long)]
        t: Option<u64>,
    },
    /// Survey fields and audit the bounds on p in terms of d.
    Bounds {
        /// Survey every prime up to this bound.
        #[arg(long, conflicts_with = "qs", required_unless_present = "qs")]
        pmax: Option<u64>,
        /// Comma separated field sizes.
        #[arg(long = "q", value_delimiter = ',')]
        qs: Vec<u64>,
        /// Checks to report: thm7, cor4, cor5, cor6, cor8 (default: all).
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
    },
    /// Run the acceptance suite.
    Verify {
        /// Replacement for the embedded linear-term violation fixture.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Run only these criteria (1-based).
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: String) -> Self {
        Output {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// Parses `args` (including the program name) and runs the command;
/// `env` supplies environment variables.
pub fn run<I, T, E>(args: I, env: E) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    E: Fn(&str) -> Option<String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::usage(text)
            } else {
                Output::ok(text)
            };
        }
    };
    let cfg = match resolve_config(&cli, env) {
        Ok(cfg) => cfg,
        Err(e) => return Output::usage(format!("error: {e}\n")),
    };
    match dispatch(&cli.command, &cfg) {
        Ok(out) => out,
        Err(e) => Output::usage(format!("error: {e}\n")),
    }
}

fn resolve_config<E>(cli: &Cli, env: E) -> Result<Config>
where
    E: Fn(&str) -> Option<String>,
{
    let base = match &cli.config {
        Some(path) => Config::from_file(path)?,
        None => Config::default(),
    };
    let mut cfg = base.with_env(env)?;
    if let Some(v) = cli.max_q {
        cfg.max_q = v;
    }
    if let Some(v) = cli.workers {
        cfg.workers = v;
    }
    if cli.format.is_some() {
        cfg.output_format = cli.format;
    }
    cfg.assert_mode |= cli.assert_mode;
    cfg.validate()?;
    Ok(cfg)
}

fn build_field(args: &FieldArgs, cfg: &Config) -> Result<FieldCtx> {
    match (args.q, args.p, args.r) {
        (Some(q), None, None) => field_for_q(q, cfg.max_q),
        (None, Some(p), Some(r)) => {
            let modulus = args
                .modulus
                .as_deref()
                .map(|text| {
                    text.split(',')
                        .map(|c| {
                            c.trim()
                                .parse::<u64>()
                                .map_err(|_| Error::Parse(format!("modulus coefficient {c:?}")))
                        })
                        .collect::<Result<Vec<u64>>>()
                })
                .transpose()?;
            FieldCtx::with_cap(p, r, modulus.as_deref(), cfg.max_q)
        }
        _ => Err(Error::Parse("give --q N or --p P --r R".into())),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn dispatch(command: &Command, cfg: &Config) -> Result<Output> {
    match command {
        Command::Test {
            field,
            binomial,
            method,
        } => cmd_test(&build_field(field, cfg)?, binomial, *method, cfg),
        Command::Enumerate {
            field,
            d,
            n,
            m,
            max_n,
            prune,
        } => {
            let ctx = build_field(field, cfg)?;
            let filters = EnumFilters {
                d: *d,
                n: *n,
                m: *m,
                max_n: *max_n,
            };
            cmd_enumerate(&ctx, filters, *prune, cfg)
        }
        Command::Classes {
            field,
            binomial,
            all,
        } => cmd_classes(&build_field(field, cfg)?, binomial, *all, cfg),
        Command::Descend {
            field,
            binomial,
            s,
            t,
        } => {
            let ctx = build_field(field, cfg)?;
            let f = Binomial::parse(&ctx, binomial)?;
            let report = match (s, t) {
                (Some(s), _) => descend(&f, *s)?,
                (None, Some(t)) => descend_to_intersection(&f, *t)?,
                (None, None) => return Err(Error::Parse("give --s or --t".into())),
            };
            let out = match cfg.output_format {
                Some(OutputFormat::Text) => {
                    let coeffs: Vec<String> = report.coefficients.iter().map(|&b| ctx.format(b)).collect();
                    format!(
                        "s = {}: {} (order {}), coefficients [{}]\n",
                        report.s,
                        if report.exists { "descends" } else { "does not descend" },
                        report.delta,
                        coeffs.join("; ")
                    )
                }
                _ => to_json(&report.to_json(&ctx)) + "\n",
            };
            Ok(Output::ok(out))
        }
        Command::Bounds { pmax, qs, check } => cmd_bounds(*pmax, qs, check, cfg),
        Command::Verify { fixture, only } => cmd_verify(fixture.clone(), only, cfg),
    }
}

fn verdict_text(ctx: &FieldCtx, v: &PermVerdict) -> String {
    let json = v.to_json(ctx);
    format!(
        "{} ({}): {}",
        if v.is_perm { "permutation" } else { "not a permutation" },
        to_json(&json.method).trim_matches('"'),
        to_json(&json.witness)
    )
}

fn cmd_test(ctx: &FieldCtx, text: &str, method: MethodArg, cfg: &Config) -> Result<Output> {
    let f = Binomial::parse(ctx, text)?;
    let mut verdicts = Vec::new();
    if matches!(method, MethodArg::Criterion | MethodArg::Both | MethodArg::All) {
        verdicts.push(binomial_criterion(&f));
    }
    if matches!(method, MethodArg::Hd | MethodArg::All) {
        verdicts.push(hermite_dickson_full(ctx, f.terms())?);
    }
    if matches!(method, MethodArg::Brute | MethodArg::Both | MethodArg::All) {
        verdicts.push(brute_force_is_perm(&f));
    }
    let mut stdout = String::new();
    for v in &verdicts {
        match cfg.output_format {
            Some(OutputFormat::Text) => writeln!(stdout, "{}", verdict_text(ctx, v)).unwrap(),
            _ => writeln!(stdout, "{}", to_json(&v.to_json(ctx))).unwrap(),
        }
    }
    let is_perm = verdicts[0].is_perm;
    let agree = verdicts.iter().all(|v| v.is_perm == is_perm);
    Ok(Output {
        code: if is_perm && agree { 0 } else { 1 },
        stdout,
        stderr: if agree {
            String::new()
        } else {
            "error: methods disagree\n".into()
        },
    })
}

fn enum_options(cfg: &Config, filters: EnumFilters, pruning: Pruning) -> EnumOptions {
    EnumOptions {
        filters,
        pruning,
        workers: cfg.workers,
        max_q: cfg.max_q,
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn rows_text(rows: &[SurveyRow]) -> String {
    let mut out = String::new();
    writeln!(out, "{:>6} {:>12} {:>6} {:>6} {:>4} {:>12} {:>5} {:>12} {:>5} {:>5} {:>4}", "q", "a", "n", "m", "d", "class_id", "thm7", "cor4", "cor5", "cor6", "cor8").unwrap();
    for row in rows {
        let rec = row.to_record();
        writeln!(
            out,
            "{:>6} {:>12} {:>6} {:>6} {:>4} {:>12} {:>5} {:>12} {:>5} {:>5} {:>4}",
            rec.q,
            rec.a,
            rec.n,
            rec.m,
            rec.d,
            rec.class_id,
            opt(&rec.thm7),
            opt(&rec.cor4),
            opt(&rec.cor5),
            opt(&rec.cor6),
            opt(&rec.cor8)
        )
        .unwrap();
    }
    out
}

/// Rows as CSV with a header line.
pub fn rows_csv(rows: &[SurveyRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record([
            "q", "p", "r", "a", "n", "m", "d", "is_perm", "class_id", "thm7", "cor4", "cor5",
            "cor6", "cor8",
        ])
        .expect("in-memory write");
    }
    for row in rows {
        w.serialize(row.to_record()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Rows as JSON lines.
pub fn rows_json_lines(rows: &[SurveyRow]) -> String {
    rows.iter().map(|r| to_json(&r.to_record()) + "\n").collect()
}

fn counts_footer(rows: &[SurveyRow]) -> String {
    let mut per_d: BTreeMap<u64, usize> = BTreeMap::new();
    for row in rows {
        *per_d.entry(row.d).or_default() += 1;
    }
    let parts: Vec<String> = per_d.iter().map(|(d, c)| format!("d={d}: {c}")).collect();
    format!("# {} rows; {}\n", rows.len(), if parts.is_empty() { "none".into() } else { parts.join(", ") })
}

fn cmd_enumerate(ctx: &FieldCtx, filters: EnumFilters, prune: bool, cfg: &Config) -> Result<Output> {
    let pruning = if prune { Pruning::ALL } else { Pruning::default() };
    let rows = enumerate_perm_binomials(ctx, &enum_options(cfg, filters, pruning))?;
    let footer = counts_footer(&rows);
    Ok(match cfg.output_format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => Output {
            code: 0,
            stdout: rows_csv(&rows),
            stderr: footer,
        },
        OutputFormat::Json => Output {
            code: 0,
            stdout: rows_json_lines(&rows),
            stderr: footer,
        },
        OutputFormat::Text => Output::ok(rows_text(&rows) + &footer),
    })
}

fn cmd_classes(ctx: &FieldCtx, text: &str, all: bool, cfg: &Config) -> Result<Output> {
    let f = Binomial::parse(ctx, text)?;
    let mut classes = Vec::new();
    if all {
        let mut seen = std::collections::BTreeSet::new();
        for a in ctx.nonzero_elements() {
            if seen.contains(&a) {
                continue;
            }
            let class = d_class(&f.with_coefficient(a)?);
            seen.extend(class.members.iter().copied());
            classes.push(class);
        }
        classes.sort_by_key(|c| c.class_id);
    } else {
        classes.push(d_class(&f));
    }
    let mut out = String::new();
    for class in &classes {
        let is_perm = binomial_criterion(&class.base).is_perm;
        let json = class.to_json(is_perm);
        match cfg.output_format {
            Some(OutputFormat::Text) => writeln!(
                out,
                "class {} (size {}): {}{}",
                json.class_id,
                json.size,
                json.members.join("; "),
                if is_perm { "  permutations" } else { "" }
            )
            .unwrap(),
            _ => writeln!(out, "{}", to_json(&json)).unwrap(),
        }
    }
    Ok(Output::ok(out))
}

#[derive(Debug, Serialize)]
struct CheckSummary {
    check: &'static str,
    holds: bool,
    violations: usize,
    detail: String,
}

fn summarize(claim: Claim, report: &SurveyReport) -> CheckSummary {
    let (violations, detail) = match claim {
        Claim::Thm7 => (
            report.thm7_violations.len(),
            format!("equality at (p, d) in {:?}", report.thm7_equality),
        ),
        Claim::Cor4 => {
            let bad = report
                .rows
                .iter()
                .filter(|r| r.cor4 == Some(Cor4Outcome::Inadmissible))
                .count();
            let exceptional = report
                .rows
                .iter()
                .filter(|r| r.cor4 == Some(Cor4Outcome::Exceptional))
                .count();
            (bad, format!("{exceptional} rows in the exceptional family"))
        }
        Claim::Cor5 => {
            let list: Vec<String> = report
                .cor5_violations
                .iter()
                .map(|v| format!("{}x^{}+x over F_{}", v.a, v.n, v.p))
                .collect();
            (report.cor5_violations.len(), format!("violations: [{}]", list.join(", ")))
        }
        Claim::Cor6 => (
            report.small_d_outside_f7.len(),
            format!(
                "{} rows with d <= 4, all on the F_7 list when 0 violations",
                report.rows.iter().filter(|r| r.ctx.r() == 1 && r.d <= 4).count()
            ),
        ),
        Claim::Cor8 => {
            let bad: Vec<_> = report.nonexistence.iter().filter(|c| c.found > 0).collect();
            (
                bad.iter().map(|c| c.found).sum(),
                format!("{} empty families confirmed", report.nonexistence.len() - bad.len()),
            )
        }
    };
    CheckSummary {
        check: claim.tag(),
        holds: violations == 0,
        violations,
        detail,
    }
}

fn cmd_bounds(pmax: Option<u64>, qs: &[u64], check: &[String], cfg: &Config) -> Result<Output> {
    let sizes: Vec<u64> = match pmax {
        Some(pmax) => (2..=pmax).filter(|&p| is_prime(p)).collect(),
        None => qs.to_vec(),
    };
    let fields = sizes
        .iter()
        .map(|&q| field_for_q(q, cfg.max_q))
        .collect::<Result<Vec<_>>>()?;
    let claims = if check.is_empty() || check.iter().any(|c| c == "all") {
        Claim::ALL.to_vec()
    } else {
        check
            .iter()
            .map(|c| Claim::from_tag(c).ok_or_else(|| Error::Parse(format!("unknown check {c:?}"))))
            .collect::<Result<Vec<_>>>()?
    };
    // The bound-based shortcut would make these audits vacuous.
    let report = survey_report(&fields, &enum_options(cfg, EnumFilters::default(), Pruning::SAFE))?;
    let summaries: Vec<CheckSummary> = claims.iter().map(|&c| summarize(c, &report)).collect();
    let mut out = String::new();
    for s in &summaries {
        match cfg.output_format {
            Some(OutputFormat::Text) => writeln!(
                out,
                "{:<5} {:<5} {:>4} violations  {}",
                s.check,
                if s.holds { "ok" } else { "FAIL" },
                s.violations,
                s.detail
            )
            .unwrap(),
            _ => writeln!(out, "{}", to_json(s)).unwrap(),
        }
    }
    let violated = summaries.iter().any(|s| !s.holds);
    Ok(Output {
        code: if cfg.assert_mode && violated { 1 } else { 0 },
        stdout: out,
        stderr: String::new(),
    })
}

fn cmd_verify(fixture: Option<PathBuf>, only: &[usize], cfg: &Config) -> Result<Output> {
    let opts = VerifyOptions {
        max_q: cfg.max_q,
        workers: cfg.workers,
        fixture,
    };
    let ids: Vec<usize> = if only.is_empty() {
        (1..=verify::criterion_count()).collect()
    } else {
        only.to_vec()
    };
    let mut out = String::new();
    let mut all_ok = true;
    for id in ids {
        let res = verify::run_one(id, &opts)?;
        all_ok &= res.passed();
        writeln!(out, "{res}").unwrap();
    }
    writeln!(out, "{}", if all_ok { "all criteria passed" } else { "some criteria FAILED" }).unwrap();
    Ok(Output {
        code: if all_ok { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    })
}

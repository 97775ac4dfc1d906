// SPDX-License-Identifier: Apache-2.0

//! Survey-scale invariants of the enumeration engine and the bound checks.

use permbin::arith::{divisors, factorize, is_prime};
use permbin::bounds::{
    enumerate_perm_binomials, field_for_q, nonexistence_case, sharpened_bound, survey_report,
    Cor4Outcome, EnumFilters, EnumOptions, Pruning,
};
use permbin::field::{FieldCtx, DEFAULT_MAX_Q};

fn prime_powers(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| factorize(q).len() == 1).collect()
}

fn opts(pruning: Pruning, filters: EnumFilters) -> EnumOptions {
    EnumOptions {
        filters,
        pruning,
        workers: 4,
        max_q: DEFAULT_MAX_Q,
    }
}

#[test]
fn pruning_never_changes_rows() {
    for q in prime_powers(32) {
        let ctx = field_for_q(q, DEFAULT_MAX_Q).unwrap();
        let reference = enumerate_perm_binomials(&ctx, &EnumOptions::default()).unwrap();
        for pruning in [Pruning::SAFE, Pruning::ALL] {
            let rows = enumerate_perm_binomials(&ctx, &opts(pruning, EnumFilters::default())).unwrap();
            assert_eq!(rows, reference, "q = {q}, {pruning:?}");
        }
    }
}

fn check_empty_families(limit: u64) -> usize {
    let mut checked = 0;
    for q in prime_powers(limit) {
        let f = factorize(q);
        let (p, r) = f[0];
        let ds: Vec<u64> = divisors(q - 1)
            .into_iter()
            .filter(|&d| nonexistence_case(p, r as u64, d).is_some())
            .collect();
        if ds.is_empty() {
            continue;
        }
        let ctx = FieldCtx::new(p, r, None).unwrap();
        for d in ds {
            let filters = EnumFilters { d: Some(d), ..Default::default() };
            let rows = enumerate_perm_binomials(&ctx, &opts(Pruning::SAFE, filters)).unwrap();
            assert!(rows.is_empty(), "F_{q} has a permutation binomial with d = {d}");
            checked += 1;
        }
    }
    checked
}

#[test]
fn empty_families_are_empty_up_to_256() {
    assert!(check_empty_families(256) > 50);
}

/// The full desk-scale range; takes several minutes even in release mode.
#[test]
#[ignore]
fn empty_families_are_empty_up_to_2048() {
    assert!(check_empty_families(2048) > 500);
}

#[test]
fn small_d_only_over_f7() {
    let fields: Vec<FieldCtx> = (2..=101)
        .filter(|&p| is_prime(p))
        .map(|p| FieldCtx::prime(p).unwrap())
        .collect();
    let filters = EnumFilters::default();
    let report = survey_report(&fields, &opts(Pruning::SAFE, filters)).unwrap();
    assert!(report.small_d_outside_f7.is_empty());
    let small: Vec<_> = report.rows.iter().filter(|r| r.d <= 4).collect();
    assert_eq!(small.len(), 4);
    assert!(small.iter().all(|r| r.ctx.p() == 7 && r.d == 3 && r.cor6 == Some(true)));
    assert!(report.thm7_violations.is_empty());
    assert!(report.consistent());
    for row in &report.rows {
        let rep = sharpened_bound(row.ctx.p(), row.d, row.n, row.m).unwrap();
        assert!(rep.exception_recomputes());
        assert_ne!(rep.cor4_outcome(), Cor4Outcome::Inadmissible);
    }
    let equality: Vec<_> = report.thm7_equality.iter().copied().collect();
    assert_eq!(equality, vec![(7, 3), (31, 6)]);
}

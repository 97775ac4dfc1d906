// SPDX-License-Identifier: Apache-2.0

//! Surveys prime fields up to a bound and checks p - 1 <= d(d - 1) for
//! every permutation binomial found.
//!
//! cargo run --release --example prime_bound_sweep -- 101

use permbin::arith::is_prime;
use permbin::bounds::{survey_report, EnumOptions, Pruning};
use permbin::field::FieldCtx;

fn main() -> permbin::Result<()> {
    let pmax: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(101);
    let fields: Vec<FieldCtx> = (2..=pmax)
        .filter(|&p| is_prime(p))
        .map(FieldCtx::prime)
        .collect::<Result<_, _>>()?;
    let opts = EnumOptions {
        pruning: Pruning::SAFE,
        workers: 4,
        ..Default::default()
    };
    let report = survey_report(&fields, &opts)?;
    println!("{} permutation binomials over primes <= {pmax}", report.rows.len());
    for ((q, d), count) in &report.counts {
        println!("  p = {q:>3}  d = {d:>3}  {count:>5} rows");
    }
    println!("violations of p-1 <= d(d-1): {}", report.thm7_violations.len());
    println!("equality p-1 = d(d-1) at (p, d): {:?}", report.thm7_equality);
    Ok(())
}

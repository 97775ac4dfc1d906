// SPDX-License-Identifier: Apache-2.0

//! Audits p - 1 <= (n - 1)(n - 3) for permutation binomials a x^n + x of
//! prime fields, comparing the survey with exhaustive evaluation.
//!
//! cargo run --release --example linear_term_audit

use permbin::arith::is_prime;
use permbin::binomial::Binomial;
use permbin::bounds::{linear_term_bound_audit, survey_report, EnumFilters, EnumOptions};
use permbin::field::FieldCtx;
use permbin::verify::linear_term_oracle;

fn main() -> permbin::Result<()> {
    let fields: Vec<FieldCtx> = (2..=101u64).filter(|&p| is_prime(p)).map(FieldCtx::prime).collect::<Result<_, _>>()?;
    let opts = EnumOptions {
        filters: EnumFilters { m: Some(1), ..Default::default() },
        ..Default::default()
    };
    let report = survey_report(&fields, &opts)?;
    let oracle = linear_term_oracle(101);
    println!("survey violations: {:?}", report.cor5_violations);
    println!("oracle violations: {oracle:?}");
    println!("agree: {}", report.cor5_violations == oracle);
    let f7 = FieldCtx::prime(7)?;
    let f = Binomial::new(&f7, f7.from_int(5), 4, 1)?;
    println!("{}", linear_term_bound_audit(&f)?.detail);
    Ok(())
}

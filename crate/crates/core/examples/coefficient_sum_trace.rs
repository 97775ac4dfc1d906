// SPDX-License-Identifier: Apache-2.0

//! Traces the reduced test: for each l divisible by d, the exponents j that
//! reach x^(q-1) in f^l and the resulting coefficient sum.
//!
//! cargo run --example coefficient_sum_trace -- 31 9,3,1

use permbin::binomial::Binomial;
use permbin::bounds::field_for_q;
use permbin::permtest::{coefficient_sum_terms, top_coefficient_sum, unique_root_check};

fn main() -> permbin::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q: u64 = args.first().and_then(|s| s.parse().ok()).unwrap_or(7);
    let spec = args.get(1).cloned().unwrap_or_else(|| "5,4,1".into());
    let ctx = field_for_q(q, 1 << 20)?;
    let f = Binomial::parse(&ctx, &spec)?;
    let d = f.d();
    println!("f = {f} over F_{q}, d = {d}, 0 is the only root: {}", unique_root_check(&f));
    if d == 1 {
        println!("d = 1: f has a second root and cannot permute");
        return Ok(());
    }
    for l in (d..=q - 2).step_by(d as usize) {
        let spec = coefficient_sum_terms(&f, l)?;
        let js: Vec<String> = spec.terms.iter().map(|t| format!("C({l},{})={}", t.j, t.binom_mod_p)).collect();
        let sum = top_coefficient_sum(&f, l)?;
        println!("l = {l:>4}: j0 = {:>3}, terms [{}], sum = {}", spec.j0, js.join(", "), ctx.format(sum));
    }
    Ok(())
}

// SPDX-License-Identifier: Apache-2.0

//! Three ways to decide whether a binomial permutes a field, with the
//! witness each one reports.
//!
//! cargo run --example permutation_test -- 7 3,4,1

use permbin::binomial::Binomial;
use permbin::bounds::field_for_q;
use permbin::permtest::{binomial_criterion, brute_force_is_perm, hermite_dickson_full};

fn main() -> permbin::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q: u64 = args.first().and_then(|s| s.parse().ok()).unwrap_or(7);
    let spec = args.get(1).cloned().unwrap_or_else(|| "5,4,1".into());
    let ctx = field_for_q(q, 1 << 20)?;
    let f = Binomial::parse(&ctx, &spec)?;
    println!("f = {f} over F_{q}, d = {}", f.d());
    for verdict in [binomial_criterion(&f), hermite_dickson_full(&ctx, f.terms())?, brute_force_is_perm(&f)] {
        println!("{}", serde_json::to_string(&verdict.to_json(&ctx)).unwrap());
    }
    Ok(())
}

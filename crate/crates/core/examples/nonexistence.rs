// SPDX-License-Identifier: Apache-2.0

//! For each field size given, lists the values of d for which no
//! permutation binomial can exist, and confirms by enumeration.
//!
//! cargo run --release --example nonexistence -- 125 13 49

use permbin::arith::divisors;
use permbin::bounds::{enumerate_perm_binomials, field_for_q, nonexistence_case, EnumFilters, EnumOptions, Pruning};

fn main() -> permbin::Result<()> {
    let mut sizes: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if sizes.is_empty() {
        sizes = vec![125, 13, 49];
    }
    for q in sizes {
        let ctx = field_for_q(q, 1 << 20)?;
        for d in divisors(q - 1) {
            let filters = EnumFilters { d: Some(d), ..Default::default() };
            let opts = EnumOptions { filters, pruning: Pruning::SAFE, workers: 4, ..Default::default() };
            let found = enumerate_perm_binomials(&ctx, &opts)?.len();
            match nonexistence_case(ctx.p(), ctx.r() as u64, d) {
                Some(case) => println!("F_{q} d = {d:>3}: case ({case}) predicts none, found {found}"),
                None => println!("F_{q} d = {d:>3}: no prediction, found {found}"),
            }
        }
    }
    Ok(())
}

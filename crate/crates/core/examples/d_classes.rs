// SPDX-License-Identifier: Apache-2.0

//! Splits the coefficients of a x^n + x^m into d-classes and exhibits the
//! substitution that carries one member to another.
//!
//! cargo run --example d_classes -- 13 7,1

use permbin::binomial::Binomial;
use permbin::bounds::field_for_q;
use permbin::equivalence::{d_class, substitution_witness};
use permbin::permtest::binomial_criterion;

fn main() -> permbin::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q: u64 = args.first().and_then(|s| s.parse().ok()).unwrap_or(7);
    let exps = args.get(1).cloned().unwrap_or_else(|| "4,1".into());
    let (n, m) = exps.split_once(',').expect("n,m");
    let ctx = field_for_q(q, 1 << 20)?;
    let base = Binomial::new(&ctx, ctx.one(), n.parse().unwrap(), m.parse().unwrap())?;
    println!("x^{} + x^{} shapes over F_{q}, d = {}", base.n(), base.m(), base.d());
    let mut seen = std::collections::BTreeSet::new();
    for a in ctx.nonzero_elements() {
        if !seen.insert(a) {
            continue;
        }
        let f = base.with_coefficient(a)?;
        let class = d_class(&f);
        seen.extend(class.members.iter().copied());
        println!("{}", serde_json::to_string(&class.to_json(binomial_criterion(&f).is_perm)).unwrap());
        if let Some(&b) = class.members.iter().find(|&&b| b != a) {
            let w = substitution_witness(&f, &f.with_coefficient(b)?)?;
            println!("  {} -> {}: eta = {}, u = {}", ctx.format(a), ctx.format(b), ctx.format(w.eta), w.u);
        }
    }
    Ok(())
}

// SPDX-License-Identifier: Apache-2.0

//! Every permutation binomial of F_7, next to the known list of four in
//! monic high-term form.
//!
//! cargo run --example f7_census

use permbin::bounds::{enumerate_perm_binomials, f7_exceptions, EnumOptions, F7_EXCEPTIONS_MONIC_HIGH};
use permbin::field::FieldCtx;

fn main() -> permbin::Result<()> {
    let f7 = FieldCtx::prime(7)?;
    for row in enumerate_perm_binomials(&f7, &EnumOptions::default())? {
        println!("{}  (d = {}, class {})", row.binomial(), row.d, f7.format(row.class_id));
    }
    println!("known list:");
    for ((n, m, c), f) in F7_EXCEPTIONS_MONIC_HIGH.iter().zip(f7_exceptions(&f7)?) {
        println!("  x^{n} + ({c}) x^{m}  ->  {f}");
    }
    Ok(())
}

// SPDX-License-Identifier: Apache-2.0

//! Moves the coefficient of 3x^5 + x over F_25 into F_5, and shows why
//! t x^5 + x over F_9 cannot be moved into F_3.
//!
//! cargo run --example subfield_descent

use permbin::binomial::Binomial;
use permbin::descent::{descend, smallest_field};
use permbin::field::FieldCtx;

fn main() -> permbin::Result<()> {
    let f25 = FieldCtx::new(5, 2, None)?;
    let f = Binomial::new(&f25, f25.from_int(3), 5, 1)?;
    let rep = descend(&f, 1)?;
    println!("{f} over F_25, s = 1:");
    println!("{}", serde_json::to_string_pretty(&rep.to_json(&f25)).unwrap());
    println!("smallest field: F_5^{}", smallest_field(&f)?);

    let f9 = FieldCtx::new(3, 2, None)?;
    let g = Binomial::new(&f9, f9.parse("0,1")?, 5, 1)?;
    let rep = descend(&g, 1)?;
    println!("{g} over F_9: order of a = {}, descends to F_3: {}", rep.delta, rep.exists);
    println!("smallest field: F_3^{}", smallest_field(&g)?);
    Ok(())
}

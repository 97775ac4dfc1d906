// SPDX-License-Identifier: Apache-2.0

//! Arithmetic in F_9 = F_3[t]/(t^2 + 1): element text, powers, discrete
//! logarithms, subfields and the Frobenius map.
//!
//! cargo run --example field_arithmetic

use permbin::field::FieldCtx;

fn main() -> permbin::Result<()> {
    let f9 = FieldCtx::new(3, 2, None)?;
    println!("F_{} with modulus {:?} (constant term first)", f9.q(), f9.modulus().unwrap());
    let t = f9.parse("0,1")?;
    let one_plus_t = f9.parse("1,1")?;
    println!("t^2 = {}", f9.format(f9.mul(t, t)));
    println!("(1+t)^-1 = {}", f9.format(f9.inv(one_plus_t)?));
    println!("generator xi = {}", f9.format(f9.generator()));
    println!("log_xi(t) = {}, order(t) = {}", f9.dlog(f9.generator(), t)?, f9.element_order(t)?);
    println!("t is a square: {}", f9.is_dth_power(t, 2)?);
    println!("Frobenius t -> t^3 = {}", f9.format(f9.frobenius(t, 1)));
    let prime_subfield: Vec<String> = f9.subfield_elements(1)?.iter().map(|&x| f9.format(x)).collect();
    println!("F_3 inside F_9: {}", prime_subfield.join("  "));

    let f13 = FieldCtx::prime(13)?;
    println!("in F_13: 7 * 2 = {}, 2^-1 = {}", f13.format(f13.mul(f13.from_int(7), f13.from_int(2))), f13.format(f13.inv(f13.from_int(2))?));
    Ok(())
}

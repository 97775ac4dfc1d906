// SPDX-License-Identifier: Apache-2.0

//! Runs the built-in acceptance suite and prints its table.
//!
//! cargo run --release --example acceptance_suite

use permbin::verify::{run_all, VerifyOptions};

fn main() {
    let results = run_all(&VerifyOptions::default());
    for r in &results {
        println!("{r}");
    }
    if results.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}

// SPDX-License-Identifier: Apache-2.0

//! Writes the annotated survey of a few fields as CSV on stdout.
//!
//! cargo run --release --example survey_csv -- 7 9 13 25 > survey.csv

use permbin::bounds::{field_for_q, survey_report, EnumOptions, Pruning};
use permbin::cli::rows_csv;

fn main() -> permbin::Result<()> {
    let mut sizes: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if sizes.is_empty() {
        sizes = vec![7, 9, 13, 25];
    }
    let fields = sizes.iter().map(|&q| field_for_q(q, 1 << 20)).collect::<Result<Vec<_>, _>>()?;
    let opts = EnumOptions { pruning: Pruning::ALL, workers: 4, ..Default::default() };
    let report = survey_report(&fields, &opts)?;
    print!("{}", rows_csv(&report.rows));
    eprintln!("{} rows; consistent with the stated bounds: {}", report.rows.len(), report.consistent());
    Ok(())
}

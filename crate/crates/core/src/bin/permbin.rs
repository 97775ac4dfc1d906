// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

fn main() {
    let out = permbin::cli::run(std::env::args_os(), |key| std::env::var(key).ok());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}

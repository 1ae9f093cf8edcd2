//! Runs every acceptance check and prints the report.

use serre_depth::verify::{verify_all, VerifyConfig};

fn main() {
    let report = verify_all(&VerifyConfig::default());
    print!("{}", report.render());
    if !report.all_passed() {
        std::process::exit(2);
    }
}

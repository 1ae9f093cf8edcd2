//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use serre_depth::verify::{run_check, Status, VerifyConfig};

fn criterion(name: &str) {
    let check = run_check(name, &VerifyConfig::default()).expect("known check");
    let tag = match check.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::SkippedBudget => "SKIP",
    };
    println!("{tag} {name} ({} ms): {}", check.elapsed_ms, check.detail);
    assert_eq!(check.status, Status::Pass, "{name}: {}", check.detail);
}

#[test]
fn c01_counterexample_d3() {
    criterion("01-counterexample-d3");
}

#[test]
fn c02_ce2_sequence() {
    criterion("02-ce2-sequence");
}

#[test]
fn c03_dim1_classification() {
    criterion("03-dim1-classification");
}

#[test]
fn c04_duality_identity() {
    criterion("04-duality-identity");
}

#[test]
fn c05_skeleton_formulas() {
    criterion("05-skeleton-formulas");
}

#[test]
fn c06_oracle_pair() {
    criterion("06-oracle-pair");
}

#[test]
fn c07_h1_criterion() {
    criterion("07-h1-criterion");
}

#[test]
fn c08_inflation_shift() {
    criterion("08-inflation-shift");
}

#[test]
fn c09_polarization_shift() {
    criterion("09-polarization-shift");
}

#[test]
fn c10_vwc_formula() {
    criterion("10-vwc-formula");
}

#[test]
fn c11_non_increasing() {
    criterion("11-non-increasing");
}

#[test]
fn c12_cover_polarization() {
    criterion("12-cover-polarization");
}

#[test]
fn c13_homology_sanity() {
    criterion("13-homology-sanity");
}

//! Ratios ρ_k/ρ_{k+1} against the bound 44π²/9, with exact values.
//!
//! cargo run --example ratio_table

use landaukit::numerics::PrecisionPolicy;
use landaukit::verify::{check_lemma22, lemma22_table};

fn main() {
    for row in lemma22_table(12) {
        println!("k={:>2}  {}  ({})", row.k, row.two_decimals, row.ratio);
    }
    let report = check_lemma22(50, &PrecisionPolicy::default()).unwrap();
    println!(
        "rigorously below 44pi^2/9 for k <= 50: {} of {}",
        report.summary.pass, report.summary.total
    );
}

//! A verification report as JSON, the same shape `landaukit verify
//! --format json` emits.
//!
//! cargo run --example json_report

use landaukit::numerics::PrecisionPolicy;
use landaukit::verify::check_classical;

fn main() {
    let report = check_classical(5, &PrecisionPolicy::default()).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}

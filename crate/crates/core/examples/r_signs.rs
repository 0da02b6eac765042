//! The sign pattern of r_{l,s}, decided in exact arithmetic.
//!
//! cargo run --release --example r_signs

use landaukit::coefficients::r_coeff;
use landaukit::numerics::rational::format_sci;
use landaukit::verify::check_lemma23;

fn main() {
    for l in 1..=4 {
        let row: Vec<String> = (l + 1..=l + 4).map(|s| format_sci(&r_coeff(l, s).unwrap(), 4)).collect();
        println!("l={l}: {}", row.join("  "));
    }
    let r = check_lemma23(20, 100).unwrap();
    println!("(-1)^(l+1) r_(l,s) > 0 for l <= 20, span 100: {} / {}", r.summary.pass, r.summary.total);
}

//! Conjectured alternating sign pattern of the truncations A_m(n) in the
//! variable 16n. Report only.
//!
//! cargo run --release --example granath

use landaukit::coefficients::granath_a;
use landaukit::numerics::rational::to_text;
use landaukit::numerics::PrecisionPolicy;
use landaukit::verify::check_granath;

fn main() {
    for k in 1..=6 {
        println!("a_{k} = {}", to_text(&granath_a(k).unwrap()));
    }
    let r = check_granath(12, 500, &PrecisionPolicy::default()).unwrap();
    println!(
        "{}: m <= 12, n <= 500: pass={} fail={} unknown={}",
        r.banner.as_deref().unwrap_or(""),
        r.summary.pass,
        r.summary.fail,
        r.summary.unknown
    );
    for f in r.results.iter().filter(|c| c.status != landaukit::verify::Status::Pass).take(10) {
        println!("finding at (m, n) = {:?}: {}", f.point, f.witness);
    }
}

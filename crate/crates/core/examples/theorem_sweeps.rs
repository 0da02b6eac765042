//! Sign, envelope and sandwich sweeps over (n, l), with precision
//! escalation recorded per point.
//!
//! cargo run --release --example theorem_sweeps -- 200 12

use landaukit::numerics::PrecisionPolicy;
use landaukit::verify::{check_thm1, check_thm2, check_thm3, thm2_implies_thm1, VerificationReport};

fn line(r: &VerificationReport) {
    let s = r.summary;
    println!(
        "{:<6} total={:<6} pass={:<6} fail={} unknown={} max_bits={}",
        r.check_name,
        s.total,
        s.pass,
        s.fail,
        s.unknown,
        r.max_precision()
    );
}

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>().expect("integer"));
    let n_max = args.next().unwrap_or(200);
    let l_max = args.next().unwrap_or(12);
    let policy = PrecisionPolicy::default();

    let t1 = check_thm1(n_max, l_max, &policy).unwrap();
    let t2 = check_thm2(n_max, l_max, &policy).unwrap();
    let t3 = check_thm3(n_max, l_max / 2, l_max / 2, &policy).unwrap();
    for r in [&t1, &t2, &t3] {
        line(r);
    }
    println!("envelope passes imply sign passes: {}", thm2_implies_thm1(&t1, &t2).is_empty());

    let worst = t1.results.iter().max_by_key(|r| r.precision_used).unwrap();
    println!("hardest point {:?} at {} bits: {}", worst.point, worst.precision_used, worst.witness);
}

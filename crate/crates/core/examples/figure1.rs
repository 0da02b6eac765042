//! Plot data for ε_l(N) / (β_{2l}/N^{2l}); writes CSV to stdout.
//!
//! cargo run --release --example figure1 -- 16 50 > ratios.csv

use landaukit::numerics::format_decimal;
use landaukit::numerics::PrecisionPolicy;
use landaukit::verify::{figure1_data, Status};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>().expect("integer"));
    let l = args.next().unwrap_or(2);
    let n_max = args.next().unwrap_or(30);
    let rows = figure1_data(l, n_max, &PrecisionPolicy::default()).unwrap();
    println!("n,N,ratio");
    for r in &rows {
        println!("{},{},{}", r.n, format_decimal(&r.big_n, 2, false), format_decimal(&r.ratio.mid_rational(), 12, false));
    }
    let inside = rows.iter().filter(|r| r.status == Status::Pass).count();
    eprintln!("{inside} of {} ratios enclosed strictly inside (0, 1)", rows.len());
}

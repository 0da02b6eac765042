//! Three independent routes to β_{2k}: the linear recurrence, the upper
//! Hessenberg determinant, and the Taylor coefficients of a hypergeometric
//! generating function. All three must agree exactly.
//!
//! cargo run --release --example triple_oracle -- 25

use landaukit::coefficients::CoefficientTable;
use landaukit::series_oracle::beta_from_series;

fn main() {
    let k_max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(25);
    let table = CoefficientTable::new();
    let rec = table.betas(k_max);
    let series = beta_from_series(k_max);
    let mut all = true;
    for k in 1..=k_max {
        let det = table.beta_det(2 * k).unwrap();
        let r = &rec[(k - 1) as usize];
        let ok = *r == det && *r == series[(k - 1) as usize];
        all &= ok;
        let digits = r.denom().to_string().len();
        println!("k={k:>2}  agree={ok}  denominator digits={digits}");
    }
    println!("{}", if all { "all routes agree" } else { "MISMATCH" });
}

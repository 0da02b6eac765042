//! Growth of |β_{2l}| against (2l-1)! (2π)^{-2l} ln 2l. The expansion
//! diverges because the scaled column keeps growing.
//!
//! cargo run --release --example beta_growth

use landaukit::verify::beta_growth_report;

fn main() {
    println!("  l  ratio       scaled");
    for r in beta_growth_report(2, 60, 160).unwrap() {
        if r.l <= 10 || r.l % 10 == 0 {
            println!("{:>3}  {:.6}  {:.6}", r.l, r.ratio.to_f64(), r.scaled.to_f64());
        }
    }
}

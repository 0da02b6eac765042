//! Exact Landau constants and the difference equations they satisfy.
//!
//! cargo run --example landau_constants

use landaukit::landau::{diffeq_residual, landau_exact, symmetric_residual};
use landaukit::numerics::format_decimal;
use landaukit::numerics::rational::to_text;
use landaukit::numerics::{const_log, const_pi, int};

fn main() {
    for n in 0..=6 {
        let g = landau_exact(n);
        println!("G_{n} = {:<24} = {}", to_text(&g), format_decimal(&g, 15, false));
    }

    let zero = (0..=200).all(|n| diffeq_residual(n) == int(0))
        && (1..=200).all(|n| symmetric_residual(n).unwrap() == int(0));
    println!("both recurrences hold exactly for n <= 200: {zero}");

    // G_n grows like ln(n)/π.
    let n = 1000;
    let pi_g = const_pi(128).mul_rational(&landau_exact(n));
    let ln_n = const_log(&int(n as i64), 128).unwrap();
    println!("pi G_1000 - ln 1000 = {}", pi_g.sub(&ln_n).display(12));
}

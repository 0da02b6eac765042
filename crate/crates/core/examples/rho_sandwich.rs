//! Two-sided bound on ρ_k with the printed constants, next to the
//! observed offset δ_k in
//! π ρ_k (2π)^{2k} = 4 ln 2k + 16 ln 2 + 4γ - 4 ln 2π + δ_k.
//!
//! cargo run --release --example rho_sandwich

use landaukit::coefficients::rho;
use landaukit::numerics::{const_gamma, const_log, const_pi, int, Ball, PrecisionPolicy};
use landaukit::verify::check_rho_sandwich;

fn main() {
    let report = check_rho_sandwich(10, 50, &PrecisionPolicy::default()).unwrap();
    for r in report.results.iter().filter(|r| r.point[0] % 5 == 0 || r.point[0] <= 13) {
        println!("k={:>2} {:?}: {}", r.point[0], r.status, r.witness);
    }

    let p = 192;
    let pi = const_pi(p);
    let centre = const_log(&int(2), p)
        .unwrap()
        .mul_2exp(4)
        .add(&const_gamma(p).mul_2exp(2))
        .sub(&pi.mul_2exp(1).ln().unwrap().mul_2exp(2));
    println!("\nwithout the 1/sqrt2 factor and with +4γ:");
    for k in [10u32, 20, 40, 80, 120] {
        let mut v = pi.clone();
        for _ in 0..2 * k {
            v = v.mul(&pi);
        }
        let v: Ball = v.mul_2exp(2 * i64::from(k)).mul_rational(&rho(k));
        let delta = v.sub(&const_log(&int(2 * i64::from(k)), p).unwrap().mul_2exp(2)).sub(&centre);
        println!("k={k:>3}  delta_k = {}", delta.display(6));
    }
}

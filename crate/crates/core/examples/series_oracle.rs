//! Exact formal power series: the generating function of ρ_k and the
//! quadratic transformation it rests on.
//!
//! cargo run --example series_oracle

use landaukit::numerics::rational::to_text;
use landaukit::numerics::{int, ratio};
use landaukit::series_oracle::{hyp_series, sin_sq_series, u_series, TruncSeries};

fn main() {
    let order = 12;
    let u = u_series(order);
    for k in 0..=order / 2 {
        println!("rho_{k} = {}", to_text(u.coeff(2 * k)));
    }

    let q = ratio(1, 4);
    let h = ratio(1, 2);
    let left = TruncSeries::compose(&hyp_series(&q, &q, &int(1), 20).unwrap(), &sin_sq_series(2, 20)).unwrap();
    let right = TruncSeries::compose(&hyp_series(&h, &h, &int(1), 20).unwrap(), &sin_sq_series(4, 20)).unwrap();
    println!("F(1/4,1/4;1;sin^2(x/2)) == F(1/2,1/2;1;sin^2(x/4)) to x^20: {}", left == right);
}

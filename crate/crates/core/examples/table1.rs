//! The first expansion coefficients β_2 .. β_14, exact and in decimal.
//!
//! cargo run --example table1

use landaukit::coefficients::CoefficientTable;
use landaukit::numerics::format_decimal;
use landaukit::numerics::rational::to_text;

fn main() {
    let table = CoefficientTable::global();
    for (i, b) in table.betas(7).iter().enumerate() {
        println!("beta_{:<2} = {:>36}  ~ {}", 2 * (i + 1), to_text(b), format_decimal(b, 12, false));
    }
}

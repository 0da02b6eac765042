//! Fraction-free (Bareiss) determinant over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::numerics::Rational;

/// Determinant of a square integer matrix. Every intermediate division is
/// exact, so no fractions appear.
pub fn det_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(a.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!(v.is_multiple_of(&prev));
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a rational matrix: clear each row's denominators, run
/// Bareiss on the integer matrix, then divide the row scales back out.
pub fn det_rational(rows: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &lcm;
            row.iter()
                .map(|q| q.numer() * (&lcm / q.denom()))
                .collect()
        })
        .collect();
    debug_assert!(scale.is_positive());
    Rational::new(det_int(int_rows), scale)
}

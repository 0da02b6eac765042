//! Exact rationals and the handful of helpers built on them.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator after each operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n / d` as a canonical rational. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as an integer.
pub fn factorial_int(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!` as an integer-valued rational.
pub fn factorial(n: u64) -> Rational {
    Rational::from_integer(factorial_int(n))
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Canonical `num/den` text; the sign always sits on the numerator and
/// integers print without a denominator.
pub fn to_text(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `num/den` or a bare integer.
pub fn parse_text(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// `true` when the denominator is a power of two.
pub fn is_dyadic(q: &Rational) -> bool {
    let d = q.denom().magnitude();
    d.count_ones() == 1
}

/// Fixed-point decimal rendering of `q`, correctly rounded to `digits`
/// places (ties away from zero). With `trim`, trailing zeros after the
/// point are dropped, and the point too when nothing is left.
pub fn format_decimal(q: &Rational, digits: usize, trim: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = q.abs() * Rational::from_integer(scale.clone());
    let (quot, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = rem * 2u32;
    let rounded = if twice >= *scaled.denom() { quot + 1u32 } else { quot };
    let (ip, fp) = rounded.div_rem(&scale);
    let mut out = String::new();
    if q.is_negative() && !rounded.is_zero() {
        out.push('-');
    }
    out.push_str(&ip.to_string());
    if digits > 0 {
        let mut frac = format!("{:0>width$}", fp.to_string(), width = digits);
        if trim {
            while frac.ends_with('0') {
                frac.pop();
            }
        }
        if !frac.is_empty() {
            out.push('.');
            out.push_str(&frac);
        }
    }
    out
}

/// Scientific rendering `d.ddde±X` of a nonnegative `q`, rounded *up* in
/// the last significant digit, so the printed value is an upper bound.
pub fn format_sci_upper(q: &Rational, sig: usize) -> String {
    format_sci_with(q, sig, true)
}

/// Scientific rendering of `q`, rounded to nearest (ties away from zero).
pub fn format_sci(q: &Rational, sig: usize) -> String {
    let body = format_sci_with(q, sig, false);
    if q.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

fn format_sci_with(q: &Rational, sig: usize, up: bool) -> String {
    assert!(sig >= 1);
    if q.is_zero() {
        return format!("{:.*}e0", sig - 1, 0.0);
    }
    let q = q.abs();
    // Find e with 10^e <= q < 10^(e+1).
    let ten = BigInt::from(10u32);
    let mut e: i64 = q.numer().to_string().len() as i64 - q.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(ten.pow(k as u32))
        } else {
            Rational::new(BigInt::one(), ten.pow((-k) as u32))
        }
    };
    while pow10(e) > q {
        e -= 1;
    }
    while pow10(e + 1) <= q {
        e += 1;
    }
    let scaled = &q / pow10(e - (sig as i64 - 1));
    let mut m = if up { scaled.ceil() } else { scaled.round() }.to_integer();
    if m >= ten.pow(sig as u32) {
        // rounding landed exactly on 10^sig
        m /= 10u32;
        e += 1;
    }
    let digits = m.to_string();
    let (head, tail) = digits.split_at(1);
    if tail.is_empty() {
        format!("{head}e{e}")
    } else {
        format!("{head}.{tail}e{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sci_nearest() {
        assert_eq!(format_sci(&ratio(-12345, 1000000), 3), "-1.23e-2");
        assert_eq!(format_sci(&ratio(99999, 10), 3), "1.00e4");
        assert_eq!(format_sci_upper(&ratio(12301, 1000000), 3), "1.24e-2");
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        let oracle: i64 = (1..=10).product();
        assert_eq!(factorial(10), int(oracle));
        assert_eq!(factorial(10), int(3_628_800));
    }

    #[test]
    fn canonical_form() {
        let q = ratio(6, -8);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(4));
        assert_eq!(to_text(&q), "-3/4");
        assert_eq!(to_text(&int(-7)), "-7");
        assert_eq!(parse_text("-7"), Some(int(-7)));
        assert_eq!(parse_text("-3/4"), Some(q));
        assert_eq!(parse_text("7"), Some(int(7)));
        assert_eq!(parse_text("1/0"), None);
    }

    #[test]
    fn decimals() {
        assert_eq!(format_decimal(&ratio(89, 64), 10, true), "1.390625");
        assert_eq!(format_decimal(&ratio(89, 64), 10, false), "1.3906250000");
        assert_eq!(format_decimal(&ratio(192, 11), 2, false), "17.45");
        assert_eq!(format_decimal(&ratio(-1, 3), 3, false), "-0.333");
        assert_eq!(format_decimal(&ratio(-1, 3000), 2, false), "0.00");
        assert_eq!(format_decimal(&ratio(5, 1), 0, false), "5");
        assert_eq!(format_decimal(&ratio(1, 8), 2, false), "0.13");
    }

    #[test]
    fn scientific_upper() {
        assert_eq!(format_sci_upper(&ratio(1, 3), 3), "3.34e-1");
        assert_eq!(format_sci_upper(&ratio(1, 1000), 2), "1.0e-3");
        assert_eq!(format_sci_upper(&ratio(9999, 1), 2), "1.0e4");
        assert_eq!(format_sci_upper(&ratio(12, 1), 1), "2e1");
    }

    #[test]
    fn dyadic_detection() {
        assert!(is_dyadic(&ratio(3, 8)));
        assert!(is_dyadic(&int(5)));
        assert!(!is_dyadic(&ratio(1, 3)));
    }
}

//! Enclosures of π, γ and logarithms of rationals.
//!
//! Each constant is evaluated in fixed point at `prec + GUARD` bits with an
//! explicit count of truncation errors, turned into a ball, and rounded to
//! `prec`. Results are memoized per precision.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ball::{Ball, Dyadic, Mag};
use super::rational::Rational;
use crate::error::{domain, Result};

const GUARD: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Constant {
    Pi,
    Gamma,
    Ln2,
}

fn cache() -> &'static Mutex<HashMap<(Constant, u32), Ball>> {
    static CACHE: OnceLock<Mutex<HashMap<(Constant, u32), Ball>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(kind: Constant, prec: u32, compute: impl FnOnce() -> Ball) -> Ball {
    if let Some(b) = cache().lock().expect("constant cache poisoned").get(&(kind, prec)) {
        return b.clone();
    }
    // Computed outside the lock; a racing thread may duplicate the work.
    let b = compute();
    cache()
        .lock()
        .expect("constant cache poisoned")
        .entry((kind, prec))
        .or_insert(b)
        .clone()
}

/// Fixed-point value `value * 2^-w` known to within `err` units of `2^-w`.
struct Fixed {
    value: BigInt,
    err: u64,
    w: u32,
}

impl Fixed {
    fn into_ball(self, prec: u32) -> Ball {
        let w = self.w as i64;
        Ball::from_parts(
            Dyadic::new(self.value, -w),
            Mag::from_big(&num_bigint::BigUint::from(self.err), -w),
            prec,
        )
    }
}

/// `atan(1/x)` for an integer `x >= 2`.
fn atan_inv(x: u64, w: u32) -> Fixed {
    let x2 = BigInt::from(x) * x;
    let mut t = (BigInt::one() << w as usize) / x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !t.is_zero() {
        let term = &t / (2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        t /= &x2;
        k += 1;
    }
    // Each power is low by < 2 units, each term by < 3; the alternating
    // tail is below the first omitted term, itself < 2 units.
    Fixed { value: sum, err: 3 * k + 2, w }
}

/// `atanh(p/q)` for `0 <= p/q` and `(p/q)^2 <= 1/2`.
fn atanh_ratio(p: &BigInt, q: &BigInt, w: u32) -> Fixed {
    debug_assert!(!p.is_negative() && q.is_positive());
    debug_assert!(BigInt::from(2) * p * p <= q * q);
    let p2 = p * p;
    let q2 = q * q;
    let mut t = (p << w as usize) / q;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !t.is_zero() {
        sum += &t / (2 * k + 1);
        t = t * &p2 / &q2;
        k += 1;
    }
    // Powers are low by < 1/(1 - z^2) <= 2 units, terms by < 3 units, and
    // the geometric tail after t hits zero is < 2 / (1 - z^2) <= 4 units.
    Fixed { value: sum, err: 3 * k + 4, w }
}

/// Enclosure of π with radius at most `2^(2-prec) |mid|`.
pub fn const_pi(prec: u32) -> Ball {
    cached(Constant::Pi, prec, || {
        let w = prec + GUARD;
        // Machin: π = 16 atan(1/5) - 4 atan(1/239)
        let a = atan_inv(5, w);
        let b = atan_inv(239, w);
        Fixed {
            value: a.value * 16 - b.value * 4,
            err: 16 * a.err + 4 * b.err,
            w,
        }
        .into_ball(prec)
    })
}

fn const_ln2(prec: u32) -> Ball {
    cached(Constant::Ln2, prec, || {
        let w = prec + GUARD;
        // ln 2 = 2 atanh(1/3)
        let f = atanh_ratio(&BigInt::one(), &BigInt::from(3), w);
        Fixed { value: f.value << 1usize, err: 2 * f.err, w }.into_ball(prec)
    })
}

/// Enclosure of `ln x` for rational `x > 0`.
pub fn const_log(x: &Rational, prec: u32) -> Result<Ball> {
    if !x.is_positive() {
        return domain(format!("logarithm of nonpositive {x}"));
    }
    if x.is_one() {
        return Ok(Ball::zero(prec));
    }
    let w = prec + GUARD;
    // x = 2^e * y with y in [2/3, 4/3]
    let mut e = x.numer().bits() as i64 - x.denom().bits() as i64;
    let pow2 = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(BigInt::one() << k as usize)
        } else {
            Rational::new(BigInt::one(), BigInt::one() << (-k) as usize)
        }
    };
    let mut y = x / pow2(e);
    let two_thirds = Rational::new(BigInt::from(2), BigInt::from(3));
    let four_thirds = Rational::new(BigInt::from(4), BigInt::from(3));
    while y > four_thirds {
        y /= Rational::from_integer(BigInt::from(2));
        e += 1;
    }
    while y < two_thirds {
        y *= Rational::from_integer(BigInt::from(2));
        e -= 1;
    }
    // ln y = 2 atanh((y - 1)/(y + 1)), |z| <= 1/5
    let (a, b) = (y.numer(), y.denom());
    let num = a - b;
    let den = a + b;
    let mut reduced = {
        let f = atanh_ratio(&num.abs(), &den, w);
        let f = Fixed { value: f.value << 1usize, err: 2 * f.err, w };
        let ball = f.into_ball(w);
        if num.is_negative() {
            ball.neg()
        } else {
            ball
        }
    };
    if e != 0 {
        let ln2 = const_ln2(w);
        reduced = reduced.add(&ln2.mul(&Ball::from_int(e, w)));
    }
    Ok(reduced.with_prec(prec))
}

/// Tangent numbers `T_1..=T_n` (1, 2, 16, 272, ...), integer-only.
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t
}

/// Bernoulli number `B_{2k}` for `k >= 1`.
pub fn bernoulli_even(k: usize) -> Rational {
    let t = tangent_numbers(k);
    bernoulli_from_tangent(k, &t[k])
}

fn bernoulli_from_tangent(k: usize, tk: &BigInt) -> Rational {
    let four_k = BigInt::one() << (2 * k);
    let r = Rational::new(BigInt::from(2 * k) * tk, &four_k * (&four_k - 1));
    if k % 2 == 1 {
        r
    } else {
        -r
    }
}

/// Enclosure of Euler's constant.
///
/// Euler-Maclaurin on the harmonic numbers:
/// `γ = H_n - ln n - 1/(2n) + Σ_{k=1}^{m} B_{2k}/(2k n^{2k}) - R`, where
/// `|R|` is at most the first omitted term.
pub fn const_gamma(prec: u32) -> Ball {
    cached(Constant::Gamma, prec, || {
        let w = prec + GUARD;
        let n: u64 = 16 * u64::from(prec.max(32));

        // H_n in fixed point; each quotient is low by < 1 unit.
        let one = BigInt::one() << w as usize;
        let mut h = BigInt::zero();
        for j in 1..=n {
            h += &one / j;
        }
        let harmonic = Fixed { value: h, err: n, w }.into_ball(w);

        // Smallest m whose next term drops below 2^-w, estimated in f64.
        let two_pi_n = 2.0 * std::f64::consts::PI * n as f64;
        let mut log2_term = 0.0f64;
        let mut m = 0usize;
        loop {
            let k = m + 1;
            // |B_{2k}|/(2k n^{2k}) ~ 2 (2k)! / ((2π n)^{2k} 2k)
            log2_term = if k == 1 {
                (2.0f64 / (two_pi_n * two_pi_n * 2.0)).log2() + 1.0
            } else {
                log2_term
                    + ((2 * k - 1) as f64 * (2 * k) as f64 * (k - 1) as f64
                        / (two_pi_n * two_pi_n * k as f64))
                        .log2()
            };
            if log2_term < -(w as f64) - 4.0 {
                break;
            }
            m += 1;
        }
        let tangent = tangent_numbers(m + 1);
        let nn = BigInt::from(n);
        let term = |k: usize| -> Rational {
            let b = bernoulli_from_tangent(k, &tangent[k]);
            b / Rational::from_integer(BigInt::from(2 * k) * nn.pow(2 * k as u32))
        };
        let mut sum = Ball::zero(w);
        for k in 1..=m {
            sum = sum.add(&Ball::from_rational(&term(k), w));
        }
        let remainder = Mag::from_rational(&term(m + 1));

        let ln_n = const_log(&Rational::from_integer(nn.clone()), w).expect("n > 0");
        let half_inv = Ball::from_rational(&Rational::new(BigInt::one(), nn * 2), w);
        let g = harmonic.sub(&ln_n).sub(&half_inv).add(&sum);
        Ball::from_parts(g.mid().clone(), g.rad().add(&remainder), w).with_prec(prec)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::{format_decimal, int, ratio};

    // Reference digits, TRIVIAL known constants.
    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";
    const GAMMA_50: &str = "0.57721566490153286060651209008240243104215933593992";
    const LN2_50: &str = "0.69314718055994530941723212145817656807550013436026";

    fn parse_decimal(s: &str) -> Rational {
        let (ip, fp) = s.split_once('.').unwrap();
        let digits = format!("{ip}{fp}");
        Rational::new(digits.parse().unwrap(), BigInt::from(10u32).pow(fp.len() as u32))
    }

    fn within(b: &Ball, reference: &str) -> bool {
        let r = parse_decimal(reference);
        let slack = Rational::new(BigInt::one(), BigInt::from(10u32).pow(49));
        b.lower() <= &r + &slack && &r - &slack <= b.upper()
    }

    #[test]
    fn pi_encloses_reference() {
        let p = const_pi(200);
        assert!(within(&p, PI_50));
        let p64 = const_pi(64);
        assert!(p64.lower() > ratio(314159265358979, 100000000000000));
        assert!(p64.upper() < ratio(314159265358980, 100000000000000));
        // radius <= 2^(2-p) |mid|
        let bound = p64.mid_rational() * Rational::new(BigInt::one(), BigInt::one() << 62usize);
        assert!(p64.rad_rational() <= bound);
    }

    #[test]
    fn forty_four_ninths_pi_squared() {
        let p = const_pi(64);
        let v = p.mul(&p).mul_rational(&ratio(44, 9));
        assert_eq!(format_decimal(&v.mid_rational(), 2, false), "48.25");
    }

    #[test]
    fn gamma_encloses_reference() {
        let g = const_gamma(200);
        assert!(within(&g, GAMMA_50));
        let g64 = const_gamma(64);
        assert!(g64.lower() > ratio(5772156649, 10000000000));
        assert!(g64.upper() < ratio(5772156650, 10000000000));
    }

    #[test]
    fn c0_value() {
        let p = 64;
        let c0 = const_gamma(p)
            .add(&const_log(&int(2), p).unwrap().mul_rational(&int(4)))
            .div(&const_pi(p))
            .unwrap();
        assert!(c0.lower() > ratio(10662, 10000) && c0.upper() < ratio(10663, 10000));
    }

    #[test]
    fn logs() {
        let z = const_log(&int(1), 64).unwrap();
        assert!(z.contains(&int(0)) && z.rad().is_zero());
        let l2 = const_log(&int(2), 200).unwrap();
        assert!(within(&l2, LN2_50));
        // ln(3/4) against an independent route: ln 3 - 2 ln 2 with ln 3 from
        // the series for atanh(1/2).
        let l34 = const_log(&ratio(3, 4), 128).unwrap();
        let ln3 = atanh_ratio(&BigInt::one(), &BigInt::from(2), 192);
        let ln3 = Fixed { value: ln3.value << 1usize, err: 2 * ln3.err, w: 192 }.into_ball(128);
        let other = ln3.sub(&const_ln2(128).mul_rational(&int(2)));
        assert!(l34.contains(&other.mid_rational()) || other.contains(&l34.mid_rational()));
        assert!(l34.lower() > ratio(-287682073, 1000000000));
        assert!(l34.upper() < ratio(-287682072, 1000000000));
        assert!(const_log(&int(0), 64).is_err());
        assert!(const_log(&int(-3), 64).is_err());
    }

    #[test]
    fn large_and_small_arguments() {
        let big = const_log(&int(1_000_000), 128).unwrap();
        let ln10 = const_log(&int(10), 128).unwrap().mul_rational(&int(6));
        assert!(big.sub(&ln10).contains(&int(0)));
        let tiny = const_log(&ratio(1, 1_000_000), 128).unwrap();
        assert!(tiny.add(&big).contains(&int(0)));
    }

    #[test]
    fn refinement_never_widens() {
        for p in [64u32, 128, 256, 512] {
            assert!(const_pi(2 * p).rad() <= const_pi(p).rad());
            assert!(const_gamma(2 * p).rad() <= const_gamma(p).rad());
            let x = ratio(4003, 4);
            assert!(const_log(&x, 2 * p).unwrap().rad() <= const_log(&x, p).unwrap().rad());
            // doubling p at least halves the radius
            let r1 = const_gamma(p).rad_rational();
            let r2 = const_gamma(2 * p).rad_rational();
            assert!(r2 * int(2) <= r1);
        }
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli_even(1), ratio(1, 6));
        assert_eq!(bernoulli_even(2), ratio(-1, 30));
        assert_eq!(bernoulli_even(3), ratio(1, 42));
        assert_eq!(bernoulli_even(6), ratio(691, -2730));
        assert_eq!(bernoulli_even(7), ratio(7, 6));
    }
}


//! Midpoint-radius real arithmetic.
//!
//! A [`Ball`] is a dyadic midpoint `m * 2^e` with at most `prec` significant
//! bits together with a radius [`Mag`] that is always an upper bound on the
//! distance to the represented real. Midpoints are rounded to nearest and
//! every rounding inflates the radius by one ulp.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_decimal, format_sci, format_sci_upper, Rational};
use crate::error::{Error, Result};

/// Exact dyadic number `man * 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub man: BigInt,
    pub exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn new(man: BigInt, exp: i64) -> Self {
        Dyadic { man, exp }
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    /// Bit position just above the leading bit: `|self| < 2^top()`.
    fn top(&self) -> i64 {
        self.man.bits() as i64 + self.exp
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.man << self.exp as usize)
        } else {
            Rational::new(self.man.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = a.exp.min(b.exp);
        (
            &a.man << (a.exp - e) as usize,
            &b.man << (b.exp - e) as usize,
            e,
        )
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, e) = Dyadic::align(self, other);
        Dyadic::new(a + b, e)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic::new(-&self.man, self.exp)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.man * &other.man, self.exp + other.exp)
    }

    pub fn cmp_value(&self, other: &Dyadic) -> Ordering {
        let sa = self.man.sign();
        let sb = other.man.sign();
        if sa != sb || sa == Sign::NoSign {
            return sign_rank(sa).cmp(&sign_rank(sb));
        }
        // Same nonzero sign: compare magnitudes cheaply by leading bit first.
        let (ta, tb) = (self.top(), other.top());
        let mag_order = if ta != tb {
            ta.cmp(&tb)
        } else {
            let (a, b, _) = Dyadic::align(self, other);
            a.magnitude().cmp(b.magnitude())
        };
        if sa == Sign::Minus {
            mag_order.reverse()
        } else {
            mag_order
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic::new(self.man.abs(), self.exp)
    }
}

fn sign_rank(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

const MAG_BITS: u64 = 30;

/// Nonnegative upper bound `man * 2^exp` with a short mantissa.
///
/// Every constructor and operation rounds up, so a `Mag` never
/// understates the quantity it bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mag {
    man: u64,
    exp: i64,
}

impl Mag {
    pub fn zero() -> Self {
        Mag { man: 0, exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.man == 0
    }

    /// `2^exp`.
    pub fn pow2(exp: i64) -> Self {
        Mag { man: 1, exp }
    }

    fn normalized(man: u128, exp: i64) -> Self {
        if man == 0 {
            return Mag::zero();
        }
        let bits = 128 - man.leading_zeros() as u64;
        if bits <= MAG_BITS {
            return Mag { man: man as u64, exp };
        }
        let shift = bits - MAG_BITS;
        let mut m = man >> shift;
        if m << shift != man {
            m += 1;
        }
        let mut e = exp + shift as i64;
        if m >> MAG_BITS != 0 {
            // m == 2^MAG_BITS exactly
            m >>= 1;
            e += 1;
        }
        Mag { man: m as u64, exp: e }
    }

    /// Upper bound for `|n| * 2^exp`.
    pub fn from_big(n: &BigUint, exp: i64) -> Self {
        let bits = n.bits();
        if bits <= MAG_BITS {
            let m = n.iter_u64_digits().next().unwrap_or(0);
            return Mag::normalized(m as u128, exp);
        }
        let shift = bits - MAG_BITS;
        let top: BigUint = n >> shift as usize;
        let m = top.iter_u64_digits().next().unwrap_or(0) as u128 + 1;
        Mag::normalized(m, exp + shift as i64)
    }

    pub fn from_dyadic(d: &Dyadic) -> Self {
        Mag::from_big(d.man.magnitude(), d.exp)
    }

    /// Upper bound for `|q|`.
    pub fn from_rational(q: &Rational) -> Self {
        if q.is_zero() {
            return Mag::zero();
        }
        let nb = q.numer().bits() as i64;
        let db = q.denom().bits() as i64;
        // Keep about MAG_BITS + 2 bits of quotient.
        let k = MAG_BITS as i64 + 2 - (nb - db);
        let scaled = if k >= 0 {
            q.numer().magnitude() << k as usize
        } else {
            q.numer().magnitude().clone()
        };
        let den = if k >= 0 {
            q.denom().magnitude().clone()
        } else {
            q.denom().magnitude() << (-k) as usize
        };
        let (quot, rem) = scaled.div_rem(&den);
        let quot = if rem.is_zero() { quot } else { quot + 1u32 };
        Mag::from_big(&quot, -k)
    }

    pub fn to_dyadic(&self) -> Dyadic {
        Dyadic::new(BigInt::from(self.man), self.exp)
    }

    pub fn to_rational(&self) -> Rational {
        self.to_dyadic().to_rational()
    }

    pub fn add(&self, other: &Mag) -> Mag {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (big, small) = if self.exp >= other.exp { (self, other) } else { (other, self) };
        let diff = big.exp - small.exp;
        if diff > 64 {
            // small < 2^(MAG_BITS + small.exp) <= 2^big.exp
            return Mag::normalized(big.man as u128 + 1, big.exp);
        }
        let m = ((big.man as u128) << diff) + small.man as u128;
        Mag::normalized(m, small.exp)
    }

    pub fn mul(&self, other: &Mag) -> Mag {
        if self.is_zero() || other.is_zero() {
            return Mag::zero();
        }
        Mag::normalized(self.man as u128 * other.man as u128, self.exp + other.exp)
    }

    /// Upper bound on `log2` of the value, rounded up to an integer.
    pub fn log2_ceil(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            let bits = 64 - self.man.leading_zeros() as i64;
            Some(self.exp + bits)
        }
    }
}

impl PartialOrd for Mag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.to_dyadic().cmp_value(&other.to_dyadic()))
    }
}

/// Outcome of a rigorous strict comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum StrictOrder {
    Less,
    Greater,
    Unknown,
}

/// Rigorous enclosure of a real number.
#[derive(Clone, Debug)]
pub struct Ball {
    mid: Dyadic,
    rad: Mag,
    prec: u32,
}

impl Ball {
    pub fn zero(prec: u32) -> Self {
        Ball { mid: Dyadic::zero(), rad: Mag::zero(), prec }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        Ball::from_dyadic(Dyadic::new(BigInt::from(n), 0), prec)
    }

    /// Exact midpoint and radius, then rounded to `prec` bits.
    pub fn from_parts(mid: Dyadic, rad: Mag, prec: u32) -> Self {
        Ball { mid, rad, prec }.rounded()
    }

    pub fn from_dyadic(d: Dyadic, prec: u32) -> Self {
        Ball::from_parts(d, Mag::zero(), prec)
    }

    /// Ball containing `q`; the radius is half an ulp at `prec`, or zero
    /// when `q` is a dyadic that fits.
    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        if q.is_zero() {
            return Ball::zero(prec);
        }
        let num = q.numer();
        let den = q.denom();
        if den.magnitude().count_ones() == 1 {
            let shift = den.bits() as i64 - 1;
            return Ball::from_dyadic(Dyadic::new(num.clone(), -shift), prec);
        }
        // Scale so that |q| * 2^k < 2^prec.
        let k = prec as i64 - 1 - (num.bits() as i64 - den.bits() as i64);
        let (n, d) = if k >= 0 {
            (num.magnitude() << k as usize, den.magnitude().clone())
        } else {
            (num.magnitude().clone(), den.magnitude() << (-k) as usize)
        };
        // round to nearest: floor((2n + d) / 2d)
        let rounded: BigUint = ((n << 1usize) + &d) / (d << 1usize);
        let man = BigInt::from_biguint(num.sign(), rounded);
        Ball {
            mid: Dyadic::new(man, -k),
            rad: Mag::pow2(-k - 1),
            prec,
        }
    }

    /// Ball containing the whole interval `[lo, hi]`.
    pub fn from_bounds(lo: &Rational, hi: &Rational, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        let two = Rational::from_integer(BigInt::from(2));
        let centre = (lo + hi) / &two;
        let half = (hi - lo) / two;
        let b = Ball::from_rational(&centre, prec);
        let rad = b.rad.add(&Mag::from_rational(&half));
        Ball { mid: b.mid, rad, prec }
    }

    fn rounded(mut self) -> Self {
        let bits = self.mid.man.bits();
        if bits > self.prec as u64 {
            let shift = bits - self.prec as u64;
            let half = BigInt::one() << (shift - 1) as usize;
            let mag = self.mid.man.magnitude().clone();
            let r: BigUint = (mag + half.magnitude()) >> shift as usize;
            let new_exp = self.mid.exp + shift as i64;
            self.mid = Dyadic::new(BigInt::from_biguint(self.mid.man.sign(), r), new_exp);
            self.rad = self.rad.add(&Mag::pow2(new_exp));
        }
        self
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mid(&self) -> &Dyadic {
        &self.mid
    }

    pub fn rad(&self) -> Mag {
        self.rad
    }

    pub fn mid_rational(&self) -> Rational {
        self.mid.to_rational()
    }

    pub fn rad_rational(&self) -> Rational {
        self.rad.to_rational()
    }

    pub fn lower_dyadic(&self) -> Dyadic {
        self.mid.sub(&self.rad.to_dyadic())
    }

    pub fn upper_dyadic(&self) -> Dyadic {
        self.mid.add(&self.rad.to_dyadic())
    }

    pub fn lower(&self) -> Rational {
        self.lower_dyadic().to_rational()
    }

    pub fn upper(&self) -> Rational {
        self.upper_dyadic().to_rational()
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lower() <= q && q <= &self.upper()
    }

    /// Ball encloses `other` entirely.
    pub fn contains_ball(&self, other: &Ball) -> bool {
        self.lower_dyadic().cmp_value(&other.lower_dyadic()) != Ordering::Greater
            && self.upper_dyadic().cmp_value(&other.upper_dyadic()) != Ordering::Less
    }

    pub fn with_prec(&self, prec: u32) -> Ball {
        Ball { mid: self.mid.clone(), rad: self.rad, prec }.rounded()
    }

    pub fn neg(&self) -> Ball {
        Ball { mid: self.mid.neg(), rad: self.rad, prec: self.prec }
    }

    pub fn add(&self, other: &Ball) -> Ball {
        let prec = self.prec.max(other.prec);
        // A summand far below the other's last bit only widens the radius.
        if !self.mid.is_zero() && !other.mid.is_zero() {
            if other.mid.top() < self.mid.exp - 2 {
                let rad = self.rad.add(&other.rad).add(&Mag::from_dyadic(&other.mid));
                return Ball { mid: self.mid.clone(), rad, prec }.rounded();
            }
            if self.mid.top() < other.mid.exp - 2 {
                return other.add(self);
            }
        }
        Ball {
            mid: self.mid.add(&other.mid),
            rad: self.rad.add(&other.rad),
            prec,
        }
        .rounded()
    }

    pub fn sub(&self, other: &Ball) -> Ball {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Ball) -> Ball {
        let prec = self.prec.max(other.prec);
        let rad = Mag::from_dyadic(&self.mid)
            .mul(&other.rad)
            .add(&Mag::from_dyadic(&other.mid).mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        Ball { mid: self.mid.mul(&other.mid), rad, prec }.rounded()
    }

    pub fn mul_rational(&self, q: &Rational) -> Ball {
        self.mul(&Ball::from_rational(q, self.prec))
    }

    pub fn add_rational(&self, q: &Rational) -> Ball {
        self.add(&Ball::from_rational(q, self.prec))
    }

    /// Multiplication by `2^k`, exact.
    pub fn mul_2exp(&self, k: i64) -> Ball {
        Ball {
            mid: Dyadic::new(self.mid.man.clone(), self.mid.exp + k),
            rad: Mag { man: self.rad.man, exp: self.rad.exp + k },
            prec: self.prec,
        }
    }

    /// Quotient through the exact interval endpoints.
    pub fn div(&self, other: &Ball) -> Result<Ball> {
        let prec = self.prec.max(other.prec);
        let (blo, bhi) = (other.lower(), other.upper());
        if !blo.is_positive() && !bhi.is_negative() {
            return Err(Error::DivisionByZero);
        }
        let (alo, ahi) = (self.lower(), self.upper());
        let cands = [&alo / &blo, &alo / &bhi, &ahi / &blo, &ahi / &bhi];
        let lo = cands.iter().min().cloned().unwrap_or_default();
        let hi = cands.iter().max().cloned().unwrap_or_default();
        Ok(Ball::from_bounds(&lo, &hi, prec))
    }

    /// Square root of a ball whose lower end is nonnegative.
    pub fn sqrt(&self) -> Result<Ball> {
        let lo = self.lower();
        if lo.is_negative() {
            return Err(Error::Domain("sqrt of a ball reaching below zero".into()));
        }
        let hi = self.upper();
        let k = self.prec as usize + 8;
        let root = |q: &Rational, up: bool| -> Rational {
            // sqrt(q) ~ isqrt(q * 4^k) / 2^k
            let scaled = q * Rational::from_integer(BigInt::one() << (2 * k));
            let floor = scaled.floor().to_integer();
            let s = floor.sqrt();
            let s = if up { s + 1u32 } else { s };
            Rational::new(s, BigInt::one() << k)
        };
        Ok(Ball::from_bounds(&root(&lo, false), &root(&hi, true), self.prec))
    }

    /// Natural logarithm of a ball that lies strictly right of zero.
    pub fn ln(&self) -> Result<Ball> {
        let lo = self.lower();
        if !lo.is_positive() {
            return Err(Error::Domain("log of a ball reaching zero or below".into()));
        }
        let hi = self.upper();
        let l = super::consts::const_log(&lo, self.prec)?;
        let u = super::consts::const_log(&hi, self.prec)?;
        Ok(Ball::from_bounds(&l.lower(), &u.upper(), self.prec))
    }

    pub fn is_positive(&self) -> bool {
        self.lower_dyadic().man.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.upper_dyadic().man.is_negative()
    }

    /// Rough value for display and trend tables only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.mid_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// `mid ± rad` with `digits` decimals for the midpoint.
    pub fn display(&self, digits: usize) -> String {
        format!(
            "{} +/- {}",
            format_decimal(&self.mid_rational(), digits, false),
            format_sci_upper(&self.rad_rational(), 2)
        )
    }

    /// `mid +/- rad` with the midpoint in scientific form, `sig` digits.
    pub fn display_sci(&self, sig: usize) -> String {
        format!(
            "{} +/- {}",
            format_sci(&self.mid_rational(), sig),
            format_sci_upper(&self.rad_rational(), 2)
        )
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(20))
    }
}

/// `Less` iff `sup(a) < inf(b)`; `Greater` iff `inf(a) > sup(b)`.
pub fn cmp_strict(a: &Ball, b: &Ball) -> StrictOrder {
    if a.upper_dyadic().cmp_value(&b.lower_dyadic()) == Ordering::Less {
        StrictOrder::Less
    } else if a.lower_dyadic().cmp_value(&b.upper_dyadic()) == Ordering::Greater {
        StrictOrder::Greater
    } else {
        StrictOrder::Unknown
    }
}

/// Strict comparison of a ball against zero.
pub fn sign_strict(a: &Ball) -> StrictOrder {
    cmp_strict(a, &Ball::zero(a.prec))
}

pub fn ball_from_rational(q: &Rational, prec: u32) -> Ball {
    Ball::from_rational(q, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::{int, ratio};

    fn interval(lo: Rational, hi: Rational) -> Ball {
        Ball::from_bounds(&lo, &hi, 64)
    }

    #[test]
    fn dyadic_rationals_are_exact() {
        for p in [2, 10, 53, 200] {
            let b = Ball::from_rational(&ratio(1, 2), p);
            assert!(b.rad().is_zero());
            assert_eq!(b.mid_rational(), ratio(1, 2));
        }
    }

    #[test]
    fn non_dyadic_has_radius() {
        let b = Ball::from_rational(&ratio(1, 3), 53);
        assert!(!b.rad().is_zero());
        assert!(b.contains(&ratio(1, 3)));
        // radius at most one ulp
        assert!(b.rad_rational() <= Rational::new(BigInt::one(), BigInt::one() << 54usize));
    }

    #[test]
    fn long_division_value() {
        // 11/192 = 0.057291666...
        let b = Ball::from_rational(&ratio(11, 192), 64);
        assert!(b.contains(&ratio(11, 192)));
        assert_eq!(format_decimal(&b.mid_rational(), 10, false), "0.0572916667");
    }

    #[test]
    fn strict_comparisons() {
        let a = interval(int(0), ratio(1, 10));
        let b = interval(ratio(2, 10), ratio(3, 10));
        assert_eq!(cmp_strict(&a, &b), StrictOrder::Less);
        assert_eq!(cmp_strict(&b, &a), StrictOrder::Greater);
        let c = interval(int(0), ratio(2, 10));
        let d = interval(ratio(1, 10), ratio(3, 10));
        assert_eq!(cmp_strict(&c, &d), StrictOrder::Unknown);
    }

    #[test]
    fn mag_rounds_up() {
        let q = ratio(1, 3);
        let m = Mag::from_rational(&q);
        assert!(m.to_rational() >= q);
        assert!(m.to_rational() - &q < ratio(1, 1 << 30));
        let a = Mag::pow2(0);
        let tiny = Mag::pow2(-500);
        assert!(a.add(&tiny).to_rational() > int(1));
    }

    #[test]
    fn division_and_sqrt() {
        let two = Ball::from_int(2, 128);
        let three = Ball::from_int(3, 128);
        let q = two.div(&three).unwrap();
        assert!(q.contains(&ratio(2, 3)));
        let zeroish = interval(ratio(-1, 10), ratio(1, 10));
        assert_eq!(two.div(&zeroish).unwrap_err(), Error::DivisionByZero);
        let r = two.sqrt().unwrap();
        let sq = r.mul(&r);
        assert!(sq.contains(&int(2)));
        assert!(r.rad_rational() < ratio(1, 1 << 40));
    }

    #[test]
    fn far_apart_sums_stay_sound() {
        let big = Ball::from_int(1, 64);
        let small = Ball::from_rational(&Rational::new(BigInt::one(), BigInt::one() << 300usize), 64);
        let s = big.add(&small);
        let exact = int(1) + Rational::new(BigInt::one(), BigInt::one() << 300usize);
        assert!(s.contains(&exact));
        let s2 = small.add(&big);
        assert!(s2.contains(&exact));
    }
}

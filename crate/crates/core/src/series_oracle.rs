//! Exact truncated power series and the series route to `ρ_k`.
//!
//! `u(x) = F(1/4, 1/4; 1; sin^2(x/2)) * (x/2) / sin(x/2)` has Maclaurin
//! coefficients `ρ_k` at `x^{2k}`. Everything here is formal: rational
//! coefficients, truncated at a fixed order, no convergence questions.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::rational::{factorial_int, sign_pow};
use crate::numerics::Rational;

/// `Σ_{m=0}^{M} c_m x^m`, exact modulo `x^{M+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Series from its coefficients `c_0..=c_M`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &Rational {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Same series cut (or zero-padded) to `order`.
    pub fn truncated(&self, order: usize) -> TruncSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { coeffs }
    }

    fn check_order(&self, other: &TruncSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Cauchy product truncated at `x^M`.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        let m = self.order();
        let mut out = vec![Rational::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=m - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `b` with `self * b = 1 mod x^{M+1}`.
    pub fn reciprocal(&self) -> Result<TruncSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let m = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(m + 1);
        out.push(inv0.clone());
        for n in 1..=m {
            let mut acc = Rational::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() && !out[n - i].is_zero() {
                    acc += a * &out[n - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `outer(inner(x))` for an inner series with zero constant term, by
    /// Horner's rule. Only `outer` coefficients up to the inner valuation
    /// bound contribute.
    pub fn compose(outer: &TruncSeries, inner: &TruncSeries) -> Result<TruncSeries> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain("inner series must vanish at 0".into()));
        }
        let m = inner.order();
        let valuation = inner.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(m + 1);
        let terms = if valuation > m { 0 } else { (m / valuation).min(outer.order()) };
        let mut acc = TruncSeries::zero(m);
        acc.coeffs[0] = outer.coeffs[terms].clone();
        for j in (0..terms).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += &outer.coeffs[j];
        }
        Ok(acc)
    }
}

/// Taylor series of `sin^2(x/d)` to order `order`:
/// the coefficient of `x^{2k}` is `(-1)^{k+1} (2/d)^{2k} / (2 (2k)!)`.
pub fn sin_sq_series(d: u32, order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    for k in 1..=order / 2 {
        let scale = Rational::new(BigInt::from(2u32).pow(2 * k as u32), BigInt::from(d).pow(2 * k as u32));
        s.coeffs[2 * k] = sign_pow(k as i64 + 1) * scale
            / Rational::from_integer(factorial_int(2 * k as u64) * 2u32);
    }
    s
}

/// `sin^2(x/2)`; constant term 0, `x^2` coefficient `1/4`.
pub fn sin_half_sq_series(order: usize) -> TruncSeries {
    sin_sq_series(2, order)
}

/// `sin(x/2) / (x/2) = Σ (-1)^k (x/2)^{2k} / (2k+1)!`.
pub fn sinc_half_series(order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    for k in 0..=order / 2 {
        s.coeffs[2 * k] = sign_pow(k as i64)
            / Rational::from_integer((BigInt::one() << (2 * k)) * factorial_int(2 * k as u64 + 1));
    }
    s
}

/// Maclaurin series of `F(a, b; c; t)` in `t`:
/// coefficient `m` is `(a)_m (b)_m / ((c)_m m!)`.
pub fn hyp_series(a: &Rational, b: &Rational, c: &Rational, order: usize) -> Result<TruncSeries> {
    if c.is_integer() && !c.is_positive() {
        return Err(Error::Domain(format!("c = {c} is a nonpositive integer")));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut cur = Rational::one();
    coeffs.push(cur.clone());
    for m in 0..order {
        let mm = Rational::from_integer(BigInt::from(m));
        cur = cur * (a + &mm) * (b + &mm) / ((c + &mm) * (&mm + Rational::one()));
        coeffs.push(cur.clone());
    }
    Ok(TruncSeries { coeffs })
}

/// Exact truncated series of `u(x)`; `x^{2k}` carries `ρ_k`.
pub fn u_series(order: usize) -> TruncSeries {
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    let f = hyp_series(&quarter, &quarter, &Rational::one(), order / 2)
        .expect("c = 1 is valid")
        .truncated(order);
    let hyp = TruncSeries::compose(&f, &sin_half_sq_series(order)).expect("sin^2 vanishes at 0");
    let inv_sinc = sinc_half_series(order).reciprocal().expect("sinc(0) = 1");
    hyp.mul(&inv_sinc).expect("same order")
}

/// `ρ_k` as the `x^{2k}` coefficient of `u`, built at the minimal order.
pub fn rho_from_series(k: u32) -> Rational {
    let m = 2 * k as usize;
    u_series(m).coeff(m).clone()
}

/// `[ρ_0, ..., ρ_{k_max}]` from a single expansion.
pub fn rho_series_all(k_max: u32) -> Vec<Rational> {
    let m = 2 * k_max as usize;
    let u = u_series(m);
    (0..=k_max as usize).map(|k| u.coeff(2 * k).clone()).collect()
}

/// `β_{2k} = (-1)^{k+1} (2k-1)! ρ_k`, from the series.
pub fn beta_from_series(k_max: u32) -> Vec<Rational> {
    rho_series_all(k_max)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, rho)| {
            sign_pow(k as i64 + 1) * rho * Rational::from_integer(factorial_int(2 * k as u64 - 1))
        })
        .collect()
}

//! Checks on `ρ_k` and `r_{l,s}`, and the `β` growth table.

use num_traits::Signed;
use rayon::prelude::*;

use super::{all_positive, escalate, exact_result, CheckResult, VerificationReport};
use crate::coefficients::CoefficientTable;
use crate::error::{domain, Result};
use crate::numerics::rational::{format_sci, to_text};
use crate::numerics::{
    const_gamma, const_log, const_pi, factorial, format_decimal, int, ratio, Ball, PrecisionPolicy, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioRow {
    pub k: u32,
    /// Exact `ρ_k / ρ_{k+1}`.
    pub ratio: Rational,
    /// The ratio correctly rounded to two decimals.
    pub two_decimals: String,
}

/// `ρ_k / ρ_{k+1}` for `0 <= k <= k_max`.
pub fn lemma22_table(k_max: u32) -> Vec<RatioRow> {
    let table = CoefficientTable::global();
    table.betas(k_max + 1);
    (0..=k_max)
        .map(|k| {
            let ratio = table.rho(k) / table.rho(k + 1);
            let two_decimals = format_decimal(&ratio, 2, false);
            RatioRow { k, ratio, two_decimals }
        })
        .collect()
}

/// `ρ_k / ρ_{k+1} < 44π²/9` for `0 <= k <= k_max`.
pub fn check_lemma22(k_max: u32, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    if k_max == 0 {
        return domain("k_max must be >= 1");
    }
    let results: Result<Vec<CheckResult>> = lemma22_table(k_max)
        .into_iter()
        .map(|row| {
            escalate(policy, vec![i64::from(row.k)], |p| {
                let pi = const_pi(p);
                let bound = pi.mul(&pi).mul_rational(&ratio(44, 9));
                let gap = bound.add_rational(&-&row.ratio);
                Ok((
                    all_positive(&[&gap]),
                    format!("ratio = {} ({}); 44pi^2/9 - ratio = {}", row.two_decimals, to_text(&row.ratio), gap.display(6)),
                ))
            })
        })
        .collect();
    Ok(VerificationReport::new(
        "lemma22",
        &[("k_max", i64::from(k_max))],
        &["k"],
        results?,
        Some(*policy),
    ))
}

/// Exact sign test `(-1)^{l+1} r_{l,s} > 0` for `1 <= l <= l_max`,
/// `l+1 <= s <= l+s_span`.
pub fn check_lemma23(l_max: u32, s_span: u32) -> Result<VerificationReport> {
    if l_max == 0 || s_span == 0 {
        return domain("l_max and s_span must be >= 1");
    }
    let table = CoefficientTable::global();
    table.betas(l_max);
    let rows: Result<Vec<Vec<CheckResult>>> = (1..=l_max)
        .into_par_iter()
        .map(|l| {
            (l + 1..=l + s_span)
                .map(|s| {
                    let r = table.r_coeff(l, s)?;
                    let signed = if l % 2 == 1 { r } else { -r };
                    Ok(exact_result(
                        vec![i64::from(l), i64::from(s)],
                        signed.is_positive(),
                        format!("(-1)^(l+1) r = {}", format_sci(&signed, 6)),
                    ))
                })
                .collect()
        })
        .collect();
    Ok(VerificationReport::new(
        "lemma23",
        &[("l_max", i64::from(l_max)), ("s_span", i64::from(s_span))],
        &["l", "s"],
        rows?.into_iter().flatten().collect(),
        None,
    ))
}

/// The printed offset in the sandwich constants.
const DELTA_BOUND: (i64, i64) = (10259, 10000);

/// Enclosures of `C_lo, C_hi = 16 ln 2 - 4γ - 4 ln(2π) ∓ 1.0259`.
pub fn sandwich_constants(p: u32) -> Result<(Ball, Ball)> {
    let two_pi = const_pi(p).mul_2exp(1);
    let centre = const_log(&int(2), p)?
        .mul_2exp(4)
        .sub(&const_gamma(p).mul_2exp(2))
        .sub(&two_pi.ln()?.mul_2exp(2));
    let delta = ratio(DELTA_BOUND.0, DELTA_BOUND.1);
    Ok((centre.add_rational(&-&delta), centre.add_rational(&delta)))
}

/// `(4 ln 2k + C_lo)/(2π)^{2k} <= (π/√2) ρ_k <= (4 ln 2k + C_hi)/(2π)^{2k}`
/// for `k_min <= k <= k_max`, decided strictly.
pub fn check_rho_sandwich(k_min: u32, k_max: u32, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    if k_min < 10 {
        return domain(format!("the sandwich is only claimed for k >= 10, got k_min = {k_min}"));
    }
    if k_max < k_min {
        return domain("k_max < k_min");
    }
    let table = CoefficientTable::global();
    table.betas(k_max);
    let results: Result<Vec<CheckResult>> = (k_min..=k_max)
        .into_par_iter()
        .map(|k| {
            let rho = table.rho(k);
            escalate(policy, vec![i64::from(k)], |p| {
                let scaled = scaled_rho(&rho, k, p)?;
                let (c_lo, c_hi) = sandwich_constants(p)?;
                let log_term = const_log(&int(2 * i64::from(k)), p)?.mul_2exp(2);
                let lower_gap = scaled.sub(&log_term.add(&c_lo));
                let upper_gap = log_term.add(&c_hi).sub(&scaled);
                let delta = scaled.sub(&log_term).sub(&c_lo.add(&c_hi).mul_2exp(-1));
                Ok((
                    all_positive(&[&lower_gap, &upper_gap]),
                    format!(
                        "(pi/sqrt2) rho_k (2pi)^2k - 4 ln 2k = {}; offset from centre = {}",
                        scaled.sub(&log_term).display(6),
                        delta.display(6)
                    ),
                ))
            })
        })
        .collect();
    Ok(VerificationReport::new(
        "rho-sandwich",
        &[("k_min", i64::from(k_min)), ("k_max", i64::from(k_max))],
        &["k"],
        results?,
        Some(*policy),
    ))
}

/// `(π/√2) ρ_k (2π)^{2k}`.
fn scaled_rho(rho: &Rational, k: u32, p: u32) -> Result<Ball> {
    let pi = const_pi(p);
    let mut pow = Ball::from_int(1, p);
    for _ in 0..2 * k {
        pow = pow.mul(&pi);
    }
    pi.mul(&pow)
        .mul_2exp(2 * i64::from(k))
        .mul_rational(rho)
        .div(&Ball::from_int(2, p).sqrt()?)
}

#[derive(Clone, Debug)]
pub struct GrowthRow {
    pub l: u32,
    /// `π (2π)^{2l} |β_{2l}| / ((2l-1)! 4√2 ln 2l)`.
    pub ratio: Ball,
    /// `|β_{2l}| (2π)^{2l} / (2l-1)!`, which grows like `ln l`.
    pub scaled: Ball,
}

/// Trend table for `β_{2l}` growth; report only.
pub fn beta_growth_report(l_min: u32, l_max: u32, p: u32) -> Result<Vec<GrowthRow>> {
    if l_min < 2 {
        return domain("l_min must be >= 2");
    }
    let table = CoefficientTable::global();
    table.betas(l_max);
    let pi = const_pi(p);
    let four_sqrt2 = Ball::from_int(2, p).sqrt()?.mul_2exp(2);
    (l_min..=l_max)
        .map(|l| {
            let b = table.beta(2 * l)?.abs();
            let mut pow = Ball::from_int(1, p);
            for _ in 0..2 * l {
                pow = pow.mul(&pi);
            }
            let scaled = pow
                .mul_2exp(2 * i64::from(l))
                .mul_rational(&(b / factorial(2 * u64::from(l) - 1)));
            let denom = four_sqrt2.mul(&const_log(&int(2 * i64::from(l)), p)?);
            let ratio = pi.mul(&scaled).div(&denom)?;
            Ok(GrowthRow { l, ratio, scaled })
        })
        .collect()
}

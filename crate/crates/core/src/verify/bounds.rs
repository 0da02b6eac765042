//! Bounds in the variable `16n`: the classical two-sided bound and the
//! sign pattern conjectured for the `a_k` truncations.

use num_traits::Zero;
use rayon::prelude::*;

use super::expansion::Anchor;
use super::{all_positive, escalate, CheckResult, VerificationReport};
use crate::coefficients::CoefficientTable;
use crate::error::{domain, Result};
use crate::landau::LandauSequence;
use crate::numerics::{int, ratio, Ball, PrecisionPolicy, Rational};

/// Anchor `π G_{n-1} - ln(16n) - γ`, `n >= 1`.
fn anchor(n: u32) -> Anchor {
    Anchor::new(LandauSequence::global().get(n as usize - 1), int(16 * i64::from(n)))
}

/// `ln(16n) + γ - 1/(4n) + 5/(192n²) < π G_{n-1} < ... + 3/(128n³)` for
/// `1 <= n <= n_max`.
pub fn check_classical(n_max: u32, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    if n_max == 0 {
        return domain("n_max must be >= 1");
    }
    LandauSequence::global().get(n_max as usize);
    let results: Result<Vec<CheckResult>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let nn = i64::from(n);
            let low = ratio(-1, 4 * nn) + ratio(5, 192 * nn * nn);
            let high = &low + ratio(3, 128 * nn * nn * nn);
            let mut a = anchor(n);
            escalate(policy, vec![nn], |p| {
                let base = a.at(p)?;
                let above_low = base.add_rational(&-&low);
                let below_high = Ball::from_rational(&high, p).sub(&base);
                Ok((
                    all_positive(&[&above_low, &below_high]),
                    format!("piG - lower = {}; upper - piG = {}", above_low.display_sci(6), below_high.display_sci(6)),
                ))
            })
        })
        .collect();
    Ok(VerificationReport::new(
        "classical",
        &[("n_max", i64::from(n_max))],
        &["n"],
        results?,
        Some(*policy),
    ))
}

/// `(-1)^{m(m+1)/2} (π G_{n-1} - A_m(n)) < 0`, with
/// `A_m(n) = ln(16n) + γ + Σ_{k=1}^{m} a_k/(16n)^k`, for `0 <= m <= m_max`,
/// `1 <= n <= n_max`. Labelled CONJECTURE; failures are findings.
pub fn check_granath(m_max: u32, n_max: u32, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    if n_max == 0 {
        return domain("n_max must be >= 1");
    }
    let table = CoefficientTable::global();
    let a: Vec<Rational> = (1..=m_max).map(|k| table.granath_a(k)).collect::<Result<_>>()?;
    LandauSequence::global().get(n_max as usize);
    let rows: Result<Vec<Vec<CheckResult>>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let inv = ratio(1, 16 * i64::from(n));
            let mut sums = vec![Rational::zero()];
            let mut pow = Rational::from_integer(1.into());
            for ak in &a {
                pow *= &inv;
                let next = sums.last().expect("nonempty") + ak * &pow;
                sums.push(next);
            }
            let mut anc = anchor(n);
            (0..=m_max)
                .map(|m| {
                    let flip = (m * (m + 1) / 2) % 2 == 1;
                    escalate(policy, vec![i64::from(m), i64::from(n)], |p| {
                        let diff = anc.at(p)?.add_rational(&-&sums[m as usize]);
                        // Pass iff sign * diff < 0, i.e. -sign * diff > 0.
                        let x = if flip { diff } else { diff.neg() };
                        Ok((all_positive(&[&x]), format!("-(sign)(piG - A_m) = {}", x.display_sci(6))))
                    })
                })
                .collect()
        })
        .collect();
    Ok(VerificationReport::new(
        "granath",
        &[("m_max", i64::from(m_max)), ("n_max", i64::from(n_max))],
        &["m", "n"],
        rows?.into_iter().flatten().collect(),
        Some(*policy),
    )
    .with_banner("CONJECTURE"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::format_decimal;

    #[test]
    fn classical_small() {
        let r = check_classical(50, &PrecisionPolicy::default()).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_non_pass());
        assert!(check_classical(0, &PrecisionPolicy::default()).is_err());
    }

    #[test]
    fn granath_examples() {
        let r = check_granath(3, 20, &PrecisionPolicy::default()).unwrap();
        assert_eq!(r.banner.as_deref(), Some("CONJECTURE"));
        assert!(r.all_pass(), "{:?}", r.first_non_pass());
        // (m, n) = (0, 1): π - (ln 16 + γ) ≈ -0.208
        let b = anchor(1).at(128).unwrap();
        assert_eq!(format_decimal(&b.mid_rational(), 3, false), "-0.208");
        // (m, n) = (1, 1): π - (A_0 - 1/4) ≈ 0.042
        assert_eq!(format_decimal(&b.add_rational(&ratio(1, 4)).mid_rational(), 3, false), "0.042");
    }
}

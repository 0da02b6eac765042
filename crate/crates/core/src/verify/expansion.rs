//! The truncation error `ε_l(N)` of the `N = n + 3/4` expansion and the
//! theorem sweeps built on it.

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{all_positive, escalate, CheckResult, Status, VerificationReport};
use crate::coefficients::CoefficientTable;
use crate::error::{domain, Result};
use crate::landau::{landau_exact, LandauSequence};
use crate::numerics::{const_gamma, const_log, const_pi, int, ratio, Ball, PrecisionPolicy, Rational};

/// `π g - ln(arg) - γ`, evaluated lazily and kept per precision.
pub(crate) struct Anchor {
    g: Rational,
    log_arg: Rational,
    cache: Vec<(u32, Ball)>,
}

impl Anchor {
    pub(crate) fn new(g: Rational, log_arg: Rational) -> Self {
        Anchor { g, log_arg, cache: Vec::new() }
    }

    pub(crate) fn at(&mut self, p: u32) -> Result<Ball> {
        if let Some((_, b)) = self.cache.iter().find(|(q, _)| *q == p) {
            return Ok(b.clone());
        }
        let b = const_pi(p)
            .mul_rational(&self.g)
            .sub(&const_log(&self.log_arg, p)?)
            .sub(&const_gamma(p));
        self.cache.push((p, b.clone()));
        Ok(b)
    }
}

/// Exact pieces of the expansion at one `n`: `term[l] = β_{2l}/N^{2l}`
/// and `sum[l] = Σ_{s<l} term[s]`, both indexed from 1.
struct Partial {
    term: Vec<Rational>,
    sum: Vec<Rational>,
}

fn big_n(n: u32) -> Rational {
    int(i64::from(n)) + ratio(3, 4)
}

fn partial(n: u32, l_max: u32) -> Partial {
    let betas = CoefficientTable::global().betas(l_max);
    let inv_sq = (big_n(n) * big_n(n)).recip();
    let mut term = vec![Rational::zero()];
    let mut sum = vec![Rational::zero(), Rational::zero()];
    let mut pow = Rational::one();
    for (i, b) in betas.iter().enumerate() {
        pow *= &inv_sq;
        let t = b * &pow;
        let next = &sum[i + 1] + &t;
        term.push(t);
        sum.push(next);
    }
    Partial { term, sum }
}

/// Anchor for `ε_l(N)`: `ln N + 4 ln 2 = ln(16n + 12)`.
fn eps_anchor(n: u32) -> Anchor {
    Anchor::new(landau_exact(n as usize), int(16 * i64::from(n) + 12))
}

fn signed(b: Ball, l: u32) -> Ball {
    if l % 2 == 1 {
        b
    } else {
        b.neg()
    }
}

/// Enclosure of `ε_l(N) = π G_n - [ln N + γ + 4 ln 2 + Σ_{s=1}^{l-1} β_{2s}/N^{2s}]`.
pub fn eval_epsilon(n: u32, l: u32, p: u32) -> Result<Ball> {
    if l == 0 {
        return domain("ε_l needs l >= 1");
    }
    let part = partial(n, l);
    Ok(eps_anchor(n).at(p)?.add_rational(&-&part.sum[l as usize]))
}

fn prefill(n_max: u32, l_max: u32) {
    LandauSequence::global().get(n_max as usize);
    CoefficientTable::global().betas(l_max);
}

fn sweep<F>(n_max: u32, row: F) -> Result<Vec<CheckResult>>
where
    F: Fn(u32) -> Result<Vec<CheckResult>> + Sync + Send,
{
    let rows: Result<Vec<Vec<CheckResult>>> = (0..=n_max).into_par_iter().map(row).collect();
    Ok(rows?.into_iter().flatten().collect())
}

/// `(-1)^{l+1} ε_l(N) > 0` for `0 <= n <= n_max`, `1 <= l <= l_max`.
pub fn check_thm1(n_max: u32, l_max: u32, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    if l_max == 0 {
        return domain("l_max must be >= 1");
    }
    prefill(n_max, l_max);
    let results = sweep(n_max, |n| {
        let part = partial(n, l_max);
        let mut anchor = eps_anchor(n);
        (1..=l_max)
            .map(|l| {
                escalate(policy, vec![i64::from(n), i64::from(l)], |p| {
                    let x = signed(anchor.at(p)?.add_rational(&-&part.sum[l as usize]), l);
                    Ok((all_positive(&[&x]), format!("(-1)^(l+1) eps = {}", x.display_sci(6))))
                })
            })
            .collect()
    })?;
    Ok(VerificationReport::new(
        "thm1",
        &[("n_max", i64::from(n_max)), ("l_max", i64::from(l_max))],
        &["n", "l"],
        results,
        Some(*policy),
    ))
}

/// `0 < (-1)^{l+1} ε_l(N) < (-1)^{l+1} β_{2l}/N^{2l}` on the same grid.
pub fn check_thm2(n_max: u32, l_max: u32, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    if l_max == 0 {
        return domain("l_max must be >= 1");
    }
    prefill(n_max, l_max);
    let results = sweep(n_max, |n| {
        let part = partial(n, l_max);
        let mut anchor = eps_anchor(n);
        (1..=l_max)
            .map(|l| {
                let bound = if l % 2 == 1 {
                    part.term[l as usize].clone()
                } else {
                    -&part.term[l as usize]
                };
                escalate(policy, vec![i64::from(n), i64::from(l)], |p| {
                    let x = signed(anchor.at(p)?.add_rational(&-&part.sum[l as usize]), l);
                    let gap = Ball::from_rational(&bound, p).sub(&x);
                    Ok((
                        all_positive(&[&x, &gap]),
                        format!("(-1)^(l+1) eps = {}; bound - that = {}", x.display_sci(6), gap.display_sci(6)),
                    ))
                })
            })
            .collect()
    })?;
    Ok(VerificationReport::new(
        "thm2",
        &[("n_max", i64::from(n_max)), ("l_max", i64::from(l_max))],
        &["n", "l"],
        results,
        Some(*policy),
    ))
}

/// Two-sided sandwich. Point `(n, 0, m)`: the partial sum through
/// `β_{4m}` lies below `π G_n`. Point `(n, 1, k)`: the partial sum through
/// `β_{4k-2}` lies above it.
pub fn check_thm3(n_max: u32, m_max: u32, k_max: u32, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    if m_max == 0 || k_max == 0 {
        return domain("m_max and k_max must be >= 1");
    }
    let l_top = (2 * m_max + 1).max(2 * k_max);
    prefill(n_max, l_top);
    let results = sweep(n_max, |n| {
        let part = partial(n, l_top);
        let mut anchor = eps_anchor(n);
        let sides = (1..=m_max).map(|m| (0i64, m, 2 * m + 1)).chain((1..=k_max).map(|k| (1i64, k, 2 * k)));
        sides
            .map(|(side, j, l)| {
                escalate(policy, vec![i64::from(n), side, i64::from(j)], |p| {
                    // π G_n minus the partial sum, oriented so Pass is positive.
                    let diff = anchor.at(p)?.add_rational(&-&part.sum[l as usize]);
                    let x = if side == 0 { diff } else { diff.neg() };
                    let what = if side == 0 { "piG - lower" } else { "upper - piG" };
                    Ok((all_positive(&[&x]), format!("{what} = {}", x.display_sci(6))))
                })
            })
            .collect()
    })?;
    Ok(VerificationReport::new(
        "thm3",
        &[("n_max", i64::from(n_max)), ("m_max", i64::from(m_max)), ("k_max", i64::from(k_max))],
        &["n", "side", "j"],
        results,
        Some(*policy),
    ))
}

/// Points `(n, l)` where the envelope check passes but a sign check at
/// `(n, l)` or `(n, l+1)` in `thm1` is present and does not.
pub fn thm2_implies_thm1(thm1: &VerificationReport, thm2: &VerificationReport) -> Vec<Vec<i64>> {
    let mut bad = Vec::new();
    for r in thm2.results.iter().filter(|r| r.status == Status::Pass) {
        let (n, l) = (r.point[0], r.point[1]);
        for q in [vec![n, l], vec![n, l + 1]] {
            if let Some(t) = thm1.result_at(&q) {
                if t.status != Status::Pass {
                    bad.push(r.point.clone());
                }
            }
        }
    }
    bad.dedup();
    bad
}

#[derive(Clone, Debug)]
pub struct Figure1Row {
    pub n: u32,
    pub big_n: Rational,
    pub ratio: Ball,
    /// Pass iff the enclosure lies strictly inside `(0, 1)`.
    pub status: Status,
    pub precision_used: u32,
}

/// `ε_l(N) / (β_{2l}/N^{2l})` for `0 <= n <= n_max`. Precision is raised
/// until membership in `(0, 1)` is decided and the radius is below `2^-60`.
pub fn figure1_data(l: u32, n_max: u32, policy: &PrecisionPolicy) -> Result<Vec<Figure1Row>> {
    if l == 0 {
        return domain("l must be >= 1");
    }
    prefill(n_max, l);
    let tiny = Rational::new(1.into(), num_bigint::BigInt::one() << 60usize);
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let part = partial(n, l);
            let scale = part.term[l as usize].recip();
            let mut anchor = eps_anchor(n);
            let mut out = None;
            for p in policy.schedule() {
                let r = anchor.at(p)?.add_rational(&-&part.sum[l as usize]).mul_rational(&scale);
                let one_minus = Ball::from_int(1, p).sub(&r);
                let status = match all_positive(&[&r, &one_minus]) {
                    Some(true) => Status::Pass,
                    Some(false) => Status::Fail,
                    None => Status::Unknown,
                };
                let done = status != Status::Unknown && r.rad_rational() < tiny;
                out = Some((r, status, p));
                if done {
                    break;
                }
            }
            let (r, status, p) = out.expect("schedule is nonempty");
            Ok(Figure1Row {
                n,
                big_n: big_n(n),
                ratio: r,
                status,
                precision_used: p,
            })
        })
        .collect()
}

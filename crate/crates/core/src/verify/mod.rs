//! Rigorous checkers. Every decision is a strict ball comparison (or an
//! exact rational sign); overlap at the precision cap is reported as
//! `Unknown`, never guessed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::numerics::{Ball, PrecisionPolicy};

mod bounds;
mod expansion;
mod rho;

pub use bounds::{check_classical, check_granath};
pub use expansion::{
    check_thm1, check_thm2, check_thm3, eval_epsilon, figure1_data, thm2_implies_thm1,
    Figure1Row,
};
pub use rho::{
    beta_growth_report, check_lemma22, check_lemma23, check_rho_sandwich, lemma22_table,
    sandwich_constants, GrowthRow, RatioRow,
};

/// Sweep defaults.
pub const DEFAULT_N_MAX: u32 = 1000;
pub const DEFAULT_L_MAX: u32 = 20;
pub const DEFAULT_K_MAX: u32 = 50;
pub const DEFAULT_M_MAX: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    /// Parameter tuple; component names are in the report's `point_names`.
    pub point: Vec<i64>,
    pub status: Status,
    /// Bits at which the decision was made; 0 for exact rational checks.
    pub precision_used: u32,
    pub witness: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    /// `Some("CONJECTURE")` for report-only checks.
    pub banner: Option<String>,
    pub ranges: BTreeMap<String, i64>,
    pub point_names: Vec<String>,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    /// `None` for purely rational checks.
    pub policy: Option<PrecisionPolicy>,
}

impl VerificationReport {
    /// Sorts results by point and tallies the summary.
    pub fn new(
        check_name: &str,
        ranges: &[(&str, i64)],
        point_names: &[&str],
        mut results: Vec<CheckResult>,
        policy: Option<PrecisionPolicy>,
    ) -> Self {
        results.sort_by(|a, b| a.point.cmp(&b.point));
        let mut summary = Summary { total: results.len(), ..Summary::default() };
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Unknown => summary.unknown += 1,
            }
        }
        VerificationReport {
            check_name: check_name.to_string(),
            banner: None,
            ranges: ranges.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            point_names: point_names.iter().map(|s| s.to_string()).collect(),
            results,
            summary,
            policy,
        }
    }

    pub fn with_banner(mut self, banner: &str) -> Self {
        self.banner = Some(banner.to_string());
        self
    }

    /// No `Fail` and no `Unknown`.
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.unknown == 0
    }

    pub fn result_at(&self, point: &[i64]) -> Option<&CheckResult> {
        self.results
            .binary_search_by(|r| r.point.as_slice().cmp(point))
            .ok()
            .map(|i| &self.results[i])
    }

    pub fn first_non_pass(&self) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.status != Status::Pass)
    }

    pub fn max_precision(&self) -> u32 {
        self.results.iter().map(|r| r.precision_used).max().unwrap_or(0)
    }
}

/// `Some(true)` if every ball is strictly positive, `Some(false)` if one
/// is strictly negative, `None` otherwise.
pub(crate) fn all_positive(balls: &[&Ball]) -> Option<bool> {
    if balls.iter().any(|b| b.is_negative()) {
        Some(false)
    } else if balls.iter().all(|b| b.is_positive()) {
        Some(true)
    } else {
        None
    }
}

/// Runs `attempt` along the policy's schedule until it decides. The
/// witness of the last attempt is kept either way.
pub(crate) fn escalate<F>(policy: &PrecisionPolicy, point: Vec<i64>, mut attempt: F) -> Result<CheckResult>
where
    F: FnMut(u32) -> Result<(Option<bool>, String)>,
{
    let mut last = (Status::Unknown, policy.start_bits, String::new());
    for p in policy.schedule() {
        let (decision, witness) = attempt(p)?;
        match decision {
            Some(ok) => {
                let status = if ok { Status::Pass } else { Status::Fail };
                return Ok(CheckResult { point, status, precision_used: p, witness });
            }
            None => last = (Status::Unknown, p, witness),
        }
    }
    Ok(CheckResult { point, status: last.0, precision_used: last.1, witness: last.2 })
}

pub(crate) fn exact_result(point: Vec<i64>, ok: bool, witness: String) -> CheckResult {
    CheckResult {
        point,
        status: if ok { Status::Pass } else { Status::Fail },
        precision_used: 0,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ratio;

    #[test]
    fn report_sorts_and_tallies() {
        let mk = |p: Vec<i64>, s| CheckResult { point: p, status: s, precision_used: 1, witness: String::new() };
        let r = VerificationReport::new(
            "t",
            &[("n_max", 2)],
            &["n"],
            vec![mk(vec![2], Status::Unknown), mk(vec![0], Status::Pass), mk(vec![1], Status::Fail)],
            None,
        );
        assert_eq!(r.results[0].point, vec![0]);
        assert_eq!(r.summary, Summary { total: 3, pass: 1, fail: 1, unknown: 1 });
        assert!(!r.all_pass());
        assert_eq!(r.result_at(&[1]).unwrap().status, Status::Fail);
        assert_eq!(r.first_non_pass().unwrap().point, vec![1]);
    }

    #[test]
    fn escalation_stops_at_first_decision() {
        let policy = PrecisionPolicy::default();
        let mut seen = Vec::new();
        let r = escalate(&policy, vec![0], |p| {
            seen.push(p);
            Ok((if p >= 512 { Some(true) } else { None }, format!("p={p}")))
        })
        .unwrap();
        assert_eq!(seen, vec![128, 256, 512]);
        assert_eq!((r.status, r.precision_used), (Status::Pass, 512));

        let r = escalate(&policy, vec![0], |_| Ok((None, "open".into()))).unwrap();
        assert_eq!((r.status, r.precision_used), (Status::Unknown, 8192));
    }

    #[test]
    fn all_positive_is_sound() {
        let pos = Ball::from_rational(&ratio(1, 3), 64);
        let neg = Ball::from_rational(&ratio(-1, 3), 64);
        let straddle = Ball::from_bounds(&ratio(-1, 3), &ratio(1, 3), 64);
        assert_eq!(all_positive(&[&pos, &pos]), Some(true));
        assert_eq!(all_positive(&[&pos, &straddle]), None);
        assert_eq!(all_positive(&[&straddle, &neg]), Some(false));
    }
}

//! Exact Landau constants `G_n = Σ_{m=0}^{n} ((2m-1)!!/(2m)!!)^2`.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::numerics::{int, ratio, Rational};

/// Growable prefix `G_0, G_1, ...`, extended lazily under a lock.
#[derive(Debug)]
pub struct LandauSequence {
    inner: RwLock<Prefix>,
}

#[derive(Debug)]
struct Prefix {
    values: Vec<Rational>,
    /// Last squared ratio term `t_n`, `t_0 = 1`.
    term: Rational,
}

impl Default for LandauSequence {
    fn default() -> Self {
        LandauSequence::new()
    }
}

impl LandauSequence {
    pub fn new() -> Self {
        LandauSequence {
            inner: RwLock::new(Prefix { values: vec![Rational::one()], term: Rational::one() }),
        }
    }

    pub fn global() -> &'static LandauSequence {
        static SEQ: OnceLock<LandauSequence> = OnceLock::new();
        SEQ.get_or_init(LandauSequence::new)
    }

    fn extend_to(&self, n: usize) {
        if self.inner.read().expect("landau poisoned").values.len() > n {
            return;
        }
        let mut p = self.inner.write().expect("landau poisoned");
        while p.values.len() <= n {
            let m = p.values.len() as i64;
            let f = ratio(2 * m - 1, 2 * m);
            p.term = &p.term * &f * &f;
            let next = p.values.last().expect("nonempty") + &p.term;
            p.values.push(next);
        }
    }

    /// `G_n`.
    pub fn get(&self, n: usize) -> Rational {
        self.extend_to(n);
        self.inner.read().expect("landau poisoned").values[n].clone()
    }

    /// `G_{n-1}` with the convention `G_{-1} = 0`.
    pub fn get_shifted(&self, n_minus_one: i64) -> Rational {
        if n_minus_one < 0 {
            Rational::zero()
        } else {
            self.get(n_minus_one as usize)
        }
    }

    /// `[G_0, ..., G_n]`.
    pub fn prefix(&self, n: usize) -> Vec<Rational> {
        self.extend_to(n);
        self.inner.read().expect("landau poisoned").values[..=n].to_vec()
    }
}

pub fn landau_exact(n: usize) -> Rational {
    LandauSequence::global().get(n)
}

/// `(G_{n+1} - G_n) - ((2n+1)/(2n+2))^2 (G_n - G_{n-1})`; identically 0.
pub fn diffeq_residual(n: usize) -> Rational {
    let seq = LandauSequence::global();
    let n_i = n as i64;
    let f = ratio(2 * n_i + 1, 2 * n_i + 2);
    let g0 = seq.get(n);
    (seq.get(n + 1) - &g0) - &f * &f * (g0 - seq.get_shifted(n_i - 1))
}

/// `(1+1/(4N))^2 G_{n+1} - (2+1/(8N^2)) G_n + (1-1/(4N))^2 G_{n-1}` with
/// `N = n + 3/4`; identically 0.
pub fn symmetric_residual(n: usize) -> Result<Rational> {
    if n == 0 {
        return domain("symmetric form needs n >= 1");
    }
    let seq = LandauSequence::global();
    let big_n = int(n as i64) + ratio(3, 4);
    let quarter_inv = (int(4) * &big_n).recip();
    let a = (int(1) + &quarter_inv) * (int(1) + &quarter_inv);
    let b = int(2) + (int(8) * &big_n * &big_n).recip();
    let c = (int(1) - &quarter_inv) * (int(1) - &quarter_inv);
    Ok(a * seq.get(n + 1) - b * seq.get(n) + c * seq.get(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn small_values() {
        assert_eq!(landau_exact(0), int(1));
        assert_eq!(landau_exact(1), int(1) + ratio(1, 4));
        assert_eq!(landau_exact(1), ratio(5, 4));
        assert_eq!(landau_exact(2), ratio(5, 4) + ratio(9, 64));
        assert_eq!(landau_exact(2), ratio(89, 64));
    }

    #[test]
    fn matches_double_factorial_definition() {
        // Oracle: squared ratio of double factorials, computed directly.
        let mut g = Rational::zero();
        for m in 0..25i64 {
            let odd: BigInt = (1..=m).map(|i| BigInt::from(2 * i - 1)).product();
            let even: BigInt = (1..=m).map(|i| BigInt::from(2 * i)).product();
            let r = Rational::new(odd, even);
            g += &r * &r;
            assert_eq!(landau_exact(m as usize), g);
        }
    }

    #[test]
    fn residuals_vanish() {
        for n in [0usize, 1, 2, 10, 100] {
            assert!(diffeq_residual(n).is_zero(), "n = {n}");
        }
        for n in [1usize, 2, 50] {
            assert!(symmetric_residual(n).unwrap().is_zero(), "n = {n}");
        }
        assert!(symmetric_residual(0).is_err());
    }

    #[test]
    fn structure() {
        let p = LandauSequence::new().prefix(200);
        for (n, w) in p.windows(2).enumerate() {
            assert!(w[1] > w[0]);
            // the denominator divides 2^{4(n+1)}
            let den = w[1].denom();
            assert_eq!(den.magnitude().count_ones(), 1);
            assert!(den.bits() - 1 <= 4 * (n as u64 + 1));
        }
    }
}

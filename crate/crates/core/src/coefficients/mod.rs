//! Exact coefficient families of the `N = n + 3/4` expansion.
//!
//! * `d_{j,s}`: coefficients of the formal substitution into the symmetric
//!   difference equation,
//! * `β_{2k}`: expansion coefficients, by recurrence and by a Hessenberg
//!   determinant,
//! * `ρ_k = (-1)^{k+1} β_{2k} / (2k-1)!`,
//! * `c_{k,s}` and `r_{l,s}`: the normalized and residual forms of the
//!   recurrence,
//! * `a_k`: coefficients of the `ln(16n)` expansion of `π G_{n-1}`.
//!
//! β is indexed by its subscript: `beta(2)` is `β_2`, odd subscripts are 0.

mod bareiss;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::numerics::rational::{factorial, factorial_int, int, ratio, sign_pow};
use crate::numerics::Rational;

pub use bareiss::{det_int, det_rational};

/// Product `lo * (lo+1) * ... * hi`, 1 when empty.
fn rising(lo: u64, hi: u64) -> BigInt {
    (lo..=hi).fold(BigInt::one(), |acc, k| acc * k)
}

/// Memoized store of `β_{2k}` and `d_{j,s}`, safe to share across threads.
#[derive(Debug, Default)]
pub struct CoefficientTable {
    /// `beta[k] = β_{2k}`; slot 0 is unused.
    beta: RwLock<Vec<Rational>>,
    d_cache: RwLock<HashMap<(u32, u32), Rational>>,
}

impl CoefficientTable {
    pub fn new() -> Self {
        CoefficientTable {
            beta: RwLock::new(vec![Rational::zero()]),
            d_cache: RwLock::new(HashMap::new()),
        }
    }

    /// Process-wide table used by the free functions of this module.
    pub fn global() -> &'static CoefficientTable {
        static TABLE: OnceLock<CoefficientTable> = OnceLock::new();
        TABLE.get_or_init(CoefficientTable::new)
    }

    pub fn d_coeff(&self, j: u32, s: u32) -> Result<Rational> {
        let valid = if j == 0 { s >= 2 } else { s > j };
        if !valid {
            return domain(format!("d_{{{j},{s}}} is undefined"));
        }
        if let Some(v) = self.d_cache.read().expect("d cache poisoned").get(&(j, s)) {
            return Ok(v.clone());
        }
        let v = d_closed_form(j, s);
        self.d_cache
            .write()
            .expect("d cache poisoned")
            .insert((j, s), v.clone());
        Ok(v)
    }

    fn d(&self, j: u32, s: u32) -> Rational {
        self.d_coeff(j, s).expect("index checked by caller")
    }

    /// Extends the β store through `β_{2k_max}` by the recurrence
    /// `β_{2k} = -(Σ_{j=1}^{k-1} d_{j,k+1} β_{2j} - d_{0,k+1}) / (4k^2)`.
    fn fill_beta(&self, k_max: u32) {
        if self.beta.read().expect("beta poisoned").len() > k_max as usize {
            return;
        }
        let mut beta = self.beta.write().expect("beta poisoned");
        while beta.len() <= k_max as usize {
            let k = beta.len() as u32;
            let mut acc = -self.d(0, k + 1);
            for j in 1..k {
                acc += self.d(j, k + 1) * &beta[j as usize];
            }
            beta.push(-acc / int(4 * i64::from(k) * i64::from(k)));
        }
    }

    /// `β_index` by the recurrence. Odd subscripts give 0.
    pub fn beta(&self, index: u32) -> Result<Rational> {
        if index == 0 {
            return domain("β_0 is not part of the expansion");
        }
        if index % 2 == 1 {
            return Ok(Rational::zero());
        }
        let k = index / 2;
        self.fill_beta(k);
        Ok(self.beta.read().expect("beta poisoned")[k as usize].clone())
    }

    /// `[β_2, β_4, ..., β_{2k_max}]`.
    pub fn betas(&self, k_max: u32) -> Vec<Rational> {
        self.fill_beta(k_max);
        self.beta.read().expect("beta poisoned")[1..=k_max as usize].to_vec()
    }

    pub fn rho(&self, k: u32) -> Rational {
        if k == 0 {
            return Rational::one();
        }
        let b = self.beta(2 * k).expect("k >= 1");
        sign_pow(i64::from(k) + 1) * b / factorial(2 * u64::from(k) - 1)
    }

    /// `c_{k,s}` for `0 <= k <= s-1`: `1/2` on the diagonal `k = s-1`,
    /// otherwise, with `l = s-1` and `m = l-k >= 1`,
    /// `1/(2(2m+2)!) + k/(2l(2m+2)!) + 1/(64 l^2 (2m)!)`.
    pub fn c_coeff(&self, k: u32, s: u32) -> Result<Rational> {
        if s < 2 || k >= s {
            return domain(format!("c_{{{k},{s}}} is undefined"));
        }
        if k == s - 1 {
            return Ok(ratio(1, 2));
        }
        let l = u64::from(s - 1);
        let m = l - u64::from(k);
        let f2m2 = Rational::from_integer(factorial_int(2 * m + 2));
        let f2m = Rational::from_integer(factorial_int(2 * m));
        let l_r = Rational::from_integer(BigInt::from(l));
        let two = int(2);
        Ok(Rational::one() / (&two * &f2m2)
            + Rational::from_integer(BigInt::from(k)) / (&two * &l_r * &f2m2)
            + Rational::one() / (int(64) * &l_r * &l_r * f2m))
    }

    /// `r_{l,s} = -(Σ_{j=1}^{l-1} d_{j,s} β_{2j} - d_{0,s})` for `s >= l+1`.
    pub fn r_coeff(&self, l: u32, s: u32) -> Result<Rational> {
        if l == 0 || s < l + 1 {
            return domain(format!("r_{{{l},{s}}} is undefined"));
        }
        let betas = if l > 1 { self.betas(l - 1) } else { Vec::new() };
        let mut acc = -self.d(0, s);
        for j in 1..l {
            acc += self.d(j, s) * &betas[(j - 1) as usize];
        }
        Ok(-acc)
    }

    /// `β_{2l}` from the `l x l` upper Hessenberg determinant of
    /// d-entries, `(-1)^{l+1} det / (4^l (l!)^2)`. Independent of the
    /// recurrence and of the β store.
    pub fn beta_det(&self, index: u32) -> Result<Rational> {
        if index == 0 {
            return domain("β_0 is not part of the expansion");
        }
        if index % 2 == 1 {
            return Ok(Rational::zero());
        }
        let l = index / 2;
        Ok(sign_pow(i64::from(l) + 1) * det_rational(&self.hessenberg(l)?)
            / (Rational::from_integer(BigInt::one() << (2 * l) as usize)
                * Rational::from_integer(factorial_int(u64::from(l)).pow(2))))
    }

    /// Row `i`, column `c` holds `d_{i, c+2}` when `i <= c+1`, else 0.
    pub fn hessenberg(&self, l: u32) -> Result<Vec<Vec<Rational>>> {
        (0..l)
            .map(|i| {
                (0..l)
                    .map(|c| {
                        if i <= c + 1 {
                            self.d_coeff(i, c + 2)
                        } else {
                            Ok(Rational::zero())
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `a_k = 4^k [ -1/k + Σ_{s=1}^{k} (k-1)! 4^s β_s / ((s-1)! (k-s)!) ]`.
    pub fn granath_a(&self, k: u32) -> Result<Rational> {
        if k == 0 {
            return domain("a_0 is undefined");
        }
        let k64 = u64::from(k);
        let mut acc = -ratio(1, i64::from(k));
        let fk1 = factorial_int(k64 - 1);
        for s in (2..=k).step_by(2) {
            let s64 = u64::from(s);
            let coef = Rational::new(
                &fk1 * (BigInt::one() << (2 * s) as usize),
                factorial_int(s64 - 1) * factorial_int(k64 - s64),
            );
            acc += coef * self.beta(s)?;
        }
        Ok(acc * Rational::from_integer(BigInt::one() << (2 * k) as usize))
    }
}

/// `d_{j,s}` straight from its closed forms; the caller checks the domain.
fn d_closed_form(j: u32, s: u32) -> Rational {
    let (j, s) = (u64::from(j), u64::from(s));
    if j == 0 {
        let s_i = s as i64;
        return ratio(1, s_i) - ratio(1, 2 * s_i - 1) + ratio(1, 16 * (s_i - 1));
    }
    if s == j + 1 {
        return Rational::from_integer(BigInt::from(4 * j * j));
    }
    // (2s+2j-2)(2s-2)!/((2s-2j)!(2j-1)!) + (2s-3)!/(8(2s-2j-2)!(2j-1)!)
    let f2j1 = factorial_int(2 * j - 1);
    let first = Rational::new(
        BigInt::from(2 * s + 2 * j - 2) * rising(2 * s - 2 * j + 1, 2 * s - 2),
        f2j1.clone(),
    );
    let second = Rational::new(rising(2 * s - 2 * j - 1, 2 * s - 3), f2j1 * 8u32);
    first + second
}

pub fn d_coeff(j: u32, s: u32) -> Result<Rational> {
    CoefficientTable::global().d_coeff(j, s)
}

pub fn beta(index: u32) -> Result<Rational> {
    CoefficientTable::global().beta(index)
}

pub fn rho(k: u32) -> Rational {
    CoefficientTable::global().rho(k)
}

pub fn c_coeff(k: u32, s: u32) -> Result<Rational> {
    CoefficientTable::global().c_coeff(k, s)
}

pub fn r_coeff(l: u32, s: u32) -> Result<Rational> {
    CoefficientTable::global().r_coeff(l, s)
}

pub fn beta_det(index: u32) -> Result<Rational> {
    CoefficientTable::global().beta_det(index)
}

pub fn granath_a(k: u32) -> Result<Rational> {
    CoefficientTable::global().granath_a(k)
}

/// Published values of `β_2, ..., β_14`.
pub const TABLE1: [(&str, &str); 7] = [
    ("11", "192"),
    ("-1541", "122880"),
    ("63433", "8257536"),
    ("-9199901", "1006632960"),
    ("317959723", "17716740096"),
    ("-14849190321163", "281406257233920"),
    ("717209117969", "3298534883328"),
];

pub fn table1_values() -> Vec<Rational> {
    TABLE1
        .iter()
        .map(|(n, d)| Rational::new(n.parse().expect("literal"), d.parse().expect("literal")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn d_examples() {
        let t = CoefficientTable::new();
        assert_eq!(t.d_coeff(1, 2).unwrap(), int(4));
        // (1/2 - 1/3) + 1/16
        assert_eq!(t.d_coeff(0, 2).unwrap(), ratio(1, 2) - ratio(1, 3) + ratio(1, 16));
        assert_eq!(t.d_coeff(0, 2).unwrap(), ratio(11, 48));
        // 6 + 3!/(8 * 2!)
        assert_eq!(t.d_coeff(1, 3).unwrap(), int(6) + ratio(6, 16));
        assert_eq!(t.d_coeff(1, 3).unwrap(), ratio(51, 8));
        assert!(t.d_coeff(2, 2).is_err());
        assert!(t.d_coeff(0, 1).is_err());
        assert!(t.d_coeff(3, 1).is_err());
    }

    #[test]
    fn d_matches_factorial_quotients() {
        // Direct factorial quotients as the oracle for the product form.
        let t = CoefficientTable::new();
        for j in 1..6u64 {
            for s in j + 2..j + 8 {
                let f = |n: u64| factorial(n);
                let direct = Rational::from_integer(BigInt::from(2 * s + 2 * j - 2)) * f(2 * s - 2)
                    / (f(2 * s - 2 * j) * f(2 * j - 1))
                    + f(2 * s - 3) / (int(8) * f(2 * s - 2 * j - 2) * f(2 * j - 1));
                assert_eq!(t.d_coeff(j as u32, s as u32).unwrap(), direct);
            }
        }
    }

    #[test]
    fn d_positive() {
        let t = CoefficientTable::new();
        for s in 2..60 {
            assert!(t.d_coeff(0, s).unwrap().is_positive());
            for j in 1..s {
                assert!(t.d_coeff(j, s).unwrap().is_positive(), "d_{{{j},{s}}}");
            }
        }
    }

    #[test]
    fn beta_examples() {
        let t = CoefficientTable::new();
        assert_eq!(t.beta(2).unwrap(), ratio(11, 192));
        assert_eq!(t.beta(4).unwrap(), ratio(-1541, 122880));
        let table = table1_values();
        assert_eq!(t.beta(14).unwrap(), table[6]);
        assert_eq!(t.betas(7), table);
        assert_eq!(t.beta(7).unwrap(), int(0));
        assert!(t.beta(0).is_err());
    }

    #[test]
    fn memoization_is_transparent() {
        let warm = CoefficientTable::new();
        let all = warm.betas(30);
        for k in [1u32, 9, 17, 30] {
            let cold = CoefficientTable::new();
            assert_eq!(cold.beta(2 * k).unwrap(), all[(k - 1) as usize]);
        }
    }

    #[test]
    fn rho_examples() {
        let t = CoefficientTable::new();
        assert_eq!(t.rho(0), int(1));
        assert_eq!(t.rho(1), ratio(11, 192));
        assert_eq!(t.rho(2), ratio(1541, 122880) / int(6));
        assert_eq!(t.rho(2), ratio(1541, 737280));
    }

    #[test]
    fn c_examples() {
        let t = CoefficientTable::new();
        assert_eq!(t.c_coeff(2, 3).unwrap(), ratio(1, 2));
        assert_eq!(t.c_coeff(1, 3).unwrap(), ratio(51, 1536));
        // 1! d_{1,3} / (8 * 4 * 3!)
        let via_d = t.d_coeff(1, 3).unwrap() / int(8 * 4 * 6);
        assert_eq!(t.c_coeff(1, 3).unwrap(), via_d);
        assert!(t.c_coeff(3, 3).is_err());
        assert!(t.c_coeff(0, 1).is_err());
    }

    #[test]
    fn c_zero_matches_d_zero() {
        // c_{0,l+1} = d_{0,l+1} / (8 l^2 (2l-1)!)
        let t = CoefficientTable::new();
        for l in 1..20u64 {
            let expect = t.d_coeff(0, (l + 1) as u32).unwrap()
                / (Rational::from_integer(BigInt::from(8 * l * l)) * factorial(2 * l - 1));
            assert_eq!(t.c_coeff(0, (l + 1) as u32).unwrap(), expect);
        }
    }

    #[test]
    fn r_examples() {
        let t = CoefficientTable::new();
        assert_eq!(t.r_coeff(1, 2).unwrap(), ratio(11, 48));
        assert_eq!(t.r_coeff(1, 2).unwrap(), t.beta(2).unwrap() * int(4));
        assert_eq!(t.r_coeff(2, 3).unwrap(), ratio(-1541, 7680));
        assert_eq!(t.r_coeff(2, 3).unwrap(), t.beta(4).unwrap() * int(16));
        for s in 2..30 {
            assert_eq!(t.r_coeff(1, s).unwrap(), t.d_coeff(0, s).unwrap());
        }
        assert!(t.r_coeff(0, 3).is_err());
        assert!(t.r_coeff(3, 3).is_err());
    }

    #[test]
    fn determinant_examples() {
        let t = CoefficientTable::new();
        assert_eq!(t.beta_det(2).unwrap(), t.d_coeff(0, 2).unwrap() / int(4));
        assert_eq!(t.beta_det(2).unwrap(), ratio(11, 192));
        let table = table1_values();
        assert_eq!(t.beta_det(4).unwrap(), table[1]);
        assert_eq!(t.beta_det(12).unwrap(), table[5]);
        assert_eq!(t.beta_det(5).unwrap(), int(0));
    }

    #[test]
    fn hessenberg_shape() {
        let t = CoefficientTable::new();
        let h = t.hessenberg(5).unwrap();
        for (i, row) in h.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                assert_eq!(v.is_zero(), i > c + 1);
            }
        }
    }

    #[test]
    fn granath_examples() {
        let t = CoefficientTable::new();
        assert_eq!(t.granath_a(1).unwrap(), int(-4));
        assert_eq!(t.granath_a(2).unwrap(), ratio(20, 3));
        assert_eq!(t.granath_a(2).unwrap() / int(256), ratio(5, 192));
        assert_eq!(t.granath_a(3).unwrap(), int(96));
        assert_eq!(t.granath_a(3).unwrap() / int(4096), ratio(3, 128));
        assert!(t.granath_a(0).is_err());
    }

    #[test]
    fn shared_table_across_threads() {
        let t = CoefficientTable::new();
        let results: Vec<Rational> = std::thread::scope(|scope| {
            let handles: Vec<_> = (1..=8u32)
                .map(|k| {
                    let t = &t;
                    scope.spawn(move || t.beta(2 * (k * 3)).unwrap())
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let fresh = CoefficientTable::new();
        for (i, v) in results.iter().enumerate() {
            assert_eq!(v, &fresh.beta(2 * ((i as u32 + 1) * 3)).unwrap());
        }
    }
}

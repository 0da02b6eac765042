use landaukit::coefficients::CoefficientTable;
use landaukit::numerics::{factorial, int, PrecisionPolicy, Rational};
use landaukit::verify::{self, eval_epsilon, Status};
use num_traits::{Signed, Zero};

#[test]
fn c_and_d_are_linked() {
    // c_{k,s} 8 (s-1)^2 (2s-3)! = (2k-1)! d_{k,s}
    let t = CoefficientTable::global();
    for s in 2..=40u32 {
        for k in 1..s {
            let lhs = t.c_coeff(k, s).unwrap() * int(8 * i64::from(s - 1).pow(2)) * factorial(u64::from(2 * s - 3));
            let rhs = factorial(u64::from(2 * k - 1)) * t.d_coeff(k, s).unwrap();
            assert_eq!(lhs, rhs, "k={k} s={s}");
        }
    }
}

#[test]
fn rho_positive_and_beta_alternates() {
    let t = CoefficientTable::global();
    for k in 1..=50u32 {
        assert!(t.rho(k).is_positive(), "rho_{k}");
        let b = t.beta(2 * k).unwrap();
        assert_eq!(b.is_positive(), k % 2 == 1, "beta_{}", 2 * k);
    }
    assert!(t.beta(3).unwrap().is_zero());
}

#[test]
fn telescoping_encloses_exact_term() {
    let t = CoefficientTable::global();
    for n in [0u32, 1, 7, 100, 1000] {
        let big_n = int(i64::from(n)) + Rational::new(3.into(), 4.into());
        for l in 1..=12u32 {
            let exact = t.beta(2 * l).unwrap() / num_traits::pow(big_n.clone(), 2 * l as usize);
            let d = eval_epsilon(n, l, 384).unwrap().sub(&eval_epsilon(n, l + 1, 384).unwrap());
            assert!(d.contains(&exact), "n={n} l={l}");
        }
    }
}

#[test]
fn unknown_only_at_the_cap() {
    // 64 bits cannot resolve ε_12 at n = 500, so the point must stay open.
    let tight = PrecisionPolicy::new(32, 64, 2).unwrap();
    let r = verify::check_thm1(500, 12, &tight).unwrap();
    let open: Vec<_> = r.results.iter().filter(|c| c.status == Status::Unknown).collect();
    assert!(!open.is_empty());
    assert!(open.iter().all(|c| c.precision_used == 64));
    assert_eq!(r.summary.fail, 0);
    assert_eq!(r.summary.total, r.summary.pass + r.summary.unknown);
}

#[test]
fn precision_grows_with_l() {
    let r = verify::check_thm1(1000, 20, &PrecisionPolicy::default()).unwrap();
    let at = |n: i64, l: i64| r.result_at(&[n, l]).unwrap().precision_used;
    assert_eq!(at(0, 1), 128);
    assert!(at(1000, 20) > at(1000, 2));
}

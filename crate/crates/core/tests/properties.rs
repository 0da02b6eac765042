use landaukit::numerics::rational::{parse_text, to_text};
use landaukit::numerics::{cmp_strict, const_log, Ball, Rational, StrictOrder};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1..i64::MAX).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1..1000i64).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn prec() -> impl Strategy<Value = u32> {
    prop_oneof![Just(8u32), Just(32), Just(64), Just(128)]
}

proptest! {
    #[test]
    fn text_round_trip(q in rational()) {
        prop_assert_eq!(parse_text(&to_text(&q)), Some(q));
    }

    #[test]
    fn arithmetic_contains_exact(a in small_rational(), b in small_rational(), p in prec()) {
        let (x, y) = (Ball::from_rational(&a, p), Ball::from_rational(&b, p));
        prop_assert!(x.contains(&a));
        prop_assert!(x.add(&y).contains(&(&a + &b)));
        prop_assert!(x.sub(&y).contains(&(&a - &b)));
        prop_assert!(x.mul(&y).contains(&(&a * &b)));
        if !y.contains(&Rational::from_integer(0.into())) {
            prop_assert!(x.div(&y).unwrap().contains(&(&a / &b)));
        }
    }

    #[test]
    fn strict_comparison_is_sound(a in small_rational(), b in small_rational(), p in prec()) {
        let order = cmp_strict(&Ball::from_rational(&a, p), &Ball::from_rational(&b, p));
        match order {
            StrictOrder::Less => prop_assert!(a < b),
            StrictOrder::Greater => prop_assert!(a > b),
            StrictOrder::Unknown => {}
        }
        if a == b {
            prop_assert_eq!(order, StrictOrder::Unknown);
        }
    }

    #[test]
    fn log_is_additive(n in 1i64..5000, m in 1i64..5000) {
        // ln(nm) must meet ln n + ln m
        let q = |v: i64| Rational::from_integer(v.into());
        let lhs = const_log(&q(n * m), 96).unwrap();
        let rhs = const_log(&q(n), 96).unwrap().add(&const_log(&q(m), 96).unwrap());
        prop_assert_eq!(cmp_strict(&lhs, &rhs), StrictOrder::Unknown);
    }
}

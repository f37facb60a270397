use std::cmp::Ordering;

use grossone::{GrossNumber, Rational};
use proptest::prelude::*;

fn term() -> impl Strategy<Value = GrossNumber> {
    let coef = (-9i64..=9).prop_filter("nonzero", |c| *c != 0);
    let power = prop_oneof![
        Just(Rational::from_integer((-2).into())),
        Just(Rational::from_integer((-1).into())),
        Just(Rational::from_integer(0.into())),
        Just(Rational::from_integer(1.into())),
        Just(Rational::from_integer(2.into())),
        Just(Rational::from_integer(3.into())),
        Just(Rational::new(1.into(), 2.into())),
    ];
    let exp_base = prop_oneof![4 => Just(1u32), 1 => Just(2u32), 1 => Just(3u32)];
    let exp_mult = 0u32..=2;
    (coef, 1i64..=4, power, exp_base, exp_mult).prop_map(|(c, den, p, base, m)| {
        let g = GrossNumber::grossone();
        let exp = GrossNumber::from(base).pow(&(&g * &GrossNumber::from(m))).unwrap();
        &(&GrossNumber::ratio(c, den) * &GrossNumber::grossone_power(p)) * &exp
    })
}

/// Sums of up to four random terms, including zero.
fn gross() -> impl Strategy<Value = GrossNumber> {
    prop::collection::vec(term(), 0..4).prop_map(|ts| ts.iter().fold(GrossNumber::zero(), |acc, t| &acc + t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_laws(a in gross(), b in gross(), c in gross()) {
        let zero = GrossNumber::zero();
        let one = GrossNumber::one();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert_eq!(&a - &a, zero.clone());
        prop_assert_eq!(&a * &zero, zero);
    }

    #[test]
    fn total_order(a in gross(), b in gross(), c in gross()) {
        let trichotomy = [a < b, a == b, a > b].iter().filter(|x| **x).count();
        prop_assert_eq!(trichotomy, 1);
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b), (&a - &b).signum());
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        prop_assert_eq!((&a + &c).cmp(&(&b + &c)), a.cmp(&b));
    }

    #[test]
    fn print_parse_round_trip(a in gross()) {
        let text = a.to_string();
        let back: GrossNumber = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn exact_division(a in gross(), b in gross()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).checked_div(&b), Ok(a));
    }

    #[test]
    fn power_laws(a in gross(), m in 0u32..4, n in 0u32..4) {
        prop_assume!(!a.is_zero());
        let pm = a.pow(&m.into()).unwrap();
        let pn = a.pow(&n.into()).unwrap();
        prop_assert_eq!(a.pow(&(m + n).into()).unwrap(), &pm * &pn);
        prop_assert_eq!(pm.pow(&n.into()).unwrap(), a.pow(&(m * n).into()).unwrap());
    }

    #[test]
    fn finite_values_match_rationals(p in -50i64..50, q in 1i64..20, r in -50i64..50, s in 1i64..20) {
        let (x, y) = (Rational::new(p.into(), q.into()), Rational::new(r.into(), s.into()));
        let (gx, gy) = (GrossNumber::from(x.clone()), GrossNumber::from(y.clone()));
        prop_assert_eq!((&gx + &gy).as_rational(), Some(&x + &y));
        prop_assert_eq!((&gx * &gy).as_rational(), Some(&x * &y));
        prop_assert_eq!(gx.cmp(&gy), x.cmp(&y));
    }

    #[test]
    fn integer_exponentials_compare_like_logs(a in 2u32..30, b in 2u32..30, m in 1u32..4, n in 1u32..4) {
        // a^(m*g) vs b^(n*g) compares as a^m vs b^n
        let g = GrossNumber::grossone();
        let x = GrossNumber::from(a).pow(&(&g * &GrossNumber::from(m))).unwrap();
        let y = GrossNumber::from(b).pow(&(&g * &GrossNumber::from(n))).unwrap();
        let expected = (a as u128).pow(m).cmp(&(b as u128).pow(n));
        prop_assert_eq!(x.cmp(&y), expected);
        if expected == Ordering::Equal {
            prop_assert_eq!(x, y);
        }
    }
}

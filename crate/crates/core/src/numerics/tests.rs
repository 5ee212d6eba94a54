use super::*;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn g(a: i64, b: i64, c: i64, d: i64) -> GoldenNumber {
    GoldenNumber::from_parts(a, b, c, d)
}

fn tau() -> GoldenNumber {
    GoldenNumber::tau()
}

/// Independent oracle for inverses: solve (a + b tau)(p + q tau) = 1 as the
/// 2x2 rational linear system  a p + b q = 1,  b p + (a - b)... derived from
/// the product formula (ap + bq) + (aq + bp - bq) tau = 1 + 0 tau.
fn inverse_by_linear_system(x: &GoldenNumber) -> GoldenNumber {
    let (a, b) = (x.p().clone(), x.q().clone());
    // Solve: a p + b q = 1 ; b p + (a - b) q = 0.
    let det = &a * (&a - &b) - &b * &b;
    assert!(!det.is_zero());
    let p = (&a - &b) / &det;
    let q = -&b / &det;
    GoldenNumber::new(p, q)
}

#[test]
fn tau_squared_is_one_minus_tau() {
    assert_eq!(tau() * tau(), g(1, 1, -1, 1));
}

#[test]
fn tau_times_inverse_is_one() {
    // tau^-1 = 1 + tau, symbolically: tau(1+tau) = tau + tau^2 = 1.
    assert_eq!(tau() * g(1, 1, 1, 1), GoldenNumber::one());
    assert_eq!(tau().try_inv().unwrap(), g(1, 1, 1, 1));
}

#[test]
fn inverse_of_two_minus_tau() {
    let x = g(2, 1, -1, 1);
    let expected = inverse_by_linear_system(&x);
    assert_eq!(expected, g(3, 5, 1, 5));
    assert_eq!(x.try_inv().unwrap(), expected);
    assert_eq!(x.clone() * x.try_inv().unwrap(), GoldenNumber::one());
}

#[test]
fn inverse_of_one_and_zero() {
    assert_eq!(GoldenNumber::one().try_inv().unwrap(), GoldenNumber::one());
    assert!(GoldenNumber::zero().try_inv().is_err());
}

#[test]
fn sign_examples_follow_square_rule() {
    // 2 - 3tau: (2*2 - (-3))^2 = 49 vs 5*9 = 45, so positive.
    let x = g(2, 1, -3, 1);
    assert_eq!(x.signum(), 1);
    assert_eq!((2i64 * 2 - (-3)).pow(2), 49);
    assert_eq!(5 * (-3i64) * (-3), 45);
    // 3 - 5tau is approximately -0.09.
    assert_eq!(g(3, 1, -5, 1).signum(), -1);
    assert_eq!(GoldenNumber::zero().signum(), 0);
}

#[test]
fn floor_examples() {
    let two_tau = g(0, 1, 2, 1);
    assert_eq!(two_tau.floor_int(), 1.into());
    assert_eq!(GoldenNumber::one().floor_int(), 1.into());
    assert_eq!((-tau()).floor_int(), (-1).into());
    assert_eq!(tau().floor_int(), 0.into());
    assert_eq!(g(-7, 2, 0, 1).floor_int(), (-4).into());
}

#[test]
fn frac_lands_in_unit_interval() {
    for x in [g(5, 3, 7, 2), g(-9, 4, -3, 1), g(0, 1, 0, 1), g(100, 1, -61, 1)] {
        let f = x.frac();
        assert!(f.signum() >= 0);
        assert!((f - GoldenNumber::one()).signum() < 0);
    }
}

#[test]
fn parse_round_trips_bit_exactly() {
    let golden = CoordinateSystem::golden();
    let x = parse_number("[1/2, -3]", &golden).unwrap();
    assert_eq!(x, g(1, 2, -3, 1));
    assert_eq!(x.to_string(), "[1/2, -3]");
    assert_eq!(parse_number("[0, 1]", &golden).unwrap(), tau());
    assert_eq!(parse_number(" [ 0 , 1 ] ", &golden).unwrap(), tau());
}

#[test]
fn parse_rejects_bad_input_with_position() {
    let golden = CoordinateSystem::golden();
    let err = parse_number("[1, 2", &golden).unwrap_err();
    assert_eq!(err.position, 5);
    let err = parse_number("[1/0, 2]", &golden).unwrap_err();
    assert_eq!(err.position, 3);
    assert!(parse_number("[1, 2] junk", &golden).is_err());
    assert!(parse_number("(1, 2)", &golden).is_err());
}

#[test]
fn dyadic_validation() {
    let dyadic = CoordinateSystem::dyadic();
    // Valid: integer, and power-of-two denominators.
    assert!(parse_number("[2, 0]", &dyadic).is_ok());
    assert!(parse_number("[-5/8, 0]", &dyadic).is_ok());
    // A nonzero tau-coordinate is rejected.
    let err = parse_number("[0, 2]", &dyadic).unwrap_err();
    assert!(err.message.contains("second coordinate"));
    // Non-dyadic denominator is rejected.
    assert!(parse_number("[1/3, 0]", &dyadic).is_err());
}

#[test]
fn slope_exponents_round_trip() {
    for cs in [CoordinateSystem::golden(), CoordinateSystem::dyadic()] {
        for k in -6i64..=6 {
            let s = cs.slope(SlopeExponent(k));
            assert_eq!(cs.slope_exponent(&s), Some(SlopeExponent(k)));
        }
        // Not a slope: 1/3, 0 and negatives.
        assert_eq!(
            cs.slope_exponent(&GoldenNumber::from_parts(1, 3, 0, 1)),
            None
        );
        assert_eq!(cs.slope_exponent(&GoldenNumber::zero()), None);
        assert_eq!(cs.slope_exponent(&GoldenNumber::from_integer(-2)), None);
    }
    // tau^-1 = 1 + tau.
    assert_eq!(
        CoordinateSystem::golden().slope(SlopeExponent(-1)),
        GoldenNumber::from_parts(1, 1, 1, 1)
    );
}

#[test]
fn lattice_membership() {
    let golden = CoordinateSystem::golden();
    assert!(golden.in_lattice(&g(2, 1, -3, 1)));
    assert!(!golden.in_lattice(&g(1, 2, 0, 1)));
    let dyadic = CoordinateSystem::dyadic();
    assert!(dyadic.in_lattice(&g(3, 4, 0, 1)));
    assert!(!dyadic.in_lattice(&g(1, 3, 0, 1)));
    assert!(!dyadic.in_lattice(&tau()));
}

#[test]
fn sign_concordance_with_decimal_oracle() {
    // Spot checks against the high-precision decimal oracle; the full
    // 10^4-sample run lives in the exact-arithmetic verification suite.
    for x in [
        g(2, 1, -3, 1),
        g(3, 1, -5, 1),
        g(-13, 8, 21, 8),
        g(987, 1, -1597, 1),
        g(-1, 2, 1, 1),
    ] {
        assert_eq!(x.signum(), crate::verify::oracles::decimal_sign(&x));
    }
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-200i64..200, 1i64..40).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_golden() -> impl Strategy<Value = GoldenNumber> {
    (arb_rational(), arb_rational()).prop_map(|(p, q)| GoldenNumber::new(p, q))
}

proptest! {
    #[test]
    fn field_axioms(a in arb_golden(), b in arb_golden(), c in arb_golden()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        prop_assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.try_inv().unwrap(), GoldenNumber::one());
            prop_assert_eq!(a.try_inv().unwrap(), inverse_by_linear_system(&a));
        }
    }

    #[test]
    fn order_compatibility(a in arb_golden(), b in arb_golden(), c in arb_golden()) {
        prop_assert_eq!(
            (a.signum() * b.signum()) as i8,
            (a.clone() * b.clone()).signum()
        );
        if a < b {
            prop_assert!(a.clone() + c.clone() < b.clone() + c.clone());
        }
    }

    #[test]
    fn floor_brackets_value(a in arb_golden()) {
        let n = GoldenNumber::from_rational(Rational::from_integer(a.floor_int()));
        prop_assert!((a.clone() - n.clone()).signum() >= 0);
        prop_assert!((a - n - GoldenNumber::one()).signum() < 0);
    }

    #[test]
    fn integer_lattice_is_closed(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
        let x = GoldenNumber::from_parts(a, 1, b, 1);
        let y = GoldenNumber::from_parts(c, 1, d, 1);
        let golden = CoordinateSystem::golden();
        prop_assert!(golden.in_lattice(&(x.clone() + y.clone())));
        prop_assert!(golden.in_lattice(&(x * y)));
    }

    #[test]
    fn sign_matches_decimal_oracle(a in arb_golden()) {
        prop_assert_eq!(a.signum(), crate::verify::oracles::decimal_sign(&a));
    }
}

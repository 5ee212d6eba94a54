//! Exact elements `p + q*tau` of the field Q(tau), tau = (sqrt(5)-1)/2.
//!
//! The minimal polynomial is `tau^2 = 1 - tau`; every product reduces to the
//! canonical basis `(p, q)` of reduced rationals, so equality is structural.
//! Ordering is decided by pure integer arithmetic (a square comparison
//! against 5), never by floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// An exact element `p + q*tau` of Q(tau).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNumber {
    p: Rational,
    q: Rational,
}

/// Raised by [`GoldenNumber::try_inv`] on zero input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisionByZero;

impl fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "division by zero in Q(tau)")
    }
}

impl std::error::Error for DivisionByZero {}

impl GoldenNumber {
    pub fn new(p: Rational, q: Rational) -> Self {
        GoldenNumber { p, q }
    }

    pub fn zero() -> Self {
        GoldenNumber::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GoldenNumber::new(Rational::one(), Rational::zero())
    }

    /// The generator tau itself: `0 + 1*tau`.
    pub fn tau() -> Self {
        GoldenNumber::new(Rational::zero(), Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        GoldenNumber::new(Rational::from_integer(n.into()), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        GoldenNumber::new(r, Rational::zero())
    }

    /// Convenience constructor `a/b + (c/d) tau` from machine integers.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        GoldenNumber::new(
            Rational::new(a.into(), b.into()),
            Rational::new(c.into(), d.into()),
        )
    }

    /// Rational part `p`.
    pub fn p(&self) -> &Rational {
        &self.p
    }

    /// tau-coefficient `q`.
    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// True when the number lies in Q (no tau-part).
    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// True when the number is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.q.is_zero() && self.p.is_integer()
    }

    /// Galois conjugate: tau maps to the other root `-1 - tau` of
    /// `x^2 + x - 1`, so `p + q*tau` maps to `(p - q) - q*tau`.
    pub fn conjugate(&self) -> Self {
        GoldenNumber::new(&self.p - &self.q, -self.q.clone())
    }

    /// Field norm `x * conj(x) = p^2 - pq - q^2`, a rational.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - &self.p * &self.q - &self.q * &self.q
    }

    /// Exact multiplicative inverse `conj(x) / norm(x)`.
    pub fn try_inv(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        let n = self.norm();
        debug_assert!(!n.is_zero(), "norm vanishes only at zero");
        let c = self.conjugate();
        Ok(GoldenNumber::new(c.p / &n, c.q / &n))
    }

    /// Exact sign as a real number: -1, 0 or +1.
    ///
    /// Clearing denominators gives integers `P + Q*tau`, and
    /// `2(P + Q*tau) = (2P - Q) + Q*sqrt(5)`; the sign of `u + v*sqrt(5)`
    /// is settled by comparing `u^2` with `5 v^2` in the relevant quadrant.
    pub fn signum(&self) -> i8 {
        let d1 = self.p.denom();
        let d2 = self.q.denom();
        // Scale by the (positive) product of denominators.
        let pp: BigInt = self.p.numer() * d2;
        let qq: BigInt = self.q.numer() * d1;
        let u: BigInt = &pp * 2 - &qq;
        let v = qq;
        sign_u_plus_v_sqrt5(&u, &v)
    }

    /// The unique integer `n` with `n <= x < n + 1`.
    ///
    /// For irrational values the bracket comes from a mediant-refined
    /// rational enclosure of tau seeded with `1/2 < tau < 2/3`; the result is
    /// confirmed by two exact sign tests.
    pub fn floor_int(&self) -> BigInt {
        let n = if self.q.is_zero() {
            self.p.floor().to_integer()
        } else {
            let mut lo = Rational::new(1.into(), 2.into());
            let mut hi = Rational::new(2.into(), 3.into());
            loop {
                // x is irrational here, so the rational bounds eventually
                // agree on the integer part.
                let (a, b) = if self.q.is_positive() {
                    (&self.p + &self.q * &lo, &self.p + &self.q * &hi)
                } else {
                    (&self.p + &self.q * &hi, &self.p + &self.q * &lo)
                };
                let fa = a.floor().to_integer();
                let fb = b.floor().to_integer();
                if fa == fb {
                    break fa;
                }
                let m = mediant(&lo, &hi);
                // Compare m with tau exactly: sign of (m - tau).
                if GoldenNumber::new(m.clone(), -Rational::one()).signum() < 0 {
                    lo = m;
                } else {
                    hi = m;
                }
            }
        };
        let nf = GoldenNumber::from_rational(Rational::from_integer(n.clone()));
        debug_assert!((self.clone() - nf.clone()).signum() >= 0);
        debug_assert!((self.clone() - nf - GoldenNumber::one()).signum() < 0);
        n
    }

    /// Fractional part `x - floor(x)`, in `[0, 1)`.
    pub fn frac(&self) -> Self {
        self.clone() - GoldenNumber::from_rational(Rational::from_integer(self.floor_int()))
    }

    /// Smallest integer `>= x`.
    pub fn ceil_int(&self) -> BigInt {
        -(-self.clone()).floor_int()
    }

    /// Approximate f64 value; diagnostics only, never consulted for
    /// decisions.
    pub fn to_f64_lossy(&self) -> f64 {
        const TAU: f64 = 0.618033988749894848;
        ratio_f64(&self.p) + ratio_f64(&self.q) * TAU
    }
}

fn ratio_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

fn mediant(a: &Rational, b: &Rational) -> Rational {
    Rational::new(a.numer() + b.numer(), a.denom() + b.denom())
}

/// Sign of `u + v * sqrt(5)` for integers `u, v`.
fn sign_u_plus_v_sqrt5(u: &BigInt, v: &BigInt) -> i8 {
    match v.sign() {
        num_bigint::Sign::NoSign => sign_of(u),
        num_bigint::Sign::Plus => {
            if !u.is_negative() {
                1
            } else {
                // u < 0 < v: positive iff 5 v^2 > u^2.
                let five_v2: BigInt = v * v * 5;
                match five_v2.cmp(&(u * u)) {
                    Ordering::Greater => 1,
                    Ordering::Less => -1,
                    Ordering::Equal => unreachable!("sqrt(5) is irrational"),
                }
            }
        }
        num_bigint::Sign::Minus => -sign_u_plus_v_sqrt5(&-u, &-v),
    }
}

fn sign_of(u: &BigInt) -> i8 {
    match u.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other.clone()).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: Self) -> Self {
        GoldenNumber::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl<'a> Add<&'a GoldenNumber> for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &'a GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(self.p + &rhs.p, self.q + &rhs.q)
    }
}

impl Sub for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: Self) -> Self {
        GoldenNumber::new(self.p - rhs.p, self.q - rhs.q)
    }
}

impl<'a> Sub<&'a GoldenNumber> for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &'a GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(self.p - &rhs.p, self.q - &rhs.q)
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> Self {
        GoldenNumber::new(-self.p, -self.q)
    }
}

impl Mul for GoldenNumber {
    type Output = GoldenNumber;
    // (a + b tau)(c + d tau) = ac + bd + (ad + bc - bd) tau, via tau^2 = 1 - tau.
    fn mul(self, rhs: Self) -> Self {
        let ac = &self.p * &rhs.p;
        let bd = &self.q * &rhs.q;
        let ad = &self.p * &rhs.q;
        let bc = &self.q * &rhs.p;
        GoldenNumber::new(ac + &bd, ad + bc - bd)
    }
}

impl<'a> Mul<&'a GoldenNumber> for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &'a GoldenNumber) -> GoldenNumber {
        self * rhs.clone()
    }
}

impl Div for GoldenNumber {
    type Output = GoldenNumber;
    fn div(self, rhs: Self) -> Self {
        self * rhs.try_inv().expect("division by zero in Q(tau)")
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            super::format_rational(&self.p),
            super::format_rational(&self.q)
        )
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (~{:.6})", self, self.to_f64_lossy())
    }
}

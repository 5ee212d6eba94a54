//! Exact ordered-field arithmetic for the coordinate fields.
//!
//! Two instantiations share one code path: the golden field Q(tau) with
//! breakpoint lattice Z[tau] and slope group tau^Z, and the dyadic field Q
//! (embedded as golden numbers with vanishing tau-part) with lattice Z[1/2]
//! and slope group 2^Z. [`CoordinateSystem`] selects the instance.

mod golden;
mod parse;
#[cfg(test)]
mod tests;

pub use golden::GoldenNumber;
pub use parse::{format_rational, parse_number, parse_rational_text, ParseError};

/// Arbitrary-precision rational scalar; always held in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

use num_traits::{One, Signed, Zero};

/// Which coordinate field a map or tree lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    /// Breakpoints in Z[tau], slopes in tau^Z, split ratio tau.
    Golden,
    /// Breakpoints in Z[1/2], slopes in 2^Z, split ratio 1/2.
    Dyadic,
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ring::Golden => write!(f, "golden"),
            Ring::Dyadic => write!(f, "dyadic"),
        }
    }
}

/// An integer slope exponent `k`; the slope it denotes is `g^k` where `g` is
/// the slope generator of the coordinate system (tau, or 1/2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlopeExponent(pub i64);

/// Parameters of one field instantiation: the split ratio `r` used by
/// subdivision carets (r + r(1-r)... merely r and 1-r with r + (1-r) = 1,
/// both in the slope group) and the slope generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoordinateSystem {
    ring: Ring,
}

impl CoordinateSystem {
    pub const fn new(ring: Ring) -> Self {
        CoordinateSystem { ring }
    }

    pub const fn golden() -> Self {
        Self::new(Ring::Golden)
    }

    pub const fn dyadic() -> Self {
        Self::new(Ring::Dyadic)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// The split ratio `r`: an A-caret cuts an interval of length `l` into
    /// `(r*l, (1-r)*l)`. For the golden instance `1 - tau = tau^2`, so both
    /// parts have slope-group lengths.
    pub fn split_ratio(&self) -> GoldenNumber {
        match self.ring {
            Ring::Golden => GoldenNumber::tau(),
            Ring::Dyadic => GoldenNumber::from_rational(Rational::new(1.into(), 2.into())),
        }
    }

    /// The complementary ratio `1 - r` (tau^2, or 1/2).
    pub fn second_ratio(&self) -> GoldenNumber {
        GoldenNumber::one() - self.split_ratio()
    }

    /// Generator of the multiplicative slope group.
    pub fn slope_generator(&self) -> GoldenNumber {
        self.split_ratio()
    }

    /// The exact slope `g^k` for the exponent `k`.
    pub fn slope(&self, k: SlopeExponent) -> GoldenNumber {
        let g = self.slope_generator();
        let base = if k.0 >= 0 {
            g
        } else {
            g.try_inv().expect("slope generator is nonzero")
        };
        let mut acc = GoldenNumber::one();
        for _ in 0..k.0.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }

    /// Writes `s = g^k` if possible; `None` when `s` is not a slope-group
    /// element (including `s <= 0`).
    pub fn slope_exponent(&self, s: &GoldenNumber) -> Option<SlopeExponent> {
        if s.signum() <= 0 {
            return None;
        }
        let one = GoldenNumber::one();
        if *s == one {
            return Some(SlopeExponent(0));
        }
        let g = self.slope_generator();
        let g_inv = g.try_inv().expect("slope generator is nonzero");
        // g < 1 in both instances, so powers with k > 0 are below 1.
        let mut k: i64 = 0;
        let mut cur = s.clone();
        if *s < one {
            while cur < one {
                cur = cur * g_inv.clone();
                k += 1;
            }
            (cur == one).then_some(SlopeExponent(k))
        } else {
            while cur > one {
                cur = cur * g.clone();
                k -= 1;
            }
            (cur == one).then_some(SlopeExponent(k))
        }
    }

    /// Membership in the breakpoint lattice: Z[tau] (integer coordinates),
    /// or the dyadic rationals Z[1/2].
    pub fn in_lattice(&self, x: &GoldenNumber) -> bool {
        match self.ring {
            Ring::Golden => x.p().is_integer() && x.q().is_integer(),
            Ring::Dyadic => x.q().is_zero() && is_dyadic(x.p()),
        }
    }

    /// Validates a parsed literal for this system; dyadic coordinates must
    /// have a vanishing tau-part and a power-of-two denominator.
    pub fn validate_number(&self, x: &GoldenNumber) -> Result<(), String> {
        match self.ring {
            Ring::Golden => Ok(()),
            Ring::Dyadic => {
                if !x.q().is_zero() {
                    Err("second coordinate must be 0 for dyadic".to_string())
                } else if !is_dyadic(x.p()) {
                    Err("dyadic coordinate needs a power-of-two denominator".to_string())
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Is `r` a dyadic rational (denominator a power of two)?
pub fn is_dyadic(r: &Rational) -> bool {
    let den = r.denom().abs().to_biguint().expect("denominator positive");
    den.count_ones() == 1
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

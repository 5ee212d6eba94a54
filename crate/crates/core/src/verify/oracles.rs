//! Independent cross-check oracles used by the verification suites.
//!
//! These deliberately take different computational routes from the library
//! code they check.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};

use crate::numerics::GoldenNumber;

/// Sign of `p + q*tau` by high-precision decimal evaluation.
///
/// Clears denominators to integers `P + Q*tau`, writes `2(P + Q*tau) =
/// (2P - Q) + Q*sqrt(5)`, and brackets `sqrt(5) * 10^k` between integer
/// square roots, starting at 50 digits and doubling until the sign is
/// separated from zero. Exact zero only happens at `P = Q = 0`.
pub fn decimal_sign(x: &GoldenNumber) -> i8 {
    let pp: BigInt = x.p().numer() * x.q().denom();
    let qq: BigInt = x.q().numer() * x.p().denom();
    if pp.is_zero() && qq.is_zero() {
        return 0;
    }
    let u: BigInt = &pp * 2 - &qq;
    let v = qq;
    let mut digits = 50u32;
    loop {
        let scale = BigInt::from(10).pow(digits);
        let five_sq: BigInt = &scale * &scale * 5;
        let s = five_sq.sqrt(); // floor(sqrt(5) * 10^digits)
        let (lo_root, hi_root) = (s.clone(), s + 1);
        let (lo, hi) = if v.is_negative() {
            (&u * &scale + &v * hi_root, &u * &scale + &v * lo_root)
        } else {
            (&u * &scale + &v * lo_root, &u * &scale + &v * hi_root)
        };
        if lo.is_positive() {
            return 1;
        }
        if hi.is_negative() {
            return -1;
        }
        digits *= 2;
        assert!(digits < 1 << 20, "sign separation failed; value is zero?");
    }
}

//! Exact-arithmetic algebra of piecewise-linear homeomorphism groups over the
//! quadratic field Q(tau), tau = (sqrt(5)-1)/2, and over the dyadic rationals.
//!
//! The crate realizes the golden-ratio Thompson groups `F_tau` (interval) and
//! `T_tau` (circle, represented by lifts to the line), together with their
//! classical dyadic counterparts, as computable groups:
//!
//! * [`numerics`] — the coordinate fields: exact rationals and `p + q*tau`
//!   numbers with certified sign, floor and parsing.
//! * [`plmap`] — piecewise-linear maps of the interval, the line and circle
//!   lifts: evaluation, composition, supports, group membership.
//! * [`thompson`] — tree-pair combinatorics and constructive transitivity:
//!   building group elements that move prescribed tuples of lattice points.
//! * [`dynamics`] — rotation numbers (exact and certified enclosures), the
//!   integer Euler cocycle of the canonical section, central extensions,
//!   quasimorphism defect sampling and stable commutator length.
//! * [`structure`] — certificate-producing structural algorithms: commuting
//!   conjugate witnesses, point-stabilizer factorization on the circle, and
//!   bounded-search decomposition into conjugates.
//! * [`verify`] — seeded verification suites behind the `verify` CLI
//!   subcommand and the acceptance tests.
//!
//! All arithmetic is exact; floating point is never consulted for a decision.
//! Composition acts on the right throughout: `compose(f, g)` applies `f`
//! first, matching the convention `x.(fg) = (x.f).g`.

pub mod dynamics;
pub mod numerics;
pub mod plmap;
pub mod serial;
pub mod structure;
pub mod thompson;
pub mod verify;

pub use numerics::{CoordinateSystem, GoldenNumber, Rational, Ring, SlopeExponent};



//! Exact arithmetic primitives.
//!
//! Integers and rationals are GMP-backed ([`rug::Integer`],
//! [`rug::Rational`]); rationals are always stored reduced with a positive
//! denominator. Everything else in this module is built on top of them.

mod bigfloat;
mod factored;
mod lcm;
mod poly;
mod ratfun;
mod series;

pub use bigfloat::BigFloat;
pub(crate) use bigfloat::{bits_for, format_fixed};
pub use factored::FactoredRational;
pub use lcm::lcm_upto;
pub use poly::Polynomial;
pub use ratfun::{ratfun_equal, RationalFunction};
pub use series::{series_expand, TruncatedSeries};

/// Arbitrary-size integer.
pub type ExactInteger = rug::Integer;

/// Arbitrary-size rational, always reduced with a positive denominator.
pub type ExactRational = rug::Rational;

/// `true` when the rational has denominator one.
pub fn is_integer(r: &ExactRational) -> bool {
    *r.denom() == 1
}

/// Shorthand for the rational `num/den`. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> ExactRational {
    assert!(den != 0, "zero denominator");
    ExactRational::from((num, den))
}

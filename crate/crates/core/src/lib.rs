//! Exact and high-precision machinery for the Apéry-like second-order
//! recurrences attached to Catalan's constant `G` and to `ζ(4)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`] – rationals, polynomials, rational functions, truncated
//!   series, decimal-precision floats and the `lcm(1..n)` table.
//! * [`sequences`] – the two recurrence families, denominator inclusions and
//!   asymptotic growth rates.
//! * [`hypergeom`] – the kernel `R_n(t)`, its partial-fraction table and the
//!   linear-form coefficients assembled from it.
//! * [`certificate`] – the telescoping certificate `s_n(t)` and its exact
//!   verification.
//! * [`analytic`] – reference constants, digit extraction, continued
//!   fractions, the double integral and the `ζ(4)` series.

pub mod analytic;
pub mod certificate;
mod error;
pub mod exact;
pub mod hypergeom;
pub mod sequences;

pub use error::{Error, Result};
pub use sequences::{Family, InclusionMode, InclusionReport, SequencePair};
pub use exact::{
    lcm_upto, ratfun_equal, series_expand, BigFloat, ExactInteger, ExactRational,
    FactoredRational, Polynomial, RationalFunction, TruncatedSeries,
};


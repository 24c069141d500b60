//! High-precision evaluation: reference constants, digits through the
//! recurrences, continued fractions, the double integral for the Catalan
//! linear forms and the `ζ(4)` series.

mod accel;
mod constants;
mod contfrac;
mod digits;
mod integral;
mod zseries;

pub(crate) use accel::alternating_sum;
pub use constants::{
    characteristic_polynomial, characteristic_roots, limit_rates, machin_pi, reference_catalan,
    reference_constant, reference_zeta4,
};
pub use contfrac::{cf_convergent, cf_denominator, cf_numerator, CFConvergent};
pub use digits::{catalan_digits, constant_digits, zeta4_digits, DigitsResult};
pub use integral::beukers_integral;
pub use zseries::{zeta4_series, zeta4_summand};

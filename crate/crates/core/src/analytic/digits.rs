use rug::ops::Pow;

use crate::exact::{format_fixed, ExactInteger, ExactRational};
use crate::sequences::{pair, Family};
use crate::BigFloat;

/// A decimal approximation certified from consecutive convergents.
#[derive(Clone, Debug)]
pub struct DigitsResult {
    pub constant: Family,
    /// Decimals after the point.
    pub digits: u32,
    pub value: String,
    pub n_used: u64,
    /// Bound on `|v_n/u_n − C|`; the rendered value is within this plus
    /// half a unit in the last place.
    pub error_bound: BigFloat,
}

/// Decimal digits gained per step of the recurrence.
fn digits_per_step(family: Family) -> f64 {
    match family {
        Family::Catalan => 2.089,
        Family::Zeta4 => 3.43,
    }
}

const SAFETY: u32 = 10;

/// `C` to `digits` decimals via `v_n/u_n`.
///
/// Starts at `n = ⌈digits/ρ⌉ + 5` and accepts once
/// `10·|r_{n+1} − r_n| < ½·10^{−digits}`; consecutive convergents
/// straddle (Catalan) or approach geometrically faster than the step
/// (`ζ(4)`), so this dominates `|r_n − C|`.
pub fn constant_digits(family: Family, digits: u32) -> DigitsResult {
    let mut n = (digits as f64 / digits_per_step(family)).ceil() as u64 + 5;
    let half_ulp = ExactRational::from((1, 2 * ExactInteger::from(10).pow(digits)));
    loop {
        let r = pair(family, n).ratio();
        let next = pair(family, n + 1).ratio();
        let bound = ExactRational::from(&next - &r).abs() * SAFETY;
        if bound < half_ulp {
            return DigitsResult {
                constant: family,
                digits,
                value: format_fixed(&r, digits),
                n_used: n,
                error_bound: BigFloat::from_rational(&bound, 20),
            };
        }
        n += 5;
    }
}

pub fn catalan_digits(digits: u32) -> DigitsResult {
    constant_digits(Family::Catalan, digits)
}

pub fn zeta4_digits(digits: u32) -> DigitsResult {
    constant_digits(Family::Zeta4, digits)
}

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::Float;

use super::{ExactInteger, ExactRational};
use crate::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Binary precision carrying at least `digits` significant decimal digits.
pub(crate) fn bits_for(digits: u32) -> u32 {
    ((digits.max(1) as f64) * LOG2_10).ceil() as u32
}

/// Arbitrary-precision floating value with an explicit working precision in
/// significant decimal digits.
///
/// The precision is exactly what the caller asks for; guard digits are the
/// caller's business. Binary operations run at the larger of the two
/// operand precisions.
#[derive(Clone, Debug)]
pub struct BigFloat {
    value: Float,
    digits: u32,
}

impl BigFloat {
    pub fn zero(digits: u32) -> Self {
        Self::from_f64(0.0, digits)
    }

    pub fn from_f64(v: f64, digits: u32) -> Self {
        BigFloat {
            value: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    pub fn from_i64(v: i64, digits: u32) -> Self {
        BigFloat {
            value: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    pub fn from_integer(v: &ExactInteger, digits: u32) -> Self {
        BigFloat {
            value: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(v: &ExactRational, digits: u32) -> Self {
        BigFloat {
            value: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    pub(crate) fn from_float(value: Float, digits: u32) -> Self {
        let mut value = value;
        value.set_prec(bits_for(digits));
        BigFloat { value, digits }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Re-rounds to a different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::from_float(self.value.clone(), digits)
    }

    pub fn as_float(&self) -> &Float {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.value.cmp0() == Some(Ordering::Less)
    }

    pub fn abs(&self) -> Self {
        Self::from_float(Float::with_val(self.value.prec(), self.value.abs_ref()), self.digits)
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_sign_negative() {
            return Err(Error::InvalidArgument("square root of a negative value".into()));
        }
        Ok(Self::from_float(
            Float::with_val(self.value.prec(), self.value.sqrt_ref()),
            self.digits,
        ))
    }

    /// Natural logarithm; the argument must be positive.
    pub fn ln(&self) -> Result<Self> {
        if self.value.cmp0() != Some(Ordering::Greater) {
            return Err(Error::InvalidArgument("logarithm of a non-positive value".into()));
        }
        Ok(Self::from_float(
            Float::with_val(self.value.prec(), self.value.ln_ref()),
            self.digits,
        ))
    }

    pub fn pow_u(&self, k: u32) -> Self {
        Self::from_float(Float::with_val(self.value.prec(), (&self.value).pow(k)), self.digits)
    }

    pub fn recip(&self) -> Self {
        Self::from_float(Float::with_val(self.value.prec(), self.value.recip_ref()), self.digits)
    }

    pub fn mul_rational(&self, r: &ExactRational) -> Self {
        Self::from_float(Float::with_val(self.value.prec(), &self.value * r), self.digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// `⌊log10 |x|⌋`; `None` for zero.
    pub fn magnitude(&self) -> Option<i64> {
        if self.value.is_zero() || !self.value.is_finite() {
            return None;
        }
        let (m, e) = self.value.to_f64_exp();
        Some((m.abs().log10() + e as f64 / LOG2_10).floor() as i64)
    }

    /// Exact value of the binary float.
    pub fn to_rational(&self) -> ExactRational {
        self.value.to_rational().expect("finite value")
    }

    /// Fixed-point rendering with `decimals` digits after the point, rounded
    /// to nearest.
    pub fn to_fixed(&self, decimals: u32) -> String {
        format_fixed(&self.to_rational(), decimals)
    }

    /// Scientific rendering with `sig` significant digits.
    pub fn to_scientific(&self, sig: usize) -> String {
        self.value.to_string_radix(10, Some(sig.max(1)))
    }
}

/// Renders an exact rational with `decimals` digits after the point, rounded
/// to nearest (ties away from zero).
pub(crate) fn format_fixed(r: &ExactRational, decimals: u32) -> String {
    let scale = ExactInteger::from(10).pow(decimals);
    let scaled = ExactRational::from(r * &scale);
    let rounded = scaled.round();
    let neg = rounded < 0;
    let mut digits = rounded.abs().to_string();
    let d = decimals as usize;
    if digits.len() <= d {
        digits = format!("{}{}", "0".repeat(d + 1 - digits.len()), digits);
    }
    let split = digits.len() - d;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&digits[..split]);
    if d > 0 {
        out.push('.');
        out.push_str(&digits[split..]);
    }
    out
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! binop {
    ($tr:ident $m:ident) => {
        impl $tr for &BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &BigFloat) -> BigFloat {
                let digits = self.digits.max(rhs.digits);
                let v = Float::with_val(bits_for(digits), (&self.value).$m(&rhs.value));
                BigFloat { value: v, digits }
            }
        }
        impl $tr for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add add);
binop!(Sub sub);
binop!(Mul mul);
binop!(Div div);

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            value: Float::with_val(self.value.prec(), -&self.value),
            digits: self.digits,
        }
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -&self
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scientific(self.digits as usize))
    }
}

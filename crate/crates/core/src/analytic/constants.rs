use rug::ops::Pow;
use rug::{Float, Integer};

use super::accel::alternating_sum;
use crate::exact::bits_for;
use crate::sequences::Family;
use crate::BigFloat;

const GUARD: u32 = 15;

/// Catalan's constant `G = Σ (−1)^l/(2l+1)²` by accelerated summation of
/// the defining series.
///
/// `1/(2l+1)² = ¼∫_0^1 x^{l−1/2}(−ln x) dx` is a moment sequence of total
/// mass 1, so the acceleration bound applies directly.
pub fn reference_catalan(digits: u32) -> BigFloat {
    let g = alternating_sum(digits + GUARD, 0.0, |k, bits| {
        let m = Integer::from(2 * k + 1);
        Float::with_val(bits, m.square()).recip()
    });
    BigFloat::from_float(g, digits)
}

/// `π = 16·atan(1/5) − 4·atan(1/239)` in fixed-point integer arithmetic.
pub fn machin_pi(digits: u32) -> BigFloat {
    let work = digits + GUARD;
    let scale = Integer::from(10).pow(work);
    // Each truncated division errs by less than one unit; the term count is
    // far below 10^GUARD.
    let atan_inv = |x: u32| {
        let x2 = Integer::from(x) * x;
        let mut power = Integer::from(&scale / x);
        let mut sum = Integer::new();
        let mut k = 0u32;
        while power != 0 {
            let term = Integer::from(&power / (2 * k + 1));
            if k % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &x2;
            k += 1;
        }
        sum
    };
    let pi_scaled = 16 * atan_inv(5) - 4 * atan_inv(239);
    let bits = bits_for(work);
    let pi = Float::with_val(bits, &pi_scaled) / Float::with_val(bits, &scale);
    BigFloat::from_float(pi, digits)
}

/// `ζ(4) = π⁴/90`.
pub fn reference_zeta4(digits: u32) -> BigFloat {
    let pi = machin_pi(digits + GUARD);
    let z = pi.pow_u(4).as_float().clone() / 90u32;
    BigFloat::from_float(z, digits)
}

/// The constant approximated by `v_n/u_n` in each family.
pub fn reference_constant(family: Family, digits: u32) -> BigFloat {
    match family {
        Family::Catalan => reference_catalan(digits),
        Family::Zeta4 => reference_zeta4(digits),
    }
}

/// Dominant and subdominant characteristic roots of the recurrence at
/// infinity: `((1+√5)/2)⁵` and `((1−√5)/2)⁵` for Catalan, `(3+2√3)³` and
/// `−(2√3−3)³` for `ζ(4)`.
pub fn characteristic_roots(family: Family, digits: u32) -> (BigFloat, BigFloat) {
    let d = digits + GUARD;
    let one = BigFloat::from_i64(1, d);
    let two = BigFloat::from_i64(2, d);
    let (big, small) = match family {
        Family::Catalan => {
            let s5 = BigFloat::from_i64(5, d).sqrt().expect("positive");
            let phi = &(&one + &s5) / &two;
            let psi = &(&one - &s5) / &two;
            (phi.pow_u(5), psi.pow_u(5))
        }
        Family::Zeta4 => {
            let s3 = BigFloat::from_i64(3, d).sqrt().expect("positive");
            let three = BigFloat::from_i64(3, d);
            let big = &three + &(&two * &s3);
            let small = &(&two * &s3) - &three;
            (big.pow_u(3), -small.pow_u(3))
        }
    };
    (big.with_digits(digits), small.with_digits(digits))
}

/// Characteristic polynomial `λ² − 11λ − 1` (Catalan) or `λ² − 270λ − 27`
/// (`ζ(4)`) evaluated at `λ`.
pub fn characteristic_polynomial(family: Family, lambda: &BigFloat) -> BigFloat {
    let d = lambda.digits();
    let (b, c) = match family {
        Family::Catalan => (11, 1),
        Family::Zeta4 => (270, 27),
    };
    &(&lambda.pow_u(2) - &(lambda * &BigFloat::from_i64(b, d))) - &BigFloat::from_i64(c, d)
}

/// Limits of `(1/n)·ln u_n` and `(1/n)·ln|u_n·C − v_n|`: the logarithms of
/// the absolute characteristic roots.
pub fn limit_rates(family: Family, digits: u32) -> (BigFloat, BigFloat) {
    let (big, small) = characteristic_roots(family, digits + GUARD);
    (
        big.ln().expect("positive root").with_digits(digits),
        small.abs().ln().expect("nonzero root").with_digits(digits),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_digits_of_reference() {
        assert_eq!(reference_catalan(10).to_fixed(10), "0.9159655942");
        assert_eq!(reference_catalan(1).to_fixed(1), "0.9");
        assert_eq!(
            reference_catalan(60).to_fixed(50),
            "0.91596559417721901505460351493238411077414937428167"
        );
    }

    #[test]
    fn pi_and_zeta4() {
        assert_eq!(
            machin_pi(50).to_fixed(48),
            "3.141592653589793238462643383279502884197169399375"
        );
        assert_eq!(reference_zeta4(10).to_fixed(10), "1.0823232337");
    }

    #[test]
    fn characteristic_roots_are_roots() {
        for family in Family::ALL {
            let (big, small) = characteristic_roots(family, 80);
            for lambda in [&big, &small] {
                let r = characteristic_polynomial(family, lambda);
                assert!(r.is_zero() || r.magnitude().unwrap() < -70, "{family}: {r}");
            }
        }
    }

    #[test]
    fn rates_truncate_to_displayed_decimals() {
        let truncated = |x: &BigFloat| {
            let s = x.to_fixed(12);
            s[..s.find('.').unwrap() + 9].to_string()
        };
        let (u, f) = limit_rates(Family::Catalan, 30);
        assert_eq!(truncated(&u), "2.40605912");
        assert_eq!(truncated(&f), "-2.40605912");
        let (u, f) = limit_rates(Family::Zeta4, 30);
        assert_eq!(truncated(&u), "5.59879212");
        assert_eq!(truncated(&f), "-2.30295525");
    }
}

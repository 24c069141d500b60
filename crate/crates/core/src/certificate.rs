//! The creative-telescoping certificate for the Catalan kernel.
//!
//! With `S_n(t) = s_n(t)·R_n(t)`, for every `n ≥ 1`
//! `(2n+1)²(2n+2)²p(n)R_{n+1} − q(n)R_n − (2n−1)²(2n)²p(n+1)R_{n−1}
//!  = −S_n(t+1) − S_n(t)`,
//! and `S_n(0) = 0`, so the alternating sum `F_n` satisfies the Catalan
//! recurrence.

use rug::Float;

use crate::exact::{rat, ratfun_equal, ExactInteger, ExactRational, FactoredRational, Polynomial, RationalFunction};
use crate::hypergeom::{build_kernel, f_numeric, kernel_factored};
use crate::sequences::{recurrence_coefficients, Family};
use crate::{BigFloat, Error, Result};

/// Integer polynomials in `n`, lowest degree first, whose product is one
/// numerator coefficient of `s_n(t)`. Index `i` is the coefficient of `t^i`.
const NUMERATOR: [&[&[i64]]; 5] = [
    // n(2n−1)(2n+1)²(4720n⁵+6192n⁴+816n³−864n²+69n+13)
    &[&[0, 1], &[-1, 2], &[1, 2], &[1, 2], &[13, 69, -864, 816, 6192, 4720]],
    // (2n+1)(34880n⁷+39328n⁶−2176n⁵−8416n⁴+964n³+154n²+58n−13)
    &[&[1, 2], &[-13, 58, 154, 964, -8416, -2176, 39328, 34880]],
    // 44800n⁷+65600n⁶+17568n⁵−7056n⁴−1088n³+372n²+146n−1
    &[&[-1, 146, 372, -1088, -7056, 17568, 65600, 44800]],
    // 2(5440n⁶+7104n⁵+912n⁴−1088n³+76n²+68n+7)
    &[&[2], &[7, 68, 76, -1088, 912, 7104, 5440]],
    // 8n(2n−1)²(20n²+32n+13)
    &[&[8], &[0, 1], &[-1, 2], &[-1, 2], &[13, 32, 20]],
];

fn eval_product(factors: &[&[i64]], n: i64) -> ExactInteger {
    let mut acc = ExactInteger::from(1);
    for coeffs in factors {
        let mut v = ExactInteger::new();
        for &c in coeffs.iter().rev() {
            v *= n;
            v += c;
        }
        acc *= v;
    }
    acc
}

/// Numerator coefficients of `s_n(t)`, constant term first.
pub fn certificate_coefficients(n: u64) -> [ExactInteger; 5] {
    NUMERATOR.map(|factors| eval_product(factors, n as i64))
}

/// `2(2t+n+1)(t+2n−1)(t+2n)` in factored form.
fn certificate_denominator(n: u64) -> FactoredRational {
    let n = n as i64;
    let mut f = FactoredRational::constant(rat(2, 1));
    f = &f * &FactoredRational::affine(2, n + 1, 1);
    f = &f * &FactoredRational::affine(1, 2 * n - 1, 1);
    &f * &FactoredRational::affine(1, 2 * n, 1)
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub n: u64,
    /// `s_n(t)`.
    pub s: RationalFunction,
    /// `S_n(t) = s_n(t)·R_n(t)`.
    pub big_s: RationalFunction,
}

fn small_s(n: u64) -> RationalFunction {
    let num = Polynomial::from_coeffs(
        certificate_coefficients(n)
            .into_iter()
            .map(ExactRational::from)
            .collect(),
    );
    let den = certificate_denominator(n).to_rational_function();
    (&RationalFunction::from(num) / &den).expect("nonzero denominator")
}

pub fn build_certificate(n: u64) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::domain("build_certificate", 1, n));
    }
    let s = small_s(n);
    let big_s = &s * &build_kernel(n).r;
    Ok(Certificate { n, s, big_s })
}

/// Shift quotients `R_{n+1}/R_n`, `R_{n−1}/R_n`, `R_n(t+1)/R_n(t)`.
pub fn kernel_quotients(n: u64) -> [FactoredRational; 3] {
    let r = kernel_factored(n);
    let up = (&kernel_factored(n + 1) / &r).expect("nonzero kernel");
    let down = (&kernel_factored(n - 1) / &r).expect("nonzero kernel");
    let step = (&r.shift(&rat(1, 1)) / &r).expect("nonzero kernel");
    [up, down, step]
}

/// The telescoping identity divided through by `R_n(t)`:
/// `c₊·R_{n+1}/R_n − q(n) − c₋·R_{n−1}/R_n + s_n(t+1)·R_n(t+1)/R_n(t) + s_n(t)`.
pub fn normalized_residual(n: u64) -> Result<RationalFunction> {
    if n == 0 {
        return Err(Error::domain("normalized_residual", 1, n));
    }
    let c = recurrence_coefficients(Family::Catalan, n);
    let [up, down, step] = kernel_quotients(n);
    let s = small_s(n);
    let mut z = up.to_rational_function().scale(&c.lead);
    z = &z - &RationalFunction::constant(c.middle);
    z = &z - &down.to_rational_function().scale(&c.trail);
    z = &z + &(&s.shift(&rat(1, 1)) * &step.to_rational_function());
    Ok(&z + &s)
}

/// Exact verification of the telescoping identity for one `n ≥ 1`.
///
/// The identity is divided by `R_n(t)`, which leaves low-degree rational
/// functions; the three kernel quotients used for that are themselves
/// confirmed against the expanded kernels by cross-multiplication.
pub fn verify_telescoping(n: u64) -> Result<bool> {
    let z = normalized_residual(n)?;
    if !z.is_zero() {
        return Ok(false);
    }
    let [up, down, step] = kernel_quotients(n);
    let r = build_kernel(n).r;
    let checks = [
        (up, build_kernel(n + 1).r),
        (down, build_kernel(n - 1).r),
        (step, r.shift(&rat(1, 1))),
    ];
    Ok(checks
        .iter()
        .all(|(q, target)| ratfun_equal(&(&q.to_rational_function() * &r), target)))
}

/// The same identity summed in `ℚ(t)` without dividing by `R_n`; only
/// practical for small `n`.
pub fn telescoping_sum(n: u64) -> Result<RationalFunction> {
    let cert = build_certificate(n)?;
    let c = recurrence_coefficients(Family::Catalan, n);
    let mut z = build_kernel(n + 1).r.scale(&c.lead);
    z = &z - &build_kernel(n).r.scale(&c.middle);
    z = &z - &build_kernel(n - 1).r.scale(&c.trail);
    z = &z + &cert.big_s.shift(&rat(1, 1));
    Ok(&z + &cert.big_s)
}

/// `c₊F_{n+1} − q(n)F_n − c₋F_{n−1}` with every `F` accurate enough that
/// the returned value is within `10^{−digits}` of the true residual.
pub fn recurrence_transfer_residual(n: u64, digits: u32) -> Result<BigFloat> {
    if n == 0 {
        return Err(Error::domain("verify_recurrence_transfer", 1, n));
    }
    let c = recurrence_coefficients(Family::Catalan, n);
    let weight: ExactRational = [&c.lead, &c.middle, &c.trail]
        .iter()
        .map(|x| ExactRational::from(x.abs_ref()))
        .sum();
    let extra = Float::with_val(64, &weight).log10().to_f64().ceil().max(0.0) as u32;
    let work = digits + extra + 2;
    let f = |m: u64| f_numeric(m, work);
    let res = &(&f(n + 1).mul_rational(&c.lead) - &f(n).mul_rational(&c.middle))
        - &f(n - 1).mul_rational(&c.trail);
    Ok(res.with_digits(work))
}

/// Numerical confirmation that `F_n` obeys the Catalan recurrence: the
/// residual must be below `10^{−(digits−5)}`.
pub fn verify_recurrence_transfer(n: u64, digits: u32) -> Result<bool> {
    if digits <= 5 {
        return Err(Error::InvalidArgument("need more than 5 digits".into()));
    }
    let res = recurrence_transfer_residual(n, digits)?.abs();
    let tol = BigFloat::from_rational(
        &ExactRational::from((1, ExactInteger::from(ExactInteger::u_pow_u(10, digits - 5)))),
        30,
    );
    // The residual is known to within 10^{−digits}, far inside the tolerance.
    let err = BigFloat::from_rational(
        &ExactRational::from((1, ExactInteger::from(ExactInteger::u_pow_u(10, digits)))),
        30,
    );
    if res < &tol - &err {
        Ok(true)
    } else if res > &tol + &err {
        Ok(false)
    } else {
        Err(Error::PrecisionTooLow(format!(
            "recurrence residual at n = {n} is within rounding of the tolerance"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactInteger> {
        v.iter().map(|&x| ExactInteger::from(x)).collect()
    }

    #[test]
    fn transcription_matches_rederived_values() {
        let cases: [(u64, [i64; 5]); 3] = [
            (1, [98514, 194337, 120341, 25038, 520]),
            (2, [38000250, 33928875, 10375155, 1163646, 22608]),
            (3, [1222296180, 726388481, 149471897, 11474846, 173400]),
        ];
        for (n, expected) in cases {
            assert_eq!(certificate_coefficients(n).to_vec(), ints(&expected), "n = {n}");
        }
    }

    #[test]
    fn certificate_shape() {
        let c = build_certificate(2).unwrap();
        let den = Polynomial::from_i64(&[3, 2])
            .scale(&rat(2, 1));
        let den = &(&den * &Polynomial::from_i64(&[3, 1])) * &Polynomial::from_i64(&[4, 1]);
        // s_2 = num / (2(2t+3)(t+3)(t+4)), compared after scaling to a monic denominator.
        let expected = RationalFunction::new(
            Polynomial::from_coeffs(certificate_coefficients(2).into_iter().map(ExactRational::from).collect()),
            den,
        )
        .unwrap();
        assert!(ratfun_equal(&c.s, &expected));
        assert!(build_certificate(0).is_err());
        assert_eq!(build_certificate(1).unwrap().big_s.eval(&rat(0, 1)).unwrap(), 0);
    }

    #[test]
    fn telescoping_small() {
        for n in 1..=6 {
            assert!(verify_telescoping(n).unwrap(), "n = {n}");
            assert!(telescoping_sum(n).unwrap().is_zero(), "n = {n}");
        }
        assert!(matches!(verify_telescoping(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn quotients_match_displayed_forms() {
        // R_{n+1}/R_n = (n+1)(2t+n+2)(t−n)(t+2n+1)(t+2n+2) / ((2t+n+1)(t+n+1)(t+n+3/2)³).
        for n in 1..=5u64 {
            let m = n as i64;
            let [up, _, _] = kernel_quotients(n);
            let mut f = FactoredRational::constant(ExactRational::from(m + 1));
            for (a, b, e) in [(2, m + 2, 1), (1, -m, 1), (1, 2 * m + 1, 1), (1, 2 * m + 2, 1), (2, m + 1, -1), (1, m + 1, -1)] {
                f = &f * &FactoredRational::affine(a, b, e);
            }
            f = &f * &FactoredRational::linear(rat(1, 1), ExactRational::from((-2 * m - 3, 2)), -3);
            assert_eq!(up, f, "n = {n}");
        }
    }

    #[test]
    fn perturbed_certificate_fails() {
        let c = recurrence_coefficients(Family::Catalan, 2);
        let [up, down, step] = kernel_quotients(2);
        let s = &small_s(2) + &RationalFunction::constant(rat(1, 1_000_000));
        let mut z = up.to_rational_function().scale(&c.lead);
        z = &z - &RationalFunction::constant(c.middle);
        z = &z - &down.to_rational_function().scale(&c.trail);
        z = &z + &(&s.shift(&rat(1, 1)) * &step.to_rational_function());
        assert!(!(&z + &s).is_zero());
    }

    #[test]
    fn transfer_examples() {
        assert!(verify_recurrence_transfer(1, 30).unwrap());
        assert!(recurrence_transfer_residual(1, 30).unwrap().abs().magnitude().map_or(true, |m| m < -25));
        assert!(verify_recurrence_transfer(2, 30).unwrap());
        assert!(verify_recurrence_transfer(5, 20).unwrap());
    }
}

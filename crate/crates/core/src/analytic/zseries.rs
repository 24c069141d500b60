use rug::Float;

use crate::exact::{bits_for, ExactRational, Polynomial, RationalFunction};
use crate::{BigFloat, Error, Result};

const MAX_TERMS: u64 = 1_000_000;

/// `(2t+n)·((t−1)⋯(t−n))²·((t+n+1)⋯(t+2n))² / (t(t+1)⋯(t+n))⁴`.
pub fn zeta4_summand(n: u64) -> RationalFunction {
    let n = n as i64;
    let mut num = Polynomial::from_i64(&[n, 2]);
    for i in 1..=n {
        num = &num * &Polynomial::from_i64(&[-i, 1]).pow(2);
    }
    for i in n + 1..=2 * n {
        num = &num * &Polynomial::from_i64(&[i, 1]).pow(2);
    }
    let mut den = Polynomial::one();
    for i in 0..=n {
        den = &den * &Polynomial::from_i64(&[i, 1]).pow(4);
    }
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// `F̃_n = (−1)^{n+1}/6 · Σ_{t≥1} d/dt[summand](t)`, which equals
/// `ũ_n·ζ(4) − ṽ_n`.
///
/// The derivative is taken exactly, terms are evaluated exactly at integer
/// `t` and accumulated at `digits + 15`. The sum is cut at the first `T`
/// (doubling from 16, at most 10⁶) whose tail bound is below
/// `10^{−(digits+2)}`. The bound uses that the denominator is a product of
/// `(t+k)`, `k ≥ 0`, hence has nonnegative coefficients:
/// `Σ_{t>T} |N(t)/D(t)| ≤ Σ_i |N_i|/lc(D) · T^{i−deg D+1}/(deg D−i−1)`.
pub fn zeta4_series(n: u64, digits: u32) -> Result<BigFloat> {
    let d = zeta4_summand(n).derivative();
    let (num, den) = (d.numer(), d.denom());
    let deg_d = den.degree().expect("nonzero denominator") as i64;
    let lc = den.leading().expect("nonzero denominator").to_f64();
    let coeffs: Vec<(i64, f64)> = num
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i as i64, c.to_f64().abs() / lc))
        .collect();
    debug_assert!(coeffs.iter().all(|&(i, _)| deg_d - i >= 2));
    let tail = |t: f64| -> f64 {
        coeffs
            .iter()
            .map(|&(i, c)| c * t.powi((i - deg_d + 1) as i32) / (deg_d - i - 1) as f64)
            .sum()
    };

    let tol = 10f64.powi(-(digits as i32 + 2));
    let mut terms = 16u64;
    while tail(terms as f64) >= tol {
        terms *= 2;
        if terms > MAX_TERMS {
            return Err(Error::PrecisionTooLow(format!(
                "{digits} digits need more than {MAX_TERMS} terms of the series"
            )));
        }
    }

    let bits = bits_for(digits + 15);
    let mut sum = Float::with_val(bits, 0);
    for t in 1..=terms {
        let t = ExactRational::from(t);
        let v = ExactRational::from(num.eval(&t) / den.eval(&t));
        sum += Float::with_val(bits, &v);
    }
    sum /= 6;
    if n % 2 == 0 {
        sum = -sum;
    }
    Ok(BigFloat::from_float(sum, digits))
}

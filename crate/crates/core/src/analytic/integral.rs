use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;

use crate::{BigFloat, Error, Result};

const MIN_NODES: usize = 16;
const MAX_NODES: usize = 1 << 12;
const F64_DIGITS: u32 = 17;

/// `∫∫_{[0,1]²} x^{n−1/2}(1−x)^n y^n(1−y)^{n−1/2} / (1−xy)^{n+1} dx dy`,
/// which equals `8·(−1)^n·(u_n·G − v_n)`.
///
/// With `x = (1−a²)²` and `y = 1−w²` both endpoint singularities vanish and
/// the integrand becomes
/// `8a^{2n+1}(1−a²)^{2n}(2−a²)^n w^{2n}(1−w²)^n / (a²(2−a²) + (1−a²)²w²)^{n+1}`,
/// whose only remaining defect is the corner `a = w = 0`. Splitting the
/// square along the diagonal and collapsing each triangle onto that corner
/// (`w = aτ`, resp. `a = wσ`) leaves smooth integrands on `[0,1]²`, which
/// tensor Gauss–Legendre handles with node doubling.
pub fn beukers_integral(n: u64, digits: u32) -> Result<BigFloat> {
    if digits == 0 || digits > 15 {
        return Err(Error::InvalidArgument(format!(
            "quadrature digits must lie in 1..=15, got {digits}"
        )));
    }
    let tol = 10f64.powi(-(digits as i32 + 2));
    let n = n as i32;
    let f = |a: f64, w: f64| {
        let a2 = a * a;
        let s = 1.0 - a2;
        let num = 8.0 * a.powi(2 * n + 1) * s.powi(2 * n) * (2.0 - a2).powi(n) * w.powi(2 * n) * (1.0 - w * w).powi(n);
        num / (a2 * (2.0 - a2) + s * s * w * w).powi(n + 1)
    };
    // Lower triangle w ≤ a: w = aτ, Jacobian a. Upper triangle a ≤ w: a = wσ, Jacobian w.
    let g = |p: f64, q: f64| p * (f(p, p * q) + f(q * p, p));

    let mut nodes = MIN_NODES;
    let mut prev = tensor(nodes, &g);
    while nodes < MAX_NODES {
        nodes *= 2;
        let cur = tensor(nodes, &g);
        if (cur - prev).abs() < tol * cur.abs().max(1.0) {
            // Keep every bit of the f64 result; rounding to `digits` would add an
            // error of the same order as the tolerance.
            return Ok(BigFloat::from_f64(cur, F64_DIGITS));
        }
        prev = cur;
    }
    Err(Error::NonConvergence(format!(
        "quadrature did not settle to 1e-{} with {MAX_NODES} nodes per axis",
        digits + 2
    )))
}

fn tensor(nodes: usize, g: &impl Fn(f64, f64) -> f64) -> f64 {
    let rule = GaussLegendre::new(NonZeroUsize::new(nodes).expect("positive"));
    rule.integrate(0.0, 1.0, |p| rule.integrate(0.0, 1.0, |q| g(p, q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::reference_catalan;

    #[test]
    fn n0_is_eight_g() {
        let i = beukers_integral(0, 8).unwrap().to_f64();
        let g = reference_catalan(20).to_f64();
        assert!((i - 8.0 * g).abs() < 1e-9, "{i}");
    }

    #[test]
    fn n1_matches_linear_form() {
        let i = beukers_integral(1, 8).unwrap().to_f64();
        let g = reference_catalan(20).to_f64();
        assert!((-i / 8.0 - (1.75 * g - 1.625)).abs() < 1e-9, "{i}");
    }

    #[test]
    fn rejects_excess_digits() {
        assert!(beukers_integral(0, 16).is_err());
    }
}

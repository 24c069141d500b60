use std::ops::{Add, Mul};

use super::{ExactRational, Polynomial, RationalFunction};
use crate::{Error, Result};

/// Power series in `(t − center)` truncated after `order` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    center: ExactRational,
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    pub fn new(center: ExactRational, mut coeffs: Vec<ExactRational>, order: usize) -> Self {
        assert!(order >= 1, "series order must be positive");
        coeffs.resize(order, ExactRational::new());
        TruncatedSeries { center, coeffs }
    }

    pub fn constant(center: ExactRational, c: ExactRational, order: usize) -> Self {
        Self::new(center, vec![c], order)
    }

    /// Taylor expansion of a polynomial.
    pub fn from_polynomial(p: &Polynomial, center: &ExactRational, order: usize) -> Self {
        Self::new(center.clone(), p.taylor_coeffs(center, order), order)
    }

    pub fn center(&self) -> &ExactRational {
        &self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `(t − center)^i`.
    pub fn coeff(&self, i: usize) -> &ExactRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.center.clone(), self.coeffs[..order.min(self.order())].to_vec(), order)
    }

    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if *c0 == 0 {
            return Err(Error::Pole(self.center.clone()));
        }
        let inv0 = ExactRational::from(c0.recip_ref());
        let mut out = vec![inv0.clone()];
        for k in 1..self.order() {
            let mut acc = ExactRational::new();
            for i in 1..=k {
                acc += ExactRational::from(&self.coeffs[i] * &out[k - i]);
            }
            out.push(-acc * &inv0);
        }
        Ok(Self::new(self.center.clone(), out, self.order()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.center.clone(), ExactRational::from(1), self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.center, other.center, "series centers differ");
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_compatible(rhs);
        let order = self.order().min(rhs.order());
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| ExactRational::from(a + b))
            .collect();
        TruncatedSeries::new(self.center.clone(), coeffs, order)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_compatible(rhs);
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![ExactRational::new(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                coeffs[i + j] += ExactRational::from(a * b);
            }
        }
        TruncatedSeries::new(self.center.clone(), coeffs, order)
    }
}

/// Taylor coefficients of `f` at `center` up to `(t − center)^{order−1}`.
///
/// Fails with [`Error::Pole`] when the denominator vanishes at `center`;
/// callers clear such poles first (for instance by multiplying with the
/// matching power of `t − center`).
pub fn series_expand(
    f: &RationalFunction,
    center: &ExactRational,
    order: usize,
) -> Result<TruncatedSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument("series order must be at least 1".into()));
    }
    let num = TruncatedSeries::from_polynomial(f.numer(), center, order);
    let den = TruncatedSeries::from_polynomial(f.denom(), center, order);
    Ok(&num * &den.recip()?)
}

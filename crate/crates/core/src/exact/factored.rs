use std::collections::BTreeMap;
use std::ops::{Div, Mul};

use super::{ExactRational, Polynomial, RationalFunction, TruncatedSeries};
use crate::{Error, Result};

/// `scalar · Π (t − r)^{m_r}` with signed multiplicities.
///
/// Hypergeometric kernels are products of linear factors with rational
/// roots, and their shift quotients have only a handful of factors left
/// once common roots cancel. Carrying the factored form makes those
/// quotients free, whereas the expanded [`RationalFunction`] would need
/// gcds of high-degree polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    scalar: ExactRational,
    roots: BTreeMap<ExactRational, i64>,
}

impl FactoredRational {
    pub fn constant(scalar: ExactRational) -> Self {
        FactoredRational {
            scalar,
            roots: BTreeMap::new(),
        }
    }

    /// `scalar · (t − root)^multiplicity`.
    pub fn linear(scalar: ExactRational, root: ExactRational, multiplicity: i64) -> Self {
        let mut f = Self::constant(scalar);
        f.push_root(root, multiplicity);
        f
    }

    /// `(a·t + b)^multiplicity` for `a ≠ 0`.
    pub fn affine(a: i64, b: i64, multiplicity: i64) -> Self {
        assert!(a != 0, "affine factor needs a nonzero slope");
        let scalar = ExactRational::from(a).pow_signed(multiplicity);
        Self::linear(scalar, ExactRational::from((-b, a)), multiplicity)
    }

    fn push_root(&mut self, root: ExactRational, multiplicity: i64) {
        if multiplicity == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.roots.entry(root) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += multiplicity;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(multiplicity);
            }
        }
    }

    pub fn scalar(&self) -> &ExactRational {
        &self.scalar
    }

    pub fn is_zero(&self) -> bool {
        self.scalar == 0
    }

    /// Roots with their (nonzero) multiplicities; negative means a pole.
    pub fn roots(&self) -> impl Iterator<Item = (&ExactRational, i64)> {
        self.roots.iter().map(|(r, m)| (r, *m))
    }

    pub fn multiplicity(&self, root: &ExactRational) -> i64 {
        self.roots.get(root).copied().unwrap_or(0)
    }

    /// `f(t + a)`.
    pub fn shift(&self, a: &ExactRational) -> Self {
        FactoredRational {
            scalar: self.scalar.clone(),
            roots: self
                .roots
                .iter()
                .map(|(r, m)| (ExactRational::from(r - a), *m))
                .collect(),
        }
    }

    pub fn eval(&self, t: &ExactRational) -> Result<ExactRational> {
        let mut acc = self.scalar.clone();
        if acc == 0 {
            return Ok(acc);
        }
        for (r, &m) in &self.roots {
            let d = ExactRational::from(t - r);
            if d == 0 {
                if m < 0 {
                    return Err(Error::Pole(t.clone()));
                }
                return Ok(ExactRational::new());
            }
            acc *= d.pow_signed(m);
        }
        Ok(acc)
    }

    /// Taylor coefficients at `center` up to `(t − center)^{order−1}`,
    /// multiplied out factor by factor; fails with [`Error::Pole`] when
    /// `center` is a pole.
    pub fn series_at(&self, center: &ExactRational, order: usize) -> Result<TruncatedSeries> {
        let mut acc = TruncatedSeries::constant(center.clone(), self.scalar.clone(), order);
        for (r, &m) in &self.roots {
            let offset = ExactRational::from(center - r);
            if offset == 0 {
                if m < 0 {
                    return Err(Error::Pole(center.clone()));
                }
                let mut coeffs = vec![ExactRational::new(); m as usize];
                coeffs.extend(acc.coeffs().iter().cloned());
                coeffs.truncate(order);
                acc = TruncatedSeries::new(center.clone(), coeffs, order);
                continue;
            }
            let lin = TruncatedSeries::new(center.clone(), vec![offset, ExactRational::from(1)], order);
            let factor = if m > 0 { lin } else { lin.recip()? };
            acc = &acc * &factor.pow(m.unsigned_abs() as u32);
        }
        Ok(acc)
    }

    /// Expands into a canonical [`RationalFunction`].
    pub fn to_rational_function(&self) -> RationalFunction {
        if self.is_zero() {
            return RationalFunction::zero();
        }
        let mut num = Polynomial::constant(self.scalar.clone());
        let mut den = Polynomial::one();
        for (r, &m) in &self.roots {
            let lin = Polynomial::linear_root(r);
            if m > 0 {
                num = &num * &lin.pow(m as u32);
            } else {
                den = &den * &lin.pow((-m) as u32);
            }
        }
        // Distinct linear factors are coprime and `den` is monic already.
        RationalFunction::new(num, den).expect("monic denominator")
    }
}

trait PowSigned {
    fn pow_signed(&self, e: i64) -> ExactRational;
}

impl PowSigned for ExactRational {
    fn pow_signed(&self, e: i64) -> ExactRational {
        use rug::ops::Pow;
        let base = if e < 0 {
            ExactRational::from(self.recip_ref())
        } else {
            self.clone()
        };
        base.pow(e.unsigned_abs() as u32)
    }
}

impl Mul for &FactoredRational {
    type Output = FactoredRational;
    fn mul(self, rhs: &FactoredRational) -> FactoredRational {
        let scalar = ExactRational::from(&self.scalar * &rhs.scalar);
        if scalar == 0 {
            return FactoredRational::constant(scalar);
        }
        let mut out = FactoredRational {
            scalar,
            roots: self.roots.clone(),
        };
        for (r, m) in &rhs.roots {
            out.push_root(r.clone(), *m);
        }
        out
    }
}

impl Div for &FactoredRational {
    type Output = Result<FactoredRational>;
    fn div(self, rhs: &FactoredRational) -> Result<FactoredRational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("factored rational"));
        }
        let inv = FactoredRational {
            scalar: ExactRational::from(rhs.scalar.recip_ref()),
            roots: rhs.roots.iter().map(|(r, m)| (r.clone(), -m)).collect(),
        };
        Ok(self * &inv)
    }
}

impl Mul for FactoredRational {
    type Output = FactoredRational;
    fn mul(self, rhs: FactoredRational) -> FactoredRational {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratfun_equal};

    #[test]
    fn cancels_and_expands() {
        // (2t + 1) / (t + 1/2)^2 = 2 / (t + 1/2)
        let f = &FactoredRational::affine(2, 1, 1) * &FactoredRational::affine(1, 0, 0);
        let g = &f * &FactoredRational::linear(rat(1, 1), rat(-1, 2), -2);
        assert_eq!(g.multiplicity(&rat(-1, 2)), -1);
        let expected = RationalFunction::new(
            Polynomial::from_i64(&[2]),
            Polynomial::linear_root(&rat(-1, 2)),
        )
        .unwrap();
        assert!(ratfun_equal(&g.to_rational_function(), &expected));
        assert_eq!(g.eval(&rat(1, 2)).unwrap(), rat(2, 1));
        assert!(g.eval(&rat(-1, 2)).is_err());
    }

    #[test]
    fn series_matches_expanded_form() {
        let f = &(&FactoredRational::linear(rat(2, 1), rat(1, 2), 2)
            * &FactoredRational::linear(rat(1, 1), rat(-3, 1), -1))
            * &FactoredRational::linear(rat(1, 1), rat(1, 1), 1);
        for center in [rat(0, 1), rat(1, 1), rat(-1, 3)] {
            let direct = f.series_at(&center, 4).unwrap();
            let via = crate::exact::series_expand(&f.to_rational_function(), &center, 4).unwrap();
            assert_eq!(direct, via);
        }
        assert!(f.series_at(&rat(-3, 1), 2).is_err());
    }

    #[test]
    fn shift_moves_roots() {
        let f = FactoredRational::linear(rat(3, 1), rat(2, 1), 1);
        let s = f.shift(&rat(1, 1));
        assert_eq!(s.eval(&rat(1, 1)).unwrap(), rat(0, 1));
        assert_eq!(s.eval(&rat(0, 1)).unwrap(), rat(-3, 1));
    }

    #[test]
    fn division_subtracts_multiplicities() {
        let a = FactoredRational::linear(rat(2, 1), rat(1, 1), 3);
        let b = FactoredRational::linear(rat(4, 1), rat(1, 1), 1);
        let q = (&a / &b).unwrap();
        assert_eq!(q.scalar(), &rat(1, 2));
        assert_eq!(q.multiplicity(&rat(1, 1)), 2);
        assert!((&a / &FactoredRational::constant(rat(0, 1))).is_err());
    }
}

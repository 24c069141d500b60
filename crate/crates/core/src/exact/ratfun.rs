use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{ExactRational, Polynomial};
use crate::{Error, Result};

/// Quotient `num/den` of polynomials over ℚ in canonical form:
/// `gcd(num, den) = 1` and `den` is monic.
///
/// Addition and multiplication follow Henrici's scheme, so only the gcds of
/// pieces that can actually share factors are computed. When one operand has
/// a small denominator this keeps the cost linear in the larger degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function denominator"));
        }
        let g = Polynomial::gcd(&num, &den);
        Ok(Self::normalized(num.exact_div(&g), den.exact_div(&g)))
    }

    /// Assumes `gcd(num, den) = 1`; only moves the leading coefficient.
    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc == 1 {
            return RationalFunction { num, den };
        }
        let inv = ExactRational::from(lc.recip_ref());
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(Polynomial::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from(Polynomial::constant(c))
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num - deg den`; `None` for the zero function.
    pub fn degree_gap(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree()? as i64)
    }

    pub fn eval(&self, t: &ExactRational) -> Result<ExactRational> {
        let d = self.den.eval(t);
        if d == 0 {
            return Err(Error::Pole(t.clone()));
        }
        Ok(self.num.eval(t) / d)
    }

    /// `f(t + a)`.
    pub fn shift(&self, a: &ExactRational) -> Self {
        // Shifting preserves coprimality and leading coefficients.
        RationalFunction {
            num: self.num.shift(a),
            den: self.den.shift(a),
        }
    }

    pub fn derivative(&self) -> Self {
        // (n/d)' = (n'd - nd')/d^2; with g = gcd(d, d') the result is
        // (n'(d/g) - n(d'/g)) / (d (d/g)), which only needs reducing against d.
        let dd = self.den.derivative();
        if dd.is_zero() {
            return Self::normalized(self.num.derivative(), self.den.clone());
        }
        let g = Polynomial::gcd(&self.den, &dd);
        let d_g = self.den.exact_div(&g);
        let top = &(&self.num.derivative() * &d_g) - &(&self.num * &dd.exact_div(&g));
        let bottom = &self.den * &d_g;
        Self::new(top, bottom).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("reciprocal of the zero rational function"));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RationalFunction {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }
}

/// `true` iff `f` and `g` are the same rational function, checked by
/// cross-multiplication `num_f · den_g = num_g · den_f`.
pub fn ratfun_equal(f: &RationalFunction, g: &RationalFunction) -> bool {
    if f.num.degree() != g.num.degree() {
        return false;
    }
    &f.num * &g.den == &g.num * &f.den
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = Polynomial::gcd(&self.den, &rhs.den);
        if g.degree() == Some(0) {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RationalFunction::normalized(num, &self.den * &rhs.den);
        }
        let b = self.den.exact_div(&g);
        let d = rhs.den.exact_div(&g);
        let top = &(&self.num * &d) + &(&rhs.num * &b);
        let h = Polynomial::gcd(&top, &g);
        let num = top.exact_div(&h);
        let den = &b * &rhs.den.exact_div(&h);
        RationalFunction::normalized(num, den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = Polynomial::gcd(&self.num, &rhs.den);
        let g2 = Polynomial::gcd(&rhs.num, &self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        RationalFunction::normalized(num, den)
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        Ok(self * &rhs.recip()?)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_i64(num), Polynomial::from_i64(den)).unwrap()
    }

    #[test]
    fn cancellation_on_construction() {
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(f.denom(), &Polynomial::one());
        assert!(ratfun_equal(&f, &rf(&[1, 1], &[1])));
    }

    #[test]
    fn distinct_functions_differ() {
        assert!(!ratfun_equal(&rf(&[1], &[0, 1]), &rf(&[1], &[1, 1])));
    }

    #[test]
    fn denominator_is_monic() {
        let f = rf(&[3], &[4, 2]);
        assert_eq!(f.denom().leading(), Some(&rat(1, 1)));
        assert_eq!(f.eval(&rat(0, 1)).unwrap(), rat(3, 4));
        assert!(matches!(f.eval(&rat(-2, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
    }

    #[test]
    fn sums_with_shared_denominators() {
        // 1/(t(t+1)) = 1/t - 1/(t+1)
        let lhs = rf(&[1], &[0, 1, 1]);
        let rhs = &rf(&[1], &[0, 1]) - &rf(&[1], &[1, 1]);
        assert!(ratfun_equal(&lhs, &rhs));
        // 1/(t+1) + 1/(t+1)^2 - ... shares a factor
        let a = rf(&[1], &[1, 1]);
        let b = rf(&[1], &[1, 2, 1]);
        let s = &a + &b;
        assert!(ratfun_equal(&s, &rf(&[2, 1], &[1, 2, 1])));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dt 1/t^2 = -2/t^3
        let f = rf(&[1], &[0, 0, 1]);
        assert!(ratfun_equal(&f.derivative(), &rf(&[-2], &[0, 0, 0, 1])));
        // d/dt t/(t+1) = 1/(t+1)^2
        let g = rf(&[0, 1], &[1, 1]);
        assert!(ratfun_equal(&g.derivative(), &rf(&[1], &[1, 2, 1])));
    }

    #[test]
    fn shift_and_division() {
        let f = rf(&[0, 1], &[1, 1]);
        let shifted = f.shift(&rat(1, 1));
        assert!(ratfun_equal(&shifted, &rf(&[1, 1], &[2, 1])));
        let q = (&f / &shifted).unwrap();
        assert!(ratfun_equal(&q, &rf(&[0, 2, 1], &[1, 2, 1])));
        assert!((&f / &RationalFunction::zero()).is_err());
    }
}

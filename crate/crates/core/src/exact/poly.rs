use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ExactRational;

/// Dense univariate polynomial over ℚ in the variable `t`.
///
/// `coeffs[i]` is the coefficient of `t^i`; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::from(1))
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![ExactRational::new(), ExactRational::from(1)])
    }

    /// `t - root`.
    pub fn linear_root(root: &ExactRational) -> Self {
        Self::from_coeffs(vec![-root.clone(), ExactRational::from(1)])
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| ExactRational::from(c)).collect())
    }

    /// `Π (t - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a ExactRational>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::new();
        for c in self.coeffs.iter().rev() {
            acc *= t;
            acc += c;
        }
        acc
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if *c == 0 {
            return Self::zero();
        }
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| ExactRational::from(a * c))
                .collect(),
        }
    }

    /// Divides through by the leading coefficient. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = ExactRational::from(lc.recip_ref());
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| ExactRational::from(c * i as u64))
                .collect(),
        )
    }

    /// `p(t + a)`.
    pub fn shift(&self, a: &ExactRational) -> Self {
        // The Taylor coefficients of p at a are the coefficients of p(t + a).
        Self::from_coeffs(self.taylor_coeffs(a, self.coeffs.len()))
    }

    /// Taylor coefficients `p^{(i)}(center)/i!` for `i < order`.
    pub fn taylor_coeffs(&self, center: &ExactRational, order: usize) -> Vec<ExactRational> {
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(order);
        for _ in 0..order {
            if work.is_empty() {
                out.push(ExactRational::new());
                continue;
            }
            // Horner: work <- work div (t - center), remainder is the value.
            let mut carry = ExactRational::new();
            for c in work.iter_mut().rev() {
                let next = ExactRational::from(&carry * center) + &*c;
                *c = carry;
                carry = next;
            }
            work.pop();
            out.push(carry);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc_inv = ExactRational::from(divisor.coeffs[dd].recip_ref());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![ExactRational::new(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if *top == 0 {
                continue;
            }
            let f = ExactRational::from(top * &lc_inv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= ExactRational::from(&f * d);
            }
            quot[i] = f;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Quotient of a division known to be exact. Panics otherwise.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Self::one();
        }
        let (mut x, mut y) = if a.degree() >= b.degree() {
            (a.monic(), b.monic())
        } else {
            (b.monic(), a.monic())
        };
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x
    }
}

impl From<ExactRational> for Polynomial {
    fn from(c: ExactRational) -> Self {
        Polynomial::constant(c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| ExactRational::from(-c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![ExactRational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += ExactRational::from(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let abs = ExactRational::from(c.abs_ref());
            match (i, abs == 1) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{abs}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = Polynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::from_i64(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let a = Polynomial::from_i64(&[-1, 0, 1]);
        let b = Polynomial::from_i64(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Polynomial::from_i64(&[1, 1]));
        assert!(r.is_zero());
        let g = Polynomial::gcd(&a, &Polynomial::from_i64(&[2, 2]));
        assert_eq!(g, Polynomial::from_i64(&[1, 1]));
        assert_eq!(
            Polynomial::gcd(&a, &Polynomial::from_i64(&[3, 1])),
            Polynomial::one()
        );
    }

    #[test]
    fn taylor_and_shift() {
        // t^2 at 1: 1 + 2(t-1) + (t-1)^2
        let p = Polynomial::from_i64(&[0, 0, 1]);
        assert_eq!(p.taylor_coeffs(&rat(1, 1), 3), vec![rat(1, 1), rat(2, 1), rat(1, 1)]);
        assert_eq!(p.shift(&rat(1, 1)), Polynomial::from_i64(&[1, 2, 1]));
        assert_eq!(p.shift(&rat(1, 1)).shift(&rat(-1, 1)), p);
    }

    #[test]
    fn display() {
        let p = Polynomial::from_coeffs(vec![rat(-1, 2), rat(1, 1), rat(0, 1), rat(-3, 1)]);
        assert_eq!(p.to_string(), "-3*t^3 + t - 1/2");
    }
}

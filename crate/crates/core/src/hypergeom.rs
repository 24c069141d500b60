//! The kernel
//! `R_n(t) = n!(2t+n+1)·t(t−1)⋯(t−n+1)·(t+n+1)⋯(t+2n) / ((t+½)(t+3/2)⋯(t+n+½))³`,
//! its partial-fraction table and the linear form
//! `F_n = Σ_{t≥0} (−1)^t R_n(t) = U_n·β(3) + U′_n·β(2) + U″_n·β(1) − V_n`.
//!
//! With `P¹_n = t(t−1)⋯(t−n+1)/n!`, `P²_n = (t+n+1)⋯(t+2n)/n!` and
//! `Q_n = n!/((t+½)⋯(t+n+½))` the kernel factors as
//! `R_n = (2t+n+1)·P¹_n·P²_n·Q_n³`.

use rug::ops::Pow;
use rug::{Float, Integer};

use crate::analytic::alternating_sum;
use crate::exact::{
    is_integer, lcm_upto, rat, BigFloat, ExactInteger, ExactRational, FactoredRational, Polynomial,
    RationalFunction, TruncatedSeries,
};

fn factorial(n: u64) -> ExactRational {
    ExactRational::from(Integer::factorial(n as u32))
}

/// `−k − ½`, the location of the `k`-th pole.
fn pole(k: i64) -> ExactRational {
    ExactRational::from((-2 * k - 1, 2))
}

/// `P¹_n` in factored form.
pub fn p1_factored(n: u64) -> FactoredRational {
    let mut f = FactoredRational::constant(factorial(n).recip());
    for i in 0..n as i64 {
        f = &f * &FactoredRational::linear(rat(1, 1), rat(i, 1), 1);
    }
    f
}

/// `P²_n` in factored form.
pub fn p2_factored(n: u64) -> FactoredRational {
    let n = n as i64;
    let mut f = FactoredRational::constant(factorial(n as u64).recip());
    for i in n + 1..=2 * n {
        f = &f * &FactoredRational::linear(rat(1, 1), rat(-i, 1), 1);
    }
    f
}

/// `Q_n` in factored form.
pub fn q_factored(n: u64) -> FactoredRational {
    let mut f = FactoredRational::constant(factorial(n));
    for k in 0..=n as i64 {
        f = &f * &FactoredRational::linear(rat(1, 1), pole(k), -1);
    }
    f
}

/// `R_n` in factored form; for even `n` the factor `2t+n+1` cancels one
/// power of `t + (n+1)/2`.
pub fn kernel_factored(n: u64) -> FactoredRational {
    let q = q_factored(n);
    let mut f = FactoredRational::affine(2, n as i64 + 1, 1);
    f = &f * &p1_factored(n);
    f = &f * &p2_factored(n);
    &(&f * &q) * &(&q * &q)
}

#[derive(Clone, Debug)]
pub struct KernelParts {
    pub n: u64,
    pub p1: Polynomial,
    pub p2: Polynomial,
    pub q: RationalFunction,
    pub r: RationalFunction,
    factored: FactoredRational,
}

impl KernelParts {
    pub fn factored(&self) -> &FactoredRational {
        &self.factored
    }
}

pub fn build_kernel(n: u64) -> KernelParts {
    let factored = kernel_factored(n);
    let as_poly = |f: FactoredRational| {
        let r = f.to_rational_function();
        debug_assert_eq!(r.denom(), &Polynomial::one());
        r.numer().clone()
    };
    KernelParts {
        n,
        p1: as_poly(p1_factored(n)),
        p2: as_poly(p2_factored(n)),
        q: q_factored(n).to_rational_function(),
        r: factored.to_rational_function(),
        factored,
    }
}

/// `a_k = Q_n(t)(t+k+½)` at `t = −k−½`, for `k = 0..n`.
pub fn q_residues(n: u64) -> Vec<ExactRational> {
    let q = q_factored(n);
    (0..=n as i64)
        .map(|k| {
            let cleared = &q * &FactoredRational::linear(rat(1, 1), pole(k), 1);
            cleared.eval(&pole(k)).expect("pole removed")
        })
        .collect()
}

/// Coefficients `[A_0k, A_1k, A_2k]` of `(t+k+½)^{−3}, (t+k+½)^{−2},
/// (t+k+½)^{−1}` in `R_n`, for any integer `k`; they vanish unless
/// `0 ≤ k ≤ n`.
pub fn pole_coefficients(n: u64, k: i64) -> [ExactRational; 3] {
    let cleared = &kernel_factored(n) * &FactoredRational::linear(rat(1, 1), pole(k), 3);
    let s = cleared.series_at(&pole(k), 3).expect("pole of order at most three");
    [s.coeff(0).clone(), s.coeff(1).clone(), s.coeff(2).clone()]
}

/// `A_jk(n)`, `j ∈ {0,1,2}`, `k ∈ {0..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionTable {
    pub n: u64,
    rows: [Vec<ExactRational>; 3],
}

impl PartialFractionTable {
    pub fn get(&self, j: usize, k: usize) -> &ExactRational {
        &self.rows[j][k]
    }

    pub fn row(&self, j: usize) -> &[ExactRational] {
        &self.rows[j]
    }

    /// `Σ_{j,k} A_jk/(t+k+½)^{3−j}` over the common denominator
    /// `Π_k (t+k+½)³`, unreduced.
    pub fn reconstruction(&self) -> (Polynomial, Polynomial) {
        let n = self.n as i64;
        let lin: Vec<Polynomial> = (0..=n).map(|k| Polynomial::linear_root(&pole(k))).collect();
        let cubes: Vec<Polynomial> = lin.iter().map(|l| l.pow(3)).collect();
        let den = cubes.iter().fold(Polynomial::one(), |acc, c| &acc * c);
        let mut num = Polynomial::zero();
        for k in 0..=n as usize {
            let others = cubes
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .fold(Polynomial::one(), |acc, (_, c)| &acc * c);
            let mut local = Polynomial::zero();
            for j in 0..3 {
                local = &local + &lin[k].pow(j as u32).scale(&self.rows[j][k]);
            }
            num = &num + &(&local * &others);
        }
        (num, den)
    }

    /// The reconstruction identity against a rational function, by
    /// cross-multiplication.
    pub fn reconstructs(&self, r: &RationalFunction) -> bool {
        let (num, den) = self.reconstruction();
        &num * r.denom() == &den * r.numer()
    }
}

pub fn partial_fractions(n: u64) -> PartialFractionTable {
    let mut rows: [Vec<ExactRational>; 3] = Default::default();
    for k in 0..=n as i64 {
        for (j, a) in pole_coefficients(n, k).into_iter().enumerate() {
            rows[j].push(a);
        }
    }
    PartialFractionTable { n, rows }
}

/// `U_n, U′_n, U″_n, V_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientQuadruple {
    pub n: u64,
    pub u: ExactRational,
    pub u_prime: ExactRational,
    pub u_double_prime: ExactRational,
    pub v: ExactRational,
}

/// `Σ_{l<k} (−1)^l/(2l+1)^m`.
fn beta_partial(k: usize, m: u32) -> ExactRational {
    let mut acc = ExactRational::new();
    for l in 0..k as i64 {
        let term = ExactRational::from((1, ExactInteger::from(2 * l + 1).pow(m)));
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn quadruple_from_table(table: &PartialFractionTable) -> CoefficientQuadruple {
    let alt = |j: usize| {
        table.rows[j]
            .iter()
            .enumerate()
            .fold(ExactRational::new(), |acc, (k, a)| if k % 2 == 0 { acc + a } else { acc - a })
    };
    let mut v = ExactRational::new();
    for j in 0..3 {
        let m = 3 - j as u32;
        let mut inner = ExactRational::new();
        for (k, a) in table.rows[j].iter().enumerate().skip(1) {
            let term = ExactRational::from(a * &beta_partial(k, m));
            if k % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        v += inner * (1u32 << m);
    }
    CoefficientQuadruple {
        n: table.n,
        u: alt(0) * 8u32,
        u_prime: alt(1) * 4u32,
        u_double_prime: alt(2) * 2u32,
        v,
    }
}

pub fn coefficient_quadruple(n: u64) -> CoefficientQuadruple {
    quadruple_from_table(&partial_fractions(n))
}

/// Outcome of each family of arithmetic inclusions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithLemmaReport {
    pub n: u64,
    /// `2^{2n}·P(−k−½) ∈ ℤ` for `P ∈ {P¹_n, P²_n}`, `|k| ≤ 2n`.
    pub values: bool,
    /// `2^{2n}·D_n^j·P^{(j)}(−k−½)/j! ∈ ℤ`, `j ∈ {1,2}`, `|k| ≤ 2n`.
    pub derivatives: bool,
    /// `D_n^j/j!·(Q_n(t)(t+k+½))^{(j)}` at `−k−½` equals
    /// `(−1)^{j−1}D_n^j·Σ_{l≠k} a_l/(l−k)^j` and is an integer,
    /// `j ∈ {1,2}`, `0 ≤ k ≤ n`.
    pub residues: bool,
    /// `2^{4n}·D_n^j·A_jk ∈ ℤ`, `j ∈ {0,1,2}`, `0 ≤ k ≤ n`.
    pub table: bool,
}

impl ArithLemmaReport {
    pub fn all(&self) -> bool {
        self.values && self.derivatives && self.residues && self.table
    }
}

pub fn arith_lemma_report(n: u64) -> ArithLemmaReport {
    let d_n = ExactRational::from(lcm_upto(n));
    let four_n = ExactRational::from(ExactInteger::from(4).pow(n as u32));
    let window = -2 * n as i64..=2 * n as i64;

    let mut values = true;
    let mut derivatives = true;
    for p in [p1_factored(n), p2_factored(n)] {
        for k in window.clone() {
            let s = p.series_at(&pole(k), 3).expect("polynomial");
            values &= is_integer(&ExactRational::from(s.coeff(0) * &four_n));
            for j in 1..3u32 {
                let scaled = ExactRational::from(s.coeff(j as usize) * &four_n) * d_n.clone().pow(j);
                derivatives &= is_integer(&scaled);
            }
        }
    }

    let a = q_residues(n);
    let q = q_factored(n);
    let mut residues = true;
    for k in 0..=n as i64 {
        let cleared = &q * &FactoredRational::linear(rat(1, 1), pole(k), 1);
        let s = cleared.series_at(&pole(k), 3).expect("pole removed");
        for j in 1..3u32 {
            let dj = d_n.clone().pow(j);
            let lhs = ExactRational::from(s.coeff(j as usize) * &dj);
            let mut sum = ExactRational::new();
            for (l, al) in a.iter().enumerate() {
                let diff = l as i64 - k;
                if diff != 0 {
                    sum += ExactRational::from(al / ExactRational::from(diff).pow(j));
                }
            }
            let rhs = if j % 2 == 1 { sum * &dj } else { -sum * &dj };
            residues &= lhs == rhs && is_integer(&lhs);
        }
    }

    let table = partial_fractions(n);
    let sixteen_n = ExactRational::from(ExactInteger::from(16).pow(n as u32));
    let mut table_ok = true;
    for j in 0..3u32 {
        let factor = ExactRational::from(&sixteen_n * &d_n.clone().pow(j));
        for a in table.row(j as usize) {
            table_ok &= is_integer(&ExactRational::from(a * &factor));
        }
    }

    ArithLemmaReport {
        n,
        values,
        derivatives,
        residues,
        table: table_ok,
    }
}

pub fn check_arith_lemmas(n: u64) -> bool {
    arith_lemma_report(n).all()
}

/// `F_n = Σ_{t≥0} (−1)^t R_n(t)` with absolute error below `10^{−digits}`.
///
/// Terms decay only like `t^{−n−2}`, so the series is summed with the
/// Cohen–Rodriguez Villegas–Zagier acceleration. The partial-fraction
/// expansion writes `R_n(t) = ∫_0^1 x^t dμ(x)` with total variation
/// `|μ| ≤ Σ |A_jk|/(k+½)^{3−j}`, which feeds the a priori error bound.
/// Terms are evaluated exactly before rounding.
pub fn f_numeric(n: u64, digits: u32) -> BigFloat {
    let table = partial_fractions(n);
    let mut variation = ExactRational::new();
    for j in 0..3u32 {
        for (k, a) in table.row(j as usize).iter().enumerate() {
            let b = ExactRational::from((2 * k as i64 + 1, 2));
            variation += ExactRational::from(a.abs_ref()) / b.pow(3 - j);
        }
    }
    let log10_variation = if variation == 0 {
        0.0
    } else {
        Float::with_val(64, &variation).log10().to_f64()
    };
    let kernel = kernel_factored(n);
    let sum = alternating_sum(digits + 5, log10_variation, |t, bits| {
        let value = kernel.eval(&ExactRational::from(t)).expect("no poles at integers");
        Float::with_val(bits, &value)
    });
    BigFloat::from_float(sum, digits + 5)
}

/// Taylor series of `(2t+n+1)·P¹_n·P²_n·(Q_n(t)(t+k+½))³` at `−k−½`, each
/// factor expanded separately and `Q_n(t)(t+k+½)` taken from its
/// partial-fraction form `Σ_l a_l(1 − (l−k)/(t+l+½))`.
pub fn product_form_series(n: u64, k: i64) -> TruncatedSeries {
    let c = pole(k);
    let kernel = build_kernel(n);
    let linear = TruncatedSeries::from_polynomial(&Polynomial::from_i64(&[n as i64 + 1, 2]), &c, 3);
    let p1 = TruncatedSeries::from_polynomial(&kernel.p1, &c, 3);
    let p2 = TruncatedSeries::from_polynomial(&kernel.p2, &c, 3);
    let mut qk = TruncatedSeries::constant(c.clone(), ExactRational::new(), 3);
    for (l, al) in q_residues(n).iter().enumerate() {
        let diff = l as i64 - k;
        // With s = t + k + ½ the l-th term is a_l·(1 − (l−k)/(s + l − k)).
        let term = if diff == 0 {
            TruncatedSeries::constant(c.clone(), al.clone(), 3)
        } else {
            let base = TruncatedSeries::new(c.clone(), vec![ExactRational::from(diff), rat(1, 1)], 3);
            let frac = base.recip().expect("diff nonzero");
            let scaled = &frac * &TruncatedSeries::constant(c.clone(), ExactRational::from(-diff), 3);
            let one = TruncatedSeries::constant(c.clone(), rat(1, 1), 3);
            &(&one + &scaled) * &TruncatedSeries::constant(c.clone(), al.clone(), 3)
        };
        qk = &qk + &term;
    }
    &(&(&linear * &p1) * &p2) * &qk.pow(3)
}

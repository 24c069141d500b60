//! The two recurrence families and their arithmetic.
//!
//! Catalan family:
//! `(2n+1)²(2n+2)²p(n)·x_{n+1} = q(n)·x_n + (2n−1)²(2n)²p(n+1)·x_{n−1}`
//! with `(u_0, u_1) = (1, 7/4)` and `(v_0, v_1) = (0, 13/8)`.
//!
//! ζ(4) family:
//! `(n+1)⁵·x_{n+1} = r(n)·x_n + 3n³(3n−1)(3n+1)·x_{n−1}`
//! with `(u_0, u_1) = (1, 12)` and `(v_0, v_1) = (0, 13)`.
//!
//! Both are generated bottom-up in exact rational arithmetic and memoized in
//! append-only, process-wide tables.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use rug::ops::Pow;

use crate::analytic;
use crate::exact::{is_integer, lcm_upto, rat, BigFloat, ExactInteger, ExactRational};
use crate::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Catalan,
    Zeta4,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Catalan, Family::Zeta4];

    pub fn name(self) -> &'static str {
        match self {
            Family::Catalan => "catalan",
            Family::Zeta4 => "zeta4",
        }
    }

    fn index(self) -> usize {
        match self {
            Family::Catalan => 0,
            Family::Zeta4 => 1,
        }
    }

    fn initial(self) -> [(ExactRational, ExactRational); 2] {
        match self {
            Family::Catalan => [(rat(1, 1), rat(0, 1)), (rat(7, 4), rat(13, 8))],
            Family::Zeta4 => [(rat(1, 1), rat(0, 1)), (rat(12, 1), rat(13, 1))],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalan" => Ok(Family::Catalan),
            "zeta4" => Ok(Family::Zeta4),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

fn poly_at(coeffs: &[i64], n: i64) -> ExactRational {
    let n = ExactInteger::from(n);
    let mut acc = ExactInteger::new();
    for &c in coeffs.iter().rev() {
        acc *= &n;
        acc += c;
    }
    ExactRational::from(acc)
}

/// `p(n) = 20n² − 8n + 1`.
pub fn catalan_p(n: i64) -> ExactRational {
    poly_at(&[1, -8, 20], n)
}

/// `q(n) = 3520n⁶ + 5632n⁵ + 2064n⁴ − 384n³ − 156n² + 16n + 7`.
pub fn catalan_q(n: i64) -> ExactRational {
    poly_at(&[7, 16, -156, -384, 2064, 5632, 3520], n)
}

/// `r(n) = 270n⁵ + 675n⁴ + 702n³ + 378n² + 105n + 12`.
pub fn zeta4_r(n: i64) -> ExactRational {
    poly_at(&[12, 105, 378, 702, 675, 270], n)
}

/// Coefficients of `lead·x_{n+1} = middle·x_n + trail·x_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoefficients {
    pub lead: ExactRational,
    pub middle: ExactRational,
    pub trail: ExactRational,
}

pub fn recurrence_coefficients(family: Family, n: u64) -> RecurrenceCoefficients {
    let m = n as i64;
    match family {
        Family::Catalan => {
            let sq = |a: i64| ExactRational::from(a * a);
            RecurrenceCoefficients {
                lead: sq(2 * m + 1) * sq(2 * m + 2) * catalan_p(m),
                middle: catalan_q(m),
                trail: sq(2 * m - 1) * sq(2 * m) * catalan_p(m + 1),
            }
        }
        Family::Zeta4 => RecurrenceCoefficients {
            lead: ExactRational::from(ExactInteger::from(m + 1).pow(5u32)),
            middle: zeta4_r(m),
            trail: ExactRational::from(3 * ExactInteger::from(m).pow(3u32))
                * (3 * m - 1)
                * (3 * m + 1),
        },
    }
}

/// `lead·next − middle·cur − trail·prev`, zero for any solution.
pub fn recurrence_residual(
    family: Family,
    n: u64,
    prev: &ExactRational,
    cur: &ExactRational,
    next: &ExactRational,
) -> ExactRational {
    let c = recurrence_coefficients(family, n);
    c.lead * next - c.middle * cur - c.trail * prev
}

/// `(n, u_n, v_n)` for one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePair {
    pub family: Family,
    pub n: u64,
    pub u: ExactRational,
    pub v: ExactRational,
}

impl SequencePair {
    /// `v_n / u_n`.
    pub fn ratio(&self) -> ExactRational {
        ExactRational::from(&self.v / &self.u)
    }
}

static TABLES: [RwLock<Vec<(ExactRational, ExactRational)>>; 2] =
    [RwLock::new(Vec::new()), RwLock::new(Vec::new())];

fn extend_table(family: Family, n: usize) {
    let mut table = TABLES[family.index()].write().expect("sequence table poisoned");
    if table.is_empty() {
        table.extend(family.initial());
    }
    while table.len() <= n {
        let k = table.len() - 1;
        let c = recurrence_coefficients(family, k as u64);
        assert!(c.lead != 0, "leading coefficient vanished at n = {k}");
        let (up, vp) = &table[k - 1];
        let (uc, vc) = &table[k];
        let u = (ExactRational::from(&c.middle * uc) + ExactRational::from(&c.trail * up)) / &c.lead;
        let v = (ExactRational::from(&c.middle * vc) + ExactRational::from(&c.trail * vp)) / &c.lead;
        table.push((u, v));
    }
}

/// All pairs `0..=n_max` in one pass over the table.
pub fn pairs(family: Family, n_max: u64) -> Vec<SequencePair> {
    let idx = n_max as usize;
    let ready = TABLES[family.index()].read().expect("sequence table poisoned").len() > idx;
    if !ready {
        extend_table(family, idx);
    }
    let table = TABLES[family.index()].read().expect("sequence table poisoned");
    table[..=idx]
        .iter()
        .enumerate()
        .map(|(n, (u, v))| SequencePair {
            family,
            n: n as u64,
            u: u.clone(),
            v: v.clone(),
        })
        .collect()
}

pub fn pair(family: Family, n: u64) -> SequencePair {
    let idx = n as usize;
    {
        let table = TABLES[family.index()].read().expect("sequence table poisoned");
        if let Some((u, v)) = table.get(idx) {
            return SequencePair {
                family,
                n,
                u: u.clone(),
                v: v.clone(),
            };
        }
    }
    extend_table(family, idx);
    pair(family, n)
}

pub fn catalan_pair(n: u64) -> SequencePair {
    pair(Family::Catalan, n)
}

pub fn zeta4_pair(n: u64) -> SequencePair {
    pair(Family::Zeta4, n)
}

/// Which set of clearing factors to apply.
///
/// `Proved` uses the clearing factors with a known proof; `Strong` is the sharper
/// experimentally observed form.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum InclusionMode {
    Proved,
    Strong,
}

impl InclusionMode {
    pub fn name(self) -> &'static str {
        match self {
            InclusionMode::Proved => "proved",
            InclusionMode::Strong => "strong",
        }
    }
}

impl fmt::Display for InclusionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InclusionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proved" => Ok(InclusionMode::Proved),
            "strong" => Ok(InclusionMode::Strong),
            other => Err(Error::InvalidArgument(format!("unknown inclusion mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    pub family: Family,
    pub n: u64,
    pub mode: InclusionMode,
    pub pass_u: bool,
    pub pass_v: bool,
    /// Cleared `u_n`, present when it is an integer.
    pub witness_u: Option<ExactInteger>,
    /// Cleared `v_n`, present when it is an integer.
    pub witness_v: Option<ExactInteger>,
}

impl InclusionReport {
    pub fn passed(&self) -> bool {
        self.pass_u && self.pass_v
    }
}

/// `D_{2n−1}`, read as `D_0 = 1` at `n = 0`.
fn lcm_odd_window(n: u64) -> ExactInteger {
    lcm_upto((2 * n).saturating_sub(1))
}

/// Factors `(c_u, c_v)` with `c_u·u_n, c_v·v_n ∈ ℤ` claimed.
pub fn clearing_factors(family: Family, n: u64, mode: InclusionMode) -> (ExactInteger, ExactInteger) {
    let two_pow = |e: u64| ExactInteger::from(ExactInteger::u_pow_u(2, e as u32));
    let d_n = lcm_upto(n);
    match (family, mode) {
        (Family::Catalan, InclusionMode::Proved) => {
            let p = two_pow(4 * n + 3);
            (ExactInteger::from(&p * &d_n), p * lcm_odd_window(n).pow(3u32))
        }
        (Family::Catalan, InclusionMode::Strong) => {
            let p = two_pow(4 * n);
            (p.clone(), p * lcm_odd_window(n).pow(2u32))
        }
        (Family::Zeta4, InclusionMode::Proved) => {
            (6 * d_n.clone(), 6 * d_n.pow(5u32))
        }
        (Family::Zeta4, InclusionMode::Strong) => (ExactInteger::from(1), d_n.pow(4u32)),
    }
}

pub fn check_inclusions(family: Family, n: u64, mode: InclusionMode) -> InclusionReport {
    let p = pair(family, n);
    let (cu, cv) = clearing_factors(family, n, mode);
    let clear = |x: &ExactRational, c: &ExactInteger| {
        let y = ExactRational::from(x * c);
        is_integer(&y).then(|| y.into_numer_denom().0)
    };
    let witness_u = clear(&p.u, &cu);
    let witness_v = clear(&p.v, &cv);
    InclusionReport {
        family,
        n,
        mode,
        pass_u: witness_u.is_some(),
        pass_v: witness_v.is_some(),
        witness_u,
        witness_v,
    }
}

/// Per-step logarithmic growth of `u_n` and decay of `|u_n·C − v_n|`.
#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    pub family: Family,
    pub n: u64,
    /// `(1/n)·ln u_n`.
    pub rate_u: BigFloat,
    /// `(1/n)·ln |u_n·C − v_n|`.
    pub rate_form: BigFloat,
}

/// `precision` is the working precision in decimal digits, including the
/// reference constant `C`. The linear form cancels about `2·log10 u_n`
/// digits, so large `n` needs correspondingly large precision; when the
/// form is not resolved at the given precision the call fails with
/// [`Error::PrecisionTooLow`].
pub fn asymptotic_report(family: Family, n: u64, precision: u32) -> Result<AsymptoticReport> {
    if n < 2 {
        return Err(Error::domain("asymptotic_report", 2, n));
    }
    let p = pair(family, n);
    let c = analytic::reference_constant(family, precision);
    let u = BigFloat::from_rational(&p.u, precision);
    let v = BigFloat::from_rational(&p.v, precision);
    let form = &(&u * &c) - &v;

    // |error| <= u·|ΔC| + rounding of u·C and v, each about u·10^{-precision}.
    let u_mag = u.magnitude().unwrap_or(0);
    let err_mag = u_mag + 1 - precision as i64;
    match form.magnitude() {
        Some(m) if m > err_mag => {}
        _ => {
            return Err(Error::PrecisionTooLow(format!(
                "|u_n·C − v_n| for {family} at n = {n} is below the rounding error \
                 10^{err_mag} at {precision} digits; about {} digits are needed",
                2 * (u_mag + 1) + 10
            )))
        }
    }
    let steps = BigFloat::from_i64(n as i64, precision);
    Ok(AsymptoticReport {
        family,
        n,
        rate_u: &u.ln()? / &steps,
        rate_form: &form.abs().ln()? / &steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_values() {
        assert_eq!(catalan_p(0), 1);
        assert_eq!(catalan_p(1), 13);
        assert_eq!(catalan_p(2), 65);
        assert_eq!(catalan_q(0), 7);
        assert_eq!(catalan_q(1), 10699);
        // 3520 - 5632 + 2064 + 384 - 156 - 16 + 7
        assert_eq!(catalan_q(-1), 171);
        assert_eq!(zeta4_r(0), 12);
        assert_eq!(zeta4_r(1), 2142);
    }

    #[test]
    fn zeta4_r_factored_form() {
        for n in -5..=50i64 {
            let factored = ExactRational::from(3 * (2 * n + 1))
                * (3 * n * n + 3 * n + 1)
                * (15 * n * n + 15 * n + 4);
            assert_eq!(zeta4_r(n), factored, "n = {n}");
        }
    }

    #[test]
    fn p_has_no_integer_roots() {
        for n in -1000..=1000 {
            assert!(catalan_p(n) != 0);
        }
    }

    #[test]
    fn initial_and_early_terms() {
        let c = |n| catalan_pair(n);
        assert_eq!((c(0).u, c(0).v), (rat(1, 1), rat(0, 1)));
        assert_eq!((c(1).u, c(1).v), (rat(7, 4), rat(13, 8)));
        assert_eq!((c(2).u, c(2).v), (rat(649, 64), rat(10699, 1152)));
        let z = |n| zeta4_pair(n);
        assert_eq!((z(0).u, z(0).v), (rat(1, 1), rat(0, 1)));
        assert_eq!((z(1).u, z(1).v), (rat(12, 1), rat(13, 1)));
        assert_eq!((z(2).u, z(2).v), (rat(804, 1), rat(13923, 16)));
    }

    #[test]
    fn residual_vanishes() {
        for family in Family::ALL {
            let ps = pairs(family, 300);
            for n in 1..300 {
                let (a, b, c) = (&ps[n as usize - 1], &ps[n as usize], &ps[n as usize + 1]);
                assert_eq!(recurrence_residual(family, n, &a.u, &b.u, &c.u), 0);
                assert_eq!(recurrence_residual(family, n, &a.v, &b.v, &c.v), 0);
            }
        }
    }

    #[test]
    fn positivity_and_envelope() {
        for family in Family::ALL {
            for p in pairs(family, 200) {
                assert!(p.u > 0, "{family} u_{} not positive", p.n);
                if p.n == 0 {
                    assert_eq!(p.v, 0);
                    continue;
                }
                assert!(p.v > 0);
                let r = p.ratio();
                match family {
                    Family::Catalan => assert!(r > 0 && r < 1),
                    Family::Zeta4 => assert!(r > 1 && r < 2),
                }
            }
        }
    }

    #[test]
    fn inclusion_examples() {
        let r = check_inclusions(Family::Catalan, 2, InclusionMode::Strong);
        assert!(r.passed());
        assert_eq!(r.witness_u, Some(ExactInteger::from(2596)));
        assert_eq!(r.witness_v, Some(ExactInteger::from(85592)));

        let r = check_inclusions(Family::Catalan, 0, InclusionMode::Proved);
        assert!(r.passed());
        assert_eq!(r.witness_u, Some(ExactInteger::from(8)));
        assert_eq!(r.witness_v, Some(ExactInteger::from(0)));

        let r = check_inclusions(Family::Zeta4, 2, InclusionMode::Strong);
        assert!(r.passed());
        assert_eq!(r.witness_u, Some(ExactInteger::from(804)));
        assert_eq!(r.witness_v, Some(ExactInteger::from(13923)));
    }

    #[test]
    fn too_weak_factor_fails() {
        // u_2 = 649/64 is not cleared by 2^4.
        let y = ExactRational::from(&catalan_pair(2).u * 16);
        assert!(!is_integer(&y));
    }

    #[test]
    fn parse_names() {
        assert_eq!("catalan".parse::<Family>().unwrap(), Family::Catalan);
        assert_eq!("zeta4".parse::<Family>().unwrap(), Family::Zeta4);
        assert!("zeta3".parse::<Family>().is_err());
        assert_eq!("strong".parse::<InclusionMode>().unwrap(), InclusionMode::Strong);
        assert!("weak".parse::<InclusionMode>().is_err());
    }

    #[test]
    fn asymptotics_smoke_and_errors() {
        let r = asymptotic_report(Family::Catalan, 2, 50).unwrap();
        assert!(r.rate_u.to_f64().is_finite());
        assert!(r.rate_form.to_f64().is_finite());
        assert!(matches!(
            asymptotic_report(Family::Catalan, 1, 50),
            Err(Error::Domain { .. })
        ));
        // u_60 is about 10^62, so 60 digits cannot resolve the linear form.
        assert!(matches!(
            asymptotic_report(Family::Catalan, 60, 60),
            Err(Error::PrecisionTooLow(_))
        ));
    }
}

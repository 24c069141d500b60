use rug::ops::Pow;

use crate::exact::{rat, ExactInteger, ExactRational};
use crate::sequences::{catalan_p, catalan_q, zeta4_r, Family};
use crate::{Error, Result};

/// Finite continued fraction `a_1/(b_0 + a_2/(b_1 + … + a_n/b_{n−1}))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFConvergent {
    pub family: Family,
    pub n: u64,
    pub value: ExactRational,
}

/// Partial numerator `a_m`, `m ≥ 1`.
pub fn cf_numerator(family: Family, m: u64) -> ExactRational {
    match (family, m) {
        (Family::Catalan, 1) => rat(13, 2),
        (Family::Zeta4, 1) => rat(13, 1),
        (Family::Catalan, _) => {
            let k = (m - 1) as i64;
            let w = ExactInteger::from((2 * k - 1) * 2 * k).pow(4u32);
            ExactRational::from(w) * catalan_p(k - 1) * catalan_p(k + 1)
        }
        (Family::Zeta4, _) => {
            let k = (m - 1) as i64;
            ExactRational::from(ExactInteger::from(k).pow(7u32) * (3 * k - 1) * (3 * k) * (3 * k + 1))
        }
    }
}

/// Partial denominator `b_m`, `m ≥ 0`.
pub fn cf_denominator(family: Family, m: u64) -> ExactRational {
    match family {
        Family::Catalan => catalan_q(m as i64),
        Family::Zeta4 => zeta4_r(m as i64),
    }
}

/// Depth-`n` convergent, evaluated from the innermost level outwards.
pub fn cf_convergent(family: Family, n: u64) -> Result<CFConvergent> {
    if n == 0 {
        return Err(Error::domain("cf_convergent", 1, 0));
    }
    let mut tail = cf_denominator(family, n - 1);
    for m in (1..n).rev() {
        tail = cf_denominator(family, m - 1) + cf_numerator(family, m + 1) / tail;
    }
    Ok(CFConvergent {
        family,
        n,
        value: cf_numerator(family, 1) / tail,
    })
}

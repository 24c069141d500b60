//! Cohen–Rodriguez Villegas–Zagier acceleration of alternating series.

use rug::{Float, Integer};

use crate::exact::bits_for;

const LOG10_RATE: f64 = 0.765_475_400_609_614_8; // log10(3 + √8)

/// `Σ_{k≥0} (−1)^k a_k` to absolute error below `10^{−digits}`.
///
/// Requires `a_k = ∫_0^1 x^k dμ(x)` for a signed measure whose total
/// variation is at most `10^{log10_variation}`; the error after `N` terms
/// is then at most `2·|μ| / (3+√8)^N`. `term(k, bits)` must return `a_k`
/// rounded to `bits` of precision.
pub(crate) fn alternating_sum(
    digits: u32,
    log10_variation: f64,
    mut term: impl FnMut(u64, u32) -> Float,
) -> Float {
    let variation = log10_variation.max(0.0);
    let n_terms = ((digits as f64 + 1.0 + 2f64.log10() + variation) / LOG10_RATE).ceil() as u64 + 1;
    let guard = 15.0 + variation + (n_terms as f64).log10();
    let bits = bits_for(digits + guard.ceil() as u32);

    // d = T_N(3), the integer ((3+√8)^N + (3−√8)^N)/2.
    let (mut prev, mut d) = (Integer::from(1), Integer::from(3));
    if n_terms == 0 {
        d = Integer::from(1);
    }
    for _ in 1..n_terms {
        let next = Integer::from(6 * &d) - &prev;
        prev = std::mem::replace(&mut d, next);
    }

    let n = Integer::from(n_terms);
    let mut b = Integer::from(-1);
    let mut c = Integer::from(-&d);
    let mut sum = Float::with_val(bits, 0);
    for k in 0..n_terms {
        c = Integer::from(&b - &c);
        sum += Float::with_val(bits, &c * &term(k, bits));
        // b_{k+1} = b_k · 2(k+N)(k−N) / ((2k+1)(k+1)), always an integer.
        let kk = Integer::from(k);
        b *= Integer::from(&kk + &n) * Integer::from(&kk - &n) * 2u32;
        let den = Integer::from(2 * k + 1) * (k + 1);
        debug_assert!(b.is_divisible(&den));
        b.div_exact_mut(&den);
    }
    sum / Float::with_val(bits, &d)
}

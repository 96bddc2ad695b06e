//! Exact decimal digit expansion of square roots.
//!
//! After the integer part, each further step scales the remainder by 100 and
//! selects one more decimal digit with the same `(20R + x) * x` test the
//! integer algorithm uses. The scaled root after k fractional digits equals
//! `floor(10^k * sqrt(N))` exactly, so every digit is final: extending an
//! expansion never revises what was already produced, and the rendered value
//! is a truncation of the true root with error below one unit in the last
//! place. No real-number arithmetic is involved anywhere; all guarantees are
//! integer inequalities on squares. This digit finality is particular to
//! square roots; for higher exponents see `frac_refine`.

use num_bigint::BigUint;

use crate::decimal::scaled_decimal_string;
use crate::isqrt::{isqrt, max_digit_sqrt};

/// A square root expanded to a fixed number of exact decimal digits.
///
/// Invariants: `radicand * 10^{2k} = scaled_root^2 + scaled_remainder` and
/// `scaled_root^2 <= radicand * 10^{2k} < (scaled_root + 1)^2`, where k is
/// `digits_requested`; the digits of `scaled_root` are the integer part
/// digits followed by `fraction_digits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalExpansion {
    radicand: BigUint,
    digits_requested: usize,
    integer_part: BigUint,
    fraction_digits: Vec<u8>,
    scaled_root: BigUint,
    scaled_remainder: BigUint,
}

impl FractionalExpansion {
    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn digits_requested(&self) -> usize {
        self.digits_requested
    }

    pub fn integer_part(&self) -> &BigUint {
        &self.integer_part
    }

    pub fn fraction_digits(&self) -> &[u8] {
        &self.fraction_digits
    }

    /// `floor(10^k * sqrt(radicand))` for k = `digits_requested`.
    pub fn scaled_root(&self) -> &BigUint {
        &self.scaled_root
    }

    pub fn scaled_remainder(&self) -> &BigUint {
        &self.scaled_remainder
    }

    /// `"<integer_part>.<fraction_digits>"`; no point when k = 0. Truncation,
    /// never rounding.
    pub fn to_decimal_string(&self) -> String {
        scaled_decimal_string(&self.scaled_root, self.digits_requested)
    }

    /// Continue the expansion by `extra` digits from the stored state.
    /// The first `digits_requested` digits of the result are identical to
    /// this expansion's; nothing is recomputed or revised.
    pub fn extend(&self, extra: usize) -> FractionalExpansion {
        let mut out = self.clone();
        expand(&mut out, extra);
        out
    }
}

impl std::fmt::Display for FractionalExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

fn expand(exp: &mut FractionalExpansion, count: usize) {
    let hundred = BigUint::from(100u32);
    for _ in 0..count {
        let scaled = &exp.scaled_remainder * &hundred;
        let (x, increment) = max_digit_sqrt(&exp.scaled_root, &scaled);
        exp.scaled_remainder = scaled - increment;
        exp.scaled_root = &exp.scaled_root * 10u32 + x;
        exp.fraction_digits.push(x);
        exp.digits_requested += 1;
        #[cfg(debug_assertions)]
        {
            use num_traits::Pow;
            let scaled_radicand = &exp.radicand
                * crate::blocks::pow10(2 * exp.digits_requested as u32);
            debug_assert_eq!(
                scaled_radicand,
                Pow::pow(&exp.scaled_root, 2u32) + &exp.scaled_remainder
            );
            debug_assert!(scaled_radicand < Pow::pow(&(&exp.scaled_root + 1u32), 2u32));
        }
    }
}

/// Expand `sqrt(n)` to exactly `k` decimal digits, all exact and final.
/// For k = 0 this is the integer square root wrapped as an expansion.
pub fn sqrt_digits(n: &BigUint, k: usize) -> FractionalExpansion {
    let base = isqrt(n);
    let mut exp = FractionalExpansion {
        radicand: n.clone(),
        digits_requested: 0,
        integer_part: base.root.clone(),
        fraction_digits: Vec::with_capacity(k),
        scaled_root: base.root,
        scaled_remainder: base.remainder,
    };
    expand(&mut exp, k);
    exp
}

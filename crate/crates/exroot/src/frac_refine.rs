//! Fractional e-th root approximation by decimal interval refinement.
//!
//! Starting from the floor root `L_0` (so `L_0^e <= N < (L_0 + 1)^e`), each
//! step narrows the containing interval by a factor of ten: the next lower
//! bound is the largest `L * 10 + m` whose e-th power still fits the scaled
//! radicand. After k steps the lower bound, read as a decimal with k
//! fractional digits, is below the true root by less than 10^-k.
//!
//! All arithmetic is scaled-integer; the invariant
//! `lower^e <= N * 10^{e j} < (lower + 1)^e` is maintained exactly. With a
//! fixed width of 10^-j per step the produced digits coincide with the
//! decimal truncation of the true root, but unlike the square-root expansion
//! no per-digit finality is claimed for e >= 3: the output contract is a
//! bounded-error approximation, and the digit-stability guarantee of
//! `frac_sqrt` remains specific to e = 2.

use num_bigint::BigUint;

use crate::binomial::IncrementContext;
use crate::blocks::pow10;
use crate::decimal::scaled_decimal_string;
use crate::eroot::eth_root;
use crate::error::Result;

/// Lower interval bound after `step` decimal refinements of the e-th root
/// of `radicand`, held as the integer `lower_scaled = L * 10^step`.
///
/// Invariant: `lower_scaled^e <= radicand * 10^{e * step} < (lower_scaled + 1)^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementState {
    radicand: BigUint,
    exponent: u32,
    step: usize,
    lower_scaled: BigUint,
}

impl RefinementState {
    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Number of fractional digits produced so far.
    pub fn step(&self) -> usize {
        self.step
    }

    /// `floor(10^step * radicand^{1/e})` as an integer.
    pub fn lower_scaled(&self) -> &BigUint {
        &self.lower_scaled
    }

    /// `"<int>.<step digits>"`; the approximation from below.
    pub fn to_decimal_string(&self) -> String {
        scaled_decimal_string(&self.lower_scaled, self.step)
    }

    /// Refine by `extra` further decimal digits, resuming from this state.
    pub fn extend(&self, extra: usize) -> (String, RefinementState) {
        let e = self.exponent;
        let scale = pow10(e);
        let mut lower = self.lower_scaled.clone();
        // remainder = N * 10^{e j} - lower^e, recovered once on resumption
        let mut remainder = &self.radicand * pow10(e * self.step as u32)
            - num_traits::Pow::pow(&lower, e);
        for _ in 0..extra {
            // Scaling by 10^e turns the remainder into the digit budget:
            // 10^e * rem = N * 10^{e(j+1)} - (10 * lower)^e.
            let budget = &remainder * &scale;
            let ctx = IncrementContext::new(e, &lower);
            let (m, increment) = ctx.max_digit(&budget);
            remainder = budget - increment;
            lower = lower * 10u32 + m;
        }
        let next = RefinementState {
            radicand: self.radicand.clone(),
            exponent: e,
            step: self.step + extra,
            lower_scaled: lower,
        };
        #[cfg(debug_assertions)]
        next.validate();
        (next.to_decimal_string(), next)
    }

    #[cfg(debug_assertions)]
    fn validate(&self) {
        use num_traits::Pow;
        let scaled_radicand = &self.radicand * pow10(self.exponent * self.step as u32);
        debug_assert!(Pow::pow(&self.lower_scaled, self.exponent) <= scaled_radicand);
        debug_assert!(Pow::pow(&(&self.lower_scaled + 1u32), self.exponent) > scaled_radicand);
    }
}

/// Approximate `n^{1/e}` from below to `k` decimal digits. The rendered
/// string is within 10^-k of the true root; the returned state verifies
/// this through its scaled-integer invariant and supports resumption.
pub fn refine_root(n: &BigUint, e: u32, k: usize) -> Result<(String, RefinementState)> {
    let base = eth_root(n, e)?;
    let initial = RefinementState {
        radicand: n.clone(),
        exponent: e,
        step: 0,
        lower_scaled: base.root,
    };
    Ok(initial.extend(k))
}

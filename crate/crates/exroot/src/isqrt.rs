//! Integer square root by the classical pair-wise digit method.
//!
//! The e = 2 case admits a simplified per-digit test: the cost of appending
//! digit `x` to partial root `R` collapses to `(20R + x) * x`, so each step
//! scales the remainder by 100, brings down the next digit pair, and takes
//! the largest digit whose cost fits. The remainder invariant
//! `N_{<=k} = R_k^2 + Delta_k` with `N_{<=k} < (R_k + 1)^2` holds after every
//! step and is asserted in debug builds.

use num_bigint::BigUint;
use num_traits::{Pow, Zero};

use crate::blocks::{self, BlockSequence};
use crate::eroot::{RootResult, TraceRow};

/// In-flight state of a digit-by-digit root computation: the partial root
/// `R_k`, its remainder `Delta_k`, and how many blocks have been consumed.
#[derive(Clone, Debug)]
pub struct RootState {
    partial_root: BigUint,
    remainder: BigUint,
    blocks_done: usize,
    exponent: u32,
}

impl RootState {
    pub(crate) fn start(exponent: u32) -> Self {
        RootState {
            partial_root: BigUint::zero(),
            remainder: BigUint::zero(),
            blocks_done: 0,
            exponent,
        }
    }

    pub fn partial_root(&self) -> &BigUint {
        &self.partial_root
    }

    pub fn remainder(&self) -> &BigUint {
        &self.remainder
    }

    pub fn blocks_done(&self) -> usize {
        self.blocks_done
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Consume one block: append digit `x`, subtract its increment from the
    /// scaled remainder.
    pub(crate) fn advance(&mut self, x: u8, increment: &BigUint, scaled_remainder: &BigUint) {
        self.partial_root = &self.partial_root * 10u32 + x;
        self.remainder = scaled_remainder - increment;
        self.blocks_done += 1;
    }

    /// Remainder invariant against the independently recomposed partial
    /// number; called after every step in debug builds.
    #[cfg(debug_assertions)]
    pub(crate) fn validate(&self, seq: &BlockSequence) {
        let processed = seq
            .partial(self.blocks_done - 1)
            .expect("blocks_done stays within the sequence");
        let root_pow = Pow::pow(&self.partial_root, self.exponent);
        debug_assert_eq!(processed, &root_pow + &self.remainder);
        debug_assert!(processed < Pow::pow(&(&self.partial_root + 1u32), self.exponent));
    }
}

/// Largest digit `x` with `(20r + x) * x <= budget`, with that product.
/// The map is strictly increasing in `x`, so a binary search suffices.
pub(crate) fn max_digit_sqrt(r: &BigUint, budget: &BigUint) -> (u8, BigUint) {
    let twenty_r = r * 20u32;
    let mut lo = 0u8;
    let mut hi = 9u8;
    let mut best = BigUint::zero();
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        let value = (&twenty_r + mid) * mid;
        if value <= *budget {
            lo = mid;
            best = value;
        } else {
            hi = mid - 1;
        }
    }
    (lo, best)
}

fn run(n: &BigUint, want_trace: bool) -> (RootResult, Vec<TraceRow>) {
    let seq = blocks::decompose(n, 2).expect("e = 2 is always a valid block size");
    let mut rows = Vec::new();
    let mut state = RootState::start(2);
    let hundred = BigUint::from(100u32);

    for step in 0..seq.len() {
        let block = seq.block(step);
        let scaled = &state.remainder * &hundred + &block;
        let (x, increment) = max_digit_sqrt(&state.partial_root, &scaled);
        state.advance(x, &increment, &scaled);
        if want_trace {
            rows.push(TraceRow {
                step,
                block,
                scaled_remainder: scaled,
                chosen_digit: x,
                increment,
                new_remainder: state.remainder.clone(),
                new_root: state.partial_root.clone(),
            });
        }
        #[cfg(debug_assertions)]
        state.validate(&seq);
    }

    let perfect = state.remainder.is_zero();
    let result = RootResult {
        radicand: n.clone(),
        exponent: 2,
        root: state.partial_root,
        remainder: state.remainder,
        perfect,
        iterations: seq.len(),
        trace: None,
    };
    (result, rows)
}

/// Floor square root of `n` with its exact remainder `n - root^2`.
pub fn isqrt(n: &BigUint) -> RootResult {
    run(n, false).0
}

/// Same as [`isqrt`], plus one trace row per digit pair consumed.
pub fn isqrt_trace(n: &BigUint) -> (RootResult, Vec<TraceRow>) {
    run(n, true)
}

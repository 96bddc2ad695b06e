//! The binomial increment kernel.
//!
//! Appending a trial digit `x` to a partial root `R` costs exactly
//! `(10R + x)^e - (10R)^e`. Expanding that difference binomially gives a
//! degree-e polynomial in `x` whose coefficients depend only on `e` and the
//! powers of `10R`, so one precomputation per digit step serves all ten
//! trial digits. Every root algorithm in the crate selects its next digit
//! through this module.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Precomputed state for evaluating the increment `(10R + x)^e - (10R)^e`
/// at a fixed partial root `R`: the binomial coefficient row `C(e,1)..C(e,e)`
/// and the powers `(10R)^1..(10R)^{e-1}`.
///
/// Immutable after construction; `phi` and `max_digit` are pure.
#[derive(Clone, Debug)]
pub struct IncrementContext {
    exponent: u32,
    /// `coefficients[j] = C(e, j + 1)` for j in `0..e`.
    coefficients: Vec<BigUint>,
    /// `scaled_root_powers[j] = (10R)^{j + 1}` for j in `0..e-1`.
    scaled_root_powers: Vec<BigUint>,
}

impl IncrementContext {
    /// Builds the evaluation context for partial root `r` and exponent `e`.
    ///
    /// Panics if `e < 2`.
    pub fn new(e: u32, r: &BigUint) -> Self {
        assert!(e >= 2, "increment context requires e >= 2, got {e}");
        let scaled = r * 10u32;
        let mut scaled_root_powers = Vec::with_capacity(e as usize - 1);
        let mut acc = BigUint::one();
        for _ in 0..e - 1 {
            acc *= &scaled;
            scaled_root_powers.push(acc.clone());
        }
        IncrementContext {
            exponent: e,
            coefficients: binomial_row(e),
            scaled_root_powers,
        }
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The increment `(10R + x)^e - (10R)^e` for a trial digit `x`,
    /// evaluated by Horner's scheme over the precomputed powers.
    ///
    /// Panics if `x > 9`.
    pub fn phi(&self, x: u8) -> BigUint {
        assert!(x <= 9, "trial digit must be in 0..=9, got {x}");
        if x == 0 {
            return BigUint::zero();
        }
        let e = self.exponent as usize;
        let big_x = BigUint::from(x);
        // Term k of the expansion is C(e,k) * (10R)^{e-k} * x^k; Horner over
        // x with inner coefficients d_k = C(e,k) * (10R)^{e-k}, k = e..1.
        let mut acc = self.coefficients[e - 1].clone(); // d_e = C(e,e) = 1
        for k in (1..e).rev() {
            acc *= &big_x;
            acc += &self.coefficients[k - 1] * &self.scaled_root_powers[e - k - 1];
        }
        acc * big_x
    }

    /// The largest digit `x` whose increment fits `budget`, with that
    /// increment. Binary search over `0..=9`, justified by the strict
    /// monotonicity of the increment in `x`; at most four evaluations.
    /// `x = 0` is always feasible since the zero digit costs nothing.
    pub fn max_digit(&self, budget: &BigUint) -> (u8, BigUint) {
        let mut lo = 0u8;
        let mut hi = 9u8;
        let mut best = BigUint::zero();
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            let value = self.phi(mid);
            if value <= *budget {
                lo = mid;
                best = value;
            } else {
                hi = mid - 1;
            }
        }
        debug_assert_eq!((lo, best.clone()), self.max_digit_descending(budget));
        (lo, best)
    }

    /// Descending linear scan with early exit; same contract as `max_digit`.
    /// Kept as the debug-mode cross-check for the binary search.
    pub fn max_digit_descending(&self, budget: &BigUint) -> (u8, BigUint) {
        for x in (1..=9u8).rev() {
            let value = self.phi(x);
            if value <= *budget {
                return (x, value);
            }
        }
        (0, BigUint::zero())
    }
}

/// Binomial coefficients `C(e,1)..C(e,e)` from one Pascal-triangle pass.
fn binomial_row(e: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()]; // row 0: [C(0,0)]
    for _ in 0..e {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row.remove(0); // drop C(e,0); callers index from C(e,1)
    row
}

/// One-shot increment `(10r + x)^e - (10r)^e`.
pub fn phi(e: u32, r: &BigUint, x: u8) -> BigUint {
    IncrementContext::new(e, r).phi(x)
}

/// One-shot maximal digit for `budget` at partial root `r`.
pub fn max_digit(e: u32, r: &BigUint, budget: &BigUint) -> (u8, BigUint) {
    IncrementContext::new(e, r).max_digit(budget)
}

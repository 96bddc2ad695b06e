//! Division-free, digit-by-digit root extraction over arbitrary-precision
//! non-negative integers.
//!
//! The toolkit computes floor e-th roots `floor(n^{1/e})` for any exponent
//! `e >= 2`, decides perfect e-th powers exactly, expands square roots to any
//! number of exact decimal digits, and approximates fractional e-th roots to
//! a guaranteed 10^-k error by interval refinement. The primary algorithms
//! use only addition, multiplication, and comparison; correctness rests on a
//! remainder invariant maintained at every digit step and checked in debug
//! builds, plus independent division-based oracles used by the test suite.
//!
//! Module map:
//! - [`blocks`]: base-10^e digit-block decomposition and partial numbers.
//! - [`binomial`]: the increment kernel `(10R + x)^e - (10R)^e` and maximal
//!   digit selection.
//! - [`isqrt`]: integer square root with the simplified `(20R + x) * x` test.
//! - [`frac_sqrt`]: exact, non-revisable decimal digits of square roots.
//! - [`eroot`]: general e-th roots, perfect-power detection and scanning.
//! - [`frac_refine`]: bounded-error fractional e-th roots for any `e >= 2`.
//! - [`oracle`]: bisection and corrected Newton references.
//! - [`bench`]: deterministic timing harness and growth-slope fitting.

pub mod bench;
pub mod binomial;
pub mod blocks;
mod decimal;
pub mod eroot;
mod error;
pub mod frac_refine;
pub mod frac_sqrt;
pub mod isqrt;
pub mod oracle;

pub use error::{Error, Result};

pub use blocks::{decompose, partial, BlockSequence};
pub use eroot::{
    eth_root, eth_root_with_trace, is_perfect_power, scan_all_perfect_powers,
    scan_perfect_power, RootResult, TraceRow,
};
pub use frac_refine::{refine_root, RefinementState};
pub use frac_sqrt::{sqrt_digits, FractionalExpansion};
pub use isqrt::{isqrt, isqrt_trace, RootState};
pub use oracle::{binary_search_root, newton_root, OracleMethod};

pub use num_bigint::BigUint;

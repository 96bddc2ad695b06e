//! Independent floor-root reference implementations.
//!
//! Bisection and a corrected integer Newton iteration serve as ground truth
//! for cross-validating the digit-by-digit algorithms. Both deliberately use
//! division, which the primary algorithms avoid, so the failure modes of the
//! two routes are unrelated.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// The available reference methods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleMethod {
    BinarySearch,
    Newton,
}

impl OracleMethod {
    pub const ALL: [OracleMethod; 2] = [OracleMethod::BinarySearch, OracleMethod::Newton];

    pub fn name(self) -> &'static str {
        match self {
            OracleMethod::BinarySearch => "binary_search",
            OracleMethod::Newton => "newton",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            OracleMethod::BinarySearch => "bisection on the root, comparing r^e against n",
            OracleMethod::Newton => "integer Newton iteration with exact final correction",
        }
    }

    pub fn floor_root(self, n: &BigUint, e: u32) -> Result<BigUint> {
        match self {
            OracleMethod::BinarySearch => binary_search_root(n, e),
            OracleMethod::Newton => newton_root(n, e),
        }
    }
}

impl std::fmt::Display for OracleMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OracleMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "binary_search" | "binary-search" | "bisect" => Ok(OracleMethod::BinarySearch),
            "newton" => Ok(OracleMethod::Newton),
            other => Err(format!("unknown oracle method: {other}")),
        }
    }
}

fn check_exponent(e: u32) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidExponent { exponent: e });
    }
    Ok(())
}

/// `floor(n^{1/e})` by bisection over `[0, 2^{ceil(bits(n)/e) + 1}]`.
pub fn binary_search_root(n: &BigUint, e: u32) -> Result<BigUint> {
    check_exponent(e)?;
    let shift = (n.bits() as usize).div_ceil(e as usize) + 1;
    let mut lo = BigUint::zero(); // lo^e <= n throughout
    let mut hi = BigUint::one() << shift; // hi^e > n throughout
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1;
        if Pow::pow(&mid, e) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// `floor(n^{1/e})` by the integer Newton iteration
/// `r <- ((e - 1) r + n / r^{e-1}) / e`, started above the root and run to
/// its fixed point, then nudged so that `r^e <= n < (r + 1)^e` holds exactly.
/// Integer division can leave the fixed point off by a step, hence the
/// final correction.
pub fn newton_root(n: &BigUint, e: u32) -> Result<BigUint> {
    check_exponent(e)?;
    if n.is_zero() {
        return Ok(BigUint::zero());
    }
    let big_e = BigUint::from(e);
    let e_minus_one = BigUint::from(e - 1);
    // 2^{ceil(bits/e)} >= n^{1/e}, so the iteration starts above the root.
    let mut r = BigUint::one() << (n.bits() as usize).div_ceil(e as usize);
    loop {
        let next = (&e_minus_one * &r + n / Pow::pow(&r, e - 1)) / &big_e;
        if next >= r {
            break;
        }
        r = next;
    }
    while Pow::pow(&r, e) > *n {
        r -= 1u32;
    }
    while Pow::pow(&(&r + 1u32), e) <= *n {
        r += 1u32;
    }
    Ok(r)
}

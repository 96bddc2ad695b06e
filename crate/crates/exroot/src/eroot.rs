//! General digit-by-digit integer e-th roots and perfect power detection.
//!
//! The input is consumed in blocks of e decimal digits; each step scales the
//! remainder by 10^e, brings down one block, and appends the largest root
//! digit whose binomial increment fits. The final remainder is zero exactly
//! when the radicand is a perfect e-th power, which makes the floor root
//! computation double as an exact perfect-power decision procedure.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::binomial::IncrementContext;
use crate::blocks::{self, pow10};
use crate::error::Result;
use crate::isqrt::RootState;

/// Outcome of a floor root extraction: `radicand = root^e + remainder` with
/// `root^e <= radicand < (root + 1)^e`, and `perfect` iff the remainder is
/// zero. `iterations` counts consumed blocks, always `ceil(d / e)` for a
/// d-digit radicand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootResult {
    pub radicand: BigUint,
    pub exponent: u32,
    pub root: BigUint,
    pub remainder: BigUint,
    pub perfect: bool,
    pub iterations: usize,
    pub trace: Option<Vec<TraceRow>>,
}

/// One digit step of a root computation, as exposed by trace mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub step: usize,
    pub block: BigUint,
    /// The scaled remainder the digit test saw (post-scaling, block added).
    pub scaled_remainder: BigUint,
    pub chosen_digit: u8,
    /// Increment of the chosen digit; equals phi(e, previous root, digit).
    pub increment: BigUint,
    pub new_remainder: BigUint,
    pub new_root: BigUint,
}

fn run(n: &BigUint, e: u32, want_trace: bool) -> Result<RootResult> {
    let seq = blocks::decompose(n, e)?;
    let scale = pow10(e);
    let mut rows = want_trace.then(Vec::new);
    let mut state = RootState::start(e);

    for step in 0..seq.len() {
        let block = seq.block(step);
        let scaled = state.remainder() * &scale + &block;
        let ctx = IncrementContext::new(e, state.partial_root());
        let (x, increment) = ctx.max_digit(&scaled);
        state.advance(x, &increment, &scaled);
        if let Some(rows) = rows.as_mut() {
            rows.push(TraceRow {
                step,
                block,
                scaled_remainder: scaled,
                chosen_digit: x,
                increment,
                new_remainder: state.remainder().clone(),
                new_root: state.partial_root().clone(),
            });
        }
        #[cfg(debug_assertions)]
        state.validate(&seq);
    }

    let perfect = state.remainder().is_zero();
    Ok(RootResult {
        radicand: n.clone(),
        exponent: e,
        root: state.partial_root().clone(),
        remainder: state.remainder().clone(),
        perfect,
        iterations: seq.len(),
        trace: rows,
    })
}

/// Floor e-th root of `n` with its exact remainder. Rejects `e < 2`.
pub fn eth_root(n: &BigUint, e: u32) -> Result<RootResult> {
    run(n, e, false)
}

/// Same as [`eth_root`] with the per-block trace recorded in the result.
pub fn eth_root_with_trace(n: &BigUint, e: u32) -> Result<RootResult> {
    run(n, e, true)
}

/// `Some(r)` iff `n = r^e` exactly.
pub fn is_perfect_power(n: &BigUint, e: u32) -> Result<Option<BigUint>> {
    let result = eth_root(n, e)?;
    Ok(result.perfect.then_some(result.root))
}

fn exponent_scan_bound(n: &BigUint) -> u32 {
    // floor(log2 n) = bits - 1 for n >= 1; larger exponents force a root
    // below 2, which only 0 and 1 admit and those are handled separately.
    u32::try_from(n.bits().saturating_sub(1)).unwrap_or(u32::MAX)
}

/// Witness `(r, e)` with `n = r^e` for the largest exponent `e` in
/// `2..=floor(log2 n)`, or `None`. Zero and one are perfect powers for every
/// exponent; they report the fixed witness `(n, 2)`.
pub fn scan_perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    if *n <= BigUint::one() {
        return Some((n.clone(), 2));
    }
    for e in (2..=exponent_scan_bound(n)).rev() {
        if let Some(root) = is_perfect_power(n, e).expect("e >= 2 by construction") {
            return Some((root, e));
        }
    }
    None
}

/// Every `(r, e)` with `n = r^e` and `e` in `2..=floor(log2 n)`, largest
/// exponent first. Zero and one report their conventional single witness.
pub fn scan_all_perfect_powers(n: &BigUint) -> Vec<(BigUint, u32)> {
    if *n <= BigUint::one() {
        return vec![(n.clone(), 2)];
    }
    (2..=exponent_scan_bound(n))
        .rev()
        .filter_map(|e| {
            is_perfect_power(n, e)
                .expect("e >= 2 by construction")
                .map(|root| (root, e))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;
    use crate::error::Error;
    use num_traits::Pow;
    use proptest::prelude::*;
    use std::str::FromStr;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn perfect_cube() {
        let r = eth_root(&big(125), 3).unwrap();
        assert_eq!(r.root, big(5));
        assert_eq!(r.remainder, BigUint::zero());
        assert!(r.perfect);
        assert_eq!(r.iterations, 1);
    }

    #[test]
    fn non_perfect_cube() {
        let r = eth_root(&big(126), 3).unwrap();
        assert_eq!(r.root, big(5));
        assert_eq!(r.remainder, big(1));
        assert!(!r.perfect);
    }

    #[test]
    fn perfect_fifth_power() {
        let r = eth_root(&big(3_200_000), 5).unwrap();
        assert_eq!(r.root, big(20));
        assert!(r.perfect);
        assert_eq!(r.iterations, 2);
    }

    #[test]
    fn fifth_power_trace_rows() {
        let r = eth_root_with_trace(&big(3_200_000), 5).unwrap();
        let rows = r.trace.as_ref().unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(
            (rows[0].block.clone(), rows[0].scaled_remainder.clone(), rows[0].chosen_digit,
             rows[0].increment.clone(), rows[0].new_remainder.clone(), rows[0].new_root.clone()),
            (big(32), big(32), 2, big(32), big(0), big(2))
        );
        assert_eq!(
            (rows[1].block.clone(), rows[1].scaled_remainder.clone(), rows[1].chosen_digit,
             rows[1].new_root.clone()),
            (big(0), big(0), 0, big(20))
        );
    }

    #[test]
    fn seventh_root_of_two() {
        let r = eth_root(&big(2), 7).unwrap();
        assert_eq!(r.root, big(1));
        assert_eq!(r.remainder, big(1));
        assert!(!r.perfect);
        assert_eq!(r.iterations, 1);
    }

    #[test]
    fn rejects_exponent_below_two() {
        assert_eq!(eth_root(&big(10), 1), Err(Error::InvalidExponent { exponent: 1 }));
        assert_eq!(eth_root(&big(10), 0), Err(Error::InvalidExponent { exponent: 0 }));
    }

    #[test]
    fn perfect_power_witnesses() {
        assert_eq!(is_perfect_power(&big(125), 3).unwrap(), Some(big(5)));
        assert_eq!(is_perfect_power(&big(127), 2).unwrap(), None);
        for e in [2, 3, 7, 20] {
            assert_eq!(is_perfect_power(&big(1), e).unwrap(), Some(big(1)));
        }
    }

    #[test]
    fn scan_prefers_largest_exponent() {
        assert_eq!(scan_perfect_power(&big(64)), Some((big(2), 6)));
        assert_eq!(scan_perfect_power(&big(7)), None);
        assert_eq!(scan_perfect_power(&big(1)), Some((big(1), 2)));
        assert_eq!(scan_perfect_power(&big(0)), Some((big(0), 2)));
        assert_eq!(scan_perfect_power(&big(2)), None);
        assert_eq!(scan_perfect_power(&big(3)), None);
    }

    #[test]
    fn scan_all_lists_every_witness() {
        assert_eq!(
            scan_all_perfect_powers(&big(64)),
            vec![(big(2), 6), (big(4), 3), (big(8), 2)]
        );
        assert_eq!(scan_all_perfect_powers(&big(0)), vec![(big(0), 2)]);
    }

    fn radicand() -> impl Strategy<Value = BigUint> {
        "[1-9][0-9]{0,40}".prop_map(|s| BigUint::from_str(&s).unwrap())
    }

    proptest! {
        #[test]
        fn floor_contract(n in radicand(), e in 2u32..=12) {
            let r = eth_root(&n, e).unwrap();
            prop_assert!(Pow::pow(&r.root, e) <= n);
            prop_assert!(Pow::pow(&(&r.root + 1u32), e) > n);
            prop_assert_eq!(&n, &(Pow::pow(&r.root, e) + &r.remainder));
            prop_assert_eq!(r.perfect, r.remainder.is_zero());
        }

        #[test]
        fn iteration_count_is_block_count(n in radicand(), e in 2u32..=12) {
            let r = eth_root(&n, e).unwrap();
            let d = n.to_string().len();
            prop_assert_eq!(r.iterations, d.div_ceil(e as usize));
        }

        #[test]
        fn single_block_when_exponent_exceeds_digits(n in radicand()) {
            let e = n.to_string().len() as u32 + 1;
            let r = eth_root(&n, e.max(2)).unwrap();
            prop_assert_eq!(r.iterations, 1);
        }

        #[test]
        fn trace_digits_are_maximal(n in radicand(), e in 2u32..=8) {
            let r = eth_root_with_trace(&n, e).unwrap();
            for row in r.trace.as_ref().unwrap() {
                prop_assert_eq!(&row.new_remainder, &(&row.scaled_remainder - &row.increment));
                let prev_root = (&row.new_root - row.chosen_digit) / 10u32;
                prop_assert_eq!(&row.increment, &binomial::phi(e, &prev_root, row.chosen_digit));
                if row.chosen_digit < 9 {
                    prop_assert!(binomial::phi(e, &prev_root, row.chosen_digit + 1) > row.scaled_remainder);
                }
            }
        }

        #[test]
        fn scan_matches_enumeration_on_small_inputs(n in 0u64..4096) {
            let n = big(n);
            let scanned = scan_perfect_power(&n);
            // Enumeration oracle: largest e admitting an exact root.
            let expected = if n <= big(1) {
                Some((n.clone(), 2))
            } else {
                let mut found = None;
                let max_e = u32::try_from(n.bits() - 1).unwrap();
                'outer: for e in (2..=max_e).rev() {
                    let mut r = BigUint::one();
                    loop {
                        let p = Pow::pow(&r, e);
                        if p == n {
                            found = Some((r, e));
                            break 'outer;
                        }
                        if p > n {
                            break;
                        }
                        r += 1u32;
                    }
                }
                found
            };
            prop_assert_eq!(scanned, expected);
        }
    }
}

//! Regression fixtures: complete step-by-step tables for small worked
//! examples, frozen from hand-executed runs of the algorithms.

use exroot::blocks::pow10;
use exroot::{eth_root, eth_root_with_trace, isqrt_trace, refine_root, sqrt_digits, BigUint, TraceRow};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

type RowTuple = (usize, u64, u64, u8, u64, u64, u64);

fn as_tuples(rows: &[TraceRow]) -> Vec<RowTuple> {
    rows.iter()
        .map(|r| {
            (
                r.step,
                u64::try_from(&r.block).unwrap(),
                u64::try_from(&r.scaled_remainder).unwrap(),
                r.chosen_digit,
                u64::try_from(&r.increment).unwrap(),
                u64::try_from(&r.new_remainder).unwrap(),
                u64::try_from(&r.new_root).unwrap(),
            )
        })
        .collect()
}

#[test]
fn square_root_of_12321_full_table() {
    let (result, rows) = isqrt_trace(&big(12321));
    assert_eq!(result.root, big(111));
    assert!(result.perfect);
    assert_eq!(
        as_tuples(&rows),
        vec![
            (0, 1, 1, 1, 1, 0, 1),
            (1, 23, 23, 1, 21, 2, 11),
            (2, 21, 221, 1, 221, 0, 111),
        ]
    );
}

#[test]
fn sqrt_two_expansion_and_scaled_run_coincide() {
    let expansion = sqrt_digits(&big(2), 10);
    assert_eq!(expansion.to_decimal_string(), "1.4142135623");

    // One digit-by-digit run over 2 * 10^20 produces the same digits, one
    // per block; fractional steps appear as zero blocks.
    let (result, rows) = isqrt_trace(&(big(2) * pow10(20)));
    assert_eq!(result.root.to_string(), "14142135623");
    let digits: Vec<u8> = rows.iter().map(|r| r.chosen_digit).collect();
    assert_eq!(digits, vec![1, 4, 1, 4, 2, 1, 3, 5, 6, 2, 3]);

    // First fractional step: remainder 1 scales to 100, digit 4 costs 96.
    assert_eq!(
        as_tuples(&rows[..2]),
        vec![(0, 2, 2, 1, 1, 1, 1), (1, 0, 100, 4, 96, 4, 14)]
    );
}

#[test]
fn cube_root_of_125_and_126() {
    let perfect = eth_root_with_trace(&big(125), 3).unwrap();
    assert_eq!(as_tuples(perfect.trace.as_ref().unwrap()), vec![(0, 125, 125, 5, 125, 0, 5)]);
    assert!(perfect.perfect);

    let off_by_one = eth_root_with_trace(&big(126), 3).unwrap();
    assert_eq!(as_tuples(off_by_one.trace.as_ref().unwrap()), vec![(0, 126, 126, 5, 125, 1, 5)]);
    assert!(!off_by_one.perfect);
}

#[test]
fn fifth_root_of_3200000_full_table() {
    let result = eth_root_with_trace(&big(3_200_000), 5).unwrap();
    assert_eq!(result.root, big(20));
    assert!(result.perfect);
    assert_eq!(
        as_tuples(result.trace.as_ref().unwrap()),
        vec![(0, 32, 32, 2, 32, 0, 2), (1, 0, 0, 0, 0, 0, 20)]
    );

    let off = eth_root(&big(3_200_001), 5).unwrap();
    assert_eq!(off.root, big(20));
    assert_eq!(off.remainder, big(1));
    assert!(!off.perfect);
}

#[test]
fn seventh_root_refinement_digit_sequence() {
    let expected_digits = [1u32, 0, 4, 0, 8, 9, 5, 1, 3, 6];
    let mut state = refine_root(&big(2), 7, 0).unwrap().1;
    assert_eq!(state.lower_scaled(), &big(1));
    for digit in expected_digits {
        let (_, next) = state.extend(1);
        assert_eq!(next.lower_scaled() % 10u32, BigUint::from(digit));
        state = next;
    }
    assert_eq!(state.to_decimal_string(), "1.1040895136");
}

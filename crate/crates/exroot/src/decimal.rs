//! Decimal-string rendering for scaled integers.

use num_bigint::BigUint;

/// Render `value / 10^fraction_digits` as `"<int>.<fraction>"` with exactly
/// `fraction_digits` digits after the point (none, and no point, for zero).
/// This is a truncation rendering: the digits are the digits of `value`.
pub(crate) fn scaled_decimal_string(value: &BigUint, fraction_digits: usize) -> String {
    let mut s = value.to_string();
    if fraction_digits == 0 {
        return s;
    }
    if s.len() <= fraction_digits {
        let mut padded = "0".repeat(fraction_digits + 1 - s.len());
        padded.push_str(&s);
        s = padded;
    }
    s.insert(s.len() - fraction_digits, '.');
    s
}

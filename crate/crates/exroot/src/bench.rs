//! Timing harness comparing the digit-by-digit extractor against the
//! division-based reference methods across input sizes.
//!
//! Inputs are generated deterministically from a seed, identically for every
//! method sharing an (exponent, size) cell, so root checksums must agree
//! across methods. Timing runs are strictly sequential; medians over the
//! repetitions are recorded rather than means. Growth slopes fitted from the
//! records are reported as data, never asserted against a theory constant:
//! the wall-clock exponent depends on the multiplication backend.

use std::time::Instant;

use num_bigint::BigUint;

use crate::blocks::pow10;
use crate::eroot::eth_root;
use crate::error::{Error, Result};
use crate::frac_refine::refine_root;
use crate::frac_sqrt::sqrt_digits;
use crate::oracle::OracleMethod;

/// A timed method: one of the reference oracles or the digit-by-digit route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BenchMethod {
    DigitByDigit,
    BinarySearch,
    Newton,
}

impl BenchMethod {
    pub const ALL: [BenchMethod; 3] =
        [BenchMethod::DigitByDigit, BenchMethod::BinarySearch, BenchMethod::Newton];

    pub fn name(self) -> &'static str {
        match self {
            BenchMethod::DigitByDigit => "digit_by_digit",
            BenchMethod::BinarySearch => "binary_search",
            BenchMethod::Newton => "newton",
        }
    }
}

impl From<OracleMethod> for BenchMethod {
    fn from(m: OracleMethod) -> Self {
        match m {
            OracleMethod::BinarySearch => BenchMethod::BinarySearch,
            OracleMethod::Newton => BenchMethod::Newton,
        }
    }
}

impl std::fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BenchMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "digit_by_digit" | "digit-by-digit" | "digit" => Ok(BenchMethod::DigitByDigit),
            "binary_search" | "binary-search" | "bisect" => Ok(BenchMethod::BinarySearch),
            "newton" => Ok(BenchMethod::Newton),
            other => Err(format!("unknown bench method: {other}")),
        }
    }
}

/// One cell of a benchmark run: compute the floor e-th root of a
/// `digit_count`-digit radicand, extended by `fractional_digits` decimal
/// digits when nonzero.
#[derive(Clone, Copy, Debug)]
pub struct BenchCase {
    pub method: BenchMethod,
    pub exponent: u32,
    pub digit_count: usize,
    pub fractional_digits: usize,
}

/// Median timing for one case, with a digest of the computed root so that
/// agreement across methods can be checked without storing huge roots.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub method: BenchMethod,
    pub exponent: u32,
    pub digit_count: usize,
    pub fractional_digits: usize,
    pub median_ns: u128,
    pub repetitions: usize,
    pub checksum: u64,
    /// Block steps of the integer phase; recorded for the digit-by-digit
    /// method only, always `ceil(digit_count / exponent)`.
    pub iterations: Option<usize>,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic uniformly random number with exactly `digit_count` decimal
/// digits (leading digit nonzero). The same seed always yields the same
/// number, on every platform.
pub fn random_radicand(seed: u64, digit_count: usize) -> BigUint {
    assert!(digit_count >= 1, "a radicand needs at least one digit");
    let mut state = seed;
    let mut digits = String::with_capacity(digit_count);
    digits.push(char::from(b'1' + (splitmix64(&mut state) % 9) as u8));
    for _ in 1..digit_count {
        digits.push(char::from(b'0' + (splitmix64(&mut state) % 10) as u8));
    }
    digits.parse().expect("generated digits parse")
}

fn cell_seed(seed: u64, exponent: u32, digit_count: usize) -> u64 {
    let mut state = seed
        ^ (exponent as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)
        ^ (digit_count as u64).wrapping_mul(0x8CB9_2BA7_2F3D_8DD7);
    splitmix64(&mut state)
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01B3);
    }
    hash
}

/// The root each method must produce for the case: the floor e-th root of
/// the radicand scaled by 10^{e * k}.
fn compute_root(case: &BenchCase, radicand: &BigUint, scaled: &BigUint) -> Result<BigUint> {
    let k = case.fractional_digits;
    match case.method {
        BenchMethod::DigitByDigit => {
            if k == 0 {
                Ok(eth_root(radicand, case.exponent)?.root)
            } else if case.exponent == 2 {
                Ok(sqrt_digits(radicand, k).scaled_root().clone())
            } else {
                Ok(refine_root(radicand, case.exponent, k)?.1.lower_scaled().clone())
            }
        }
        BenchMethod::BinarySearch => OracleMethod::BinarySearch.floor_root(scaled, case.exponent),
        BenchMethod::Newton => OracleMethod::Newton.floor_root(scaled, case.exponent),
    }
}

/// Time every case `reps` times on deterministic inputs and report medians.
/// Cases sharing (exponent, digit_count) get the identical radicand no
/// matter the method, so their checksums must match.
pub fn run_bench(cases: &[BenchCase], seed: u64, reps: usize) -> Result<Vec<BenchRecord>> {
    if reps < 1 {
        return Err(Error::InvalidBenchCase { reason: "repetitions must be at least 1".into() });
    }
    let mut records = Vec::with_capacity(cases.len());
    for case in cases {
        if case.exponent < 2 {
            return Err(Error::InvalidExponent { exponent: case.exponent });
        }
        if case.digit_count < 1 {
            return Err(Error::InvalidBenchCase {
                reason: format!("digit_count must be at least 1, got {}", case.digit_count),
            });
        }
        let radicand = random_radicand(cell_seed(seed, case.exponent, case.digit_count), case.digit_count);
        let scaled = &radicand * pow10(case.exponent * case.fractional_digits as u32);

        let mut timings = Vec::with_capacity(reps);
        let mut root = None;
        for _ in 0..reps {
            let started = Instant::now();
            let r = compute_root(case, &radicand, &scaled)?;
            timings.push(started.elapsed().as_nanos());
            root = Some(r);
        }
        timings.sort_unstable();
        let root = root.expect("reps >= 1");

        let iterations = match case.method {
            BenchMethod::DigitByDigit => Some(eth_root(&radicand, case.exponent)?.iterations),
            _ => None,
        };

        records.push(BenchRecord {
            method: case.method,
            exponent: case.exponent,
            digit_count: case.digit_count,
            fractional_digits: case.fractional_digits,
            median_ns: timings[timings.len() / 2],
            repetitions: reps,
            checksum: fnv1a64(root.to_string().as_bytes()),
            iterations,
        });
    }
    Ok(records)
}

/// Render records as CSV with the fixed column set
/// `method,e,L,k,median_ns,reps,checksum`.
pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("method,e,L,k,median_ns,reps,checksum\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{:016x}\n",
            r.method, r.exponent, r.digit_count, r.fractional_digits,
            r.median_ns, r.repetitions, r.checksum,
        ));
    }
    out
}

/// Log-log slope of median time against input size for one
/// (method, exponent, fractional_digits) group.
#[derive(Clone, Debug)]
pub struct GrowthFit {
    pub method: BenchMethod,
    pub exponent: u32,
    pub fractional_digits: usize,
    pub points: usize,
    /// Slope of ln(median_ns) against ln(L): the empirical growth exponent.
    pub slope: f64,
    pub intercept: f64,
    /// Root mean square residual in log space.
    pub log_rmse: f64,
    /// Set when the fit is degenerate (no time variance across sizes) or the
    /// residuals are large; such a slope should not be read as a growth law.
    pub high_residual: bool,
}

const HIGH_RESIDUAL_LOG_RMSE: f64 = 0.35;

struct FitGroup {
    key: (BenchMethod, u32, usize),
    points: Vec<(f64, f64)>,
    sizes: Vec<usize>,
}

/// Fit growth slopes per (method, exponent, fractional_digits) group.
/// Every group must contribute at least three distinct sizes.
pub fn fit_growth(records: &[BenchRecord]) -> Result<Vec<GrowthFit>> {
    let mut groups: Vec<FitGroup> = Vec::new();
    for r in records {
        let key = (r.method, r.exponent, r.fractional_digits);
        let point = ((r.digit_count as f64).ln(), (r.median_ns.max(1) as f64).ln());
        match groups.iter_mut().find(|g| g.key == key) {
            Some(group) => {
                group.points.push(point);
                if !group.sizes.contains(&r.digit_count) {
                    group.sizes.push(r.digit_count);
                }
            }
            None => groups.push(FitGroup { key, points: vec![point], sizes: vec![r.digit_count] }),
        }
    }

    let mut fits = Vec::with_capacity(groups.len());
    for FitGroup { key: (method, exponent, fractional_digits), points, sizes } in groups {
        if sizes.len() < 3 {
            return Err(Error::InsufficientData {
                group: format!("{method} e={exponent} k={fractional_digits}"),
                distinct_sizes: sizes.len(),
            });
        }
        let n = points.len() as f64;
        let mean_x = points.iter().map(|(x, _)| x).sum::<f64>() / n;
        let mean_y = points.iter().map(|(_, y)| y).sum::<f64>() / n;
        let sxx: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
        let sxy: f64 = points.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
        let sst: f64 = points.iter().map(|(_, y)| (y - mean_y).powi(2)).sum();
        let slope = sxy / sxx;
        let intercept = mean_y - slope * mean_x;
        let ssr: f64 = points
            .iter()
            .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
            .sum();
        let log_rmse = (ssr / n).sqrt();
        fits.push(GrowthFit {
            method,
            exponent,
            fractional_digits,
            points: points.len(),
            slope,
            intercept,
            log_rmse,
            high_residual: sst == 0.0 || log_rmse > HIGH_RESIDUAL_LOG_RMSE,
        });
    }
    Ok(fits)
}

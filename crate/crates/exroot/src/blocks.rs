//! Base-10^e digit-block decomposition.
//!
//! Every root algorithm in this crate consumes its input one block of `e`
//! decimal digits at a time, most significant block first. This module owns
//! that decomposition plus the partial numbers (the integer formed by the
//! highest `k + 1` blocks) used to state and check the remainder invariant.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Largest exponent whose blocks still fit in a `u64` (10^18 < 2^63).
const SMALL_BLOCK_MAX_EXPONENT: u32 = 18;

#[derive(Clone, Debug)]
enum BlockStore {
    Small(Vec<u64>),
    Big(Vec<BigUint>),
}

/// A non-negative integer split into base-10^e blocks, most significant first.
///
/// Invariants: every block is in `0..10^e`, the leading block is nonzero
/// unless the source was zero, and recomposing the blocks restores the
/// source exactly. Zero decomposes to a single zero block.
#[derive(Clone, Debug)]
pub struct BlockSequence {
    exponent: u32,
    store: BlockStore,
    source_digit_count: usize,
}

impl BlockSequence {
    /// Block size, i.e. the exponent e the sequence was built for.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Number of decimal digits of the source integer (1 for zero).
    pub fn source_digit_count(&self) -> usize {
        self.source_digit_count
    }

    /// Number of blocks; always `ceil(source_digit_count / e)`, at least 1.
    pub fn len(&self) -> usize {
        match &self.store {
            BlockStore::Small(v) => v.len(),
            BlockStore::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false // a sequence always holds at least one block
    }

    /// The `j`-th block counting from the most significant (j = 0).
    pub fn block(&self, j: usize) -> BigUint {
        match &self.store {
            BlockStore::Small(v) => BigUint::from(v[j]),
            BlockStore::Big(v) => v[j].clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = BigUint> + '_ {
        (0..self.len()).map(move |j| self.block(j))
    }

    /// Recompose the source integer by Horner accumulation over the blocks.
    pub fn recompose(&self) -> BigUint {
        self.partial(self.len() - 1)
            .expect("last block index is always valid")
    }

    /// The integer formed by the highest `k + 1` blocks.
    pub(crate) fn partial(&self, k: usize) -> Result<BigUint> {
        let count = self.len();
        if k >= count {
            return Err(Error::BlockIndexOutOfRange { index: k, block_count: count });
        }
        let scale = pow10(self.exponent);
        let mut acc = BigUint::zero();
        for j in 0..=k {
            acc = acc * &scale + self.block(j);
        }
        Ok(acc)
    }
}

/// `10^e` as a big integer; the per-block scaling factor.
pub fn pow10(e: u32) -> BigUint {
    BigUint::from(10u32).pow(e)
}

/// Split `n` into base-10^e blocks by slicing its decimal string, padded on
/// the left with zeros to a multiple of `e`. Rejects exponents below 2.
pub fn decompose(n: &BigUint, e: u32) -> Result<BlockSequence> {
    if e < 2 {
        return Err(Error::InvalidExponent { exponent: e });
    }
    let digits = n.to_string();
    let source_digit_count = digits.len();
    let e_usize = e as usize;
    let padded_len = source_digit_count.div_ceil(e_usize) * e_usize;
    let pad = padded_len - source_digit_count;

    let mut padded = String::with_capacity(padded_len);
    for _ in 0..pad {
        padded.push('0');
    }
    padded.push_str(&digits);

    let chunks = padded.as_bytes().chunks(e_usize);
    let store = if e <= SMALL_BLOCK_MAX_EXPONENT {
        BlockStore::Small(
            chunks
                .map(|c| {
                    std::str::from_utf8(c)
                        .expect("decimal digits are ascii")
                        .parse::<u64>()
                        .expect("a block of at most 18 digits fits u64")
                })
                .collect(),
        )
    } else {
        BlockStore::Big(
            chunks
                .map(|c| {
                    std::str::from_utf8(c)
                        .expect("decimal digits are ascii")
                        .parse::<BigUint>()
                        .expect("decimal block parses")
                })
                .collect(),
        )
    };

    Ok(BlockSequence { exponent: e, store, source_digit_count })
}

/// The integer formed by the highest `k + 1` blocks of `n` in base 10^e,
/// equal to `floor(n / 10^{e(m-k)})` where `m + 1` is the block count.
pub fn partial(n: &BigUint, e: u32, k: usize) -> Result<BigUint> {
    decompose(n, e)?.partial(k)
}

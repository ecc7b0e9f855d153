//! Reflected Gray codes in bases 2 and 3, their rank/unrank maps, and the
//! alternating-generator walk that reproduces them.
//!
//! Row `i` of the base-`b` code table is a length-`n` word whose first
//! letter changes fastest. The table for length `n + 1` stacks `b` copies
//! of the length-`n` table, flipping every odd-indexed copy upside down and
//! appending the copy index as the new last letter. Rows therefore extend
//! by zeros, so every row has a well-defined infinite continuation and a
//! stable rank.

use crate::automata::{catalog, StateId, Transducer};
use crate::error::{Error, Result};
use crate::words::{Sign, Word};

/// Largest word length whose rank still fits in 64 bits for base 3.
const MAX_RANK_LEN: usize = 40;

fn checked_pow(base: u64, exp: usize) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow)?;
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// Row `i` of the length-`n` reflected code table over `base` letters.
pub fn gray_row(base: u8, i: u64, n: usize) -> Result<Word> {
    let bound = checked_pow(u64::from(base), n)?;
    if i >= bound {
        return Err(Error::IndexOutOfRange { index: i, bound });
    }
    let mut letters = vec![0u8; n];
    let mut i = i;
    for pos in (0..n).rev() {
        let place = checked_pow(u64::from(base), pos)?;
        let block = i / place;
        let rest = i % place;
        letters[pos] = block as u8;
        // Odd-indexed blocks hold the flipped copy of the smaller table.
        i = if block % 2 == 1 {
            place - 1 - rest
        } else {
            rest
        };
    }
    Word::new(letters, base)
}

/// Rank of a word among the rows of its length's code table; inverse of
/// [`gray_row`].
pub fn gray_rank(w: &Word) -> u64 {
    assert!(w.len() <= MAX_RANK_LEN, "rank exceeds 64 bits");
    let base = u64::from(w.alphabet_size());
    let mut rank: u64 = 0;
    let mut place: u64 = 1;
    for (pos, &letter) in w.letters().iter().enumerate() {
        let block = u64::from(letter);
        let inner = if block % 2 == 1 {
            place - 1 - rank
        } else {
            rank
        };
        rank = block * place + inner;
        if pos + 1 < w.len() {
            place *= base;
        }
    }
    rank
}

/// Integer readout of row `i`: the row (at its minimal length) read as an
/// LSD-first numeral. Independent of the length since rows extend by zeros.
pub fn gray_readout(base: u8, i: u64) -> Result<u64> {
    let mut n = 0usize;
    while checked_pow(u64::from(base), n)? <= i {
        n += 1;
    }
    let row = gray_row(base, i, n)?;
    crate::words::from_digits_lsd(&row)
}

/// Word reached from the all-zero word of length `n` by `i` alternating
/// applications of two machine states, `first` at odd steps and `second`
/// at even steps.
pub fn alternation_row(
    t: &Transducer,
    first: StateId,
    second: StateId,
    i: u64,
    n: usize,
) -> Result<Word> {
    let bound = checked_pow(u64::from(t.k_in()), n)?;
    if i >= bound {
        return Err(Error::IndexOutOfRange { index: i, bound });
    }
    let mut w = Word::empty(t.k_in())?.padded_to(n)?;
    for step in 1..=i {
        let gen = if step % 2 == 1 { first } else { second };
        w = t.apply(gen, &w)?;
    }
    Ok(w)
}

/// One application of the swap `b` (first 0-or-2 letter toggled) to a code
/// row, measured in table positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrayStep {
    /// Plus when the image row sits below the source row.
    pub direction: Sign,
    /// Distance `|i - j|` between the two row indices; at least 1.
    pub index_distance: u64,
}

/// Applies the swap machine state `b` to ternary row `i` and locates the
/// image row.
///
/// The row is taken at the smallest length making the swap visible, i.e.
/// long enough to contain a 0 or 2 in the row's infinite continuation; one
/// extra zero-extension always suffices for all-ones rows.
pub fn b_step(i: u64) -> Result<GrayStep> {
    let over_budget = |i: u64| Error::ResourceLimit {
        msg: format!("swap step at index {i} needs a row longer than {MAX_RANK_LEN}"),
    };
    let mut n = 1usize;
    while checked_pow(3, n).map_err(|_| over_budget(i))? <= i {
        n += 1;
        if n > MAX_RANK_LEN {
            return Err(over_budget(i));
        }
    }
    let mut row = gray_row(3, i, n)?;
    while row.letters().iter().all(|&l| l == 1) {
        n += 1;
        if n > MAX_RANK_LEN {
            return Err(over_budget(i));
        }
        row = gray_row(3, i, n)?;
    }
    let ah = catalog::ah();
    let b = ah.state("b").expect("catalog state");
    let image = ah.apply(b, &row)?;
    let j = gray_rank(&image);
    debug_assert_ne!(i, j);
    Ok(GrayStep {
        direction: if j > i { Sign::Plus } else { Sign::Minus },
        index_distance: i.abs_diff(j),
    })
}

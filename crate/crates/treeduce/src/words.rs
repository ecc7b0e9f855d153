//! Finite words over a small alphabet and least-significant-digit-first
//! numeral conversions.
//!
//! A [`Word`] is the universal carrier of the crate: machine inputs and
//! outputs, tree vertices, disk configurations, and numerals are all words.
//! Numerals are written least significant digit first, so the empty word
//! denotes 0 and trailing zeros are semantically irrelevant padding.

use std::fmt;

use crate::error::{Error, Result};

/// A finite word over the alphabet `{0, ..., k-1}` with `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    k: u8,
}

impl Word {
    /// Builds a word, checking that every letter is below `k` and `k >= 2`.
    pub fn new(letters: Vec<u8>, k: u8) -> Result<Self> {
        if k < 2 {
            return Err(Error::LetterOutOfRange { letter: 0, k });
        }
        if let Some(&bad) = letters.iter().find(|&&l| l >= k) {
            return Err(Error::LetterOutOfRange { letter: bad, k });
        }
        Ok(Word { letters, k })
    }

    /// The empty word over the given alphabet.
    pub fn empty(k: u8) -> Result<Self> {
        Word::new(Vec::new(), k)
    }

    /// Parses a digit string, leftmost character first.
    pub fn parse(text: &str, k: u8) -> Result<Self> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            let d = c
                .to_digit(10)
                .ok_or(Error::LetterOutOfRange { letter: u8::MAX, k })?;
            letters.push(d as u8);
        }
        Word::new(letters, k)
    }

    pub fn alphabet_size(&self) -> u8 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// The same letters in reverse order; an involution.
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters, k: self.k }
    }

    /// Extends the word with zeros up to length `n`.
    pub fn padded_to(&self, n: usize) -> Result<Word> {
        if self.letters.len() > n {
            return Err(Error::LengthError {
                len: self.letters.len(),
                target: n,
            });
        }
        let mut letters = self.letters.clone();
        letters.resize(n, 0);
        Ok(Word { letters, k: self.k })
    }

    /// Concatenation; both words must share an alphabet.
    pub fn concat(&self, tail: &Word) -> Result<Word> {
        if self.k != tail.k {
            return Err(Error::AlphabetMismatch {
                msg: format!(
                    "cannot concatenate words over k={} and k={}",
                    self.k, tail.k
                ),
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&tail.letters);
        Ok(Word { letters, k: self.k })
    }

    /// True when `self` is a prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.len() >= self.letters.len()
            && other.letters[..self.letters.len()] == self.letters[..]
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A sign value, the output alphabet of the final-state machines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// A non-negative integer together with an LSD-first digit word denoting it.
///
/// The digit word may carry trailing zeros; the minimal numeral of 0 is the
/// empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numeral {
    digits: Word,
    value: u64,
}

impl Numeral {
    /// The minimal-length numeral of `value` in base `k`.
    pub fn from_value(value: u64, k: u8) -> Numeral {
        Numeral {
            digits: to_digits_lsd(value, k),
            value,
        }
    }

    /// Reads the value off an arbitrary (possibly padded) digit word.
    pub fn from_digits(digits: Word) -> Result<Numeral> {
        let value = from_digits_lsd(&digits)?;
        Ok(Numeral { digits, value })
    }

    pub fn digits(&self) -> &Word {
        &self.digits
    }

    pub fn value(&self) -> u64 {
        self.value
    }
}

/// Minimal-length base-`k` digits of `n`, least significant first. Empty for 0.
pub fn to_digits_lsd(n: u64, k: u8) -> Word {
    assert!(k >= 2, "alphabet size must be at least 2");
    let mut letters = Vec::new();
    let mut n = n;
    while n > 0 {
        letters.push((n % u64::from(k)) as u8);
        n /= u64::from(k);
    }
    Word { letters, k }
}

/// Value of an LSD-first digit word in its own base.
///
/// Overflow is reported only when a nonzero digit sits beyond the 64-bit
/// range, so zero padding of any length stays value-preserving.
pub fn from_digits_lsd(w: &Word) -> Result<u64> {
    let k = u64::from(w.alphabet_size());
    let mut value: u64 = 0;
    let mut place: Option<u64> = Some(1);
    for (j, &d) in w.letters().iter().enumerate() {
        if d > 0 {
            let p = place.ok_or(Error::Overflow)?;
            let term = p.checked_mul(u64::from(d)).ok_or(Error::Overflow)?;
            value = value.checked_add(term).ok_or(Error::Overflow)?;
        }
        if j + 1 < w.len() {
            place = place.and_then(|p| p.checked_mul(k));
        }
    }
    Ok(value)
}

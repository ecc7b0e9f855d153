//! The three-peg Hanoi Towers Problem on the ternary tree.
//!
//! A configuration of `n` disks is a ternary word: letter `i` (counting
//! from 1, smallest disk first) is the peg holding disk `i`. The swap
//! states of the catalog machine `AH` realize legal moves, the level
//! graphs live in [`graph`], the reflected Gray codes and the swap-step
//! analysis in [`gray`], and this module generates and recognizes the
//! configurations lying on the geodesics between the single-peg corners.
//!
//! Orientation bookkeeping: the geodesic machines `OH` and `OHprime`
//! consume numerals most significant digit first and emit configuration
//! words last disk first, so this module reverses words on the way in and
//! out; the machine runs themselves stay first-letter-first.

pub mod graph;
pub mod gray;

pub use graph::{
    bfs_distance, schreier_graph, schreier_graph_with_limit, Generator, SchreierGraph,
};
pub use gray::{alternation_row, b_step, gray_rank, gray_readout, gray_row, GrayStep};

use std::fmt;

use crate::automata::{catalog, PartialRun};
use crate::error::{Error, Result};
use crate::words::{from_digits_lsd, to_digits_lsd, Word};

/// A valid disk placement: disk `i` sits on peg `word[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration(Word);

impl Configuration {
    pub fn new(word: Word) -> Result<Self> {
        if word.alphabet_size() != 3 {
            return Err(Error::LetterOutOfRange {
                letter: word.alphabet_size(),
                k: 3,
            });
        }
        Ok(Configuration(word))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Configuration(Word::parse(text, 3)?))
    }

    /// All `disks` disks on one peg.
    pub fn uniform(peg: u8, disks: usize) -> Result<Self> {
        check_peg(peg)?;
        Configuration::new(Word::new(vec![peg; disks], 3)?)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn disks(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_peg(peg: u8) -> Result<()> {
    if peg > 2 {
        return Err(Error::InvalidPeg { from: peg, to: peg });
    }
    Ok(())
}

fn check_peg_pair(from: u8, to: u8) -> Result<()> {
    if from > 2 || to > 2 || from == to {
        return Err(Error::InvalidPeg { from, to });
    }
    Ok(())
}

/// Name of the swap state moving between two pegs.
fn swap_state_name(i: u8, j: u8) -> &'static str {
    match (i.min(j), i.max(j)) {
        (0, 1) => "a",
        (0, 2) => "b",
        (1, 2) => "c",
        _ => unreachable!("peg pair validated"),
    }
}

/// Moves the top disk between pegs `i` and `j` (in whichever direction is
/// legal). A move with no movable disk leaves the configuration unchanged,
/// matching the loops of the level graphs.
pub fn apply_move(c: &Configuration, i: u8, j: u8) -> Result<Configuration> {
    check_peg_pair(i, j)?;
    let ah = catalog::ah();
    let q = ah.state(swap_state_name(i, j)).expect("catalog state");
    Configuration::new(ah.apply(q, c.word())?)
}

fn numeral_msd_first(i: u64, n: usize) -> Result<Word> {
    let digits = to_digits_lsd(i, 2);
    if digits.len() > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: 1u64 << n.min(63),
        });
    }
    Ok(digits.padded_to(n)?.reversed())
}

/// The unique `n`-disk configuration at distance `i` along the geodesic
/// from all-on-`x` to all-on-`y`, generated by the natural-order machine.
pub fn optimal_config(x: u8, y: u8, n: usize, i: u64) -> Result<Configuration> {
    check_peg_pair(x, y)?;
    let m = catalog::ohprime();
    let q = m.state(&format!("q{x}{y}")).expect("catalog state");
    let out = m.apply(q, &numeral_msd_first(i, n)?)?;
    Configuration::new(out.reversed())
}

/// Same configuration via the Gray-code-order machine: row `i` of the
/// binary code table is fed instead of the numeral of `i`.
pub fn optimal_config_gray(x: u8, y: u8, n: usize, i: u64) -> Result<Configuration> {
    check_peg_pair(x, y)?;
    let m = catalog::oh();
    let q = m.state(&format!("t{x}{y}")).expect("catalog state");
    let row = gray::gray_row(2, i, n)?;
    let out = m.apply(q, &row.reversed())?;
    Configuration::new(out.reversed())
}

/// Outcome of feeding a configuration to the geodesic recognizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    /// The configuration lies on the geodesic, at this distance from the
    /// all-on-`x` corner.
    OnGeodesic { distance: u64 },
    /// Not on the geodesic; the inverse machine stalled after consuming
    /// this many letters of the reversed configuration word.
    Rejected { consumed: usize },
}

/// Runs the partial inverse of the natural-order machine over the reversed
/// configuration word; acceptance decodes the distance to the `x` corner.
pub fn recognize_optimal(c: &Configuration, x: u8, y: u8) -> Result<Recognition> {
    check_peg_pair(x, y)?;
    let m = catalog::ohprime();
    let inv = m.invert().expect("catalog machine is injective");
    let q = inv.state(&format!("q{x}{y}")).expect("catalog state");
    match inv.run(q, &c.word().reversed())? {
        PartialRun::Accepted(out) => Ok(Recognition::OnGeodesic {
            distance: from_digits_lsd(&out.reversed())?,
        }),
        PartialRun::Rejected { consumed } => Ok(Recognition::Rejected { consumed }),
    }
}

/// Which input lengths the integer readout pads to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Integer readout of the geodesic from peg 0 to peg 1: term `i` is the
/// ternary value of the configuration produced from the numeral of `i`
/// padded to the smallest length of the requested parity.
pub fn geodesic_integer_sequence(parity: Parity, count: u64) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count as usize);
    for i in 0..count {
        let min_len = to_digits_lsd(i, 2).len();
        let n = match (parity, min_len % 2) {
            (Parity::Odd, 1) | (Parity::Even, 0) => min_len,
            _ => min_len + 1,
        };
        let config = optimal_config(0, 1, n, i)?;
        out.push(from_digits_lsd(config.word())?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> Configuration {
        Configuration::parse(s).unwrap()
    }

    #[test]
    fn moves() {
        assert_eq!(apply_move(&cfg("10221"), 0, 2).unwrap(), cfg("12221"));
        assert_eq!(apply_move(&cfg("000"), 1, 2).unwrap(), cfg("000"));
        assert_eq!(apply_move(&cfg(""), 0, 1).unwrap(), cfg(""));
        assert!(matches!(
            apply_move(&cfg("0"), 1, 1),
            Err(Error::InvalidPeg { .. })
        ));
        assert!(matches!(
            apply_move(&cfg("0"), 0, 3),
            Err(Error::InvalidPeg { .. })
        ));
    }

    #[test]
    fn optimal_configurations() {
        assert_eq!(optimal_config(0, 1, 5, 22).unwrap(), cfg("20021"));
        assert_eq!(optimal_config(0, 1, 4, 0).unwrap(), cfg("0000"));
        assert_eq!(optimal_config(0, 1, 3, 2).unwrap(), cfg("120"));
        assert_eq!(
            bfs_distance(3, cfg("000").word(), cfg("120").word()).unwrap(),
            2
        );
        for n in 1..=6usize {
            let last = (1u64 << n) - 1;
            assert_eq!(
                optimal_config(0, 1, n, last).unwrap(),
                Configuration::uniform(1, n).unwrap()
            );
            assert_eq!(
                optimal_config_gray(0, 1, n, last).unwrap(),
                Configuration::uniform(1, n).unwrap()
            );
        }
        assert!(matches!(
            optimal_config(0, 1, 3, 8),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn both_generators_agree() {
        for (x, y) in [(0u8, 1u8), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)] {
            for n in 1..=6usize {
                for i in 0..(1u64 << n) {
                    assert_eq!(
                        optimal_config(x, y, n, i).unwrap(),
                        optimal_config_gray(x, y, n, i).unwrap()
                    );
                }
            }
        }
        assert_eq!(optimal_config_gray(0, 1, 5, 22).unwrap(), cfg("20021"));
    }

    #[test]
    fn recognition() {
        assert_eq!(
            recognize_optimal(&cfg("10021"), 0, 1).unwrap(),
            Recognition::Rejected { consumed: 4 }
        );
        assert_eq!(
            recognize_optimal(&cfg("20021"), 0, 1).unwrap(),
            Recognition::OnGeodesic { distance: 22 }
        );
        assert_eq!(
            recognize_optimal(&cfg("20021"), 1, 0).unwrap(),
            Recognition::OnGeodesic { distance: 9 }
        );
    }

    #[test]
    fn recognition_inverts_generation() {
        for n in 1..=6usize {
            for i in 0..(1u64 << n) {
                let c = optimal_config(2, 0, n, i).unwrap();
                assert_eq!(
                    recognize_optimal(&c, 2, 0).unwrap(),
                    Recognition::OnGeodesic { distance: i }
                );
            }
        }
    }

    #[test]
    fn parity_readouts() {
        assert_eq!(
            geodesic_integer_sequence(Parity::Odd, 8).unwrap(),
            vec![0, 1, 7, 8, 17, 15, 12, 13]
        );
        assert_eq!(
            geodesic_integer_sequence(Parity::Even, 8).unwrap(),
            vec![0, 2, 5, 4, 22, 21, 24, 26]
        );
        assert_eq!(geodesic_integer_sequence(Parity::Odd, 1).unwrap(), vec![0]);
    }
}

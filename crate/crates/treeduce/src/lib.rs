//! Finite transducers as tree morphisms.
//!
//! The crate ships a small catalog of letter-to-letter machines acting on
//! rooted trees and everything needed to put them to work: integer
//! sequence generators driven by transducer runs, substitution fixed
//! points, reflected Gray codes in bases 2 and 3, the level graphs of the
//! three-peg Hanoi Towers Problem with generation and recognition of
//! optimal configurations, and exact semigroup relation checking through
//! product machines and bisimulation.
//!
//! Entry points:
//!
//! * [`automata`] — machine types, the catalog, text format, products,
//!   bisimulation, partial inverses;
//! * [`sequences`] — sequence generators and word-combinatorics checks;
//! * [`hanoi`] — configurations, Schreier graphs, Gray codes, optimal
//!   configuration generation and recognition;
//! * [`semigroup`] — relation verification and growth counting;
//! * [`cli`] — the `treeduce` command-line interface.

pub mod automata;
pub mod cli;
pub mod error;
pub mod hanoi;
pub mod semigroup;
pub mod sequences;
pub mod words;

pub use error::{Error, Result};
pub use words::{Sign, Word};

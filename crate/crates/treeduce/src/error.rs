use thiserror::Error;

/// Errors shared by every module of the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A checked 64-bit computation left the representable range.
    #[error("value does not fit in 64 bits")]
    Overflow,

    /// A word was longer than the length it had to fit in.
    #[error("word of length {len} does not fit in length {target}")]
    LengthError { len: usize, target: usize },

    /// A letter fell outside the expected alphabet.
    #[error("letter {letter} is out of range for alphabet of size {k}")]
    LetterOutOfRange { letter: u8, k: u8 },

    /// Malformed machine description text.
    #[error("syntax error on line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },

    /// A state is missing a transition for some input letter.
    #[error("incomplete table: state {state} has no transition on letter {letter}")]
    IncompleteTable { state: String, letter: u8 },

    /// A transition referenced a state that was never declared.
    #[error("unknown state {name}")]
    UnknownState { name: String },

    /// No machine of this name exists in the catalog.
    #[error("unknown machine name {name}")]
    UnknownName { name: String },

    /// Inversion requires every output row to be injective.
    #[error("state {state} has a non-injective output row")]
    NotInjective { state: String },

    /// Machines were combined whose alphabets do not line up.
    #[error("alphabet mismatch: {msg}")]
    AlphabetMismatch { msg: String },

    /// The state does not map eventually-zero inputs to eventually-zero outputs.
    #[error("state {state} does not preserve the all-zero tail class")]
    ConfinalityViolation { state: String },

    /// Substitution rules that cannot be iterated from the seed.
    #[error("substitution system is not prolongable from its seed")]
    NotProlongable,

    /// The exhaustive decomposition scan found no (or several) solutions.
    #[error("decomposition oracle failed at n = {n}: {found} solutions in scan range")]
    OracleFailure { n: u64, found: usize },

    /// A size cap was hit before the computation finished.
    #[error("resource limit exceeded: {msg}")]
    ResourceLimit { msg: String },

    /// An index was outside the range the operation enumerates.
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: u64, bound: u64 },

    /// Operation restricted to invertible machines.
    #[error("machine is not invertible")]
    NotInvertible,

    /// Pegs must be distinct members of {{0, 1, 2}}.
    #[error("invalid peg pair ({from}, {to})")]
    InvalidPeg { from: u8, to: u8 },
}

pub type Result<T> = std::result::Result<T, Error>;

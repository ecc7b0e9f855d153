//! Integer and sign sequences read off machine runs, substitution fixed
//! points, block recursions, and the digit-scan oracles that cross-check
//! them.
//!
//! Conversions follow the numeral conventions of [`crate::words`]: index
//! `i` enters a machine as its minimal LSD-first base-`k` digit word, and
//! outputs are read back the same way. A machine state only defines an
//! integer sequence if it maps eventually-zero inputs to eventually-zero
//! outputs; the finite part of the output then needs the transient of the
//! reached state's zero ray appended, which is what makes the values
//! independent of input padding.

use std::fmt::Display;
use std::fmt::Write as _;

use crate::automata::{catalog, widened_output, FinalStateAutomaton, StateId, Transducer};
use crate::error::{Error, Result};
use crate::words::{from_digits_lsd, to_digits_lsd, Sign};

/// The carry machine read back into the ternary alphabet, with its start
/// state. Its integer sequence lists the ternary values; the raw catalog
/// machine would denote binary numerals instead.
pub fn l_machine() -> (Transducer, StateId) {
    let t = widened_output(&catalog::al(), 3).expect("widening to the input alphabet");
    let alpha = t.state("alpha").expect("catalog state");
    (t, alpha)
}

/// The power-of-3 machine with its start state.
pub fn at_machine() -> (Transducer, StateId) {
    let t = catalog::at();
    let s1 = t.state("s1").expect("catalog state");
    (t, s1)
}

/// The integer sequence of `(t, q)` on the half-open index range `lo..hi`.
///
/// Term `i` is the value of `q`'s output on the numeral of `i`, extended by
/// the zero-ray transient of the state the run stops in.
pub fn transducer_sequence(t: &Transducer, q: StateId, lo: u64, hi: u64) -> Result<Vec<u64>> {
    if !t.preserves_zero_confinality(q) {
        return Err(Error::ConfinalityViolation {
            state: t.state_name(q).to_string(),
        });
    }
    (lo..hi).map(|i| transducer_term(t, q, i)).collect()
}

fn transducer_term(t: &Transducer, q: StateId, i: u64) -> Result<u64> {
    let digits = to_digits_lsd(i, t.k_in());
    let out = t.apply(q, &digits)?;
    let stop = t.state_after(q, &digits)?;
    let tail = t.zero_ray_tail(stop).transient;
    from_digits_lsd(&out.concat(&tail)?)
}

/// Significant-first variant: index `i` is padded to `n` digits, fed most
/// significant digit first, and the output is read the same way.
pub fn sf_transducer_sequence(t: &Transducer, q: StateId, i: u64, n: usize) -> Result<u64> {
    let digits = to_digits_lsd(i, t.k_in()).padded_to(n)?;
    let out = t.apply(q, &digits.reversed())?;
    from_digits_lsd(&out.reversed())
}

/// Final-state outputs on the index range `lo..hi`.
pub fn automatic_sequence(a: &FinalStateAutomaton, lo: u64, hi: u64) -> Vec<Sign> {
    (lo..hi)
        .map(|i| {
            a.run(&to_digits_lsd(i, a.alphabet_size()))
                .expect("generated numerals are valid input")
        })
        .collect()
}

/// Substitution system over integer-labeled letters, prolongable from its
/// seed. Rules are a callback so unbounded alphabets need no enumeration.
pub struct MorphicSystem<F: Fn(i64) -> Vec<i64>> {
    seed: i64,
    rules: F,
}

impl<F: Fn(i64) -> Vec<i64>> MorphicSystem<F> {
    /// Requires `rules(seed)` to start with `seed` and have length >= 2.
    pub fn new(seed: i64, rules: F) -> Result<Self> {
        let image = rules(seed);
        if image.len() < 2 || image.first() != Some(&seed) {
            return Err(Error::NotProlongable);
        }
        Ok(MorphicSystem { seed, rules })
    }

    pub fn seed(&self) -> i64 {
        self.seed
    }

    /// First `len` letters of the substitution fixed point, materializing
    /// `O(len)` letters: the fixed point is the concatenation of the rule
    /// images of its own letters, so the output buffer can feed itself.
    pub fn limit(&self, len: usize) -> Result<Vec<i64>> {
        if len == 0 {
            return Ok(Vec::new());
        }
        let mut out = (self.rules)(self.seed);
        let mut read = 1;
        while out.len() < len {
            let image = (self.rules)(out[read]);
            if image.is_empty() {
                return Err(Error::NotProlongable);
            }
            out.extend_from_slice(&image);
            read += 1;
        }
        out.truncate(len);
        Ok(out)
    }
}

/// The sign substitution: `1 -> 1 1 -1`, `-1 -> 1 -1 -1`, seed 1.
pub fn w_system() -> MorphicSystem<impl Fn(i64) -> Vec<i64>> {
    MorphicSystem::new(1, |x| {
        if x == 1 {
            vec![1, 1, -1]
        } else {
            vec![1, -1, -1]
        }
    })
    .expect("sign substitution is prolongable")
}

/// The value substitution `0 -> 0 1`, `x -> 3x+1 3x 3x+1` for `x >= 1`,
/// seed 0. Its fixed point lists the same values as the carry machine.
pub fn l_system() -> MorphicSystem<impl Fn(i64) -> Vec<i64>> {
    MorphicSystem::new(0, |x| {
        if x == 0 {
            vec![0, 1]
        } else {
            vec![3 * x + 1, 3 * x, 3 * x + 1]
        }
    })
    .expect("value substitution is prolongable")
}

/// Which block recursion to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Sign blocks: `w0 = [1]`, `w(n+1) = w(n) w(n) w(n)'` with the middle
    /// symbol of the third copy flipped to -1.
    W,
    /// Value blocks: `a0 = [1]`, `a(n+1) = a(n) a(n)' a(n)` with the middle
    /// term of the middle copy tripled.
    A,
}

/// Expands the block recursion to the full level-`n` block of length `3^n`.
pub fn block_sequence(kind: BlockKind, n: u32) -> Result<Vec<i64>> {
    let len = 3i64.checked_pow(n).ok_or(Error::Overflow)? as usize;
    let mut block = vec![1i64];
    for _ in 0..n {
        let mid = (block.len() - 1) / 2;
        let mut primed = block.clone();
        match kind {
            BlockKind::W => primed[mid] = -1,
            BlockKind::A => primed[mid] = primed[mid].checked_mul(3).ok_or(Error::Overflow)?,
        }
        let mut next = Vec::with_capacity(block.len() * 3);
        match kind {
            BlockKind::W => {
                next.extend_from_slice(&block);
                next.extend_from_slice(&block);
                next.extend_from_slice(&primed);
            }
            BlockKind::A => {
                next.extend_from_slice(&block);
                next.extend_from_slice(&primed);
                next.extend_from_slice(&block);
            }
        }
        block = next;
    }
    debug_assert_eq!(block.len(), len);
    Ok(block)
}

/// A cube `u u u` found inside a word: `w[position..position + 3*period)`
/// consists of three copies of a block of length `period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cube {
    pub position: usize,
    pub period: usize,
}

/// Finds the first cube (smallest start, then smallest period), if any.
///
/// One pass per period: a run of `2*period` consecutive matches between
/// `w[i]` and `w[i + period]` is exactly a cube.
pub fn find_cube<T: Eq>(w: &[T]) -> Option<Cube> {
    let mut best: Option<Cube> = None;
    for period in 1..=w.len() / 3 {
        let mut run = 0usize;
        for i in 0..w.len() - period {
            if w[i] == w[i + period] {
                run += 1;
                if run >= 2 * period {
                    let position = i + 1 - 2 * period;
                    if best.is_none_or(|b| (position, period) < (b.position, b.period)) {
                        best = Some(Cube { position, period });
                    }
                    break;
                }
            } else {
                run = 0;
            }
        }
    }
    best
}

/// True when the word contains no factor `u u u` with `u` nonempty.
pub fn is_cube_free<T: Eq>(w: &[T]) -> bool {
    find_cube(w).is_none()
}

/// Sign of index `i` by digit scan: minus exactly when the lowest ternary
/// digit different from 1 is a 2 (an exhausted expansion counts as 0).
pub fn sign_by_ternary_digits(i: u64) -> Sign {
    let mut i = i;
    while i > 0 {
        match i % 3 {
            1 => i /= 3,
            2 => return Sign::Minus,
            _ => return Sign::Plus,
        }
    }
    Sign::Plus
}

/// True when the ternary expansion of `m` avoids the digit 2.
pub fn is_in_n2(m: u64) -> bool {
    let mut m = m;
    while m > 0 {
        if m % 3 == 2 {
            return false;
        }
        m /= 3;
    }
    true
}

/// The decomposition of `n` as a difference of digit-2-free numbers whose
/// sum is also digit-2-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LDecomposition {
    pub n: u64,
    pub lplus: u64,
    pub lminus: u64,
    /// `lplus + lminus`.
    pub ell: u64,
}

/// Exhaustive decomposition oracle: scans `lminus` over digit-2-free
/// numbers up to `9 * (n + 1)` and demands exactly one hit.
///
/// Uniqueness inside the scan window is asserted at runtime rather than
/// assumed; zero or multiple hits raise [`Error::OracleFailure`].
pub fn l_decomposition(n: u64) -> Result<LDecomposition> {
    let bound = 9u64
        .checked_mul(n.checked_add(1).ok_or(Error::Overflow)?)
        .ok_or(Error::Overflow)?;
    let mut found: Option<LDecomposition> = None;
    let mut hits = 0usize;
    // Digit-2-free numbers in increasing order: binary expansions of a
    // counter reread as ternary digits.
    for m in 0u64.. {
        let y = spread_binary_to_ternary(m)?;
        if y > bound {
            break;
        }
        let x = n.checked_add(y).ok_or(Error::Overflow)?;
        if is_in_n2(x) && is_in_n2(x + y) {
            hits += 1;
            if found.is_none() {
                found = Some(LDecomposition {
                    n,
                    lplus: x,
                    lminus: y,
                    ell: x + y,
                });
            }
        }
    }
    match (found, hits) {
        (Some(d), 1) => Ok(d),
        (_, hits) => Err(Error::OracleFailure { n, found: hits }),
    }
}

/// Reads the binary digits of `m` as ternary digits: the `m`-th number
/// whose ternary expansion avoids the digit 2.
fn spread_binary_to_ternary(m: u64) -> Result<u64> {
    let mut value: u64 = 0;
    let mut place: u64 = 1;
    let mut m = m;
    while m > 0 {
        if m & 1 == 1 {
            value = value.checked_add(place).ok_or(Error::Overflow)?;
        }
        m >>= 1;
        if m > 0 {
            place = place.checked_mul(3).ok_or(Error::Overflow)?;
        }
    }
    Ok(value)
}

/// Signed partial sum `p_n`: the sum over `i < n` of `w_i * a_i`, with the
/// signs from the final-state machine `A02` and the magnitudes from the
/// power-of-3 machine `AT`.
pub fn weighted_partial_sums(n: u64) -> Result<i64> {
    Ok(*weighted_partial_sum_prefix(n + 1)?
        .last()
        .expect("prefix is nonempty"))
}

/// All partial sums `p_0 .. p_(count-1)` in one pass.
pub fn weighted_partial_sum_prefix(count: u64) -> Result<Vec<i64>> {
    let signs = catalog::a02();
    let at = catalog::at();
    let s1 = at.state("s1").expect("catalog state");
    let mut out = Vec::with_capacity(count as usize);
    let mut acc: i64 = 0;
    let mut i: u64 = 0;
    while (out.len() as u64) < count {
        out.push(acc);
        let w = signs
            .run(&to_digits_lsd(i, 3))
            .expect("valid numeral")
            .value();
        let a = transducer_term(&at, s1, i)?;
        let a = i64::try_from(a).map_err(|_| Error::Overflow)?;
        acc = acc
            .checked_add(w.checked_mul(a).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
        i += 1;
    }
    Ok(out)
}

/// Renders values as OEIS b-file lines `<index> <value>`, one per line,
/// starting at the given index origin.
pub fn bfile<T: Display>(values: &[T], origin: i64) -> String {
    let mut out = String::new();
    for (j, v) in values.iter().enumerate() {
        writeln!(out, "{} {}", origin + j as i64, v).unwrap();
    }
    out
}

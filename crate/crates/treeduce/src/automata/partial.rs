//! Partial inverses of injective transducers.
//!
//! Inverting swaps the alphabets and reverses every edge's letters: the
//! inverse reads what the source wrote. Since an injective source never
//! writes two different letters from one state on one input, the inverse
//! tables are well defined but may be partial; a word that drives the
//! inverse into an undefined entry is not an output of the source state.

use std::collections::HashMap;

use super::{StateId, Transducer, TransducerClass};
use crate::error::{Error, Result};
use crate::words::Word;

/// Inverse machine of an injective transducer, with partially defined
/// transition and output tables. Entry `[q][y]` is `Some((p, x))` exactly
/// when the source has `q --x/y--> p`.
#[derive(Debug, Clone)]
pub struct PartialTransducer {
    k_in: u8,
    k_out: u8,
    names: Vec<String>,
    index: HashMap<String, usize>,
    entries: Vec<Vec<Option<(usize, u8)>>>,
}

/// Result of running a partial machine over a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialRun {
    /// Every letter was read; the full output word.
    Accepted(Word),
    /// An undefined transition was hit after consuming `consumed` letters.
    Rejected { consumed: usize },
}

pub(super) fn invert(t: &Transducer) -> Result<PartialTransducer> {
    match t.classify() {
        TransducerClass::Injective | TransducerClass::Invertible => {}
        TransducerClass::General => {
            // Identify a witness state whose output row collides, first in
            // name order.
            let mut order: Vec<usize> = (0..t.state_count()).collect();
            order.sort_by(|&p, &q| t.state_names()[p].cmp(&t.state_names()[q]));
            for q in order {
                let row = t.pi_row(q);
                let mut seen = [false; 256];
                if row
                    .iter()
                    .any(|&y| std::mem::replace(&mut seen[usize::from(y)], true))
                {
                    return Err(Error::NotInjective {
                        state: t.state_names()[q].clone(),
                    });
                }
            }
            // Injective rows but k_in > k_out cannot happen; classify would
            // have returned General only via a collision.
            unreachable!("general machine without a colliding output row");
        }
    }
    let mut entries = vec![vec![None; usize::from(t.k_out())]; t.state_count()];
    for (q, row) in entries.iter_mut().enumerate() {
        for x in 0..usize::from(t.k_in()) {
            let y = t.pi_row(q)[x];
            let p = t.tau_row(q)[x];
            row[usize::from(y)] = Some((p, x as u8));
        }
    }
    Ok(PartialTransducer {
        k_in: t.k_out(),
        k_out: t.k_in(),
        names: t.state_names().to_vec(),
        index: t
            .state_names()
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect(),
        entries,
    })
}

impl PartialTransducer {
    pub fn k_in(&self) -> u8 {
        self.k_in
    }

    pub fn k_out(&self) -> u8 {
        self.k_out
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    /// States keep the names of their source states.
    pub fn state(&self, name: &str) -> Option<StateId> {
        self.index.get(name).copied().map(StateId)
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.names[q.0]
    }

    /// True when every entry is defined (the source was invertible).
    pub fn is_total(&self) -> bool {
        self.entries
            .iter()
            .all(|row| row.iter().all(Option::is_some))
    }

    /// Longest-prefix run from `q` over `w`: the full output on acceptance,
    /// or the number of letters consumed before the undefined transition.
    pub fn run(&self, q: StateId, w: &Word) -> Result<PartialRun> {
        let mut out = Vec::with_capacity(w.len());
        let mut cur = q.0;
        for (m, &y) in w.letters().iter().enumerate() {
            if y >= self.k_in {
                return Err(Error::LetterOutOfRange {
                    letter: y,
                    k: self.k_in,
                });
            }
            match self.entries[cur][usize::from(y)] {
                Some((p, x)) => {
                    out.push(x);
                    cur = p;
                }
                None => return Ok(PartialRun::Rejected { consumed: m }),
            }
        }
        Ok(PartialRun::Accepted(Word::new(out, self.k_out)?))
    }
}

impl PartialEq for PartialTransducer {
    fn eq(&self, other: &Self) -> bool {
        if self.k_in != other.k_in || self.k_out != other.k_out {
            return false;
        }
        if self.names.len() != other.names.len() {
            return false;
        }
        for (q, name) in self.names.iter().enumerate() {
            let Some(&o) = other.index.get(name) else {
                return false;
            };
            for y in 0..usize::from(self.k_in) {
                let lhs = self.entries[q][y].map(|(p, x)| (self.names[p].clone(), x));
                let rhs = other.entries[o][y].map(|(p, x)| (other.names[p].clone(), x));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for PartialTransducer {}

#[cfg(test)]
mod tests {
    use super::super::catalog::{ah, at, ohprime};
    use super::*;
    use crate::words::to_digits_lsd;

    fn w3(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    #[test]
    fn ohprime_inverse_recognizes_its_image() {
        let m = ohprime();
        let inv = m.invert().unwrap();
        assert!(!inv.is_total());
        let q01 = inv.state("q01").unwrap();
        assert_eq!(
            inv.run(q01, &w3("12001")).unwrap(),
            PartialRun::Rejected { consumed: 4 }
        );
        match inv.run(q01, &w3("12002")).unwrap() {
            PartialRun::Accepted(out) => assert_eq!(out.to_string(), "10110"),
            other => panic!("expected acceptance, got {other:?}"),
        }
        let q10 = inv.state("q10").unwrap();
        match inv.run(q10, &w3("12002")).unwrap() {
            PartialRun::Accepted(out) => assert_eq!(out.to_string(), "01001"),
            other => panic!("expected acceptance, got {other:?}"),
        }
    }

    #[test]
    fn invertible_source_gives_total_inverse() {
        let ah = ah();
        let inv = ah.invert().unwrap();
        assert!(inv.is_total());
        // Applying the inverse of an involution twice is the identity.
        let a = ah.state("a").unwrap();
        let a_inv = inv.state("a").unwrap();
        for n in 0..200u64 {
            let w = to_digits_lsd(n, 3);
            let image = ah.apply(a, &w).unwrap();
            match inv.run(a_inv, &image).unwrap() {
                PartialRun::Accepted(back) => assert_eq!(back, w),
                other => panic!("total inverse rejected: {other:?}"),
            }
        }
    }

    #[test]
    fn non_injective_source_is_rejected_with_witness() {
        assert_eq!(
            at().invert(),
            Err(Error::NotInjective {
                state: "s0".to_string()
            })
        );
    }

    #[test]
    fn round_trip_through_inverse() {
        let m = ohprime();
        let inv = m.invert().unwrap();
        for name in ["q01", "q12", "q20"] {
            let q = m.state(name).unwrap();
            let qi = inv.state(name).unwrap();
            for n in 0..256u64 {
                let w = to_digits_lsd(n, 2).padded_to(8).unwrap();
                let image = m.apply(q, &w).unwrap();
                assert_eq!(inv.run(qi, &image).unwrap(), PartialRun::Accepted(w));
            }
        }
    }
}

//! Finite automata with final-state output over the sign alphabet.

use std::collections::HashMap;

use super::StateId;
use crate::error::{Error, Result};
use crate::words::{Sign, Word};

/// A `k`-ary automaton that reads a whole word and emits the sign attached
/// to the state it stops in.
#[derive(Debug, Clone)]
pub struct FinalStateAutomaton {
    k: u8,
    names: Vec<String>,
    index: HashMap<String, usize>,
    tau: Vec<Vec<usize>>,
    out: Vec<Sign>,
    initial: usize,
}

pub struct FinalStateBuilder {
    k: u8,
    names: Vec<String>,
    index: HashMap<String, usize>,
    out: Vec<Sign>,
    entries: Vec<Vec<Option<usize>>>,
}

impl FinalStateBuilder {
    pub fn new(k: u8) -> Self {
        FinalStateBuilder {
            k,
            names: Vec::new(),
            index: HashMap::new(),
            out: Vec::new(),
            entries: Vec::new(),
        }
    }

    pub fn state(&mut self, name: &str, output: Sign) -> usize {
        if let Some(&i) = self.index.get(name) {
            self.out[i] = output;
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.out.push(output);
        self.entries.push(vec![None; usize::from(self.k)]);
        i
    }

    pub fn transition(&mut self, from: &str, input: u8, to: &str) -> Result<()> {
        if input >= self.k {
            return Err(Error::LetterOutOfRange {
                letter: input,
                k: self.k,
            });
        }
        let f = *self.index.get(from).ok_or_else(|| Error::UnknownState {
            name: from.to_string(),
        })?;
        let t = *self.index.get(to).ok_or_else(|| Error::UnknownState {
            name: to.to_string(),
        })?;
        let slot = &mut self.entries[f][usize::from(input)];
        if slot.is_some() {
            return Err(Error::SyntaxError {
                line: 0,
                msg: format!("duplicate transition ({from}, {input})"),
            });
        }
        *slot = Some(t);
        Ok(())
    }

    pub fn build(self, initial: &str) -> Result<FinalStateAutomaton> {
        let initial = *self.index.get(initial).ok_or_else(|| Error::UnknownState {
            name: initial.to_string(),
        })?;
        let mut tau = Vec::with_capacity(self.names.len());
        for (q, row) in self.entries.iter().enumerate() {
            let mut tau_row = Vec::with_capacity(row.len());
            for (x, slot) in row.iter().enumerate() {
                match slot {
                    Some(t) => tau_row.push(*t),
                    None => {
                        return Err(Error::IncompleteTable {
                            state: self.names[q].clone(),
                            letter: x as u8,
                        })
                    }
                }
            }
            tau.push(tau_row);
        }
        Ok(FinalStateAutomaton {
            k: self.k,
            names: self.names,
            index: self.index,
            tau,
            out: self.out,
            initial,
        })
    }
}

impl FinalStateAutomaton {
    pub fn alphabet_size(&self) -> u8 {
        self.k
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn initial(&self) -> StateId {
        StateId(self.initial)
    }

    pub fn state(&self, name: &str) -> Option<StateId> {
        self.index.get(name).copied().map(StateId)
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.names[q.0]
    }

    pub fn output(&self, q: StateId) -> Sign {
        self.out[q.0]
    }

    /// The sign attached to the state reached from the initial state on `w`.
    pub fn run(&self, w: &Word) -> Result<Sign> {
        let mut cur = self.initial;
        for &x in w.letters() {
            if x >= self.k {
                return Err(Error::LetterOutOfRange {
                    letter: x,
                    k: self.k,
                });
            }
            cur = self.tau[cur][usize::from(x)];
        }
        Ok(self.out[cur])
    }

    pub(crate) fn tau_row(&self, q: usize) -> &[usize] {
        &self.tau[q]
    }

    pub(crate) fn state_names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn output_row(&self) -> &[Sign] {
        &self.out
    }

    pub(crate) fn initial_index(&self) -> usize {
        self.initial
    }
}

/// Table equality up to state order, including the initial state.
impl PartialEq for FinalStateAutomaton {
    fn eq(&self, other: &Self) -> bool {
        if self.k != other.k || self.names.len() != other.names.len() {
            return false;
        }
        if self.names[self.initial] != other.names[other.initial] {
            return false;
        }
        for (q, name) in self.names.iter().enumerate() {
            let Some(&o) = other.index.get(name) else {
                return false;
            };
            if self.out[q] != other.out[o] {
                return false;
            }
            for x in 0..usize::from(self.k) {
                if other.names[other.tau[o][x]] != self.names[self.tau[q][x]] {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for FinalStateAutomaton {}

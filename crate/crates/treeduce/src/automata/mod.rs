//! Letter-to-letter transducers whose states act as tree morphisms.
//!
//! A transducer reads a word over its input alphabet and emits one output
//! letter per input letter, so every state realizes a length- and
//! prefix-preserving map between free monoids. The module provides the
//! catalog of bundled machines, a text format, products (morphism
//! composition), bisimulation equivalence, and partial inverses of
//! injective machines.

mod bisim;
pub mod catalog;
mod final_state;
mod format;
mod partial;

pub use bisim::{bisimulation_classes, canonical_key, morphisms_equal, reduce_pointed, MorphKey};
pub use catalog::{builtin, identity_transducer, Builtin, BuiltinName};
pub use final_state::FinalStateAutomaton;
pub use format::{
    parse_final_state_automaton, parse_machine, parse_transducer, serialize_final_state_automaton,
    serialize_transducer, Machine,
};
pub use partial::{PartialRun, PartialTransducer};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::Word;

/// Handle to a state of a particular machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(pub(crate) usize);

impl StateId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// How the output rows of a machine behave.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransducerClass {
    /// Some output row identifies two input letters.
    General,
    /// Every output row is injective (and the output alphabet is at least as
    /// large as the input alphabet); states embed the input tree.
    Injective,
    /// Square alphabet and every output row a permutation; states are tree
    /// automorphisms.
    Invertible,
}

/// A finite `k_in`-to-`k_out` transducer with named states and total
/// transition/output tables. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Transducer {
    k_in: u8,
    k_out: u8,
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `tau[q][x]` is the state reached from `q` on input letter `x`.
    tau: Vec<Vec<usize>>,
    /// `pi[q][x]` is the letter emitted from `q` on input letter `x`.
    pi: Vec<Vec<u8>>,
}

/// Incremental construction of a [`Transducer`]; `build` checks totality.
pub struct TransducerBuilder {
    k_in: u8,
    k_out: u8,
    names: Vec<String>,
    index: HashMap<String, usize>,
    entries: Vec<Vec<Option<(usize, u8)>>>,
}

impl TransducerBuilder {
    pub fn new(k_in: u8, k_out: u8) -> Self {
        TransducerBuilder {
            k_in,
            k_out,
            names: Vec::new(),
            index: HashMap::new(),
            entries: Vec::new(),
        }
    }

    /// Declares a state; the first declaration fixes the state order.
    pub fn state(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.entries.push(vec![None; usize::from(self.k_in)]);
        i
    }

    /// Adds the transition `from --input/output--> to`. States are declared
    /// on first mention.
    pub fn transition(&mut self, from: &str, input: u8, to: &str, output: u8) -> Result<()> {
        if input >= self.k_in {
            return Err(Error::LetterOutOfRange {
                letter: input,
                k: self.k_in,
            });
        }
        if output >= self.k_out {
            return Err(Error::LetterOutOfRange {
                letter: output,
                k: self.k_out,
            });
        }
        let f = self.state(from);
        let t = self.state(to);
        let slot = &mut self.entries[f][usize::from(input)];
        if slot.is_some() {
            return Err(Error::SyntaxError {
                line: 0,
                msg: format!("duplicate transition ({from}, {input})"),
            });
        }
        *slot = Some((t, output));
        Ok(())
    }

    pub fn build(self) -> Result<Transducer> {
        if self.k_in < 2 || self.k_out < 2 {
            return Err(Error::LetterOutOfRange {
                letter: 0,
                k: self.k_in.min(self.k_out),
            });
        }
        if self.names.is_empty() {
            return Err(Error::IncompleteTable {
                state: "<none>".to_string(),
                letter: 0,
            });
        }
        let mut tau = Vec::with_capacity(self.names.len());
        let mut pi = Vec::with_capacity(self.names.len());
        for (q, row) in self.entries.iter().enumerate() {
            let mut tau_row = Vec::with_capacity(row.len());
            let mut pi_row = Vec::with_capacity(row.len());
            for (x, slot) in row.iter().enumerate() {
                match slot {
                    Some((to, out)) => {
                        tau_row.push(*to);
                        pi_row.push(*out);
                    }
                    None => {
                        return Err(Error::IncompleteTable {
                            state: self.names[q].clone(),
                            letter: x as u8,
                        })
                    }
                }
            }
            tau.push(tau_row);
            pi.push(pi_row);
        }
        Ok(Transducer {
            k_in: self.k_in,
            k_out: self.k_out,
            names: self.names,
            index: self.index,
            tau,
            pi,
        })
    }
}

impl Transducer {
    pub fn builder(k_in: u8, k_out: u8) -> TransducerBuilder {
        TransducerBuilder::new(k_in, k_out)
    }

    pub fn k_in(&self) -> u8 {
        self.k_in
    }

    pub fn k_out(&self) -> u8 {
        self.k_out
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> {
        (0..self.names.len()).map(StateId)
    }

    /// The state at a position in declaration order.
    pub fn nth_state(&self, index: usize) -> Option<StateId> {
        (index < self.names.len()).then_some(StateId(index))
    }

    /// Looks a state up by name.
    pub fn state(&self, name: &str) -> Option<StateId> {
        self.index.get(name).copied().map(StateId)
    }

    pub fn state_or_err(&self, name: &str) -> Result<StateId> {
        self.state(name).ok_or_else(|| Error::UnknownState {
            name: name.to_string(),
        })
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.names[q.0]
    }

    /// Transition target and output letter for `(q, x)`.
    pub fn step(&self, q: StateId, x: u8) -> Result<(StateId, u8)> {
        if x >= self.k_in {
            return Err(Error::LetterOutOfRange {
                letter: x,
                k: self.k_in,
            });
        }
        Ok((
            StateId(self.tau[q.0][usize::from(x)]),
            self.pi[q.0][usize::from(x)],
        ))
    }

    /// Runs state `q` on `w`, producing one output letter per input letter.
    pub fn apply(&self, q: StateId, w: &Word) -> Result<Word> {
        let mut out = Vec::with_capacity(w.len());
        let mut cur = q;
        for &x in w.letters() {
            let (next, y) = self.step(cur, x)?;
            out.push(y);
            cur = next;
        }
        Word::new(out, self.k_out)
    }

    /// The state reached from `q` after reading `u` (the section of `q` at `u`).
    pub fn state_after(&self, q: StateId, u: &Word) -> Result<StateId> {
        let mut cur = q;
        for &x in u.letters() {
            cur = self.step(cur, x)?.0;
        }
        Ok(cur)
    }

    /// States reachable from `q`, in breadth-first discovery order.
    pub fn reachable_from(&self, q: StateId) -> Vec<StateId> {
        let mut seen = vec![false; self.names.len()];
        let mut order = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        seen[q.0] = true;
        queue.push_back(q.0);
        while let Some(s) = queue.pop_front() {
            order.push(StateId(s));
            for x in 0..usize::from(self.k_in) {
                let t = self.tau[s][x];
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// Classifies the machine by the shape of its output rows.
    pub fn classify(&self) -> TransducerClass {
        let all_injective = self.pi.iter().all(|row| {
            let mut seen = [false; 256];
            row.iter()
                .all(|&y| !std::mem::replace(&mut seen[usize::from(y)], true))
        });
        if !all_injective || self.k_in > self.k_out {
            return TransducerClass::General;
        }
        if self.k_in == self.k_out {
            TransducerClass::Invertible
        } else {
            TransducerClass::Injective
        }
    }

    /// Output along the all-zero input ray from `q`: the finite transient
    /// before a state repeats, and the output around the repeating cycle.
    pub fn zero_ray_tail(&self, q: StateId) -> ZeroRayTail {
        let mut first_seen = vec![usize::MAX; self.names.len()];
        let mut outputs = Vec::new();
        let mut cur = q.0;
        let mut step = 0usize;
        loop {
            if first_seen[cur] != usize::MAX {
                let split = first_seen[cur];
                let cycle = outputs.split_off(split);
                return ZeroRayTail {
                    transient: Word::new(outputs, self.k_out).expect("outputs are valid letters"),
                    cycle: Word::new(cycle, self.k_out).expect("outputs are valid letters"),
                };
            }
            first_seen[cur] = step;
            outputs.push(self.pi[cur][0]);
            cur = self.tau[cur][0];
            step += 1;
        }
    }

    /// True when every state reachable from `q` has an all-zero cycle on its
    /// zero ray, i.e. `q` maps eventually-zero inputs to eventually-zero
    /// outputs.
    pub fn preserves_zero_confinality(&self, q: StateId) -> bool {
        self.reachable_from(q).into_iter().all(|s| {
            self.zero_ray_tail(s)
                .cycle
                .letters()
                .iter()
                .all(|&y| y == 0)
        })
    }

    /// Builds the partial inverse of an injective machine. See
    /// [`PartialTransducer`].
    pub fn invert(&self) -> Result<PartialTransducer> {
        partial::invert(self)
    }

    /// Coarsest partition of the states under which equivalent states have
    /// identical output rows and transitions into equivalent states. Two
    /// states are in one class exactly when they define the same tree
    /// morphism.
    pub fn bisimulation_classes(&self) -> Vec<Vec<StateId>> {
        bisim::bisimulation_classes(self)
    }

    /// True when `p` and `q` define the same tree morphism.
    pub fn states_equivalent(&self, p: StateId, q: StateId) -> bool {
        let classes = bisim::partition(self);
        classes[p.0] == classes[q.0]
    }

    pub(crate) fn tau_row(&self, q: usize) -> &[usize] {
        &self.tau[q]
    }

    pub(crate) fn pi_row(&self, q: usize) -> &[u8] {
        &self.pi[q]
    }

    pub(crate) fn state_names(&self) -> &[String] {
        &self.names
    }
}

/// Table equality up to state order: same alphabets, same state-name set,
/// same transitions under the names.
impl PartialEq for Transducer {
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
            for x in 0..usize::from(self.k_in) {
                if self.pi[q][x] != other.pi[o][x] {
                    return false;
                }
                if other.names[other.tau[o][x]] != self.names[self.tau[q][x]] {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for Transducer {}

/// Output of a state along the all-zero input ray, split into the part
/// before the transition cycle and the part around it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroRayTail {
    pub transient: Word,
    pub cycle: Word,
}

/// Composition machine: state `(p, q)` acts as `p` after `q`, i.e.
/// `product(outer, inner)` applied at `(p, q)` equals
/// `outer.apply(p, inner.apply(q, w))` for every word `w`.
///
/// Requires `inner.k_out == outer.k_in`. States are all pairs, named
/// `"(p,q)"`, ordered with the outer state varying slowest.
pub fn product(outer: &Transducer, inner: &Transducer) -> Result<Transducer> {
    if inner.k_out != outer.k_in {
        return Err(Error::AlphabetMismatch {
            msg: format!(
                "inner machine outputs {} letters but outer machine reads {}",
                inner.k_out, outer.k_in
            ),
        });
    }
    let n_outer = outer.state_count();
    let n_inner = inner.state_count();
    let mut names = Vec::with_capacity(n_outer * n_inner);
    let mut index = HashMap::with_capacity(n_outer * n_inner);
    for p in 0..n_outer {
        for q in 0..n_inner {
            let name = format!("({},{})", outer.names[p], inner.names[q]);
            index.insert(name.clone(), names.len());
            names.push(name);
        }
    }
    let k = usize::from(inner.k_in);
    let mut tau = Vec::with_capacity(n_outer * n_inner);
    let mut pi = Vec::with_capacity(n_outer * n_inner);
    for p in 0..n_outer {
        for q in 0..n_inner {
            let mut tau_row = Vec::with_capacity(k);
            let mut pi_row = Vec::with_capacity(k);
            for x in 0..k {
                let y = inner.pi[q][x];
                let q2 = inner.tau[q][x];
                let p2 = outer.tau[p][usize::from(y)];
                tau_row.push(p2 * n_inner + q2);
                pi_row.push(outer.pi[p][usize::from(y)]);
            }
            tau.push(tau_row);
            pi.push(pi_row);
        }
    }
    Ok(Transducer {
        k_in: inner.k_in,
        k_out: outer.k_out,
        names,
        index,
        tau,
        pi,
    })
}

/// The pair state `(p, q)` of `product(outer, inner)`.
pub fn pair_state(_outer: &Transducer, inner: &Transducer, p: StateId, q: StateId) -> StateId {
    StateId(p.0 * inner.state_count() + q.0)
}

/// Reinterprets a machine over a larger output alphabet. This is the
/// canonical embedding that turns a `k`-to-`j` machine with `j <= k` into a
/// `k`-ary endomorphism so that its states can be composed with themselves.
pub fn widened_output(t: &Transducer, k_out: u8) -> Result<Transducer> {
    if k_out < t.k_out {
        return Err(Error::AlphabetMismatch {
            msg: format!(
                "cannot narrow output alphabet from {} to {}",
                t.k_out, k_out
            ),
        });
    }
    let mut widened = t.clone();
    widened.k_out = k_out;
    Ok(widened)
}

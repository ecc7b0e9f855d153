//! Exact checks on the semigroups and groups generated by machine states.
//!
//! A word in the states of an endomorphism machine denotes the composite
//! of the corresponding tree maps, rightmost letter applied first. The
//! composite is realized as a state of an iterated product machine — never
//! as an expanded action table — so equality of elements is a bisimulation
//! decision on a finite machine and relations are verified exactly.
//!
//! Machines whose output alphabet is smaller than their input alphabet
//! (such as the carry machine) are first read back into the input alphabet;
//! that is the canonical embedding that makes their states composable.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::automata::{
    canonical_key, catalog, morphisms_equal, pair_state, product, reduce_pointed, widened_output,
    MorphKey, StateId, Transducer, TransducerClass,
};
use crate::error::{Error, Result};
use crate::words::Word;

/// Default cap on the total number of product states a growth census may
/// build.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

/// A nonempty word in state names, leftmost applied last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    names: Vec<String>,
}

impl GeneratorWord {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::SyntaxError {
                line: 1,
                msg: "empty generator word".to_string(),
            });
        }
        Ok(GeneratorWord { names })
    }

    /// Parses names joined by `·` or whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let names: Vec<String> = text
            .split(|c: char| c == '·' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect();
        GeneratorWord::new(names)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join("·"))
    }
}

/// Views `t` as an endomorphism, widening a smaller output alphabet into
/// the input alphabet.
fn as_endomorphism(t: &Transducer) -> Result<Transducer> {
    if t.k_out() > t.k_in() {
        return Err(Error::AlphabetMismatch {
            msg: format!(
                "a {}-to-{} machine does not act on its own input tree",
                t.k_in(),
                t.k_out()
            ),
        });
    }
    widened_output(t, t.k_in())
}

/// Realizes the composite morphism of `w` as a state of the iterated
/// product of `t` with itself.
pub fn realize(t: &Transducer, w: &GeneratorWord) -> Result<(Transducer, StateId)> {
    let t = as_endomorphism(t)?;
    let mut names = w.names.iter().rev();
    let first = names.next().expect("generator words are nonempty");
    let mut machine = t.clone();
    let mut state = t.state_or_err(first)?;
    for name in names {
        let q = t.state_or_err(name)?;
        let next = product(&t, &machine)?;
        state = pair_state(&t, &machine, q, state);
        machine = next;
    }
    Ok((machine, state))
}

/// True exactly when the two generator words denote the same tree
/// morphism.
pub fn verify_relation(t: &Transducer, lhs: &GeneratorWord, rhs: &GeneratorWord) -> Result<bool> {
    let (m1, q1) = realize(t, lhs)?;
    let (m2, q2) = realize(t, rhs)?;
    morphisms_equal(&m1, q1, &m2, q2)
}

/// A reduced machine pointed at the state realizing some morphism.
#[derive(Clone)]
struct Pointed {
    machine: Transducer,
    state: StateId,
}

impl Pointed {
    fn of(t: &Transducer, q: StateId) -> Pointed {
        let (machine, state) = reduce_pointed(t, q);
        Pointed { machine, state }
    }

    fn key(&self) -> MorphKey {
        canonical_key(&self.machine, self.state)
    }

    /// The composite `self` after `inner`, reduced.
    fn after(&self, inner: &Pointed) -> Result<Pointed> {
        let prod = product(&self.machine, &inner.machine)?;
        let pair = pair_state(&self.machine, &inner.machine, self.state, inner.state);
        Ok(Pointed::of(&prod, pair))
    }
}

/// True when `q`, `q^2`, ..., `q^max_m` are pairwise distinct morphisms,
/// none of them the identity (the empty power counts as a power).
pub fn distinct_powers(t: &Transducer, q: StateId, max_m: u64) -> Result<bool> {
    let t = as_endomorphism(t)?;
    let identity = catalog::identity_transducer(t.k_in());
    let base = Pointed::of(&t, q);
    let mut seen: HashSet<MorphKey> = HashSet::new();
    seen.insert(canonical_key(
        &identity,
        identity.state("id").expect("identity state"),
    ));
    let mut current = base.clone();
    for _ in 0..max_m {
        if !seen.insert(current.key()) {
            return Ok(false);
        }
        current = current.after(&base)?;
    }
    Ok(true)
}

/// Least `m <= bound` with `w^m` the identity morphism, if any. Requires an
/// invertible machine.
pub fn element_order(t: &Transducer, w: &GeneratorWord, bound: u64) -> Result<Option<u64>> {
    let t = as_endomorphism(t)?;
    if t.classify() != TransducerClass::Invertible {
        return Err(Error::NotInvertible);
    }
    let identity = catalog::identity_transducer(t.k_in());
    let id_state = identity.state("id").expect("identity state");
    let (m, q) = realize(&t, w)?;
    let base = Pointed::of(&m, q);
    let mut current = base.clone();
    for power in 1..=bound {
        if morphisms_equal(&current.machine, current.state, &identity, id_state)? {
            return Ok(Some(power));
        }
        current = current.after(&base)?;
    }
    Ok(None)
}

/// Numbers of pairwise distinct morphisms denoted by generator words of
/// length at most `1, 2, ..., max_len`, under the default state budget.
pub fn growth_counts(t: &Transducer, generators: &[StateId], max_len: usize) -> Result<Vec<u64>> {
    growth_counts_with_budget(t, generators, max_len, DEFAULT_STATE_BUDGET)
}

/// Growth census with an explicit cap on built product states.
///
/// Words denoting equal morphisms extend to equal morphisms, so the
/// frontier is deduplicated by canonical machine fingerprints; the census
/// is exact, not sampled.
pub fn growth_counts_with_budget(
    t: &Transducer,
    generators: &[StateId],
    max_len: usize,
    budget: usize,
) -> Result<Vec<u64>> {
    let t = as_endomorphism(t)?;
    let mut built_states = 0usize;
    let mut charge = |amount: usize| -> Result<()> {
        built_states += amount;
        if built_states > budget {
            return Err(Error::ResourceLimit {
                msg: format!("growth census exceeded {budget} product states"),
            });
        }
        Ok(())
    };

    let gens: Vec<Pointed> = generators.iter().map(|&g| Pointed::of(&t, g)).collect();
    let mut known: HashSet<MorphKey> = HashSet::new();
    let mut frontier: HashMap<MorphKey, Pointed> = HashMap::new();
    for g in &gens {
        let key = g.key();
        known.insert(key.clone());
        frontier.insert(key, g.clone());
    }
    let mut counts = vec![known.len() as u64];
    for _ in 1..max_len {
        let mut next: HashMap<MorphKey, Pointed> = HashMap::new();
        for p in frontier.values() {
            for g in &gens {
                charge(p.machine.state_count() * g.machine.state_count())?;
                let extended = p.after(g)?;
                let key = extended.key();
                if known.insert(key.clone()) {
                    next.insert(key, extended);
                }
            }
        }
        counts.push(known.len() as u64);
        frontier = next;
    }
    Ok(counts)
}

/// True when the group generated by the given states of an invertible
/// machine moves the all-zero level word onto the whole level.
pub fn level_transitive(t: &Transducer, generators: &[StateId], n: usize) -> Result<bool> {
    if t.classify() != TransducerClass::Invertible {
        return Err(Error::NotInvertible);
    }
    let level_size = (u64::from(t.k_in()))
        .checked_pow(u32::try_from(n).map_err(|_| Error::Overflow)?)
        .ok_or(Error::Overflow)?;
    if level_size > 10_000_000 {
        return Err(Error::ResourceLimit {
            msg: format!("level of {level_size} words is too large to enumerate"),
        });
    }
    // Forward closure suffices: each generator permutes the finite level,
    // so reachability is symmetric.
    let start = Word::empty(t.k_in())?.padded_to(n)?;
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        for &g in generators {
            let image = t.apply(g, &w)?;
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Ok(seen.len() as u64 == level_size)
}

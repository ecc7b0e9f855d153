//! Bisimulation equivalence of transducer states.
//!
//! Two states define the same tree morphism exactly when they are related
//! by a bisimulation: identical output rows, and transitions landing in
//! related states. The partition refinement below computes the coarsest
//! such partition, which makes morphism equality an exact, machine-sized
//! decision rather than a bounded-depth comparison.

use std::collections::HashMap;

use super::{StateId, Transducer, TransducerBuilder};
use crate::error::{Error, Result};

/// Coarsest bisimulation partition as a class index per state. Classes are
/// numbered by their first member in state order.
pub(crate) fn partition(t: &Transducer) -> Vec<usize> {
    partition_tables(t.k_in() as usize, &collect_tau(t), &collect_pi(t))
}

fn collect_tau(t: &Transducer) -> Vec<Vec<usize>> {
    (0..t.state_count())
        .map(|q| t.tau_row(q).to_vec())
        .collect()
}

fn collect_pi(t: &Transducer) -> Vec<Vec<u8>> {
    (0..t.state_count()).map(|q| t.pi_row(q).to_vec()).collect()
}

fn partition_tables(k: usize, tau: &[Vec<usize>], pi: &[Vec<u8>]) -> Vec<usize> {
    let n = tau.len();
    // Initial split: states with equal output rows.
    let mut class_of = assign_classes(pi.iter().cloned());
    loop {
        let signatures = (0..n).map(|q| {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class_of[q]);
            for x in 0..k {
                sig.push(class_of[tau[q][x]]);
            }
            sig
        });
        let refined = assign_classes(signatures);
        if refined == class_of {
            return class_of;
        }
        class_of = refined;
    }
}

/// Numbers distinct keys by first occurrence.
fn assign_classes<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    let mut out = Vec::new();
    for key in keys {
        let next = ids.len();
        out.push(*ids.entry(key).or_insert(next));
    }
    out
}

/// The bisimulation classes of `t`, each sorted, ordered by smallest member.
pub fn bisimulation_classes(t: &Transducer) -> Vec<Vec<StateId>> {
    let class_of = partition(t);
    let count = class_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); count];
    for (q, &c) in class_of.iter().enumerate() {
        classes[c].push(StateId(q));
    }
    classes
}

/// Decides whether two pointed machines define the same tree morphism, by
/// refining their disjoint union restricted to the reachable parts.
pub fn morphisms_equal(t1: &Transducer, q1: StateId, t2: &Transducer, q2: StateId) -> Result<bool> {
    if t1.k_in() != t2.k_in() || t1.k_out() != t2.k_out() {
        return Err(Error::AlphabetMismatch {
            msg: format!(
                "cannot compare a {}-to-{} morphism with a {}-to-{} morphism",
                t1.k_in(),
                t1.k_out(),
                t2.k_in(),
                t2.k_out()
            ),
        });
    }
    let r1 = t1.reachable_from(q1);
    let r2 = t2.reachable_from(q2);
    let mut pos1 = vec![usize::MAX; t1.state_count()];
    for (i, s) in r1.iter().enumerate() {
        pos1[s.0] = i;
    }
    let mut pos2 = vec![usize::MAX; t2.state_count()];
    for (i, s) in r2.iter().enumerate() {
        pos2[s.0] = r1.len() + i;
    }
    let k = usize::from(t1.k_in());
    let mut tau = Vec::with_capacity(r1.len() + r2.len());
    let mut pi = Vec::with_capacity(r1.len() + r2.len());
    for s in &r1 {
        tau.push(t1.tau_row(s.0).iter().map(|&x| pos1[x]).collect());
        pi.push(t1.pi_row(s.0).to_vec());
    }
    for s in &r2 {
        tau.push(t2.tau_row(s.0).iter().map(|&x| pos2[x]).collect());
        pi.push(t2.pi_row(s.0).to_vec());
    }
    let class_of = partition_tables(k, &tau, &pi);
    Ok(class_of[pos1[q1.0]] == class_of[pos2[q2.0]])
}

/// Canonical fingerprint of the tree morphism defined by a pointed machine.
///
/// Equal keys mean equal morphisms and vice versa: the reachable part is
/// quotiented by bisimulation and renumbered in breadth-first order from
/// the base class, which makes the table independent of state names and of
/// the machine the state came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorphKey {
    k_in: u8,
    k_out: u8,
    /// Concatenated rows of `(target class, output letter)` pairs.
    table: Vec<(u32, u8)>,
}

pub fn canonical_key(t: &Transducer, q: StateId) -> MorphKey {
    let (quot, base, _) = quotient_pointed(t, q);
    debug_assert_eq!(base.0, 0);
    let mut table = Vec::with_capacity(quot.state_count() * usize::from(quot.k_in()));
    for s in 0..quot.state_count() {
        for x in 0..usize::from(quot.k_in()) {
            table.push((quot.tau_row(s)[x] as u32, quot.pi_row(s)[x]));
        }
    }
    MorphKey {
        k_in: quot.k_in(),
        k_out: quot.k_out(),
        table,
    }
}

/// Smallest machine realizing the morphism of `(t, q)`: reachable part,
/// quotiented by bisimulation, states in breadth-first order from `q`.
pub fn reduce_pointed(t: &Transducer, q: StateId) -> (Transducer, StateId) {
    let (quot, base, _) = quotient_pointed(t, q);
    (quot, base)
}

fn quotient_pointed(t: &Transducer, q: StateId) -> (Transducer, StateId, usize) {
    let reach = t.reachable_from(q);
    let mut pos = vec![usize::MAX; t.state_count()];
    for (i, s) in reach.iter().enumerate() {
        pos[s.0] = i;
    }
    let k = usize::from(t.k_in());
    let tau: Vec<Vec<usize>> = reach
        .iter()
        .map(|s| t.tau_row(s.0).iter().map(|&x| pos[x]).collect())
        .collect();
    let pi: Vec<Vec<u8>> = reach.iter().map(|s| t.pi_row(s.0).to_vec()).collect();
    let class_of = partition_tables(k, &tau, &pi);

    // Breadth-first renumbering of classes starting from the base class.
    let mut order: Vec<usize> = Vec::new();
    let mut rank = vec![usize::MAX; class_of.len()];
    let mut repr: Vec<usize> = Vec::new();
    let base_class = class_of[pos[q.0]];
    rank[base_class] = 0;
    order.push(base_class);
    repr.push(pos[q.0]);
    let mut head = 0;
    while head < order.len() {
        let state = repr[head];
        head += 1;
        for x in 0..k {
            let c = class_of[tau[state][x]];
            if rank[c] == usize::MAX {
                rank[c] = order.len();
                order.push(c);
                repr.push(tau[state][x]);
            }
        }
    }

    let mut builder = TransducerBuilder::new(t.k_in(), t.k_out());
    let name = |i: usize| format!("c{i}");
    for i in 0..order.len() {
        builder.state(&name(i));
    }
    for (i, &state) in repr.iter().enumerate() {
        for x in 0..k {
            let target = rank[class_of[tau[state][x]]];
            builder
                .transition(&name(i), x as u8, &name(target), pi[state][x])
                .expect("quotient table is consistent");
        }
    }
    let quot = builder.build().expect("quotient table is total");
    (quot, StateId(0), order.len())
}

//! Level graphs of the three-peg puzzle: vertices are the `3^n` disk
//! configurations of level `n`, and each of the three swap states `a`, `b`,
//! `c` contributes one labeled incidence per vertex. Fixed configurations
//! keep their incidence as an explicit loop, which makes every vertex
//! exactly 3-regular; the loops sit at the three single-peg corners.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::automata::catalog;
use crate::error::{Error, Result};
use crate::words::Word;

/// Default cap on the level, overridable per call site.
pub const DEFAULT_MAX_LEVEL: usize = 9;

/// The three edge labels, in fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    A,
    B,
    C,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::A, Generator::B, Generator::C];

    pub fn label(self) -> &'static str {
        match self {
            Generator::A => "a",
            Generator::B => "b",
            Generator::C => "c",
        }
    }
}

/// Immutable level-`n` graph. Vertices are numbered by reading their words
/// as base-3 numbers with the first letter most significant, so vertex ids
/// follow lexicographic word order.
#[derive(Debug, Clone)]
pub struct SchreierGraph {
    level: usize,
    /// `adj[v][g]` is the unique `g`-neighbor of `v` (possibly `v` itself).
    adj: Vec<[u32; 3]>,
}

/// Builds the level-`n` graph under the default level cap.
pub fn schreier_graph(n: usize) -> Result<SchreierGraph> {
    schreier_graph_with_limit(n, DEFAULT_MAX_LEVEL)
}

/// Builds the level-`n` graph, refusing levels above `max_level`.
pub fn schreier_graph_with_limit(n: usize, max_level: usize) -> Result<SchreierGraph> {
    if n < 1 {
        return Err(Error::IndexOutOfRange { index: 0, bound: 1 });
    }
    if n > max_level {
        return Err(Error::ResourceLimit {
            msg: format!("level {n} exceeds the configured maximum {max_level}"),
        });
    }
    // A raised maximum still has to fit in memory.
    let count = 3usize
        .checked_pow(u32::try_from(n).map_err(|_| Error::Overflow)?)
        .filter(|&c| c <= 100_000_000)
        .ok_or_else(|| Error::ResourceLimit {
            msg: format!("level {n} has too many vertices to build"),
        })?;
    let ah = catalog::ah();
    let states = [
        ah.state("a").expect("catalog state"),
        ah.state("b").expect("catalog state"),
        ah.state("c").expect("catalog state"),
    ];
    let mut adj = vec![[0u32; 3]; count];
    for (v, row) in adj.iter_mut().enumerate() {
        let word = word_of_index(v, n);
        for (g, &q) in states.iter().enumerate() {
            let image = ah.apply(q, &word).expect("level words are valid input");
            row[g] = index_of_word(&image) as u32;
        }
    }
    Ok(SchreierGraph { level: n, adj })
}

fn word_of_index(v: usize, n: usize) -> Word {
    let mut letters = vec![0u8; n];
    let mut v = v;
    for pos in (0..n).rev() {
        letters[pos] = (v % 3) as u8;
        v /= 3;
    }
    Word::new(letters, 3).expect("letters below 3")
}

fn index_of_word(w: &Word) -> usize {
    w.letters()
        .iter()
        .fold(0usize, |acc, &l| acc * 3 + usize::from(l))
}

impl SchreierGraph {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertex_word(&self, v: usize) -> Word {
        word_of_index(v, self.level)
    }

    /// Vertex id of a level word.
    pub fn vertex_id(&self, w: &Word) -> Result<usize> {
        if w.len() != self.level || w.alphabet_size() != 3 {
            return Err(Error::LengthError {
                len: w.len(),
                target: self.level,
            });
        }
        Ok(index_of_word(w))
    }

    pub fn neighbor(&self, v: usize, g: Generator) -> usize {
        self.adj[v][g as usize] as usize
    }

    /// Labeled edges with `u <= v`, vertices in lexicographic word order and
    /// labels in order `a`, `b`, `c`. Loops appear once.
    pub fn edges(&self) -> Vec<(usize, usize, Generator)> {
        let mut out = Vec::with_capacity(self.adj.len() * 3 / 2);
        for u in 0..self.adj.len() {
            for g in Generator::ALL {
                let v = self.neighbor(u, g);
                if u <= v {
                    out.push((u, v, g));
                }
            }
        }
        out
    }

    /// Breadth-first distances from `src` to every vertex.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for g in Generator::ALL {
                let v = self.neighbor(u, g);
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Deterministic Graphviz text: one node per vertex named by its word,
    /// one undirected edge per labeled incidence pair, loops included.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph level{} {{", self.level).unwrap();
        for v in 0..self.adj.len() {
            writeln!(out, "  \"{}\";", self.vertex_word(v)).unwrap();
        }
        for (u, v, g) in self.edges() {
            writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}\"];",
                self.vertex_word(u),
                self.vertex_word(v),
                g.label()
            )
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// Shortest-path distance between two level-`n` configuration words.
pub fn bfs_distance(n: usize, c1: &Word, c2: &Word) -> Result<u64> {
    let graph = schreier_graph(n)?;
    let src = graph.vertex_id(c1)?;
    let dst = graph.vertex_id(c2)?;
    let d = graph.bfs_distances(src)[dst];
    debug_assert_ne!(d, u32::MAX, "level graphs are connected");
    Ok(u64::from(d))
}

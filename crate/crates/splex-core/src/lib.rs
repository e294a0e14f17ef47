//! Core library for s-plex cluster vertex deletion.
//!
//! An s-plex is a graph in which every vertex is adjacent to all but at most
//! s−1 of the other vertices (a 1-plex is a clique); an s-plex cluster graph
//! is a graph whose connected components are all s-plexes. The vertex
//! deletion problem asks for at most k vertices whose removal leaves an
//! s-plex cluster graph.
//!
//! The crate provides:
//! - [`graph`]: the undirected graph representation and the s-plex predicates,
//! - [`fisg`]: detection and enumeration of the forbidden induced subgraphs
//!   that characterize s-plex cluster graphs,
//! - [`kernel`]: a kernelization pipeline reducing an instance to an
//!   equivalent one with O(k²s³) vertices (at most 40k²+24k for s=2),
//! - [`solver`]: bounded branching, a brute-force oracle, solution lifting
//!   and verification, and a hitting-set export,
//! - [`gen`]: deterministic seeded generators for planted and random
//!   instances.
//!
//! Everything is deterministic: sets iterate in ascending vertex id order and
//! identical inputs produce identical results.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod fisg;
pub mod gen;
pub mod graph;
pub mod kernel;
pub mod solver;

pub use error::Error;
pub use graph::{Graph, VertexSet};

/// a problem instance: graph plus deletion budget k and plex parameter s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: u32,
    pub s: u32,
}

impl Instance {
    pub fn new(graph: Graph, k: u32, s: u32) -> Self {
        Instance { graph, k, s }
    }

    /// FNV-1a digest over (s, k, vertices, edges); ties a Solution to the
    /// instance it was produced for.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut eat = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(PRIME);
            }
        };
        eat(u64::from(self.s));
        eat(u64::from(self.k));
        for v in self.graph.vertices() {
            eat(u64::from(v));
        }
        for (u, v) in self.graph.edges() {
            eat(u64::from(u) << 32 | u64::from(v));
        }
        h
    }
}

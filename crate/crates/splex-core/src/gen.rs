//! Seeded instance generation: planted yes-instances and random graphs.
//!
//! All randomness flows through ChaCha8 seeded with a caller-supplied 64-bit
//! value, and every derived quantity (integer ranges, probabilities) is
//! computed with the explicit formulas below, so identical inputs reproduce
//! identical graphs on any platform or implementation.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::Instance;

/// recipe for a planted instance: disjoint s-plex clusters plus noise
/// vertices wired randomly into them.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub seed: u64,
    pub s: u32,
    pub cluster_sizes: Vec<u32>,
    /// per-cluster count of intra-cluster edges to remove; each removal must
    /// keep every cluster vertex at degree ≥ |cluster| − s.
    pub intra_missing: u32,
    pub noise_vertices: u32,
    /// probability of an edge between each noise vertex and each cluster vertex.
    pub noise_edge_prob: f64,
}

/// uniform draw from 0..n (n > 0).
fn rng_index(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// uniform draw from [0, 1): the top 53 bits of one 64-bit output.
fn rng_unit(rng: &mut ChaCha8Rng) -> f64 {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    (rng.next_u64() >> 11) as f64 * SCALE
}

/// builds the planted instance described by `spec` and returns it with the
/// planted solution (the noise vertices). Deleting the planted set leaves
/// the disjoint clusters, each an s-plex, so the instance is a yes-instance
/// for k = noise_vertices by construction.
pub fn generate(spec: &GenSpec) -> Result<(Instance, VertexSet), Error> {
    assert!(spec.s >= 1, "plex parameter must be at least 1");
    assert!(
        (0.0..=1.0).contains(&spec.noise_edge_prob),
        "noise_edge_prob must lie in [0, 1]"
    );
    assert!(
        spec.cluster_sizes.iter().all(|&c| c >= 1),
        "cluster sizes must be positive"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut g = Graph::new();
    let mut next_id: u32 = 0;

    for (ci, &c) in spec.cluster_sizes.iter().enumerate() {
        let ids: Vec<u32> = (next_id..next_id + c).collect();
        next_id += c;
        for &v in &ids {
            g.add_vertex(v);
        }
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                g.add_edge(ids[i], ids[j]);
            }
        }
        // remove intra_missing edges, greedily rejecting any removal that
        // would push an endpoint below degree |cluster| − s (i.e. any vertex
        // may lose at most s − 1 incident edges).
        let mut lost: Vec<u32> = Vec::new();
        lost.resize(ids.len(), 0);
        for _ in 0..spec.intra_missing {
            let mut candidates: Vec<(usize, usize)> = Vec::new();
            for i in 0..ids.len() {
                for j in i + 1..ids.len() {
                    if g.has_edge(ids[i], ids[j]) && lost[i] < spec.s - 1 && lost[j] < spec.s - 1 {
                        candidates.push((i, j));
                    }
                }
            }
            if candidates.is_empty() {
                return Err(Error::UnsatisfiableSpec(format!(
                    "cluster {ci} (size {c}) cannot lose {} edges and stay a {}-plex",
                    spec.intra_missing, spec.s
                )));
            }
            let (i, j) = candidates[rng_index(&mut rng, candidates.len())];
            g.remove_edge(ids[i], ids[j]);
            lost[i] += 1;
            lost[j] += 1;
        }
    }

    let cluster_total = next_id;
    let planted: VertexSet = (cluster_total..cluster_total + spec.noise_vertices).collect();
    for &v in &planted {
        g.add_vertex(v);
        for u in 0..cluster_total {
            if rng_unit(&mut rng) < spec.noise_edge_prob {
                g.add_edge(u, v);
            }
        }
    }

    debug_assert!(g.is_splex_cluster_graph_without(&planted, spec.s));
    Ok((Instance::new(g, spec.noise_vertices, spec.s), planted))
}

/// Erdős–Rényi-style graph on vertices 0..n: each pair (u, v) with u < v,
/// visited in lexicographic order, gets an edge with probability edge_prob.
pub fn random_graph(seed: u64, n: u32, edge_prob: f64) -> Graph {
    assert!((0.0..=1.0).contains(&edge_prob), "edge_prob must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng_unit(&mut rng) < edge_prob {
                g.add_edge(u, v);
            }
        }
    }
    g
}

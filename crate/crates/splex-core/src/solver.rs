//! Exact solvers, solution lifting and verification, and hitting-set export.
//!
//! `solve_branching` is the search-tree solver: it repeatedly finds a
//! minimized witness subgraph and branches on deleting each of its vertices.
//! `solve` composes kernelization with branching and lifts the kernel
//! solution back to the original instance. `brute_force_decide` is the
//! independent subset-enumeration oracle the test suite measures everything
//! against.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::Error;
use crate::fisg::{enumerate_minimal_fisgs, find_fisg, minimize_fisg};
use crate::graph::{Graph, VertexSet};
use crate::kernel::{kernelize, KernelResult, KernelStatus, TraceEntry};
use crate::Instance;

/// a deletion set bound to the instance it solves via its fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub vertices: VertexSet,
    pub valid_for: u64,
}

/// true iff sol is a valid solution: contained in V, within budget, and
/// leaving an s-plex cluster graph behind.
pub fn verify_solution(inst: &Instance, sol: &VertexSet) -> bool {
    sol.len() <= inst.k as usize
        && sol.iter().all(|&v| inst.graph.contains(v))
        && inst.graph.is_splex_cluster_graph_without(sol, inst.s)
}

/// search-tree solver: branch over deleting each vertex of a minimized
/// witness, depth-bounded by k. Branch order is ascending vertex id, so the
/// returned solution is deterministic. Requires s ≥ 1.
pub fn solve_branching(inst: &Instance) -> Option<Solution> {
    assert!(inst.s >= 1, "plex parameter must be at least 1");
    branch(&inst.graph, inst.k, inst.s).map(|vertices| Solution {
        vertices,
        valid_for: inst.fingerprint(),
    })
}

fn branch(g: &Graph, budget: u32, s: u32) -> Option<VertexSet> {
    let Some(found) = find_fisg(g, s) else {
        return Some(VertexSet::new());
    };
    if budget == 0 {
        return None;
    }
    let witness = minimize_fisg(g, &found, s).expect("finder output is a valid witness");
    debug_assert!(witness.vertices.len() as u32 <= if s == 2 { 4 } else { 2 * s + 1 });
    for &v in &witness.vertices {
        let mut h = g.clone();
        h.remove_vertex(v);
        if let Some(mut rest) = branch(&h, budget - 1, s) {
            rest.insert(v);
            return Some(rest);
        }
    }
    None
}

/// largest graph the brute-force oracle accepts.
pub const BRUTE_FORCE_CAP: usize = 16;

/// independent oracle: enumerates vertex subsets by increasing size (then
/// lexicographically) and returns the first — hence minimum-size — solution
/// of size ≤ k, or nothing. Refuses graphs larger than [`BRUTE_FORCE_CAP`].
pub fn brute_force_decide(inst: &Instance) -> Result<Option<Solution>, Error> {
    assert!(inst.s >= 1, "plex parameter must be at least 1");
    let n = inst.graph.vertex_count();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge { n, cap: BRUTE_FORCE_CAP });
    }
    let vs: Vec<u32> = inst.graph.vertices().collect();
    let mut chosen = VertexSet::new();
    for size in 0..=(inst.k as usize).min(n) {
        if let Some(sol) = combos(&inst.graph, &vs, &mut chosen, size, inst.s) {
            return Ok(Some(Solution { vertices: sol, valid_for: inst.fingerprint() }));
        }
    }
    Ok(None)
}

fn combos(g: &Graph, pool: &[u32], chosen: &mut VertexSet, left: usize, s: u32) -> Option<VertexSet> {
    if left == 0 {
        return g.is_splex_cluster_graph_without(chosen, s).then(|| chosen.clone());
    }
    if pool.len() < left {
        return None;
    }
    for (i, &v) in pool.iter().enumerate() {
        chosen.insert(v);
        let hit = combos(g, &pool[i + 1..], chosen, left - 1, s);
        chosen.remove(&v);
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// full pipeline: for s ≥ 2 kernelize, solve the kernel by branching, and
/// lift the kernel solution back; for s = 1 branch directly. Every returned
/// solution is verified against the input instance.
pub fn solve(inst: &Instance) -> Result<Option<Solution>, Error> {
    match inst.s {
        0 => Err(Error::PlexParamZero),
        1 => {
            let Some(sol) = solve_branching(inst) else {
                return Ok(None);
            };
            if !verify_solution(inst, &sol.vertices) {
                return Err(Error::Internal("branching produced an invalid solution"));
            }
            Ok(Some(sol))
        }
        _ => {
            let kr = kernelize(inst)?;
            if kr.status == KernelStatus::NoInstance {
                return Ok(None);
            }
            let Some(sub) = solve_branching(&kr.reduced) else {
                return Ok(None);
            };
            let lifted = lift_solution(&kr, &sub, inst)?;
            Ok(Some(lifted))
        }
    }
}

/// replays the kernelization trace in reverse to turn a solution of the
/// reduced instance into one of the original instance.
///
/// Rule-1 vertices are re-inserted. Rule-2 and rule-3 removals need no
/// change — the kernel solution already works for the larger graph. For a
/// rule-4 entry the kernel solution works unless it leaves some recorded
/// component–solution edge intact; in that case the component's kept part
/// is swapped out for its marked part, which destroys the whole boundary
/// and never enlarges the set. The result is verified against the original
/// instance; failure signals an implementation bug.
pub fn lift_solution(
    kernel: &KernelResult,
    s_kernel: &Solution,
    original: &Instance,
) -> Result<Solution, Error> {
    if s_kernel.valid_for != kernel.reduced.fingerprint()
        || !verify_solution(&kernel.reduced, &s_kernel.vertices)
    {
        return Err(Error::InvalidSolution);
    }
    let mut sol = s_kernel.vertices.clone();
    for entry in kernel.trace.iter().rev() {
        match entry {
            TraceEntry::Trivial { vertices } => {
                sol.extend(vertices.iter().copied());
            }
            TraceEntry::Rule1 { vertex } => {
                sol.insert(*vertex);
            }
            TraceEntry::Rule2 { .. } | TraceEntry::Rule3 { .. } => {}
            TraceEntry::Rule4 { in_m, kept, boundary, .. } => {
                let destroyed =
                    boundary.iter().all(|(h, x)| sol.contains(h) || sol.contains(x));
                if !destroyed {
                    sol = sol.difference(kept).copied().collect();
                    sol.extend(in_m.iter().copied());
                }
            }
        }
    }
    if !verify_solution(original, &sol) {
        return Err(Error::Internal("lifted solution failed verification"));
    }
    Ok(Solution { vertices: sol, valid_for: original.fingerprint() })
}

/// a hitting-set view of an instance: ground set V, one set per minimal
/// witness subgraph of bounded size, and the unchanged budget. `complete`
/// is true when hitting all exported sets is equivalent to solving the
/// instance (guaranteed once max_size covers every minimal witness some
/// graph can force: 4 for s = 2, 2s + 1 otherwise).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub ground: VertexSet,
    pub sets: Vec<VertexSet>,
    pub k: u32,
    pub complete: bool,
}

impl HittingSetInstance {
    /// text form: header "h <|V|> <|sets|> <k>", then one line of
    /// space-separated vertex ids per set.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "h {} {} {}", self.ground.len(), self.sets.len(), self.k).unwrap();
        for set in &self.sets {
            let mut first = true;
            for v in set {
                if !first {
                    out.push(' ');
                }
                write!(out, "{v}").unwrap();
                first = false;
            }
            out.push('\n');
        }
        out
    }
}

/// exports all minimal witness subgraphs of at most max_size vertices as a
/// hitting-set instance.
pub fn export_hitting_set(inst: &Instance, max_size: u32) -> Result<HittingSetInstance, Error> {
    let fisgs = enumerate_minimal_fisgs(&inst.graph, inst.s, max_size)?;
    let sets = fisgs.into_iter().map(|f| f.vertices).collect();
    let complete = max_size >= if inst.s == 2 { 4 } else { 2 * inst.s + 1 };
    Ok(HittingSetInstance {
        ground: inst.graph.vertex_set(),
        sets,
        k: inst.k,
        complete,
    })
}

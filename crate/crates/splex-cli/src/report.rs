//! JSON report emitted by the kernelize command.
//!
//! The reduced graph is re-labeled to dense ids 0..n'−1 so downstream tools
//! can consume it like any other graph; `id_map[i]` recovers the original id
//! of new vertex i. Everything else (forced vertices, trace) speaks original
//! ids, since that is what lifting and human inspection need.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use splex_core::kernel::{KernelResult, KernelStatus, TraceEntry};
use splex_core::{Instance, VertexSet};

#[derive(Debug, Serialize, Deserialize)]
pub struct KernelReport {
    /// "reduced" or "no_instance".
    pub status: String,
    pub s: u32,
    pub k_in: u32,
    pub k_out: u32,
    /// vertices every solution must contain, ascending original ids.
    pub forced: Vec<u32>,
    pub reduced_graph: ReducedGraph,
    pub trace: Vec<TraceRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReducedGraph {
    pub n: u32,
    /// edges over the dense ids, each [u, v] with u < v, ascending.
    pub edges: Vec<[u32; 2]>,
    /// id_map[i] = original id of dense vertex i; ascending by construction.
    pub id_map: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TraceRecord {
    /// "trivial" or "rule1".."rule4".
    pub rule: String,
    /// set for rule1 only; null otherwise.
    pub removed_vertex: Option<u32>,
    /// per-rule payload in original ids.
    pub details: Value,
}

fn ids(set: &VertexSet) -> Vec<u32> {
    set.iter().copied().collect()
}

fn record(entry: &TraceEntry) -> TraceRecord {
    let (rule, removed_vertex, details) = match entry {
        TraceEntry::Trivial { vertices } => {
            ("trivial", None, json!({ "vertices": ids(vertices) }))
        }
        TraceEntry::Rule1 { vertex } => ("rule1", Some(*vertex), json!({})),
        TraceEntry::Rule2 { component } => {
            ("rule2", None, json!({ "component": ids(component) }))
        }
        TraceEntry::Rule3 { component, removed } => (
            "rule3",
            None,
            json!({ "component": ids(component), "removed": ids(removed) }),
        ),
        TraceEntry::Rule4 { in_m, kept, removed, boundary } => (
            "rule4",
            None,
            json!({
                "in_m": ids(in_m),
                "kept": ids(kept),
                "removed": ids(removed),
                "boundary": boundary,
            }),
        ),
    };
    TraceRecord { rule: rule.to_string(), removed_vertex, details }
}

/// assembles the report for a finished kernelization of `inst`.
pub fn build_report(inst: &Instance, result: &KernelResult) -> KernelReport {
    let originals: Vec<u32> = result.reduced.graph.vertices().collect();
    let dense: std::collections::BTreeMap<u32, u32> = originals
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    // original ids are processed ascending, so the relabeling is monotone and
    // the relabeled edge list stays sorted with u < v.
    let edges: Vec<[u32; 2]> = result
        .reduced
        .graph
        .edges()
        .into_iter()
        .map(|(u, v)| [dense[&u], dense[&v]])
        .collect();

    KernelReport {
        status: match result.status {
            KernelStatus::Reduced => "reduced".to_string(),
            KernelStatus::NoInstance => "no_instance".to_string(),
        },
        s: inst.s,
        k_in: inst.k,
        k_out: result.reduced.k,
        forced: ids(&result.forced),
        reduced_graph: ReducedGraph {
            n: originals.len() as u32,
            edges,
            id_map: originals,
        },
        trace: result.trace.iter().map(record).collect(),
    }
}

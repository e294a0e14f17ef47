//! The kernelization pipeline for s-plex cluster vertex deletion (s ≥ 2).
//!
//! Given an instance (G, k, s), the pipeline computes a constant-factor
//! approximate solution X, builds a peripheral vertex set M around it, and
//! then applies four data reduction rules in a fixed order. Every step is
//! recorded in a trace so that a solution of the reduced instance can be
//! lifted back to the original graph (see the solver module).
//!
//! The stages are exposed individually through [`Kernelizer`] so tests and
//! experiments can run any prefix of the pipeline and inspect intermediate
//! state; [`kernelize`] runs the whole pipeline.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::fisg::find_fisg;
use crate::graph::{Graph, VertexSet};
use crate::Instance;

/// a solution X together with the components of G − X.
///
/// Each component induces an s-plex; construction fails otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub x: VertexSet,
    pub components: Vec<VertexSet>,
    pub membership: BTreeMap<u32, usize>,
}

impl Partition {
    pub fn new(g: &Graph, x: &VertexSet, s: u32) -> Result<Self, Error> {
        if s == 0 {
            return Err(Error::PlexParamZero);
        }
        for &v in x {
            if !g.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        if !g.is_splex_cluster_graph_without(x, s) {
            return Err(Error::NotAClusterGraph);
        }
        let components = g.components_without(x);
        let mut membership = BTreeMap::new();
        for (i, comp) in components.iter().enumerate() {
            for &v in comp {
                membership.insert(v, i);
            }
        }
        Ok(Partition { x: x.clone(), components, membership })
    }

    pub fn component_of(&self, v: u32) -> Option<usize> {
        self.membership.get(&v).copied()
    }
}

/// per-solution-vertex witness sets M(v) and their union M.
///
/// Each phase firing of the construction charges one witness subgraph to v
/// and adds at most 2s vertices, so |M(v)| ≤ 2s · fisg_count(v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeripheralSet {
    pub per_vertex: BTreeMap<u32, VertexSet>,
    pub fisg_count: BTreeMap<u32, u32>,
    pub union: VertexSet,
}

impl PeripheralSet {
    /// drops v's entry (when v leaves the solution) and rebuilds the union.
    fn remove_vertex(&mut self, v: u32) {
        self.per_vertex.remove(&v);
        self.fisg_count.remove(&v);
        self.union = self.per_vertex.values().flatten().copied().collect();
    }
}

/// the redundant subset R(H) of one component, with the classification sets
/// the construction derives it from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedundantSet {
    pub component: usize,
    pub r: VertexSet,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

/// one recorded rule application, carrying what the lifting step needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEntry {
    /// the budget covered every vertex, so the whole graph was removed;
    /// lifting turns a solution of the empty kernel into this vertex set.
    Trivial { vertices: VertexSet },
    /// v was forced into every solution; k was decremented.
    Rule1 { vertex: u32 },
    /// an entire component without edges to X was removed.
    Rule2 { component: VertexSet },
    /// lowest-id members of the redundant set were removed.
    Rule3 { component: VertexSet, removed: VertexSet },
    /// a component whose part outside M is nonadjacent to X was shrunk;
    /// `boundary` holds the edges between the component and X at that time.
    Rule4 {
        in_m: VertexSet,
        kept: VertexSet,
        removed: VertexSet,
        boundary: Vec<(u32, u32)>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelStatus {
    Reduced,
    /// the pipeline proved (G, k) has no solution of size ≤ k.
    NoInstance,
}

/// outcome of the pipeline: the reduced instance, the vertices every
/// solution must contain, and the replayable trace.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelResult {
    pub reduced: Instance,
    pub forced: VertexSet,
    pub trace: Vec<TraceEntry>,
    pub status: KernelStatus,
}

/// greedily collects vertex-disjoint witness subgraphs and returns the union
/// of their vertices. The result X always satisfies: G − X is an s-plex
/// cluster graph. If `stop_after` is given, the search stops once that many
/// disjoint witnesses were found and the second component is true — each
/// witness costs at least one deletion, so `stop_after = k + 1` witnesses
/// prove a no-instance.
pub fn approx_solution(g: &Graph, s: u32, stop_after: Option<u32>) -> (VertexSet, bool) {
    assert!(s >= 1, "plex parameter must be at least 1");
    let mut work = g.clone();
    let mut x = VertexSet::new();
    let mut found = 0u32;
    loop {
        let Some(f) = find_fisg(&work, s) else {
            return (x, false);
        };
        work.remove_vertices(&f.vertices);
        x.extend(f.vertices);
        found += 1;
        if stop_after == Some(found) {
            return (x, true);
        }
    }
}

fn check_plex_param(s: u32) -> Result<(), Error> {
    match s {
        0 => Err(Error::PlexParamZero),
        1 => Err(Error::UnsupportedPlexParam(1)),
        _ => Ok(()),
    }
}

/// builds M(v) for every v ∈ x by firing three witness-collection phases to
/// exhaustion, in ascending vertex order. Requires s ≥ 2 and that G − x is
/// an s-plex cluster graph.
pub fn build_peripheral_set(g: &Graph, x: &VertexSet, s: u32) -> Result<PeripheralSet, Error> {
    check_plex_param(s)?;
    let partition = Partition::new(g, x, s)?;
    let mut per_vertex = BTreeMap::new();
    let mut fisg_count = BTreeMap::new();
    for &v in x {
        let mut m = VertexSet::new();
        let mut count = 0u32;
        phase1(g, x, s, v, &mut m, &mut count);
        phase2(g, s, v, &partition, &mut m, &mut count);
        if s == 2 {
            phase3_two(g, x, v, &partition, &mut m, &mut count);
        } else {
            phase3_general(g, x, s, v, &partition, &mut m, &mut count);
        }
        debug_assert!(m.iter().all(|u| !x.contains(u)));
        debug_assert!(m.len() as u32 <= 2 * s * count);
        per_vertex.insert(v, m);
        fisg_count.insert(v, count);
    }
    let union = per_vertex.values().flatten().copied().collect();
    Ok(PeripheralSet { per_vertex, fisg_count, union })
}

/// neighbors of v available for marking: N(v) ∖ (X ∪ M(v)), ascending.
fn available_neighbors(g: &Graph, x: &VertexSet, m: &VertexSet, v: u32) -> Vec<u32> {
    g.neighbors(v)
        .expect("solution vertex exists")
        .iter()
        .copied()
        .filter(|u| !x.contains(u) && !m.contains(u))
        .collect()
}

/// while some available neighbor u of v is nonadjacent to s other available
/// neighbors, those s + 1 vertices form a witness with v; mark them.
fn phase1(g: &Graph, x: &VertexSet, s: u32, v: u32, m: &mut VertexSet, count: &mut u32) {
    'fire: loop {
        let avail = available_neighbors(g, x, m, v);
        for &u in &avail {
            let nonadj: Vec<u32> =
                avail.iter().copied().filter(|&t| t != u && !g.has_edge(u, t)).collect();
            if nonadj.len() >= s as usize {
                m.insert(u);
                m.extend(nonadj.into_iter().take(s as usize));
                *count += 1;
                continue 'fire;
            }
        }
        return;
    }
}

/// while some component H holds an available neighbor u of v and 2s − 2
/// available non-neighbors of v, those vertices plus v form a witness.
fn phase2(
    g: &Graph,
    s: u32,
    v: u32,
    partition: &Partition,
    m: &mut VertexSet,
    count: &mut u32,
) {
    let need = 2 * s as usize - 2;
    'fire: loop {
        for comp in &partition.components {
            let hm: Vec<u32> = comp.iter().copied().filter(|u| !m.contains(u)).collect();
            let Some(&u) = hm.iter().find(|&&u| g.has_edge(v, u)) else {
                continue;
            };
            let nonadj: Vec<u32> = hm.iter().copied().filter(|&w| !g.has_edge(v, w)).collect();
            if nonadj.len() >= need {
                m.insert(u);
                m.extend(nonadj.into_iter().take(need));
                *count += 1;
                continue 'fire;
            }
        }
        return;
    }
}

/// s = 2 cross-component phase: once phases 1–2 are exhausted, two distinct
/// components can hold available neighbors of v only if exactly two
/// available neighbors u, w remain; any further neighbor t of u or w outside
/// X ∪ M(v) completes a witness {v, u, w, t}.
fn phase3_two(
    g: &Graph,
    x: &VertexSet,
    v: u32,
    partition: &Partition,
    m: &mut VertexSet,
    count: &mut u32,
) {
    loop {
        let avail = available_neighbors(g, x, m, v);
        if avail.len() != 2 {
            return;
        }
        let (u, w) = (avail[0], avail[1]);
        if partition.component_of(u) == partition.component_of(w) {
            return;
        }
        let t = g
            .neighbors(u)
            .unwrap()
            .iter()
            .chain(g.neighbors(w).unwrap())
            .copied()
            .filter(|&t| !x.contains(&t) && !m.contains(&t) && t != u && t != w)
            .min();
        let Some(t) = t else {
            return;
        };
        m.extend([u, w, t]);
        *count += 1;
    }
}

/// general cross-component phase: a component W with at least 2s − 1
/// available vertices and an available neighbor w of v, combined with an
/// available neighbor u of v from a different component, yields a witness
/// of 2s marked vertices.
fn phase3_general(
    g: &Graph,
    x: &VertexSet,
    s: u32,
    v: u32,
    partition: &Partition,
    m: &mut VertexSet,
    count: &mut u32,
) {
    'fire: loop {
        for (wi, comp) in partition.components.iter().enumerate() {
            let wm: Vec<u32> = comp.iter().copied().filter(|u| !m.contains(u)).collect();
            if wm.len() < 2 * s as usize - 1 {
                continue;
            }
            let Some(&w) = wm.iter().find(|&&w| g.has_edge(v, w)) else {
                continue;
            };
            let u = available_neighbors(g, x, m, v)
                .into_iter()
                .find(|&u| partition.component_of(u) != Some(wi));
            let Some(u) = u else {
                continue;
            };
            let others: Vec<u32> =
                wm.iter().copied().filter(|&t| t != w).take(2 * s as usize - 2).collect();
            m.insert(u);
            m.insert(w);
            m.extend(others);
            *count += 1;
            continue 'fire;
        }
        return;
    }
}

/// checks the three defining conditions of a peripheral set: for every
/// v ∈ x, (1) at most s components have vertices outside m adjacent to v,
/// (2) v is nonadjacent to at most 2s − 3 outside-m vertices of any such
/// component, and (3) if more than one such component exists, each has at
/// most 2s − 2 vertices outside m.
pub fn is_peripheral(g: &Graph, x: &VertexSet, m: &VertexSet, s: u32) -> Result<bool, Error> {
    check_plex_param(s)?;
    let partition = Partition::new(g, x, s)?;
    for &v in x {
        let adjacent: Vec<&VertexSet> = partition
            .components
            .iter()
            .filter(|h| h.iter().any(|u| !m.contains(u) && g.has_edge(v, *u)))
            .collect();
        if adjacent.len() > s as usize {
            return Ok(false);
        }
        for h in &adjacent {
            let nonadj = h.iter().filter(|u| !m.contains(u) && !g.has_edge(v, **u)).count();
            if nonadj > 2 * s as usize - 3 {
                return Ok(false);
            }
        }
        if adjacent.len() > 1 {
            for h in &adjacent {
                if h.iter().filter(|u| !m.contains(u)).count() > 2 * s as usize - 2 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// classifies one component H against the solution and the set m:
/// A has a non-neighbor inside H ∩ m, B has a non-neighbor among the
/// X-vertices adjacent to H ∖ m, C has a non-neighbor inside B, and
/// R = H ∖ (A ∪ B ∪ C ∪ (H ∩ m)) is redundant.
pub fn build_redundant_set(
    g: &Graph,
    partition: &Partition,
    m: &VertexSet,
    component: usize,
) -> RedundantSet {
    let h = &partition.components[component];
    let x = &partition.x;
    let h_in_m: VertexSet = h.intersection(m).copied().collect();
    let nx: VertexSet = x
        .iter()
        .copied()
        .filter(|&xv| {
            g.neighbors(xv).unwrap().iter().any(|u| h.contains(u) && !m.contains(u))
        })
        .collect();
    let a: VertexSet = h
        .iter()
        .copied()
        .filter(|&u| h_in_m.iter().any(|&w| w != u && !g.has_edge(u, w)))
        .collect();
    let b: VertexSet = h
        .iter()
        .copied()
        .filter(|&u| nx.iter().any(|&w| !g.has_edge(u, w)))
        .collect();
    let c: VertexSet = h
        .iter()
        .copied()
        .filter(|&u| b.iter().any(|&w| w != u && !g.has_edge(u, w)))
        .collect();
    let mut r = h.clone();
    for out in [&a, &b, &c, &h_in_m] {
        r = r.difference(out).copied().collect();
    }
    debug_assert_eq!(is_redundant(g, x, &r, h), Ok(true));
    RedundantSet { component, r, a, b, c }
}

/// decides whether r is a redundant subset of the component h: the witness
/// set Z₀ = r ∪ {w ∈ h : some u ∈ r is nonadjacent to w} must have all
/// members agreeing on their neighborhood inside x. Any valid witness set
/// must contain Z₀, and members with differing X-neighborhoods can never be
/// repaired by adding more vertices, so checking Z₀ decides the question.
pub fn is_redundant(g: &Graph, x: &VertexSet, r: &VertexSet, h: &VertexSet) -> Result<bool, Error> {
    if !r.is_subset(h) {
        return Err(Error::NotASubset);
    }
    if r.is_empty() {
        return Ok(true);
    }
    let mut z0 = r.clone();
    for &w in h {
        if r.iter().any(|&u| u != w && !g.has_edge(u, w)) {
            z0.insert(w);
        }
    }
    let mut shared: Option<VertexSet> = None;
    for &u in &z0 {
        let nu: VertexSet =
            g.neighbors(u)?.iter().copied().filter(|t| x.contains(t)).collect();
        match &shared {
            None => shared = Some(nu),
            Some(sig) if *sig != nu => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

/// the staged kernelization pipeline. Call the stages in order —
/// `build_peripheral`, `apply_rule1` … `apply_rule4`, `finish` — or any
/// prefix; once the pipeline reaches a verdict early (no-instance, trivial
/// yes), the remaining stages are no-ops.
#[derive(Debug, Clone)]
pub struct Kernelizer {
    g: Graph,
    s: u32,
    k: i64,
    x: VertexSet,
    x_initial_len: usize,
    peripheral: Option<PeripheralSet>,
    forced: VertexSet,
    trace: Vec<TraceEntry>,
    done: Option<KernelStatus>,
}

impl Kernelizer {
    /// starts the pipeline by computing an approximate solution. Stops early
    /// with a no-instance verdict if k + 1 disjoint witnesses exist or the
    /// approximate solution exceeds c·k (c = 4 for s = 2, else 2s + 1, the
    /// witness-size guarantees of the finder). An empty graph or k ≥ n
    /// short-circuits to a trivial yes-kernel.
    pub fn new(inst: &Instance) -> Result<Self, Error> {
        check_plex_param(inst.s)?;
        let mut kz = Kernelizer {
            g: inst.graph.clone(),
            s: inst.s,
            k: inst.k as i64,
            x: VertexSet::new(),
            x_initial_len: 0,
            peripheral: None,
            forced: VertexSet::new(),
            trace: Vec::new(),
            done: None,
        };
        if kz.g.is_empty() || inst.k as usize >= kz.g.vertex_count() {
            if !kz.g.is_empty() {
                kz.trace.push(TraceEntry::Trivial { vertices: kz.g.vertex_set() });
            }
            kz.g = Graph::new();
            kz.done = Some(KernelStatus::Reduced);
            return Ok(kz);
        }
        let (x, early) = approx_solution(&kz.g, inst.s, Some(inst.k.saturating_add(1)));
        if early {
            kz.done = Some(KernelStatus::NoInstance);
            return Ok(kz);
        }
        let c = if inst.s == 2 { 4 } else { 2 * inst.s as usize + 1 };
        if x.len() > c * inst.k as usize {
            kz.done = Some(KernelStatus::NoInstance);
            return Ok(kz);
        }
        kz.x_initial_len = x.len();
        kz.x = x;
        Ok(kz)
    }

    /// starts the pipeline from a known solution x instead of computing one;
    /// x must make G − x an s-plex cluster graph. No size rejection applies.
    pub fn from_solution(inst: &Instance, x: VertexSet) -> Result<Self, Error> {
        check_plex_param(inst.s)?;
        Partition::new(&inst.graph, &x, inst.s)?;
        Ok(Kernelizer {
            g: inst.graph.clone(),
            s: inst.s,
            k: inst.k as i64,
            x_initial_len: x.len(),
            x,
            peripheral: None,
            forced: VertexSet::new(),
            trace: Vec::new(),
            done: None,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn x(&self) -> &VertexSet {
        &self.x
    }

    /// size of the approximate solution before any rule ran.
    pub fn x_initial_len(&self) -> usize {
        self.x_initial_len
    }

    pub fn current_k(&self) -> i64 {
        self.k
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn peripheral(&self) -> Option<&PeripheralSet> {
        self.peripheral.as_ref()
    }

    pub fn forced(&self) -> &VertexSet {
        &self.forced
    }

    pub fn trace(&self) -> &[TraceEntry] {
        &self.trace
    }

    /// verdict reached so far, if the pipeline already terminated early.
    pub fn verdict(&self) -> Option<KernelStatus> {
        self.done
    }

    pub fn build_peripheral(&mut self) -> Result<(), Error> {
        if self.done.is_some() {
            return Ok(());
        }
        self.peripheral = Some(build_peripheral_set(&self.g, &self.x, self.s)?);
        Ok(())
    }

    /// installs a caller-supplied peripheral set (keys must be solution
    /// vertices, values disjoint from the solution). The witness counts must
    /// be trustworthy: rule 1 deletes vertices based on them.
    pub fn set_peripheral(&mut self, p: PeripheralSet) -> Result<(), Error> {
        if self.done.is_some() {
            return Ok(());
        }
        for (v, mv) in &p.per_vertex {
            if !self.x.contains(v) {
                return Err(Error::UnknownVertex(*v));
            }
            if mv.iter().any(|u| self.x.contains(u)) {
                return Err(Error::OverlappingSets);
            }
            for &u in mv {
                if !self.g.contains(u) {
                    return Err(Error::UnknownVertex(u));
                }
            }
        }
        self.peripheral = Some(p);
        Ok(())
    }

    fn peripheral_ref(&self) -> &PeripheralSet {
        self.peripheral.as_ref().expect("peripheral set must be built before rules 1, 3 and 4")
    }

    /// deletes every solution vertex charged with more than k witnesses that
    /// pairwise share only that vertex — each such witness costs a deletion,
    /// so the vertex itself must be in every size-≤-k solution. Exhaustive;
    /// k drops by one per deletion and going below zero proves a no-instance.
    pub fn apply_rule1(&mut self) {
        if self.done.is_some() {
            return;
        }
        let _ = self.peripheral_ref();
        loop {
            let candidate = self
                .x
                .iter()
                .copied()
                .find(|v| self.peripheral_ref().fisg_count[v] as i64 > self.k);
            let Some(v) = candidate else {
                return;
            };
            self.g.remove_vertex(v);
            self.x.remove(&v);
            self.peripheral.as_mut().unwrap().remove_vertex(v);
            self.forced.insert(v);
            self.trace.push(TraceEntry::Rule1 { vertex: v });
            self.k -= 1;
            if self.k < 0 {
                self.done = Some(KernelStatus::NoInstance);
                return;
            }
        }
    }

    /// removes every component of G − X without an edge to X: such a
    /// component is an isolated s-plex and meets no witness subgraph.
    pub fn apply_rule2(&mut self) {
        if self.done.is_some() {
            return;
        }
        let comps = self.g.components_without(&self.x);
        for comp in comps {
            let adjacent = comp
                .iter()
                .any(|&u| self.g.neighbors(u).unwrap().iter().any(|w| self.x.contains(w)));
            if !adjacent {
                self.g.remove_vertices(&comp);
                self.trace.push(TraceEntry::Rule2 { component: comp });
            }
        }
    }

    /// shrinks each component's redundant set to k + 2s − 1 vertices by
    /// removing lowest-id members (removal from a redundant set keeps it
    /// redundant, so one construction per component suffices).
    pub fn apply_rule3(&mut self) {
        if self.done.is_some() {
            return;
        }
        let peripheral = self.peripheral_ref().clone();
        let partition =
            Partition::new(&self.g, &self.x, self.s).expect("pipeline keeps G − X a cluster graph");
        let cap = self.k + 2 * self.s as i64 - 1;
        for idx in 0..partition.components.len() {
            let rs = build_redundant_set(&self.g, &partition, &peripheral.union, idx);
            if rs.r.len() as i64 > cap {
                let excess = rs.r.len() - cap as usize;
                let removed: VertexSet = rs.r.iter().copied().take(excess).collect();
                self.g.remove_vertices(&removed);
                self.trace.push(TraceEntry::Rule3 {
                    component: partition.components[idx].clone(),
                    removed,
                });
            }
        }
    }

    /// for components whose part outside M has no edge to X, removes
    /// lowest-id outside-M vertices until at most |H ∩ M| + 2s − 3 remain.
    /// The recorded boundary edges let the lifting step decide whether a
    /// kernel solution must be swapped to one containing H ∩ M.
    pub fn apply_rule4(&mut self) {
        if self.done.is_some() {
            return;
        }
        let m = self.peripheral_ref().union.clone();
        let comps = self.g.components_without(&self.x);
        for comp in comps {
            let outside: VertexSet = comp.iter().copied().filter(|u| !m.contains(u)).collect();
            let adjacent = outside
                .iter()
                .any(|&u| self.g.neighbors(u).unwrap().iter().any(|w| self.x.contains(w)));
            if adjacent {
                continue;
            }
            let in_m: VertexSet = comp.intersection(&m).copied().collect();
            let cap = in_m.len() + 2 * self.s as usize - 3;
            if outside.len() <= cap {
                continue;
            }
            let removed: VertexSet = outside.iter().copied().take(outside.len() - cap).collect();
            let kept: VertexSet = outside.difference(&removed).copied().collect();
            let boundary = self
                .g
                .edges_between(&comp, &self.x)
                .expect("component and solution are disjoint");
            self.g.remove_vertices(&removed);
            self.trace.push(TraceEntry::Rule4 { in_m, kept, removed, boundary });
        }
    }

    /// wraps up the pipeline into a result. For a no-instance the reduced
    /// graph is empty by convention.
    pub fn finish(self) -> KernelResult {
        match self.done {
            Some(KernelStatus::NoInstance) => KernelResult {
                reduced: Instance::new(Graph::new(), 0, self.s),
                forced: self.forced,
                trace: self.trace,
                status: KernelStatus::NoInstance,
            },
            _ => {
                debug_assert!(self.k >= 0);
                KernelResult {
                    reduced: Instance::new(self.g, self.k as u32, self.s),
                    forced: self.forced,
                    trace: self.trace,
                    status: KernelStatus::Reduced,
                }
            }
        }
    }
}

/// runs the full pipeline: approximate solution, peripheral set, then the
/// four rules in order, each exhaustively, in a single pass.
pub fn kernelize(inst: &Instance) -> Result<KernelResult, Error> {
    let mut kz = Kernelizer::new(inst)?;
    kz.build_peripheral()?;
    kz.apply_rule1();
    kz.apply_rule2();
    kz.apply_rule3();
    kz.apply_rule4();
    Ok(kz.finish())
}

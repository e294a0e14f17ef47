//! Forbidden induced subgraphs (FISGs) for s-plex cluster graphs.
//!
//! A graph is an s-plex cluster graph exactly when it contains no connected
//! induced subgraph with a vertex nonadjacent to s of the subgraph's other
//! vertices. Such a subgraph is the witness this module finds, shrinks to a
//! minimal one, and enumerates exhaustively.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// a witness that a graph is not an s-plex cluster graph: the induced
/// subgraph on `vertices` is connected and `center` is nonadjacent to at
/// least s of its members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fisg {
    pub vertices: VertexSet,
    pub center: u32,
    pub non_neighbors: VertexSet,
}

impl Fisg {
    /// checks every structural invariant against the host graph.
    pub fn validate(&self, g: &Graph, s: u32) -> Result<(), Error> {
        if !self.vertices.contains(&self.center) {
            return Err(Error::InvalidFisg("center outside the vertex set"));
        }
        for &v in &self.vertices {
            if !g.contains(v) {
                return Err(Error::InvalidFisg("vertex not in the graph"));
            }
        }
        if !self.non_neighbors.is_subset(&self.vertices) || self.non_neighbors.contains(&self.center) {
            return Err(Error::InvalidFisg("non-neighbors must be other witness members"));
        }
        if (self.non_neighbors.len() as u32) < s {
            return Err(Error::InvalidFisg("fewer than s non-neighbors"));
        }
        for &w in &self.non_neighbors {
            if g.has_edge(self.center, w) {
                return Err(Error::InvalidFisg("center adjacent to a claimed non-neighbor"));
            }
        }
        if !induced_connected(g, &self.vertices) {
            return Err(Error::InvalidFisg("induced subgraph is disconnected"));
        }
        Ok(())
    }
}

/// true iff the subgraph induced by `set` is connected (and nonempty).
fn induced_connected(g: &Graph, set: &VertexSet) -> bool {
    let Some(&start) = set.first() else {
        return false;
    };
    let mut seen = VertexSet::from([start]);
    let mut queue = Vec::from([start]);
    while let Some(u) = queue.pop() {
        for &w in g.neighbors(u).expect("witness vertices exist") {
            if set.contains(&w) && seen.insert(w) {
                queue.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// true iff `set` induces a connected subgraph containing a vertex with at
/// least s non-neighbors inside the set.
pub(crate) fn is_fisg_set(g: &Graph, set: &VertexSet, s: u32) -> bool {
    witness_in(g, set, s).is_some() && induced_connected(g, set)
}

/// smallest-id vertex of `set` with ≥ s non-neighbors inside `set`, together
/// with all those non-neighbors.
fn witness_in(g: &Graph, set: &VertexSet, s: u32) -> Option<(u32, VertexSet)> {
    for &v in set {
        let nb = g.neighbors(v).ok()?;
        let inside = set.iter().filter(|u| **u != v && nb.contains(u)).count();
        if set.len() - 1 - inside >= s as usize {
            let non: VertexSet =
                set.iter().copied().filter(|&u| u != v && !nb.contains(&u)).collect();
            return Some((v, non));
        }
    }
    None
}

/// finds a witness on at most 2s+1 vertices, or None exactly when the graph
/// is an s-plex cluster graph.
///
/// Construction: take the smallest vertex v with at least s non-neighbors in
/// its own component and run a breadth-first search from v. Every vertex at
/// distance ≥ 2 is a non-neighbor of v; the s closest of them (distance, then
/// id) form a prefix that is downward-closed layer by layer, so each chosen
/// vertex at distance d ≥ 3 has its whole parent layer chosen too. Adding one
/// BFS parent from N(v) for each chosen distance-2 vertex therefore yields a
/// connected induced subgraph of ≤ 2s+1 vertices in which v misses s members.
/// For s=2 the result is minimized down to exactly 4 vertices.
pub fn find_fisg(g: &Graph, s: u32) -> Option<Fisg> {
    assert!(s >= 1, "plex parameter must be at least 1");
    for comp in g.connected_components() {
        for &v in &comp {
            let deg = g.degree(v).expect("component vertex exists");
            if comp.len() - 1 - deg >= s as usize {
                let raw = bfs_witness(g, v, s);
                debug_assert!(raw.vertices.len() <= 2 * s as usize + 1);
                debug_assert!(raw.validate(g, s).is_ok());
                if s == 2 {
                    let out = minimize_fisg(g, &raw, s).expect("raw witness is valid");
                    debug_assert_eq!(out.vertices.len(), 4);
                    return Some(out);
                }
                return Some(raw);
            }
        }
    }
    None
}

fn bfs_witness(g: &Graph, v: u32, s: u32) -> Fisg {
    // layered BFS; sorted layers give the (distance, id) order directly.
    let mut seen = VertexSet::from([v]);
    let mut layers: Vec<Vec<u32>> = Vec::from([Vec::from([v])]);
    loop {
        let mut next = VertexSet::new();
        for &u in layers.last().unwrap() {
            for &w in g.neighbors(u).expect("bfs stays in the graph") {
                if !seen.contains(&w) {
                    next.insert(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        seen.extend(next.iter().copied());
        layers.push(next.into_iter().collect());
    }

    let mut non_neighbors = VertexSet::new();
    let mut vertices = VertexSet::from([v]);
    let layer1: VertexSet = layers.get(1).map(|l| l.iter().copied().collect()).unwrap_or_default();
    'collect: for (d, layer) in layers.iter().enumerate().skip(2) {
        for &u in layer {
            non_neighbors.insert(u);
            vertices.insert(u);
            if d == 2 {
                let parent = *g
                    .neighbors(u)
                    .expect("bfs vertex exists")
                    .iter()
                    .find(|p| layer1.contains(p))
                    .expect("distance-2 vertex has a distance-1 neighbor");
                vertices.insert(parent);
            }
            if non_neighbors.len() == s as usize {
                break 'collect;
            }
        }
    }
    Fisg { vertices, center: v, non_neighbors }
}

/// greedily removes vertices (ascending id, restarting after each removal)
/// while the remainder still induces a connected subgraph with a witness;
/// the result is 1-minimal: removing any single vertex destroys the property.
pub fn minimize_fisg(g: &Graph, f: &Fisg, s: u32) -> Result<Fisg, Error> {
    f.validate(g, s)?;
    let mut cur = f.vertices.clone();
    'shrink: loop {
        for &u in &cur.clone() {
            let mut cand = cur.clone();
            cand.remove(&u);
            if is_fisg_set(g, &cand, s) {
                cur = cand;
                continue 'shrink;
            }
        }
        break;
    }
    let (center, non_neighbors) =
        witness_in(g, &cur, s).expect("minimization preserves the witness");
    Ok(Fisg { vertices: cur, center, non_neighbors })
}

/// all vertex sets of size ≤ max_size that induce a minimal FISG (no proper
/// subset induces one), each reported once, ordered by their sorted id lists.
pub fn enumerate_minimal_fisgs(g: &Graph, s: u32, max_size: u32) -> Result<Vec<Fisg>, Error> {
    assert!(s >= 1, "plex parameter must be at least 1");
    let min = s + 2; // a center, its s non-neighbors, and a connecting vertex
    if max_size < min {
        return Err(Error::MaxSizeTooSmall { max_size, min });
    }
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    for_each_connected_set(g, max_size as usize, &mut |set| {
        if set.len() >= min as usize && is_fisg_set(g, set, s) && is_minimal_fisg_set(g, set, s) {
            found.insert(set.iter().copied().collect());
        }
    });
    Ok(found
        .into_iter()
        .map(|vs| {
            let set: VertexSet = vs.into_iter().collect();
            let (center, non_neighbors) = witness_in(g, &set, s).expect("set was checked");
            Fisg { vertices: set, center, non_neighbors }
        })
        .collect())
}

/// no proper subset (of any size) induces a FISG.
fn is_minimal_fisg_set(g: &Graph, set: &VertexSet, s: u32) -> bool {
    let members: Vec<u32> = set.iter().copied().collect();
    let n = members.len();
    // subsets small enough to matter: every FISG has at least s+2 vertices.
    for mask in 1u32..(1 << n) - 1 {
        if (mask.count_ones() as u32) < s + 2 {
            continue;
        }
        let sub: VertexSet =
            members.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        if is_fisg_set(g, &sub, s) {
            return false;
        }
    }
    true
}

/// visits every connected vertex set of size ≤ max exactly once, via
/// extension from each set's minimum vertex (Wernicke-style enumeration).
fn for_each_connected_set(g: &Graph, max: usize, visit: &mut impl FnMut(&VertexSet)) {
    if max == 0 {
        return;
    }
    for root in g.vertices() {
        let mut sub = VertexSet::from([root]);
        let ext: BTreeSet<u32> =
            g.neighbors(root).expect("iterating graph vertices").range(root + 1..).copied().collect();
        extend_connected(g, root, &mut sub, ext, max, visit);
    }
}

fn extend_connected(
    g: &Graph,
    root: u32,
    sub: &mut VertexSet,
    mut ext: BTreeSet<u32>,
    max: usize,
    visit: &mut impl FnMut(&VertexSet),
) {
    visit(sub);
    if sub.len() == max {
        return;
    }
    while let Some(w) = ext.pop_first() {
        // extend only with exclusive neighbors of w (not adjacent to the
        // current set); this is what makes each set appear exactly once.
        let mut ext2 = ext.clone();
        for &u in g.neighbors(w).expect("extension vertex exists") {
            if u > root
                && !sub.contains(&u)
                && !g.neighbors(u).unwrap().iter().any(|x| sub.contains(x))
            {
                ext2.insert(u);
            }
        }
        sub.insert(w);
        extend_connected(g, root, sub, ext2, max, visit);
        sub.remove(&w);
    }
}

//! Undirected simple graphs with stable vertex identities, plus the s-plex
//! predicates the rest of the crate is built on.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::Error;

/// ordered set of vertex identifiers; iteration is always ascending.
pub type VertexSet = BTreeSet<u32>;

/// undirected simple graph. Vertex ids are arbitrary u32s that survive
/// deletions unchanged: removing a vertex never renumbers the others.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<u32, VertexSet>,
    m: usize,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// builds a graph with vertices 0..n and the given edges.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self, Error> {
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(v);
        }
        for &(u, v) in edges {
            if !g.contains(u) {
                return Err(Error::UnknownVertex(u));
            }
            if !g.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj.get(&u).is_some_and(|nb| nb.contains(&v))
    }

    /// ascending iterator over vertex ids.
    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// all edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for (&u, nb) in &self.adj {
            for &v in nb.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// inserts an isolated vertex; returns false if it already existed.
    pub fn add_vertex(&mut self, v: u32) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, VertexSet::new());
        true
    }

    /// inserts an undirected edge, creating missing endpoints. Self-loops are
    /// a programming error. Returns false if the edge already existed.
    pub fn add_edge(&mut self, u: u32, v: u32) -> bool {
        assert_ne!(u, v, "self-loops are not allowed");
        self.add_vertex(u);
        self.add_vertex(v);
        let fresh = self.adj.get_mut(&u).unwrap().insert(v);
        if fresh {
            self.adj.get_mut(&v).unwrap().insert(u);
            self.m += 1;
        }
        fresh
    }

    /// deletes an undirected edge; endpoints stay. Returns false if absent.
    pub fn remove_edge(&mut self, u: u32, v: u32) -> bool {
        let Some(nb) = self.adj.get_mut(&u) else {
            return false;
        };
        if !nb.remove(&v) {
            return false;
        }
        self.adj.get_mut(&v).unwrap().remove(&u);
        self.m -= 1;
        true
    }

    /// deletes a vertex and its incident edges; ids of survivors are unchanged.
    pub fn remove_vertex(&mut self, v: u32) -> bool {
        let Some(nb) = self.adj.remove(&v) else {
            return false;
        };
        self.m -= nb.len();
        for u in nb {
            self.adj.get_mut(&u).unwrap().remove(&v);
        }
        true
    }

    pub fn remove_vertices(&mut self, vs: &VertexSet) {
        for &v in vs {
            self.remove_vertex(v);
        }
    }

    pub fn degree(&self, v: u32) -> Result<usize, Error> {
        self.adj.get(&v).map(BTreeSet::len).ok_or(Error::UnknownVertex(v))
    }

    /// N(v): the neighborhood of v, never containing v itself.
    pub fn neighbors(&self, v: u32) -> Result<&VertexSet, Error> {
        self.adj.get(&v).ok_or(Error::UnknownVertex(v))
    }

    /// N(U) = ⋃_{v∈U} N(v) ∖ U.
    pub fn set_neighborhood(&self, set: &VertexSet) -> Result<VertexSet, Error> {
        let mut out = VertexSet::new();
        for &v in set {
            let nb = self.neighbors(v)?;
            out.extend(nb.iter().copied());
        }
        for v in set {
            out.remove(v);
        }
        Ok(out)
    }

    /// E(U, W): all edges with one endpoint in each set; requires U ∩ W = ∅.
    /// Pairs come out as (u, w) with u ∈ U, w ∈ W, ascending by (u, w).
    pub fn edges_between(&self, us: &VertexSet, ws: &VertexSet) -> Result<Vec<(u32, u32)>, Error> {
        if us.intersection(ws).next().is_some() {
            return Err(Error::OverlappingSets);
        }
        let mut out = Vec::new();
        for &u in us {
            let nb = self.neighbors(u)?;
            for &w in ws {
                if nb.contains(&w) {
                    out.push((u, w));
                }
            }
        }
        for &w in ws {
            if !self.contains(w) {
                return Err(Error::UnknownVertex(w));
            }
        }
        Ok(out)
    }

    /// connected components as vertex sets, ordered by ascending minimum id.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_without(&VertexSet::new())
    }

    /// connected components of G − removed, ordered by ascending minimum id.
    pub fn components_without(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if removed.contains(&v) || seen.contains(&v) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = Vec::from([v]);
            seen.insert(v);
            while let Some(u) = queue.pop() {
                comp.insert(u);
                for &w in &self.adj[&u] {
                    if !removed.contains(&w) && seen.insert(w) {
                        queue.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// the subgraph induced by the given vertices.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let mut g = Graph::new();
        for &v in set {
            g.add_vertex(v);
        }
        for &v in set {
            if let Some(nb) = self.adj.get(&v) {
                for &u in nb.range(v + 1..) {
                    if set.contains(&u) {
                        g.add_edge(v, u);
                    }
                }
            }
        }
        g
    }

    /// true iff every vertex is adjacent to at least n−s others, where n is
    /// the size of this whole graph (not per component). Empty graphs and
    /// single vertices qualify vacuously.
    pub fn is_splex(&self, s: u32) -> Result<bool, Error> {
        if s < 1 {
            return Err(Error::PlexParamZero);
        }
        Ok(self.splex_violator(&VertexSet::new(), s).is_none())
    }

    /// true iff every connected component induces an s-plex.
    pub fn is_splex_cluster_graph(&self, s: u32) -> Result<bool, Error> {
        if s < 1 {
            return Err(Error::PlexParamZero);
        }
        Ok(self.is_splex_cluster_graph_without(&VertexSet::new(), s))
    }

    /// cluster-graph test for G − removed without materializing the deletion;
    /// the workhorse behind brute-force subset sweeps.
    pub(crate) fn is_splex_cluster_graph_without(&self, removed: &VertexSet, s: u32) -> bool {
        for comp in self.components_without(removed) {
            // every neighbor outside `removed` stays inside the component, so
            // the in-component degree is just the surviving degree.
            let need = comp.len().saturating_sub(s as usize);
            for &v in &comp {
                let deg = self.adj[&v].iter().filter(|u| !removed.contains(u)).count();
                if deg < need {
                    return false;
                }
            }
        }
        true
    }

    /// first vertex of G − removed with more than s−1 surviving non-neighbors
    /// in its own component, if any; None means G − removed is an s-plex when
    /// connected (and per component, an s-plex cluster graph).
    fn splex_violator(&self, removed: &VertexSet, s: u32) -> Option<u32> {
        let n = self.adj.keys().filter(|v| !removed.contains(v)).count();
        let need = n.saturating_sub(s as usize);
        for (&v, nb) in &self.adj {
            if removed.contains(&v) {
                continue;
            }
            let deg = nb.iter().filter(|u| !removed.contains(u)).count();
            if deg < need {
                return Some(v);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn neighbors_basics() {
        let g = path(3);
        assert_eq!(g.neighbors(1).unwrap(), &VertexSet::from([0, 2]));
        let mut g = g;
        g.add_vertex(9);
        assert!(g.neighbors(9).unwrap().is_empty());
        let k4 = complete(4);
        assert_eq!(k4.neighbors(2).unwrap(), &VertexSet::from([0, 1, 3]));
        assert_eq!(k4.neighbors(42), Err(Error::UnknownVertex(42)));
    }

    #[test]
    fn set_neighborhood_excludes_the_set() {
        let g = path(4);
        assert_eq!(
            g.set_neighborhood(&VertexSet::from([1, 2])).unwrap(),
            VertexSet::from([0, 3])
        );
        assert!(g.set_neighborhood(&g.vertex_set()).unwrap().is_empty());
        assert!(g.set_neighborhood(&VertexSet::new()).unwrap().is_empty());
    }

    #[test]
    fn edges_between_cases() {
        let star = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            star.edges_between(&VertexSet::from([0]), &VertexSet::from([1, 2])).unwrap(),
            [(0, 1), (0, 2)]
        );
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two
            .edges_between(&VertexSet::from([0, 1]), &VertexSet::from([2, 3]))
            .unwrap()
            .is_empty());
        let p4 = path(4);
        assert_eq!(
            p4.edges_between(&VertexSet::from([0, 1]), &VertexSet::from([2, 3])).unwrap(),
            [(1, 2)]
        );
        assert_eq!(
            p4.edges_between(&VertexSet::from([0, 1]), &VertexSet::from([1, 2])),
            Err(Error::OverlappingSets)
        );
    }

    #[test]
    fn components_ordering_and_partition() {
        assert!(Graph::new().connected_components().is_empty());
        let mut g = complete(3);
        g.add_edge(10, 11);
        g.add_vertex(5);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], VertexSet::from([0, 1, 2]));
        assert_eq!(comps[1], VertexSet::from([5]));
        assert_eq!(comps[2], VertexSet::from([10, 11]));
    }

    #[test]
    fn vertex_deletion_keeps_identities() {
        let mut g = path(4);
        g.remove_vertex(1);
        assert_eq!(g.vertex_set(), VertexSet::from([0, 2, 3]));
        assert!(g.has_edge(2, 3));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn splex_predicate() {
        assert!(complete(3).is_splex(1).unwrap());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(c4.is_splex(2).unwrap());
        // two disjoint K2s form a 3-plex on 4 vertices: each vertex misses 2.
        let kk = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(kk.is_splex(3).unwrap());
        assert!(!path(4).is_splex(2).unwrap());
        assert!(Graph::new().is_splex(1).unwrap());
        assert_eq!(path(2).is_splex(0), Err(Error::PlexParamZero));
    }

    #[test]
    fn splex_cluster_predicate() {
        let mut g = complete(3);
        for u in 10..15 {
            for v in u + 1..15 {
                g.add_edge(u, v);
            }
        }
        assert!(g.is_splex_cluster_graph(1).unwrap());
        assert!(!path(4).is_splex_cluster_graph(2).unwrap());
        let mut two_c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        for (u, v) in [(4, 5), (5, 6), (6, 7), (4, 7)] {
            two_c4.add_edge(u, v);
        }
        assert!(two_c4.is_splex_cluster_graph(2).unwrap());
    }

    #[test]
    fn cluster_check_without_matches_materialized_deletion() {
        let g = path(6);
        for mask in 0u32..64 {
            let removed: VertexSet = (0..6).filter(|i| mask >> i & 1 == 1).collect();
            let mut h = g.clone();
            h.remove_vertices(&removed);
            for s in 1..=3 {
                assert_eq!(
                    g.is_splex_cluster_graph_without(&removed, s),
                    h.is_splex_cluster_graph(s).unwrap(),
                    "mask {mask:#b}, s {s}"
                );
            }
        }
    }

    #[test]
    fn induced_subgraph() {
        let g = complete(4);
        let h = g.induced(&VertexSet::from([0, 2, 3]));
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 3);
        assert!(!h.contains(1));
    }
}

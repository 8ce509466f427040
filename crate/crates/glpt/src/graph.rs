//! Immutable simple graphs with per-vertex neighbor bitsets.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive by construction; all operations in
/// the crate are pure, so a `Graph` can be shared freely across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::domain(format!(
                "vertex count {n} outside 1..={MAX_VERTICES}"
            )));
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, label: None })
    }

    /// Attaches a short display name (used by constructions and reports).
    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Vertices reachable from `start` while staying inside `within`
    /// (`start` itself must lie in `within`).
    pub fn component_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = VertexSet::singleton(self.n, start);
        loop {
            let mut next = VertexSet::empty(self.n);
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.subtract(&seen);
            if next.is_empty() {
                return seen;
            }
            seen.union_with(&next);
            frontier = next;
        }
    }

    /// Connected components of the subgraph induced by `within`, each as a
    /// vertex set, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.component_within(v, within);
            remaining.subtract(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n))
    }

    pub fn is_connected(&self) -> bool {
        self.component_within(0, &VertexSet::full(self.n)).len() == self.n
    }

    /// Induced subgraph on `verts`. Returns the new graph together with the
    /// map from new vertex ids to the original ids (ascending).
    pub fn induced(&self, verts: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = verts.to_vec();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let m = map.len();
        let mut adj = vec![VertexSet::empty(m.max(1)); m.max(1)];
        for (new, &old) in map.iter().enumerate() {
            for w in self.adj[old].intersection(verts).iter() {
                adj[new].insert(back[w]);
            }
        }
        (
            Graph {
                n: m.max(1),
                adj,
                label: None,
            },
            map,
        )
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        let full = VertexSet::full(self.n);
        for v in self.vertices() {
            let mut row = full.clone();
            row.subtract(&self.adj[v]);
            row.remove(v);
            adj.push(row);
        }
        Graph {
            n: self.n,
            adj,
            label: None,
        }
    }

    pub fn is_clique(&self, verts: &VertexSet) -> bool {
        verts
            .iter()
            .all(|v| verts.difference(&self.adj[v]).len() == 1)
            || verts.is_empty()
    }

    pub fn is_independent_set(&self, verts: &VertexSet) -> bool {
        verts.iter().all(|v| !verts.intersects(&self.adj[v]))
    }

    /// Union of neighborhoods of `verts`, not subtracting `verts` itself.
    pub fn neighborhood_of_set(&self, verts: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in verts.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}", self.n)?;
        if let Some(l) = &self.label {
            write!(f, ", label={l}")?;
        }
        write!(f, ", edges={:?})", self.edges().collect::<Vec<_>>())
    }
}

//! Exact longest-path machinery: orders, exhaustive enumeration, fibers, and
//! Hamiltonian path/cycle detection.
//!
//! Length and decision queries on graphs with up to [`HELD_KARP_MAX`] vertices
//! run through a subset dynamic program over achievable (vertex set, endpoint)
//! states; enumeration and larger graphs use depth-first search over simple
//! paths with a reachability bound that accounts for the component structure
//! of the unvisited region (the search cannot re-enter a component once it
//! leaves the current head behind).

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order routed through the subset DP; beyond this only the pruned
/// DFS is available (memory for the DP grows as `2^n`).
pub const HELD_KARP_MAX: usize = 24;

/// Default ceiling on enumerated longest paths; exceeding it is an explicit
/// error, never silent truncation.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// A simple path in a host graph, stored in canonical orientation: of the two
/// traversal directions, the lexicographically smaller vertex sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    verts: Vec<usize>,
}

impl Path {
    /// Validates `verts` against `host` (distinct vertices, consecutive
    /// adjacency) and stores the canonical orientation.
    pub fn new(host: &Graph, verts: Vec<usize>) -> Result<Path> {
        if verts.is_empty() {
            return Err(Error::domain("path must contain at least one vertex"));
        }
        let mut seen = VertexSet::empty(host.n());
        for &v in &verts {
            if v >= host.n() {
                return Err(Error::domain(format!("path vertex {v} out of range")));
            }
            if seen.contains(v) {
                return Err(Error::domain(format!("path repeats vertex {v}")));
            }
            seen.insert(v);
        }
        for pair in verts.windows(2) {
            if !host.has_edge(pair[0], pair[1]) {
                return Err(Error::domain(format!(
                    "consecutive path vertices {} and {} are not adjacent",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Self::canonical(verts))
    }

    fn canonical(mut verts: Vec<usize>) -> Path {
        let reversed_is_smaller = {
            let fwd = verts.iter();
            let bwd = verts.iter().rev();
            bwd.lt(fwd)
        };
        if reversed_is_smaller {
            verts.reverse();
        }
        Path { verts }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.verts.len()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.verts[0], *self.verts.last().expect("non-empty path"))
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        let (x, y) = self.endpoints();
        x == v || y == v
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&w| w == v)
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.verts.iter().copied())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.verts.windows(2).map(|w| (w[0], w[1]))
    }
}

impl std::fmt::Debug for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Path{:?}", self.verts)
    }
}

/// Endpoint constraints for longest-path queries: none (fiber), one endpoint
/// (x-fiber), or both endpoints (xy-fiber).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FiberQuery {
    pub start: Option<usize>,
    pub end: Option<usize>,
}

impl FiberQuery {
    /// No endpoint constraint: plain longest paths.
    pub fn any() -> Self {
        FiberQuery::default()
    }

    /// Paths with endpoint `x`.
    pub fn from(x: usize) -> Self {
        FiberQuery {
            start: Some(x),
            end: None,
        }
    }

    /// Paths with endpoints exactly `{x, y}`.
    pub fn between(x: usize, y: usize) -> Self {
        FiberQuery {
            start: Some(x),
            end: Some(y),
        }
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        for v in [self.start, self.end].into_iter().flatten() {
            if v >= g.n() {
                return Err(Error::domain(format!("query vertex {v} out of range")));
            }
        }
        if let (Some(x), Some(y)) = (self.start, self.end) {
            if x == y {
                return Err(Error::domain("query endpoints must differ"));
            }
        }
        Ok(())
    }

    /// Internal normal form: a sole `end` constraint becomes a `start`
    /// (paths are undirected).
    fn normalized(&self) -> (Option<usize>, Option<usize>) {
        match (self.start, self.end) {
            (None, Some(y)) => (Some(y), None),
            other => other,
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::domain("operation requires a connected graph"));
    }
    Ok(())
}

/// Maximum number of vertices over all paths satisfying `query`.
pub fn longest_path_order(g: &Graph, query: &FiberQuery) -> Result<usize> {
    query.validate(g)?;
    require_connected(g)?;
    let (start, end) = query.normalized();
    if g.n() <= HELD_KARP_MAX {
        Ok(held_karp_order(g, start, end))
    } else {
        Ok(dfs_order(g, start, end))
    }
}

/// All longest paths under `query`, canonically oriented, lexicographically
/// sorted, capped at [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_longest_paths(g: &Graph, query: &FiberQuery) -> Result<Vec<Path>> {
    enumerate_longest_paths_capped(g, query, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_longest_paths_capped(
    g: &Graph,
    query: &FiberQuery,
    cap: usize,
) -> Result<Vec<Path>> {
    let target = longest_path_order(g, query)?;
    let (start, end) = query.normalized();
    let mut sink = CollectAll {
        out: Vec::new(),
        cap,
    };
    search_exact(g, start, end, target, &mut sink)?;
    let mut paths: Vec<Path> = sink.out.into_iter().map(Path::canonical).collect();
    paths.sort_unstable();
    debug_assert!(paths.windows(2).all(|w| w[0] != w[1]));
    Ok(paths)
}

/// One longest path under `query`: the first witness in lexicographic search
/// order (deterministic).
pub fn fiber(g: &Graph, query: &FiberQuery) -> Result<Path> {
    let target = longest_path_order(g, query)?;
    let (start, end) = query.normalized();
    let mut sink = CollectFirst { out: None };
    search_exact(g, start, end, target, &mut sink)?;
    Ok(Path::canonical(sink.out.expect("a longest path exists")))
}

/// Hamiltonian query kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HamiltonianKind {
    Path,
    Cycle,
}

/// Exact Hamiltonian path/cycle detection with a verified witness.
///
/// For `Cycle` the witness lists the cycle once; the closing edge from last
/// to first is implied. Cycle queries require `n >= 3`.
pub fn hamiltonian(g: &Graph, kind: HamiltonianKind) -> Result<Option<Vec<usize>>> {
    match kind {
        HamiltonianKind::Path => {
            if !g.is_connected() {
                return Ok(None);
            }
            if g.n() == 1 {
                return Ok(Some(vec![0]));
            }
            let witness = if g.n() <= HELD_KARP_MAX {
                held_karp_hamiltonian_path(g)
            } else {
                let mut sink = CollectFirst { out: None };
                search_exact(g, None, None, g.n(), &mut sink)?;
                sink.out
            };
            if let Some(w) = &witness {
                debug_assert!(Path::new(g, w.clone()).is_ok() && w.len() == g.n());
            }
            Ok(witness)
        }
        HamiltonianKind::Cycle => {
            if g.n() < 3 {
                return Err(Error::domain("cycle queries require at least 3 vertices"));
            }
            if !g.is_connected() {
                return Ok(None);
            }
            let witness = if g.n() <= HELD_KARP_MAX {
                held_karp_hamiltonian_cycle(g)
            } else {
                dfs_hamiltonian_cycle(g)
            };
            if let Some(w) = &witness {
                debug_assert!(
                    Path::new(g, w.clone()).is_ok()
                        && w.len() == g.n()
                        && g.has_edge(w[0], *w.last().unwrap())
                );
            }
            Ok(witness)
        }
    }
}

// ---------------------------------------------------------------------------
// Subset DP (Held-Karp style reachable-endpoint sets)
// ---------------------------------------------------------------------------

/// `reach[mask]` = bitmask of vertices `v` such that some simple path covers
/// exactly `mask` and ends at `v`. `starts` restricts the initial singletons.
fn held_karp_reach(g: &Graph, starts: impl Iterator<Item = usize>) -> Vec<u32> {
    let n = g.n();
    debug_assert!(n <= HELD_KARP_MAX);
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |acc, w| acc | 1 << w)
        })
        .collect();
    let mut reach = vec![0u32; 1 << n];
    for s in starts {
        reach[1 << s] |= 1 << s;
    }
    for mask in 1..(1u32 << n) {
        let mut ends = reach[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = adj[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    reach
}

fn held_karp_order(g: &Graph, start: Option<usize>, end: Option<usize>) -> usize {
    let reach = match (start, end) {
        (Some(x), Some(_)) => held_karp_reach(g, std::iter::once(x)),
        _ => held_karp_reach(g, g.vertices()),
    };
    let mut best = 0;
    for (mask, &ends) in reach.iter().enumerate() {
        if ends == 0 {
            continue;
        }
        let ok = match (start, end) {
            (Some(x), None) => ends >> x & 1 == 1 && mask >> x & 1 == 1,
            (Some(_), Some(y)) => ends >> y & 1 == 1,
            _ => true,
        };
        if ok {
            best = best.max((mask as u32).count_ones() as usize);
        }
    }
    best
}

/// Walks a full-coverage state back to an explicit vertex sequence.
fn held_karp_reconstruct(g: &Graph, reach: &[u32], mut mask: u32, mut v: usize) -> Vec<usize> {
    let mut out = vec![v];
    while mask.count_ones() > 1 {
        mask &= !(1 << v);
        let prev = g
            .neighbors(v)
            .iter()
            .find(|&u| mask >> u & 1 == 1 && reach[mask as usize] >> u & 1 == 1)
            .expect("DP state has a predecessor");
        out.push(prev);
        v = prev;
    }
    out.reverse();
    out
}

fn held_karp_hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let reach = held_karp_reach(g, g.vertices());
    let full = (1u32 << n) - 1;
    let ends = reach[full as usize];
    if ends == 0 {
        return None;
    }
    let v = ends.trailing_zeros() as usize;
    Some(held_karp_reconstruct(g, &reach, full, v))
}

fn held_karp_hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let reach = held_karp_reach(g, std::iter::once(0));
    let full = (1u32 << n) - 1;
    let closing = reach[full as usize]
        & g.neighbors(0).iter().fold(0u32, |acc, w| acc | 1 << w);
    if closing == 0 {
        return None;
    }
    let v = closing.trailing_zeros() as usize;
    Some(held_karp_reconstruct(g, &reach, full, v))
}

// ---------------------------------------------------------------------------
// Pruned DFS over simple paths
// ---------------------------------------------------------------------------

trait PathSink {
    /// Receives one directed witness; returns false to stop the search.
    fn emit(&mut self, verts: &[usize]) -> Result<bool>;
}

struct CollectAll {
    out: Vec<Vec<usize>>,
    cap: usize,
}

impl PathSink for CollectAll {
    fn emit(&mut self, verts: &[usize]) -> Result<bool> {
        if self.out.len() >= self.cap {
            return Err(Error::EnumerationCap { cap: self.cap });
        }
        self.out.push(verts.to_vec());
        Ok(true)
    }
}

struct CollectFirst {
    out: Option<Vec<usize>>,
}

impl PathSink for CollectFirst {
    fn emit(&mut self, verts: &[usize]) -> Result<bool> {
        self.out = Some(verts.to_vec());
        Ok(false)
    }
}

struct Searcher<'g, S: PathSink> {
    g: &'g Graph,
    end: Option<usize>,
    target: usize,
    canonical_filter: bool,
    path: Vec<usize>,
    visited: VertexSet,
    sink: &'g mut S,
}

/// Emits every directed path of exactly `target` vertices matching the
/// constraints, in lexicographic generation order. With `start = None` the
/// canonical filter keeps one orientation per undirected path.
fn search_exact<S: PathSink>(
    g: &Graph,
    start: Option<usize>,
    end: Option<usize>,
    target: usize,
    sink: &mut S,
) -> Result<()> {
    let mut searcher = Searcher {
        g,
        end,
        target,
        canonical_filter: start.is_none(),
        path: Vec::with_capacity(target),
        visited: VertexSet::empty(g.n()),
        sink,
    };
    let starts: Vec<usize> = match start {
        Some(x) => vec![x],
        None => g.vertices().collect(),
    };
    for s in starts {
        if end == Some(s) {
            continue;
        }
        searcher.path.push(s);
        searcher.visited.insert(s);
        let keep_going = searcher.dfs()?;
        searcher.path.pop();
        searcher.visited.remove(s);
        if !keep_going {
            break;
        }
    }
    Ok(())
}

impl<S: PathSink> Searcher<'_, S> {
    fn dfs(&mut self) -> Result<bool> {
        let head = *self.path.last().expect("path non-empty");
        if let Some(y) = self.end {
            if head == y {
                if self.path.len() == self.target {
                    return self.sink.emit(&self.path);
                }
                return Ok(true);
            }
        } else if self.path.len() == self.target {
            if !self.canonical_filter || !is_reverse_smaller(&self.path) {
                return self.sink.emit(&self.path);
            }
            return Ok(true);
        }
        if self.path.len() >= self.target {
            return Ok(true);
        }
        if !self.bound_admits(head) {
            return Ok(true);
        }
        for w in self.g.neighbors(head).to_vec() {
            if self.visited.contains(w) {
                continue;
            }
            self.path.push(w);
            self.visited.insert(w);
            let keep_going = self.dfs()?;
            self.path.pop();
            self.visited.remove(w);
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reachability bound: the path can grow only into a single component of
    /// the unvisited region touching the head (and must reach `end` if one is
    /// required).
    fn bound_admits(&self, head: usize) -> bool {
        let mut unvisited = VertexSet::full(self.g.n());
        unvisited.subtract(&self.visited);
        let mut frontier = self.g.neighbors(head).intersection(&unvisited);
        let mut potential = 0usize;
        while let Some(v) = frontier.first() {
            let comp = self.g.component_within(v, &unvisited);
            frontier.subtract(&comp);
            unvisited.subtract(&comp);
            if let Some(y) = self.end {
                if comp.contains(y) {
                    potential = comp.len();
                    break;
                }
            } else {
                potential = potential.max(comp.len());
            }
        }
        self.path.len() + potential >= self.target
    }
}

fn is_reverse_smaller(verts: &[usize]) -> bool {
    verts.iter().rev().lt(verts.iter())
}

/// Branch-and-bound longest-path order for graphs beyond the DP range.
fn dfs_order(g: &Graph, start: Option<usize>, end: Option<usize>) -> usize {
    struct Bb<'g> {
        g: &'g Graph,
        end: Option<usize>,
        best: usize,
        path: Vec<usize>,
        visited: VertexSet,
    }
    impl Bb<'_> {
        fn dfs(&mut self) {
            let head = *self.path.last().expect("non-empty");
            match self.end {
                Some(y) if head == y => {
                    self.best = self.best.max(self.path.len());
                    return;
                }
                None => self.best = self.best.max(self.path.len()),
                _ => {}
            }
            // Reachability bound as in the exact search, against best+1.
            let mut unvisited = VertexSet::full(self.g.n());
            unvisited.subtract(&self.visited);
            let mut frontier = self.g.neighbors(head).intersection(&unvisited);
            let mut potential = 0usize;
            while let Some(v) = frontier.first() {
                let comp = self.g.component_within(v, &unvisited);
                frontier.subtract(&comp);
                unvisited.subtract(&comp);
                if let Some(y) = self.end {
                    if comp.contains(y) {
                        potential = comp.len();
                        break;
                    }
                } else {
                    potential = potential.max(comp.len());
                }
            }
            if self.end.is_some() && potential == 0 {
                return;
            }
            if self.path.len() + potential <= self.best {
                return;
            }
            for w in self.g.neighbors(head).to_vec() {
                if self.visited.contains(w) {
                    continue;
                }
                self.path.push(w);
                self.visited.insert(w);
                self.dfs();
                self.path.pop();
                self.visited.remove(w);
            }
        }
    }
    let mut bb = Bb {
        g,
        end,
        best: 0,
        path: Vec::new(),
        visited: VertexSet::empty(g.n()),
    };
    let starts: Vec<usize> = match start {
        Some(x) => vec![x],
        None => g.vertices().collect(),
    };
    for s in starts {
        if end == Some(s) {
            continue;
        }
        bb.path.push(s);
        bb.visited.insert(s);
        bb.dfs();
        bb.path.pop();
        bb.visited.remove(s);
    }
    bb.best
}

fn dfs_hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    struct Hc<'g> {
        g: &'g Graph,
        path: Vec<usize>,
        visited: VertexSet,
    }
    impl Hc<'_> {
        fn dfs(&mut self) -> Option<Vec<usize>> {
            let head = *self.path.last().expect("non-empty");
            if self.path.len() == self.g.n() {
                if self.g.has_edge(head, self.path[0]) {
                    return Some(self.path.clone());
                }
                return None;
            }
            // Remaining vertices must stay reachable from the head.
            let mut unvisited = VertexSet::full(self.g.n());
            unvisited.subtract(&self.visited);
            let probe = unvisited.first().expect("vertices remain");
            let mut region = unvisited.clone();
            region.insert(head);
            if self.g.component_within(probe, &region).len() < unvisited.len() {
                return None;
            }
            for w in self.g.neighbors(head).to_vec() {
                if self.visited.contains(w) {
                    continue;
                }
                self.path.push(w);
                self.visited.insert(w);
                if let Some(found) = self.dfs() {
                    return Some(found);
                }
                self.path.pop();
                self.visited.remove(w);
            }
            None
        }
    }
    let mut hc = Hc {
        g,
        path: vec![0],
        visited: VertexSet::singleton(g.n(), 0),
    };
    hc.dfs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((0, n - 1));
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete_graph(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    /// Unpruned enumeration of every simple path; the oracle for the engine.
    fn naive_longest_paths(g: &Graph, q: &FiberQuery) -> (usize, Vec<Vec<usize>>) {
        fn dfs(
            g: &Graph,
            q: &FiberQuery,
            path: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let head = *path.last().unwrap();
            let end_ok = match (q.start, q.end) {
                (Some(_), Some(y)) => head == y,
                _ => true,
            };
            if end_ok {
                out.push(path.clone());
            }
            for w in g.neighbors(head).to_vec() {
                if !path.contains(&w) {
                    path.push(w);
                    dfs(g, q, path, out);
                    path.pop();
                }
            }
        }
        let (start, end) = q.normalized();
        let q2 = FiberQuery { start, end };
        let mut all = Vec::new();
        let starts: Vec<usize> = match start {
            Some(x) => vec![x],
            None => g.vertices().collect(),
        };
        for s in starts {
            dfs(g, &q2, &mut vec![s], &mut all);
        }
        let best = all.iter().map(|p| p.len()).max().unwrap_or(0);
        let mut canon: Vec<Vec<usize>> = all
            .into_iter()
            .filter(|p| p.len() == best)
            .map(|p| {
                let mut r = p.clone();
                r.reverse();
                if r < p {
                    r
                } else {
                    p
                }
            })
            .collect();
        canon.sort();
        canon.dedup();
        (best, canon)
    }

    #[test]
    fn canonical_orientation() {
        let g = path_graph(3);
        let p = Path::new(&g, vec![2, 1, 0]).unwrap();
        assert_eq!(p.verts(), &[0, 1, 2]);
        assert_eq!(p.endpoints(), (0, 2));
        assert!(Path::new(&g, vec![0, 2]).is_err());
        assert!(Path::new(&g, vec![0, 1, 0]).is_err());
        assert!(Path::new(&g, vec![]).is_err());
    }

    #[test]
    fn longest_orders_on_named_graphs() {
        let k5 = complete_graph(5);
        assert_eq!(longest_path_order(&k5, &FiberQuery::any()).unwrap(), 5);

        let g0 = constructions::g0();
        assert_eq!(longest_path_order(&g0, &FiberQuery::any()).unwrap(), 10);

        let sb = constructions::star_blowup(1, 3).unwrap();
        assert_eq!(sb.n(), 10);
        assert_eq!(longest_path_order(&sb, &FiberQuery::any()).unwrap(), 7);

        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(longest_path_order(&disconnected, &FiberQuery::any()).is_err());
    }

    #[test]
    fn enumerate_path_and_cycle() {
        let p6 = path_graph(6);
        let paths = enumerate_longest_paths(&p6, &FiberQuery::any()).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].verts(), &[0, 1, 2, 3, 4, 5]);

        let c5 = cycle_graph(5);
        let paths = enumerate_longest_paths(&c5, &FiberQuery::any()).unwrap();
        assert_eq!(paths.len(), 5);
        assert!(paths.iter().all(|p| p.order() == 5));
    }

    #[test]
    fn enumeration_matches_naive_dfs_on_corpus() {
        for g in crate::generate::generate_connected(6).unwrap() {
            let queries = [
                FiberQuery::any(),
                FiberQuery::from(0),
                FiberQuery {
                    start: None,
                    end: Some(g.n() - 1),
                },
                FiberQuery::between(0, g.n() - 1),
            ];
            for q in queries {
                if q.start == q.end || (q.start.is_some() && q.start == Some(g.n() - 1)) {
                    continue;
                }
                if let (Some(x), Some(y)) = (q.start, q.end) {
                    if x == y {
                        continue;
                    }
                }
                let (expect_order, expect) = naive_longest_paths(&g, &q);
                if expect_order == 0 {
                    continue;
                }
                let got = enumerate_longest_paths(&g, &q).unwrap();
                let got_flat: Vec<Vec<usize>> =
                    got.iter().map(|p| p.verts().to_vec()).collect();
                assert_eq!(got_flat, expect, "graph {g:?} query {q:?}");
            }
        }
    }

    #[test]
    fn fiber_constraints_are_monotone() {
        for g in crate::generate::generate_connected(5).unwrap() {
            if g.n() < 2 {
                continue;
            }
            let free = longest_path_order(&g, &FiberQuery::any()).unwrap();
            for x in g.vertices() {
                let from_x = longest_path_order(&g, &FiberQuery::from(x)).unwrap();
                assert!(from_x <= free);
                for y in g.vertices() {
                    if y == x {
                        continue;
                    }
                    let between = longest_path_order(&g, &FiberQuery::between(x, y)).unwrap();
                    assert!(between <= from_x);
                }
            }
        }
    }

    #[test]
    fn fiber_witnesses() {
        let p5 = path_graph(5);
        let f = fiber(&p5, &FiberQuery::from(0)).unwrap();
        assert_eq!(f.verts(), &[0, 1, 2, 3, 4]);

        let c5 = cycle_graph(5);
        let f = fiber(&c5, &FiberQuery::between(0, 1)).unwrap();
        assert_eq!(f.order(), 5);
        let (a, b) = f.endpoints();
        assert_eq!((a, b), (0, 1));

        let g0 = constructions::g0();
        // 9 is a degree-1 vertex of R; an x-fiber from it attains the
        // overall longest order.
        let f = fiber(&g0, &FiberQuery::from(9)).unwrap();
        assert_eq!(f.order(), 10);
        assert!(f.has_endpoint(9));
    }

    #[test]
    fn pair_of_longest_paths_intersects_on_corpus() {
        for g in crate::generate::generate_connected(6).unwrap() {
            let paths = enumerate_longest_paths(&g, &FiberQuery::any()).unwrap();
            for (i, p) in paths.iter().enumerate() {
                let ps = p.vertex_set(g.n());
                for q in &paths[i + 1..] {
                    assert!(
                        ps.intersects(&q.vertex_set(g.n())),
                        "disjoint longest paths in {g:?}: {p:?} {q:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn hamiltonian_detection() {
        let petersen = constructions::petersen();
        assert!(hamiltonian(&petersen, HamiltonianKind::Cycle)
            .unwrap()
            .is_none());
        let w = hamiltonian(&petersen, HamiltonianKind::Path)
            .unwrap()
            .expect("petersen has a hamiltonian path");
        assert_eq!(w.len(), 10);

        let k4 = complete_graph(4);
        let w = hamiltonian(&k4, HamiltonianKind::Cycle).unwrap().unwrap();
        assert_eq!(w.len(), 4);
        assert!(k4.has_edge(w[0], w[3]));

        let hr = constructions::ham_reg(6).unwrap();
        assert!(hamiltonian(&hr, HamiltonianKind::Path).unwrap().is_none());

        assert!(hamiltonian(&path_graph(2), HamiltonianKind::Cycle).is_err());
    }

    #[test]
    fn enumeration_cap_is_an_error() {
        let k7 = complete_graph(7);
        let err = enumerate_longest_paths_capped(&k7, &FiberQuery::any(), 10).unwrap_err();
        assert!(matches!(err, Error::EnumerationCap { cap: 10 }));
    }
}

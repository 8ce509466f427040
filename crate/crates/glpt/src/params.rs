//! Exact structural parameters: independence number, vertex connectivity,
//! girth, block decomposition, and saturating matchings with Hall witnesses.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Girth of a graph; forests carry the dedicated infinity marker rather than
/// a sentinel integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

impl serde::Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => ser.serialize_u64(*g as u64),
            Girth::Infinite => ser.serialize_str("inf"),
        }
    }
}

/// Bundle of the cheap exact parameters of a graph.
#[derive(Clone, Debug)]
pub struct ParamReport {
    pub alpha: usize,
    /// Vertex connectivity; 0 for the 1-vertex graph.
    pub kappa: usize,
    pub delta_max: usize,
    pub delta_min: usize,
    pub girth: Girth,
}

pub fn param_report(g: &Graph) -> ParamReport {
    ParamReport {
        alpha: independence_number(g),
        kappa: if g.n() < 2 {
            0
        } else {
            connectivity(g).expect("n >= 2")
        },
        delta_max: g.max_degree(),
        delta_min: g.min_degree(),
        girth: girth(g),
    }
}

/// Exact independence number via branch and bound on the complement-clique
/// formulation with a greedy coloring bound.
pub fn independence_number(g: &Graph) -> usize {
    max_clique_size(&g.complement())
}

/// Independence number of the subgraph induced by `verts`.
pub fn independence_number_within(g: &Graph, verts: &VertexSet) -> usize {
    let (sub, _) = g.induced(verts);
    if verts.is_empty() {
        return 0;
    }
    independence_number(&sub)
}

fn max_clique_size(g: &Graph) -> usize {
    let mut best = 0;
    let mut candidates: Vec<usize> = g.vertices().collect();
    // Process high-degree vertices first; ties by id keep runs reproducible.
    candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    expand_clique(g, 0, &candidates, &mut best);
    best
}

fn expand_clique(g: &Graph, size: usize, candidates: &[usize], best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let (order, bounds) = color_sort(g, candidates);
    for i in (0..order.len()).rev() {
        if size + bounds[i] <= *best {
            return;
        }
        let v = order[i];
        let next: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        expand_clique(g, size + 1, &next, best);
    }
}

/// Greedy sequential coloring; returns candidates reordered by ascending
/// color together with each vertex's color number (an upper bound on the
/// clique extension).
fn color_sort(g: &Graph, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&w| !g.has_edge(v, w)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(candidates.len());
    let mut bounds = Vec::with_capacity(candidates.len());
    for (color, class) in classes.iter().enumerate() {
        for &v in class {
            order.push(v);
            bounds.push(color + 1);
        }
    }
    (order, bounds)
}

/// Exact vertex connectivity via Menger's theorem: the minimum, over
/// non-adjacent pairs, of the maximum number of internally disjoint paths.
/// Complete graphs yield `n - 1`; disconnected graphs yield 0.
pub fn connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::domain("connectivity requires at least 2 vertices"));
    }
    if g.vertices().all(|v| g.degree(v) == n - 1) {
        return Ok(n - 1);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    // A minimum cut either misses some fixed vertex u (then it separates u
    // from a non-neighbor) or contains u (then it separates two neighbors of
    // u, necessarily non-adjacent ones).
    let u = g
        .vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .expect("non-empty graph");
    let mut best = g.degree(u);
    for w in g.vertices() {
        if w != u && !g.has_edge(u, w) {
            best = best.min(disjoint_path_count(g, u, w, best));
        }
    }
    let nbrs: Vec<usize> = g.neighbors(u).to_vec();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                best = best.min(disjoint_path_count(g, a, b, best));
            }
        }
    }
    Ok(best)
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent `s`, `t`, computed as unit-capacity flow on the split
/// digraph. Stops early once `cap` is reached.
fn disjoint_path_count(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.n();
    // Node 2v = v_in, 2v+1 = v_out; arc v_in->v_out carries the vertex
    // capacity; edges become out->in arcs both ways.
    let size = 2 * n;
    let mut capacity = vec![0u8; size * size];
    for v in g.vertices() {
        capacity[(2 * v) * size + 2 * v + 1] = 1;
    }
    for (a, b) in g.edges() {
        capacity[(2 * a + 1) * size + 2 * b] = 1;
        capacity[(2 * b + 1) * size + 2 * a] = 1;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut parent = vec![usize::MAX; size];
    while flow < cap {
        // BFS for an augmenting path in the residual network.
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        'bfs: while let Some(x) = queue.pop_front() {
            for y in 0..size {
                if parent[y] == usize::MAX && capacity[x * size + y] > 0 {
                    parent[y] = x;
                    if y == sink {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            capacity[x * size + y] -= 1;
            capacity[y * size + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Girth via breadth-first search from every vertex; `Infinite` for forests.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = root;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w && parent[w] != u {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Block-cutpoint decomposition of a connected graph.
///
/// Blocks are maximal 2-connected subgraphs or bridge edges (the 1-vertex
/// graph yields its single vertex as a block). The incidence list pairs each
/// cut vertex with every block containing it; for connected hosts this
/// structure is a tree whose leaves are blocks.
#[derive(Clone, Debug)]
pub struct BlockCutTree {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// Edges (cut vertex, block index) of the block-cutpoint tree.
    pub incidence: Vec<(usize, usize)>,
}

impl BlockCutTree {
    /// Index of the block containing both endpoints of an edge (unique).
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.contains(u) && b.contains(v))
    }
}

pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    if !g.is_connected() {
        return Err(Error::domain("block_cut_tree requires a connected graph"));
    }
    let n = g.n();
    if n == 1 {
        return Ok(BlockCutTree {
            blocks: vec![VertexSet::singleton(1, 0)],
            cut_vertices: VertexSet::empty(1),
            incidence: Vec::new(),
        });
    }

    struct Dfs<'a> {
        g: &'a Graph,
        num: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        edge_stack: Vec<(usize, usize)>,
        blocks: Vec<VertexSet>,
        cut: VertexSet,
    }
    impl Dfs<'_> {
        fn run(&mut self, v: usize, parent: usize) {
            self.timer += 1;
            self.num[v] = self.timer;
            self.low[v] = self.timer;
            let mut child_count = 0;
            for w in self.g.neighbors(v).to_vec() {
                if self.num[w] == 0 {
                    child_count += 1;
                    self.edge_stack.push((v, w));
                    self.run(w, v);
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.num[v] {
                        // v separates w's subtree: pop one block.
                        let mut verts = VertexSet::empty(self.g.n());
                        while let Some(&(a, b)) = self.edge_stack.last() {
                            if self.num[a] >= self.num[w] {
                                verts.insert(a);
                                verts.insert(b);
                                self.edge_stack.pop();
                            } else {
                                break;
                            }
                        }
                        let top = self.edge_stack.pop().expect("block root edge");
                        debug_assert_eq!(top, (v, w));
                        verts.insert(v);
                        verts.insert(w);
                        self.blocks.push(verts);
                        if parent != usize::MAX || child_count > 1 {
                            self.cut.insert(v);
                        }
                    }
                } else if w != parent && self.num[w] < self.num[v] {
                    self.edge_stack.push((v, w));
                    self.low[v] = self.low[v].min(self.num[w]);
                }
            }
        }
    }

    let mut dfs = Dfs {
        g,
        num: vec![0; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cut: VertexSet::empty(n),
    };
    dfs.run(0, usize::MAX);
    debug_assert!(dfs.edge_stack.is_empty());

    let mut blocks = dfs.blocks;
    blocks.sort_by_key(|b| b.to_vec());
    let cut_vertices = dfs.cut;
    let mut incidence = Vec::new();
    for v in cut_vertices.iter() {
        for (i, b) in blocks.iter().enumerate() {
            if b.contains(v) {
                incidence.push((v, i));
            }
        }
    }
    Ok(BlockCutTree {
        blocks,
        cut_vertices,
        incidence,
    })
}

/// Outcome of a saturating-matching query on the induced `(S, T)`-bigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallOutcome {
    /// A matching (as `(s, t)` pairs, ascending in `s`) saturating all of `S`.
    Matching(Vec<(usize, usize)>),
    /// A subset `S1` of `S` with `|N(S1) ∩ T| < |S1|`, certifying that no
    /// saturating matching exists.
    Violator(VertexSet),
}

/// Either matches every vertex of `S` into `T` along edges of `g`, or
/// returns a Hall violator witnessing impossibility.
pub fn hall_matching(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<HallOutcome> {
    if s.intersects(t) {
        return Err(Error::domain("hall_matching: S and T overlap"));
    }
    let s_verts: Vec<usize> = s.to_vec();
    let n = g.n();
    // match_of[t_vertex] = matched S vertex (or MAX).
    let mut match_of = vec![usize::MAX; n];
    let mut matched_s = vec![usize::MAX; n];

    fn augment(
        g: &Graph,
        t: &VertexSet,
        v: usize,
        visited: &mut VertexSet,
        match_of: &mut [usize],
        matched_s: &mut [usize],
    ) -> bool {
        for w in g.neighbors(v).intersection(t).iter() {
            if visited.contains(w) {
                continue;
            }
            visited.insert(w);
            if match_of[w] == usize::MAX
                || augment(g, t, match_of[w], visited, match_of, matched_s)
            {
                match_of[w] = v;
                matched_s[v] = w;
                return true;
            }
        }
        false
    }

    let mut unmatched = None;
    for &v in &s_verts {
        let mut visited = VertexSet::empty(n);
        if !augment(g, t, v, &mut visited, &mut match_of, &mut matched_s) && unmatched.is_none() {
            unmatched = Some(v);
        }
    }
    match unmatched {
        None => Ok(HallOutcome::Matching(
            s_verts.iter().map(|&v| (v, matched_s[v])).collect(),
        )),
        Some(v0) => {
            // Alternating reachability from the unmatched vertex: the reached
            // S-vertices form a violator (König).
            let mut s1 = VertexSet::singleton(n, v0);
            let mut t_reached = VertexSet::empty(n);
            loop {
                let mut grew = false;
                for v in s1.to_vec() {
                    for w in g.neighbors(v).intersection(t).iter() {
                        if !t_reached.contains(w) {
                            t_reached.insert(w);
                            grew = true;
                            if match_of[w] != usize::MAX && !s1.contains(match_of[w]) {
                                s1.insert(match_of[w]);
                            }
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            debug_assert!(t_reached.len() < s1.len());
            Ok(HallOutcome::Violator(s1))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((0, n - 1));
        Graph::from_edges(n, &e).unwrap()
    }

    /// Brute-force independence number over all subsets.
    fn alpha_brute(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 20);
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let set = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            if set.len() > best && g.is_independent_set(&set) {
                best = set.len();
            }
        }
        best
    }

    /// Brute-force connectivity: smallest vertex set whose removal
    /// disconnects the graph (or n-1 for complete graphs).
    fn kappa_brute(g: &Graph) -> usize {
        let n = g.n();
        if !g.is_connected() {
            return 0;
        }
        for k in 0..n - 1 {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut keep = VertexSet::full(n);
                for v in 0..n {
                    if mask >> v & 1 == 1 {
                        keep.remove(v);
                    }
                }
                let comps = g.components_within(&keep);
                if comps.len() > 1 {
                    return k;
                }
            }
        }
        n - 1
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(independence_number(&complete(5)), 1);
        assert_eq!(independence_number(&constructions::g0()), 6);
        let petersen = constructions::petersen();
        assert_eq!(independence_number(&petersen), 4);
        assert_eq!(alpha_brute(&petersen), 4);
    }

    #[test]
    fn alpha_matches_brute_force_on_corpus() {
        for g in crate::generate::generate_connected(6).unwrap() {
            assert_eq!(independence_number(&g), alpha_brute(&g), "{g:?}");
        }
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(connectivity(&path(4)).unwrap(), 1);
        assert_eq!(connectivity(&complete(4)).unwrap(), 3);
        assert_eq!(connectivity(&constructions::star_blowup(2, 4).unwrap()).unwrap(), 2);
        assert_eq!(connectivity(&constructions::petersen()).unwrap(), 3);
        assert!(connectivity(&Graph::from_edges(1, &[]).unwrap()).is_err());
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(connectivity(&disconnected).unwrap(), 0);
    }

    #[test]
    fn connectivity_matches_brute_force_on_corpus() {
        for g in crate::generate::generate_connected(6).unwrap() {
            assert_eq!(connectivity(&g).unwrap(), kappa_brute(&g), "{g:?}");
        }
    }

    #[test]
    fn kappa_at_most_min_degree_on_corpus() {
        for g in crate::generate::generate_connected(7).unwrap() {
            if g.n() >= 2 {
                assert!(connectivity(&g).unwrap() <= g.min_degree());
            }
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(7)), Girth::Finite(7));
        assert_eq!(girth(&path(5)), Girth::Infinite);
        assert_eq!(girth(&constructions::g0()), Girth::Finite(5));
        assert_eq!(girth(&complete(4)), Girth::Finite(3));
        assert_eq!(girth(&constructions::petersen()), Girth::Finite(5));
    }

    #[test]
    fn blocks_examples() {
        let t = block_cut_tree(&path(4)).unwrap();
        assert_eq!(t.blocks.len(), 3);
        assert_eq!(t.cut_vertices.to_vec(), vec![1, 2]);

        let t = block_cut_tree(&complete(4)).unwrap();
        assert_eq!(t.blocks.len(), 1);
        assert!(t.cut_vertices.is_empty());

        let t = block_cut_tree(&constructions::g0()).unwrap();
        assert_eq!(t.blocks.len(), 4);
        let mut sizes: Vec<usize> = t.blocks.iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 9]);
        assert_eq!(t.cut_vertices.to_vec(), vec![0, 3, 4]);

        assert!(block_cut_tree(&Graph::from_edges(3, &[(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn block_edge_partition_on_corpus() {
        for g in crate::generate::generate_connected(6).unwrap() {
            let t = block_cut_tree(&g).unwrap();
            let total: usize = t
                .blocks
                .iter()
                .map(|b| g.induced(b).0.edge_count())
                .sum();
            assert_eq!(total, g.edge_count(), "{g:?}");
            // Every edge lies in exactly one block.
            for (u, v) in g.edges() {
                assert_eq!(
                    t.blocks.iter().filter(|b| b.contains(u) && b.contains(v)).count(),
                    1
                );
            }
        }
    }

    #[test]
    fn hall_matching_outcomes() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = VertexSet::singleton(2, 0);
        let t = VertexSet::singleton(2, 1);
        assert_eq!(
            hall_matching(&g, &s, &t).unwrap(),
            HallOutcome::Matching(vec![(0, 1)])
        );

        // Two S-vertices sharing a single neighbor: pigeonhole violator.
        let g = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let s = VertexSet::from_iter(3, [0, 1]);
        let t = VertexSet::singleton(3, 2);
        match hall_matching(&g, &s, &t).unwrap() {
            HallOutcome::Violator(s1) => {
                assert_eq!(s1.to_vec(), vec![0, 1]);
                let nb = g.neighborhood_of_set(&s1).intersection(&t);
                assert!(nb.len() < s1.len());
            }
            other => panic!("expected violator, got {other:?}"),
        }

        // star_blowup(2,4): S = the 2-clique, T = Y_1 (complete bigraph).
        let sb = constructions::star_blowup(2, 4).unwrap();
        let s = VertexSet::from_iter(sb.n(), [0, 1]);
        let t = VertexSet::from_iter(sb.n(), [2, 3]);
        match hall_matching(&sb, &s, &t).unwrap() {
            HallOutcome::Matching(m) => {
                assert_eq!(m.len(), 2);
                let (mut ss, mut ts): (Vec<_>, Vec<_>) = m.iter().copied().unzip();
                ss.sort_unstable();
                ts.sort_unstable();
                assert_eq!(ss, vec![0, 1]);
                assert!(ts.iter().all(|&w| t.contains(w)));
                assert!(m.iter().all(|&(a, b)| sb.has_edge(a, b)));
            }
            other => panic!("expected matching, got {other:?}"),
        }

        // Overlapping S and T is a domain error.
        let s = VertexSet::from_iter(3, [0, 1]);
        assert!(hall_matching(&g, &s, &s).is_err());
    }

    #[test]
    fn param_report_of_single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let r = param_report(&g);
        assert_eq!(r.alpha, 1);
        assert_eq!(r.kappa, 0);
        assert_eq!(r.girth, Girth::Infinite);
    }
}

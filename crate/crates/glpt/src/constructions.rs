//! Factory for the named graphs: the Petersen graph, the 12-vertex
//! counterexample `g0`, its subdivision `g1` and triangle expansion `g2`,
//! the star blowup, the regular no-Hamiltonian-path gadget, complete
//! bipartite gadgets, and linear forests. Vertex numbering is fixed per
//! construction so graph6 output is reproducible.

use std::collections::BTreeSet;
use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::longest_path::Path;

/// The Petersen graph: vertices 0..5 form the outer 5-cycle, 5..10 the inner
/// pentagram, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let g = Graph::from_edges(10, &edges).unwrap().with_label("petersen");
    debug_assert!(g.vertices().all(|v| g.degree(v) == 3));
    g
}

/// The 12-vertex graph with no Gallai vertex: the Petersen graph with vertex
/// 0 split into three pendant vertices.
///
/// Vertices 0..9 are the remaining Petersen vertices (old `v` becomes
/// `v - 1`); 9, 10, 11 are the pendant set `R`, attached to 0, 3, 4 (the
/// former neighbors of the split vertex), so `R' = {0, 3, 4}`.
pub fn g0() -> Graph {
    let pet = petersen();
    let mut edges: Vec<(usize, usize)> = pet
        .edges()
        .filter(|&(u, v)| u != 0 && v != 0)
        .map(|(u, v)| (u - 1, v - 1))
        .collect();
    edges.push((0, 9));
    edges.push((3, 10));
    edges.push((4, 11));
    let g = Graph::from_edges(12, &edges).unwrap().with_label("g0");
    assert_eq!(g.edge_count(), 15);
    assert_eq!(g.vertices().filter(|&v| g.degree(v) == 1).count(), 3);
    g
}

/// The pendant vertices `R` of [`g0`] (and of its derived graphs `g1`, `g2`,
/// which keep these ids).
pub const G0_PENDANTS: [usize; 3] = [9, 10, 11];

/// Looks up a parameterless named graph.
pub fn canonical_graph(name: &str) -> Result<Graph> {
    match name {
        "petersen" => Ok(petersen()),
        "g0" => Ok(g0()),
        other => Err(Error::domain(format!("unknown canonical graph '{other}'"))),
    }
}

fn validate_g1_params(p: usize, q: usize) -> Result<()> {
    if p < 1 {
        return Err(Error::domain("g1/g2 require p >= 1"));
    }
    if q <= 15 * p {
        return Err(Error::domain(format!(
            "g1/g2 require q > 15*p (got p={p}, q={q})"
        )));
    }
    Ok(())
}

/// [`g0`] with every pendant edge replaced by a path of length `q` and every
/// other edge by a path of length `p`, plus the chain bookkeeping needed to
/// lift `g0` paths into the subdivision.
pub struct SubdividedG0 {
    pub graph: Graph,
    /// Internal chain vertices of each original edge `(u, v)` with `u < v`,
    /// ordered from `u` towards `v` (empty for unsubdivided edges).
    chains: HashMap<(usize, usize), Vec<usize>>,
}

pub fn g1_detailed(p: usize, q: usize) -> Result<SubdividedG0> {
    validate_g1_params(p, q)?;
    let base = g0();
    let pendant_edges: BTreeSet<(usize, usize)> =
        [(0, 9), (3, 10), (4, 11)].into_iter().collect();
    let mut next = base.n();
    let mut edges = Vec::new();
    let mut chains = HashMap::new();
    for (u, v) in base.edges() {
        let length = if pendant_edges.contains(&(u, v)) { q } else { p };
        let chain: Vec<usize> = (0..length - 1).map(|i| next + i).collect();
        next += length - 1;
        let mut prev = u;
        for &c in &chain {
            edges.push((prev, c));
            prev = c;
        }
        edges.push((prev, v));
        chains.insert((u, v), chain);
    }
    let graph = Graph::from_edges(next, &edges)?.with_label(format!("g1({p},{q})"));
    assert_eq!(graph.n(), 12 + 12 * (p - 1) + 3 * (q - 1));
    assert_eq!(
        graph.vertices().filter(|&v| graph.degree(v) == 1).count(),
        3
    );
    assert_eq!(graph.max_degree(), 3);
    Ok(SubdividedG0 { graph, chains })
}

/// The subdivision counterexample alone.
pub fn g1(p: usize, q: usize) -> Result<Graph> {
    g1_detailed(p, q).map(|d| d.graph)
}

impl SubdividedG0 {
    /// Lifts a path of [`g0`] to the corresponding path of the subdivision
    /// (each original edge traversed through its chain).
    pub fn lift_path(&self, path: &Path) -> Result<Path> {
        let mut verts = vec![path.verts()[0]];
        for (a, b) in path.edges() {
            let key = (a.min(b), a.max(b));
            let chain = self
                .chains
                .get(&key)
                .ok_or_else(|| Error::domain(format!("({a},{b}) is not a g0 edge")))?;
            if a < b {
                verts.extend(chain.iter().copied());
            } else {
                verts.extend(chain.iter().rev().copied());
            }
            verts.push(b);
        }
        Path::new(&self.graph, verts)
    }
}

/// [`g1`] with every cubic vertex replaced by a triangle, plus the mapping
/// needed to lift `g1` paths into the expansion.
pub struct TriangleExpandedG1 {
    pub graph: Graph,
    base: Graph,
    /// For each base vertex: its image id (non-cubic) or the first of its
    /// three triangle ids (cubic).
    image: Vec<usize>,
    cubic: Vec<bool>,
    /// For cubic `v`: sorted base neighbors, aligned with triangle offsets.
    ports: HashMap<usize, Vec<usize>>,
}

pub fn g2_detailed(p: usize, q: usize) -> Result<TriangleExpandedG1> {
    let base = g1_detailed(p, q)?.graph;
    let cubic: Vec<bool> = base.vertices().map(|v| base.degree(v) == 3).collect();
    let mut image = Vec::with_capacity(base.n());
    let mut next = 0;
    for v in base.vertices() {
        image.push(next);
        next += if cubic[v] { 3 } else { 1 };
    }
    let mut edges = Vec::new();
    let mut ports = HashMap::new();
    for v in base.vertices() {
        if cubic[v] {
            let t = image[v];
            edges.push((t, t + 1));
            edges.push((t, t + 2));
            edges.push((t + 1, t + 2));
            ports.insert(v, base.neighbors(v).to_vec());
        }
    }
    let attach = |v: usize, other: usize, ports: &HashMap<usize, Vec<usize>>| -> usize {
        if cubic[v] {
            let slot = ports[&v].iter().position(|&w| w == other).unwrap();
            image[v] + slot
        } else {
            image[v]
        }
    };
    for (u, v) in base.edges() {
        edges.push((attach(u, v, &ports), attach(v, u, &ports)));
    }
    let n_cubic = cubic.iter().filter(|&&c| c).count();
    let graph = Graph::from_edges(next, &edges)?.with_label(format!("g2({p},{q})"));
    assert_eq!(graph.n(), base.n() + 2 * n_cubic);
    Ok(TriangleExpandedG1 {
        graph,
        base,
        image,
        cubic,
        ports,
    })
}

/// The claw-free counterexample alone.
pub fn g2(p: usize, q: usize) -> Result<Graph> {
    g2_detailed(p, q).map(|d| d.graph)
}

impl TriangleExpandedG1 {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    fn attach(&self, v: usize, other: usize) -> usize {
        if self.cubic[v] {
            let slot = self.ports[&v].iter().position(|&w| w == other).unwrap();
            self.image[v] + slot
        } else {
            self.image[v]
        }
    }

    /// Lifts a `g1` path whose endpoints are non-cubic: each interior cubic
    /// vertex expands to a full traversal of its triangle (enter at the port
    /// facing the predecessor, exit at the port facing the successor).
    pub fn lift_path(&self, path: &Path) -> Result<Path> {
        let verts = path.verts();
        let (x, y) = path.endpoints();
        if self.cubic[x] || self.cubic[y] {
            return Err(Error::domain("lift requires non-cubic path endpoints"));
        }
        let mut out = Vec::with_capacity(verts.len() * 2);
        for (i, &v) in verts.iter().enumerate() {
            if !self.cubic[v] {
                out.push(self.image[v]);
                continue;
            }
            let enter = self.attach(v, verts[i - 1]);
            let exit = self.attach(v, verts[i + 1]);
            let middle = (self.image[v]..self.image[v] + 3)
                .find(|&t| t != enter && t != exit)
                .unwrap();
            out.extend([enter, middle, exit]);
        }
        Path::new(&self.graph, out)
    }
}

/// The star `K_{1,k+2}` with its center blown up to a `k`-clique `S` and each
/// leaf to a `t`-clique `X_i` whose first `k` vertices (`Y_i`) are joined
/// completely to `S`.
///
/// Vertices: `S = 0..k`, then block `X_i = k+i*t .. k+(i+1)*t` for
/// `i = 0..k+2`, with `Y_i` the first `k` of each block.
pub fn star_blowup(k: usize, t: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::domain("star_blowup requires k >= 1"));
    }
    if t < k {
        return Err(Error::domain("star_blowup requires t >= k"));
    }
    let n = k + (k + 2) * t;
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b));
        }
    }
    for i in 0..k + 2 {
        let base = k + i * t;
        for a in base..base + t {
            for b in a + 1..base + t {
                edges.push((a, b));
            }
        }
        for y in base..base + k {
            for s in 0..k {
                edges.push((s, y));
            }
        }
    }
    let g = Graph::from_edges(n, &edges)?
        .with_label(format!("star_blowup({k},{t})"));
    debug_assert!((0..k).all(|s| g.degree(s) == k * (k + 2) + (k - 1)));
    Ok(g)
}

/// The hub clique `S` of [`star_blowup`].
pub fn star_blowup_hub(k: usize) -> VertexSet {
    VertexSet::from_iter(crate::bitset::MAX_VERTICES, 0..k)
}

/// The `k`-regular 1-connected graph with `alpha = 6` and no Hamiltonian
/// path: two copies of `K_{k+1}` minus an edge and one copy of `K_{k+1}`
/// minus a matching on `k-4` vertices, plus an apex joined to the `k`
/// vertices of degree `k-1`. Requires even `k >= 6`.
///
/// Vertices: blocks occupy `0..k+1`, `k+1..2k+2`, `2k+2..3k+3`; the apex is
/// `3k+3`. The missing edges are `(0,1)`, `(k+1,k+2)`, and the matching
/// `(2k+2, 2k+3), (2k+4, 2k+5), ...` covering `k-4` vertices.
pub fn ham_reg(k: usize) -> Result<Graph> {
    if k < 6 || k % 2 != 0 {
        return Err(Error::domain("ham_reg requires even k >= 6"));
    }
    let block = k + 1;
    let apex = 3 * block;
    let mut missing = BTreeSet::new();
    missing.insert((0, 1));
    missing.insert((block, block + 1));
    for i in 0..(k - 4) / 2 {
        missing.insert((2 * block + 2 * i, 2 * block + 2 * i + 1));
    }
    let mut edges = Vec::new();
    for b in 0..3 {
        let base = b * block;
        for a in base..base + block {
            for c in a + 1..base + block {
                if !missing.contains(&(a, c)) {
                    edges.push((a, c));
                }
            }
        }
    }
    for &(a, b) in &missing {
        edges.push((apex, a));
        edges.push((apex, b));
    }
    let g = Graph::from_edges(apex + 1, &edges)?.with_label(format!("ham_reg({k})"));
    assert!(g.vertices().all(|v| g.degree(v) == k));
    assert!(g.is_connected());
    Ok(g)
}

/// `K_{t,t+2}`, optionally minus a matching saturating the side of size `t`.
///
/// Vertices `0..t` form the small side; `t..2t+2` the large side; the removed
/// matching is `(i, t+i)`.
pub fn bipartite_gadget(t: usize, minus_matching: bool) -> Graph {
    assert!(t >= 1, "bipartite_gadget requires t >= 1");
    let mut edges = Vec::new();
    for a in 0..t {
        for b in t..2 * t + 2 {
            if minus_matching && b == t + a {
                continue;
            }
            edges.push((a, b));
        }
    }
    Graph::from_edges(2 * t + 2, &edges)
        .unwrap()
        .with_label(if minus_matching {
            format!("K_{{{t},{}}}-M", t + 2)
        } else {
            format!("K_{{{t},{}}}", t + 2)
        })
}

/// Disjoint union of paths with the given orders.
pub fn linear_forest(lengths: &[usize]) -> Graph {
    assert!(!lengths.is_empty(), "linear_forest requires at least one path");
    assert!(lengths.iter().all(|&l| l >= 1));
    let n: usize = lengths.iter().sum();
    let mut edges = Vec::new();
    let mut base = 0;
    for &l in lengths {
        for i in 0..l - 1 {
            edges.push((base + i, base + i + 1));
        }
        base += l;
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// All component-order multisets (descending) realizable as induced
/// `m`-vertex linear forests of `g`.
pub fn enumerate_induced_linear_forests(g: &Graph, m: usize) -> Vec<Vec<usize>> {
    assert!(m <= g.n());
    let mut shapes = BTreeSet::new();
    if m == 0 {
        return Vec::new();
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    let mut degree = vec![0usize; g.n()];
    search_forests(g, 0, m, &mut chosen, &mut degree, &mut shapes);
    shapes.into_iter().collect()
}

fn search_forests(
    g: &Graph,
    from: usize,
    m: usize,
    chosen: &mut Vec<usize>,
    degree: &mut [usize],
    shapes: &mut BTreeSet<Vec<usize>>,
) {
    if chosen.len() == m {
        let set = VertexSet::from_iter(g.n(), chosen.iter().copied());
        let mut sizes: Vec<usize> = g
            .components_within(&set)
            .iter()
            .map(|c| c.len())
            .collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        shapes.insert(sizes);
        return;
    }
    if g.n() - from < m - chosen.len() {
        return;
    }
    for v in from..g.n() {
        if g.n() - v < m - chosen.len() {
            break;
        }
        // Adding v must keep all induced degrees at most 2 and close no cycle.
        let chosen_nbrs: Vec<usize> = chosen
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        if chosen_nbrs.len() > 2 || chosen_nbrs.iter().any(|&u| degree[u] >= 2) {
            continue;
        }
        if chosen_nbrs.len() == 2 && connected_in_chosen(g, chosen, chosen_nbrs[0], chosen_nbrs[1])
        {
            continue;
        }
        for &u in &chosen_nbrs {
            degree[u] += 1;
        }
        degree[v] = chosen_nbrs.len();
        chosen.push(v);
        search_forests(g, v + 1, m, chosen, degree, shapes);
        chosen.pop();
        degree[v] = 0;
        for &u in &chosen_nbrs {
            degree[u] -= 1;
        }
    }
}

fn connected_in_chosen(g: &Graph, chosen: &[usize], a: usize, b: usize) -> bool {
    let set = VertexSet::from_iter(g.n(), chosen.iter().copied());
    g.component_within(a, &set).contains(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induced::{find_induced, is_linear_forest};
    use crate::longest_path::{hamiltonian, HamiltonianKind};
    use crate::params::{connectivity, girth, independence_number, Girth};

    #[test]
    fn petersen_facts() {
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert_eq!(girth(&p), Girth::Finite(5));
        assert!(hamiltonian(&p, HamiltonianKind::Cycle).unwrap().is_none());
    }

    #[test]
    fn g0_facts() {
        let g = g0();
        assert_eq!(g.n(), 12);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(girth(&g), Girth::Finite(5));
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(find_induced(&g, &triangle).is_none());
        for r in G0_PENDANTS {
            assert_eq!(g.degree(r), 1);
        }
    }

    #[test]
    fn canonical_graph_lookup() {
        assert_eq!(canonical_graph("petersen").unwrap().n(), 10);
        assert_eq!(canonical_graph("g0").unwrap().n(), 12);
        assert!(canonical_graph("g3").is_err());
    }

    #[test]
    fn g1_counts_and_girth() {
        assert_eq!(g1(1, 16).unwrap().n(), 57);
        let g = g1(2, 31).unwrap();
        assert_eq!(g.n(), 12 + 12 + 3 * 30);
        assert_eq!(girth(&g), Girth::Finite(10));
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(find_induced(&g, &triangle).is_none());
        assert!(g1(1, 15).is_err());
        assert!(g1(0, 16).is_err());
    }

    #[test]
    fn g2_counts_and_claw_freeness() {
        let d = g2_detailed(1, 16).unwrap();
        assert_eq!(d.graph.n(), 75);
        let claw = bipartite_gadget(1, false);
        assert_eq!(claw.n(), 4);
        assert!(find_induced(&d.graph, &claw).is_none());
        // Every cubic base vertex induces a triangle.
        for v in d.base.vertices() {
            if d.cubic[v] {
                let t = VertexSet::from_iter(d.graph.n(), d.image[v]..d.image[v] + 3);
                assert!(d.graph.is_clique(&t));
            }
        }
    }

    #[test]
    fn star_blowup_facts() {
        let g = star_blowup(1, 3).unwrap();
        assert_eq!(g.n(), 10);
        let g = star_blowup(2, 4).unwrap();
        assert!(independence_number(&g) <= 5);
        assert_eq!(connectivity(&g).unwrap(), 2);
        for s in 0..2 {
            assert_eq!(g.degree(s), 2 * 4 + 1);
        }
        assert!(star_blowup(2, 1).is_err());
    }

    #[test]
    fn ham_reg_facts() {
        let g = ham_reg(6).unwrap();
        assert_eq!(g.n(), 22);
        assert!(g.vertices().all(|v| g.degree(v) == 6));
        assert_eq!(independence_number(&g), 6);
        assert_eq!(connectivity(&g).unwrap(), 1);
        assert!(ham_reg(5).is_err());
        assert!(ham_reg(4).is_err());
    }

    #[test]
    fn bipartite_gadget_facts() {
        let g = bipartite_gadget(3, false);
        assert_eq!(g.max_degree(), 5);
        let g = bipartite_gadget(3, true);
        assert_eq!(g.max_degree(), 4);
        let claw = bipartite_gadget(1, false);
        assert_eq!((claw.n(), claw.edge_count()), (4, 3));
    }

    #[test]
    fn linear_forest_shapes() {
        assert!(is_linear_forest(&linear_forest(&[4])));
        assert!(is_linear_forest(&linear_forest(&[3, 1])));
        assert!(is_linear_forest(&linear_forest(&[3, 3, 3])));
        assert_eq!(linear_forest(&[3, 1]).n(), 4);
        assert_eq!(linear_forest(&[3, 1]).edge_count(), 2);
    }

    #[test]
    fn induced_forest_shapes_of_p5() {
        let p5 = linear_forest(&[5]);
        assert_eq!(enumerate_induced_linear_forests(&p5, 5), vec![vec![5]]);
        assert_eq!(
            enumerate_induced_linear_forests(&p5, 4),
            vec![vec![2, 2], vec![3, 1], vec![4]]
        );
    }

    #[test]
    fn lift_g0_path_into_g1() {
        let d = g1_detailed(1, 16).unwrap();
        let base = g0();
        let paths = crate::longest_path::enumerate_longest_paths(
            &base,
            &crate::longest_path::FiberQuery::any(),
        )
        .unwrap();
        // Lift a longest g0 path with both ends pendant.
        let p = paths
            .iter()
            .find(|p| {
                let (x, y) = p.endpoints();
                G0_PENDANTS.contains(&x) && G0_PENDANTS.contains(&y)
            })
            .expect("a longest path with both ends in R");
        let lifted = d.lift_path(p).unwrap();
        // 9 g0 edges, two of them pendant: 2q + 7p edges.
        assert_eq!(lifted.len(), 2 * 16 + 7);
    }
}

//! Induced-subgraph search and linear-forest recognition.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Looks for an induced copy of `pattern` in `host`.
///
/// On success returns the vertex map `phi` with `phi[p]` the host vertex
/// playing pattern vertex `p`: the map is injective and preserves both
/// adjacency and non-adjacency. `None` means `host` is `pattern`-free.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    // Order pattern vertices so each one touches as many already-placed
    // vertices as possible; ties broken by degree then id.
    let order = search_order(pattern);
    let mut phi = vec![usize::MAX; pattern.n()];
    let mut used = VertexSet::empty(host.n());
    if place(host, pattern, &order, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::empty(n);
    for _ in 0..n {
        let best = pattern
            .vertices()
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    pattern.neighbors(v).intersection(&placed).len(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("pattern vertex available");
        placed.insert(best);
        order.push(best);
    }
    order
}

fn place(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    // Candidates: unused host vertices adjacent to the images of p's placed
    // neighbors and non-adjacent to the images of its placed non-neighbors.
    let mut candidates = VertexSet::full(host.n());
    candidates.subtract(used);
    for &q in &order[..depth] {
        if pattern.has_edge(p, q) {
            candidates.intersect_with(host.neighbors(phi[q]));
        } else {
            candidates.subtract(host.neighbors(phi[q]));
        }
    }
    let needed = pattern.degree(p);
    for g in candidates.iter() {
        if host.degree(g) < needed {
            continue;
        }
        phi[p] = g;
        used.insert(g);
        if place(host, pattern, order, depth + 1, phi, used) {
            return true;
        }
        used.remove(g);
        phi[p] = usize::MAX;
    }
    false
}

/// True iff the two graphs are isomorphic (induced search in both directions
/// suffices only for equal orders, so sizes are compared first).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && find_induced(a, b).is_some()
}

/// A linear forest is a disjoint union of paths: acyclic with maximum
/// degree at most 2.
pub fn is_linear_forest(g: &Graph) -> bool {
    if g.max_degree() > 2 {
        return false;
    }
    let components = g.components();
    g.edge_count() == g.n() - components.len()
}

//! Gallai vertices, minimum longest-path transversals, and special blocks.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;
use crate::longest_path::{enumerate_longest_paths_capped, FiberQuery, Path, DEFAULT_ENUMERATION_CAP};
use crate::params::{block_cut_tree, BlockCutTree};

/// Transversal data of a connected graph.
#[derive(Clone, Debug)]
pub struct TransversalReport {
    /// Vertices lying on every longest path.
    pub gallai: VertexSet,
    /// Minimum size of a set meeting every longest path.
    pub lpt: usize,
    /// Lexicographically least set attaining `lpt`.
    pub witness: VertexSet,
    /// Indices (into the block-cut tree) of blocks whose edges meet every
    /// longest path.
    pub special_blocks: Vec<usize>,
}

/// The set of vertices contained in every longest path.
pub fn gallai_vertices(g: &Graph) -> Result<VertexSet> {
    gallai_vertices_capped(g, DEFAULT_ENUMERATION_CAP)
}

pub fn gallai_vertices_capped(g: &Graph, cap: usize) -> Result<VertexSet> {
    let paths = enumerate_longest_paths_capped(g, &FiberQuery::any(), cap)?;
    Ok(gallai_of_family(g, &paths))
}

/// Intersection of the vertex sets of an already-enumerated path family.
pub fn gallai_of_family(g: &Graph, paths: &[Path]) -> VertexSet {
    intersection_of_paths(g, paths)
}

fn intersection_of_paths(g: &Graph, paths: &[Path]) -> VertexSet {
    let mut inter = VertexSet::full(g.n());
    for p in paths {
        inter.intersect_with(&p.vertex_set(g.n()));
        if inter.is_empty() {
            break;
        }
    }
    inter
}

/// Exact minimum longest-path transversal: the smallest vertex set hitting
/// every longest path, with the lexicographically least witness.
pub fn lpt_exact(g: &Graph) -> Result<(usize, VertexSet)> {
    lpt_exact_capped(g, DEFAULT_ENUMERATION_CAP)
}

pub fn lpt_exact_capped(g: &Graph, cap: usize) -> Result<(usize, VertexSet)> {
    let paths = enumerate_longest_paths_capped(g, &FiberQuery::any(), cap)?;
    Ok(lpt_of_family(g, &paths))
}

/// Minimum hitting set of an already-enumerated path family.
pub fn lpt_of_family(g: &Graph, paths: &[Path]) -> (usize, VertexSet) {
    // A unique longest path short-circuits: any of its vertices works.
    if paths.len() == 1 {
        let v = paths[0].verts().iter().copied().min().expect("non-empty");
        return (1, VertexSet::singleton(g.n(), v));
    }
    let family: Vec<VertexSet> = dedup_vertex_sets(g, paths);
    let inter = intersection_of_paths(g, paths);
    if let Some(v) = inter.first() {
        return (1, VertexSet::singleton(g.n(), v));
    }
    // Only vertices on some longest path can ever help.
    let mut universe = VertexSet::empty(g.n());
    for s in &family {
        universe.union_with(s);
    }
    let universe: Vec<usize> = universe.to_vec();
    let upper = greedy_hitting_bound(&family, &universe, g.n());
    for k in 2..=upper {
        if !hitting_set_exists(&family, &universe, g.n(), k) {
            continue;
        }
        let mut chosen = Vec::new();
        let found = lex_least_hitting_set(&family, &universe, g.n(), k, 0, &mut chosen);
        debug_assert!(found);
        return (k, VertexSet::from_iter(g.n(), chosen.iter().copied()));
    }
    unreachable!("the greedy bound is itself a hitting set");
}

fn dedup_vertex_sets(g: &Graph, paths: &[Path]) -> Vec<VertexSet> {
    let mut seen = BTreeSet::new();
    for p in paths {
        seen.insert(p.vertex_set(g.n()));
    }
    seen.into_iter().collect()
}

/// Size of the greedy (max-frequency) hitting set; an upper bound for the
/// iterative deepening.
fn greedy_hitting_bound(family: &[VertexSet], universe: &[usize], n: usize) -> usize {
    let mut unhit: Vec<&VertexSet> = family.iter().collect();
    let mut size = 0;
    while !unhit.is_empty() {
        let v = *universe
            .iter()
            .max_by_key(|&&v| unhit.iter().filter(|s| s.contains(v)).count())
            .expect("universe covers the family");
        let _ = v;
        size += 1;
        let picked = VertexSet::singleton(n, v);
        unhit.retain(|s| !s.intersects(&picked));
    }
    size
}

/// Depth-limited decision search: branch on the elements of an uncovered
/// set, most frequent elements first.
fn hitting_set_exists(family: &[VertexSet], universe: &[usize], n: usize, budget: usize) -> bool {
    let unhit: Vec<&VertexSet> = family.iter().collect();
    branch_hits(&unhit, universe, n, budget)
}

fn branch_hits(unhit: &[&VertexSet], universe: &[usize], n: usize, budget: usize) -> bool {
    let Some(target) = unhit.first() else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let mut elements: Vec<usize> = target.to_vec();
    elements.sort_by_key(|&v| {
        std::cmp::Reverse(unhit.iter().filter(|s| s.contains(v)).count())
    });
    for v in elements {
        let remaining: Vec<&VertexSet> = unhit
            .iter()
            .copied()
            .filter(|s| !s.contains(v))
            .collect();
        if branch_hits(&remaining, universe, n, budget - 1) {
            return true;
        }
    }
    false
}

/// Lexicographically first hitting set of exactly `budget` elements drawn
/// from `universe[from..]`.
fn lex_least_hitting_set(
    family: &[VertexSet],
    universe: &[usize],
    n: usize,
    budget: usize,
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let chosen_set = VertexSet::from_iter(n, chosen.iter().copied());
    let unhit: Vec<&VertexSet> = family
        .iter()
        .filter(|s| !s.intersects(&chosen_set))
        .collect();
    if unhit.is_empty() && budget == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    for idx in from..universe.len() {
        let v = universe[idx];
        // In a minimum hitting set every element covers a set the others
        // miss, so restrict to elements hitting something still unhit.
        if !unhit.iter().any(|s| s.contains(v)) {
            continue;
        }
        chosen.push(v);
        if lex_least_hitting_set(family, universe, n, budget - 1, idx + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Blocks whose edge set meets every longest path.
pub fn special_blocks(g: &Graph) -> Result<Vec<usize>> {
    special_blocks_capped(g, DEFAULT_ENUMERATION_CAP).map(|(ids, _)| ids)
}

pub fn special_blocks_capped(g: &Graph, cap: usize) -> Result<(Vec<usize>, BlockCutTree)> {
    let tree = block_cut_tree(g)?;
    let paths = enumerate_longest_paths_capped(g, &FiberQuery::any(), cap)?;
    Ok((special_blocks_of_family(&tree, &paths), tree))
}

/// Special blocks relative to an already-enumerated path family.
pub fn special_blocks_of_family(tree: &BlockCutTree, paths: &[Path]) -> Vec<usize> {
    let mut special: Vec<bool> = vec![true; tree.blocks.len()];
    for p in paths {
        let mut touched = vec![false; tree.blocks.len()];
        for (u, v) in p.edges() {
            let b = tree
                .block_of_edge(u, v)
                .expect("every edge lies in exactly one block");
            touched[b] = true;
        }
        for (s, t) in special.iter_mut().zip(&touched) {
            *s &= t;
        }
    }
    special
        .iter()
        .enumerate()
        .filter_map(|(i, &s)| s.then_some(i))
        .collect()
}

/// Full transversal report from a single enumeration pass.
pub fn transversal_report(g: &Graph, cap: usize) -> Result<TransversalReport> {
    let paths = enumerate_longest_paths_capped(g, &FiberQuery::any(), cap)?;
    let tree = block_cut_tree(g)?;
    let (lpt, witness) = lpt_of_family(g, &paths);
    Ok(TransversalReport {
        gallai: gallai_of_family(g, &paths),
        lpt,
        witness,
        special_blocks: special_blocks_of_family(&tree, &paths),
    })
}

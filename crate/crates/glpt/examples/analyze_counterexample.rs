//! Full analysis of the 12-vertex counterexample: structural parameters,
//! the longest-path family, Gallai vertices, the exact transversal number,
//! and its special block.

use glpt::constructions::g0;
use glpt::longest_path::{enumerate_longest_paths, FiberQuery};
use glpt::params::{block_cut_tree, param_report};
use glpt::transversal::transversal_report;

fn main() -> glpt::Result<()> {
    let g = g0();
    println!("graph6: {}", glpt::encode_graph6(&g));

    let params = param_report(&g);
    println!(
        "n = {}, |E| = {}, girth = {}, alpha = {}, kappa = {}, degrees {}..{}",
        g.n(),
        g.edge_count(),
        params.girth,
        params.alpha,
        params.kappa,
        params.delta_min,
        params.delta_max
    );

    let paths = enumerate_longest_paths(&g, &FiberQuery::any())?;
    println!(
        "longest paths: {} of order {} (every one omits two vertices)",
        paths.len(),
        paths[0].order()
    );
    for p in paths.iter().take(4) {
        println!("  {:?}", p.verts());
    }
    println!("  ...");

    let report = transversal_report(&g, 1_000_000)?;
    println!("gallai vertices: {:?}", report.gallai.to_vec());
    println!(
        "lpt = {} with witness {:?}",
        report.lpt,
        report.witness.to_vec()
    );

    let tree = block_cut_tree(&g)?;
    println!(
        "blocks: {:?}, cut vertices {:?}",
        tree.blocks.iter().map(|b| b.len()).collect::<Vec<_>>(),
        tree.cut_vertices.to_vec()
    );
    for id in &report.special_blocks {
        println!("special block {id}: {:?}", tree.blocks[*id].to_vec());
    }
    Ok(())
}

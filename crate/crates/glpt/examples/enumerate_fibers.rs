//! Fibers under endpoint constraints: plain longest paths, x-fibers, and
//! xy-fibers, plus the classic pairwise-intersection property.

use glpt::constructions::petersen;
use glpt::longest_path::{enumerate_longest_paths, fiber, longest_path_order, FiberQuery};

fn main() -> glpt::Result<()> {
    let g = petersen();

    let free = longest_path_order(&g, &FiberQuery::any())?;
    println!("petersen: longest path order {free} (Hamiltonian path)");

    let witness = fiber(&g, &FiberQuery::any())?;
    println!("deterministic fiber witness: {:?}", witness.verts());

    for x in [0, 5] {
        let f = fiber(&g, &FiberQuery::from(x))?;
        println!("x-fiber from {x}: order {} {:?}", f.order(), f.verts());
    }

    let f = fiber(&g, &FiberQuery::between(0, 1))?;
    println!("xy-fiber 0..1: order {} {:?}", f.order(), f.verts());

    // Adjacent endpoints admit no Hamiltonian xy-path here: the order drops.
    for (x, y) in [(0, 1), (0, 7)] {
        let order = longest_path_order(&g, &FiberQuery::between(x, y))?;
        println!("longest {x}..{y} path order: {order}");
    }

    // Every two longest paths of a connected graph share a vertex.
    let family = enumerate_longest_paths(&g, &FiberQuery::any())?;
    println!("longest-path family size: {}", family.len());
    let n = g.n();
    for (i, p) in family.iter().enumerate() {
        for q in &family[i + 1..] {
            assert!(p.vertex_set(n).intersects(&q.vertex_set(n)));
        }
    }
    println!("pairwise intersection property verified across the family");
    Ok(())
}

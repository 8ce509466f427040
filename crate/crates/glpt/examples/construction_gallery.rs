//! Builds every named construction and prints its graph6 form with the
//! headline facts it was designed to exhibit.

use glpt::constructions::{
    bipartite_gadget, g0, g1, g2, ham_reg, linear_forest, petersen, star_blowup,
};
use glpt::encode_graph6;
use glpt::longest_path::{hamiltonian, HamiltonianKind};
use glpt::params::{connectivity, girth, independence_number};
use glpt::transversal::gallai_vertices;

fn main() -> glpt::Result<()> {
    let p = petersen();
    println!(
        "petersen          n={:3} {}  girth={} ham-cycle={}",
        p.n(),
        encode_graph6(&p),
        girth(&p),
        hamiltonian(&p, HamiltonianKind::Cycle)?.is_some()
    );

    let g = g0();
    println!(
        "g0                n={:3} {}  alpha={} kappa={} gallai={:?}",
        g.n(),
        encode_graph6(&g),
        independence_number(&g),
        connectivity(&g)?,
        gallai_vertices(&g)?.to_vec()
    );

    let g = g1(1, 16)?;
    println!(
        "g1(1,16)          n={:3} {}...  girth={}",
        g.n(),
        &encode_graph6(&g)[..24],
        girth(&g)
    );

    let g = g2(1, 16)?;
    println!(
        "g2(1,16)          n={:3} {}...  (claw-free expansion)",
        g.n(),
        &encode_graph6(&g)[..24]
    );

    let g = star_blowup(2, 4)?;
    println!(
        "star_blowup(2,4)  n={:3} {}  alpha={} kappa={}",
        g.n(),
        encode_graph6(&g),
        independence_number(&g),
        connectivity(&g)?
    );

    let g = ham_reg(6)?;
    println!(
        "ham_reg(6)        n={:3} {}  6-regular alpha={} ham-path={}",
        g.n(),
        encode_graph6(&g),
        independence_number(&g),
        hamiltonian(&g, HamiltonianKind::Path)?.is_some()
    );

    for minus in [false, true] {
        let g = bipartite_gadget(3, minus);
        println!(
            "gadget(3,{minus:5})  n={:3} {}  Delta={} gallai={:?}",
            g.n(),
            encode_graph6(&g),
            g.max_degree(),
            gallai_vertices(&g)?.to_vec()
        );
    }

    let g = linear_forest(&[3, 3, 3]);
    println!("3P3               n={:3} {}", g.n(), encode_graph6(&g));
    Ok(())
}

//! Quotients a bipartite graph by a fixed-point-free involution and checks
//! that its partition function is the square of the quotient's.

use monodimer::families::{grid_graph, grid_involution};
use monodimer::quotient::{check_involution, verify_squareness};
use monodimer::rational::int;
use monodimer::{DicotBuilder, VertexId};

fn report(name: &str, g: &monodimer::Graph, perm: &[VertexId]) {
    let pi = check_involution(g, perm).unwrap();
    let r = verify_squareness(g, &pi).unwrap();
    let block = |b: &[VertexId]| {
        b.iter()
            .map(|v| v.label().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("{name}");
    println!(
        "  partition {{{}}} {{{}}}",
        block(&r.partition.p1),
        block(&r.partition.p2)
    );
    println!(
        "  quotient has {} dashed edges",
        r.quotient.dicot.dashed_edges().len()
    );
    println!(
        "  {} = ({})^2: {}, block identity: {}",
        r.z_graph, r.z_quotient, r.holds, r.block_identity
    );
}

fn main() {
    let mut b = DicotBuilder::with_unit_weights(6);
    for (s, t) in [
        (1, 2),
        (2, 3),
        (4, 5),
        (5, 6),
        (2, 4),
        (1, 5),
        (2, 6),
        (3, 5),
    ] {
        b.solid(s, t, int(1));
    }
    let g = b.build_graph().unwrap();
    let perm: Vec<VertexId> = [4, 5, 6, 1, 2, 3].into_iter().map(VertexId::new).collect();
    report("six-vertex example", &g, &perm);

    let g = grid_graph(4, 6, &int(1), &int(1), &int(1)).unwrap();
    report("4x6 grid, half-turn", &g, &grid_involution(4, 6));
}

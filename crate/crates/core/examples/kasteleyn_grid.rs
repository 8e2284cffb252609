//! Traces the faces of a grid dicot with dashed vertical edges, builds a
//! Kasteleyn orientation and checks the enclosed-vertex sign rule against
//! the determinant.
//!
//! cargo run --example kasteleyn_grid [m] [n]

use monodimer::families::grid_dicot;
use monodimer::planar::{
    is_planar_dicot, kasteleyn_orient, planar_partition_function, verify_kasteleyn,
};
use monodimer::{partition_function, Rational};
use num_traits::One;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("sizes are integers"));
    let m = args.next().unwrap_or(4);
    let n = args.next().unwrap_or(3);
    let one = Rational::one();
    let pd = grid_dicot(m, n, &one, &one, &one).unwrap();
    println!(
        "{m}x{n} grid: {} bounded faces, planar dicot: {}",
        pd.bounded_faces().len(),
        is_planar_dicot(&pd)
    );
    println!(
        "drawn orientation Kasteleyn: {}",
        verify_kasteleyn(&pd, &pd.dicot().orientation())
    );

    let o = kasteleyn_orient(&pd).unwrap();
    println!(
        "constructed orientation Kasteleyn: {}",
        verify_kasteleyn(&pd, &o)
    );
    let pd = pd.reoriented(&o).unwrap();
    let det = partition_function(pd.dicot()).unwrap();
    let signs = planar_partition_function(&pd, 16).unwrap();
    println!("determinant {det}, enclosed-vertex sum {signs}");
}

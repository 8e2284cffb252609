//! Builds the complete dicot on four vertices, prints its complex
//! adjacency matrix and partition function.
//!
//! cargo run --example complete_dicot [n]

use monodimer::{adjacency_matrix, complete_dicot, partition_function};

fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let d = complete_dicot(n).expect("n must be positive");
    println!(
        "{} vertices, {} solid and {} dashed edges",
        d.vertex_count(),
        d.solid_edges().len(),
        d.dashed_edges().len()
    );
    let k = adjacency_matrix(&d);
    for i in 0..k.dim() {
        let row: Vec<String> = (0..k.dim())
            .map(|j| format!("{:>6}", k.get(i, j).to_string()))
            .collect();
        println!("{}", row.join(" "));
    }
    println!("Z = {}", partition_function(&d).unwrap());
}

//! Closed-form and numerical free energies with their finite-size sums.

use monodimer::free_energy::*;

fn main() {
    println!(
        "cycle    closed {:.10}  n=1e5 {:.10}",
        cycle_free_energy(1.0, 1.0),
        cycle_free_energy_finite(100_000, 1.0, 1.0)
    );
    println!(
        "wheel    closed {:.10}  n=1e6 {:.10}",
        wheel_free_energy_alpha(4.0),
        wheel_free_energy_finite(1_000_000, 4.0)
    );
    let f = grid_vert_free_energy(1.0, 1.0, 1.0, 1.0).unwrap();
    println!(
        "vertical quadrature {f:.10}  200x200 {:.10}",
        grid_vert_free_energy_finite(200, 200, 1.0, 1.0, 1.0, 1.0)
    );
}

//! Cycle dicots against Lucas polynomials, and the square identity for
//! even cycle graphs under the antipodal map.

use monodimer::families::{antipodal, cycle_dicot, cycle_graph, cycle_lucas};
use monodimer::partition_function;
use monodimer::quotient::{check_involution, verify_squareness};
use monodimer::rational::{int, ratio};

fn main() {
    let (x, a) = (ratio(3, 2), int(1));
    for n in 1..=6 {
        let d = cycle_dicot(n, &x, &a, &a).unwrap();
        println!(
            "n={n}: det {:>12}  a^2n L_2n(x/a) {:>12}",
            partition_function(&d).unwrap(),
            cycle_lucas(n, &x, &a)
        );
    }
    for n in 1..=3 {
        let g = cycle_graph(4 * n, &x, &a).unwrap();
        let r = verify_squareness(&g, &check_involution(&g, &antipodal(4 * n)).unwrap()).unwrap();
        println!("C_{}: {} = ({})^2", 4 * n, r.z_graph, r.z_quotient);
    }
}

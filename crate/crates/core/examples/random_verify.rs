//! Compares the determinant with brute-force enumeration on seeded random
//! dicots.
//!
//! cargo run --release --example random_verify [count] [seed]

use monodimer::random::{random_small_dicot, rng};
use monodimer::{brute_force_partition_function, partition_function};

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2024);
    let mut r = rng(seed);
    let mut matched = 0;
    for _ in 0..count {
        let d = random_small_dicot(&mut r, 8);
        if partition_function(&d).unwrap() == brute_force_partition_function(&d).unwrap() {
            matched += 1;
        } else {
            println!("mismatch:\n{}", d.to_json());
        }
    }
    println!("{matched}/{count} match");
}

//! Lists every monopole-dimer configuration of the complete dicot on four
//! vertices with its weight, then sums them.

use monodimer::{complete_dicot, config_weight, enumerate_configs, Rational};
use num_traits::Zero;

fn main() {
    let d = complete_dicot(2).unwrap();
    let configs = enumerate_configs(&d).unwrap();
    let mut total = Rational::zero();
    for c in &configs {
        let w = config_weight(c, &d).unwrap();
        let loops: Vec<String> = c
            .loops
            .iter()
            .map(|l| {
                let vs: Vec<String> = l.vertices().iter().map(|v| v.label().to_string()).collect();
                let ks: String = l.kinds().iter().map(|k| k.code()).collect();
                format!("({} | {ks})", vs.join(" "))
            })
            .collect();
        let iso: Vec<u32> = c.isolated.iter().map(|v| v.label()).collect();
        println!(
            "{:>3}  loops {:<40} isolated {iso:?}",
            w.to_string(),
            loops.join(" ")
        );
        total += w;
    }
    println!("{} configurations, total weight {total}", configs.len());
}

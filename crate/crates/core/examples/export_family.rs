//! Prints a generated family instance as dicot JSON.
//!
//! ```text
//! cargo run --example export_family -- wheel 3
//! cargo run --example export_family -- complete 2        # D_2
//! cargo run --example export_family -- grid 2 3          # Q_{4,6} graph
//! cargo run --example export_family -- grid-pi 2 3       # its involution
//! cargo run --example export_family -- grid-dicot 4 3    # planar, with coords
//! ```

use std::collections::BTreeMap;
use std::process::ExitCode;

use monodimer::complete_dicot;
use monodimer::families::{
    cycle_dicot, grid_dicot, grid_graph, grid_involution, grid_quotient_dicot, grid_vert_dicot,
    wheel_dicot,
};
use monodimer::json::PiFile;
use monodimer::rational::one;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let size = |i: usize| args.get(i).and_then(|s| s.parse::<usize>().ok());
    let w = one();
    let text = match (args.first().map(String::as_str), size(1), size(2)) {
        (Some("complete"), Some(n), _) => {
            complete_dicot(n).map_err(Into::into).map(|d| d.to_json())
        }
        (Some("cycle"), Some(n), _) => cycle_dicot(n, &w, &w, &w).map(|d| d.to_json()),
        (Some("wheel"), Some(n), _) => wheel_dicot(n, &w, &w, &w).map(|d| d.to_json()),
        (Some("grid"), Some(m), Some(n)) => {
            grid_graph(2 * m, 2 * n, &w, &w, &w).map(|g| g.to_raw().to_json())
        }
        (Some("grid-pi"), Some(m), Some(n)) => {
            let pi: BTreeMap<String, i64> = grid_involution(2 * m, 2 * n)
                .iter()
                .enumerate()
                .map(|(i, v)| ((i + 1).to_string(), v.label() as i64))
                .collect();
            Ok(serde_json::to_string(&PiFile { pi }).unwrap())
        }
        (Some("grid-quotient"), Some(m), Some(n)) => {
            grid_quotient_dicot(2 * m, n, &w, &w, &w).map(|q| q.dicot.to_json())
        }
        (Some("grid-vert"), Some(m), Some(n)) => {
            grid_vert_dicot(m, n, &w, &w, &w, &w).map(|d| d.to_json())
        }
        (Some("grid-dicot"), Some(m), Some(n)) => {
            grid_dicot(m, n, &w, &w, &w).map(|p| p.to_raw().to_json())
        }
        _ => {
            eprintln!("usage: export_family <complete N | cycle N | wheel N | grid M N | grid-pi M N | grid-quotient M N | grid-vert M N | grid-dicot M N>");
            return ExitCode::from(2);
        }
    };
    match text {
        Ok(t) => {
            println!("{t}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

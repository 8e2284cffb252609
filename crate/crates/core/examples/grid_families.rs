//! Exact determinants of the grid families next to their product formulas.

use monodimer::families::{Family, FamilySpec};

fn main() {
    for family in [Family::Grid, Family::GridQuotient, Family::GridVert] {
        for m in 1..=3 {
            for n in 1..=3 {
                let spec = FamilySpec::new(family, m, n);
                let exact = spec.exact().unwrap();
                let formula = spec.closed_form().unwrap();
                println!(
                    "{:<18} exact {:>14}  formula {formula:>18.6}",
                    spec.label(),
                    exact.to_string()
                );
            }
        }
    }
}

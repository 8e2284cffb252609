//! Enumerates wheel dicots and confirms every configuration weight is
//! positive.

use monodimer::check_positivity;
use monodimer::families::{wheel_dicot, wheel_formula};
use monodimer::rational::int;

fn main() {
    for n in [3, 5] {
        let d = wheel_dicot(n, &int(1), &int(1), &int(1)).unwrap();
        let r = check_positivity(&d).unwrap();
        println!(
            "W_{n}: {} configurations, {} negative, formula {}",
            r.configurations,
            r.negative,
            wheel_formula(n, 1.0, 1.0, 1.0).unwrap()
        );
    }
}

//! Free energies per vertex (cycle dicots), per site (doubled-vertical
//! grids) and per rim pair (wheels), with finite-size sums for checking.

use std::f64::consts::PI;

use thiserror::Error;

use crate::families::Family;
use crate::quadrature::{integrate_2d, QuadratureError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FreeEnergyError {
    #[error("no free energy for the {0} family")]
    Unsupported(Family),
    #[error("parameter {0} must be positive")]
    NonPositive(&'static str),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// `log((x + sqrt(x^2 + 4a^2)) / 2)`
pub fn cycle_free_energy(x: f64, a: f64) -> f64 {
    ((x + (x * x + 4.0 * a * a).sqrt()) / 2.0).ln()
}

/// `(1 / 2n) log Z` for the cycle dicot on `2n` vertices, from the
/// factorisation of the Lucas polynomial.
pub fn cycle_free_energy_finite(n: usize, x: f64, a: f64) -> f64 {
    let s: f64 = (0..n)
        .map(|j| {
            let c = ((2 * j + 1) as f64 * PI / (4 * n) as f64).cos();
            (x * x + 4.0 * a * a * c * c).ln()
        })
        .sum();
    s / (2 * n) as f64
}

/// `2 log((1 + sqrt(1 + alpha)) / 2)`, the wheel free energy with
/// `x^2 + b^2` scaled to one.
pub fn wheel_free_energy_alpha(alpha: f64) -> f64 {
    2.0 * ((1.0 + (1.0 + alpha).sqrt()) / 2.0).ln()
}

pub fn wheel_alpha(x: f64, a: f64, b: f64) -> f64 {
    4.0 * a * a / (x * x + b * b)
}

pub fn wheel_free_energy(x: f64, a: f64, b: f64) -> f64 {
    wheel_free_energy_alpha(wheel_alpha(x, a, b))
}

/// `lim (1/n) log Z(W_n)` without rescaling: adds `log(x^2 + b^2)`.
pub fn wheel_free_energy_unscaled(x: f64, a: f64, b: f64) -> f64 {
    (x * x + b * b).ln() + wheel_free_energy(x, a, b)
}

/// `(1/n) sum_{j<n} log(1 + alpha cos^2(pi j / n))`
pub fn wheel_free_energy_finite(n: usize, alpha: f64) -> f64 {
    let s: f64 = (0..n)
        .map(|j| {
            let c = (j as f64 * PI / n as f64).cos();
            (1.0 + alpha * c * c).ln()
        })
        .sum();
    s / n as f64
}

/// `(2 / pi^2) int int ln(x^2 + 4a^2 cos^2 t + 4|b|^2 cos^2 p)` over
/// `[0, pi/2]^2`, to absolute tolerance `tol`.
pub fn grid_vert_free_energy_tol(
    x: f64,
    a: f64,
    b1: f64,
    b2: f64,
    tol: f64,
) -> Result<f64, FreeEnergyError> {
    let bb = b1 * b1 + b2 * b2;
    let scale = 2.0 / (PI * PI);
    let half = PI / 2.0;
    let v = integrate_2d(
        |t, p| {
            let (ct, cp) = (t.cos(), p.cos());
            (x * x + 4.0 * a * a * ct * ct + 4.0 * bb * cp * cp).ln()
        },
        (0.0, half),
        (0.0, half),
        tol / scale,
    )?;
    Ok(scale * v)
}

pub const GRID_VERT_TOLERANCE: f64 = 1e-8;

pub fn grid_vert_free_energy(x: f64, a: f64, b1: f64, b2: f64) -> Result<f64, FreeEnergyError> {
    grid_vert_free_energy_tol(x, a, b1, b2, GRID_VERT_TOLERANCE)
}

/// `(1 / mn) log Z` from the closed form, summed in log space.
pub fn grid_vert_free_energy_finite(m: usize, n: usize, x: f64, a: f64, b1: f64, b2: f64) -> f64 {
    let bb = b1 * b1 + b2 * b2;
    let c2 = |j: usize, d: usize| (j as f64 * PI / d as f64).cos().powi(2);
    let mut s = 0.0;
    for j in 1..=m / 2 {
        for k in 1..=n / 2 {
            s += 2.0 * (x * x + 4.0 * a * a * c2(j, m + 1) + 4.0 * bb * c2(k, n + 1)).ln();
        }
    }
    let log_y = |len: usize, bb: f64| -> f64 {
        (1..=len / 2)
            .map(|j| (x * x + 4.0 * bb * c2(j, len + 1)).ln())
            .sum()
    };
    s += match (m % 2, n % 2) {
        (0, 0) => 0.0,
        (0, _) => log_y(m, a * a),
        (_, 0) => log_y(n, bb),
        _ => x.ln() + log_y(m, a * a) + log_y(n, bb),
    };
    s / (m * n) as f64
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeEnergyParams {
    pub x: f64,
    pub a: f64,
    pub b: f64,
    pub b1: f64,
    pub b2: f64,
    /// Overrides `4a^2 / (x^2 + b^2)` for wheels.
    pub alpha: Option<f64>,
}

impl Default for FreeEnergyParams {
    fn default() -> Self {
        FreeEnergyParams {
            x: 1.0,
            a: 1.0,
            b: 1.0,
            b1: 1.0,
            b2: 1.0,
            alpha: None,
        }
    }
}

pub fn free_energy(family: Family, p: &FreeEnergyParams) -> Result<f64, FreeEnergyError> {
    let positive = |v: f64, name| {
        if v > 0.0 {
            Ok(())
        } else {
            Err(FreeEnergyError::NonPositive(name))
        }
    };
    match family {
        Family::Cycle => {
            positive(p.x, "x")?;
            positive(p.a, "a")?;
            Ok(cycle_free_energy(p.x, p.a))
        }
        Family::Wheel => match p.alpha {
            Some(alpha) if alpha >= 0.0 => Ok(wheel_free_energy_alpha(alpha)),
            Some(_) => Err(FreeEnergyError::NonPositive("alpha")),
            None => {
                positive(p.x, "x")?;
                positive(p.a, "a")?;
                positive(p.b, "b")?;
                Ok(wheel_free_energy(p.x, p.a, p.b))
            }
        },
        Family::GridVert => {
            positive(p.x, "x")?;
            positive(p.a, "a")?;
            positive(p.b1, "b1")?;
            positive(p.b2, "b2")?;
            grid_vert_free_energy(p.x, p.a, p.b1, p.b2)
        }
        other => Err(FreeEnergyError::Unsupported(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert!((cycle_free_energy(1.0, 1.0) - 0.4812118).abs() < 1e-7);
        assert_eq!(wheel_free_energy_alpha(0.0), 0.0);
        assert!((wheel_free_energy_alpha(4.0) - 0.9624237).abs() < 1e-7);
        assert!((wheel_free_energy(1.0, 1.0, 0.0) - 0.9624237).abs() < 1e-7);
    }

    #[test]
    fn finite_sums_approach_limits() {
        assert!(
            (cycle_free_energy_finite(100_000, 1.0, 1.0) - cycle_free_energy(1.0, 1.0)).abs()
                < 1e-4
        );
        assert!(
            (wheel_free_energy_finite(1_000_000, 4.0) - wheel_free_energy_alpha(4.0)).abs() < 1e-5
        );
    }

    #[test]
    fn grid_vert_quadrature() {
        let f = grid_vert_free_energy(1.0, 1.0, 1.0, 1.0).unwrap();
        let coarse = grid_vert_free_energy_tol(1.0, 1.0, 1.0, 1.0, 1e-6).unwrap();
        assert!((f - coarse).abs() < 1e-6);
        let swapped = grid_vert_free_energy(1.0, 1.0, 0.5, 2.0).unwrap();
        assert!((swapped - grid_vert_free_energy(1.0, 1.0, 2.0, 0.5).unwrap()).abs() < 1e-9);
        let finite = grid_vert_free_energy_finite(400, 400, 1.0, 1.0, 1.0, 1.0);
        assert!((finite - f).abs() < 1e-2, "{finite} vs {f}");
    }

    #[test]
    fn grid_vert_separable_limit() {
        // as |b| -> 0 the phi integral is trivial and the theta integral is the cycle one
        let a = 0.7;
        let f = grid_vert_free_energy_tol(1.0, a, 1e-9, 1e-9, 1e-10).unwrap();
        assert!((f - cycle_free_energy(1.0, a)).abs() < 1e-6, "{f}");
    }

    #[test]
    fn dispatch() {
        let p = FreeEnergyParams::default();
        assert!((free_energy(Family::Cycle, &p).unwrap() - 0.4812118).abs() < 1e-7);
        let p = FreeEnergyParams {
            alpha: Some(4.0),
            ..p
        };
        assert!((free_energy(Family::Wheel, &p).unwrap() - 0.9624237).abs() < 1e-7);
        assert_eq!(
            free_energy(Family::Grid, &p).unwrap_err(),
            FreeEnergyError::Unsupported(Family::Grid)
        );
        let bad = FreeEnergyParams {
            x: 0.0,
            ..FreeEnergyParams::default()
        };
        assert_eq!(
            free_energy(Family::Cycle, &bad).unwrap_err(),
            FreeEnergyError::NonPositive("x")
        );
    }

    #[test]
    fn increasing_in_a() {
        let mut last = [f64::NEG_INFINITY; 3];
        for i in 1..=6 {
            let a = 0.25 * i as f64;
            let now = [
                cycle_free_energy(1.0, a),
                wheel_free_energy(1.0, a, 1.0),
                grid_vert_free_energy_tol(1.0, a, 1.0, 1.0, 1e-7).unwrap(),
            ];
            for k in 0..3 {
                assert!(now[k] > last[k]);
            }
            last = now;
        }
    }
}

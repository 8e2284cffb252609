//! Adaptive Simpson quadrature in one and two dimensions.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("quadrature did not converge on [{lo}, {hi}] within depth {depth}")]
    QuadratureNonConvergence { lo: f64, hi: f64, depth: u32 },
    #[error("integrand is not finite at {0}")]
    NonFinite(f64),
}

pub const MAX_DEPTH: u32 = 40;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn eval<F: FnMut(f64) -> Result<f64, QuadratureError>>(
    f: &mut F,
    t: f64,
) -> Result<f64, QuadratureError> {
    let y = f(t)?;
    if y.is_finite() {
        Ok(y)
    } else {
        Err(QuadratureError::NonFinite(t))
    }
}

/// `noise` bounds the integrand's own absolute error; differences below
/// `noise * width` cannot be resolved and are accepted.
fn refine<F>(f: &mut F, p: Panel, tol: f64, noise: f64, depth: u32) -> Result<f64, QuadratureError>
where
    F: FnMut(f64) -> Result<f64, QuadratureError>,
{
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let flm = eval(f, lm)?;
    let frm = eval(f, rm)?;
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let delta = left + right - p.whole;
    let floor = 4.0 * noise * (p.b - p.a) + 64.0 * f64::EPSILON * (left + right).abs();
    if delta.abs() <= 15.0 * tol + floor {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(QuadratureError::QuadratureNonConvergence {
            lo: p.a,
            hi: p.b,
            depth: MAX_DEPTH,
        });
    }
    let l = refine(
        f,
        Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
        },
        0.5 * tol,
        noise,
        depth - 1,
    )?;
    let r = refine(
        f,
        Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
        },
        0.5 * tol,
        noise,
        depth - 1,
    )?;
    Ok(l + r)
}

/// Integral of a fallible integrand over `[a, b]` to absolute tolerance
/// `tol`, for integrands accurate to within `noise`.
pub fn integrate_noisy<F>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    noise: f64,
) -> Result<f64, QuadratureError>
where
    F: FnMut(f64) -> Result<f64, QuadratureError>,
{
    let m = 0.5 * (a + b);
    let fa = eval(&mut f, a)?;
    let fm = eval(&mut f, m)?;
    let fb = eval(&mut f, b)?;
    let whole = simpson(a, b, fa, fm, fb);
    refine(
        &mut f,
        Panel {
            a,
            b,
            fa,
            fm,
            fb,
            whole,
        },
        tol,
        noise,
        MAX_DEPTH,
    )
}

pub fn integrate_with<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64, QuadratureError>
where
    F: FnMut(f64) -> Result<f64, QuadratureError>,
{
    integrate_noisy(f, a, b, tol, 0.0)
}

pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, QuadratureError> {
    integrate_with(|t| Ok(f(t)), a, b, tol)
}

/// Iterated integral over the rectangle `[ax, bx] x [ay, by]`.
pub fn integrate_2d<F: Fn(f64, f64) -> f64>(
    f: F,
    (ax, bx): (f64, f64),
    (ay, by): (f64, f64),
    tol: f64,
) -> Result<f64, QuadratureError> {
    let inner_tol = tol / (10.0 * (bx - ax).abs().max(1.0));
    integrate_noisy(
        |s| integrate(|t| f(s, t), ay, by, inner_tol),
        ax,
        bx,
        tol,
        inner_tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomials_and_trig() {
        assert!((integrate(|t| t * t * t, 0.0, 2.0, 1e-12).unwrap() - 4.0).abs() < 1e-12);
        assert!((integrate(f64::sin, 0.0, PI, 1e-10).unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn log_cos_squared() {
        let w = integrate(|t| (5.0 + 4.0 * t.cos().powi(2)).ln(), 0.0, PI / 2.0, 1e-10).unwrap();
        // int_0^{pi/2} ln(a + b cos^2 t) dt = pi ln((sqrt(a) + sqrt(a + b)) / 2)
        let expected = PI * (((5.0f64).sqrt() + 3.0) / 2.0).ln();
        assert!((w - expected).abs() < 1e-9, "{w} vs {expected}");
    }

    #[test]
    fn two_dimensional() {
        let v = integrate_2d(|s, t| s * t, (0.0, 1.0), (0.0, 2.0), 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn non_finite_integrand() {
        let e = integrate(|t| 1.0 / t, 0.0, 1.0, 1e-8).unwrap_err();
        assert_eq!(e, QuadratureError::NonFinite(0.0));
    }

    #[test]
    fn depth_exhaustion() {
        let e = integrate(|t| (1.0 / t).sin(), 1e-12, 1.0, 1e-300).unwrap_err();
        assert!(matches!(
            e,
            QuadratureError::QuadratureNonConvergence { .. }
        ));
    }
}

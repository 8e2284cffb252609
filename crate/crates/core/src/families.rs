//! Generators and closed forms for cycle dicots, grid graphs and their
//! quotients, grids with doubled vertical edges, and wheel dicots.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use thiserror::Error;

use crate::dicot::{Dicot, DicotBuilder, DicotError, Graph, VertexId};
use crate::linalg::{partition_function, LinalgError};
use crate::planar::{extract_faces, PlanarDicot, PlanarError, Point};
use crate::quotient::{
    check_involution, find_adapted_partition, quotient_dicot, QuotientDicot, QuotientError,
};
use crate::rational::{int, to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("wheel dicots need an odd order, got {0}")]
    EvenOrder(usize),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error(transparent)]
    Dicot(#[from] DicotError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Planar(#[from] PlanarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn need(cond: bool, msg: impl Into<String>) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::InvalidSize(msg.into()))
    }
}

// ---------------------------------------------------------------- cycles

/// `L_0 = 2`, `L_1 = t`, `L_k = t L_{k-1} + L_{k-2}`.
pub fn lucas(n: usize, t: &Rational) -> Rational {
    let (mut prev, mut cur) = (int(2), t.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = t * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Cycle dicot on `2n` vertices: solid path `j -> j+1`, dashed `(1, 2n)`.
pub fn cycle_dicot(
    n: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
) -> Result<Dicot, FamilyError> {
    need(n >= 1, "cycle dicots need n >= 1")?;
    let len = 2 * n as u32;
    let mut builder = DicotBuilder::new(len as usize, x.clone());
    for j in 1..len {
        builder.solid(j, j + 1, a.clone());
    }
    builder.dashed(1, len, b.clone());
    Ok(builder.build()?)
}

/// Path polynomial `P_k = x P_{k-1} + a^2 P_{k-2}`, `P_0 = 1`, `P_1 = x`.
fn path_polynomial(k: usize, x: &Rational, a: &Rational) -> Rational {
    let a2 = a * a;
    let (mut prev, mut cur) = (Rational::one(), x.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = x * &cur + &a2 * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Exact partition function of the cycle dicot on `2n` vertices with
/// dashed weight `b`: `P_{2n} + b^2 P_{2n-2}`.
pub fn cycle_partition(n: usize, x: &Rational, a: &Rational, b: &Rational) -> Rational {
    path_polynomial(2 * n, x, a) + b * b * path_polynomial(2 * n - 2, x, a)
}

/// `a^{2n} L_{2n}(x / a)`, the cycle partition function when `b = a`.
pub fn cycle_lucas(n: usize, x: &Rational, a: &Rational) -> Rational {
    let mut scale = Rational::one();
    for _ in 0..2 * n {
        scale *= a;
    }
    scale * lucas(2 * n, &(x / a))
}

/// Cycle graph `C_len` with edges `j -> j+1` and `1 -> len`.
pub fn cycle_graph(len: usize, x: &Rational, a: &Rational) -> Result<Graph, FamilyError> {
    need(len >= 3, "cycle graphs need at least 3 vertices")?;
    let mut builder = DicotBuilder::new(len, x.clone());
    for j in 1..len as u32 {
        builder.solid(j, j + 1, a.clone());
    }
    builder.solid(1, len as u32, a.clone());
    Ok(builder.build_graph()?)
}

/// `j -> j + len/2 (mod len)`.
pub fn antipodal(len: usize) -> Vec<VertexId> {
    let half = len / 2;
    (0..len)
        .map(|i| VertexId::from_index((i + half) % len))
        .collect()
}

// ---------------------------------------------------------------- grids

/// Boustrophedon label of column `j`, row `k` (both 1-based) in a grid of
/// the given width: odd rows left to right, even rows right to left.
pub fn grid_label(width: usize, j: usize, k: usize) -> u32 {
    let base = (k - 1) * width;
    (if k % 2 == 1 {
        base + j
    } else {
        base + width + 1 - j
    }) as u32
}

/// Unit-spaced coordinates of the grid, indexed by label.
pub fn grid_coords(width: usize, height: usize) -> Vec<Point> {
    let mut pts = vec![Point::from_ints(0, 0); width * height];
    for k in 1..=height {
        for j in 1..=width {
            pts[grid_label(width, j, k) as usize - 1] =
                Point::from_ints(j as i64 - 1, k as i64 - 1);
        }
    }
    pts
}

/// Grid graph `Q_{width,height}`. Horizontal edges run `j -> j+1` on odd
/// rows and back on even rows; vertical edges point away from the seam
/// between rows `height/2` and `height/2 + 1`, towards it from above.
pub fn grid_graph(
    width: usize,
    height: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
) -> Result<Graph, FamilyError> {
    need(
        width >= 1 && height >= 1,
        "grid dimensions must be positive",
    )?;
    let seam = height / 2;
    let mut builder = DicotBuilder::new(width * height, x.clone());
    let l = |j, k| grid_label(width, j, k);
    for k in 1..=height {
        for j in 1..width {
            if k % 2 == 1 {
                builder.solid(l(j, k), l(j + 1, k), a.clone());
            } else {
                builder.solid(l(j + 1, k), l(j, k), a.clone());
            }
        }
    }
    for k in 1..height {
        for j in 1..=width {
            if k < seam {
                builder.solid(l(j, k), l(j, k + 1), b.clone());
            } else {
                builder.solid(l(j, k + 1), l(j, k), b.clone());
            }
        }
    }
    Ok(builder.build_graph()?)
}

/// `(j, k) -> (width + 1 - j, height + 1 - k)`.
pub fn grid_involution(width: usize, height: usize) -> Vec<VertexId> {
    let mut perm = vec![VertexId::new(1); width * height];
    for k in 1..=height {
        for j in 1..=width {
            let from = grid_label(width, j, k);
            let to = grid_label(width, width + 1 - j, height + 1 - k);
            perm[from as usize - 1] = VertexId::new(to);
        }
    }
    perm
}

/// Quotient of `Q_{two_m, 2n}` by its antipodal involution.
pub fn grid_quotient_dicot(
    two_m: usize,
    n: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
) -> Result<QuotientDicot, FamilyError> {
    need(
        two_m >= 2 && two_m.is_multiple_of(2),
        "grid quotients need an even positive width",
    )?;
    need(n >= 1, "grid quotients need n >= 1")?;
    let g = grid_graph(two_m, 2 * n, x, a, b)?;
    let pi = check_involution(&g, &grid_involution(two_m, 2 * n))?;
    let p = find_adapted_partition(&g, &pi)?.ok_or(QuotientError::HypothesisViolated(
        crate::quotient::Hypothesis::AdaptedPartition,
    ))?;
    Ok(quotient_dicot(&g, &pi, &p)?)
}

fn cos2(j: usize, denom: usize) -> f64 {
    let c = (j as f64 * PI / denom as f64).cos();
    c * c
}

/// Closed form for `Z(Q_{2m,2n})`.
pub fn grid_partition_formula(m: usize, n: usize, x: f64, a: f64, b: f64) -> f64 {
    let q = grid_quotient_formula(m, n, x, a, b);
    q * q
}

/// Closed form for the quotient `Q_{2m,2n} / pi`.
pub fn grid_quotient_formula(m: usize, n: usize, x: f64, a: f64, b: f64) -> f64 {
    let mut prod = 1.0;
    for j in 1..=m {
        for k in 1..=n {
            prod *= x * x + 4.0 * a * a * cos2(j, 2 * m + 1) + 4.0 * b * b * cos2(k, 2 * n + 1);
        }
    }
    prod
}

/// Grid with `m` columns and `n` rows, horizontal solid edges of weight
/// `a`, and each vertical pair joined by a solid edge `b1` and a dashed
/// edge `b2`. Solid edges point from the smaller label to the larger.
pub fn grid_vert_dicot(
    m: usize,
    n: usize,
    x: &Rational,
    a: &Rational,
    b1: &Rational,
    b2: &Rational,
) -> Result<Dicot, FamilyError> {
    need(m >= 1 && n >= 1, "grid dimensions must be positive")?;
    let mut builder = DicotBuilder::new(m * n, x.clone());
    let l = |j, k| grid_label(m, j, k);
    let ordered = |p: u32, q: u32| (p.min(q), p.max(q));
    for k in 1..=n {
        for j in 1..m {
            let (s, t) = ordered(l(j, k), l(j + 1, k));
            builder.solid(s, t, a.clone());
        }
    }
    for k in 1..n {
        for j in 1..=m {
            let (s, t) = ordered(l(j, k), l(j, k + 1));
            builder.solid(s, t, b1.clone());
            builder.dashed(s, t, b2.clone());
        }
    }
    Ok(builder.build()?)
}

/// `Y_m(b, c; x) = prod_{j <= m/2} (x^2 + 4 (b^2 + c^2) cos^2(j pi / (m+1)))`.
pub fn y_factor(m: usize, b: f64, c: f64, x: f64) -> f64 {
    (1..=m / 2)
        .map(|j| x * x + 4.0 * (b * b + c * c) * cos2(j, m + 1))
        .product()
}

/// Closed form for the grid with doubled vertical edges.
pub fn grid_vert_formula(m: usize, n: usize, x: f64, a: f64, b1: f64, b2: f64) -> f64 {
    let bb = b1 * b1 + b2 * b2;
    let mut prod = 1.0;
    for j in 1..=m / 2 {
        for k in 1..=n / 2 {
            let f = x * x + 4.0 * a * a * cos2(j, m + 1) + 4.0 * bb * cos2(k, n + 1);
            prod *= f * f;
        }
    }
    let extra = match (m % 2, n % 2) {
        (0, 0) => 1.0,
        (0, _) => y_factor(m, a, 0.0, x),
        (_, 0) => y_factor(n, b1, b2, x),
        _ => x * y_factor(m, a, 0.0, x) * y_factor(n, b1, b2, x),
    };
    prod * extra
}

/// Planar grid dicot on `m` columns and `n` rows with solid horizontal
/// edges (smaller to larger label) and dashed vertical edges.
pub fn grid_dicot(
    m: usize,
    n: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
) -> Result<PlanarDicot, FamilyError> {
    need(m >= 1 && n >= 1, "grid dimensions must be positive")?;
    let mut builder = DicotBuilder::new(m * n, x.clone());
    let l = |j, k| grid_label(m, j, k);
    for k in 1..=n {
        for j in 1..m {
            let (p, q) = (l(j, k), l(j + 1, k));
            builder.solid(p.min(q), p.max(q), a.clone());
        }
    }
    for k in 1..n {
        for j in 1..=m {
            builder.dashed(l(j, k), l(j, k + 1), b.clone());
        }
    }
    Ok(extract_faces(builder.build()?, grid_coords(m, n))?)
}

/// Grid graph `Q_{m,n}` with no orientation imposed (smaller to larger),
/// embedded on unit coordinates.
pub fn planar_grid_graph(
    m: usize,
    n: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
) -> Result<PlanarDicot, FamilyError> {
    need(m >= 1 && n >= 1, "grid dimensions must be positive")?;
    let mut builder = DicotBuilder::new(m * n, x.clone());
    let l = |j, k| grid_label(m, j, k);
    let mut add = |p: u32, q: u32, w: &Rational| {
        builder.solid(p.min(q), p.max(q), w.clone());
    };
    for k in 1..=n {
        for j in 1..=m {
            if j < m {
                add(l(j, k), l(j + 1, k), a);
            }
            if k < n {
                add(l(j, k), l(j, k + 1), b);
            }
        }
    }
    Ok(extract_faces(builder.build()?, grid_coords(m, n))?)
}

// ---------------------------------------------------------------- wheels

/// Position on the rim (0-based, clockwise) of each wheel label.
pub fn wheel_positions(n: usize) -> Vec<usize> {
    let len = 2 * n;
    (0..len)
        .map(|i| {
            if i < n {
                2 * i
            } else {
                (n + 2 * (i - n)) % len
            }
        })
        .collect()
}

/// Wheel dicot of odd order `n`: a solid `2n`-cycle of weight `a` with
/// dashed antipodal chords of weight `b`. Labels alternate around the rim
/// and solid edges point from `1..n` to `n+1..2n`.
pub fn wheel_dicot(
    n: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
) -> Result<Dicot, FamilyError> {
    if n.is_multiple_of(2) {
        return Err(FamilyError::EvenOrder(n));
    }
    need(n >= 3, "wheel dicots need n >= 3")?;
    let len = 2 * n;
    let mut at = vec![0u32; len];
    for (i, &p) in wheel_positions(n).iter().enumerate() {
        at[p] = i as u32 + 1;
    }
    let mut builder = DicotBuilder::new(len, x.clone());
    for p in 0..len {
        let (s, t) = (at[p], at[(p + 1) % len]);
        builder.solid(s.min(t), s.max(t), a.clone());
    }
    for k in 1..=n as u32 {
        builder.dashed(k, k + n as u32, b.clone());
    }
    Ok(builder.build()?)
}

pub fn wheel_formula(n: usize, x: f64, a: f64, b: f64) -> Result<f64, FamilyError> {
    if n.is_multiple_of(2) {
        return Err(FamilyError::EvenOrder(n));
    }
    Ok((0..n)
        .map(|j| x * x + b * b + 4.0 * a * a * cos2(j, n))
        .product())
}

// ---------------------------------------------------------------- specs

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Grid,
    GridQuotient,
    GridVert,
    Wheel,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Grid => "grid",
            Family::GridQuotient => "grid_quotient",
            Family::GridVert => "grid_vert",
            Family::Wheel => "wheel",
        }
    }

    pub fn uses_m(self) -> bool {
        matches!(self, Family::Grid | Family::GridQuotient | Family::GridVert)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.replace('-', "_").as_str() {
            "cycle" | "cycle_dicot" => Family::Cycle,
            "grid" | "grid_graph" => Family::Grid,
            "grid_quotient" | "grid_quotient_dicot" => Family::GridQuotient,
            "grid_vert" | "grid_vert_dicot" => Family::GridVert,
            "wheel" | "wheel_dicot" => Family::Wheel,
            other => return Err(format!("unknown family '{other}'")),
        })
    }
}

/// One family instance with its weights. For `Grid` the sizes are halved
/// dimensions (`Q_{2m,2n}`); for `GridQuotient` the quotient of
/// `Q_{2m,2n}`; for `GridVert` the plain `m x n` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub x: Rational,
    pub a: Rational,
    pub b: Rational,
    pub b1: Rational,
    pub b2: Rational,
}

impl FamilySpec {
    pub fn new(family: Family, m: usize, n: usize) -> Self {
        FamilySpec {
            family,
            m,
            n,
            x: Rational::one(),
            a: Rational::one(),
            b: Rational::one(),
            b1: Rational::one(),
            b2: Rational::one(),
        }
    }

    /// The generated dicot (graphs are returned as dicots without dashed
    /// edges).
    pub fn build(&self) -> Result<Dicot, FamilyError> {
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::Cycle => cycle_dicot(n, &self.x, &self.a, &self.b),
            Family::Grid => {
                need(m >= 1 && n >= 1, "grid dimensions must be positive")?;
                Ok(grid_graph(2 * m, 2 * n, &self.x, &self.a, &self.b)?.to_dicot()?)
            }
            Family::GridQuotient => {
                Ok(grid_quotient_dicot(2 * m, n, &self.x, &self.a, &self.b)?.dicot)
            }
            Family::GridVert => grid_vert_dicot(m, n, &self.x, &self.a, &self.b1, &self.b2),
            Family::Wheel => wheel_dicot(n, &self.x, &self.a, &self.b),
        }
    }

    /// Exact determinant of the generated instance.
    pub fn exact(&self) -> Result<Rational, FamilyError> {
        Ok(partition_function(&self.build()?)?)
    }

    /// Closed-form value in floating point.
    pub fn closed_form(&self) -> Result<f64, FamilyError> {
        let (x, a, b) = (to_f64(&self.x), to_f64(&self.a), to_f64(&self.b));
        let (m, n) = (self.m, self.n);
        Ok(match self.family {
            Family::Cycle => {
                need(n >= 1, "cycle dicots need n >= 1")?;
                to_f64(&cycle_partition(n, &self.x, &self.a, &self.b))
            }
            Family::Grid => grid_partition_formula(m, n, x, a, b),
            Family::GridQuotient => grid_quotient_formula(m, n, x, a, b),
            Family::GridVert => grid_vert_formula(m, n, x, a, to_f64(&self.b1), to_f64(&self.b2)),
            Family::Wheel => wheel_formula(n, x, a, b)?,
        })
    }

    pub fn label(&self) -> String {
        if self.family.uses_m() {
            format!("{}({},{})", self.family, self.m, self.n)
        } else {
            format!("{}({})", self.family, self.n)
        }
    }
}

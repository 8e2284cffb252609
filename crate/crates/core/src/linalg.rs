//! Gaussian-rational matrices, the complex adjacency matrix of a dicot and
//! its exact determinant.

use num_complex::Complex;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::dicot::{Dicot, VertexId};
use crate::rational::{format_rational, Rational};

/// Complex number with exact rational real and imaginary parts.
pub type GaussianRational = Complex<Rational>;

pub fn gaussian(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

pub fn real(re: Rational) -> GaussianRational {
    Complex::new(re, Rational::zero())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("determinant {re} + {im} i has a nonzero imaginary part")]
    NonRealDeterminant { re: String, im: String },
}

/// Dense square matrix over the Gaussian rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<GaussianRational>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![GaussianRational::zero(); n * n],
        }
    }

    /// # Panics
    /// If the rows do not form a square.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ComplexMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: GaussianRational) {
        self.data[i * self.n + j] = z;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(Complex::conj).collect(),
        }
    }

    /// `diag(a, b)`.
    pub fn block_diagonal(a: &Self, b: &Self) -> Self {
        let n = a.n + b.n;
        let mut m = Self::zeros(n);
        for i in 0..a.n {
            for j in 0..a.n {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.n {
            for j in 0..b.n {
                m.set(a.n + i, a.n + j, b.get(i, j).clone());
            }
        }
        m
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result
    /// is entry `(order[i], order[j])` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.n);
        let mut m = Self::zeros(self.n);
        for (i, &oi) in order.iter().enumerate() {
            for (j, &oj) in order.iter().enumerate() {
                m.set(i, j, self.get(oi, oj).clone());
            }
        }
        m
    }

    /// Exact determinant by Gaussian elimination over the Gaussian
    /// rationals. The pivot is the first nonzero entry of the column; each
    /// row swap flips the sign.
    pub fn determinant(&self) -> GaussianRational {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = GaussianRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return GaussianRational::zero();
            };
            if p != k {
                for j in k..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k].clone();
            det *= &pivot;
            let inv = GaussianRational::one() / &pivot;
            for i in k + 1..n {
                if a[i * n + k].is_zero() {
                    continue;
                }
                let factor = &a[i * n + k] * &inv;
                for j in k + 1..n {
                    if a[k * n + j].is_zero() {
                        continue;
                    }
                    let delta = &factor * &a[k * n + j];
                    a[i * n + j] -= delta;
                }
                a[i * n + k] = GaussianRational::zero();
            }
        }
        det
    }

    /// Debug dump: rows of `{"re": "p/q", "im": "p/q"}`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.n)
            .map(|i| {
                Value::Array(
                    (0..self.n)
                        .map(|j| {
                            let z = self.get(i, j);
                            json!({"re": format_rational(&z.re), "im": format_rational(&z.im)})
                        })
                        .collect(),
                )
            })
            .collect();
        Value::Array(rows)
    }
}

/// The complex adjacency matrix: `x(v)` on the diagonal, `a + i b` at
/// `(u, v)` when the solid edge points `u -> v`, `-a + i b` at `(v, u)`.
pub fn adjacency_matrix(dicot: &Dicot) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dicot.vertex_count());
    for u in dicot.vertices() {
        m.set(u.index(), u.index(), real(dicot.weight(u).clone()));
    }
    for e in dicot.solid_edges() {
        let (t, h) = (e.tail.index(), e.head.index());
        m.data[t * m.n + h].re += &e.weight;
        m.data[h * m.n + t].re -= &e.weight;
    }
    for e in dicot.dashed_edges() {
        let (p, q) = (e.u.index(), e.v.index());
        m.data[p * m.n + q].im += &e.weight;
        m.data[q * m.n + p].im += &e.weight;
    }
    m
}

/// Diagonal equals the vertex weights, real part of the off-diagonal is
/// skew-symmetric, imaginary part is symmetric with zero diagonal.
pub fn has_adjacency_structure(m: &ComplexMatrix, dicot: &Dicot) -> bool {
    let n = m.dim();
    if n != dicot.vertex_count() {
        return false;
    }
    for i in 0..n {
        let d = m.get(i, i);
        if !d.im.is_zero() || &d.re != dicot.weight(VertexId::from_index(i)) {
            return false;
        }
        for j in i + 1..n {
            let (p, q) = (m.get(i, j), m.get(j, i));
            if p.re != -q.re.clone() || p.im != q.im {
                return false;
            }
        }
    }
    true
}

pub fn determinant(m: &ComplexMatrix) -> GaussianRational {
    m.determinant()
}

/// Partition function `det K(dicot)`. The determinant of a dicot's complex
/// adjacency matrix is always real; a nonzero imaginary part is reported,
/// never discarded.
pub fn partition_function(dicot: &Dicot) -> Result<Rational, LinalgError> {
    real_part(adjacency_matrix(dicot).determinant())
}

pub(crate) fn real_part(z: GaussianRational) -> Result<Rational, LinalgError> {
    if z.im.is_zero() {
        Ok(z.re)
    } else {
        Err(LinalgError::NonRealDeterminant {
            re: format_rational(&z.re),
            im: format_rational(&z.im),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicot::{complete_dicot, DicotBuilder};
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        gaussian(int(re), int(im))
    }

    /// Laplace expansion along the first row; independent of elimination.
    fn cofactor_det(m: &ComplexMatrix) -> GaussianRational {
        fn rec(rows: &[Vec<GaussianRational>]) -> GaussianRational {
            let n = rows.len();
            if n == 0 {
                return GaussianRational::one();
            }
            let mut total = GaussianRational::zero();
            for c in 0..n {
                if rows[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<GaussianRational>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, z)| z.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][c] * rec(&minor);
                if c % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
        let rows: Vec<Vec<GaussianRational>> = (0..m.dim())
            .map(|i| (0..m.dim()).map(|j| m.get(i, j).clone()).collect())
            .collect();
        rec(&rows)
    }

    #[test]
    fn small_determinants() {
        assert_eq!(
            ComplexMatrix::from_rows(vec![vec![g(7, 0)]]).determinant(),
            g(7, 0)
        );
        let m = ComplexMatrix::from_rows(vec![vec![g(1, 0), g(1, 1)], vec![g(-1, 1), g(1, 0)]]);
        assert_eq!(cofactor_det(&m), g(3, 0));
        assert_eq!(m.determinant(), g(3, 0));
        assert_eq!(ComplexMatrix::zeros(0).determinant(), g(1, 0));
        // needs a row swap
        let swap = ComplexMatrix::from_rows(vec![vec![g(0, 0), g(2, 0)], vec![g(3, 0), g(0, 0)]]);
        assert_eq!(swap.determinant(), g(-6, 0));
        let singular =
            ComplexMatrix::from_rows(vec![vec![g(1, 1), g(2, 2)], vec![g(1, 0), g(2, 0)]]);
        assert_eq!(singular.determinant(), g(0, 0));
    }

    #[test]
    fn two_vertex_matrix() {
        let mut b = DicotBuilder::new(2, int(2));
        b.vertex_weight(2, int(5))
            .solid(1, 2, int(3))
            .dashed(1, 2, int(4));
        let d = b.build().unwrap();
        let m = adjacency_matrix(&d);
        let expected =
            ComplexMatrix::from_rows(vec![vec![g(2, 0), g(3, 4)], vec![g(-3, 4), g(5, 0)]]);
        assert_eq!(m, expected);
        assert!(has_adjacency_structure(&m, &d));
        assert_eq!(partition_function(&d).unwrap(), int(10 + 9 + 16));
    }

    #[test]
    fn complete_dicot_unit_value() {
        let d = complete_dicot(2).unwrap();
        let m = adjacency_matrix(&d);
        assert_eq!(m.get(0, 2), &g(0, 0));
        assert_eq!(m.get(0, 1), &g(1, 1));
        assert_eq!(m.get(3, 0), &g(-1, 1));
        assert_eq!(partition_function(&d).unwrap(), int(17));
    }

    #[test]
    fn non_real_is_an_error() {
        assert!(real_part(g(1, 1)).is_err());
        assert_eq!(real_part(g(4, 0)).unwrap(), int(4));
    }

    fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
        (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
            .prop_map(|(a, b, c, d)| gaussian(ratio(a, b), ratio(c, d)))
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = ComplexMatrix> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(arb_gaussian(), n * n).prop_map(move |data| {
                ComplexMatrix::from_rows(data.chunks(n).map(|c| c.to_vec()).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn elimination_matches_cofactor(m in arb_matrix(5)) {
            prop_assert_eq!(m.determinant(), cofactor_det(&m));
        }

        #[test]
        fn transpose_invariant(m in arb_matrix(5)) {
            prop_assert_eq!(m.transpose().determinant(), m.determinant());
        }

        #[test]
        fn block_diagonal_multiplies(a in arb_matrix(4), b in arb_matrix(4)) {
            let joined = ComplexMatrix::block_diagonal(&a, &b);
            prop_assert_eq!(joined.determinant(), a.determinant() * b.determinant());
        }
    }
}

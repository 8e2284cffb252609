//! Directed loops, monopole-dimer configurations and their weights.

use std::collections::HashSet;

use num_traits::One;
use thiserror::Error;

use super::{Dicot, EdgeKind, VertexId};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error("a loop needs an even number of at least two vertices, got {0}")]
    BadLength(usize),
    #[error("{vertices} vertices but {kinds} edge kinds")]
    KindCountMismatch { vertices: usize, kinds: usize },
    #[error("vertex {0} repeats in the loop")]
    RepeatedVertex(VertexId),
}

/// A directed closed walk `v1 -> v2 -> ... -> v_{2m} -> v1`; step `j` uses
/// an edge of kind `kinds[j]`.
///
/// Stored rotated so the smallest vertex comes first. For `m >= 2` the two
/// traversal directions are different values; a length-2 loop is a doubled
/// edge and has a single form. A length-2 loop mixing one solid and one
/// dashed step can be built, but carries an odd number of dashed steps and
/// is rejected by [`loop_weight`] and by configuration validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Loop {
    vertices: Vec<VertexId>,
    kinds: Vec<EdgeKind>,
}

impl Loop {
    pub fn new(vertices: Vec<VertexId>, kinds: Vec<EdgeKind>) -> Result<Loop, LoopError> {
        let len = vertices.len();
        if len < 2 || len % 2 == 1 {
            return Err(LoopError::BadLength(len));
        }
        if kinds.len() != len {
            return Err(LoopError::KindCountMismatch {
                vertices: len,
                kinds: kinds.len(),
            });
        }
        let mut seen = HashSet::new();
        for &u in &vertices {
            if !seen.insert(u) {
                return Err(LoopError::RepeatedVertex(u));
            }
        }
        let start = (0..len).min_by_key(|&i| vertices[i]).unwrap();
        let mut vertices = vertices;
        let mut kinds = kinds;
        vertices.rotate_left(start);
        kinds.rotate_left(start);
        if len == 2 {
            kinds.sort();
        }
        Ok(Loop { vertices, kinds })
    }

    /// The length-2 loop running along one edge and back.
    pub fn doubled(a: VertexId, b: VertexId, kind: EdgeKind) -> Result<Loop, LoopError> {
        Loop::new(vec![a, b], vec![kind, kind])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn kinds(&self) -> &[EdgeKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_doubled_edge(&self) -> bool {
        self.vertices.len() == 2
    }

    pub fn dashed_count(&self) -> usize {
        self.kinds
            .iter()
            .filter(|&&k| k == EdgeKind::Dashed)
            .count()
    }

    /// `(from, to, kind)` for each step, closing back to the first vertex.
    pub fn steps(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeKind)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |j| (self.vertices[j], self.vertices[(j + 1) % n], self.kinds[j]))
    }

    /// The same support traversed the other way.
    pub fn reversed(&self) -> Loop {
        if self.is_doubled_edge() {
            return self.clone();
        }
        let n = self.vertices.len();
        let mut vertices = Vec::with_capacity(n);
        let mut kinds = Vec::with_capacity(n);
        vertices.push(self.vertices[0]);
        for j in (1..n).rev() {
            vertices.push(self.vertices[j]);
        }
        for j in (0..n).rev() {
            kinds.push(self.kinds[j]);
        }
        Loop { vertices, kinds }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("no {kind} edge between {from} and {to}")]
    EdgeNotInDicot {
        from: VertexId,
        to: VertexId,
        kind: EdgeKind,
    },
    #[error("loop has {0} dashed steps; loops need an even number (a solid step paired with a dashed step is not a doubled edge)")]
    OddDashedCount(usize),
    #[error("configuration does not cover the vertex set exactly once: {0}")]
    Coverage(String),
}

/// Weight of a directed loop: minus the product over its steps of `+a`
/// along the orientation, `-a` against it, and `i b` for a dashed step.
pub fn loop_weight(lp: &Loop, dicot: &Dicot) -> Result<Rational, WeightError> {
    let dashed = lp.dashed_count();
    if dashed % 2 == 1 {
        return Err(WeightError::OddDashedCount(dashed));
    }
    let mut magnitude = Rational::one();
    let mut against = 0usize;
    for (from, to, kind) in lp.steps() {
        let missing = || WeightError::EdgeNotInDicot { from, to, kind };
        match kind {
            EdgeKind::Solid => {
                let e = dicot.solid_between(from, to).ok_or_else(missing)?;
                if e.tail != from {
                    against += 1;
                }
                magnitude *= &e.weight;
            }
            EdgeKind::Dashed => {
                let e = dicot.dashed_between(from, to).ok_or_else(missing)?;
                magnitude *= &e.weight;
            }
        }
    }
    // product = (-1)^against * i^dashed * magnitude, and i^dashed = (-1)^(dashed/2)
    let negative_product = (against + dashed / 2) % 2 == 1;
    Ok(if negative_product {
        magnitude
    } else {
        -magnitude
    })
}

/// A monopole-dimer configuration: vertex-disjoint loops plus isolated
/// vertices, together covering every vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonopoleDimerConfig {
    pub loops: Vec<Loop>,
    pub isolated: Vec<VertexId>,
}

impl MonopoleDimerConfig {
    /// Loops ordered by first vertex and isolated vertices ascending.
    pub fn canonical(&self) -> MonopoleDimerConfig {
        let mut loops = self.loops.clone();
        loops.sort();
        let mut isolated = self.isolated.clone();
        isolated.sort();
        MonopoleDimerConfig { loops, isolated }
    }

    /// Number of vertices covered by loops.
    pub fn loop_vertex_count(&self) -> usize {
        self.loops.iter().map(Loop::len).sum()
    }

    pub fn check_coverage(&self, vertex_count: usize) -> Result<(), WeightError> {
        let mut seen = vec![false; vertex_count];
        let all = self
            .loops
            .iter()
            .flat_map(|l| l.vertices().iter().copied())
            .chain(self.isolated.iter().copied());
        for u in all {
            if u.index() >= vertex_count {
                return Err(WeightError::Coverage(format!(
                    "vertex {u} is not in the dicot"
                )));
            }
            if std::mem::replace(&mut seen[u.index()], true) {
                return Err(WeightError::Coverage(format!("vertex {u} covered twice")));
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(WeightError::Coverage(format!(
                "vertex {} not covered",
                VertexId::from_index(missing)
            )));
        }
        for lp in &self.loops {
            if lp.dashed_count() % 2 == 1 {
                return Err(WeightError::OddDashedCount(lp.dashed_count()));
            }
        }
        Ok(())
    }
}

/// Product of loop weights times the vertex weights of isolated vertices.
pub fn config_weight(config: &MonopoleDimerConfig, dicot: &Dicot) -> Result<Rational, WeightError> {
    config.check_coverage(dicot.vertex_count())?;
    let mut w = Rational::one();
    for lp in &config.loops {
        w *= loop_weight(lp, dicot)?;
    }
    for &u in &config.isolated {
        w *= dicot.weight(u);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicot::{complete_dicot, v, DicotBuilder};
    use crate::rational::{int, ratio};
    use EdgeKind::{Dashed as D, Solid as S};

    fn two_vertex(a: Rational, b: Rational) -> Dicot {
        let mut builder = DicotBuilder::new(2, int(1));
        builder.solid(1, 2, a).dashed(1, 2, b);
        builder.build().unwrap()
    }

    #[test]
    fn doubled_edges_are_squares() {
        let d = two_vertex(int(3), ratio(2, 5));
        let solid = Loop::doubled(v(1), v(2), S).unwrap();
        let dashed = Loop::doubled(v(2), v(1), D).unwrap();
        assert_eq!(loop_weight(&solid, &d).unwrap(), int(9));
        assert_eq!(loop_weight(&dashed, &d).unwrap(), ratio(4, 25));
    }

    #[test]
    fn mixed_doubled_edge_rejected() {
        let d = two_vertex(int(1), int(1));
        let mixed = Loop::new(vec![v(1), v(2)], vec![S, D]).unwrap();
        assert_eq!(loop_weight(&mixed, &d), Err(WeightError::OddDashedCount(1)));
        let cfg = MonopoleDimerConfig {
            loops: vec![mixed],
            isolated: vec![],
        };
        assert!(config_weight(&cfg, &d).is_err());
    }

    #[test]
    fn canonical_rotation_and_reversal() {
        let l = Loop::new(vec![v(3), v(4), v(1), v(2)], vec![S, D, S, D]).unwrap();
        assert_eq!(l.vertices(), &[v(1), v(2), v(3), v(4)]);
        assert_eq!(l.kinds(), &[S, D, S, D]);
        let r = l.reversed();
        assert_eq!(r.vertices(), &[v(1), v(4), v(3), v(2)]);
        assert_eq!(r.kinds(), &[D, S, D, S]);
        assert_eq!(r.reversed(), l);
        assert_ne!(r, l);
        assert!(Loop::new(vec![v(1), v(2), v(3)], vec![S, S, S]).is_err());
        assert!(Loop::new(vec![v(1), v(2), v(1), v(2)], vec![S; 4]).is_err());
    }

    #[test]
    fn four_loop_on_complete_dicot() {
        let d = complete_dicot(2).unwrap();
        // 1->2->3->4 with the solid edges; (4,1) traversed against 1->4
        let l = Loop::new(vec![v(1), v(2), v(3), v(4)], vec![S, S, S, S]).unwrap();
        assert_eq!(loop_weight(&l, &d).unwrap(), int(1));
        // the Example's -2 a12 a14 b23 b34 monomial
        let l = Loop::new(vec![v(1), v(2), v(3), v(4)], vec![S, D, D, S]).unwrap();
        assert_eq!(loop_weight(&l, &d).unwrap(), int(-1));
        assert_eq!(loop_weight(&l.reversed(), &d).unwrap(), int(-1));
        let missing = Loop::new(vec![v(1), v(3)], vec![S, S]).unwrap();
        assert!(matches!(
            loop_weight(&missing, &d),
            Err(WeightError::EdgeNotInDicot { .. })
        ));
    }

    #[test]
    fn config_weight_and_coverage() {
        let mut b = DicotBuilder::with_unit_weights(4);
        for (i, x) in [2, 3, 5, 7].into_iter().enumerate() {
            b.vertex_weight(i as u32 + 1, int(x));
        }
        b.solid(1, 2, int(1))
            .solid(2, 3, int(1))
            .solid(3, 4, int(1))
            .solid(1, 4, int(1));
        let d = b.build().unwrap();
        let all = MonopoleDimerConfig {
            loops: vec![],
            isolated: vec![v(1), v(2), v(3), v(4)],
        };
        assert_eq!(config_weight(&all, &d).unwrap(), int(210));
        let short = MonopoleDimerConfig {
            loops: vec![],
            isolated: vec![v(1), v(2), v(3)],
        };
        assert!(matches!(
            config_weight(&short, &d),
            Err(WeightError::Coverage(_))
        ));
        let twice = MonopoleDimerConfig {
            loops: vec![Loop::doubled(v(1), v(2), S).unwrap()],
            isolated: vec![v(2), v(3), v(4)],
        };
        assert!(matches!(
            config_weight(&twice, &d),
            Err(WeightError::Coverage(_))
        ));
        let ok = MonopoleDimerConfig {
            loops: vec![Loop::doubled(v(1), v(2), S).unwrap()],
            isolated: vec![v(3), v(4)],
        };
        assert_eq!(config_weight(&ok, &d).unwrap(), int(35));
    }
}

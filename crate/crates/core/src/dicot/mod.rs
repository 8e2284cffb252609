//! Dicots: vertex-weighted graphs with oriented solid edges and unoriented
//! dashed edges whose union is bipartite.
//!
//! Vertex labels are `1..=n`. Every constructor funnels through
//! [`validate_dicot`], so a [`Dicot`] value always satisfies the axioms.

mod config;

pub use config::{config_weight, loop_weight, Loop, LoopError, MonopoleDimerConfig, WeightError};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::json::{JsonRational, RawDicot, RawVertex};
use crate::rational::Rational;

/// A 1-based vertex label.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(u32);

impl VertexId {
    /// # Panics
    /// If `label` is zero.
    pub fn new(label: u32) -> Self {
        assert!(label >= 1, "vertex labels start at 1");
        VertexId(label)
    }

    pub fn label(self) -> u32 {
        self.0
    }

    /// Zero-based position, for indexing matrices and vectors.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(i: usize) -> Self {
        VertexId(i as u32 + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand for [`VertexId::new`].
pub fn v(label: u32) -> VertexId {
    VertexId::new(label)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Solid,
    Dashed,
}

impl EdgeKind {
    pub fn code(self) -> &'static str {
        match self {
            EdgeKind::Solid => "s",
            EdgeKind::Dashed => "d",
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Solid => "solid",
            EdgeKind::Dashed => "dashed",
        })
    }
}

/// A solid edge; the pair order is the orientation `tail -> head`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolidEdge {
    pub tail: VertexId,
    pub head: VertexId,
    pub weight: Rational,
}

/// A dashed edge, stored with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DashedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DicotError {
    #[error("bad vertex labels: {0}")]
    BadLabels(String),
    #[error("non-positive weight: {0}")]
    NonPositiveWeight(String),
    #[error("{kind} edge joins vertex {vertex} to itself")]
    SelfLoop { kind: EdgeKind, vertex: u32 },
    #[error("duplicate {kind} edge between {u} and {v}")]
    DuplicateEdge { kind: EdgeKind, u: u32, v: u32 },
    #[error("solid and dashed edges do not form a bipartite graph; odd cycle {witness:?}")]
    NotBipartite { witness: Vec<u32> },
    #[error("a graph cannot carry dashed edges")]
    DashedEdgeInGraph,
    #[error("orientation does not match the solid edges: {0}")]
    OrientationMismatch(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
}

impl DicotError {
    /// Name of the violated axiom, as reported by the CLI.
    pub fn axiom(&self) -> &'static str {
        match self {
            DicotError::BadLabels(_) => "BadLabels",
            DicotError::NonPositiveWeight(_) => "NonPositiveWeight",
            DicotError::SelfLoop { .. } => "SelfLoop",
            DicotError::DuplicateEdge { .. } => "DuplicateEdge",
            DicotError::NotBipartite { .. } => "NotBipartite",
            DicotError::DashedEdgeInGraph => "DashedEdgeInGraph",
            DicotError::OrientationMismatch(_) => "OrientationMismatch",
            DicotError::InvalidSize(_) => "InvalidSize",
        }
    }
}

/// Orientation of the solid edges, listed as `(tail, head)` in the dicot's
/// solid-edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation(pub Vec<(VertexId, VertexId)>);

fn key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dicot {
    x: Vec<Rational>,
    solid: Vec<SolidEdge>,
    dashed: Vec<DashedEdge>,
    solid_at: HashMap<(VertexId, VertexId), usize>,
    dashed_at: HashMap<(VertexId, VertexId), usize>,
    adjacency: Vec<Vec<(VertexId, EdgeKind)>>,
}

impl Dicot {
    pub fn vertex_count(&self) -> usize {
        self.x.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.x.len()).map(VertexId::from_index)
    }

    pub fn weight(&self, v: VertexId) -> &Rational {
        &self.x[v.index()]
    }

    pub fn vertex_weights(&self) -> &[Rational] {
        &self.x
    }

    pub fn solid_edges(&self) -> &[SolidEdge] {
        &self.solid
    }

    pub fn dashed_edges(&self) -> &[DashedEdge] {
        &self.dashed
    }

    pub fn solid_between(&self, a: VertexId, b: VertexId) -> Option<&SolidEdge> {
        self.solid_at.get(&key(a, b)).map(|&i| &self.solid[i])
    }

    pub fn solid_index(&self, a: VertexId, b: VertexId) -> Option<usize> {
        self.solid_at.get(&key(a, b)).copied()
    }

    pub fn dashed_between(&self, a: VertexId, b: VertexId) -> Option<&DashedEdge> {
        self.dashed_at.get(&key(a, b)).map(|&i| &self.dashed[i])
    }

    pub fn dashed_index(&self, a: VertexId, b: VertexId) -> Option<usize> {
        self.dashed_at.get(&key(a, b)).copied()
    }

    pub fn edge_weight(&self, a: VertexId, b: VertexId, kind: EdgeKind) -> Option<&Rational> {
        match kind {
            EdgeKind::Solid => self.solid_between(a, b).map(|e| &e.weight),
            EdgeKind::Dashed => self.dashed_between(a, b).map(|e| &e.weight),
        }
    }

    /// Neighbours of `v` with the kind of each connecting edge, sorted by
    /// neighbour label then kind (solid before dashed).
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeKind)] {
        &self.adjacency[v.index()]
    }

    pub fn orientation(&self) -> Orientation {
        Orientation(self.solid.iter().map(|e| (e.tail, e.head)).collect())
    }

    /// The same dicot with its solid edges re-oriented.
    pub fn reoriented(&self, orientation: &Orientation) -> Result<Dicot, DicotError> {
        if orientation.0.len() != self.solid.len() {
            return Err(DicotError::OrientationMismatch(format!(
                "{} pairs for {} solid edges",
                orientation.0.len(),
                self.solid.len()
            )));
        }
        let mut out = self.clone();
        for (edge, &(tail, head)) in out.solid.iter_mut().zip(&orientation.0) {
            if key(tail, head) != key(edge.tail, edge.head) {
                return Err(DicotError::OrientationMismatch(format!(
                    "({tail},{head}) is not the edge ({},{})",
                    edge.tail, edge.head
                )));
            }
            edge.tail = tail;
            edge.head = head;
        }
        Ok(out)
    }

    pub fn to_raw(&self) -> RawDicot {
        RawDicot {
            vertices: self
                .x
                .iter()
                .enumerate()
                .map(|(i, x)| RawVertex {
                    id: i as i64 + 1,
                    x: JsonRational(x.clone()),
                })
                .collect(),
            solid: self
                .solid
                .iter()
                .map(|e| (e.tail.0 as i64, e.head.0 as i64, e.weight.clone().into()))
                .collect(),
            dashed: self
                .dashed
                .iter()
                .map(|e| (e.u.0 as i64, e.v.0 as i64, e.weight.clone().into()))
                .collect(),
            coords: None,
        }
    }

    pub fn to_json(&self) -> String {
        self.to_raw().to_json()
    }

    pub fn from_json(text: &str) -> Result<Dicot, crate::json::InputError> {
        let raw = RawDicot::from_json(text)?;
        Ok(validate_dicot(&raw)?)
    }

    /// Assembles without the bipartite check; callers decide.
    fn assemble(x: Vec<Rational>, solid: Vec<SolidEdge>, dashed: Vec<DashedEdge>) -> Dicot {
        let n = x.len();
        let mut solid_at = HashMap::new();
        let mut dashed_at = HashMap::new();
        let mut adjacency = vec![Vec::new(); n];
        for (i, e) in solid.iter().enumerate() {
            solid_at.insert(key(e.tail, e.head), i);
            adjacency[e.tail.index()].push((e.head, EdgeKind::Solid));
            adjacency[e.head.index()].push((e.tail, EdgeKind::Solid));
        }
        for (i, e) in dashed.iter().enumerate() {
            dashed_at.insert(key(e.u, e.v), i);
            adjacency[e.u.index()].push((e.v, EdgeKind::Dashed));
            adjacency[e.v.index()].push((e.u, EdgeKind::Dashed));
        }
        for list in &mut adjacency {
            list.sort();
        }
        Dicot {
            x,
            solid,
            dashed,
            solid_at,
            dashed_at,
            adjacency,
        }
    }

    /// Proper 2-colouring of `A ∪ B`, or an odd cycle.
    fn two_coloring(&self) -> Result<Vec<bool>, Vec<u32>> {
        two_coloring(self.vertex_count(), |u| {
            self.adjacency[u.index()].iter().map(|&(w, _)| w).collect()
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adjacency[u] {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    queue.push_back(w.index());
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// BFS 2-colouring. On failure returns an odd cycle that starts at its
/// smallest label, continuing towards the smaller of its two neighbours.
fn two_coloring(
    n: usize,
    neighbors: impl Fn(VertexId) -> Vec<VertexId>,
) -> Result<Vec<bool>, Vec<u32>> {
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for w in neighbors(VertexId::from_index(u)) {
                let wi = w.index();
                match color[wi] {
                    None => {
                        color[wi] = Some(!cu);
                        parent[wi] = Some(u);
                        depth[wi] = depth[u] + 1;
                        queue.push_back(wi);
                    }
                    Some(cw) if cw == cu => {
                        return Err(odd_cycle(u, wi, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}

fn odd_cycle(mut a: usize, mut b: usize, parent: &[Option<usize>], depth: &[usize]) -> Vec<u32> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a].unwrap();
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b].unwrap();
        right.push(b);
    }
    while a != b {
        a = parent[a].unwrap();
        b = parent[b].unwrap();
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    let mut cycle: Vec<u32> = left
        .into_iter()
        .chain(right)
        .map(|i| i as u32 + 1)
        .collect();
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    let len = cycle.len();
    if len > 2 && cycle[len - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

fn checked_label(id: i64, n: usize, what: &str) -> Result<VertexId, DicotError> {
    if id < 1 || id as usize > n {
        return Err(DicotError::BadLabels(format!(
            "{what} refers to vertex {id}, labels are 1..={n}"
        )));
    }
    Ok(VertexId(id as u32))
}

fn positive(w: &Rational, what: impl FnOnce() -> String) -> Result<Rational, DicotError> {
    if w.is_positive() {
        Ok(w.clone())
    } else {
        Err(DicotError::NonPositiveWeight(format!(
            "{} has weight {w}",
            what()
        )))
    }
}

/// Checks labels, weights, self-loops and duplicates; no bipartite check.
fn validate_structure(raw: &RawDicot) -> Result<Dicot, DicotError> {
    let n = raw.vertices.len();
    let mut x: Vec<Option<Rational>> = vec![None; n];
    for vert in &raw.vertices {
        let id = checked_label(vert.id, n, "vertex list")?;
        if x[id.index()].is_some() {
            return Err(DicotError::BadLabels(format!(
                "vertex {} listed twice",
                vert.id
            )));
        }
        x[id.index()] = Some(positive(&vert.x.0, || format!("vertex {}", vert.id))?);
    }
    let x: Vec<Rational> = x
        .into_iter()
        .map(|w| w.expect("labels 1..=n all present"))
        .collect();

    let mut solid = Vec::with_capacity(raw.solid.len());
    let mut seen = HashMap::new();
    for (a, b, w) in &raw.solid {
        let tail = checked_label(*a, n, "solid edge")?;
        let head = checked_label(*b, n, "solid edge")?;
        if tail == head {
            return Err(DicotError::SelfLoop {
                kind: EdgeKind::Solid,
                vertex: tail.0,
            });
        }
        let k = key(tail, head);
        if seen.insert(k, ()).is_some() {
            return Err(DicotError::DuplicateEdge {
                kind: EdgeKind::Solid,
                u: k.0 .0,
                v: k.1 .0,
            });
        }
        let weight = positive(&w.0, || format!("solid edge ({a},{b})"))?;
        solid.push(SolidEdge { tail, head, weight });
    }

    let mut dashed = Vec::with_capacity(raw.dashed.len());
    let mut seen = HashMap::new();
    for (a, b, w) in &raw.dashed {
        let p = checked_label(*a, n, "dashed edge")?;
        let q = checked_label(*b, n, "dashed edge")?;
        if p == q {
            return Err(DicotError::SelfLoop {
                kind: EdgeKind::Dashed,
                vertex: p.0,
            });
        }
        let (u, v) = key(p, q);
        if seen.insert((u, v), ()).is_some() {
            return Err(DicotError::DuplicateEdge {
                kind: EdgeKind::Dashed,
                u: u.0,
                v: v.0,
            });
        }
        let weight = positive(&w.0, || format!("dashed edge ({a},{b})"))?;
        dashed.push(DashedEdge { u, v, weight });
    }
    Ok(Dicot::assemble(x, solid, dashed))
}

/// Validates an untyped description against the dicot axioms.
pub fn validate_dicot(raw: &RawDicot) -> Result<Dicot, DicotError> {
    let d = validate_structure(raw)?;
    d.two_coloring()
        .map_err(|witness| DicotError::NotBipartite { witness })?;
    Ok(d)
}

/// A simple, vertex- and edge-weighted graph with oriented edges (a dicot
/// without dashed edges, where bipartiteness is not required).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    inner: Dicot,
}

impl Graph {
    pub fn from_raw(raw: &RawDicot) -> Result<Graph, DicotError> {
        if !raw.dashed.is_empty() {
            return Err(DicotError::DashedEdgeInGraph);
        }
        Ok(Graph {
            inner: validate_structure(raw)?,
        })
    }

    pub fn from_json(text: &str) -> Result<Graph, crate::json::InputError> {
        let raw = RawDicot::from_json(text)?;
        Ok(Graph::from_raw(&raw)?)
    }

    pub fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        self.inner.vertices()
    }

    pub fn weight(&self, v: VertexId) -> &Rational {
        self.inner.weight(v)
    }

    pub fn edges(&self) -> &[SolidEdge] {
        self.inner.solid_edges()
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<&SolidEdge> {
        self.inner.solid_between(a, b)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.inner.neighbors(v).iter().map(|&(w, _)| w)
    }

    pub fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        self.inner.two_coloring().is_ok()
    }

    /// The graph as a dicot with no dashed edges; fails when not bipartite.
    pub fn to_dicot(&self) -> Result<Dicot, DicotError> {
        self.inner
            .two_coloring()
            .map_err(|witness| DicotError::NotBipartite { witness })?;
        Ok(self.inner.clone())
    }

    /// Structural view used for matrix assembly; may be non-bipartite.
    pub(crate) fn structure(&self) -> &Dicot {
        &self.inner
    }

    pub fn to_raw(&self) -> RawDicot {
        self.inner.to_raw()
    }
}

/// Incremental construction of dicots and graphs from typed weights.
#[derive(Debug, Clone, Default)]
pub struct DicotBuilder {
    x: Vec<Rational>,
    solid: Vec<(u32, u32, Rational)>,
    dashed: Vec<(u32, u32, Rational)>,
}

impl DicotBuilder {
    /// `n` vertices, all of weight `x`.
    pub fn new(n: usize, x: Rational) -> Self {
        DicotBuilder {
            x: vec![x; n],
            ..Default::default()
        }
    }

    pub fn from_weights(x: Vec<Rational>) -> Self {
        DicotBuilder {
            x,
            ..Default::default()
        }
    }

    pub fn with_unit_weights(n: usize) -> Self {
        Self::new(n, Rational::one())
    }

    pub fn vertex_weight(&mut self, v: u32, x: Rational) -> &mut Self {
        self.x[v as usize - 1] = x;
        self
    }

    pub fn solid(&mut self, tail: u32, head: u32, a: Rational) -> &mut Self {
        self.solid.push((tail, head, a));
        self
    }

    pub fn dashed(&mut self, u: u32, v: u32, b: Rational) -> &mut Self {
        self.dashed.push((u, v, b));
        self
    }

    pub fn to_raw(&self) -> RawDicot {
        RawDicot {
            vertices: self
                .x
                .iter()
                .enumerate()
                .map(|(i, x)| RawVertex {
                    id: i as i64 + 1,
                    x: JsonRational(x.clone()),
                })
                .collect(),
            solid: self
                .solid
                .iter()
                .map(|(a, b, w)| (*a as i64, *b as i64, JsonRational(w.clone())))
                .collect(),
            dashed: self
                .dashed
                .iter()
                .map(|(a, b, w)| (*a as i64, *b as i64, JsonRational(w.clone())))
                .collect(),
            coords: None,
        }
    }

    pub fn build(&self) -> Result<Dicot, DicotError> {
        validate_dicot(&self.to_raw())
    }

    pub fn build_graph(&self) -> Result<Graph, DicotError> {
        Graph::from_raw(&self.to_raw())
    }
}

/// The complete dicot on `2n` vertices: one solid and one dashed edge
/// between every odd and every even label, all weights one, solid edges
/// oriented from smaller to larger label.
pub fn complete_dicot(n: usize) -> Result<Dicot, DicotError> {
    complete_dicot_weighted(n, &Rational::one(), &Rational::one(), &Rational::one())
}

pub fn complete_dicot_weighted(
    n: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
) -> Result<Dicot, DicotError> {
    if n == 0 {
        return Err(DicotError::InvalidSize(
            "complete dicot needs n >= 1".into(),
        ));
    }
    let mut builder = DicotBuilder::new(2 * n, x.clone());
    let labels = 1..=(2 * n as u32);
    for p in labels.clone() {
        for q in labels.clone().filter(|&q| q > p && (q - p) % 2 == 1) {
            builder.solid(p, q, a.clone());
            builder.dashed(p, q, b.clone());
        }
    }
    builder.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn raw(json: &str) -> RawDicot {
        RawDicot::from_json(json).unwrap()
    }

    #[test]
    fn complete_dicot_sizes() {
        let d1 = complete_dicot(1).unwrap();
        assert_eq!(
            (
                d1.vertex_count(),
                d1.solid_edges().len(),
                d1.dashed_edges().len()
            ),
            (2, 1, 1)
        );
        let d2 = complete_dicot(2).unwrap();
        assert_eq!(
            (
                d2.vertex_count(),
                d2.solid_edges().len(),
                d2.dashed_edges().len()
            ),
            (4, 4, 4)
        );
        assert!(d2.solid_between(v(1), v(3)).is_none());
        assert!(d2.dashed_between(v(2), v(4)).is_none());
        // brute count of odd-even pairs
        let d3 = complete_dicot(3).unwrap();
        let pairs = (1..=6)
            .flat_map(|p| (p + 1..=6).map(move |q| (p, q)))
            .filter(|(p, q)| (q - p) % 2 == 1)
            .count();
        assert_eq!(pairs, 9);
        assert_eq!(
            (
                d3.vertex_count(),
                d3.solid_edges().len(),
                d3.dashed_edges().len()
            ),
            (6, 9, 9)
        );
        assert!(matches!(complete_dicot(0), Err(DicotError::InvalidSize(_))));
    }

    #[test]
    fn self_loop_rejected() {
        let err = validate_dicot(&raw(
            r#"{"vertices": [{"id": 1, "x": "1"}], "solid": [[1, 1, "1"]]}"#,
        ))
        .unwrap_err();
        assert_eq!(
            err,
            DicotError::SelfLoop {
                kind: EdgeKind::Solid,
                vertex: 1
            }
        );
        assert_eq!(err.axiom(), "SelfLoop");
    }

    #[test]
    fn triangle_not_bipartite() {
        let err = validate_dicot(&raw(
            r#"{"vertices": [{"id": 1, "x": "1"}, {"id": 2, "x": "1"}, {"id": 3, "x": "1"}],
                "solid": [[1, 2, "1"], [2, 3, "1"], [1, 3, "1"]]}"#,
        ))
        .unwrap_err();
        assert_eq!(
            err,
            DicotError::NotBipartite {
                witness: vec![1, 2, 3]
            }
        );
    }

    #[test]
    fn odd_cycle_through_both_kinds() {
        // 1-2 solid, 2-3 dashed, 3-4 solid, 4-5 solid, 5-1 dashed
        let err = validate_dicot(&raw(
            r#"{"vertices": [{"id": 1, "x": "1"}, {"id": 2, "x": "1"}, {"id": 3, "x": "1"}, {"id": 4, "x": "1"}, {"id": 5, "x": "1"}],
                "solid": [[1, 2, "1"], [3, 4, "1"], [4, 5, "1"]], "dashed": [[2, 3, "1"], [5, 1, "1"]]}"#,
        ))
        .unwrap_err();
        let DicotError::NotBipartite { witness } = err else {
            panic!()
        };
        assert_eq!(witness, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn duplicate_and_labels_and_weights() {
        let two = r#"{"id": 1, "x": "1"}, {"id": 2, "x": "1"}"#;
        let dup = validate_dicot(&raw(&format!(
            r#"{{"vertices": [{two}], "dashed": [[1, 2, "1"], [2, 1, "2"]]}}"#
        )));
        assert_eq!(
            dup.unwrap_err(),
            DicotError::DuplicateEdge {
                kind: EdgeKind::Dashed,
                u: 1,
                v: 2
            }
        );
        // one solid and one dashed between the same pair is fine
        assert!(validate_dicot(&raw(&format!(
            r#"{{"vertices": [{two}], "solid": [[2, 1, "1"]], "dashed": [[1, 2, "1"]]}}"#
        )))
        .is_ok());
        let gap = validate_dicot(&raw(
            r#"{"vertices": [{"id": 1, "x": "1"}, {"id": 3, "x": "1"}]}"#,
        ));
        assert!(matches!(gap, Err(DicotError::BadLabels(_))));
        let dangling = validate_dicot(&raw(&format!(
            r#"{{"vertices": [{two}], "solid": [[1, 7, "1"]]}}"#
        )));
        assert!(matches!(dangling, Err(DicotError::BadLabels(_))));
        let zero = validate_dicot(&raw(&format!(
            r#"{{"vertices": [{two}], "solid": [[1, 2, "0"]]}}"#
        )));
        assert!(matches!(zero, Err(DicotError::NonPositiveWeight(_))));
        let neg = validate_dicot(&raw(r#"{"vertices": [{"id": 1, "x": "-1/2"}]}"#));
        assert!(matches!(neg, Err(DicotError::NonPositiveWeight(_))));
    }

    #[test]
    fn json_round_trip() {
        let mut b = DicotBuilder::new(4, ratio(1, 3));
        b.solid(2, 1, int(2))
            .solid(3, 4, ratio(5, 7))
            .dashed(4, 1, ratio(3, 2));
        let d = b.build().unwrap();
        let again = Dicot::from_json(&d.to_json()).unwrap();
        assert_eq!(d, again);
        assert_eq!(again.solid_edges()[0].tail, v(2));
        assert_eq!(again.dashed_edges()[0].u, v(1));
    }

    #[test]
    fn graph_allows_odd_cycles() {
        let mut b = DicotBuilder::with_unit_weights(3);
        b.solid(1, 2, int(1))
            .solid(2, 3, int(1))
            .solid(1, 3, int(1));
        let g = b.build_graph().unwrap();
        assert!(!g.is_bipartite());
        assert!(g.to_dicot().is_err());
        let mut b = DicotBuilder::with_unit_weights(2);
        b.dashed(1, 2, int(1));
        assert_eq!(b.build_graph().unwrap_err(), DicotError::DashedEdgeInGraph);
    }

    #[test]
    fn reorientation_checks_pairs() {
        let d = complete_dicot(1).unwrap();
        let flipped = d.reoriented(&Orientation(vec![(v(2), v(1))])).unwrap();
        assert_eq!(flipped.solid_edges()[0].tail, v(2));
        assert!(d.reoriented(&Orientation(vec![])).is_err());
    }
}

//! Fixed-point-free involutions of bipartite graphs, adapted partitions,
//! quotient dicots and the squareness identity `Z(G) = Z(G/pi)^2`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::dicot::{Dicot, DicotBuilder, DicotError, Graph, VertexId};
use crate::linalg::{
    adjacency_matrix, gaussian, partition_function, real_part, ComplexMatrix, LinalgError,
};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    BipartiteGraph,
    AdaptedPartition,
    BipartiteQuotient,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::BipartiteGraph => "bipartite-G",
            Hypothesis::AdaptedPartition => "no-adapted-partition",
            Hypothesis::BipartiteQuotient => "bipartite-quotient",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error(
        "permutation must map each of the {expected} vertices to a vertex; problem at {vertex}"
    )]
    NotTotal { expected: usize, vertex: u32 },
    #[error("vertex {0} is a fixed point")]
    HasFixedPoint(u32),
    #[error("pi(pi({0})) != {0}")]
    NotInvolution(u32),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A validated fixed-point-free involutive automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    perm: Vec<VertexId>,
}

impl Involution {
    pub fn apply(&self, v: VertexId) -> VertexId {
        self.perm[v.index()]
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn to_map(&self) -> BTreeMap<u32, u32> {
        self.perm
            .iter()
            .enumerate()
            .map(|(i, w)| (i as u32 + 1, w.label()))
            .collect()
    }
}

/// Validates `perm` (the image of vertex `i + 1` at index `i`) against `g`.
pub fn check_involution(g: &Graph, perm: &[VertexId]) -> Result<Involution, QuotientError> {
    let n = g.vertex_count();
    if perm.len() != n {
        return Err(QuotientError::NotTotal {
            expected: n,
            vertex: perm.len().min(n) as u32 + 1,
        });
    }
    for (i, w) in perm.iter().enumerate() {
        if w.label() == 0 || w.index() >= n {
            return Err(QuotientError::NotTotal {
                expected: n,
                vertex: i as u32 + 1,
            });
        }
    }
    for u in g.vertices() {
        let w = perm[u.index()];
        if w == u {
            return Err(QuotientError::HasFixedPoint(u.label()));
        }
        if perm[w.index()] != u {
            return Err(QuotientError::NotInvolution(u.label()));
        }
        if g.weight(u) != g.weight(w) {
            return Err(QuotientError::NotAutomorphism(format!(
                "vertex weights of {u} and {w} differ"
            )));
        }
    }
    for e in g.edges() {
        let (pu, pw) = (perm[e.tail.index()], perm[e.head.index()]);
        match g.edge_between(pu, pw) {
            Some(img) if img.weight == e.weight => {}
            Some(_) => {
                return Err(QuotientError::NotAutomorphism(format!(
                    "edge ({}, {}) and its image ({pu}, {pw}) have different weights",
                    e.tail, e.head
                )))
            }
            None => {
                return Err(QuotientError::NotAutomorphism(format!(
                    "edge ({}, {}) maps to the non-edge ({pu}, {pw})",
                    e.tail, e.head
                )))
            }
        }
    }
    Ok(Involution {
        perm: perm.to_vec(),
    })
}

/// Reads `{"1": 4, ...}` style maps.
pub fn involution_from_map(
    g: &Graph,
    map: &BTreeMap<String, i64>,
) -> Result<Involution, QuotientError> {
    let n = g.vertex_count();
    let mut perm = Vec::with_capacity(n);
    for u in g.vertices() {
        let image = map
            .get(&u.label().to_string())
            .copied()
            .filter(|&w| w >= 1 && w as usize <= n)
            .ok_or(QuotientError::NotTotal {
                expected: n,
                vertex: u.label(),
            })?;
        perm.push(VertexId::new(image as u32));
    }
    check_involution(g, &perm)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedPartition {
    pub p1: Vec<VertexId>,
    pub p2: Vec<VertexId>,
}

impl AdaptedPartition {
    pub fn contains_p1(&self, v: VertexId) -> bool {
        self.p1.binary_search(&v).is_ok()
    }

    pub fn swapped(&self) -> AdaptedPartition {
        AdaptedPartition {
            p1: self.p2.clone(),
            p2: self.p1.clone(),
        }
    }

    /// Unordered view for comparisons.
    pub fn blocks(&self) -> [Vec<VertexId>; 2] {
        let mut b = [self.p1.clone(), self.p2.clone()];
        b.sort();
        b
    }
}

/// `+1` when `u -> w`, `-1` when `w -> u`.
fn direction(g: &Graph, u: VertexId, w: VertexId) -> i8 {
    match g.edge_between(u, w) {
        Some(e) if e.tail == u => 1,
        Some(_) => -1,
        None => 0,
    }
}

/// Checks the four adaptedness conditions directly.
pub fn is_adapted(g: &Graph, pi: &Involution, p: &AdaptedPartition) -> bool {
    let n = g.vertex_count();
    if p.p1.len() != p.p2.len() || p.p1.len() + p.p2.len() != n {
        return false;
    }
    let mut in_p1 = vec![None; n];
    for &v in &p.p1 {
        in_p1[v.index()] = Some(true);
    }
    for &v in &p.p2 {
        if in_p1[v.index()].is_some() {
            return false;
        }
        in_p1[v.index()] = Some(false);
    }
    if in_p1.iter().any(Option::is_none) {
        return false;
    }
    let side = |v: VertexId| in_p1[v.index()] == Some(true);
    for &v in &p.p1 {
        // (1) and (2)
        if side(pi.apply(v)) || g.edge_between(v, pi.apply(v)).is_some() {
            return false;
        }
    }
    for &v in &p.p1 {
        for &w in &p.p1 {
            // (3) orientation inside P1 is mirrored inside P2
            if v < w && direction(g, v, w) != direction(g, pi.apply(v), pi.apply(w)) {
                return false;
            }
            // (4) the two cross edges (v, pi w) and (w, pi v) point the same way
            if v < w {
                let d1 = direction(g, v, pi.apply(w));
                let d2 = direction(g, w, pi.apply(v));
                if d1 != d2 {
                    return false;
                }
            }
        }
    }
    true
}

/// The adapted partition with vertex 1 in `p1`, if any.
pub fn find_adapted_partition(
    g: &Graph,
    pi: &Involution,
) -> Result<Option<AdaptedPartition>, QuotientError> {
    Ok(
        find_adapted_partition_from(g, pi, VertexId::new(1))?.map(|p| {
            if p.contains_p1(VertexId::new(1)) {
                p
            } else {
                p.swapped()
            }
        }),
    )
}

/// Propagation from `seed`, which is placed in `p1`.
///
/// Along an edge `(u, w)` the mirrored edge `(pi u, pi w)` either keeps or
/// reverses the orientation; condition (3) forbids a kept edge from
/// crossing blocks in opposite directions and (4) forbids a reversed edge
/// from staying inside a block. So each edge fixes whether its endpoints
/// share a block.
pub fn find_adapted_partition_from(
    g: &Graph,
    pi: &Involution,
    seed: VertexId,
) -> Result<Option<AdaptedPartition>, QuotientError> {
    if !g.is_connected() {
        return Err(QuotientError::Disconnected);
    }
    let n = g.vertex_count();
    let mut in_p1: Vec<Option<bool>> = vec![None; n];
    in_p1[seed.index()] = Some(true);
    in_p1[pi.apply(seed).index()] = Some(false);
    let mut queue = VecDeque::from([seed, pi.apply(seed)]);
    while let Some(u) = queue.pop_front() {
        let su = in_p1[u.index()].expect("queued vertices are assigned");
        for w in g.neighbors(u) {
            if w == pi.apply(u) {
                return Ok(None);
            }
            let kept = direction(g, u, w) == direction(g, pi.apply(u), pi.apply(w));
            let sw = if kept { su } else { !su };
            match in_p1[w.index()] {
                Some(s) if s != sw => return Ok(None),
                Some(_) => {}
                None => {
                    in_p1[w.index()] = Some(sw);
                    in_p1[pi.apply(w).index()] = Some(!sw);
                    queue.push_back(w);
                    queue.push_back(pi.apply(w));
                }
            }
        }
    }
    let (mut p1, mut p2) = (Vec::new(), Vec::new());
    for v in g.vertices() {
        match in_p1[v.index()] {
            Some(true) => p1.push(v),
            Some(false) => p2.push(v),
            None => unreachable!("connected graph"),
        }
    }
    let p = AdaptedPartition { p1, p2 };
    Ok(is_adapted(g, pi, &p).then_some(p))
}

/// The graph's signed adjacency matrix in the order `(p1, pi(p1))`, cut
/// into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSplit {
    pub m: ComplexMatrix,
    pub b: ComplexMatrix,
    /// Lower blocks equal `-B` and `M`, `B` symmetric with zero diagonal.
    pub consistent: bool,
}

impl BlockSplit {
    fn combine(&self, sign: i64) -> ComplexMatrix {
        let n = self.m.dim();
        let mut out = self.m.clone();
        let i = gaussian(Rational::zero(), Rational::from_integer(sign.into()));
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, self.m.get(r, c) + self.b.get(r, c) * &i);
            }
        }
        out
    }

    pub fn m_plus_ib(&self) -> ComplexMatrix {
        self.combine(1)
    }

    pub fn m_minus_ib(&self) -> ComplexMatrix {
        self.combine(-1)
    }
}

pub fn block_split(g: &Graph, pi: &Involution, p: &AdaptedPartition) -> BlockSplit {
    let n = p.p1.len();
    let order: Vec<usize> =
        p.p1.iter()
            .map(|v| v.index())
            .chain(p.p1.iter().map(|&v| pi.apply(v).index()))
            .collect();
    let k = adjacency_matrix(g.structure()).permuted(&order);
    let mut m = ComplexMatrix::zeros(n);
    let mut b = ComplexMatrix::zeros(n);
    let mut consistent = true;
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, k.get(r, c).clone());
            b.set(r, c, k.get(r, n + c).clone());
            consistent &= k.get(n + r, n + c) == k.get(r, c);
            consistent &= *k.get(n + r, c) == -k.get(r, n + c).clone();
            consistent &= k.get(r, n + c) == k.get(c, n + r);
        }
        consistent &= k.get(r, n + r).is_zero();
    }
    BlockSplit { m, b, consistent }
}

/// The quotient dicot on `p1`, relabelled `1..n` in increasing order of the
/// original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientDicot {
    pub dicot: Dicot,
    /// Original label of each quotient vertex, by quotient index.
    pub labels: Vec<VertexId>,
    /// Every cross entry of `B` has the same sign, so the quotient matrix is
    /// exactly `M + iB` or `M - iB`.
    pub uniform_cross_sign: bool,
}

pub fn quotient_dicot(
    g: &Graph,
    pi: &Involution,
    p: &AdaptedPartition,
) -> Result<QuotientDicot, QuotientError> {
    let labels = p.p1.clone();
    let mut local = vec![0u32; g.vertex_count()];
    for (i, v) in labels.iter().enumerate() {
        local[v.index()] = i as u32 + 1;
    }
    let mut builder =
        DicotBuilder::from_weights(labels.iter().map(|&v| g.weight(v).clone()).collect());
    let mut dashed: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    let (mut pos, mut neg) = (false, false);
    for e in g.edges() {
        let (t1, h1) = (p.contains_p1(e.tail), p.contains_p1(e.head));
        match (t1, h1) {
            (true, true) => {
                builder.solid(
                    local[e.tail.index()],
                    local[e.head.index()],
                    e.weight.clone(),
                );
            }
            (false, false) => {}
            _ => {
                let (inner, outer) = if t1 {
                    (e.tail, e.head)
                } else {
                    (e.head, e.tail)
                };
                if t1 {
                    pos = true;
                } else {
                    neg = true;
                }
                let (a, b) = (local[inner.index()], local[pi.apply(outer).index()]);
                dashed.insert((a.min(b), a.max(b)), e.weight.clone());
            }
        }
    }
    for ((a, b), w) in dashed {
        builder.dashed(a, b, w);
    }
    let dicot = builder.build().map_err(|e| match e {
        DicotError::NotBipartite { .. } => {
            QuotientError::HypothesisViolated(Hypothesis::BipartiteQuotient)
        }
        other => QuotientError::NotAutomorphism(other.to_string()),
    })?;
    Ok(QuotientDicot {
        dicot,
        labels,
        uniform_cross_sign: !(pos && neg),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarenessReport {
    pub z_graph: Rational,
    pub z_quotient: Rational,
    /// `z_graph == z_quotient^2`
    pub holds: bool,
    /// `det K(G) = det(M + iB) det(M - iB)`
    pub block_identity: bool,
    pub blocks_consistent: bool,
    pub partition: AdaptedPartition,
    pub quotient: QuotientDicot,
}

/// Computes both sides independently: the full determinant of the graph's
/// signed adjacency matrix and the determinant of the quotient's complex
/// adjacency matrix.
pub fn verify_squareness(g: &Graph, pi: &Involution) -> Result<SquarenessReport, QuotientError> {
    if !g.is_bipartite() {
        return Err(QuotientError::HypothesisViolated(
            Hypothesis::BipartiteGraph,
        ));
    }
    let partition = find_adapted_partition(g, pi)?.ok_or(QuotientError::HypothesisViolated(
        Hypothesis::AdaptedPartition,
    ))?;
    let quotient = quotient_dicot(g, pi, &partition)?;

    let z_graph = real_part(adjacency_matrix(g.structure()).determinant())?;
    let z_quotient = partition_function(&quotient.dicot)?;

    let split = block_split(g, pi, &partition);
    let product = split.m_plus_ib().determinant() * split.m_minus_ib().determinant();
    let block_identity = product.im.is_zero() && product.re == z_graph;

    Ok(SquarenessReport {
        holds: z_graph == &z_quotient * &z_quotient && !z_graph.is_negative(),
        z_graph,
        z_quotient,
        block_identity,
        blocks_consistent: split.consistent,
        partition,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicot::v;
    use crate::rational::int;

    pub(crate) fn six_vertex() -> Graph {
        let mut b = DicotBuilder::with_unit_weights(6);
        for (p, q) in [
            (1, 2),
            (2, 3),
            (4, 5),
            (5, 6),
            (2, 4),
            (1, 5),
            (2, 6),
            (3, 5),
        ] {
            b.solid(p, q, int(1));
        }
        b.build_graph().unwrap()
    }

    fn shift3() -> Vec<VertexId> {
        (1..=6).map(|j| v((j + 2) % 6 + 1)).collect()
    }

    #[test]
    fn six_vertex_partition_and_square() {
        let g = six_vertex();
        let pi = check_involution(&g, &shift3()).unwrap();
        let p = find_adapted_partition(&g, &pi).unwrap().unwrap();
        assert_eq!(p.p1, vec![v(1), v(2), v(3)]);
        let r = verify_squareness(&g, &pi).unwrap();
        assert_eq!(
            (r.z_graph.clone(), r.z_quotient.clone(), r.holds),
            (int(25), int(5), true)
        );
        assert!(r.block_identity && r.blocks_consistent);
        assert_eq!(r.quotient.dicot.solid_edges().len(), 2);
        assert_eq!(r.quotient.dicot.dashed_edges().len(), 2);
    }

    #[test]
    fn involution_errors() {
        let g = six_vertex();
        let id: Vec<_> = (1..=6).map(v).collect();
        assert_eq!(
            check_involution(&g, &id).unwrap_err(),
            QuotientError::HasFixedPoint(1)
        );
        let cyc: Vec<_> = [2, 3, 1, 5, 6, 4].into_iter().map(v).collect();
        assert_eq!(
            check_involution(&g, &cyc).unwrap_err(),
            QuotientError::NotInvolution(1)
        );
        let swap: Vec<_> = [2, 1, 4, 3, 6, 5].into_iter().map(v).collect();
        assert!(matches!(
            check_involution(&g, &swap),
            Err(QuotientError::NotAutomorphism(_))
        ));
        assert!(matches!(
            check_involution(&g, &id[..3]),
            Err(QuotientError::NotTotal { .. })
        ));
    }

    fn c4(edges: &[(u32, u32)]) -> Graph {
        let mut b = DicotBuilder::with_unit_weights(4);
        for &(p, q) in edges {
            b.solid(p, q, int(1));
        }
        b.build_graph().unwrap()
    }

    #[test]
    fn four_cycle_default_and_cyclic() {
        let anti: Vec<_> = [3, 4, 1, 2].into_iter().map(v).collect();
        let g = c4(&[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let pi = check_involution(&g, &anti).unwrap();
        let r = verify_squareness(&g, &pi).unwrap();
        assert_eq!((r.z_graph, r.z_quotient, r.holds), (int(9), int(3), true));
        assert_eq!(r.quotient.dicot.solid_edges().len(), 1);
        assert_eq!(r.quotient.dicot.dashed_edges().len(), 1);

        let g = c4(&[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let pi = check_involution(&g, &anti).unwrap();
        assert_eq!(find_adapted_partition(&g, &pi).unwrap(), None);
        // exhaustive check of both bipartitions compatible with condition (1)
        for p1 in [[1, 2], [1, 4]] {
            let p1: Vec<_> = p1.into_iter().map(v).collect();
            let mut p2: Vec<_> = p1.iter().map(|&u| pi.apply(u)).collect();
            p2.sort();
            assert!(!is_adapted(&g, &pi, &AdaptedPartition { p1, p2 }));
        }
        assert_eq!(
            verify_squareness(&g, &pi).unwrap_err(),
            QuotientError::HypothesisViolated(Hypothesis::AdaptedPartition)
        );
    }

    #[test]
    fn hexagon_with_triangle_quotient() {
        let mut b = DicotBuilder::with_unit_weights(6);
        for j in 1..6 {
            b.solid(j, j + 1, int(1));
        }
        b.solid(1, 6, int(1));
        let g = b.build_graph().unwrap();
        let anti: Vec<_> = (1..=6).map(|j| v((j + 2) % 6 + 1)).collect();
        let pi = check_involution(&g, &anti).unwrap();
        assert_eq!(
            verify_squareness(&g, &pi).unwrap_err(),
            QuotientError::HypothesisViolated(Hypothesis::BipartiteQuotient)
        );
    }

    #[test]
    fn non_bipartite_and_disconnected() {
        let mut b = DicotBuilder::with_unit_weights(6);
        for (p, q) in [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)] {
            b.solid(p, q, int(1));
        }
        let g = b.build_graph().unwrap();
        let pi = check_involution(&g, &shift3()).unwrap();
        assert_eq!(
            verify_squareness(&g, &pi).unwrap_err(),
            QuotientError::HypothesisViolated(Hypothesis::BipartiteGraph)
        );
        let g = c4(&[(1, 2), (3, 4)]);
        let pi = check_involution(&g, &[v(3), v(4), v(1), v(2)]).unwrap();
        assert_eq!(
            find_adapted_partition(&g, &pi).unwrap_err(),
            QuotientError::Disconnected
        );
    }

    #[test]
    fn same_partition_from_every_seed() {
        let g = six_vertex();
        let pi = check_involution(&g, &shift3()).unwrap();
        let reference = find_adapted_partition(&g, &pi).unwrap().unwrap().blocks();
        for s in 1..=6 {
            let p = find_adapted_partition_from(&g, &pi, v(s)).unwrap().unwrap();
            assert!(p.contains_p1(v(s)));
            assert_eq!(p.blocks(), reference);
        }
    }

    #[test]
    fn map_round_trip() {
        let g = six_vertex();
        let pi = check_involution(&g, &shift3()).unwrap();
        let map: BTreeMap<String, i64> = pi
            .to_map()
            .into_iter()
            .map(|(k, w)| (k.to_string(), w as i64))
            .collect();
        assert_eq!(involution_from_map(&g, &map).unwrap(), pi);
    }
}

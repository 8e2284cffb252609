//! Planar dicots: faces from straight-line coordinates, Kasteleyn
//! orientations, and loop signs from enclosed vertices.
//!
//! All geometry is exact over the rationals. Bounded faces are traced
//! counterclockwise (positive signed area, y axis pointing up); the outer
//! face is the unique walk with non-positive area. A solid edge is
//! *clockwise* on a bounded face when its orientation opposes that walk.
//! Faces of a bipartite planar graph have an even number of solid edges
//! once the dashed count is even, so flipping the convention does not
//! change any parity below.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::dicot::{
    validate_dicot, Dicot, DicotError, EdgeKind, Loop, MonopoleDimerConfig, Orientation, VertexId,
    WeightError,
};
use crate::enumerate::{visit_configs, EnumerateError};
use crate::json::{JsonRational, RawDicot};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(crate::rational::int(x), crate::rational::int(y))
    }
}

/// `(a - o) x (b - o)`
fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

fn within_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (lx, hx) = if a.x <= b.x {
        (&a.x, &b.x)
    } else {
        (&b.x, &a.x)
    };
    let (ly, hy) = if a.y <= b.y {
        (&a.y, &b.y)
    } else {
        (&b.y, &a.y)
    };
    lx <= &p.x && &p.x <= hx && ly <= &p.y && &p.y <= hy
}

fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    cross(a, b, p).is_zero() && within_box(p, a, b)
}

fn segments_meet(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    let opposite = |p: &Rational, q: &Rational| {
        (p.is_positive() && q.is_negative()) || (p.is_negative() && q.is_positive())
    };
    if opposite(&d1, &d2) && opposite(&d3, &d4) {
        return true;
    }
    (d1.is_zero() && within_box(a, c, d))
        || (d2.is_zero() && within_box(b, c, d))
        || (d3.is_zero() && within_box(c, a, b))
        || (d4.is_zero() && within_box(d, a, b))
}

/// Counterclockwise angular order of direction vectors, starting at the
/// positive x axis.
fn angular_cmp(a: &Point, b: &Point) -> Ordering {
    let half = |p: &Point| {
        if p.y.is_positive() || (p.y.is_zero() && p.x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = &a.x * &b.y - &a.y * &b.x;
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeRef {
    Solid(usize),
    Dashed(usize),
}

impl EdgeRef {
    pub fn kind(self) -> EdgeKind {
        match self {
            EdgeRef::Solid(_) => EdgeKind::Solid,
            EdgeRef::Dashed(_) => EdgeKind::Dashed,
        }
    }
}

/// One step of a face boundary walk.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Dart {
    pub from: VertexId,
    pub to: VertexId,
    pub edge: EdgeRef,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
    /// Twice the signed area enclosed by the walk.
    pub doubled_area: Rational,
}

impl Face {
    pub fn dashed_count(&self) -> usize {
        self.darts
            .iter()
            .filter(|d| d.edge.kind() == EdgeKind::Dashed)
            .count()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Solid edges on this counterclockwise walk whose orientation points
    /// against it.
    pub fn clockwise_solid(&self, orientation: &Orientation) -> usize {
        self.darts
            .iter()
            .filter(|d| match d.edge {
                EdgeRef::Solid(i) => orientation.0[i].0 == d.to,
                EdgeRef::Dashed(_) => false,
            })
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error(transparent)]
    Dicot(#[from] DicotError),
    #[error("no coordinates for vertex {0}")]
    MissingCoords(u32),
    #[error("vertices {0} and {1} share a position")]
    CoincidentVertices(u32, u32),
    #[error("edges ({}, {}) and ({}, {}) cross", .first.0, .first.1, .second.0, .second.1)]
    CrossingEdges {
        first: (u32, u32),
        second: (u32, u32),
    },
    #[error("vertex {vertex} lies on edge ({}, {})", .edge.0, .edge.1)]
    VertexOnEdge { vertex: u32, edge: (u32, u32) },
    #[error("a solid and a dashed edge both join {0} and {1}; straight segments would coincide")]
    ParallelEdges(u32, u32),
    #[error("the graph is disconnected")]
    DisconnectedGraph,
    #[error("some bounded face carries an odd number of dashed edges")]
    NotPlanarDicot,
    #[error("no Kasteleyn orientation: the parity of bounded face {face} cannot be fixed by any solid edge")]
    NoKasteleynOrientation { face: usize },
    #[error("vertex {0} lies on the loop without belonging to it")]
    VertexOnBoundary(u32),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

/// A dicot with a straight-line plane embedding and its faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDicot {
    dicot: Dicot,
    coords: Vec<Point>,
    faces: Vec<Face>,
    outer: Face,
}

impl PlanarDicot {
    pub fn dicot(&self) -> &Dicot {
        &self.dicot
    }

    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    pub fn position(&self, v: VertexId) -> &Point {
        &self.coords[v.index()]
    }

    pub fn bounded_faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn outer_face(&self) -> &Face {
        &self.outer
    }

    pub fn edge_count(&self) -> usize {
        self.dicot.solid_edges().len() + self.dicot.dashed_edges().len()
    }

    /// `V - E + F`, counting the outer face.
    pub fn euler_characteristic(&self) -> i64 {
        self.dicot.vertex_count() as i64 - self.edge_count() as i64 + self.faces.len() as i64 + 1
    }

    /// Same embedding and faces, solid edges re-oriented.
    pub fn reoriented(&self, orientation: &Orientation) -> Result<PlanarDicot, PlanarError> {
        Ok(PlanarDicot {
            dicot: self.dicot.reoriented(orientation)?,
            ..self.clone()
        })
    }

    pub fn from_raw(raw: &RawDicot) -> Result<PlanarDicot, PlanarError> {
        let dicot = validate_dicot(raw)?;
        let coords = raw.coords.clone().unwrap_or_default();
        let mut points = Vec::with_capacity(dicot.vertex_count());
        for u in dicot.vertices() {
            let (x, y) = coords
                .get(&u.label().to_string())
                .ok_or(PlanarError::MissingCoords(u.label()))?;
            points.push(Point::new(x.0.clone(), y.0.clone()));
        }
        extract_faces(dicot, points)
    }

    pub fn to_raw(&self) -> RawDicot {
        let mut raw = self.dicot.to_raw();
        let coords: BTreeMap<String, (JsonRational, JsonRational)> = self
            .dicot
            .vertices()
            .map(|u| {
                let p = self.position(u);
                (
                    u.label().to_string(),
                    (JsonRational(p.x.clone()), JsonRational(p.y.clone())),
                )
            })
            .collect();
        raw.coords = Some(coords);
        raw
    }
}

fn check_embedding(
    dicot: &Dicot,
    coords: &[Point],
) -> Result<Vec<(VertexId, VertexId, EdgeRef)>, PlanarError> {
    let mut segments = Vec::new();
    for (i, e) in dicot.solid_edges().iter().enumerate() {
        segments.push((e.tail, e.head, EdgeRef::Solid(i)));
    }
    for (i, e) in dicot.dashed_edges().iter().enumerate() {
        if dicot.solid_between(e.u, e.v).is_some() {
            return Err(PlanarError::ParallelEdges(e.u.label(), e.v.label()));
        }
        segments.push((e.u, e.v, EdgeRef::Dashed(i)));
    }
    let n = dicot.vertex_count();
    for i in 0..n {
        for j in i + 1..n {
            if coords[i] == coords[j] {
                return Err(PlanarError::CoincidentVertices(i as u32 + 1, j as u32 + 1));
            }
        }
    }
    let pos = |u: VertexId| &coords[u.index()];
    for &(a, b, _) in &segments {
        for w in dicot.vertices().filter(|&w| w != a && w != b) {
            if on_segment(pos(w), pos(a), pos(b)) {
                return Err(PlanarError::VertexOnEdge {
                    vertex: w.label(),
                    edge: (a.label(), b.label()),
                });
            }
        }
    }
    for (i, &(a, b, _)) in segments.iter().enumerate() {
        for &(c, d, _) in &segments[i + 1..] {
            let shared = [c, d].iter().filter(|&&x| x == a || x == b).count();
            // with no vertex on another edge's interior, segments sharing an
            // endpoint can only overlap if collinear in the same direction
            let bad = match shared {
                0 => segments_meet(pos(a), pos(b), pos(c), pos(d)),
                _ => false,
            };
            if bad {
                return Err(PlanarError::CrossingEdges {
                    first: (a.label(), b.label()),
                    second: (c.label(), d.label()),
                });
            }
        }
    }
    Ok(segments)
}

/// Traces the faces of the straight-line embedding given by `coords`.
pub fn extract_faces(dicot: Dicot, coords: Vec<Point>) -> Result<PlanarDicot, PlanarError> {
    let n = dicot.vertex_count();
    if coords.len() != n {
        return Err(PlanarError::MissingCoords(coords.len() as u32 + 1));
    }
    if !dicot.is_connected() {
        return Err(PlanarError::DisconnectedGraph);
    }
    let segments = check_embedding(&dicot, &coords)?;

    // rotation system: neighbours of each vertex in counterclockwise order
    let mut rotation: Vec<Vec<(VertexId, EdgeRef)>> = vec![Vec::new(); n];
    for &(a, b, e) in &segments {
        rotation[a.index()].push((b, e));
        rotation[b.index()].push((a, e));
    }
    for (i, list) in rotation.iter_mut().enumerate() {
        let o = &coords[i];
        let dir = |w: VertexId| {
            let p = &coords[w.index()];
            Point::new(&p.x - &o.x, &p.y - &o.y)
        };
        list.sort_by(|l, r| angular_cmp(&dir(l.0), &dir(r.0)));
    }
    let mut slot: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (i, list) in rotation.iter().enumerate() {
        for (k, &(w, _)) in list.iter().enumerate() {
            slot.insert((VertexId::from_index(i), w), k);
        }
    }

    // dart u->v is followed by v->w, w the clockwise successor of u around
    // v; this keeps the face on the left
    let mut used: HashMap<(VertexId, VertexId), bool> = HashMap::new();
    let mut walks: Vec<Face> = Vec::new();
    for i in 0..n {
        for &(w, e) in &rotation[i] {
            let start = (VertexId::from_index(i), w);
            if used.contains_key(&start) {
                continue;
            }
            let mut darts = Vec::new();
            let (mut from, mut to, mut edge) = (start.0, start.1, e);
            loop {
                used.insert((from, to), true);
                darts.push(Dart { from, to, edge });
                let around = &rotation[to.index()];
                let k = slot[&(to, from)];
                let (next, next_edge) = around[(k + around.len() - 1) % around.len()];
                from = to;
                to = next;
                edge = next_edge;
                if (from, to) == start {
                    break;
                }
            }
            let doubled_area = darts.iter().fold(Rational::zero(), |acc, d| {
                let (p, q) = (&coords[d.from.index()], &coords[d.to.index()]);
                acc + (&p.x * &q.y - &q.x * &p.y)
            });
            walks.push(Face {
                darts,
                doubled_area,
            });
        }
    }

    let outer_at = walks.iter().position(|f| !f.doubled_area.is_positive());
    let outer = match outer_at {
        Some(i) => walks.remove(i),
        None => Face {
            darts: Vec::new(),
            doubled_area: Rational::zero(),
        },
    };
    debug_assert!(walks.iter().all(|f| f.doubled_area.is_positive()));
    Ok(PlanarDicot {
        dicot,
        coords,
        faces: walks,
        outer,
    })
}

/// Every bounded face carries an even number of dashed edges (the
/// embedding is simple by construction).
pub fn is_planar_dicot(pd: &PlanarDicot) -> bool {
    pd.faces.iter().all(|f| f.dashed_count() % 2 == 0)
}

/// `clockwise solid edges + dashed edges / 2` on a bounded face.
pub fn face_parity_count(face: &Face, orientation: &Orientation) -> usize {
    face.clockwise_solid(orientation) + face.dashed_count() / 2
}

/// True when every bounded face has an odd parity count under
/// `orientation`.
pub fn verify_kasteleyn(pd: &PlanarDicot, orientation: &Orientation) -> bool {
    is_planar_dicot(pd)
        && orientation.0.len() == pd.dicot.solid_edges().len()
        && pd
            .faces
            .iter()
            .all(|f| face_parity_count(f, orientation) % 2 == 1)
}

/// Builds a Kasteleyn orientation for the bounded faces.
///
/// Faces are nodes of the dual graph joined through solid edges. A
/// breadth-first forest is grown from the outer face (then from any face
/// not reached); processing faces from the leaves up, each face fixes its
/// parity with the edge to its parent. A root other than the outer face has
/// no free edge, so its parity is decided by the rest; when it comes out
/// even no orientation exists.
pub fn kasteleyn_orient(pd: &PlanarDicot) -> Result<Orientation, PlanarError> {
    if !is_planar_dicot(pd) {
        return Err(PlanarError::NotPlanarDicot);
    }
    let f_count = pd.faces.len();
    let outer = f_count;
    let mut face_of: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (fi, f) in pd.faces.iter().enumerate() {
        for d in &f.darts {
            face_of.insert((d.from, d.to), fi);
        }
    }
    for d in &pd.outer.darts {
        face_of.insert((d.from, d.to), outer);
    }

    let mut dual: Vec<Vec<(usize, usize)>> = vec![Vec::new(); f_count + 1];
    for (i, e) in pd.dicot.solid_edges().iter().enumerate() {
        let f1 = face_of[&(e.tail, e.head)];
        let f2 = face_of[&(e.head, e.tail)];
        if f1 != f2 {
            dual[f1].push((f2, i));
            dual[f2].push((f1, i));
        }
    }

    let mut parent_edge: Vec<Option<usize>> = vec![None; f_count + 1];
    let mut seen = vec![false; f_count + 1];
    let mut order = Vec::with_capacity(f_count + 1);
    let mut roots = Vec::new();
    for root in std::iter::once(outer).chain(0..f_count) {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        roots.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            order.push(f);
            for &(g, e) in &dual[f] {
                if !seen[g] {
                    seen[g] = true;
                    parent_edge[g] = Some(e);
                    queue.push_back(g);
                }
            }
        }
    }

    let mut orientation = pd.dicot.orientation();
    for &f in order.iter().rev() {
        if f == outer {
            continue;
        }
        let odd = face_parity_count(&pd.faces[f], &orientation) % 2 == 1;
        match parent_edge[f] {
            Some(e) => {
                if !odd {
                    let (t, h) = orientation.0[e];
                    orientation.0[e] = (h, t);
                }
            }
            None => {
                if !odd {
                    return Err(PlanarError::NoKasteleynOrientation { face: f });
                }
            }
        }
    }
    debug_assert!(verify_kasteleyn(pd, &orientation));
    Ok(orientation)
}

fn strictly_inside(p: &Point, polygon: &[&Point]) -> bool {
    let n = polygon.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (polygon[i], polygon[(i + 1) % n]);
        if (a.y > p.y) != (b.y > p.y) {
            let x_at = &a.x + (&p.y - &a.y) * (&b.x - &a.x) / (&b.y - &a.y);
            if p.x < x_at {
                inside = !inside;
            }
        }
    }
    inside
}

/// Vertices of the dicot lying strictly inside the loop's polygon.
pub fn enclosed_vertices(lp: &Loop, pd: &PlanarDicot) -> Result<Vec<VertexId>, PlanarError> {
    if lp.is_doubled_edge() {
        return Ok(Vec::new());
    }
    let polygon: Vec<&Point> = lp.vertices().iter().map(|&u| pd.position(u)).collect();
    let mut inside = Vec::new();
    for w in pd.dicot.vertices() {
        if lp.vertices().contains(&w) {
            continue;
        }
        let p = pd.position(w);
        let n = polygon.len();
        if (0..n).any(|i| on_segment(p, polygon[i], polygon[(i + 1) % n])) {
            return Err(PlanarError::VertexOnBoundary(w.label()));
        }
        if strictly_inside(p, &polygon) {
            inside.push(w);
        }
    }
    Ok(inside)
}

/// Loop weight on a Kasteleyn-oriented planar dicot: the product of the
/// edge weights along the loop, negated when the loop encloses an odd
/// number of vertices.
pub fn planar_loop_weight(lp: &Loop, pd: &PlanarDicot) -> Result<Rational, PlanarError> {
    let dashed = lp.dashed_count();
    if dashed % 2 == 1 {
        return Err(WeightError::OddDashedCount(dashed).into());
    }
    let mut magnitude = Rational::one();
    for (from, to, kind) in lp.steps() {
        let w = pd
            .dicot
            .edge_weight(from, to, kind)
            .ok_or(WeightError::EdgeNotInDicot { from, to, kind })?;
        magnitude *= w;
    }
    let enclosed = enclosed_vertices(lp, pd)?.len();
    Ok(if enclosed % 2 == 0 {
        magnitude
    } else {
        -magnitude
    })
}

/// Configuration weight with loop signs taken from enclosed vertices.
pub fn planar_config_weight(
    config: &MonopoleDimerConfig,
    pd: &PlanarDicot,
) -> Result<Rational, PlanarError> {
    config.check_coverage(pd.dicot.vertex_count())?;
    let mut w = Rational::one();
    for lp in &config.loops {
        w *= planar_loop_weight(lp, pd)?;
    }
    for &u in &config.isolated {
        w *= pd.dicot.weight(u);
    }
    Ok(w)
}

/// Sum of [`planar_config_weight`] over every configuration. Agrees with
/// the determinant when the orientation is Kasteleyn.
pub fn planar_partition_function(pd: &PlanarDicot, limit: usize) -> Result<Rational, PlanarError> {
    let mut total = Rational::zero();
    let mut failure = None;
    visit_configs(&pd.dicot, limit, |c| {
        if failure.is_none() {
            match planar_config_weight(c, pd) {
                Ok(w) => total += w,
                Err(e) => failure = Some(e),
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicot::{loop_weight, v, DicotBuilder};
    use crate::rational::int;
    use EdgeKind::{Dashed as D, Solid as S};

    fn square(dashed_sides: &[(u32, u32)]) -> PlanarDicot {
        let mut b = DicotBuilder::with_unit_weights(4);
        for (p, q) in [(1, 2), (2, 3), (3, 4), (1, 4)] {
            if dashed_sides.contains(&(p, q)) {
                b.dashed(p, q, int(1));
            } else {
                b.solid(p, q, int(1));
            }
        }
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ];
        extract_faces(b.build().unwrap(), pts).unwrap()
    }

    #[test]
    fn square_faces() {
        let pd = square(&[]);
        assert_eq!(pd.bounded_faces().len(), 1);
        assert_eq!(pd.euler_characteristic(), 2);
        assert_eq!(pd.bounded_faces()[0].doubled_area, int(2));
        assert_eq!(pd.outer_face().doubled_area, int(-2));
        assert!(is_planar_dicot(&pd));
    }

    #[test]
    fn hexagon_with_chord() {
        let mut b = DicotBuilder::with_unit_weights(6);
        for (p, q) in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4)] {
            b.solid(p, q, int(1));
        }
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(2, 0),
            Point::from_ints(2, 1),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ];
        let pd = extract_faces(b.build().unwrap(), pts).unwrap();
        assert_eq!(pd.bounded_faces().len(), 2);
        assert_eq!(pd.euler_characteristic(), 2);
    }

    #[test]
    fn crossing_and_degenerate_inputs() {
        let mut b = DicotBuilder::with_unit_weights(4);
        b.solid(1, 2, int(1)).solid(3, 4, int(1));
        let d = b.build().unwrap();
        let x = vec![
            Point::from_ints(0, 0),
            Point::from_ints(2, 2),
            Point::from_ints(0, 2),
            Point::from_ints(2, 0),
        ];
        assert_eq!(
            extract_faces(d.clone(), x).unwrap_err(),
            PlanarError::DisconnectedGraph
        );
        let mut b = DicotBuilder::with_unit_weights(4);
        b.solid(1, 2, int(1))
            .solid(3, 4, int(1))
            .solid(2, 3, int(1));
        let x = vec![
            Point::from_ints(0, 0),
            Point::from_ints(2, 2),
            Point::from_ints(0, 2),
            Point::from_ints(2, 0),
        ];
        assert!(matches!(
            extract_faces(b.build().unwrap(), x),
            Err(PlanarError::CrossingEdges { .. })
        ));
        let mut b = DicotBuilder::with_unit_weights(3);
        b.solid(1, 2, int(1)).solid(2, 3, int(1));
        let x = vec![
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(1, 0),
        ];
        assert!(matches!(
            extract_faces(b.build().unwrap(), x),
            Err(PlanarError::VertexOnEdge { .. })
        ));
        let d = crate::dicot::complete_dicot(1).unwrap();
        let x = vec![Point::from_ints(0, 0), Point::from_ints(1, 0)];
        assert_eq!(
            extract_faces(d, x).unwrap_err(),
            PlanarError::ParallelEdges(1, 2)
        );
    }

    #[test]
    fn single_face_kasteleyn() {
        let pd = square(&[]);
        let o = kasteleyn_orient(&pd).unwrap();
        assert!(verify_kasteleyn(&pd, &o));
        let cw = pd.bounded_faces()[0].clockwise_solid(&o);
        assert!(cw == 1 || cw == 3);
        // flip one edge: parity breaks
        let mut flipped = o.clone();
        let (t, h) = flipped.0[0];
        flipped.0[0] = (h, t);
        assert!(!verify_kasteleyn(&pd, &flipped));
    }

    #[test]
    fn clockwise_convention_does_not_matter() {
        // counting counterclockwise solid edges instead gives the same parity
        let pd = square(&[(2, 3), (1, 4)]);
        for mask in 0..4u32 {
            let mut o = pd.dicot().orientation();
            for (i, pair) in o.0.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *pair = (pair.1, pair.0);
                }
            }
            let f = &pd.bounded_faces()[0];
            let cw = f.clockwise_solid(&o);
            let solid = f.len() - f.dashed_count();
            assert_eq!(
                (cw + f.dashed_count() / 2) % 2,
                (solid - cw + f.dashed_count() / 2) % 2
            );
        }
    }

    #[test]
    fn all_dashed_square_has_no_kasteleyn_orientation() {
        let pd = square(&[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert!(is_planar_dicot(&pd));
        assert_eq!(
            kasteleyn_orient(&pd).unwrap_err(),
            PlanarError::NoKasteleynOrientation { face: 0 }
        );
    }

    #[test]
    fn odd_dashed_face_is_not_planar_dicot() {
        let pd = square(&[(1, 4)]);
        assert!(!is_planar_dicot(&pd));
        assert_eq!(
            kasteleyn_orient(&pd).unwrap_err(),
            PlanarError::NotPlanarDicot
        );
    }

    #[test]
    fn unit_face_and_doubled_edge_weights() {
        let pd = square(&[]);
        let o = kasteleyn_orient(&pd).unwrap();
        let pd = pd.reoriented(&o).unwrap();
        let lp = Loop::new(vec![v(1), v(2), v(3), v(4)], vec![S; 4]).unwrap();
        assert_eq!(planar_loop_weight(&lp, &pd).unwrap(), int(1));
        assert_eq!(loop_weight(&lp, pd.dicot()).unwrap(), int(1));
        let dd = Loop::doubled(v(1), v(2), S).unwrap();
        assert_eq!(planar_loop_weight(&dd, &pd).unwrap(), int(1));
        let bad = Loop::doubled(v(1), v(2), D).unwrap();
        assert!(planar_loop_weight(&bad, &pd).is_err());
    }

    #[test]
    fn raw_round_trip_with_coords() {
        let pd = square(&[(2, 3), (1, 4)]);
        let raw = pd.to_raw();
        let again = PlanarDicot::from_raw(&RawDicot::from_json(&raw.to_json()).unwrap()).unwrap();
        assert_eq!(again, pd);
        let mut missing = raw.clone();
        missing.coords.as_mut().unwrap().remove("3");
        assert_eq!(
            PlanarDicot::from_raw(&missing).unwrap_err(),
            PlanarError::MissingCoords(3)
        );
    }
}

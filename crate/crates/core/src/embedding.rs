//! Rotation-system embeddings with edge signatures.
//!
//! An embedding is a cyclic order of darts (edge-ends) around every vertex
//! plus a sign per edge; negative signs encode non-orientable gluings. Face
//! tracing works on doubled (dart, sense) states so the same code path
//! covers orientable and non-orientable surfaces: orbits of the successor
//! permutation pair up into faces, one orbit per traversal direction.

use crate::error::{Error, Result};
use crate::gf2::EdgeVector;
use crate::graph::{EdgeId, Multigraph, VertexId};

/// One end of an edge. `end == 0` is the end at the edge's `u` endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: u8,
}

impl Dart {
    pub fn new(edge: EdgeId, end: u8) -> Self {
        debug_assert!(end < 2);
        Dart { edge, end }
    }

    pub fn opposite(self) -> Self {
        Dart {
            edge: self.edge,
            end: 1 - self.end,
        }
    }

    pub fn index(self) -> usize {
        self.edge * 2 + self.end as usize
    }

    /// The vertex this dart is attached to.
    pub fn vertex(self, g: &Multigraph) -> VertexId {
        let (u, v) = g.endpoints(self.edge);
        if self.end == 0 {
            u
        } else {
            v
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SignCount { expected: usize, actual: usize },
    BadSign { edge: EdgeId, value: i8 },
    RotationCount { expected: usize, actual: usize },
    DartAbsent(Dart),
    DartMisplaced { dart: Dart, at: VertexId, expected: VertexId },
    DartDuplicated(Dart),
    UnknownDart(Dart),
    Disconnected,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::SignCount { expected, actual } => {
                write!(f, "expected {expected} signs, found {actual}")
            }
            Violation::BadSign { edge, value } => {
                write!(f, "sign of edge {edge} is {value}, must be +1 or -1")
            }
            Violation::RotationCount { expected, actual } => {
                write!(f, "expected {expected} rotation lists, found {actual}")
            }
            Violation::DartAbsent(d) => write!(f, "dart ({},{}) absent", d.edge, d.end),
            Violation::DartMisplaced { dart, at, expected } => write!(
                f,
                "dart ({},{}) listed at vertex {at}, belongs to vertex {expected}",
                dart.edge, dart.end
            ),
            Violation::DartDuplicated(d) => {
                write!(f, "dart ({},{}) listed more than once", d.edge, d.end)
            }
            Violation::UnknownDart(d) => {
                write!(f, "dart ({},{}) does not name an edge end", d.edge, d.end)
            }
            Violation::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

/// A multigraph with a rotation system and edge signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    graph: Multigraph,
    rotation: Vec<Vec<Dart>>,
    signs: Vec<i8>,
}

impl EmbeddedGraph {
    pub fn new(graph: Multigraph, rotation: Vec<Vec<Dart>>, signs: Vec<i8>) -> Result<Self> {
        let e = EmbeddedGraph {
            graph,
            rotation,
            signs,
        };
        let violations: Vec<_> = e
            .validate()
            .into_iter()
            .filter(|v| *v != Violation::Disconnected)
            .collect();
        if violations.is_empty() {
            Ok(e)
        } else {
            let msg = violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            Err(Error::InvalidEmbedding(msg))
        }
    }

    /// Builds without validation; used by parsers that validate explicitly.
    pub fn new_unchecked(graph: Multigraph, rotation: Vec<Vec<Dart>>, signs: Vec<i8>) -> Self {
        EmbeddedGraph {
            graph,
            rotation,
            signs,
        }
    }

    /// Convenience constructor for simple graphs: the rotation at each
    /// vertex is given as a cyclic list of neighbour vertices.
    pub fn from_neighbor_rotations(
        graph: Multigraph,
        neighbors: Vec<Vec<VertexId>>,
        signs: Vec<i8>,
    ) -> Result<Self> {
        let mut edge_of = std::collections::HashMap::new();
        for (id, &(u, v)) in graph.edges().iter().enumerate() {
            if edge_of.insert((u.min(v), u.max(v)), id).is_some() {
                return Err(Error::InvalidEmbedding(format!(
                    "parallel edge between {u} and {v}: neighbour rotations are ambiguous"
                )));
            }
        }
        let mut rotation = Vec::with_capacity(graph.vertex_count());
        for (v, nbrs) in neighbors.iter().enumerate() {
            let mut darts = Vec::with_capacity(nbrs.len());
            for &w in nbrs {
                let &id = edge_of.get(&(v.min(w), v.max(w))).ok_or_else(|| {
                    Error::InvalidEmbedding(format!("no edge between {v} and {w}"))
                })?;
                let end = if graph.endpoints(id).0 == v { 0 } else { 1 };
                darts.push(Dart::new(id, end));
            }
            rotation.push(darts);
        }
        EmbeddedGraph::new(graph, rotation, signs)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn sign(&self, e: EdgeId) -> i8 {
        self.signs[e]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Checks every structural invariant plus connectivity.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let m = self.graph.edge_count();
        if self.signs.len() != m {
            out.push(Violation::SignCount {
                expected: m,
                actual: self.signs.len(),
            });
        }
        for (e, &s) in self.signs.iter().enumerate() {
            if s != 1 && s != -1 {
                out.push(Violation::BadSign { edge: e, value: s });
            }
        }
        if self.rotation.len() != self.graph.vertex_count() {
            out.push(Violation::RotationCount {
                expected: self.graph.vertex_count(),
                actual: self.rotation.len(),
            });
            return out;
        }
        let mut seen = vec![0u8; 2 * m];
        for (v, darts) in self.rotation.iter().enumerate() {
            for &d in darts {
                if d.edge >= m || d.end > 1 {
                    out.push(Violation::UnknownDart(d));
                    continue;
                }
                seen[d.index()] += 1;
                if seen[d.index()] == 2 {
                    out.push(Violation::DartDuplicated(d));
                }
                let home = d.vertex(&self.graph);
                if home != v {
                    out.push(Violation::DartMisplaced {
                        dart: d,
                        at: v,
                        expected: home,
                    });
                }
            }
        }
        for e in 0..m {
            for end in 0..2u8 {
                let d = Dart::new(e, end);
                if seen[d.index()] == 0 {
                    out.push(Violation::DartAbsent(d));
                }
            }
        }
        if !self.graph.is_connected() {
            out.push(Violation::Disconnected);
        }
        out
    }

    /// Reverses the rotation at `v` and negates the signs of all incident
    /// edges. The embedded surface is unchanged.
    pub fn vertex_flip(&self, v: VertexId) -> EmbeddedGraph {
        let mut rotation = self.rotation.clone();
        rotation[v].reverse();
        let mut signs = self.signs.clone();
        for &e in self.graph.incident_edges(v) {
            signs[e] = -signs[e];
        }
        EmbeddedGraph {
            graph: self.graph.clone(),
            rotation,
            signs,
        }
    }
}

/// Closed face walk: the darts departed along, with the sense each step
/// was taken in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
    pub senses: Vec<i8>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices visited, parallel to `darts` (vertex the step departs from).
    pub fn vertices(&self, g: &Multigraph) -> Vec<VertexId> {
        self.darts.iter().map(|d| d.vertex(g)).collect()
    }
}

/// All faces of an embedding, in deterministic traced order.
#[derive(Debug, Clone)]
pub struct FaceSet {
    faces: Vec<FaceWalk>,
    boundaries: Vec<EdgeVector>,
}

impl FaceSet {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn walks(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn walk(&self, i: usize) -> &FaceWalk {
        &self.faces[i]
    }

    /// Edges appearing exactly once in face `i`'s walk.
    pub fn boundary(&self, i: usize) -> &EdgeVector {
        &self.boundaries[i]
    }

    pub fn boundaries(&self) -> &[EdgeVector] {
        &self.boundaries
    }

    /// Faces whose walk uses `e`, with multiplicity (total is always 2).
    pub fn faces_of_edge(&self, e: EdgeId) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, w) in self.faces.iter().enumerate() {
            for d in &w.darts {
                if d.edge == e {
                    out.push(i);
                }
            }
        }
        out
    }
}

/// Face tracing over an arbitrary sub-rotation. `rotation` must contain
/// both darts of every edge it mentions; `signs` is indexed by edge id of
/// the ambient graph.
pub(crate) fn trace_rotation(
    graph: &Multigraph,
    rotation: &[Vec<Dart>],
    signs: &[i8],
) -> Vec<FaceWalk> {
    let m = graph.edge_count();
    // position of each present dart: (vertex slot in `rotation`, index)
    let mut pos: Vec<Option<(usize, usize)>> = vec![None; 2 * m];
    let mut dart_ids = Vec::new();
    for (slot, darts) in rotation.iter().enumerate() {
        for (i, &d) in darts.iter().enumerate() {
            debug_assert!(pos[d.index()].is_none(), "duplicate dart in rotation");
            pos[d.index()] = Some((slot, i));
            dart_ids.push(d.index());
        }
    }
    dart_ids.sort_unstable();

    // state = dart * 2 + (0 for sense +1, 1 for sense -1)
    let next_state = |state: usize| -> usize {
        let sense = if state % 2 == 0 { 1i8 } else { -1i8 };
        let dart = Dart::new(state / 4, (state / 2 % 2) as u8);
        let arrive = dart.opposite();
        let s2 = sense * signs[dart.edge];
        let (slot, i) = pos[arrive.index()].expect("opposite dart present");
        let darts = &rotation[slot];
        let j = if s2 == 1 {
            (i + 1) % darts.len()
        } else {
            (i + darts.len() - 1) % darts.len()
        };
        darts[j].index() * 2 + if s2 == 1 { 0 } else { 1 }
    };
    // mirror traversal: same edge crossed in the other direction
    let mirror_state = |state: usize| -> usize {
        let sense = if state % 2 == 0 { 1i8 } else { -1i8 };
        let dart = Dart::new(state / 4, (state / 2 % 2) as u8);
        let s2 = -sense * signs[dart.edge];
        dart.opposite().index() * 2 + if s2 == 1 { 0 } else { 1 }
    };

    let mut used = vec![false; 4 * m];
    let mut faces = Vec::new();
    for &d in &dart_ids {
        for sense_bit in 0..2 {
            let start = d * 2 + sense_bit;
            if used[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut state = start;
            loop {
                debug_assert!(!used[state]);
                used[state] = true;
                orbit.push(state);
                state = next_state(state);
                if state == start {
                    break;
                }
            }
            // consume the reverse traversal of the same face
            for &q in &orbit {
                let mq = mirror_state(q);
                debug_assert!(!used[mq], "face orbit equal to its own mirror");
                used[mq] = true;
            }
            let darts = orbit
                .iter()
                .map(|&q| Dart::new(q / 4, (q / 2 % 2) as u8))
                .collect();
            let senses = orbit
                .iter()
                .map(|&q| if q % 2 == 0 { 1 } else { -1 })
                .collect();
            faces.push(FaceWalk { darts, senses });
        }
    }
    faces
}

/// Traces all faces of the embedding.
pub fn trace_faces(e: &EmbeddedGraph) -> FaceSet {
    let faces = trace_rotation(e.graph(), e.rotations(), e.signs());
    let m = e.graph().edge_count();
    let boundaries = faces
        .iter()
        .map(|w| {
            let mut counts = vec![0u8; m];
            for d in &w.darts {
                counts[d.edge] += 1;
            }
            let once: Vec<_> = (0..m).filter(|&i| counts[i] == 1).collect();
            EdgeVector::from_edges(m, &once)
        })
        .collect();
    FaceSet { faces, boundaries }
}

/// |V| - |E| + |F| of a connected embedding.
pub fn euler_characteristic(e: &EmbeddedGraph) -> Result<i64> {
    if !e.graph().is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let f = if e.graph().edge_count() == 0 && e.graph().vertex_count() >= 1 {
        1 // a lone vertex on the sphere
    } else {
        trace_faces(e).face_count()
    };
    Ok(e.graph().vertex_count() as i64 - e.graph().edge_count() as i64 + f as i64)
}

/// True iff the signature can be made all-positive by vertex flips.
pub fn is_orientable(e: &EmbeddedGraph) -> bool {
    let g = e.graph();
    let n = g.vertex_count();
    let mut flip: Vec<i8> = vec![0; n];
    for root in 0..n {
        if flip[root] != 0 {
            continue;
        }
        flip[root] = 1;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &edge in g.incident_edges(v) {
                let w = g.other_endpoint(edge, v);
                if flip[w] == 0 {
                    flip[w] = flip[v] * e.sign(edge);
                    queue.push_back(w);
                }
            }
        }
    }
    g.edges()
        .iter()
        .enumerate()
        .all(|(id, &(u, v))| e.sign(id) * flip[u] * flip[v] == 1)
}

/// (orientable, genus) of the embedded surface.
pub fn surface_name(e: &EmbeddedGraph) -> Result<(bool, usize)> {
    let chi = euler_characteristic(e)?;
    if is_orientable(e) {
        if chi.rem_euclid(2) != 0 {
            return Err(Error::InvalidParity(chi));
        }
        Ok((true, ((2 - chi) / 2) as usize))
    } else {
        if chi > 1 {
            return Err(Error::InvalidParity(chi));
        }
        Ok((false, (2 - chi) as usize))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    pub(crate) fn triangle_planar() -> EmbeddedGraph {
        let g = Multigraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        EmbeddedGraph::from_neighbor_rotations(
            g,
            vec![vec![1, 2], vec![0, 2], vec![0, 1]],
            vec![1, 1, 1],
        )
        .unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let e = triangle_planar();
        let faces = trace_faces(&e);
        assert_eq!(faces.face_count(), 2);
        for i in 0..2 {
            assert_eq!(faces.boundary(i).edges(), vec![0, 1, 2]);
            assert_eq!(faces.walk(i).len(), 3);
        }
        assert_eq!(euler_characteristic(&e).unwrap(), 2);
        assert_eq!(surface_name(&e).unwrap(), (true, 0));
    }

    #[test]
    fn parallel_pair_on_sphere() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let rotation = vec![
            vec![Dart::new(0, 0), Dart::new(1, 0)],
            vec![Dart::new(0, 1), Dart::new(1, 1)],
        ];
        let e = EmbeddedGraph::new(g, rotation, vec![1, 1]).unwrap();
        let faces = trace_faces(&e);
        assert_eq!(faces.face_count(), 2);
        assert!(faces.walks().iter().all(|w| w.len() == 2));
        assert_eq!(euler_characteristic(&e).unwrap(), 2);
    }

    #[test]
    fn one_negative_sign_makes_projective_plane() {
        let g = Multigraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let e = EmbeddedGraph::from_neighbor_rotations(
            g,
            vec![vec![1, 2], vec![0, 2], vec![0, 1]],
            vec![-1, 1, 1],
        )
        .unwrap();
        assert_eq!(euler_characteristic(&e).unwrap(), 1);
        assert!(!is_orientable(&e));
        assert_eq!(surface_name(&e).unwrap(), (false, 1));
    }

    #[test]
    fn walk_lengths_sum_to_twice_edges() {
        for e in [triangle_planar()] {
            let faces = trace_faces(&e);
            let total: usize = faces.walks().iter().map(|w| w.len()).sum();
            assert_eq!(total, 2 * e.graph().edge_count());
        }
    }

    #[test]
    fn boundaries_sum_to_zero_and_cover_each_edge_twice() {
        let e = triangle_planar();
        let faces = trace_faces(&e);
        let mut sum = EdgeVector::zero(e.graph().edge_count());
        for b in faces.boundaries() {
            sum.xor_assign(b);
        }
        assert!(sum.is_zero());
        for edge in 0..e.graph().edge_count() {
            let n = faces
                .boundaries()
                .iter()
                .filter(|b| b.contains(edge))
                .count();
            assert!(n == 0 || n == 2);
        }
    }

    #[test]
    fn validate_flags_misplaced_and_missing_darts() {
        let g = Multigraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        // dart (0,1) belongs to vertex 1 but is listed at vertex 2
        let rotation = vec![
            vec![Dart::new(0, 0), Dart::new(1, 0)],
            vec![Dart::new(2, 0)],
            vec![Dart::new(1, 1), Dart::new(2, 1), Dart::new(0, 1)],
        ];
        let e = EmbeddedGraph::new_unchecked(g.clone(), rotation, vec![1, 1, 1]);
        let violations = e.validate();
        assert!(violations.contains(&Violation::DartMisplaced {
            dart: Dart::new(0, 1),
            at: 2,
            expected: 1,
        }));

        let rotation = vec![
            vec![Dart::new(0, 0), Dart::new(1, 0)],
            vec![Dart::new(2, 0)],
            vec![Dart::new(1, 1), Dart::new(2, 1)],
        ];
        let e = EmbeddedGraph::new_unchecked(g, rotation, vec![1, 1, 1]);
        let violations = e.validate();
        assert!(violations.contains(&Violation::DartAbsent(Dart::new(0, 1))));
    }

    #[test]
    fn vertex_flips_preserve_surface() {
        let e = triangle_planar();
        let flipped = e.vertex_flip(1);
        assert!(is_orientable(&flipped));
        assert_eq!(euler_characteristic(&flipped).unwrap(), 2);
        assert_eq!(trace_faces(&flipped).face_count(), 2);
    }
}

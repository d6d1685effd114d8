//! Cutting a chi = 0 embedding along a theta subgraph.
//!
//! The union of two independent fundamental cycles is a theta subgraph H
//! whose induced embedding has a single face. Cutting the surface along H
//! leaves a closed disk: every H-vertex splits into one copy per corner
//! (maximal run of non-H darts between consecutive H-darts), every H-edge
//! is doubled, and the single face walk of H becomes the boundary of the
//! polygon, which decomposes into six sides: two copies each of the paths
//! x \ y, y \ x and x ∩ y.

use crate::embedding::{trace_faces, trace_rotation, Dart, EmbeddedGraph, FaceSet, FaceWalk};
use crate::error::{Error, Result};
use crate::gf2::EdgeVector;
use crate::graph::{EdgeId, Multigraph, VertexId};

/// One of the three internally disjoint paths of a theta subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPath {
    /// Edge ids in order from the first branch vertex to the second.
    pub edges: Vec<EdgeId>,
    /// Vertices in order; starts and ends at the branch vertices.
    pub vertices: Vec<VertexId>,
}

/// Which of the three theta paths an object belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    /// Edges of x \ y.
    X,
    /// Edges of y \ x.
    Y,
    /// Edges of x ∩ y.
    Xy,
}

/// Theta subgraph spanned by the union of two cycles.
#[derive(Debug, Clone)]
pub struct Theta {
    pub branch: (VertexId, VertexId),
    pub path_x: ThetaPath,
    pub path_y: ThetaPath,
    pub path_xy: ThetaPath,
    pub vertex_count: usize,
    pub edge_count: usize,
}

impl Theta {
    pub fn path(&self, class: PathClass) -> &ThetaPath {
        match class {
            PathClass::X => &self.path_x,
            PathClass::Y => &self.path_y,
            PathClass::Xy => &self.path_xy,
        }
    }

    pub fn class_of_edge(&self, e: EdgeId) -> Option<PathClass> {
        for class in [PathClass::X, PathClass::Y, PathClass::Xy] {
            if self.path(class).edges.contains(&e) {
                return Some(class);
            }
        }
        None
    }
}

/// True iff `v` is a single graph-theoretical cycle: nonempty, 2-regular
/// on its support, connected.
pub fn is_cycle(g: &Multigraph, v: &EdgeVector) -> bool {
    if v.is_zero() {
        return false;
    }
    let support: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&w| g.degree_in(w, v) > 0)
        .collect();
    if support.iter().any(|&w| g.degree_in(w, v) != 2) {
        return false;
    }
    // connectivity of the support
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![support[0]];
    seen.insert(support[0]);
    while let Some(w) = stack.pop() {
        for &e in g.incident_edges(w) {
            if v.contains(e) {
                let u = g.other_endpoint(e, w);
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
    }
    seen.len() == support.len()
}

fn walk_path(
    g: &Multigraph,
    edges: &EdgeVector,
    from: VertexId,
    to: VertexId,
) -> Result<ThetaPath> {
    let mut vertices = vec![from];
    let mut path_edges = Vec::new();
    let mut used = std::collections::HashSet::new();
    let mut at = from;
    loop {
        let next: Vec<EdgeId> = g
            .incident_edges(at)
            .iter()
            .copied()
            .filter(|e| edges.contains(*e) && !used.contains(e))
            .collect();
        if at == to && !path_edges.is_empty() {
            break;
        }
        let &e = next.first().ok_or_else(|| {
            Error::NotTheta(format!("path class stalls at vertex {at}"))
        })?;
        used.insert(e);
        at = g.other_endpoint(e, at);
        path_edges.push(e);
        vertices.push(at);
        if path_edges.len() > edges.popcount() {
            return Err(Error::NotTheta("path class is not a simple path".into()));
        }
    }
    if path_edges.len() != edges.popcount() {
        return Err(Error::NotTheta("path class is not a single path".into()));
    }
    Ok(ThetaPath {
        edges: path_edges,
        vertices,
    })
}

/// Decomposes the union of cycles `x` and `y` into a theta subgraph.
pub fn theta_decompose(g: &Multigraph, x: &EdgeVector, y: &EdgeVector) -> Result<Theta> {
    if !is_cycle(g, x) || !is_cycle(g, y) {
        return Err(Error::NotTheta("inputs are not single cycles".into()));
    }
    let union = x.union(y);
    let xy = x.intersection(y);
    if xy.is_zero() {
        return Err(Error::NotTheta("cycles are edge-disjoint".into()));
    }
    let mut branch = Vec::new();
    for v in 0..g.vertex_count() {
        match g.degree_in(v, &union) {
            0 | 2 => {}
            3 => branch.push(v),
            d => {
                return Err(Error::NotTheta(format!(
                    "vertex {v} has degree {d} in the union"
                )))
            }
        }
    }
    if branch.len() != 2 {
        return Err(Error::NotTheta(format!(
            "{} branch vertices instead of 2",
            branch.len()
        )));
    }
    let (b1, b2) = (branch[0], branch[1]);
    let mut x_only = x.clone();
    x_only.xor_assign(&xy);
    let mut y_only = y.clone();
    y_only.xor_assign(&xy);
    let path_x = walk_path(g, &x_only, b1, b2)?;
    let path_y = walk_path(g, &y_only, b1, b2)?;
    let path_xy = walk_path(g, &xy, b1, b2)?;
    let vertex_count = path_x.vertices.len() + path_y.vertices.len() + path_xy.vertices.len() - 4;
    let edge_count = union.popcount();
    if edge_count != vertex_count + 1 {
        return Err(Error::NotTheta("wrong Betti number for a theta".into()));
    }
    Ok(Theta {
        branch: (b1, b2),
        path_x,
        path_y,
        path_xy,
        vertex_count,
        edge_count,
    })
}

/// One labeled side of the fundamental polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Side {
    pub class: PathClass,
    pub primed: bool,
    /// First position in the boundary walk.
    pub start: usize,
    /// Number of boundary edges on this side.
    pub len: usize,
}

/// The disk obtained by cutting along a theta subgraph.
#[derive(Debug, Clone)]
pub struct CutPolygon {
    pub disk: EmbeddedGraph,
    pub disk_faces: FaceSet,
    /// Index of the outer face in `disk_faces`.
    pub outer_face: usize,
    /// Disk edge id -> original edge id.
    pub edge_map: Vec<EdgeId>,
    /// Disk vertex -> original vertex.
    pub vertex_map: Vec<VertexId>,
    /// Per disk face: the original face it projects to (`None` for the
    /// outer face).
    pub face_map: Vec<Option<usize>>,
    /// Faces of the original embedding, in traced order.
    pub original_faces: FaceSet,
    /// Darts of the outer face, one per boundary edge, in cyclic order.
    pub boundary_walk: Vec<Dart>,
    /// Disk vertex at each boundary position (the corner copies).
    pub boundary_vertices: Vec<VertexId>,
    pub sides: [Side; 6],
    pub theta: Theta,
}

impl CutPolygon {
    pub fn interior_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.disk_faces.face_count()).filter(move |&i| i != self.outer_face)
    }

    /// The side containing boundary position `pos`, given the cyclic layout.
    pub fn side_of_position(&self, pos: usize) -> usize {
        let n = self.boundary_walk.len();
        self.sides
            .iter()
            .position(|s| (pos + n - s.start) % n < s.len)
            .expect("position on some side")
    }

    /// Disk vertices lying on side `i`, including both endpoints.
    pub fn side_vertices(&self, i: usize) -> Vec<VertexId> {
        let s = &self.sides[i];
        let n = self.boundary_walk.len();
        (0..=s.len)
            .map(|k| self.boundary_vertices[(s.start + k) % n])
            .collect()
    }

    /// Disk edge ids of side `i` in order.
    pub fn side_edges(&self, i: usize) -> Vec<EdgeId> {
        let s = &self.sides[i];
        let n = self.boundary_walk.len();
        (0..s.len)
            .map(|k| self.boundary_walk[(s.start + k) % n].edge)
            .collect()
    }

    /// The unique interior face whose walk uses boundary edge `e`.
    pub fn interior_face_of_boundary_edge(&self, e: EdgeId) -> usize {
        let faces = self.disk_faces.faces_of_edge(e);
        *faces
            .iter()
            .find(|&&f| f != self.outer_face)
            .expect("boundary edge has an interior side")
    }
}

fn internal(msg: impl Into<String>) -> Error {
    Error::TheoremViolation(format!("cut construction invariant failed: {}", msg.into()))
}

/// Canonical form of a cyclic sequence, minimum over rotations of the
/// forward and reversed readings. Used to match disk faces to original
/// faces by their projected edge walks.
fn canonical_cycle(seq: &[usize]) -> Vec<usize> {
    if seq.is_empty() {
        return Vec::new();
    }
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |cand: Vec<usize>| {
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    };
    let n = seq.len();
    for dir in [false, true] {
        let s: Vec<usize> = if dir {
            seq.iter().rev().copied().collect()
        } else {
            seq.to_vec()
        };
        for r in 0..n {
            let mut rot = s[r..].to_vec();
            rot.extend_from_slice(&s[..r]);
            consider(rot);
        }
    }
    best.unwrap()
}

/// Cuts the embedding along the theta subgraph spanned by cycles `x`
/// and `y`, producing the fundamental polygon.
pub fn cut_along_theta(
    e: &EmbeddedGraph,
    x: &EdgeVector,
    y: &EdgeVector,
) -> Result<CutPolygon> {
    let chi = crate::embedding::euler_characteristic(e)?;
    if chi != 0 {
        return Err(Error::WrongChi {
            expected: 0,
            actual: chi,
        });
    }
    let g = e.graph();
    let theta = theta_decompose(g, x, y)?;
    let union = x.union(y);
    let in_h = |d: Dart| union.contains(d.edge);

    // induced embedding of H: rotations filtered to H-darts
    let h_vertices: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&v| g.degree_in(v, &union) > 0)
        .collect();
    let h_rotation: Vec<Vec<Dart>> = h_vertices
        .iter()
        .map(|&v| e.rotation(v).iter().copied().filter(|&d| in_h(d)).collect())
        .collect();
    let h_faces = trace_rotation(g, &h_rotation, e.signs());
    if h_faces.len() != 1 {
        return Err(Error::SeparatingCycle(h_faces.len()));
    }
    let walk = &h_faces[0];
    let len = walk.len();
    if len != 2 * theta.edge_count {
        return Err(internal("H face walk does not cover each edge twice"));
    }

    // corner of each walk position: identified by its starting H-dart in
    // the + direction of the full rotation
    let prev = |i: usize| (i + len - 1) % len;
    let corner_key: Vec<Dart> = (0..len)
        .map(|i| {
            if walk.senses[i] == 1 {
                walk.darts[prev(i)].opposite()
            } else {
                walk.darts[i]
            }
        })
        .collect();
    {
        let mut seen = std::collections::HashSet::new();
        for &k in &corner_key {
            if !seen.insert(k) {
                return Err(internal("corner visited twice"));
            }
        }
    }

    // next H-dart after `d` in the + direction of the full rotation at its
    // vertex, and the non-H darts strictly between
    let corner_block = |d: Dart| -> (Dart, Vec<Dart>) {
        let v = d.vertex(g);
        let rot = e.rotation(v);
        let start = rot.iter().position(|&q| q == d).expect("dart in rotation");
        let mut between = Vec::new();
        for step in 1..=rot.len() {
            let q = rot[(start + step) % rot.len()];
            if in_h(q) {
                return (q, between);
            }
            between.push(q);
        }
        unreachable!("vertex has at least two H-darts");
    };

    // disk vertex ids: non-H vertices first, then corners in walk order
    let mut new_vertex: Vec<Option<VertexId>> = vec![None; g.vertex_count()];
    let mut vertex_map = Vec::new();
    for v in 0..g.vertex_count() {
        if g.degree_in(v, &union) == 0 {
            new_vertex[v] = Some(vertex_map.len());
            vertex_map.push(v);
        }
    }
    let corner_base = vertex_map.len();
    for &k in &corner_key {
        vertex_map.push(k.vertex(g));
    }
    let corner_id_of_key: std::collections::HashMap<Dart, VertexId> = corner_key
        .iter()
        .enumerate()
        .map(|(i, &k)| (k, corner_base + i))
        .collect();

    // the corner a non-H dart at an H-vertex belongs to: scan backwards in
    // the rotation for the nearest H-dart
    let corner_of_nonh_dart = |d: Dart| -> VertexId {
        let v = d.vertex(g);
        let rot = e.rotation(v);
        let start = rot.iter().position(|&q| q == d).expect("dart in rotation");
        for step in 1..=rot.len() {
            let q = rot[(start + rot.len() - step) % rot.len()];
            if in_h(q) {
                return corner_id_of_key[&q];
            }
        }
        unreachable!("H-vertex has H-darts");
    };

    let disk_end = |d: Dart| -> VertexId {
        let v = d.vertex(g);
        match new_vertex[v] {
            Some(id) => id,
            None => corner_of_nonh_dart(d),
        }
    };

    // disk edges: non-H edges keep their relative order, then one copy per
    // walk position
    let m = g.edge_count();
    let mut new_edge: Vec<Option<EdgeId>> = vec![None; m];
    let mut edge_map = Vec::new();
    let mut disk_edges: Vec<(VertexId, VertexId)> = Vec::new();
    for orig in 0..m {
        if !union.contains(orig) {
            new_edge[orig] = Some(edge_map.len());
            edge_map.push(orig);
            disk_edges.push((
                disk_end(Dart::new(orig, 0)),
                disk_end(Dart::new(orig, 1)),
            ));
        }
    }
    let copy_base = edge_map.len();
    for i in 0..len {
        edge_map.push(walk.darts[i].edge);
        disk_edges.push((corner_base + i, corner_base + (i + 1) % len));
    }

    // slot assignments: walk position i departs corner i via dart d_i and
    // arrives at corner i+1 via the opposite dart
    let mut slot: std::collections::HashMap<(VertexId, Dart), Dart> =
        std::collections::HashMap::new();
    for i in 0..len {
        let copy = copy_base + i;
        slot.insert((corner_base + i, walk.darts[i]), Dart::new(copy, 0));
        slot.insert(
            (corner_base + (i + 1) % len, walk.darts[i].opposite()),
            Dart::new(copy, 1),
        );
    }

    // rotations of the disk
    let disk_vertex_count = vertex_map.len();
    let mut disk_rotation: Vec<Vec<Dart>> = Vec::with_capacity(disk_vertex_count);
    for id in 0..corner_base {
        let v = vertex_map[id];
        disk_rotation.push(
            e.rotation(v)
                .iter()
                .map(|&d| Dart::new(new_edge[d.edge].expect("non-H edge"), d.end))
                .collect(),
        );
    }
    for (i, &k) in corner_key.iter().enumerate() {
        let id = corner_base + i;
        let (k_next, between) = corner_block(k);
        let mut rot = Vec::with_capacity(between.len() + 2);
        rot.push(*slot.get(&(id, k)).ok_or_else(|| internal("slot for corner start"))?);
        for d in between {
            rot.push(Dart::new(new_edge[d.edge].expect("non-H edge"), d.end));
        }
        rot.push(
            *slot
                .get(&(id, k_next))
                .ok_or_else(|| internal("slot for corner end"))?,
        );
        disk_rotation.push(rot);
    }

    let disk_signs: Vec<i8> = edge_map.iter().map(|&orig| e.sign(orig)).collect();
    let disk_graph = Multigraph::new(disk_vertex_count, disk_edges)
        .map_err(|err| internal(format!("disk graph: {err}")))?;
    let disk = EmbeddedGraph::new(disk_graph, disk_rotation, disk_signs)
        .map_err(|err| internal(format!("disk embedding: {err}")))?;

    // identify the outer face: the traced face equal to the constructed
    // boundary walk in either traversal direction
    let boundary_walk: Vec<Dart> = (0..len).map(|i| Dart::new(copy_base + i, 0)).collect();
    let reverse_walk: Vec<Dart> = (0..len)
        .rev()
        .map(|i| Dart::new(copy_base + i, 1))
        .collect();
    let disk_faces = trace_faces(&disk);
    let matches_cyclically = |walk: &FaceWalk, target: &[Dart]| {
        walk.len() == target.len()
            && (0..walk.len()).any(|shift| {
                (0..walk.len()).all(|j| walk.darts[(shift + j) % walk.len()] == target[j])
            })
    };
    let mut outer = None;
    for (i, w) in disk_faces.walks().iter().enumerate() {
        if matches_cyclically(w, &boundary_walk) || matches_cyclically(w, &reverse_walk) {
            if outer.is_some() {
                return Err(internal("two faces match the boundary walk"));
            }
            outer = Some(i);
        }
    }
    let outer_face = outer.ok_or_else(|| internal("no face matches the boundary walk"))?;

    // match interior faces to original faces by projected edge walks
    let original_faces = trace_faces(e);
    if disk_faces.face_count() != original_faces.face_count() + 1 {
        return Err(internal(format!(
            "disk has {} faces, expected {} interior plus outer",
            disk_faces.face_count(),
            original_faces.face_count()
        )));
    }
    let mut unmatched: Vec<(Vec<usize>, usize)> = original_faces
        .walks()
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let edges: Vec<usize> = w.darts.iter().map(|d| d.edge).collect();
            (canonical_cycle(&edges), i)
        })
        .collect();
    let mut face_map = vec![None; disk_faces.face_count()];
    for (i, w) in disk_faces.walks().iter().enumerate() {
        if i == outer_face {
            continue;
        }
        let projected: Vec<usize> = w.darts.iter().map(|d| edge_map[d.edge]).collect();
        let key = canonical_cycle(&projected);
        let at = unmatched
            .iter()
            .position(|(k, _)| *k == key)
            .ok_or_else(|| internal("interior face does not project to an original face"))?;
        face_map[i] = Some(unmatched.swap_remove(at).1);
    }
    if !unmatched.is_empty() {
        return Err(internal("some original faces have no interior image"));
    }

    // label the six sides: segments of the boundary walk between branch
    // corners
    let boundary_vertices: Vec<VertexId> = (0..len).map(|i| corner_base + i).collect();
    let is_branch =
        |pos: usize| -> bool { g.degree_in(corner_key[pos].vertex(g), &union) == 3 };
    let branch_positions: Vec<usize> = (0..len).filter(|&i| is_branch(i)).collect();
    if branch_positions.len() != 6 {
        return Err(internal(format!(
            "{} branch corners on the boundary, expected 6",
            branch_positions.len()
        )));
    }
    let mut sides = Vec::with_capacity(6);
    let mut seen_class: std::collections::HashMap<PathClass, usize> =
        std::collections::HashMap::new();
    for (si, &start) in branch_positions.iter().enumerate() {
        let end = branch_positions[(si + 1) % 6];
        let seg_len = (end + len - start - 1) % len + 1;
        let mut class = None;
        for k in 0..seg_len {
            let orig = edge_map[boundary_walk[(start + k) % len].edge];
            let c = theta
                .class_of_edge(orig)
                .ok_or_else(|| internal("boundary edge outside the theta"))?;
            match class {
                None => class = Some(c),
                Some(prev) if prev != c => {
                    return Err(internal("side mixes theta path classes"))
                }
                _ => {}
            }
        }
        let class = class.ok_or_else(|| internal("empty polygon side"))?;
        let count = seen_class.entry(class).or_insert(0);
        sides.push(Side {
            class,
            primed: *count == 1,
            start,
            len: seg_len,
        });
        *count += 1;
    }
    if seen_class.values().any(|&c| c != 2) {
        return Err(internal("each theta path must appear on exactly two sides"));
    }
    for i in 0..6 {
        if sides[i].class == sides[(i + 1) % 6].class {
            return Err(internal("two sides of the same path are adjacent"));
        }
    }
    let sides: [Side; 6] = sides.try_into().expect("six sides");

    let polygon = CutPolygon {
        disk,
        disk_faces,
        outer_face,
        edge_map,
        vertex_map,
        face_map,
        original_faces,
        boundary_walk,
        boundary_vertices,
        sides,
        theta,
    };
    validate_cut(e, &polygon)?;
    Ok(polygon)
}

/// Checks every CutPolygon invariant; used on each cut.
pub fn validate_cut(original: &EmbeddedGraph, p: &CutPolygon) -> Result<()> {
    let g = original.graph();
    let (h_v, h_e) = (p.theta.vertex_count, p.theta.edge_count);
    let dg = p.disk.graph();
    if dg.vertex_count() != g.vertex_count() + h_v + 2 {
        return Err(internal("disk vertex count"));
    }
    if dg.edge_count() != g.edge_count() + h_e {
        return Err(internal("disk edge count"));
    }
    if p.disk_faces.face_count() != p.original_faces.face_count() + 1 {
        return Err(internal("disk face count"));
    }
    if crate::embedding::euler_characteristic(&p.disk)? != 2 {
        return Err(internal("disk is not a sphere with the outer face"));
    }
    if !crate::embedding::is_orientable(&p.disk) {
        return Err(internal("disk must be orientable"));
    }
    if p.boundary_walk.len() != 2 * h_e {
        return Err(internal("boundary walk length"));
    }
    // edge_map: bijection off H, 2-to-1 on H
    let mut counts = vec![0usize; g.edge_count()];
    for &orig in &p.edge_map {
        counts[orig] += 1;
    }
    let union = p
        .theta
        .path_x
        .edges
        .iter()
        .chain(&p.theta.path_y.edges)
        .chain(&p.theta.path_xy.edges)
        .copied()
        .collect::<std::collections::HashSet<_>>();
    for (orig, &c) in counts.iter().enumerate() {
        let expected = if union.contains(&orig) { 2 } else { 1 };
        if c != expected {
            return Err(internal(format!("edge {orig} has {c} copies")));
        }
    }
    // face_map is a bijection onto the original faces
    let mut hit = vec![false; p.original_faces.face_count()];
    for (i, target) in p.face_map.iter().enumerate() {
        match target {
            None if i == p.outer_face => {}
            Some(t) if !hit[*t] => hit[*t] = true,
            _ => return Err(internal("face_map is not a bijection")),
        }
    }
    if hit.iter().any(|h| !h) {
        return Err(internal("face_map misses an original face"));
    }
    // interior boundaries project to the original boundaries
    for i in p.interior_faces() {
        let orig = p.face_map[i].unwrap();
        let mut projected = EdgeVector::zero(g.edge_count());
        for edge in p.disk_faces.boundary(i).iter_edges() {
            projected.toggle(p.edge_map[edge]);
        }
        // edges whose two copies both border this face drop out of the
        // disk boundary vector only if the walk uses them twice; project
        // the walk instead to compare
        let mut counts = vec![0u8; g.edge_count()];
        for d in &p.disk_faces.walk(i).darts {
            counts[p.edge_map[d.edge]] += 1;
        }
        let walk_projection: Vec<usize> = (0..g.edge_count())
            .filter(|&ed| counts[ed] % 2 == 1)
            .collect();
        let walk_projection = EdgeVector::from_edges(g.edge_count(), &walk_projection);
        if &walk_projection != p.original_faces.boundary(orig) {
            return Err(internal(format!("face {i} projects to a different boundary")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::euler_characteristic;
    use crate::fixtures;
    use crate::gf2::GaussianBasis;
    use crate::graph::{fundamental_cycle, spanning_tree};

    /// The two chords whose fundamental cycles extend the face boundaries
    /// to a full basis (smallest edge ids first).
    fn two_chords(e: &EmbeddedGraph) -> (EdgeVector, EdgeVector) {
        let g = e.graph();
        let t = spanning_tree(g).unwrap();
        let faces = trace_faces(e);
        let mut gb = GaussianBasis::new(g.edge_count());
        for b in faces.boundaries() {
            gb.insert_if_independent(b).unwrap();
        }
        let mut found = Vec::new();
        for edge in 0..g.edge_count() {
            if t.contains(edge) {
                continue;
            }
            let c = fundamental_cycle(g, &t, edge).unwrap();
            if gb.insert_if_independent(&c).unwrap() {
                found.push(c);
                if found.len() == 2 {
                    break;
                }
            }
        }
        let y = found.pop().unwrap();
        let x = found.pop().unwrap();
        (x, y)
    }

    #[test]
    fn cut_k5_torus() {
        let e = fixtures::k5_torus();
        let (x, y) = two_chords(&e);
        let p = cut_along_theta(&e, &x, &y).unwrap();
        let (h_v, h_e) = (p.theta.vertex_count, p.theta.edge_count);
        assert_eq!(p.disk.graph().vertex_count(), 5 + h_v + 2);
        assert_eq!(p.disk.graph().edge_count(), 10 + h_e);
        assert_eq!(p.interior_faces().count(), 5);
        assert_eq!(euler_characteristic(&p.disk).unwrap(), 2);
        assert_eq!(p.boundary_walk.len(), 2 * h_e);
    }

    #[test]
    fn cut_k7_torus() {
        let e = fixtures::k7_torus();
        let (x, y) = two_chords(&e);
        let p = cut_along_theta(&e, &x, &y).unwrap();
        assert_eq!(p.interior_faces().count(), 14);
        assert_eq!(p.boundary_walk.len(), 2 * p.theta.edge_count);
    }

    #[test]
    fn cut_klein_bottle() {
        let e = fixtures::k5_klein();
        let (x, y) = two_chords(&e);
        let p = cut_along_theta(&e, &x, &y).unwrap();
        assert_eq!(p.interior_faces().count(), 5);
    }

    #[test]
    fn planar_input_is_rejected() {
        let e = fixtures::triangle();
        let g = e.graph();
        let v = g.edge_vector(&[0, 1, 2]);
        assert!(matches!(
            cut_along_theta(&e, &v, &v),
            Err(Error::WrongChi {
                expected: 0,
                actual: 2
            })
        ));
    }

    #[test]
    fn separating_theta_is_rejected() {
        // two triangular faces of K7 sharing an edge form a theta whose
        // induced embedding has two faces
        let e = fixtures::k7_torus();
        let faces = trace_faces(&e);
        let mut pair = None;
        'outer: for i in 0..faces.face_count() {
            for j in i + 1..faces.face_count() {
                if !faces.boundary(i).intersection(faces.boundary(j)).is_zero() {
                    pair = Some((i, j));
                    break 'outer;
                }
            }
        }
        let (i, j) = pair.unwrap();
        let x = faces.boundary(i).clone();
        let y = faces.boundary(j).clone();
        assert!(matches!(
            cut_along_theta(&e, &x, &y),
            Err(Error::SeparatingCycle(_))
        ));
    }

    #[test]
    fn non_theta_is_rejected() {
        let e = fixtures::k5_torus();
        let g = e.graph();
        let zero = EdgeVector::zero(g.edge_count());
        assert!(matches!(
            cut_along_theta(&e, &zero, &zero),
            Err(Error::NotTheta(_))
        ));
    }

    #[test]
    fn sides_pair_up_nonadjacent() {
        for e in [fixtures::k5_torus(), fixtures::k33_torus(), fixtures::k5_klein()] {
            let (x, y) = two_chords(&e);
            let p = cut_along_theta(&e, &x, &y).unwrap();
            for class in [PathClass::X, PathClass::Y, PathClass::Xy] {
                let copies: Vec<usize> = (0..6)
                    .filter(|&i| p.sides[i].class == class)
                    .collect();
                assert_eq!(copies.len(), 2);
                let d = (copies[1] + 6 - copies[0]) % 6;
                assert!(d >= 2 && d <= 4, "same-path sides must not be adjacent");
                // each side projects to the full path
                for &i in &copies {
                    let mut edges: Vec<usize> = p
                        .side_edges(i)
                        .iter()
                        .map(|&de| p.edge_map[de])
                        .collect();
                    edges.sort_unstable();
                    let mut expected = p.theta.path(class).edges.clone();
                    expected.sort_unstable();
                    assert_eq!(edges, expected);
                }
            }
        }
    }
}

//! Multigraphs, spanning trees and fundamental cycles.

use crate::error::{Error, Result};
use crate::gf2::EdgeVector;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Undirected multigraph. Parallel edges are allowed, loops are rejected.
/// Edge ids are dense: the id of an edge is its index in the edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    incident: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::LoopEdge(id));
            }
            for endpoint in [u, v] {
                if endpoint >= vertex_count {
                    return Err(Error::BadEndpoint {
                        edge: id,
                        endpoint,
                        vertex_count,
                    });
                }
            }
        }
        let mut incident = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(id);
            incident[v].push(id);
        }
        Ok(Multigraph {
            vertex_count,
            edges,
            incident,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            debug_assert_eq!(v, b);
            a
        }
    }

    /// Edge ids incident to `v`, in increasing order.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v].len()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = std::collections::VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.incident[v] {
                let w = self.other_endpoint(e, v);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Edge subset as a vector over this graph's edge universe.
    pub fn edge_vector(&self, edges: &[EdgeId]) -> EdgeVector {
        EdgeVector::from_edges(self.edge_count(), edges)
    }

    /// Degree of `v` in the subgraph spanned by `edges`.
    pub fn degree_in(&self, v: VertexId, edges: &EdgeVector) -> usize {
        self.incident[v]
            .iter()
            .filter(|&&e| edges.contains(e))
            .count()
    }

    /// True iff every vertex has even degree in `edges`, i.e. the vector
    /// lies in the cycle space.
    pub fn all_degrees_even(&self, edges: &EdgeVector) -> bool {
        (0..self.vertex_count).all(|v| self.degree_in(v, edges) % 2 == 0)
    }
}

/// Builds the complete graph K_n with edges in lexicographic order.
pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Multigraph::new(n, edges).unwrap()
}

/// Complete bipartite graph K_{a,b}; left part 0..a, right part a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Multigraph::new(a + b, edges).unwrap()
}

/// Spanning tree rooted at vertex 0, produced by deterministic BFS with
/// smallest-edge-id tie-break.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    in_tree: Vec<bool>,
    /// Per vertex: (parent vertex, connecting edge); `None` at the root.
    parent: Vec<Option<(VertexId, EdgeId)>>,
    tree_edges: Vec<EdgeId>,
    depth: Vec<usize>,
}

impl SpanningTree {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.in_tree[e]
    }

    /// Tree edge ids in increasing order.
    pub fn tree_edges(&self) -> &[EdgeId] {
        &self.tree_edges
    }

    pub fn parent(&self, v: VertexId) -> Option<(VertexId, EdgeId)> {
        self.parent[v]
    }

    /// Edge ids of the unique tree path between `u` and `v`.
    pub fn path_edges(&self, mut u: VertexId, mut v: VertexId) -> Vec<EdgeId> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        while self.depth[u] > self.depth[v] {
            let (p, e) = self.parent[u].unwrap();
            left.push(e);
            u = p;
        }
        while self.depth[v] > self.depth[u] {
            let (p, e) = self.parent[v].unwrap();
            right.push(e);
            v = p;
        }
        while u != v {
            let (pu, eu) = self.parent[u].unwrap();
            let (pv, ev) = self.parent[v].unwrap();
            left.push(eu);
            right.push(ev);
            u = pu;
            v = pv;
        }
        right.reverse();
        left.extend(right);
        left
    }
}

/// Dimension of the cycle space of a connected graph: |E| - |V| + 1.
pub fn betti(g: &Multigraph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(g.edge_count() + 1 - g.vertex_count())
}

pub fn spanning_tree(g: &Multigraph) -> Result<SpanningTree> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = g.vertex_count();
    let mut parent = vec![None; n.max(1)];
    let mut depth = vec![0; n.max(1)];
    let mut seen = vec![false; n.max(1)];
    let mut in_tree = vec![false; g.edge_count()];
    let mut tree_edges = Vec::new();
    if n > 0 {
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            // incident lists are sorted by edge id, which is the tie-break
            for &e in g.incident_edges(v) {
                let w = g.other_endpoint(e, v);
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    depth[w] = depth[v] + 1;
                    in_tree[e] = true;
                    tree_edges.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    tree_edges.sort_unstable();
    Ok(SpanningTree {
        in_tree,
        parent,
        tree_edges,
        depth,
    })
}

/// The cycle formed by non-tree edge `e` together with the tree path
/// between its endpoints.
pub fn fundamental_cycle(g: &Multigraph, t: &SpanningTree, e: EdgeId) -> Result<EdgeVector> {
    if t.contains(e) {
        return Err(Error::EdgeInTree(e));
    }
    let (u, v) = g.endpoints(e);
    let mut edges = t.path_edges(u, v);
    edges.push(e);
    Ok(g.edge_vector(&edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::GaussianBasis;

    fn triangle() -> Multigraph {
        Multigraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn loops_are_rejected() {
        assert!(matches!(
            Multigraph::new(2, vec![(1, 1)]),
            Err(Error::LoopEdge(0))
        ));
        assert!(matches!(
            Multigraph::new(2, vec![(0, 3)]),
            Err(Error::BadEndpoint { .. })
        ));
    }

    #[test]
    fn parallel_edges_are_allowed() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(betti(&g).unwrap(), 1);
    }

    #[test]
    fn betti_values() {
        assert_eq!(betti(&triangle()).unwrap(), 1);
        assert_eq!(betti(&complete(7)).unwrap(), 15);
        assert_eq!(betti(&complete(5)).unwrap(), 6);
        let disconnected = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            betti(&disconnected),
            Err(Error::DisconnectedGraph)
        ));
    }

    #[test]
    fn bfs_tree_is_deterministic() {
        let t = spanning_tree(&triangle()).unwrap();
        assert_eq!(t.tree_edges(), &[0, 1]);
        let t7 = spanning_tree(&complete(7)).unwrap();
        assert_eq!(t7.tree_edges().len(), 6);
        let single = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(spanning_tree(&single).unwrap().tree_edges(), &[0]);
    }

    #[test]
    fn fundamental_cycle_triangle() {
        let g = triangle();
        let t = spanning_tree(&g).unwrap();
        let c = fundamental_cycle(&g, &t, 2).unwrap();
        assert_eq!(c.edges(), vec![0, 1, 2]);
        assert!(matches!(
            fundamental_cycle(&g, &t, 0),
            Err(Error::EdgeInTree(0))
        ));
    }

    #[test]
    fn fundamental_cycle_path_plus_chord() {
        // path 3-1-0-2-4 plus chord (3,4)
        let g = Multigraph::new(5, vec![(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let t = spanning_tree(&g).unwrap();
        assert!(!t.contains(4));
        let c = fundamental_cycle(&g, &t, 4).unwrap();
        assert_eq!(c.edges(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn k5_chord_cycle_through_tree() {
        let g = complete(5);
        let t = spanning_tree(&g).unwrap();
        // BFS from 0 keeps edges (0,v); chord between non-root vertices
        // closes through the root.
        let chord = g
            .edges()
            .iter()
            .position(|&(u, v)| u == 1 && v == 2)
            .unwrap();
        assert!(!t.contains(chord));
        let c = fundamental_cycle(&g, &t, chord).unwrap();
        assert_eq!(c.popcount(), 3);
    }

    #[test]
    fn fundamental_cycles_have_rank_betti_and_one_chord() {
        for g in [triangle(), complete(5), complete(7)] {
            let t = spanning_tree(&g).unwrap();
            let mut gb = GaussianBasis::new(g.edge_count());
            for e in 0..g.edge_count() {
                if t.contains(e) {
                    continue;
                }
                let c = fundamental_cycle(&g, &t, e).unwrap();
                let chords: Vec<_> = c.iter_edges().filter(|&f| !t.contains(f)).collect();
                assert_eq!(chords, vec![e]);
                assert!(g.all_degrees_even(&c));
                assert!(gb.insert_if_independent(&c).unwrap());
            }
            assert_eq!(gb.rank(), betti(&g).unwrap());
        }
    }

    #[test]
    fn pairwise_intersections_are_tree_paths() {
        let g = complete(5);
        let t = spanning_tree(&g).unwrap();
        let chords: Vec<_> = (0..g.edge_count()).filter(|&e| !t.contains(e)).collect();
        for (i, &a) in chords.iter().enumerate() {
            for &b in &chords[i + 1..] {
                let ca = fundamental_cycle(&g, &t, a).unwrap();
                let cb = fundamental_cycle(&g, &t, b).unwrap();
                let common = ca.intersection(&cb);
                // all shared edges are tree edges forming a path: every
                // vertex has degree <= 2 and the edge set is connected
                assert!(common.iter_edges().all(|e| t.contains(e)));
                if common.is_zero() {
                    continue;
                }
                let verts: Vec<_> = (0..g.vertex_count())
                    .filter(|&v| g.degree_in(v, &common) > 0)
                    .collect();
                let odd: Vec<_> = verts
                    .iter()
                    .filter(|&&v| g.degree_in(v, &common) % 2 == 1)
                    .collect();
                assert!(verts.iter().all(|&v| g.degree_in(v, &common) <= 2));
                assert_eq!(odd.len(), 2, "path has exactly two endpoints");
                assert_eq!(common.popcount() + 1, verts.len(), "connected path");
            }
        }
    }
}

//! Named example embeddings used by tests and the CLI.
//!
//! Each fixture is a frozen rotation system whose surface invariants
//! (Euler characteristic, orientability, face structure) are pinned by
//! unit tests below.

use crate::embedding::EmbeddedGraph;
use crate::graph::{complete, complete_bipartite, Multigraph};

fn simple(n: usize, edges: &[(usize, usize)], rot: &[&[usize]], signs: &[i8]) -> EmbeddedGraph {
    let g = Multigraph::new(n, edges.to_vec()).unwrap();
    EmbeddedGraph::from_neighbor_rotations(
        g,
        rot.iter().map(|r| r.to_vec()).collect(),
        signs.to_vec(),
    )
    .unwrap()
}

/// Triangle on the sphere.
pub fn triangle() -> EmbeddedGraph {
    simple(
        3,
        &[(0, 1), (0, 2), (1, 2)],
        &[&[1, 2], &[0, 2], &[0, 1]],
        &[1, 1, 1],
    )
}

/// Two vertices joined by two parallel edges, on the sphere.
pub fn parallel_pair() -> EmbeddedGraph {
    use crate::embedding::Dart;
    let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
    EmbeddedGraph::new(
        g,
        vec![
            vec![Dart::new(0, 0), Dart::new(1, 0)],
            vec![Dart::new(0, 1), Dart::new(1, 1)],
        ],
        vec![1, 1],
    )
    .unwrap()
}

/// K4 on the sphere.
pub fn k4_planar() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_rotations(
        complete(4),
        vec![vec![1, 3, 2], vec![0, 2, 3], vec![0, 3, 1], vec![0, 1, 2]],
        vec![1; 6],
    )
    .unwrap()
}

/// The cube graph Q3 on the sphere: two square rungs plus the connecting
/// edges, six quadrilateral faces.
pub fn cube_planar() -> EmbeddedGraph {
    simple(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
        &[
            &[1, 4, 3],
            &[0, 2, 5],
            &[1, 3, 6],
            &[2, 0, 7],
            &[5, 7, 0],
            &[4, 1, 6],
            &[5, 2, 7],
            &[6, 3, 4],
        ],
        &[1; 12],
    )
}

/// K5 on the torus (5 faces).
pub fn k5_torus() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_rotations(
        complete(5),
        vec![
            vec![1, 4, 2, 3],
            vec![0, 2, 3, 4],
            vec![0, 3, 1, 4],
            vec![0, 1, 2, 4],
            vec![0, 1, 2, 3],
        ],
        vec![1; 10],
    )
    .unwrap()
}

/// K5 on the orientable genus-2 surface (chi = -2).
pub fn k5_genus2() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_rotations(
        complete(5),
        vec![
            vec![1, 2, 3, 4],
            vec![0, 2, 3, 4],
            vec![0, 1, 3, 4],
            vec![0, 1, 2, 4],
            vec![0, 1, 2, 3],
        ],
        vec![1; 10],
    )
    .unwrap()
}

/// K3,3 on the torus (3 hexagonal faces).
pub fn k33_torus() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_rotations(
        complete_bipartite(3, 3),
        vec![
            vec![3, 4, 5],
            vec![3, 4, 5],
            vec![3, 4, 5],
            vec![0, 1, 2],
            vec![0, 1, 2],
            vec![0, 1, 2],
        ],
        vec![1; 9],
    )
    .unwrap()
}

/// K5 on the Klein bottle (chi = 0, non-orientable).
pub fn k5_klein() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_rotations(
        complete(5),
        vec![
            vec![1, 2, 3, 4],
            vec![0, 2, 3, 4],
            vec![0, 1, 3, 4],
            vec![0, 1, 2, 4],
            vec![0, 1, 2, 3],
        ],
        vec![-1, 1, 1, -1, -1, 1, 1, -1, 1, 1],
    )
    .unwrap()
}

/// K5 on the projective plane (chi = 1).
pub fn k5_projective() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_rotations(
        complete(5),
        vec![
            vec![1, 2, 3, 4],
            vec![0, 2, 3, 4],
            vec![0, 1, 3, 4],
            vec![0, 1, 2, 4],
            vec![0, 1, 2, 3],
        ],
        vec![-1, 1, 1, -1, -1, 1, 1, -1, 1, -1],
    )
    .unwrap()
}

/// K6 triangulating the projective plane (10 triangular faces).
pub fn k6_projective() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_rotations(
        complete(6),
        vec![
            vec![2, 4, 3, 1, 5],
            vec![5, 0, 3, 2, 4],
            vec![5, 3, 1, 4, 0],
            vec![1, 0, 4, 5, 2],
            vec![3, 0, 2, 1, 5],
            vec![0, 1, 4, 3, 2],
        ],
        vec![1, 1, 1, 1, 1, -1, 1, -1, 1, -1, 1, 1, 1, -1, -1],
    )
    .unwrap()
}

/// K7 triangulating the torus: rotation at vertex i is
/// (i+1, i+3, i+2, i+6, i+4, i+5) mod 7; 14 triangular faces.
pub fn k7_torus() -> EmbeddedGraph {
    let rot = (0..7)
        .map(|i| [1, 3, 2, 6, 4, 5].iter().map(|d| (i + d) % 7).collect())
        .collect();
    EmbeddedGraph::from_neighbor_rotations(complete(7), rot, vec![1; 21]).unwrap()
}

/// Two triangles sharing one vertex, embedded with a single face on the
/// torus. Its two independent cycles are edge-disjoint.
pub fn bowtie_torus() -> EmbeddedGraph {
    simple(
        5,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)],
        &[&[1, 3, 2, 4], &[0, 2], &[0, 1], &[0, 4], &[0, 3]],
        &[1; 6],
    )
}

pub const FIXTURE_NAMES: &[&str] = &[
    "triangle",
    "parallel-pair",
    "k4-planar",
    "cube",
    "k5-torus",
    "k5-genus2",
    "k33-torus",
    "k5-klein",
    "k5-projective",
    "k6-projective",
    "k7-torus",
    "bowtie-torus",
];

pub fn by_name(name: &str) -> Option<EmbeddedGraph> {
    Some(match name {
        "triangle" => triangle(),
        "parallel-pair" => parallel_pair(),
        "k4-planar" => k4_planar(),
        "cube" => cube_planar(),
        "k5-torus" => k5_torus(),
        "k5-genus2" => k5_genus2(),
        "k33-torus" => k33_torus(),
        "k5-klein" => k5_klein(),
        "k5-projective" => k5_projective(),
        "k6-projective" => k6_projective(),
        "k7-torus" => k7_torus(),
        "bowtie-torus" => bowtie_torus(),
        _ => return None,
    })
}

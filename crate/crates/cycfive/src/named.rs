//! Well-known small graphs used by the corpus, the tests and the CLI docs.

use crate::graph::CubicGraph;

/// Graph6 string of the Petersen graph in the GP(5,2) labelling below.
pub const PETERSEN_G6: &str = "IheA@GUAo";

pub fn k4() -> CubicGraph {
    CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn k3_3() -> CubicGraph {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    CubicGraph::from_edges(6, &edges).unwrap()
}

pub fn cycle(n: usize) -> CubicGraph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    CubicGraph::from_edges(n, &edges).unwrap()
}

/// Generalized Petersen graph GP(n, k): outer cycle `0..n`, inner vertices
/// `n..2n` joined with step `k`, spokes `i -- n+i`.
pub fn generalized_petersen(n: usize, k: usize) -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    CubicGraph::from_edges(2 * n, &edges).unwrap()
}

/// The Petersen graph as GP(5,2): outer 5-cycle 0-4, inner pentagram 5-9.
pub fn petersen() -> CubicGraph {
    generalized_petersen(5, 2)
}

/// The dodecahedral graph as GP(10,2).
pub fn dodecahedron() -> CubicGraph {
    generalized_petersen(10, 2)
}

pub fn triangular_prism() -> CubicGraph {
    CubicGraph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// Two triangles joined by a single (bridge) edge between vertices 2 and 3.
pub fn two_triangles_bridged() -> CubicGraph {
    CubicGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap()
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> CubicGraph {
    CubicGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
}

pub fn disjoint_union(a: &CubicGraph, b: &CubicGraph) -> CubicGraph {
    let mut edges: Vec<(usize, usize)> = a.edges().to_vec();
    for &(u, v) in b.edges() {
        edges.push((u + a.n(), v + a.n()));
    }
    CubicGraph::from_edges(a.n() + b.n(), &edges).unwrap()
}

/// The 7-vertex cyclic part obtained from [`petersen`] by deleting the
/// outer path 0-1-2. Vertices keep the labels 0..6 via the order-preserving
/// relabelling 3,4,5,6,7,8,9 -> 0..6; the five degree-2 vertices are 0..4.
pub fn petersen_part_graph() -> CubicGraph {
    CubicGraph::from_edges(
        7,
        &[
            (0, 1),
            (0, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (3, 5),
            (3, 6),
            (4, 6),
        ],
    )
    .unwrap()
}

/// Two copies of [`petersen_part_graph`] joined by a 5-edge matching so
/// that the result is cubic with cyclic connectivity 5 (verified against
/// the exhaustive oracle in the tests). The labelling is chosen so that
/// the join edges (i, 5+i) form the lexicographically smallest minimum
/// cut: boundary vertices of copy one are 0..4, of copy two 5..9, and the
/// interiors are 10..11 and 12..13.
pub fn two_parts_join() -> CubicGraph {
    let part = petersen_part_graph();
    // copy one keeps its boundary labels, copy two gets them shuffled
    let m1 = [0, 1, 2, 3, 4, 10, 11];
    let m2 = [5, 9, 6, 8, 7, 12, 13];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in part.edges() {
        edges.push((m1[u], m1[v]));
        edges.push((m2[u], m2[v]));
    }
    for i in 0..5 {
        edges.push((i, 5 + i));
    }
    CubicGraph::from_edges(14, &edges).unwrap()
}

/// A 17-vertex cyclic part with an internal 3-edge waist: a copy of
/// [`petersen_part_graph`] (labels 0..6, boundary vertices 0 and 4) joined
/// by three edges to a copy of the Petersen graph minus the spokes 0-5,
/// 1-6, 2-7 (labels 7..16). Some girth-5 extensions of this part have a
/// cycle-separating 4-cut whose far side is 2-connected, which exercises
/// the first repair rule of the completion.
pub fn waisted_part_two_connected() -> CubicGraph {
    let c1 = petersen_part_graph();
    let pet = petersen();
    let mut edges: Vec<(usize, usize)> = c1.edges().to_vec();
    let off = 7;
    for &(u, v) in pet.edges() {
        if [(0, 5), (1, 6), (2, 7)].contains(&(u, v)) {
            continue;
        }
        edges.push((u + off, v + off));
    }
    for (b, c) in [(1usize, 1usize), (2, 2), (3, 5)] {
        edges.push((b, c + off));
    }
    CubicGraph::from_edges(17, &edges).unwrap()
}

/// A 15-vertex cyclic part whose girth-5 extensions can have a 4-cut with
/// a bridge on the far side: two copies of [`petersen_part_graph`]
/// (labels 0..6 and 7..13) joined through a degree-2 apex vertex 14 plus
/// two direct edges. The apex is both a boundary vertex and a cut-edge
/// endpoint, which exercises the second repair rule of the completion.
pub fn waisted_part_bridged() -> CubicGraph {
    let c1 = petersen_part_graph();
    let mut edges: Vec<(usize, usize)> = c1.edges().to_vec();
    let off = 7;
    for &(u, v) in c1.edges() {
        edges.push((u + off, v + off));
    }
    let apex = 14;
    edges.extend([(1, apex), (apex, 3 + off), (2, 1 + off), (3, 4 + off)]);
    CubicGraph::from_edges(15, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_are_cubic() {
        for g in [
            k4(),
            k3_3(),
            petersen(),
            dodecahedron(),
            triangular_prism(),
            theta(),
            two_parts_join(),
        ] {
            assert!(g.is_cubic(), "expected cubic");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn petersen_part_graph_matches_deletion() {
        use crate::graph::VertexSet;
        let g = petersen();
        let rest = VertexSet::new(3..10, 10).unwrap();
        let ind = g.induced(&rest).unwrap();
        assert_eq!(ind.graph, petersen_part_graph());
    }
}

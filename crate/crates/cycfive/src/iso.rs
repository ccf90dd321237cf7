//! Isomorphism testing for the small graphs handled here (≲ 25 vertices).
//!
//! Plain backtracking over vertex assignments with degree and adjacency
//! consistency pruning; multiplicities and loops are respected. Test
//! support, not a performance-critical path.

use crate::graph::CubicGraph;

fn adjacency_matrix(g: &CubicGraph) -> Vec<Vec<u8>> {
    let n = g.n();
    let mut m = vec![vec![0u8; n]; n];
    for &(u, v) in g.edges() {
        if u == v {
            m[u][u] += 1;
        } else {
            m[u][v] += 1;
            m[v][u] += 1;
        }
    }
    m
}

/// BFS-forest order so that each vertex (after the first of its component)
/// has an already-ordered neighbour, which lets the backtracking prune.
fn bfs_order(g: &CubicGraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &(w, _) in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

pub fn are_isomorphic(a: &CubicGraph, b: &CubicGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    if n == 0 {
        return true;
    }
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let ma = adjacency_matrix(a);
    let mb = adjacency_matrix(b);
    let order = bfs_order(a);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn assign(
        pos: usize,
        order: &[usize],
        ma: &[Vec<u8>],
        mb: &[Vec<u8>],
        a: &CubicGraph,
        b: &CubicGraph,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        for w in 0..b.n() {
            if used[w] || a.degree(u) != b.degree(w) || ma[u][u] != mb[w][w] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&p| {
                let q = map[p];
                ma[u][p] == mb[w][q]
            });
            if !consistent {
                continue;
            }
            map[u] = w;
            used[w] = true;
            if assign(pos + 1, order, ma, mb, a, b, map, used) {
                return true;
            }
            map[u] = usize::MAX;
            used[w] = false;
        }
        false
    }

    assign(0, &order, &ma, &mb, a, b, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn detects_relabelled_petersen() {
        let g = named::petersen();
        // Relabel v -> (3v + 1) mod 10.
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| ((3 * u + 1) % 10, (3 * v + 1) % 10))
            .collect();
        let h = CubicGraph::from_edges(10, &edges).unwrap();
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn distinguishes_same_size_graphs() {
        // Both cubic on 6 vertices, different girth.
        assert!(!are_isomorphic(&named::k3_3(), &named::triangular_prism()));
        assert!(!are_isomorphic(
            &named::petersen(),
            &named::generalized_petersen(5, 1)
        ));
    }

    #[test]
    fn respects_multiplicity() {
        let single = CubicGraph::from_edges(2, &[(0, 1)]).unwrap();
        let double = CubicGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(!are_isomorphic(&single, &double));
        assert!(are_isomorphic(&double, &double.clone()));
    }
}

//! Brute-force reference implementations: slow, simple, and independent of
//! the fast paths they validate. The only code shared with the rest of the
//! crate is the graph type itself.

use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::completion::{extend, CyclicPart, Perm};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeCut, EdgeId, VertexSet};

/// Largest edge count accepted by the subset-enumeration oracles; keeps
/// worst-case subset counts in the low millions.
pub const EDGE_BUDGET: usize = 40;

/// One row of a fast-vs-oracle comparison.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub subject: String,
    pub oracle_value: String,
    pub fast_value: String,
    pub agree: bool,
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn new<T: std::fmt::Debug + PartialEq>(
        subject: impl Into<String>,
        oracle_value: &T,
        fast_value: &T,
        elapsed: Duration,
    ) -> Self {
        OracleReport {
            subject: subject.into(),
            oracle_value: format!("{oracle_value:?}"),
            fast_value: format!("{fast_value:?}"),
            agree: oracle_value == fast_value,
            elapsed,
        }
    }
}

fn check_budget(g: &CubicGraph) -> Result<()> {
    if g.edge_count() > EDGE_BUDGET {
        return Err(Error::TooLarge(format!(
            "{} edges exceeds the oracle budget of {EDGE_BUDGET}",
            g.edge_count()
        )));
    }
    Ok(())
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            self.parent[v] = self.find(self.parent[v]);
        }
        self.parent[v]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Union-find based cycle-separation test, written independently of the
/// BFS-based fast path.
fn separates_two_cycles(g: &CubicGraph, removed: &[bool]) -> bool {
    let n = g.n();
    let mut dsu = Dsu::new(n);
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        if !removed[idx] {
            dsu.union(u, v);
        }
    }
    let mut size = vec![0usize; n];
    let mut edge_count = vec![0usize; n];
    for v in 0..n {
        let r = dsu.find(v);
        size[r] += 1;
    }
    for (idx, &(u, _)) in g.edges().iter().enumerate() {
        if !removed[idx] {
            let r = dsu.find(u);
            edge_count[r] += 1;
        }
    }
    (0..n)
        .filter(|&v| dsu.find(v) == v && edge_count[v] >= size[v])
        .count()
        >= 2
}

/// Enumerates all `k`-subsets of edge ids in lexicographic order and
/// collects those that separate two cycles; stops at the first hit when
/// `collect_all` is false. No independence pruning of any kind.
fn separating_subsets(g: &CubicGraph, k: usize, collect_all: bool) -> Vec<Vec<usize>> {
    fn rec(
        g: &CubicGraph,
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        removed: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        collect_all: bool,
    ) -> bool {
        if chosen.len() == k {
            if separates_two_cycles(g, removed) {
                out.push(chosen.clone());
                return !collect_all;
            }
            return false;
        }
        let remaining = k - chosen.len();
        let m = g.edge_count();
        for next in start..=(m - remaining) {
            chosen.push(next);
            removed[next] = true;
            let stop = rec(g, k, next + 1, chosen, removed, out, collect_all);
            removed[next] = false;
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
    let mut out = Vec::new();
    if k == 0 || k > g.edge_count() {
        return out;
    }
    let mut chosen = Vec::with_capacity(k);
    let mut removed = vec![false; g.edge_count()];
    rec(g, k, 0, &mut chosen, &mut removed, &mut out, collect_all);
    out
}

fn scan_bounds(g: &CubicGraph) -> Result<(usize, usize)> {
    g.require_cubic()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let beta = g.cycle_rank()?;
    let girth = g
        .girth()
        .expect("connected cubic graphs always contain a cycle");
    Ok((girth, beta))
}

/// ζ by exhaustive unpruned enumeration of all edge subsets of size
/// 1..=min(girth, β); returns the cycle rank when nothing separates.
pub fn zeta_oracle(g: &CubicGraph) -> Result<usize> {
    check_budget(g)?;
    let (girth, beta) = scan_bounds(g)?;
    for k in 1..=girth.min(beta) {
        if !separating_subsets(g, k, false).is_empty() {
            return Ok(k);
        }
    }
    Ok(beta)
}

/// Every cycle-separating cut of minimum size, in lexicographic order;
/// empty when no cycle-separating cut exists.
pub fn all_min_cuts(g: &CubicGraph) -> Result<Vec<EdgeCut>> {
    check_budget(g)?;
    let (girth, beta) = scan_bounds(g)?;
    for k in 1..=girth.min(beta) {
        let subsets = separating_subsets(g, k, true);
        if !subsets.is_empty() {
            return subsets
                .into_iter()
                .map(|ids| EdgeCut::new(ids.into_iter().map(EdgeId), g))
                .collect();
        }
    }
    Ok(Vec::new())
}

fn permutations(items: [usize; 5]) -> Vec<Perm> {
    let mut out = Vec::with_capacity(120);
    let mut items = items;
    fn heap(arr: &mut [usize; 5], k: usize, out: &mut Vec<Perm>) {
        if k == 1 {
            out.push(*arr);
            return;
        }
        for i in 0..k {
            heap(arr, k - 1, out);
            if k.is_multiple_of(2) {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    heap(&mut items, 5, &mut out);
    out
}

/// All boundary orderings whose extension has girth at least five, found
/// by building each of the 120 extensions and measuring its girth.
pub fn all_girth5_perms(h: &CyclicPart) -> Vec<Perm> {
    let mut out: Vec<Perm> = permutations(*h.boundary())
        .into_iter()
        .filter(|perm| {
            let e = extend(h, perm).expect("orderings of the boundary are permutations");
            e.graph.girth().is_some_and(|g| g >= 5)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Girth by exhaustive cycle enumeration: loops, parallel pairs, and a
/// DFS over all simple cycles anchored at their smallest vertex.
pub fn girth_oracle(g: &CubicGraph) -> Result<Option<usize>> {
    if g.n() > 16 {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds the cycle-enumeration budget of 16",
            g.n()
        )));
    }
    let mut best: Option<usize> = None;
    for &(u, v) in g.edges() {
        if u == v {
            best = Some(1);
        }
    }
    if best.is_none() {
        let edges = g.edges();
        'outer: for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                if edges[i] == edges[j] {
                    best = Some(2);
                    break 'outer;
                }
            }
        }
    }
    fn dfs(
        g: &CubicGraph,
        anchor: usize,
        u: usize,
        len: usize,
        on_path: &mut Vec<bool>,
        best: &mut Option<usize>,
    ) {
        if best.is_some_and(|b| len + 1 >= b) {
            return;
        }
        for &(w, _) in g.neighbors(u) {
            if w == anchor && len >= 2 {
                let cycle = len + 1;
                if best.is_none_or(|b| cycle < b) {
                    *best = Some(cycle);
                }
            } else if w > anchor && !on_path[w] {
                on_path[w] = true;
                dfs(g, anchor, w, len + 1, on_path, best);
                on_path[w] = false;
            }
        }
    }
    for anchor in 0..g.n() {
        let mut on_path = vec![false; g.n()];
        on_path[anchor] = true;
        dfs(g, anchor, anchor, 0, &mut on_path, &mut best);
    }
    Ok(best)
}

/// Seeded sampler of connected acyclic induced subgraphs: grows a random
/// induced tree, only ever adding a vertex with exactly one edge into the
/// current set. Every emitted set is connected and induces a tree.
pub fn sample_acyclic_connected_subsets(g: &CubicGraph, count: usize, seed: u64) -> Vec<VertexSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let start = rng.random_range(0..g.n());
        if g.multiplicity(start, start) > 0 {
            continue;
        }
        let target = rng.random_range(1..=g.n());
        let mut set = vec![start];
        let mut in_set = vec![false; g.n()];
        in_set[start] = true;
        while set.len() < target {
            let mut cands: Vec<usize> = Vec::new();
            for &v in &set {
                for &(w, _) in g.neighbors(v) {
                    if in_set[w] || cands.contains(&w) || g.multiplicity(w, w) > 0 {
                        continue;
                    }
                    let edges_in = g.neighbors(w).iter().filter(|&&(u, _)| in_set[u]).count();
                    if edges_in == 1 {
                        cands.push(w);
                    }
                }
            }
            if cands.is_empty() {
                break;
            }
            cands.sort_unstable();
            let w = cands[rng.random_range(0..cands.len())];
            in_set[w] = true;
            set.push(w);
        }
        out.push(VertexSet::new(set, g.n()).expect("sampled vertices are in range"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn zeta_oracle_on_the_paper_constants() {
        assert_eq!(zeta_oracle(&named::k4()).unwrap(), 3);
        assert_eq!(zeta_oracle(&named::k3_3()).unwrap(), 4);
        assert_eq!(zeta_oracle(&named::petersen()).unwrap(), 5);
    }

    #[test]
    fn oracle_budget_enforced() {
        // 42 vertices of a cubic circular ladder: 63 edges, over budget.
        let n = 42;
        let mut edges = Vec::new();
        for i in 0..n / 2 {
            edges.push((i, (i + 1) % (n / 2)));
            edges.push((n / 2 + i, n / 2 + (i + 1) % (n / 2)));
            edges.push((i, n / 2 + i));
        }
        let g = CubicGraph::from_edges(n, &edges).unwrap();
        assert!(matches!(zeta_oracle(&g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn all_min_cuts_of_petersen_are_independent_and_contain_the_spokes() {
        let g = named::petersen();
        let cuts = all_min_cuts(&g).unwrap();
        assert!(!cuts.is_empty());
        let spokes = g.boundary(&VertexSet::new(0..5, 10).unwrap()).unwrap();
        assert!(cuts.contains(&spokes));
        for cut in &cuts {
            assert_eq!(cut.len(), 5);
            assert!(cut.is_independent(&g));
        }
    }

    #[test]
    fn all_min_cuts_empty_for_k4() {
        assert!(all_min_cuts(&named::k4()).unwrap().is_empty());
    }

    #[test]
    fn girth_oracle_agrees_on_small_graphs() {
        for g in [
            named::k4(),
            named::k3_3(),
            named::petersen(),
            named::triangular_prism(),
            named::theta(),
            named::two_parts_join(),
            named::cycle(5),
            named::two_triangles_bridged(),
        ] {
            assert_eq!(girth_oracle(&g).unwrap(), g.girth(), "girth mismatch");
        }
    }

    #[test]
    fn sampled_subsets_are_acyclic_connected_and_induced() {
        let g = named::petersen();
        for set in sample_acyclic_connected_subsets(&g, 100, 7) {
            let ind = g.induced(&set).unwrap();
            assert!(ind.graph.is_connected());
            assert!(ind.graph.is_acyclic());
            assert_eq!(ind.graph.edge_count(), set.len() - 1);
        }
    }
}

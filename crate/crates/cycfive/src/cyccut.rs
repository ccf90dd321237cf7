//! Cycle-separating edge cuts and cyclic edge-connectivity.
//!
//! An edge cut is cycle-separating if at least two components of the cut
//! graph contain a cycle. ζ(G) is the size of a minimum cycle-separating
//! cut when one exists; graphs in which any two cycles share an edge have
//! no such cut and report ζ = β(G), the cycle rank.
//!
//! Cuts are found by exhaustive search over edge subsets in increasing
//! size, bounded by min(girth, β). Candidate generation is restricted to
//! independent edge sets, which is sound for minimum cuts (a minimum
//! cycle-separating cut never contains a loop or two adjacent edges); the
//! unpruned oracle in [`crate::oracle`] cross-checks that claim.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeCut, EdgeId, VertexSet};

/// Outcome of the minimum-cut search.
#[derive(Clone, Debug)]
pub struct CutSearchResult {
    /// ζ of the host graph.
    pub zeta: usize,
    /// Lexicographically smallest minimum cycle-separating cut, absent
    /// when no cycle-separating cut exists.
    pub witness: Option<EdgeCut>,
    /// The two components of the cut graph, ordered by smallest vertex.
    pub fragments: Option<(VertexSet, VertexSet)>,
}

/// Trichotomy for connected induced subgraphs with a
/// six-edge boundary inside a cyclically 5-connected cubic host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SixPoleClass {
    Acyclic,
    /// Exactly one bridge; its `apex` end carries two boundary edges and
    /// the rest of the subgraph (`fragment`, host labels) is 2-connected.
    BridgedApex {
        apex: usize,
        fragment: VertexSet,
    },
    /// 2-connected; every vertex carries at most one boundary edge.
    TwoConnected,
}

/// True iff at least two components of `g - cut` contain a cycle.
pub fn is_cycle_separating(g: &CubicGraph, cut: &EdgeCut) -> bool {
    let n = g.n();
    let mut removed = vec![false; g.edge_count()];
    for &id in cut.ids() {
        removed[id.0] = true;
    }
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(w, id) in g.neighbors(u) {
                if !removed[id.0] && comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    if count < 2 {
        return false;
    }
    // A connected component is cyclic iff it has at least as many
    // surviving edges as vertices (loops and parallel edges included).
    let mut sizes = vec![0usize; count];
    let mut edge_counts = vec![0usize; count];
    for v in 0..n {
        sizes[comp[v]] += 1;
    }
    for (idx, &(u, _)) in g.edges().iter().enumerate() {
        if !removed[idx] {
            edge_counts[comp[u]] += 1;
        }
    }
    (0..count).filter(|&c| edge_counts[c] >= sizes[c]).count() >= 2
}

fn independent(g: &CubicGraph, a: EdgeId, b: EdgeId) -> bool {
    let (u1, v1) = g.endpoints(a);
    let (u2, v2) = g.endpoints(b);
    u1 != u2 && u1 != v2 && v1 != u2 && v1 != v2
}

fn extend_candidate(g: &CubicGraph, k: usize, chosen: &mut Vec<EdgeId>) -> Option<Vec<EdgeId>> {
    if chosen.len() == k {
        let cut = EdgeCut::new(chosen.iter().copied(), g).expect("ids from host");
        return is_cycle_separating(g, &cut).then(|| chosen.clone());
    }
    let start = chosen.last().map_or(0, |id| id.0 + 1);
    for next in start..g.edge_count() {
        let id = EdgeId(next);
        let (u, v) = g.endpoints(id);
        if u == v || !chosen.iter().all(|&c| independent(g, c, id)) {
            continue;
        }
        chosen.push(id);
        if let Some(hit) = extend_candidate(g, k, chosen) {
            return Some(hit);
        }
        chosen.pop();
    }
    None
}

/// Lexicographically smallest independent cycle-separating cut of exactly
/// `k` edges, if any. The per-first-edge branches search in ascending id
/// order, so the minimum over branches is the global lexicographic minimum
/// regardless of how the work is scheduled.
fn lexmin_cut_of_size(g: &CubicGraph, k: usize) -> Option<Vec<EdgeId>> {
    (0..g.edge_count())
        .into_par_iter()
        .filter_map(|first| {
            let id = EdgeId(first);
            let (u, v) = g.endpoints(id);
            if u == v {
                return None;
            }
            let mut chosen = vec![id];
            extend_candidate(g, k, &mut chosen)
        })
        .min()
}

/// Minimum cycle-separating cut search for a connected cubic graph.
///
/// Sizes 1..=min(girth, β) are scanned in increasing order; ζ is bounded
/// above by both quantities, so an empty scan means no cycle-separating
/// cut exists and ζ = β. Ties among minimum cuts are broken by the
/// lexicographically smallest edge list.
pub fn min_cycle_separating_cut(g: &CubicGraph) -> Result<CutSearchResult> {
    g.require_cubic()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let beta = g.cycle_rank()?;
    let girth = g
        .girth()
        .expect("connected cubic graphs always contain a cycle");
    for k in 1..=girth.min(beta) {
        if let Some(ids) = lexmin_cut_of_size(g, k) {
            let cut = EdgeCut::new(ids, g)?;
            let frags = split_fragments(g, &cut)?;
            return Ok(CutSearchResult {
                zeta: k,
                witness: Some(cut),
                fragments: Some(frags),
            });
        }
    }
    Ok(CutSearchResult {
        zeta: beta,
        witness: None,
        fragments: None,
    })
}

/// ζ(g); see [`min_cycle_separating_cut`].
pub fn zeta(g: &CubicGraph) -> Result<usize> {
    Ok(min_cycle_separating_cut(g)?.zeta)
}

/// True when no cycle-separating cut of fewer than five edges exists.
/// Note this is weaker than ζ ≥ 5: a graph without any cycle-separating
/// cut qualifies no matter its cycle rank.
pub fn cyclically_five_connected(g: &CubicGraph) -> Result<bool> {
    let res = min_cycle_separating_cut(g)?;
    Ok(res.witness.is_none() || res.zeta >= 5)
}

fn split_fragments(g: &CubicGraph, cut: &EdgeCut) -> Result<(VertexSet, VertexSet)> {
    let mut removed = vec![false; g.edge_count()];
    for &id in cut.ids() {
        removed[id.0] = true;
    }
    let keep: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(idx, _)| !removed[*idx])
        .map(|(_, &e)| e)
        .collect();
    let reduced = CubicGraph::from_edges(g.n(), &keep)?;
    let comps = reduced.components();
    if comps.len() != 2 {
        return Err(Error::InternalContradiction(format!(
            "minimum cycle-separating cut left {} components, expected 2",
            comps.len()
        )));
    }
    let mut it = comps.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

/// The two cyclic parts cut off by a minimum cycle-separating cut `s`.
pub fn fragments(g: &CubicGraph, s: &EdgeCut) -> Result<(VertexSet, VertexSet)> {
    if !is_cycle_separating(g, s) {
        return Err(Error::NotMinimumCut(
            "the edge set is not cycle-separating".into(),
        ));
    }
    let res = min_cycle_separating_cut(g)?;
    if res.witness.is_none() || s.len() != res.zeta {
        return Err(Error::NotMinimumCut(format!(
            "cut has {} edges but the minimum is {}",
            s.len(),
            res.zeta
        )));
    }
    split_fragments(g, s)
}

/// Classifies a connected induced subgraph with |δ(xs)| = 6 inside a
/// cyclically 5-connected cubic host: acyclic, bridged with an apex, or
/// 2-connected. Exactly one of the three always applies.
pub fn classify_six_pole(g: &CubicGraph, xs: &VertexSet) -> Result<SixPoleClass> {
    let pre = |msg: &str| Error::PreconditionViolated(msg.into());
    if !g.is_cubic() {
        return Err(pre("host graph is not cubic"));
    }
    if !g.is_connected() {
        return Err(pre("host graph is disconnected"));
    }
    if !cyclically_five_connected(g)? {
        return Err(pre("host graph is not cyclically 5-connected"));
    }
    let boundary = g
        .boundary(xs)
        .map_err(|_| pre("vertex set is empty or full"))?;
    if boundary.len() != 6 {
        return Err(pre("boundary must have exactly six edges"));
    }
    let ind = g.induced(xs)?;
    if !ind.graph.is_connected() {
        return Err(pre("induced subgraph is disconnected"));
    }
    if ind.graph.is_acyclic() {
        return Ok(SixPoleClass::Acyclic);
    }
    let (bridges, _) = ind.graph.bridges_and_blocks()?;
    if bridges.is_empty() {
        if !ind.graph.is_two_connected() {
            return Err(Error::InternalContradiction(
                "cyclic bridgeless six-pole failed the 2-connectivity check".into(),
            ));
        }
        return Ok(SixPoleClass::TwoConnected);
    }
    if bridges.len() != 1 {
        return Err(Error::InternalContradiction(format!(
            "six-pole has {} bridges, the trichotomy allows one",
            bridges.len()
        )));
    }
    let (p, q) = ind.graph.endpoints(bridges[0]);
    // Boundary edges at a vertex of a cubic host: 3 - induced degree.
    let apex_new = match (3 - ind.graph.degree(p), 3 - ind.graph.degree(q)) {
        (2, _) => p,
        (_, 2) => q,
        _ => {
            return Err(Error::InternalContradiction(
                "no bridge end carries two boundary edges".into(),
            ))
        }
    };
    let rest: Vec<usize> = (0..ind.graph.n()).filter(|&v| v != apex_new).collect();
    let rest_ind = ind.graph.induced(&VertexSet::new(rest, ind.graph.n())?)?;
    if !rest_ind.graph.is_two_connected() {
        return Err(Error::InternalContradiction(
            "six-pole remainder after removing the apex is not 2-connected".into(),
        ));
    }
    let fragment =
        VertexSet::from_sorted(xs.iter().filter(|&v| v != ind.to_old(apex_new)).collect());
    Ok(SixPoleClass::BridgedApex {
        apex: ind.to_old(apex_new),
        fragment,
    })
}

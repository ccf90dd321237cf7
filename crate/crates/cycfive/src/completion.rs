//! Cyclic parts of ζ = 5 cubic graphs and their completion back to
//! cyclically 5-connected cubic graphs.
//!
//! A cyclic part is one side of a minimum cycle-separating 5-cut: a
//! 2-connected graph of girth at least five with exactly five vertices of
//! degree 2 (the boundary set `A`) and all other degrees 3. The extension
//! `H(a1,...,a5)` restores cubicity by adding a path x-y-z and the edges
//! xa1, xa2, ya3, za4, za5. For every part other than the 5-cycle some
//! ordering of `A` makes the extension cyclically 5-connected; when the
//! first girth-safe ordering leaves a 4-cut, the structure of that cut
//! dictates a second ordering that works.

use crate::cyccut::{self, CutSearchResult};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeCut, VertexSet};

/// An ordering of the five boundary vertices; slot 3 attaches to y,
/// slots 1-2 to x and slots 4-5 to z.
pub type Perm = [usize; 5];

/// Where a part came from, so results can be reported in host labels.
#[derive(Clone, Debug)]
pub struct PartOrigin {
    pub host: CubicGraph,
    /// `vertex_map[part_vertex] = host_vertex`.
    pub vertex_map: Vec<usize>,
    /// The 5-cut that separated the part from its host.
    pub cut: EdgeCut,
}

/// A cyclic part: validated at construction, immutable afterwards.
#[derive(Clone, Debug)]
pub struct CyclicPart {
    graph: CubicGraph,
    boundary: [usize; 5],
    origin: Option<PartOrigin>,
}

impl CyclicPart {
    /// Validates a free-standing graph as a cyclic part.
    pub fn from_graph(graph: CubicGraph) -> Result<Self> {
        let boundary = validate_part(&graph).map_err(Error::InvariantViolation)?;
        Ok(CyclicPart {
            graph,
            boundary,
            origin: None,
        })
    }

    pub fn graph(&self) -> &CubicGraph {
        &self.graph
    }

    /// The five degree-2 vertices, ascending.
    pub fn boundary(&self) -> &[usize; 5] {
        &self.boundary
    }

    pub fn origin(&self) -> Option<&PartOrigin> {
        self.origin.as_ref()
    }

    pub fn is_five_cycle(&self) -> bool {
        self.graph.n() == 5
    }

    fn in_boundary(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }

    /// True when `v` has no neighbour inside the boundary set.
    fn boundary_isolated(&self, v: usize) -> bool {
        self.graph
            .neighbors(v)
            .iter()
            .all(|&(w, _)| !self.in_boundary(w))
    }
}

/// Checks every cyclic-part invariant, returning the boundary vertices or
/// the name of the violated clause.
fn validate_part(g: &CubicGraph) -> std::result::Result<[usize; 5], String> {
    if !g.is_connected() {
        return Err("part must be connected".into());
    }
    let mut deg2 = Vec::new();
    for v in 0..g.n() {
        match g.degree(v) {
            2 => deg2.push(v),
            3 => {}
            d => {
                return Err(format!(
                    "vertex {v} has degree {d}, parts allow only 2 and 3"
                ))
            }
        }
    }
    if deg2.len() != 5 {
        return Err(format!(
            "part must have exactly five degree-2 vertices, found {}",
            deg2.len()
        ));
    }
    if !g.is_two_connected() {
        return Err("part must be 2-connected".into());
    }
    if let Some(girth) = g.girth() {
        if girth < 5 {
            return Err(format!("part girth must be at least 5, found {girth}"));
        }
    }
    // Except for the 5-cycle, no boundary vertex may have two boundary
    // neighbours; otherwise the part could not come from a ζ = 5 host.
    if g.n() != 5 {
        for &a in &deg2 {
            let count = g
                .neighbors(a)
                .iter()
                .filter(|&&(w, _)| deg2.contains(&w))
                .count();
            if count > 1 {
                return Err(format!(
                    "boundary vertex {a} has {count} boundary neighbours"
                ));
            }
        }
    }
    let mut boundary = [0usize; 5];
    boundary.copy_from_slice(&deg2);
    Ok(boundary)
}

/// Cuts `g` along a minimum cycle-separating 5-cut and packages `side`
/// as a cyclic part.
pub fn make_part(g: &CubicGraph, s: &EdgeCut, side: &VertexSet) -> Result<CyclicPart> {
    let viol = |msg: String| Error::InvariantViolation(msg);
    let res = cyccut::min_cycle_separating_cut(g)?;
    if res.zeta != 5 || res.witness.is_none() {
        return Err(viol(format!(
            "host must have cyclic connectivity 5 with a witness cut, found ζ = {}",
            res.zeta
        )));
    }
    if s.len() != 5 || !cyccut::is_cycle_separating(g, s) {
        return Err(viol(
            "the cut is not a minimum cycle-separating 5-cut of the host".into(),
        ));
    }
    let (f1, f2) = cyccut::fragments(g, s)?;
    if side != &f1 && side != &f2 {
        return Err(viol("the side is not a fragment of the given cut".into()));
    }
    let ind = g.induced(side)?;
    let boundary = validate_part(&ind.graph).map_err(viol)?;
    // Boundary vertices are exactly the cut-edge endpoints inside the side.
    let mut from_cut: Vec<usize> = s
        .endpoint_pairs(g)
        .iter()
        .map(|&(u, v)| if side.contains(u) { u } else { v })
        .collect();
    from_cut.sort_unstable();
    from_cut.dedup();
    let mapped: Vec<usize> = from_cut
        .iter()
        .map(|&v| ind.to_new(v).expect("cut endpoint inside side"))
        .collect();
    if mapped != boundary {
        return Err(Error::InternalContradiction(
            "cut endpoints disagree with the degree-2 vertices of the part".into(),
        ));
    }
    Ok(CyclicPart {
        graph: ind.graph,
        boundary,
        origin: Some(PartOrigin {
            host: g.clone(),
            vertex_map: ind.vertices,
            cut: s.clone(),
        }),
    })
}

/// Deletes a path x-y-z from a ζ = 5 cubic graph and returns the remainder
/// as a cyclic part (the inverse of [`extend`], used for roundtrips).
pub fn remove_path2(g: &CubicGraph, x: usize, y: usize, z: usize) -> Result<CyclicPart> {
    let bad = |msg: String| Error::NotAValidPart(msg);
    let res = cyccut::min_cycle_separating_cut(g)?;
    if res.zeta != 5 || res.witness.is_none() {
        return Err(bad(format!(
            "host must have cyclic connectivity 5 with a witness cut, found ζ = {}",
            res.zeta
        )));
    }
    if x >= g.n() || y >= g.n() || z >= g.n() || x == y || y == z || x == z {
        return Err(bad("x, y, z must be three distinct vertices".into()));
    }
    if !g.has_edge(x, y) || !g.has_edge(y, z) {
        return Err(bad("xy and yz must be edges".into()));
    }
    if g.has_edge(x, z) {
        return Err(bad("x and z must not be adjacent".into()));
    }
    let rest = VertexSet::from_sorted((0..g.n()).filter(|&v| v != x && v != y && v != z).collect());
    let ind = g.induced(&rest)?;
    let boundary = validate_part(&ind.graph).map_err(bad)?;
    // The boundary must be the former neighbours of the deleted path.
    let mut old_boundary: Vec<usize> = Vec::new();
    for (v, skip) in [(x, vec![y]), (y, vec![x, z]), (z, vec![y])] {
        for &(w, _) in g.neighbors(v) {
            if !skip.contains(&w) {
                old_boundary.push(w);
            }
        }
    }
    old_boundary.sort_unstable();
    old_boundary.dedup();
    let mapped: Vec<usize> = old_boundary.iter().filter_map(|&v| ind.to_new(v)).collect();
    if mapped != boundary {
        return Err(bad(
            "former neighbours of the path disagree with the degree-2 vertices".into(),
        ));
    }
    let cut = g.boundary(&rest)?;
    Ok(CyclicPart {
        graph: ind.graph,
        boundary,
        origin: Some(PartOrigin {
            host: g.clone(),
            vertex_map: ind.vertices,
            cut,
        }),
    })
}

/// A cyclic part together with the added path and the ordering used.
#[derive(Clone, Debug)]
pub struct Extension {
    pub graph: CubicGraph,
    pub part: CyclicPart,
    pub perm: Perm,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Extension {
    /// The seven added edges in provenance order:
    /// xy, yz, xa1, xa2, ya3, za4, za5.
    pub fn added_edges(&self) -> [(usize, usize); 7] {
        let [a1, a2, a3, a4, a5] = self.perm;
        [
            (self.x, self.y),
            (self.y, self.z),
            (self.x, a1),
            (self.x, a2),
            (self.y, a3),
            (self.z, a4),
            (self.z, a5),
        ]
    }
}

/// Builds `H(a1,...,a5)`: the part plus vertices x, y, z (the three
/// largest labels) and edges xy, yz, xa1, xa2, ya3, za4, za5.
pub fn extend(h: &CyclicPart, perm: &Perm) -> Result<Extension> {
    let mut sorted = *perm;
    sorted.sort_unstable();
    if sorted != h.boundary {
        return Err(Error::NotAPermutation);
    }
    let n = h.graph.n();
    let (x, y, z) = (n, n + 1, n + 2);
    let [a1, a2, a3, a4, a5] = *perm;
    let mut edges: Vec<(usize, usize)> = h.graph.edges().to_vec();
    edges.extend([(x, y), (y, z), (x, a1), (x, a2), (y, a3), (z, a4), (z, a5)]);
    let graph = CubicGraph::from_edges(n + 3, &edges)?;
    debug_assert!(graph.is_cubic());
    Ok(Extension {
        graph,
        part: h.clone(),
        perm: *perm,
        x,
        y,
        z,
    })
}

/// The auxiliary graph `D` on the boundary vertices: edges join pairs at
/// distance exactly 2 in the part; pairs at distance 1 are kept separately.
#[derive(Clone, Debug)]
pub struct DistanceGraph {
    pub vertices: [usize; 5],
    /// Pairs `(min, max)` at distance exactly 2, sorted.
    pub dist2: Vec<(usize, usize)>,
    /// Pairs `(min, max)` adjacent in the part, sorted.
    pub adjacent_in_h: Vec<(usize, usize)>,
}

impl DistanceGraph {
    pub fn has_dist2(&self, a: usize, b: usize) -> bool {
        self.dist2.contains(&(a.min(b), a.max(b)))
    }

    pub fn has_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacent_in_h.contains(&(a.min(b), a.max(b)))
    }

    /// Degree of `a` in D.
    pub fn deg_dist2(&self, a: usize) -> usize {
        self.dist2
            .iter()
            .filter(|&&(p, q)| p == a || q == a)
            .count()
    }
}

pub fn distance_graph(h: &CyclicPart) -> DistanceGraph {
    let mut dist2 = Vec::new();
    let mut adjacent = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            let (a, b) = (h.boundary[i], h.boundary[j]);
            match h.graph.distance(a, b) {
                Some(1) => adjacent.push((a, b)),
                Some(2) => dist2.push((a, b)),
                _ => {}
            }
        }
    }
    dist2.sort_unstable();
    adjacent.sort_unstable();
    DistanceGraph {
        vertices: h.boundary,
        dist2,
        adjacent_in_h: adjacent,
    }
}

/// True iff the extension by `perm` has girth at least five: the y-vertex
/// a3 has no boundary neighbour and both the x-pair and the z-pair are at
/// distance at least 3 in the part.
pub fn girth_condition(h: &CyclicPart, perm: &Perm) -> bool {
    let [a1, a2, a3, a4, a5] = *perm;
    let far = |a: usize, b: usize| h.graph.distance(a, b).is_none_or(|d| d >= 3);
    h.boundary_isolated(a3) && far(a1, a2) && far(a4, a5)
}

/// Constructive choice of a girth-safe ordering, by case analysis on the
/// number of part edges between boundary vertices (0, 1 or 2 — more is
/// impossible for a valid part). Within a case, ties are broken by the
/// lexicographically smallest resulting ordering.
pub fn choose_permutation(h: &CyclicPart) -> Result<Perm> {
    if h.is_five_cycle() {
        return Err(Error::IsFiveCycle);
    }
    let d = distance_graph(h);
    let a = h.boundary;
    let mut candidates: Vec<Perm> = Vec::new();
    match d.adjacent_in_h.len() {
        2 => {
            // Two boundary edges: they are disjoint, the fifth vertex is
            // isolated and takes the middle slot; each edge spans an
            // x-slot and a z-slot.
            let e1 = d.adjacent_in_h[0];
            let e2 = d.adjacent_in_h[1];
            let mid = a
                .iter()
                .copied()
                .find(|&v| ![e1.0, e1.1, e2.0, e2.1].contains(&v))
                .ok_or_else(|| {
                    Error::InternalContradiction("two boundary edges are not disjoint".into())
                })?;
            for (outer, inner) in [(e1, e2), (e2, e1)] {
                for (s1, s5) in [(outer.0, outer.1), (outer.1, outer.0)] {
                    for (s2, s4) in [(inner.0, inner.1), (inner.1, inner.0)] {
                        candidates.push([s1, s2, mid, s4, s5]);
                    }
                }
            }
        }
        1 => {
            // One boundary edge a1a5, oriented so deg_D(a5) <= deg_D(a1);
            // a2 avoids D-adjacency with a1 and a4 with a5.
            let (p, q) = d.adjacent_in_h[0];
            let mut ends = Vec::new();
            if d.deg_dist2(q) <= d.deg_dist2(p) {
                ends.push((p, q));
            }
            if d.deg_dist2(p) <= d.deg_dist2(q) {
                ends.push((q, p));
            }
            for (a1, a5) in ends {
                let others: Vec<usize> =
                    a.iter().copied().filter(|&v| v != a1 && v != a5).collect();
                for &a2 in others.iter().filter(|&&v| !d.has_dist2(a1, v)) {
                    for &a4 in others.iter().filter(|&&v| v != a2 && !d.has_dist2(a5, v)) {
                        let a3 = others
                            .iter()
                            .copied()
                            .find(|&v| v != a2 && v != a4)
                            .unwrap();
                        candidates.push([a1, a2, a3, a4, a5]);
                    }
                }
            }
        }
        0 => {
            // No boundary edges: pick four distinct vertices with both the
            // x-pair and the z-pair outside D; the fifth takes the middle.
            for &b1 in &a {
                for &b2 in a.iter().filter(|&&v| v != b1 && !d.has_dist2(b1, v)) {
                    for &b4 in a.iter().filter(|&&v| v != b1 && v != b2) {
                        for &b5 in a
                            .iter()
                            .filter(|&&v| ![b1, b2, b4].contains(&v) && !d.has_dist2(b4, v))
                        {
                            let b3 = a
                                .iter()
                                .copied()
                                .find(|&v| ![b1, b2, b4, b5].contains(&v))
                                .unwrap();
                            candidates.push([b1, b2, b3, b4, b5]);
                        }
                    }
                }
            }
        }
        k => {
            return Err(Error::InternalContradiction(format!(
                "part has {k} boundary edges, a valid part allows at most 2"
            )));
        }
    }
    candidates.retain(|perm| girth_condition(h, perm));
    candidates.sort_unstable();
    candidates.into_iter().next().ok_or_else(|| {
        Error::InternalContradiction(
            "the constructive case analysis produced no girth-safe ordering".into(),
        )
    })
}

/// Structure of the non-path side C2 of a 4-cut decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C2Structure {
    TwoConnected,
    /// C2 has one bridge; its `apex` end is a boundary vertex that is also
    /// a cut-edge endpoint (slot `slot` of the normalized ordering, one of
    /// 3, 4, 5), and `fragment` = C2 - apex is 2-connected.
    Bridged {
        apex: usize,
        fragment: VertexSet,
        slot: usize,
    },
}

/// A minimum 4-cut inside an extension of girth >= 5, normalized so that
/// slots 1-2 of `normalized_perm` sit on the C1 side with the path end x
/// and slots 3-5 on the C2 side with z (when `mirrored` the ordering was
/// reversed, swapping the roles of the extension's x and z).
#[derive(Clone, Debug)]
pub struct CutDecomposition {
    pub cut: EdgeCut,
    pub normalized_perm: Perm,
    pub mirrored: bool,
    /// Part vertices on the path-pair side; contains slots 1 and 2.
    pub c1: VertexSet,
    /// Part vertices on the other side; contains slots 3, 4 and 5.
    pub c2: VertexSet,
    /// The three cut edges inside the part, as `(b, c)` with `b` in C1 and
    /// `c` in C2. In the bridged case the apex edge comes first.
    pub cut_edges_in_part: [(usize, usize); 3],
    pub c2_structure: C2Structure,
}

/// Finds and verifies the 4-cut distribution of an extension with girth at
/// least five. Returns `None` when the extension is already cyclically
/// 5-connected. Any minimum cut that does not match the predicted shape
/// raises `DistributionViolated`.
pub fn find_distribution(e: &Extension) -> Result<Option<CutDecomposition>> {
    if e.graph.girth().is_none_or(|g| g < 5) {
        return Err(Error::PreconditionViolated(
            "extension girth must be at least 5".into(),
        ));
    }
    let res: CutSearchResult = cyccut::min_cycle_separating_cut(&e.graph)?;
    if res.witness.is_none() || res.zeta >= 5 {
        return Ok(None);
    }
    let viol = |msg: String| Error::DistributionViolated(msg);
    let cut = res.witness.unwrap();
    if cut.len() != 4 {
        return Err(viol(format!(
            "minimum cycle-separating cut has {} edges, expected 4",
            cut.len()
        )));
    }
    let (f1, f2) = res.fragments.unwrap();
    let (x, y, z) = (e.x, e.y, e.z);
    let [a1, a2, a3, a4, a5] = e.perm;
    if f1.contains(x) == f1.contains(z) {
        return Err(viol("x and z are on the same side of the cut".into()));
    }
    let (x_side, z_side) = if f1.contains(x) { (f1, f2) } else { (f2, f1) };
    if !(x_side.contains(a1) && x_side.contains(a2)) {
        return Err(viol("a1 and a2 are not on the x side".into()));
    }
    if !(z_side.contains(a4) && z_side.contains(a5)) {
        return Err(viol("a4 and a5 are not on the z side".into()));
    }
    if x_side.contains(y) != x_side.contains(a3) {
        return Err(viol("y and a3 are on different sides".into()));
    }
    let pairs = cut.endpoint_pairs(&e.graph);
    let xy_in = pairs.contains(&(x, y));
    let yz_in = pairs.contains(&(y, z));
    if xy_in == yz_in {
        return Err(viol("exactly one of xy, yz must lie in the cut".into()));
    }
    let part_pairs: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&p| p != (x, y) && p != (y, z))
        .collect();
    if part_pairs
        .iter()
        .any(|&(u, v)| u >= e.part.graph.n() || v >= e.part.graph.n())
    {
        return Err(viol(
            "a cut edge other than xy/yz touches an added vertex".into(),
        ));
    }
    let mirrored = x_side.contains(y);
    let q: Perm = if mirrored {
        [a5, a4, a3, a2, a1]
    } else {
        [a1, a2, a3, a4, a5]
    };
    let strip = |side: &VertexSet| -> VertexSet {
        VertexSet::from_sorted(side.iter().filter(|&v| v < e.part.graph.n()).collect())
    };
    let (c1, c2) = if mirrored {
        (strip(&z_side), strip(&x_side))
    } else {
        (strip(&x_side), strip(&z_side))
    };
    if !(c1.contains(q[0]) && c1.contains(q[1])) {
        return Err(viol("slots 1 and 2 are not inside C1".into()));
    }
    if !(c2.contains(q[2]) && c2.contains(q[3]) && c2.contains(q[4])) {
        return Err(viol("slots 3, 4 and 5 are not inside C2".into()));
    }
    if c1.len() < 4 {
        return Err(viol(format!(
            "C1 has {} vertices, expected at least 4",
            c1.len()
        )));
    }
    if c2.len() < 5 {
        return Err(viol(format!(
            "C2 has {} vertices, expected at least 5",
            c2.len()
        )));
    }
    let part_graph = &e.part.graph;
    let c1_ind = part_graph.induced(&c1)?;
    if !c1_ind.graph.is_two_connected() {
        return Err(viol("C1 is not 2-connected".into()));
    }
    let mut oriented: Vec<(usize, usize)> = Vec::with_capacity(3);
    for &(u, v) in &part_pairs {
        if c1.contains(u) && c2.contains(v) {
            oriented.push((u, v));
        } else if c2.contains(u) && c1.contains(v) {
            oriented.push((v, u));
        } else {
            return Err(viol(format!("cut edge ({u}, {v}) does not join C1 to C2")));
        }
    }
    let mut cut_edges: [(usize, usize); 3] = [oriented[0], oriented[1], oriented[2]];
    let c2_ind = part_graph.induced(&c2)?;
    if !c2_ind.graph.is_connected() {
        return Err(viol("C2 is disconnected".into()));
    }
    let c2_structure = if c2_ind.graph.is_two_connected() {
        C2Structure::TwoConnected
    } else {
        let (bridges, _) = c2_ind.graph.bridges_and_blocks()?;
        if bridges.len() != 1 {
            return Err(viol(format!(
                "C2 is not 2-connected and has {} bridges, expected exactly 1",
                bridges.len()
            )));
        }
        let (p, qq) = c2_ind.graph.endpoints(bridges[0]);
        let apex_new = if c2_ind.graph.degree(p) == 1 {
            p
        } else if c2_ind.graph.degree(qq) == 1 {
            qq
        } else {
            return Err(viol("no bridge end of C2 has degree 1".into()));
        };
        let apex = c2_ind.to_old(apex_new);
        let slot = match q.iter().position(|&v| v == apex) {
            Some(pos) if pos >= 2 => pos + 1,
            _ => {
                return Err(viol(format!(
                    "the apex {apex} is not one of the slots 3, 4, 5"
                )))
            }
        };
        let apex_edge = cut_edges
            .iter()
            .position(|&(_, c)| c == apex)
            .ok_or_else(|| viol(format!("the apex {apex} is not a cut-edge endpoint")))?;
        cut_edges.swap(0, apex_edge);
        let fragment = VertexSet::from_sorted(c2.iter().filter(|&v| v != apex).collect());
        let frag_ind = part_graph.induced(&fragment)?;
        if !frag_ind.graph.is_two_connected() {
            return Err(viol("C2 minus the apex is not 2-connected".into()));
        }
        C2Structure::Bridged {
            apex,
            fragment,
            slot,
        }
    };
    Ok(Some(CutDecomposition {
        cut,
        normalized_perm: q,
        mirrored,
        c1,
        c2,
        cut_edges_in_part: cut_edges,
        c2_structure,
    }))
}

/// Which of the two repair rules produced the final ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepairBranch {
    /// C2 was 2-connected.
    TwoConnectedSide,
    /// C2 had a bridge with a boundary apex.
    BridgedSide,
}

#[derive(Clone, Debug)]
pub struct RepairInfo {
    pub branch: RepairBranch,
    pub decomposition: CutDecomposition,
}

/// A finished completion: the verified extension plus repair provenance.
#[derive(Clone, Debug)]
pub struct Completion {
    pub extension: Extension,
    /// The ordering tried first (the final one when no repair was needed).
    pub initial_perm: Perm,
    pub repair: Option<RepairInfo>,
}

/// Completes a cyclic part to a cyclically 5-connected cubic graph.
pub fn complete(h: &CyclicPart) -> Result<Completion> {
    let perm = choose_permutation(h)?;
    complete_from_perm(h, &perm)
}

/// Runs the completion starting from a given girth-safe ordering: if the
/// extension has a 4-cut, the decomposition picks the repaired ordering,
/// whose extension is then re-verified in full before being returned.
pub fn complete_from_perm(h: &CyclicPart, perm: &Perm) -> Result<Completion> {
    if h.is_five_cycle() {
        return Err(Error::IsFiveCycle);
    }
    let e = extend(h, perm)?;
    if e.graph.girth().is_none_or(|g| g < 5) {
        return Err(Error::PreconditionViolated(
            "the initial ordering does not give girth 5".into(),
        ));
    }
    let Some(d) = find_distribution(&e)? else {
        return Ok(Completion {
            extension: e,
            initial_perm: *perm,
            repair: None,
        });
    };
    let q = d.normalized_perm;
    let (branch, repaired): (RepairBranch, Perm) = match &d.c2_structure {
        C2Structure::TwoConnected => {
            // Slots 3-5 whose vertex has no boundary neighbour may take
            // the middle; smallest such vertex wins, then the remaining
            // two slots are ordered for the smallest resulting perm.
            let j = (2..5)
                .filter(|&t| h.boundary_isolated(q[t]))
                .min_by_key(|&t| q[t])
                .ok_or_else(|| {
                    Error::InternalContradiction(
                        "no boundary vertex in C2 is isolated from the others".into(),
                    )
                })?;
            let rest: Vec<usize> = (2..5).filter(|&t| t != j).collect();
            let (i, k) = (rest[0], rest[1]);
            let cand1: Perm = [q[0], q[i], q[j], q[1], q[k]];
            let cand2: Perm = [q[0], q[k], q[j], q[1], q[i]];
            (RepairBranch::TwoConnectedSide, cand1.min(cand2))
        }
        C2Structure::Bridged { slot, .. } => {
            let i = slot - 1;
            let rest: Vec<usize> = (2..5).filter(|&t| t != i).collect();
            let (j, k) = (rest[0], rest[1]);
            let cand1: Perm = [q[0], q[j], q[i], q[k], q[1]];
            let cand2: Perm = [q[0], q[k], q[i], q[j], q[1]];
            (RepairBranch::BridgedSide, cand1.min(cand2))
        }
    };
    let e2 = extend(h, &repaired)?;
    match e2.graph.girth() {
        Some(g) if g >= 5 => {}
        g => {
            return Err(Error::RepairFailed(format!(
                "repaired extension has girth {g:?}, expected at least 5"
            )))
        }
    }
    let res = cyccut::min_cycle_separating_cut(&e2.graph)?;
    if res.zeta < 5 {
        return Err(Error::RepairFailed(format!(
            "repaired extension has cyclic connectivity {}, expected at least 5",
            res.zeta
        )));
    }
    Ok(Completion {
        extension: e2,
        initial_perm: *perm,
        repair: Some(RepairInfo {
            branch,
            decomposition: d,
        }),
    })
}

/// All single-vertex completions with cyclic connectivity at least 5:
/// join one boundary pair by an edge and the remaining three boundary
/// vertices to one new vertex. At most ten candidates exist; the returned
/// list is ordered by the joined pair.
pub fn single_vertex_completions(h: &CyclicPart) -> Result<Vec<CubicGraph>> {
    let a = h.boundary;
    let n = h.graph.n();
    let mut out = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            let mut edges: Vec<(usize, usize)> = h.graph.edges().to_vec();
            edges.push((a[i], a[j]));
            for (t, &v) in a.iter().enumerate() {
                if t != i && t != j {
                    edges.push((v, n));
                }
            }
            let cand = CubicGraph::from_edges(n + 1, &edges)?;
            debug_assert!(cand.is_cubic());
            let res = cyccut::min_cycle_separating_cut(&cand)?;
            if res.zeta >= 5 {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

/// Which reading of the 6-cycle obstruction to use: the strict variant
/// requires the three in-between vertices to avoid the boundary set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionVariant {
    Strict,
    Lax,
}

/// The published necessary condition against single-vertex completability:
/// three boundary vertices with a common neighbour, or three boundary
/// vertices on an alternating 6-cycle. Strict variant.
pub fn single_vertex_obstruction(h: &CyclicPart) -> bool {
    single_vertex_obstruction_with(h, ObstructionVariant::Strict)
}

pub fn single_vertex_obstruction_with(h: &CyclicPart, variant: ObstructionVariant) -> bool {
    let g = &h.graph;
    let a = h.boundary;
    // Three boundary vertices sharing a neighbour.
    for w in 0..g.n() {
        let count = g
            .neighbors(w)
            .iter()
            .filter(|&&(v, _)| h.in_boundary(v))
            .count();
        if count >= 3 {
            return true;
        }
    }
    // A 6-cycle p v1 q v2 r v3 through three boundary vertices.
    let common = |p: usize, q: usize| -> Vec<usize> {
        g.neighbors(p)
            .iter()
            .filter(|&&(w, _)| g.has_edge(w, q))
            .map(|&(w, _)| w)
            .collect()
    };
    let allowed = |v: usize| match variant {
        ObstructionVariant::Strict => !h.in_boundary(v),
        ObstructionVariant::Lax => true,
    };
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                if i >= j || j == k || i == k {
                    continue;
                }
                let (p, q, r) = (a[i], a[j], a[k]);
                let hit = common(p, q).iter().any(|&v1| {
                    v1 != r
                        && allowed(v1)
                        && common(q, r).iter().any(|&v2| {
                            v2 != p
                                && v2 != v1
                                && allowed(v2)
                                && common(r, p)
                                    .iter()
                                    .any(|&v3| v3 != q && v3 != v1 && v3 != v2 && allowed(v3))
                        })
                });
                if hit {
                    return true;
                }
            }
        }
    }
    false
}

//! Immutable undirected multigraphs with maximum degree three.
//!
//! Vertices are dense integers `0..n`. Loops and parallel edges are
//! representable: a loop counts 2 towards the degree of its vertex, and
//! every parallel copy of an edge has its own [`EdgeId`], so edge cuts can
//! remove one copy while keeping the other.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Identity of a single edge inside its host graph.
///
/// Ids index the host's lexicographically sorted edge list, which makes
/// them stable for a given graph and gives parallel edges distinct slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// An undirected multigraph on vertices `0..n` with every degree at most 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicGraph {
    n: usize,
    /// Normalized `(u, v)` with `u <= v`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    /// `adj[v]` lists `(neighbour, edge id)`; a loop at `v` appears twice.
    adj: Vec<Vec<(usize, EdgeId)>>,
}

impl CubicGraph {
    /// Builds a graph from an edge list, normalizing and sorting the edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedInput(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for (idx, &(u, v)) in norm.iter().enumerate() {
            let id = EdgeId(idx);
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let g = CubicGraph {
            n,
            edges: norm,
            adj,
        };
        for v in 0..n {
            if g.degree(v) > 3 {
                return Err(Error::DegreeViolation(format!(
                    "vertex {v} has degree {}",
                    g.degree(v)
                )));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The sorted, normalized edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id.0]
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbour list of `v` with edge ids; loops appear twice.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    /// Number of edges joining `u` and `v` (loop count for `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == (a, b)).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Id of some edge joining `u` and `v`, if one exists.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == (a, b)).map(EdgeId)
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn require_cubic(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::NotCubic("graph has no vertices".into()));
        }
        for v in 0..self.n {
            if self.degree(v) != 3 {
                return Err(Error::NotCubic(format!(
                    "vertex {v} has degree {}",
                    self.degree(v)
                )));
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let label = count;
            count += 1;
            let mut queue = VecDeque::from([start]);
            comp[start] = label;
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = label;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut sets = vec![Vec::new(); count];
        for v in 0..self.n {
            sets[comp[v]].push(v);
        }
        sets.into_iter().map(VertexSet::from_sorted).collect()
    }

    /// The edge cut `δ(xs)`: all edges with exactly one end in `xs`.
    /// Parallel edges are counted individually; loops never appear.
    pub fn boundary(&self, xs: &VertexSet) -> Result<EdgeCut> {
        if xs.is_empty() || xs.len() >= self.n {
            return Err(Error::EmptyOrFullSet);
        }
        let mut ids = Vec::new();
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            if xs.contains(u) != xs.contains(v) {
                ids.push(EdgeId(idx));
            }
        }
        Ok(EdgeCut { ids })
    }

    /// Subgraph induced by `xs`, relabelled to `0..xs.len()`.
    pub fn induced(&self, xs: &VertexSet) -> Result<InducedSubgraph> {
        let mut new_of = vec![usize::MAX; self.n];
        for (new, old) in xs.iter().enumerate() {
            if old >= self.n {
                return Err(Error::MalformedInput(format!(
                    "vertex {old} outside host of order {}",
                    self.n
                )));
            }
            new_of[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if new_of[u] != usize::MAX && new_of[v] != usize::MAX {
                edges.push((new_of[u], new_of[v]));
            }
        }
        let graph = CubicGraph::from_edges(xs.len(), &edges)?;
        Ok(InducedSubgraph {
            graph,
            vertices: xs.as_slice().to_vec(),
        })
    }

    /// Girth: 1 for a loop, 2 for a parallel pair, `None` for forests.
    ///
    /// Computed by deleting each edge in turn and measuring the shortest
    /// remaining path between its endpoints.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for idx in 0..self.edges.len() {
            let (u, v) = self.edges[idx];
            let len = if u == v {
                Some(1)
            } else {
                self.distance_avoiding(u, v, EdgeId(idx)).map(|d| d + 1)
            };
            if let Some(len) = len {
                if best.is_none_or(|b| len < b) {
                    best = Some(len);
                }
                if best == Some(1) {
                    break;
                }
            }
        }
        best
    }

    /// Cycle rank `β = |E| - |V| + 1` of a connected graph.
    pub fn cycle_rank(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.edges.len() + 1 - self.n)
    }

    /// All bridges together with the 2-edge-connected blocks (the
    /// components left after deleting every bridge), blocks ordered by
    /// smallest vertex.
    pub fn bridges_and_blocks(&self) -> Result<(Vec<EdgeId>, Vec<VertexSet>)> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let bridges = self.bridges_inner();
        let is_bridge = {
            let mut mask = vec![false; self.edges.len()];
            for &b in &bridges {
                mask[b.0] = true;
            }
            mask
        };
        // Blocks: components of the graph minus its bridges.
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, id) in &self.adj[u] {
                    if !is_bridge[id.0] && comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        let mut sets = vec![Vec::new(); count];
        for v in 0..self.n {
            sets[comp[v]].push(v);
        }
        Ok((
            bridges,
            sets.into_iter().map(VertexSet::from_sorted).collect(),
        ))
    }

    fn bridges_inner(&self) -> Vec<EdgeId> {
        // Standard low-link DFS; the traversal skips the edge id it
        // arrived by, so one copy of a parallel pair still sees the other.
        struct State<'a> {
            g: &'a CubicGraph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            bridges: Vec<EdgeId>,
        }
        fn dfs(s: &mut State, u: usize, in_edge: Option<EdgeId>) {
            s.disc[u] = s.time;
            s.low[u] = s.time;
            s.time += 1;
            for idx in 0..s.g.adj[u].len() {
                let (w, id) = s.g.adj[u][idx];
                if Some(id) == in_edge {
                    continue;
                }
                if s.disc[w] == usize::MAX {
                    dfs(s, w, Some(id));
                    s.low[u] = s.low[u].min(s.low[w]);
                    if s.low[w] > s.disc[u] {
                        s.bridges.push(id);
                    }
                } else {
                    s.low[u] = s.low[u].min(s.disc[w]);
                }
            }
        }
        let mut state = State {
            g: self,
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            time: 0,
            bridges: Vec::new(),
        };
        for v in 0..self.n {
            if state.disc[v] == usize::MAX {
                dfs(&mut state, v, None);
            }
        }
        state.bridges.sort_unstable();
        state.bridges
    }

    /// 2-connected in the sense used throughout: connected, at least three
    /// vertices, and bridgeless (equivalent to having no cut vertex in a
    /// graph of maximum degree three).
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.bridges_inner().is_empty()
    }

    /// Shortest-path distance in edges, `None` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs_distance(u, v, None)
    }

    fn distance_avoiding(&self, u: usize, v: usize, skip: EdgeId) -> Option<usize> {
        self.bfs_distance(u, v, Some(skip))
    }

    fn bfs_distance(&self, u: usize, v: usize, skip: Option<EdgeId>) -> Option<usize> {
        if u == v && skip.is_none() {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(cur) = queue.pop_front() {
            for &(w, id) in &self.adj[cur] {
                if Some(id) == skip || dist[w] != usize::MAX {
                    continue;
                }
                dist[w] = dist[cur] + 1;
                if w == v {
                    return Some(dist[w]);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// True when the graph contains no cycle (no loop, no parallel pair,
    /// no longer cycle).
    pub fn is_acyclic(&self) -> bool {
        self.girth().is_none()
    }
}

/// A sorted set of vertices of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet {
    verts: Vec<usize>,
}

impl VertexSet {
    /// Builds a set, validating membership in `0..n` and deduplicating.
    pub fn new<I: IntoIterator<Item = usize>>(iter: I, n: usize) -> Result<Self> {
        let mut verts: Vec<usize> = iter.into_iter().collect();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&v) = verts.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedInput(format!(
                "vertex {v} outside host of order {n}"
            )));
        }
        Ok(VertexSet { verts })
    }

    /// Wraps an already sorted, duplicate-free list.
    pub fn from_sorted(verts: Vec<usize>) -> Self {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        VertexSet { verts }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, usize>> {
        self.verts.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.verts
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.verts.first().copied()
    }
}

/// A set of edge identities of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeCut {
    ids: Vec<EdgeId>,
}

impl EdgeCut {
    /// Builds a cut, validating that every id is an edge of `host`.
    pub fn new<I: IntoIterator<Item = EdgeId>>(iter: I, host: &CubicGraph) -> Result<Self> {
        let mut ids: Vec<EdgeId> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        if let Some(&id) = ids.iter().find(|id| id.0 >= host.edge_count()) {
            return Err(Error::MalformedInput(format!(
                "edge id {} outside host with {} edges",
                id.0,
                host.edge_count()
            )));
        }
        Ok(EdgeCut { ids })
    }

    pub fn ids(&self) -> &[EdgeId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    /// Endpoint pairs of the cut edges, in id order.
    pub fn endpoint_pairs(&self, host: &CubicGraph) -> Vec<(usize, usize)> {
        self.ids.iter().map(|&id| host.endpoints(id)).collect()
    }

    /// True when no two cut edges share an endpoint (loops are considered
    /// self-adjacent and therefore never independent).
    pub fn is_independent(&self, host: &CubicGraph) -> bool {
        let pairs = self.endpoint_pairs(host);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if a == b {
                return false;
            }
            for &(c, d) in &pairs[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of [`CubicGraph::induced`]: the relabelled subgraph plus the
/// new-to-old vertex map, so results can be reported in host labels.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: CubicGraph,
    /// `vertices[new] = old`.
    pub vertices: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.vertices.binary_search(&old).ok()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.vertices[new]
    }
}

/// Text formats understood by [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// McKay's ASCII encoding of simple graphs.
    Graph6,
    /// One line per vertex: `v: u1 u2 u3`. Repeated entries denote
    /// parallel edges, a self entry denotes a loop (listed once per loop).
    /// `#` starts a comment.
    Adjlist,
}

/// Parses a graph; with `strict_cubic` every degree must be exactly 3.
pub fn parse_graph(text: &str, format: GraphFormat, strict_cubic: bool) -> Result<CubicGraph> {
    let g = match format {
        GraphFormat::Graph6 => graph6_decode(text)?,
        GraphFormat::Adjlist => adjlist_decode(text)?,
    };
    if strict_cubic {
        for v in 0..g.n() {
            if g.degree(v) != 3 {
                return Err(Error::DegreeViolation(format!(
                    "vertex {v} has degree {} but cubicity was demanded",
                    g.degree(v)
                )));
            }
        }
    }
    Ok(g)
}

fn graph6_decode(text: &str) -> Result<CubicGraph> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedInput("empty graph6 string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedInput(format!(
                "graph6 byte {b} outside the printable range 63..=126"
            )));
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() > 1 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::MalformedInput("truncated graph6 order".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::MalformedInput("truncated graph6 order".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::MalformedInput(format!(
            "graph6 body has {} bytes, expected {nbytes} for order {n}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                current = bytes[pos] - 63;
                pos += 1;
            }
            if current & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    if !bit.is_multiple_of(6) && current & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(Error::MalformedInput(
            "graph6 padding bits are not zero".into(),
        ));
    }
    CubicGraph::from_edges(n, &edges)
}

fn adjlist_decode(text: &str) -> Result<CubicGraph> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line.split_once(':').ok_or_else(|| {
            Error::MalformedInput(format!("line {}: expected 'v: ...'", lineno + 1))
        })?;
        let v: usize = head.trim().parse().map_err(|_| {
            Error::MalformedInput(format!("line {}: bad vertex '{}'", lineno + 1, head.trim()))
        })?;
        let mut entries = Vec::new();
        for tok in tail.split_whitespace() {
            let w: usize = tok.parse().map_err(|_| {
                Error::MalformedInput(format!("line {}: bad neighbour '{tok}'", lineno + 1))
            })?;
            entries.push(w);
        }
        rows.push((v, entries));
    }
    if rows.is_empty() {
        return Err(Error::MalformedInput("empty adjacency list".into()));
    }
    let n = rows
        .iter()
        .flat_map(|(v, es)| std::iter::once(*v).chain(es.iter().copied()))
        .max()
        .unwrap()
        + 1;
    let mut seen = vec![false; n];
    let mut mult = vec![vec![0usize; n]; n];
    for (v, entries) in &rows {
        if seen[*v] {
            return Err(Error::MalformedInput(format!(
                "vertex {v} listed more than once"
            )));
        }
        seen[*v] = true;
        for &w in entries {
            mult[*v][w] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| !seen[v]) {
        return Err(Error::MalformedInput(format!(
            "vertex {v} is mentioned but has no adjacency line"
        )));
    }
    let mut edges = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for u in 0..n {
        for v in u..n {
            if u == v {
                // One self entry per loop.
                for _ in 0..mult[u][u] {
                    edges.push((u, u));
                }
            } else {
                if mult[u][v] != mult[v][u] {
                    return Err(Error::MalformedInput(format!(
                        "asymmetric adjacency between {u} and {v}: {} vs {}",
                        mult[u][v], mult[v][u]
                    )));
                }
                for _ in 0..mult[u][v] {
                    edges.push((u, v));
                }
            }
        }
    }
    CubicGraph::from_edges(n, &edges)
}

impl CubicGraph {
    /// Encodes a simple graph in graph6. Fails on loops or parallel edges.
    pub fn to_graph6(&self) -> Result<String> {
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                return Err(Error::NotSimple(format!("loop at vertex {u}")));
            }
            if idx + 1 < self.edges.len() && self.edges[idx + 1] == (u, v) {
                return Err(Error::NotSimple(format!(
                    "parallel edge between {u} and {v}"
                )));
            }
        }
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else if self.n <= 258047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((self.n >> shift) & 0x3f) as u8 + 63);
            }
        } else {
            out.extend([126, 126]);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(((self.n >> shift) & 0x3f) as u8 + 63);
            }
        }
        let mut current = 0u8;
        let mut bit = 0usize;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    current |= 1 << (5 - bit % 6);
                }
                bit += 1;
                if bit.is_multiple_of(6) {
                    out.push(current + 63);
                    current = 0;
                }
            }
        }
        if !bit.is_multiple_of(6) {
            out.push(current + 63);
        }
        Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
    }

    /// Emits the adjacency-list format accepted by [`parse_graph`].
    pub fn to_adjlist(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n {
            out.push_str(&v.to_string());
            out.push(':');
            let mut entries: Vec<usize> = Vec::new();
            for &(w, _) in &self.adj[v] {
                entries.push(w);
            }
            entries.sort_unstable();
            // adj lists a loop twice; the format wants one entry per loop.
            let loops = entries.iter().filter(|&&w| w == v).count() / 2;
            entries.retain(|&w| w != v);
            for _ in 0..loops {
                entries.push(v);
            }
            entries.sort_unstable();
            for w in entries {
                out.push(' ');
                out.push_str(&w.to_string());
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn parse_k4_graph6() {
        let g = parse_graph("C~", GraphFormat::Graph6, true).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_cubic());
        assert_eq!(g, named::k4());
    }

    #[test]
    fn parse_triple_edge_adjlist() {
        let g = parse_graph("0: 1 1 1\n1: 0 0 0\n", GraphFormat::Adjlist, true).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_cubic());
        assert_eq!(g.multiplicity(0, 1), 3);
    }

    #[test]
    fn parse_petersen_graph6() {
        // Frozen from an independent encoder run over the GP(5,2) labelling.
        let g = parse_graph(named::PETERSEN_G6, GraphFormat::Graph6, true).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_cubic());
        assert_eq!(g, named::petersen());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_graph("", GraphFormat::Graph6, false).is_err());
        assert!(parse_graph("C~~~~", GraphFormat::Graph6, false).is_err());
        assert!(parse_graph("0 1 2", GraphFormat::Adjlist, false).is_err());
        assert!(parse_graph("0: 1\n1: 0 0\n", GraphFormat::Adjlist, false).is_err());
        // Degree 4 is never representable.
        assert!(parse_graph("0: 1 1 1 1\n1: 0 0 0 0\n", GraphFormat::Adjlist, false).is_err());
        // Strict cubicity rejects the 5-cycle.
        assert!(parse_graph(&named::cycle(5).to_adjlist(), GraphFormat::Adjlist, true).is_err());
    }

    #[test]
    fn boundary_of_cubic_vertex() {
        let g = named::k4();
        let xs = VertexSet::new([0], g.n()).unwrap();
        assert_eq!(g.boundary(&xs).unwrap().len(), 3);
    }

    #[test]
    fn boundary_of_petersen_outer_cycle_is_the_spokes() {
        let g = named::petersen();
        let xs = VertexSet::new(0..5, g.n()).unwrap();
        let cut = g.boundary(&xs).unwrap();
        assert_eq!(cut.len(), 5);
        let pairs = cut.endpoint_pairs(&g);
        assert_eq!(pairs, vec![(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]);
    }

    #[test]
    fn boundary_rejects_empty_and_full() {
        let g = named::k4();
        assert!(matches!(
            g.boundary(&VertexSet::new([], 4).unwrap()),
            Err(Error::EmptyOrFullSet)
        ));
        assert!(matches!(
            g.boundary(&VertexSet::new(0..4, 4).unwrap()),
            Err(Error::EmptyOrFullSet)
        ));
    }

    #[test]
    fn induced_outer_five_is_a_cycle() {
        let g = named::petersen();
        let xs = VertexSet::new(0..5, g.n()).unwrap();
        let ind = g.induced(&xs).unwrap();
        assert_eq!(ind.graph.n(), 5);
        assert_eq!(ind.graph.edge_count(), 5);
        assert!(crate::iso::are_isomorphic(&ind.graph, &named::cycle(5)));
    }

    #[test]
    fn induced_full_set_is_identity() {
        let g = named::petersen();
        let xs = VertexSet::new(0..10, g.n()).unwrap();
        let ind = g.induced(&xs).unwrap();
        assert_eq!(ind.graph, g);
    }

    #[test]
    fn induced_pair_of_k4_is_an_edge() {
        let g = named::k4();
        let ind = g.induced(&VertexSet::new([0, 1], 4).unwrap()).unwrap();
        assert_eq!(ind.graph.n(), 2);
        assert_eq!(ind.graph.edge_count(), 1);
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = named::disjoint_union(&named::k4(), &named::k4());
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].as_slice(), &[0, 1, 2, 3]);
        assert_eq!(comps[1].as_slice(), &[4, 5, 6, 7]);
    }

    #[test]
    fn components_of_petersen_minus_spokes() {
        let g = named::petersen();
        let keep: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| (u < 5) == (v < 5))
            .collect();
        let h = CubicGraph::from_edges(10, &keep).unwrap();
        let comps = h.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].as_slice(), &[0, 1, 2, 3, 4]);
        assert_eq!(comps[1].as_slice(), &[5, 6, 7, 8, 9]);
    }

    #[test]
    fn girth_basics() {
        assert_eq!(named::k4().girth(), Some(3));
        assert_eq!(named::petersen().girth(), Some(5));
        assert_eq!(named::k3_3().girth(), Some(4));
        assert_eq!(named::dodecahedron().girth(), Some(5));
        // Double edge with pendant trees hanging off it.
        let g = CubicGraph::from_edges(4, &[(0, 1), (0, 1), (0, 2), (1, 3)]).unwrap();
        assert_eq!(g.girth(), Some(2));
        // Loop.
        let g = CubicGraph::from_edges(2, &[(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.girth(), Some(1));
        // Tree.
        let g = CubicGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn cycle_rank_values() {
        assert_eq!(named::k4().cycle_rank().unwrap(), 3);
        assert_eq!(named::k3_3().cycle_rank().unwrap(), 4);
        assert_eq!(named::petersen().cycle_rank().unwrap(), 6);
        let g = named::disjoint_union(&named::k4(), &named::k4());
        assert!(matches!(g.cycle_rank(), Err(Error::Disconnected)));
    }

    #[test]
    fn bridges_and_two_connectivity() {
        let c5 = named::cycle(5);
        let (bridges, blocks) = c5.bridges_and_blocks().unwrap();
        assert!(bridges.is_empty());
        assert_eq!(blocks.len(), 1);
        assert!(c5.is_two_connected());

        let g = named::two_triangles_bridged();
        let (bridges, blocks) = g.bridges_and_blocks().unwrap();
        assert_eq!(bridges.len(), 1);
        assert_eq!(g.endpoints(bridges[0]), (2, 3));
        assert_eq!(blocks.len(), 2);
        assert!(!g.is_two_connected());

        // Petersen minus one vertex has no bridges.
        let g = named::petersen();
        let ind = g.induced(&VertexSet::new(1..10, 10).unwrap()).unwrap();
        assert!(ind.graph.bridges_and_blocks().unwrap().0.is_empty());
        assert!(ind.graph.is_two_connected());

        // Parallel edges are never bridges.
        let g = CubicGraph::from_edges(4, &[(0, 1), (0, 1), (0, 2), (1, 3)]).unwrap();
        let (bridges, _) = g.bridges_and_blocks().unwrap();
        assert_eq!(bridges.len(), 2);
    }

    #[test]
    fn distances_in_petersen() {
        let g = named::petersen();
        assert_eq!(g.distance(0, 0), Some(0));
        assert_eq!(g.distance(0, 1), Some(1));
        // Diameter 2: every non-adjacent pair is at distance exactly 2.
        for u in 0..10 {
            for v in 0..10 {
                if u != v && !g.has_edge(u, v) {
                    assert_eq!(g.distance(u, v), Some(2));
                }
            }
        }
        let disconnected = named::disjoint_union(&named::k4(), &named::k4());
        assert_eq!(disconnected.distance(0, 5), None);
    }

    #[test]
    fn boundary_composes_with_induced() {
        let g = named::petersen();
        let xs = VertexSet::new([0, 1, 2, 6, 9], g.n()).unwrap();
        let cut = g.boundary(&xs).unwrap();
        let ind = g.induced(&xs).unwrap();
        let degree_sum: usize = xs.iter().map(|v| g.degree(v)).sum();
        assert_eq!(cut.len(), degree_sum - 2 * ind.graph.edge_count());
    }

    #[test]
    fn adjlist_roundtrip_preserves_multigraph() {
        let g =
            CubicGraph::from_edges(4, &[(0, 0), (0, 1), (1, 2), (1, 3), (2, 3), (2, 3)]).unwrap();
        let text = g.to_adjlist();
        let back = parse_graph(&text, GraphFormat::Adjlist, false).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn graph6_roundtrip_is_exact_for_simple_graphs() {
        for g in [
            named::k4(),
            named::k3_3(),
            named::petersen(),
            named::dodecahedron(),
        ] {
            let s = g.to_graph6().unwrap();
            let back = parse_graph(&s, GraphFormat::Graph6, true).unwrap();
            assert_eq!(g, back);
        }
        let multi = CubicGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(matches!(multi.to_graph6(), Err(Error::NotSimple(_))));
    }

    #[test]
    fn graph6_long_form_accepted() {
        // 63 isolated vertices needs the 3-byte order form.
        let g = CubicGraph::from_edges(63, &[]).unwrap();
        let s = g.to_graph6().unwrap();
        assert!(s.starts_with('~'));
        let back = parse_graph(&s, GraphFormat::Graph6, false).unwrap();
        assert_eq!(back.n(), 63);
    }
}

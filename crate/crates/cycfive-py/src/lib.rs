//! Python bindings: the graph type plus the cut, decomposition and
//! completion operations, mirroring the Rust API.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cycfive::completion::{self, CyclicPart as RsPart, RepairBranch};
use cycfive::graph::VertexSet;
use cycfive::{cyccut, iso, named, oracle, parse_graph, GraphFormat};

fn err(e: cycfive::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_perm(perm: Vec<usize>) -> PyResult<[usize; 5]> {
    perm.try_into()
        .map_err(|_| PyValueError::new_err("an ordering must list exactly five vertices"))
}

/// An immutable multigraph with maximum degree three.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct CubicGraph {
    inner: cycfive::CubicGraph,
}

#[pymethods]
impl CubicGraph {
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(CubicGraph {
            inner: parse_graph(text, GraphFormat::Graph6, false).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_adjlist(text: &str) -> PyResult<Self> {
        Ok(CubicGraph {
            inner: parse_graph(text, GraphFormat::Adjlist, false).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(CubicGraph {
            inner: cycfive::CubicGraph::from_edges(n, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn petersen() -> Self {
        CubicGraph {
            inner: named::petersen(),
        }
    }

    #[staticmethod]
    fn dodecahedron() -> Self {
        CubicGraph {
            inner: named::dodecahedron(),
        }
    }

    #[staticmethod]
    fn k4() -> Self {
        CubicGraph { inner: named::k4() }
    }

    #[staticmethod]
    fn k3_3() -> Self {
        CubicGraph {
            inner: named::k3_3(),
        }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        CubicGraph {
            inner: named::cycle(n),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn is_cubic(&self) -> bool {
        self.inner.is_cubic()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_two_connected(&self) -> bool {
        self.inner.is_two_connected()
    }

    fn girth(&self) -> Option<usize> {
        self.inner.girth()
    }

    fn cycle_rank(&self) -> PyResult<usize> {
        self.inner.cycle_rank().map_err(err)
    }

    fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.inner.distance(u, v)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner
            .components()
            .into_iter()
            .map(|c| c.as_slice().to_vec())
            .collect()
    }

    fn boundary(&self, xs: Vec<usize>) -> PyResult<Vec<(usize, usize)>> {
        let set = VertexSet::new(xs, self.inner.n()).map_err(err)?;
        let cut = self.inner.boundary(&set).map_err(err)?;
        Ok(cut.endpoint_pairs(&self.inner))
    }

    /// Induced subgraph plus the new-to-old vertex map.
    fn induced(&self, xs: Vec<usize>) -> PyResult<(CubicGraph, Vec<usize>)> {
        let set = VertexSet::new(xs, self.inner.n()).map_err(err)?;
        let ind = self.inner.induced(&set).map_err(err)?;
        Ok((CubicGraph { inner: ind.graph }, ind.vertices))
    }

    /// Cyclic edge-connectivity.
    fn zeta(&self) -> PyResult<usize> {
        cyccut::zeta(&self.inner).map_err(err)
    }

    /// (zeta, witness edge list or None, fragment pair or None).
    #[allow(clippy::type_complexity)]
    fn min_cycle_separating_cut(
        &self,
    ) -> PyResult<(
        usize,
        Option<Vec<(usize, usize)>>,
        Option<(Vec<usize>, Vec<usize>)>,
    )> {
        let res = cyccut::min_cycle_separating_cut(&self.inner).map_err(err)?;
        Ok((
            res.zeta,
            res.witness.map(|w| w.endpoint_pairs(&self.inner)),
            res.fragments
                .map(|(a, b)| (a.as_slice().to_vec(), b.as_slice().to_vec())),
        ))
    }

    /// ζ by the exhaustive unpruned oracle (slow; bounded input size).
    fn zeta_oracle(&self) -> PyResult<usize> {
        oracle::zeta_oracle(&self.inner).map_err(err)
    }

    fn to_graph6(&self) -> PyResult<String> {
        self.inner.to_graph6().map_err(err)
    }

    fn to_adjlist(&self) -> String {
        self.inner.to_adjlist()
    }

    fn is_isomorphic(&self, other: &CubicGraph) -> bool {
        iso::are_isomorphic(&self.inner, &other.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "CubicGraph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// One side of a minimum cycle-separating 5-cut: five degree-2 vertices,
/// all other degrees 3, 2-connected, girth at least five.
#[pyclass(frozen)]
struct CyclicPart {
    inner: RsPart,
}

#[pymethods]
impl CyclicPart {
    #[staticmethod]
    fn from_graph(graph: &CubicGraph) -> PyResult<Self> {
        Ok(CyclicPart {
            inner: RsPart::from_graph(graph.inner.clone()).map_err(err)?,
        })
    }

    /// Delete the path x-y-z from a ζ=5 cubic graph.
    #[staticmethod]
    fn remove_path2(graph: &CubicGraph, x: usize, y: usize, z: usize) -> PyResult<Self> {
        Ok(CyclicPart {
            inner: completion::remove_path2(&graph.inner, x, y, z).map_err(err)?,
        })
    }

    fn graph(&self) -> CubicGraph {
        CubicGraph {
            inner: self.inner.graph().clone(),
        }
    }

    fn boundary(&self) -> Vec<usize> {
        self.inner.boundary().to_vec()
    }

    fn is_five_cycle(&self) -> bool {
        self.inner.is_five_cycle()
    }

    /// (distance-2 pairs, adjacent pairs) over the boundary vertices.
    #[allow(clippy::type_complexity)]
    fn distance_graph(&self) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let d = completion::distance_graph(&self.inner);
        (d.dist2, d.adjacent_in_h)
    }

    fn girth_condition(&self, perm: Vec<usize>) -> PyResult<bool> {
        Ok(completion::girth_condition(&self.inner, &to_perm(perm)?))
    }

    fn choose_permutation(&self) -> PyResult<Vec<usize>> {
        Ok(completion::choose_permutation(&self.inner)
            .map_err(err)?
            .to_vec())
    }

    /// Add the path x-y-z and the five boundary edges for this ordering;
    /// returns the extension graph and the labels (x, y, z).
    fn extend(&self, perm: Vec<usize>) -> PyResult<(CubicGraph, (usize, usize, usize))> {
        let e = completion::extend(&self.inner, &to_perm(perm)?).map_err(err)?;
        Ok((CubicGraph { inner: e.graph }, (e.x, e.y, e.z)))
    }

    /// Complete to a cyclically 5-connected cubic graph.
    fn complete(&self) -> PyResult<Completion> {
        let c = completion::complete(&self.inner).map_err(err)?;
        Ok(Completion {
            graph: CubicGraph {
                inner: c.extension.graph.clone(),
            },
            initial_perm: c.initial_perm.to_vec(),
            final_perm: c.extension.perm.to_vec(),
            added_vertices: (c.extension.x, c.extension.y, c.extension.z),
            repair_branch: c.repair.map(|r| {
                match r.branch {
                    RepairBranch::TwoConnectedSide => "two_connected",
                    RepairBranch::BridgedSide => "bridged",
                }
                .to_string()
            }),
        })
    }

    /// All 120 orderings whose extension has girth at least five.
    fn all_girth5_perms(&self) -> Vec<Vec<usize>> {
        oracle::all_girth5_perms(&self.inner)
            .into_iter()
            .map(|p| p.to_vec())
            .collect()
    }

    fn single_vertex_completions(&self) -> PyResult<Vec<CubicGraph>> {
        Ok(completion::single_vertex_completions(&self.inner)
            .map_err(err)?
            .into_iter()
            .map(|g| CubicGraph { inner: g })
            .collect())
    }

    #[pyo3(signature = (strict = true))]
    fn single_vertex_obstruction(&self, strict: bool) -> bool {
        let variant = if strict {
            completion::ObstructionVariant::Strict
        } else {
            completion::ObstructionVariant::Lax
        };
        completion::single_vertex_obstruction_with(&self.inner, variant)
    }

    fn __repr__(&self) -> String {
        format!(
            "CyclicPart(n={}, boundary={:?})",
            self.inner.graph().n(),
            self.inner.boundary()
        )
    }
}

/// Result of completing a cyclic part.
#[pyclass(frozen, get_all)]
struct Completion {
    graph: CubicGraph,
    initial_perm: Vec<usize>,
    final_perm: Vec<usize>,
    added_vertices: (usize, usize, usize),
    /// "two_connected", "bridged", or None when no repair was needed.
    repair_branch: Option<String>,
}

#[pymethods]
impl Completion {
    fn __repr__(&self) -> String {
        format!(
            "Completion(n={}, repair_branch={:?})",
            self.graph.inner.n(),
            self.repair_branch
        )
    }
}

#[pymodule]
fn cycfive_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CubicGraph>()?;
    m.add_class::<CyclicPart>()?;
    m.add_class::<Completion>()?;
    Ok(())
}

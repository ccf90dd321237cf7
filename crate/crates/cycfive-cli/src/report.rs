//! JSON report types. Field order is fixed by the struct definitions and
//! all collections are sorted, so identical inputs and flags produce
//! byte-identical output. Timing fields are emitted only on request.

use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub results: Results,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Timings>,
}

#[derive(Serialize)]
pub struct InputInfo {
    pub source: String,
    pub format: &'static str,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Serialize)]
pub struct Timings {
    pub total: f64,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Results {
    Analyze(AnalyzeResults),
    Decompose(DecomposeResults),
    Complete(Box<CompleteResults>),
    Verify(VerifyResults),
    Oracle(OracleResults),
}

#[derive(Serialize)]
pub struct AnalyzeResults {
    pub girth: Option<usize>,
    pub cycle_rank: usize,
    pub zeta: usize,
    pub witness: Option<Vec<(usize, usize)>>,
    pub fragments: Option<[Vec<usize>; 2]>,
}

#[derive(Serialize)]
pub struct DecomposeResults {
    pub zeta: usize,
    pub cut: Vec<(usize, usize)>,
    pub parts: Vec<PartInfo>,
}

#[derive(Serialize)]
pub struct PartInfo {
    pub vertices: usize,
    /// Host labels of the part's vertices; index = part label.
    pub host_vertices: Vec<usize>,
    /// Boundary vertices in part labels.
    pub boundary: Vec<usize>,
    /// Boundary vertices in host labels.
    pub boundary_in_host: Vec<usize>,
    pub adjlist: String,
}

#[derive(Serialize)]
pub struct CompleteResults {
    pub part: PartInfo,
    pub initial_perm: [usize; 5],
    pub final_perm: [usize; 5],
    pub repaired: bool,
    pub repair_branch: Option<&'static str>,
    pub zeta: usize,
    pub girth: usize,
    pub added_vertices: [usize; 3],
    pub graph_adjlist: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub emitted: Option<Emitted>,
}

#[derive(Serialize)]
pub struct Emitted {
    pub format: &'static str,
    pub text: String,
}

#[derive(Serialize)]
pub struct VerifyResults {
    pub cubic: bool,
    pub connected: bool,
    pub girth: Option<usize>,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

#[derive(Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: &'static str,
    pub detail: String,
}

impl Check {
    pub fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: "pass",
            detail: detail.into(),
        }
    }

    pub fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: "fail",
            detail: detail.into(),
        }
    }

    pub fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: "skipped",
            detail: detail.into(),
        }
    }
}

#[derive(Serialize)]
pub struct OracleResults {
    pub check: &'static str,
    pub rows: Vec<OracleRow>,
    pub all_agree: bool,
}

#[derive(Serialize)]
pub struct OracleRow {
    pub subject: String,
    pub oracle: String,
    pub fast: String,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

//! cycfive: analyze cubic graphs around cyclic connectivity five.
//!
//! Exit codes: 0 success, 1 failed checks or internal assertion,
//! 2 parse error, 3 precondition violation, 4 five-cycle part,
//! 5 oracle size budget exceeded.

mod dot;
mod report;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cycfive::completion::{self, CyclicPart, RepairBranch};
use cycfive::{cyccut, oracle, parse_graph, CubicGraph, Error, GraphFormat};

use report::{
    AnalyzeResults, Check, CompleteResults, DecomposeResults, Emitted, InputInfo, OracleResults,
    OracleRow, PartInfo, Report, Results, Timings, VerifyResults,
};

#[derive(Parser)]
#[command(
    name = "cycfive",
    version,
    about = "Structural analysis of cubic graphs at cyclic connectivity five",
    after_help = "The environment variable CYCFIVE_THREADS caps internal parallelism."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Girth, cycle rank, cyclic connectivity and a minimum cut witness.
    Analyze(InputArgs),
    /// Complete a cyclic part to a cyclically 5-connected cubic graph.
    Complete(CompleteArgs),
    /// Split a graph with cyclic connectivity 5 into its two cyclic parts.
    Decompose(InputArgs),
    /// Run the invariant battery and report pass/fail per check.
    Verify(VerifyArgs),
    /// Compare fast results against the exhaustive brute-force oracles.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or '-' for stdin.
    path: String,
    /// Input format; 'auto' sniffs adjacency lists by their ':' lines.
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
    /// Include wall-clock timings in the report (non-deterministic).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct CompleteArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Treat the input graph as a cyclic part itself.
    #[arg(long, conflicts_with = "cut_side")]
    part: bool,
    /// Treat the input as a ζ=5 host: decompose along the minimum cut
    /// witness and complete the chosen side (0 or 1).
    #[arg(long, value_name = "SIDE")]
    cut_side: Option<usize>,
    /// Also emit the completed graph in this format.
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    /// Write the emitted graph to a file instead of only the report.
    #[arg(long, requires = "emit")]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Additionally require the cyclic connectivity to equal this value.
    #[arg(long)]
    expect_zeta: Option<usize>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which fast path to compare against its oracle.
    #[arg(long, value_enum)]
    check: OracleCheck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Graph6,
    Adjlist,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Dot,
    Graph6,
    Adjlist,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleCheck {
    Zeta,
    Perms,
    Cuts,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CYCFIVE_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            match e {
                Error::IsFiveCycle => eprintln!("cycfive: five-cycle part"),
                ref e => eprintln!("cycfive: {e}"),
            }
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::MalformedInput(_) | Error::DegreeViolation(_) => 2,
        Error::IsFiveCycle => 4,
        Error::TooLarge(_) => 5,
        Error::InternalContradiction(_) | Error::RepairFailed(_) => 1,
        _ => 3,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Complete(args) => cmd_complete(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

struct LoadedInput {
    graph: CubicGraph,
    info: InputInfo,
    start: Instant,
    timings: bool,
}

fn load(args: &InputArgs) -> Result<LoadedInput, Error> {
    let start = Instant::now();
    let text = if args.path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::MalformedInput(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&args.path)
            .map_err(|e| Error::MalformedInput(format!("reading {}: {e}", args.path)))?
    };
    let format = match args.format {
        FormatArg::Graph6 => GraphFormat::Graph6,
        FormatArg::Adjlist => GraphFormat::Adjlist,
        FormatArg::Auto => sniff_format(&text),
    };
    let graph = parse_graph(&text, format, false)?;
    let info = InputInfo {
        source: args.path.clone(),
        format: match format {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::Adjlist => "adjlist",
        },
        vertices: graph.n(),
        edges: graph.edge_count(),
    };
    Ok(LoadedInput {
        graph,
        info,
        start,
        timings: args.timings,
    })
}

fn sniff_format(text: &str) -> GraphFormat {
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        return if line.contains(':') {
            GraphFormat::Adjlist
        } else {
            GraphFormat::Graph6
        };
    }
    GraphFormat::Graph6
}

fn emit_report(loaded: &LoadedInput, command: &'static str, results: Results) {
    let report = Report {
        tool: "cycfive",
        command,
        input: InputInfo {
            source: loaded.info.source.clone(),
            format: loaded.info.format,
            vertices: loaded.info.vertices,
            edges: loaded.info.edges,
        },
        results,
        timings_ms: loaded.timings.then(|| Timings {
            total: loaded.start.elapsed().as_secs_f64() * 1e3,
        }),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("reports serialize")
    );
}

fn cmd_analyze(args: InputArgs) -> Result<ExitCode, Error> {
    let loaded = load(&args)?;
    let g = &loaded.graph;
    let res = cyccut::min_cycle_separating_cut(g)?;
    let results = AnalyzeResults {
        girth: g.girth(),
        cycle_rank: g.cycle_rank()?,
        zeta: res.zeta,
        witness: res.witness.as_ref().map(|w| w.endpoint_pairs(g)),
        fragments: res
            .fragments
            .map(|(a, b)| [a.as_slice().to_vec(), b.as_slice().to_vec()]),
    };
    emit_report(&loaded, "analyze", Results::Analyze(results));
    Ok(ExitCode::SUCCESS)
}

fn part_info(part: &CyclicPart) -> PartInfo {
    let host_vertices = part
        .origin()
        .map(|o| o.vertex_map.clone())
        .unwrap_or_else(|| (0..part.graph().n()).collect());
    let boundary = part.boundary().to_vec();
    let boundary_in_host = boundary.iter().map(|&v| host_vertices[v]).collect();
    PartInfo {
        vertices: part.graph().n(),
        host_vertices,
        boundary,
        boundary_in_host,
        adjlist: part.graph().to_adjlist(),
    }
}

fn cmd_complete(args: CompleteArgs) -> Result<ExitCode, Error> {
    let loaded = load(&args.input)?;
    let g = &loaded.graph;
    if !args.part && args.cut_side.is_none() {
        return Err(Error::PreconditionViolated(
            "complete requires --part or --cut-side <0|1>".into(),
        ));
    }
    let part = if args.part {
        CyclicPart::from_graph(g.clone())?
    } else {
        let side_index = args.cut_side.unwrap();
        if side_index > 1 {
            return Err(Error::PreconditionViolated(
                "--cut-side must be 0 or 1".into(),
            ));
        }
        let res = cyccut::min_cycle_separating_cut(g)?;
        if res.zeta != 5 || res.witness.is_none() {
            return Err(Error::PreconditionViolated(format!(
                "cyclic connectivity is {}, completion from a cut needs exactly 5 with a witness",
                res.zeta
            )));
        }
        let cut = res.witness.unwrap();
        let (f1, f2) = res.fragments.unwrap();
        let side = if side_index == 0 { f1 } else { f2 };
        completion::make_part(g, &cut, &side)?
    };
    let completed = completion::complete(&part)?;
    let e = &completed.extension;
    let zeta = cyccut::zeta(&e.graph)?;
    let girth = e.graph.girth().expect("completed graphs contain cycles");
    let emitted = match args.emit {
        None => None,
        Some(EmitArg::Dot) => Some(Emitted {
            format: "dot",
            text: dot::to_dot(&e.graph, &[e.x, e.y, e.z], part.boundary()),
        }),
        Some(EmitArg::Graph6) => Some(Emitted {
            format: "graph6",
            text: format!("{}\n", e.graph.to_graph6()?),
        }),
        Some(EmitArg::Adjlist) => Some(Emitted {
            format: "adjlist",
            text: e.graph.to_adjlist(),
        }),
    };
    if let (Some(out), Some(em)) = (&args.out, &emitted) {
        std::fs::write(out, &em.text)
            .map_err(|e| Error::MalformedInput(format!("writing {out}: {e}")))?;
    }
    let results = CompleteResults {
        part: part_info(&part),
        initial_perm: completed.initial_perm,
        final_perm: e.perm,
        repaired: completed.repair.is_some(),
        repair_branch: completed.repair.as_ref().map(|r| match r.branch {
            RepairBranch::TwoConnectedSide => "two_connected",
            RepairBranch::BridgedSide => "bridged",
        }),
        zeta,
        girth,
        added_vertices: [e.x, e.y, e.z],
        graph_adjlist: e.graph.to_adjlist(),
        emitted,
    };
    emit_report(&loaded, "complete", Results::Complete(Box::new(results)));
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(args: InputArgs) -> Result<ExitCode, Error> {
    let loaded = load(&args)?;
    let g = &loaded.graph;
    let res = cyccut::min_cycle_separating_cut(g)?;
    if res.zeta != 5 || res.witness.is_none() {
        return Err(Error::PreconditionViolated(format!(
            "cyclic connectivity is {}, decomposition needs exactly 5 with a witness cut",
            res.zeta
        )));
    }
    let cut = res.witness.unwrap();
    let (f1, f2) = res.fragments.unwrap();
    let parts = [f1, f2]
        .into_iter()
        .map(|side| completion::make_part(g, &cut, &side).map(|p| part_info(&p)))
        .collect::<Result<Vec<_>, _>>()?;
    let results = DecomposeResults {
        zeta: res.zeta,
        cut: cut.endpoint_pairs(g),
        parts,
    };
    emit_report(&loaded, "decompose", Results::Decompose(results));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let loaded = load(&args.input)?;
    let g = &loaded.graph;
    let cubic = g.is_cubic();
    let connected = g.is_connected();
    let mut checks: Vec<Check> = Vec::new();
    if cubic && connected {
        let res = cyccut::min_cycle_separating_cut(g)?;
        let girth = g.girth().expect("connected cubic graphs contain cycles");
        let beta = g.cycle_rank()?;
        checks.push(if res.zeta <= girth {
            Check::pass(
                "zeta_bounded_by_girth",
                format!("ζ = {} ≤ girth = {girth}", res.zeta),
            )
        } else {
            Check::fail(
                "zeta_bounded_by_girth",
                format!("ζ = {} > girth = {girth}", res.zeta),
            )
        });
        checks.push(if res.zeta <= beta {
            Check::pass(
                "zeta_bounded_by_cycle_rank",
                format!("ζ = {} ≤ β = {beta}", res.zeta),
            )
        } else {
            Check::fail(
                "zeta_bounded_by_cycle_rank",
                format!("ζ = {} > β = {beta}", res.zeta),
            )
        });
        match &res.witness {
            Some(w) => {
                checks.push(if w.is_independent(g) {
                    Check::pass(
                        "witness_independent",
                        "minimum cut edges are pairwise non-adjacent",
                    )
                } else {
                    Check::fail("witness_independent", "minimum cut contains adjacent edges")
                });
                let (a, b) = res.fragments.clone().unwrap();
                let mut ok = true;
                let mut detail = String::new();
                for side in [&a, &b] {
                    let ind = g.induced(side)?;
                    if !ind.graph.is_connected() || ind.graph.is_acyclic() {
                        ok = false;
                        detail = "a fragment is disconnected or acyclic".into();
                    }
                    if res.zeta > 3 && !ind.graph.is_two_connected() {
                        ok = false;
                        detail = "a fragment of a ζ>3 graph is not 2-connected".into();
                    }
                }
                checks.push(if ok {
                    Check::pass(
                        "fragments_are_cyclic_parts",
                        "both fragments connected and cyclic",
                    )
                } else {
                    Check::fail("fragments_are_cyclic_parts", detail)
                });
                if res.zeta == 5 {
                    let cut = w;
                    let valid = [&a, &b]
                        .into_iter()
                        .try_for_each(|side| completion::make_part(g, cut, side).map(|_| ()));
                    checks.push(match valid {
                        Ok(()) => Check::pass(
                            "five_cut_sides_are_valid_parts",
                            "both sides satisfy every cyclic-part invariant",
                        ),
                        Err(e) => Check::fail("five_cut_sides_are_valid_parts", e.to_string()),
                    });
                } else {
                    checks.push(Check::skipped(
                        "five_cut_sides_are_valid_parts",
                        format!("ζ = {} ≠ 5", res.zeta),
                    ));
                }
            }
            None => {
                checks.push(Check::skipped(
                    "witness_independent",
                    "no cycle-separating cut exists",
                ));
                checks.push(Check::skipped(
                    "fragments_are_cyclic_parts",
                    "no cycle-separating cut exists",
                ));
                checks.push(Check::skipped(
                    "five_cut_sides_are_valid_parts",
                    "no cycle-separating cut exists",
                ));
            }
        }
        let samples = oracle::sample_acyclic_connected_subsets(g, 200, 0xC5);
        let bad = samples.iter().filter(|set| set.len() < g.n()).find(
            |set| !matches!(g.boundary(set).map(|c| c.len()), Ok(len) if len == set.len() + 2),
        );
        checks.push(match bad {
            None => Check::pass(
                "tree_boundary_samples",
                "200 sampled acyclic subgraphs satisfy |δ(M)| = |V(M)| + 2",
            ),
            Some(set) => Check::fail(
                "tree_boundary_samples",
                format!("violated by {:?}", set.as_slice()),
            ),
        });
        if let Some(k) = args.expect_zeta {
            checks.push(if res.zeta == k {
                Check::pass("expected_zeta", format!("ζ = {k} as expected"))
            } else {
                Check::fail(
                    "expected_zeta",
                    format!("expected ζ = {k}, found ζ = {}", res.zeta),
                )
            });
        }
    } else {
        let reason = if !cubic {
            "graph is not cubic"
        } else {
            "graph is disconnected"
        };
        for name in [
            "zeta_bounded_by_girth",
            "zeta_bounded_by_cycle_rank",
            "witness_independent",
            "fragments_are_cyclic_parts",
            "five_cut_sides_are_valid_parts",
            "tree_boundary_samples",
        ] {
            checks.push(Check::skipped(name, reason));
        }
        if args.expect_zeta.is_some() {
            checks.push(Check::fail(
                "expected_zeta",
                format!("cyclic connectivity undefined: {reason}"),
            ));
        }
    }
    let all_pass = checks.iter().all(|c| c.status != "fail");
    let results = VerifyResults {
        cubic,
        connected,
        girth: g.girth(),
        checks,
        all_pass,
    };
    emit_report(&loaded, "verify", Results::Verify(results));
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode, Error> {
    let loaded = load(&args.input)?;
    let g = &loaded.graph;
    let want_timing = args.input.timings;
    let row = |subject: String, oracle_v: String, fast_v: String, elapsed: f64| OracleRow {
        agree: oracle_v == fast_v,
        subject,
        oracle: oracle_v,
        fast: fast_v,
        elapsed_ms: want_timing.then_some(elapsed),
    };
    let (check_name, rows): (&'static str, Vec<OracleRow>) = match args.check {
        OracleCheck::Zeta => {
            let t = Instant::now();
            let slow = oracle::zeta_oracle(g)?;
            let fast = cyccut::zeta(g)?;
            let ms = t.elapsed().as_secs_f64() * 1e3;
            (
                "zeta",
                vec![row("zeta".into(), slow.to_string(), fast.to_string(), ms)],
            )
        }
        OracleCheck::Cuts => {
            let t = Instant::now();
            let all = oracle::all_min_cuts(g)?;
            let res = cyccut::min_cycle_separating_cut(g)?;
            let ms = t.elapsed().as_secs_f64() * 1e3;
            let mut rows = vec![row(
                "has_cycle_separating_cut".into(),
                (!all.is_empty()).to_string(),
                res.witness.is_some().to_string(),
                ms,
            )];
            if let (Some(first), Some(w)) = (all.first(), &res.witness) {
                rows.push(row(
                    "minimum_cut_size".into(),
                    first.len().to_string(),
                    res.zeta.to_string(),
                    0.0,
                ));
                rows.push(row(
                    "witness_among_minimum_cuts".into(),
                    "contained".into(),
                    if all.contains(w) {
                        "contained"
                    } else {
                        "missing"
                    }
                    .to_string(),
                    0.0,
                ));
                rows.push(row(
                    "lexicographically_first_cut".into(),
                    format!("{:?}", first.endpoint_pairs(g)),
                    format!("{:?}", w.endpoint_pairs(g)),
                    0.0,
                ));
            }
            ("cuts", rows)
        }
        OracleCheck::Perms => {
            let part = CyclicPart::from_graph(g.clone())?;
            let t = Instant::now();
            let good = oracle::all_girth5_perms(&part);
            let fast_count = permutations(*part.boundary())
                .into_iter()
                .filter(|p| completion::girth_condition(&part, p))
                .count();
            let ms = t.elapsed().as_secs_f64() * 1e3;
            let mut rows = vec![row(
                "girth5_ordering_count".into(),
                good.len().to_string(),
                fast_count.to_string(),
                ms,
            )];
            let oracle_side = if good.is_empty() {
                "no girth-5 ordering"
            } else {
                "girth-5 ordering exists"
            };
            let fast_side = match completion::choose_permutation(&part) {
                Err(Error::IsFiveCycle) => "no girth-5 ordering".to_string(),
                Err(e) => format!("error: {e}"),
                Ok(p) if good.contains(&p) => "girth-5 ordering exists".to_string(),
                Ok(p) => format!("chosen ordering {p:?} rejected by the oracle"),
            };
            rows.push(row(
                "constructive_choice".into(),
                oracle_side.to_string(),
                fast_side,
                0.0,
            ));
            ("perms", rows)
        }
    };
    let all_agree = rows.iter().all(|r| r.agree);
    let results = OracleResults {
        check: check_name,
        rows,
        all_agree,
    };
    emit_report(&loaded, "oracle", Results::Oracle(results));
    Ok(if all_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn permutations(items: [usize; 5]) -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut arr = items;
    fn heap(arr: &mut [usize; 5], k: usize, out: &mut Vec<[usize; 5]>) {
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
    heap(&mut arr, 5, &mut out);
    out
}

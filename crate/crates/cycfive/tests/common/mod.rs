//! Shared corpus fixtures for the integration suites.

use cycfive::completion::{self, CyclicPart};
use cycfive::{cyccut, named, CubicGraph};

/// The connected cubic graphs of the corpus.
pub fn corpus_graphs() -> Vec<(&'static str, CubicGraph)> {
    vec![
        ("k4", named::k4()),
        ("k3_3", named::k3_3()),
        ("triangular_prism", named::triangular_prism()),
        ("theta", named::theta()),
        ("petersen", named::petersen()),
        ("two_parts_join", named::two_parts_join()),
        ("dodecahedron", named::dodecahedron()),
    ]
}

/// Every cyclic part exercised by the suites, with a stable name.
pub fn corpus_parts() -> Vec<(String, CyclicPart)> {
    let mut out: Vec<(String, CyclicPart)> = vec![
        (
            "c5_part".into(),
            CyclicPart::from_graph(named::cycle(5)).unwrap(),
        ),
        (
            "petersen_part".into(),
            completion::remove_path2(&named::petersen(), 0, 1, 2).unwrap(),
        ),
        (
            "dodecahedron_outer_path_part".into(),
            completion::remove_path2(&named::dodecahedron(), 0, 1, 2).unwrap(),
        ),
        (
            "dodecahedron_spoke_path_part".into(),
            completion::remove_path2(&named::dodecahedron(), 0, 10, 12).unwrap(),
        ),
        (
            "waisted_two_connected_part".into(),
            CyclicPart::from_graph(named::waisted_part_two_connected()).unwrap(),
        ),
        (
            "waisted_bridged_part".into(),
            CyclicPart::from_graph(named::waisted_part_bridged()).unwrap(),
        ),
    ];
    // Both sides of the witness cut of the join graph.
    let join = named::two_parts_join();
    let res = cyccut::min_cycle_separating_cut(&join).unwrap();
    let cut = res.witness.unwrap();
    let (f1, f2) = res.fragments.unwrap();
    for (i, side) in [f1, f2].into_iter().enumerate() {
        out.push((
            format!("join_part_{i}"),
            completion::make_part(&join, &cut, &side).unwrap(),
        ));
    }
    // The 15-vertex complement of a face of the dodecahedron.
    let dod = named::dodecahedron();
    let res = cyccut::min_cycle_separating_cut(&dod).unwrap();
    let cut = res.witness.unwrap();
    let (f1, f2) = res.fragments.unwrap();
    let big = if f1.len() > f2.len() { f1 } else { f2 };
    out.push((
        "dodecahedron_face_complement_part".into(),
        completion::make_part(&dod, &cut, &big).unwrap(),
    ));
    out
}

//! Small worked hypergraphs with known incidence structure.

use crate::hypergraph::Hypergraph;

fn build(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::from_edge_sets(1..=n, edges.iter().map(|e| e.iter().copied())).expect("fixture is well formed")
}

/// Eleven vertices in six units `{1,2} {3,4} {5,6,7} {8,9} {10} {11}`.
pub fn units_example() -> Hypergraph {
    build(
        11,
        &[
            &[1, 2, 5, 6, 7, 10, 11],
            &[1, 2, 3, 4],
            &[3, 4, 10],
            &[5, 6, 7, 8, 9],
            &[8, 9, 10, 11],
        ],
    )
}

/// Seven vertices; `{1..6}` induces a 3-uniform cycle, vertex 7 is in every edge.
pub fn induced_cycle_example() -> Hypergraph {
    build(
        7,
        &[
            &[1, 2, 3, 7],
            &[2, 3, 4, 7],
            &[3, 4, 5, 7],
            &[4, 5, 6, 7],
            &[5, 6, 1, 7],
            &[6, 1, 2, 7],
        ],
    )
}

/// Eight vertices; `{1..6}` induces `C_6^4`.
pub fn three_set_cycle_example() -> Hypergraph {
    build(
        8,
        &[
            &[1, 2, 3, 4, 7],
            &[2, 3, 4, 5, 8],
            &[3, 4, 5, 6],
            &[4, 5, 6, 1],
            &[5, 6, 1, 2],
            &[6, 1, 2, 3],
        ],
    )
}

/// `{1,5}` and `{2,3,4}` meet every edge equally often.
pub fn equal_partition_example() -> Hypergraph {
    build(5, &[&[1, 2, 3, 5], &[1, 3, 4, 5], &[1, 2, 4, 5]])
}

/// `{1,2}` and `{3,4,5}` meet every edge in ratio 1:2.
pub fn ratio_example() -> Hypergraph {
    build(5, &[&[1, 3, 4], &[2, 4, 5]])
}

/// `U={3,4,5}, V={6}, W={1,2}` satisfy `|e∩U|-|e∩V| = 2|e∩W|`.
pub fn three_set_example() -> Hypergraph {
    build(6, &[&[1, 3, 4], &[2, 4, 5], &[1, 3, 4, 5, 6]])
}

/// Carries the kernel vector `χ{1,6} - χ{2} + ½χ{4} - ½χ{3} - 3/2χ{5}`.
pub fn general_combination_example() -> Hypergraph {
    build(6, &[&[1, 5, 3, 6], &[1, 2], &[2, 6], &[3, 4], &[4, 5, 6]])
}

/// Four triangles sharing vertex 1; `{e1,e3}`, `{e2,e4}` split every star evenly.
pub fn equal_vertex_partition_example() -> Hypergraph {
    build(5, &[&[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 2]])
}

/// The complete graph on four vertices, with `e1={1,2}`, `e2={3,4}` a perfect matching.
pub fn k4() -> Hypergraph {
    build(4, &[&[1, 2], &[3, 4], &[1, 3], &[1, 4], &[2, 3], &[2, 4]])
}

/// Three 3-edges through vertex 1; `{2,3,4}` is a symmetric class that is not a unit.
pub fn symmetric_class_example() -> Hypergraph {
    build(4, &[&[1, 2, 3], &[1, 3, 4], &[1, 4, 2]])
}

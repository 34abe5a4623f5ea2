//! Inputs shared by the benchmarks.

use cmt_core::bigraph::BipartiteGraph;
use cmt_core::construct::{expand, Expansion};

/// A Cohen-Macaulay chain on `d` pairs: `x_i y_j` for every `i ≤ j`.
pub fn staircase(d: usize) -> BipartiteGraph {
    BipartiteGraph::indexed(d, (0..d).flat_map(|i| (i..d).map(move |j| (i, j)))).expect("staircase is well formed")
}

/// `staircase(multiplicities.len())` with each pair expanded to a complete block.
pub fn expanded_staircase(multiplicities: &[usize]) -> BipartiteGraph {
    let e = Expansion::new(staircase(multiplicities.len()), multiplicities.to_vec()).expect("staircase is unmixed");
    expand(&e).expect("expansion fits").graph
}

/// Graphs small enough for the homological oracle, with their labels.
pub fn oracle_inputs() -> Vec<(&'static str, BipartiteGraph)> {
    vec![
        ("fig1", cmt_core::fixtures::fig1()),
        ("fig3", cmt_core::fixtures::fig3()),
        ("k44", BipartiteGraph::complete(4).expect("complete graph")),
        ("staircase5", staircase(5)),
    ]
}

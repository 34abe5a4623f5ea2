//! Built-in graphs: the drawn examples fig1, fig2, fig3 plus a few
//! small reference graphs. Each fixture file documents its transcription.

use crate::bigraph::{parse_graph, BipartiteGraph};

pub const FIG1: &str = include_str!("../fixtures/fig1.graph");
pub const FIG2: &str = include_str!("../fixtures/fig2.graph");
pub const FIG3: &str = include_str!("../fixtures/fig3.graph");
pub const K22: &str = include_str!("../fixtures/k22.graph");
pub const CHAIN: &str = include_str!("../fixtures/chain.graph");
pub const HEXAGON: &str = include_str!("../fixtures/hexagon.graph");

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 6] = ["fig1", "fig2", "fig3", "k22", "chain", "hexagon"];

/// Source text of a built-in graph.
pub fn builtin_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "fig1" => FIG1,
        "fig2" => FIG2,
        "fig3" => FIG3,
        "k22" => K22,
        "chain" => CHAIN,
        "hexagon" => HEXAGON,
        _ => return None,
    })
}

pub fn builtin(name: &str) -> Option<BipartiteGraph> {
    builtin_source(name).map(|src| parse_graph(src).expect("built-in fixture parses"))
}

pub fn fig1() -> BipartiteGraph {
    builtin("fig1").unwrap()
}

pub fn fig2() -> BipartiteGraph {
    builtin("fig2").unwrap()
}

pub fn fig3() -> BipartiteGraph {
    builtin("fig3").unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_parse() {
        for name in BUILTIN_NAMES {
            assert!(builtin(name).is_some(), "{name}");
        }
        assert!(builtin("fig4").is_none());
    }

    #[test]
    fn fixture_edge_counts() {
        assert_eq!(fig1().num_edges(), 13);
        assert_eq!(fig2().num_edges(), 8);
        assert_eq!(fig3().num_edges(), 12);
    }
}

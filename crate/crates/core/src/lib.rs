//! Cohen-Macaulayness in codimension for bipartite graphs.
//!
//! A bipartite graph `G` is CM_t when its independence complex is pure and the
//! link of every face with at least `t` vertices is Cohen-Macaulay. The crate
//! computes the least such `t` two ways: structurally from a pure order and its
//! complete bipartite blocks, and by brute-force homology of links.

pub mod bigraph;
pub mod classify;
pub mod complex;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod fixtures;

pub use bigraph::{
    cross_blocks, find_pure_order, is_unmixed, parse_graph, write_graph, BipartiteGraph, BlockDecomposition, PureOrder,
};
pub use classify::{
    classify, disjoint_union_codim, macaulay_order, verify_against_oracle, CmtClassification, UnionCodim,
};
pub use complex::{independence_complex, oracle_report, OracleReport, SimplicialComplex};
pub use construct::{contract, expand, predicted_codim, Expansion};
pub use enumerate::{canonical_form, enumerate_cm, enumerate_sharp_cmt, enumerate_unmixed, CanonicalForm};
pub use error::{Error, Result};

//! Structural CM_t classification of unmixed bipartite graphs.
//!
//! For an unmixed bipartite graph with `d` matched pairs, the pure order's
//! cross relation splits the pairs into maximal `K_{n,n}` blocks. If every
//! block is a single pair the graph is Cohen-Macaulay; otherwise, with `n`
//! the smallest block size above one, the graph is CM_{d-n+1} and not
//! CM_{d-n}. No homology is computed here; [`verify_against_oracle`] compares
//! the verdict with the oracle in [`crate::complex`].

use serde::Serialize;

use crate::bigraph::{cross_blocks, find_pure_order, BipartiteGraph, BlockDecomposition, PureOrder};
use crate::complex::independence_complex;
use crate::error::{Error, Result};

/// The structural verdict on one graph. Fields after `unmixed` are `None`
/// for graphs that are not unmixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmtClassification {
    pub unmixed: bool,
    /// Number of matched pairs; the graph has dimension `d - 1`.
    pub d: Option<usize>,
    pub dimension: Option<i64>,
    pub block_sizes: Option<Vec<usize>>,
    pub n_min: Option<usize>,
    pub t_sharp: Option<usize>,
    pub buchsbaum: Option<bool>,
    pub cohen_macaulay: Option<bool>,
    /// Left vertices of a Macaulay order, when the graph is Cohen-Macaulay.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub macaulay_order: Option<Vec<String>>,
    /// Matched pairs of the pure order used.
    pub pure_order: Option<Vec<(String, String)>>,
    /// Left vertices of every block attaining `n_min`.
    pub minimal_blocks: Option<Vec<Vec<String>>>,
}

impl CmtClassification {
    fn mixed() -> Self {
        CmtClassification {
            unmixed: false,
            d: None,
            dimension: None,
            block_sizes: None,
            n_min: None,
            t_sharp: None,
            buchsbaum: None,
            cohen_macaulay: None,
            macaulay_order: None,
            pure_order: None,
            minimal_blocks: None,
        }
    }
}

/// Sharp codimension from block data: `0` when cross-free, else `d - n_min + 1`.
pub fn sharp_codim(d: usize, blocks: &BlockDecomposition) -> usize {
    match blocks.min_nontrivial() {
        None => 0,
        Some(n) => d - n + 1,
    }
}

/// A relabeling of the pair indices under which every edge `x_i y_j` has `i ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayOrder {
    order: Vec<usize>,
}

impl MacaulayOrder {
    /// Pair indices (0-based, into the pure order) in Macaulay order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Checks `i ≤ j` for every edge after relabeling.
    pub fn is_valid_for(&self, g: &BipartiteGraph, po: &PureOrder) -> bool {
        let d = po.len();
        let mut position = vec![usize::MAX; d];
        for (p, &i) in self.order.iter().enumerate() {
            if i >= d || position[i] != usize::MAX {
                return false;
            }
            position[i] = p;
        }
        if self.order.len() != d {
            return false;
        }
        let rel = po.relation(g);
        (0..d).all(|i| (0..d).all(|j| rel[i] >> j & 1 == 0 || position[i] <= position[j]))
    }
}

/// Kahn's algorithm on `i → j` for edges `x_i y_j`, smallest index first.
/// `None` if the relation has a cycle.
fn topological_order(rel: &[u64]) -> Option<Vec<usize>> {
    let d = rel.len();
    let mut indegree: Vec<u32> =
        (0..d).map(|j| (0..d).filter(|&i| i != j && rel[i] >> j & 1 == 1).count() as u32).collect();
    let mut done = vec![false; d];
    let mut order = Vec::with_capacity(d);
    while order.len() < d {
        let next = (0..d).find(|&i| !done[i] && indegree[i] == 0)?;
        done[next] = true;
        order.push(next);
        for (j, deg) in indegree.iter_mut().enumerate() {
            if j != next && rel[next] >> j & 1 == 1 {
                *deg -= 1;
            }
        }
    }
    Some(order)
}

fn macaulay_order_from(
    g: &BipartiteGraph,
    po: &PureOrder,
    blocks: &BlockDecomposition,
) -> Result<Option<MacaulayOrder>> {
    if !blocks.is_cross_free() {
        return Ok(None);
    }
    let order = topological_order(&po.relation(g))
        .ok_or_else(|| Error::Consistency("cross-free pure order with a cyclic relation".into()))?;
    Ok(Some(MacaulayOrder { order }))
}

/// A Macaulay order when the graph is Cohen-Macaulay, `None` when it has crosses.
pub fn macaulay_order(g: &BipartiteGraph) -> Result<Option<MacaulayOrder>> {
    let po = find_pure_order(g)?.ok_or(Error::NotUnmixed)?;
    let blocks = cross_blocks(g, &po)?;
    macaulay_order_from(g, &po, &blocks)
}

/// Classifies `g` by its pure order and block decomposition.
pub fn classify(g: &BipartiteGraph) -> Result<CmtClassification> {
    let Some(po) = find_pure_order(g)? else {
        return Ok(CmtClassification::mixed());
    };
    let blocks = cross_blocks(g, &po)?;
    let d = po.len();
    let t_sharp = sharp_codim(d, &blocks);
    let n_min = blocks.min_nontrivial();
    let left_name = |k: usize| g.left()[po.pairs()[k].0].clone();
    let macaulay = macaulay_order_from(g, &po, &blocks)?;
    let minimal_blocks = blocks
        .blocks()
        .iter()
        .filter(|b| Some(b.len()) == n_min)
        .map(|b| b.iter().map(|&k| left_name(k)).collect())
        .collect();
    Ok(CmtClassification {
        unmixed: true,
        d: Some(d),
        dimension: Some(d as i64 - 1),
        block_sizes: Some(blocks.block_sizes()),
        n_min,
        t_sharp: Some(t_sharp),
        buchsbaum: Some(t_sharp <= 1),
        cohen_macaulay: Some(t_sharp == 0),
        macaulay_order: macaulay.map(|m| m.order.iter().map(|&k| left_name(k)).collect()),
        pure_order: Some(po.pairs().iter().map(|&(x, y)| (g.left()[x].clone(), g.right()[y].clone())).collect()),
        minimal_blocks: Some(minimal_blocks),
    })
}

/// Buchsbaum (CM_1) test for an unmixed graph.
pub fn is_buchsbaum(g: &BipartiteGraph) -> Result<bool> {
    let c = classify(g)?;
    c.t_sharp.map(|t| t <= 1).ok_or(Error::NotUnmixed)
}

/// Result of [`disjoint_union_codim`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnionCodim {
    pub value: usize,
    /// `false` when `value` is only an upper bound.
    pub sharp: bool,
}

/// CM_t arithmetic for `G ⊔ G'`, with `G` of dimension `d - 1` and sharp codimension
/// `r`, `G'` of dimension `d' - 1` and sharp codimension `r'`.
///
/// Both Cohen-Macaulay gives `0`; exactly one Cohen-Macaulay gives the sharp
/// value `d + r'` (or `d' + r`); otherwise `max{d + r', d' + r}` is returned as
/// an upper bound.
pub fn disjoint_union_codim(d: i64, r: i64, d_other: i64, r_other: i64) -> Result<UnionCodim> {
    if d < 1 || d_other < 1 {
        return Err(Error::InvalidArgument(format!("pair counts must be at least 1, got {d} and {d_other}")));
    }
    if r < 0 || r_other < 0 {
        return Err(Error::InvalidArgument(format!("codimensions must be nonnegative, got {r} and {r_other}")));
    }
    let (value, sharp) = match (r, r_other) {
        (0, 0) => (0, true),
        (0, _) => (d + r_other, true),
        (_, 0) => (d_other + r, true),
        _ => ((d + r_other).max(d_other + r), false),
    };
    Ok(UnionCodim { value: value as usize, sharp })
}

/// Outcome of comparing the structural and homological verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerificationStatus {
    Agreement,
    Disagreement,
    /// The graph has isolated vertices, so only the oracle ran.
    OutsideHypothesis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub pure: bool,
    pub dimension: i64,
    pub cm_codim: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub status: VerificationStatus,
    pub structural: Option<CmtClassification>,
    pub oracle: OracleVerdict,
    pub mismatches: Vec<String>,
}

/// Runs [`classify`] and the homological oracle on `Ind(g)` and compares them.
pub fn verify_against_oracle(g: &BipartiteGraph) -> VerificationReport {
    let complex = independence_complex(g);
    let oracle = OracleVerdict {
        pure: complex.is_pure(),
        dimension: complex.dim().expect("an independence complex has the empty face"),
        cm_codim: complex.cm_codim(),
    };
    let structural = match classify(g) {
        Ok(c) => c,
        Err(e) => {
            let status = match e {
                Error::IsolatedVertex(_) => VerificationStatus::OutsideHypothesis,
                _ => VerificationStatus::Disagreement,
            };
            let mismatches = match status {
                VerificationStatus::Disagreement => vec![format!("structural classification failed: {e}")],
                _ => Vec::new(),
            };
            return VerificationReport { status, structural: None, oracle, mismatches };
        }
    };
    let mut mismatches = Vec::new();
    if structural.unmixed != oracle.pure {
        mismatches.push(format!("unmixed={} but oracle purity={}", structural.unmixed, oracle.pure));
    }
    if let Some(dim) = structural.dimension {
        if dim != oracle.dimension {
            mismatches.push(format!("dimension {dim} but oracle dimension {}", oracle.dimension));
        }
    }
    if structural.t_sharp != oracle.cm_codim {
        mismatches.push(format!("t_sharp={:?} but oracle cm_codim={:?}", structural.t_sharp, oracle.cm_codim));
    }
    let status = if mismatches.is_empty() { VerificationStatus::Agreement } else { VerificationStatus::Disagreement };
    VerificationReport { status, structural: Some(structural), oracle, mismatches }
}

/// Summary of an exhaustive cross-check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveVerification {
    pub d: usize,
    pub instances: usize,
    pub agreements: usize,
    /// Graph documents of every disagreeing instance.
    pub counterexamples: Vec<String>,
}

impl ExhaustiveVerification {
    pub fn all_agree(&self) -> bool {
        self.counterexamples.is_empty() && self.agreements == self.instances
    }
}

/// Compares classifier and oracle on every unmixed graph with `d` pairs.
pub fn verify_exhaustive(d: usize) -> Result<ExhaustiveVerification> {
    let graphs = crate::enumerate::enumerate_unmixed(d)?;
    let mut agreements = 0;
    let mut counterexamples = Vec::new();
    for g in &graphs {
        let report = verify_against_oracle(g);
        if report.status == VerificationStatus::Agreement {
            agreements += 1;
        } else {
            counterexamples.push(crate::bigraph::write_graph(g));
        }
    }
    Ok(ExhaustiveVerification { d, instances: graphs.len(), agreements, counterexamples })
}

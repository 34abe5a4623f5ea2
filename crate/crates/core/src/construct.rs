//! Expansion of matched edges into complete bipartite blocks, and the
//! inverse contraction to the Cohen-Macaulay base graph.
//!
//! Expanding pair `i` of a base graph with multiplicity `n_i` replaces
//! `x_i, y_i` by `x_i_1 … x_i_{n_i}` and `y_i_1 … y_i_{n_i}`, joins them by a
//! complete bipartite graph, and copies every other adjacency of `x_i` and
//! `y_i` to all of their copies.

use crate::bigraph::{cross_blocks, find_pure_order, BipartiteGraph, PureOrder};
use crate::classify::sharp_codim;
use crate::enumerate::{canonical_form, CANONICAL_SIDE_LIMIT};
use crate::error::{Error, Result};

/// A base graph with a pure order and one multiplicity per matched pair.
///
/// Multiplicities follow the pure order, which lists pairs by left vertex,
/// so `multiplicities[k]` belongs to the `k`-th left vertex of the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    base: BipartiteGraph,
    order: PureOrder,
    multiplicities: Vec<usize>,
}

impl Expansion {
    /// Finds a pure order of `base` and attaches `multiplicities` to it.
    pub fn new(base: BipartiteGraph, multiplicities: Vec<usize>) -> Result<Self> {
        let order = find_pure_order(&base)?.ok_or(Error::NotUnmixed)?;
        Self::with_order(base, order, multiplicities)
    }

    pub fn with_order(base: BipartiteGraph, order: PureOrder, multiplicities: Vec<usize>) -> Result<Self> {
        order.check(&base).map_err(Error::Consistency)?;
        if multiplicities.len() != order.len() {
            return Err(Error::MultiplicityLength { expected: order.len(), found: multiplicities.len() });
        }
        if multiplicities.contains(&0) {
            return Err(Error::NonPositiveMultiplicity(0));
        }
        Ok(Expansion { base, order, multiplicities })
    }

    pub fn base(&self) -> &BipartiteGraph {
        &self.base
    }

    pub fn order(&self) -> &PureOrder {
        &self.order
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// `Σ n_i`, the number of matched pairs after expansion.
    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

/// An expanded graph with the pure order induced from the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expanded {
    pub graph: BipartiteGraph,
    pub order: PureOrder,
}

/// Builds `G(n_1, …, n_d)`. Both sides of the result are listed in pair order,
/// so the induced pure order pairs the `k`-th left vertex with the `k`-th right one.
pub fn expand(e: &Expansion) -> Result<Expanded> {
    let base = &e.base;
    let pairs = e.order.pairs();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut owner = Vec::new();
    for (pair, (&(x, y), &n)) in pairs.iter().zip(&e.multiplicities).enumerate() {
        for k in 1..=n {
            left.push(format!("{}_{k}", base.left()[x]));
            right.push(format!("{}_{k}", base.right()[y]));
            owner.push(pair);
        }
    }
    let total = left.len();
    if total > crate::bigraph::MAX_SIDE {
        return Err(Error::SizeGuard(format!("expansion with {total} pairs exceeds the side limit")));
    }
    let rel = e.order.relation(base);
    let adj = (0..total)
        .map(|a| (0..total).filter(|&b| rel[owner[a]] >> owner[b] & 1 == 1).fold(0u64, |acc, b| acc | 1 << b))
        .collect();
    let graph = BipartiteGraph::from_adjacency(left, right, adj)?;
    let order = PureOrder::new(&graph, (0..total).map(|k| (k, k)).collect())?;
    Ok(Expanded { graph, order })
}

/// Collapses every maximal `K_{n,n}` block of an unmixed graph to one edge.
///
/// The base keeps the smallest-index pair of each block as representative and
/// is cross-free, hence Cohen-Macaulay. The result is checked to be
/// independent of the representative choice.
pub fn contract(g: &BipartiteGraph) -> Result<Expansion> {
    let po = find_pure_order(g)?.ok_or(Error::NotUnmixed)?;
    let blocks = cross_blocks(g, &po)?;
    let pairs = po.pairs();

    // Adjacency between blocks is all-or-nothing, so any representatives give the same base.
    for a in blocks.blocks() {
        for b in blocks.blocks() {
            let first = g.has_edge(pairs[a[0]].0, pairs[b[0]].1);
            if a.iter().any(|&i| b.iter().any(|&j| g.has_edge(pairs[i].0, pairs[j].1) != first)) {
                return Err(Error::Consistency("adjacency between two blocks is not uniform".into()));
            }
        }
    }

    let pick = |choose: fn(&[usize]) -> usize| -> BipartiteGraph {
        let reps: Vec<usize> = blocks.blocks().iter().map(|b| choose(b)).collect();
        let left: Vec<usize> = reps.iter().map(|&k| pairs[k].0).collect();
        let right: Vec<usize> = reps.iter().map(|&k| pairs[k].1).collect();
        g.induced(&left, &right)
    };
    let base = pick(|b| b[0]);
    let other = pick(|b| b[b.len() - 1]);
    if base.left().len() <= CANONICAL_SIDE_LIMIT && canonical_form(&base)? != canonical_form(&other)? {
        return Err(Error::Consistency("contraction depends on the chosen representatives".into()));
    }

    let d = base.left().len();
    let order = PureOrder::new(&base, (0..d).map(|k| (k, k)).collect())?;
    if !cross_blocks(&base, &order)?.is_cross_free() {
        return Err(Error::Consistency("contracted base has a cross".into()));
    }
    Expansion::with_order(base, order, blocks.block_sizes())
}

/// Sharp codimension of `expand(e)` for a Cohen-Macaulay base: `0` when all
/// multiplicities are one, else `Σ n_i - min{n_i > 1} + 1`.
pub fn predicted_codim(e: &Expansion) -> Result<usize> {
    if !cross_blocks(&e.base, &e.order)?.is_cross_free() {
        return Err(Error::BaseNotCohenMacaulay);
    }
    Ok(match e.multiplicities.iter().copied().filter(|&n| n > 1).min() {
        None => 0,
        Some(smallest) => e.total() - smallest + 1,
    })
}

/// Same value through the block decomposition of the expanded graph.
pub fn expanded_codim(e: &Expansion) -> Result<usize> {
    let ex = expand(e)?;
    let blocks = cross_blocks(&ex.graph, &ex.order)?;
    Ok(sharp_codim(ex.order.len(), &blocks))
}

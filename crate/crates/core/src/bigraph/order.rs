//! Pure orders (perfect matchings satisfying the transitivity condition that
//! characterises unmixed bipartite graphs) and the cross-relation block
//! decomposition they induce.

use super::BipartiteGraph;
use crate::error::{Error, Result};

/// A perfect matching `x_i ↔ y_i` witnessing unmixedness.
///
/// `pairs[k] = (left index, right index)`; pairs are listed in left-side order,
/// so position `k` is the pair index `i` in `x_i y_i`. Two conditions hold:
///
/// 1. every pair is an edge and every vertex appears in exactly one pair;
/// 2. for distinct `i, j, k`, edges `x_i y_j` and `x_j y_k` force `x_i y_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PureOrder {
    pairs: Vec<(usize, usize)>,
}

impl PureOrder {
    /// Validates `pairs` against `g` and wraps them.
    pub fn new(g: &BipartiteGraph, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let po = PureOrder { pairs };
        po.check(g).map_err(Error::Consistency)?;
        Ok(po)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of matched pairs `d`; the graph has dimension `d - 1`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pair-index relation: bit `j` of entry `i` is set iff `x_i y_j` is an edge.
    pub fn relation(&self, g: &BipartiteGraph) -> Vec<u64> {
        self.pairs
            .iter()
            .map(|&(x, _)| {
                self.pairs
                    .iter()
                    .enumerate()
                    .filter(|(_, &(_, y))| g.has_edge(x, y))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect()
    }

    /// Re-checks both conditions by direct enumeration.
    pub fn check(&self, g: &BipartiteGraph) -> std::result::Result<(), String> {
        let d = self.pairs.len();
        if g.left().len() != d || g.right().len() != d {
            return Err(format!("{d} pairs cannot cover sides of size {} and {}", g.left().len(), g.right().len()));
        }
        let mut seen_l = vec![false; d];
        let mut seen_r = vec![false; d];
        for &(x, y) in &self.pairs {
            if x >= d || y >= d || std::mem::replace(&mut seen_l[x], true) || std::mem::replace(&mut seen_r[y], true) {
                return Err("pairs do not form a bijection between the sides".into());
            }
            if !g.has_edge(x, y) {
                return Err(format!("{}-{} is not an edge", g.left()[x], g.right()[y]));
            }
        }
        let edge = |i: usize, j: usize| g.has_edge(self.pairs[i].0, self.pairs[j].1);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if i != j && j != k && i != k && edge(i, j) && edge(j, k) && !edge(i, k) {
                        return Err(format!("transitivity fails for pair indices {}, {}, {}", i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        Ok(())
    }
}

fn transitive(rel: &[u64]) -> bool {
    rel.iter().enumerate().all(|(i, &row)| {
        (0..rel.len()).filter(|&j| j != i && row >> j & 1 == 1).all(|j| rel[j] & !(1 << i) & !(1 << j) & !row == 0)
    })
}

struct Search<'a> {
    g: &'a BipartiteGraph,
    order: Vec<usize>,
    partner: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Option<PureOrder> {
        if depth == self.order.len() {
            let po = PureOrder { pairs: self.partner.iter().copied().enumerate().collect() };
            return transitive(&po.relation(self.g)).then_some(po);
        }
        let x = self.order[depth];
        let mut options = self.g.left_neighbours(x) & !self.used;
        while options != 0 {
            let y = options.trailing_zeros() as usize;
            options &= options - 1;
            self.partner[x] = y;
            self.used |= 1 << y;
            if let Some(po) = self.run(depth + 1) {
                return Some(po);
            }
            self.used &= !(1 << y);
        }
        None
    }
}

/// Searches every perfect matching of `g` for one satisfying the transitivity condition.
///
/// Isolated vertices put the graph outside the scope of the structural tests and are an
/// error; unequal sides simply admit no perfect matching.
pub fn find_pure_order(g: &BipartiteGraph) -> Result<Option<PureOrder>> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v.to_string()));
    }
    let d = g.left().len();
    if d != g.right().len() {
        return Ok(None);
    }
    // Fewest candidate partners first.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by_key(|&i| g.left_neighbours(i).count_ones());
    let mut search = Search { g, order, partner: vec![0; d], used: 0 };
    Ok(search.run(0))
}

/// True iff `g` has a pure order, i.e. `Ind(g)` is pure.
pub fn is_unmixed(g: &BipartiteGraph) -> Result<bool> {
    Ok(find_pure_order(g)?.is_some())
}

/// Partition of the pair indices into maximal complete bipartite blocks.
///
/// Indices `i ≠ j` share a block iff `x_i y_j` and `x_j y_i` are both edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Blocks of 0-based pair indices; each sorted, ordered by smallest member.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn is_cross_free(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Smallest block size `≥ 2`, if any block is nontrivial.
    pub fn min_nontrivial(&self) -> Option<usize> {
        self.blocks.iter().map(Vec::len).filter(|&n| n >= 2).min()
    }
}

/// Computes the cross-relation classes of a pure order.
///
/// Transitivity of the cross relation follows from the pure-order condition; a
/// class that is not a clique of crosses is reported as a consistency error.
pub fn cross_blocks(g: &BipartiteGraph, po: &PureOrder) -> Result<BlockDecomposition> {
    let rel = po.relation(g);
    let d = rel.len();
    let cross: Vec<u64> = (0..d)
        .map(|i| (0..d).filter(|&j| rel[i] >> j & 1 == 1 && rel[j] >> i & 1 == 1).fold(0u64, |acc, j| acc | 1 << j))
        .collect();
    if (0..d).any(|i| cross[i] >> i & 1 == 0) {
        return Err(Error::Consistency("a matched pair is not an edge".into()));
    }
    let mut assigned = 0u64;
    let mut blocks = Vec::new();
    for i in 0..d {
        if assigned >> i & 1 == 1 {
            continue;
        }
        let class = cross[i];
        let members: Vec<usize> = (0..d).filter(|&j| class >> j & 1 == 1).collect();
        if let Some(&j) = members.iter().find(|&&j| cross[j] != class) {
            return Err(Error::Consistency(format!(
                "cross relation is not transitive at pair indices {} and {}",
                i + 1,
                j + 1
            )));
        }
        assigned |= class;
        blocks.push(members);
    }
    Ok(BlockDecomposition { blocks })
}

//! Bipartite graphs with named vertices.
//!
//! A [`BipartiteGraph`] keeps its two sides as ordered lists of opaque
//! string identifiers and stores adjacency as one bitmask of right-side
//! neighbours per left vertex, so every side is capped at [`MAX_SIDE`]
//! vertices. Desk-scale inputs sit far below that bound.

mod format;
mod order;

pub use format::{parse_document, parse_graph, write_document, write_graph, GraphDocument};
pub use order::{cross_blocks, find_pure_order, is_unmixed, BlockDecomposition, PureOrder};

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of vertices allowed on one side.
pub const MAX_SIDE: usize = 64;

/// Which side of the bipartition a vertex sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// A vertex reference: side plus position within that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

/// A simple bipartite graph on two ordered, named vertex sides.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    left: Vec<String>,
    right: Vec<String>,
    /// `adj[i]` has bit `j` set iff left vertex `i` is adjacent to right vertex `j`.
    adj: Vec<u64>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn check_names(left: &[String], right: &[String]) -> Result<()> {
    if left.len() > MAX_SIDE || right.len() > MAX_SIDE {
        return Err(Error::SizeGuard(format!("sides of size {} and {} exceed {MAX_SIDE}", left.len(), right.len())));
    }
    let mut seen = HashSet::new();
    for name in left.iter().chain(right) {
        if !valid_name(name) {
            return Err(Error::InvalidName(name.clone()));
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateVertex(name.clone()));
        }
    }
    Ok(())
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BipartiteGraph {
    /// Builds a graph from side lists and `(left, right)` edges given by name.
    pub fn new<L, R>(left: L, right: R, edges: &[(&str, &str)]) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        R: IntoIterator,
        R::Item: Into<String>,
    {
        let left: Vec<String> = left.into_iter().map(Into::into).collect();
        let right: Vec<String> = right.into_iter().map(Into::into).collect();
        check_names(&left, &right)?;
        let mut g = BipartiteGraph { adj: vec![0; left.len()], left, right };
        for &(u, v) in edges {
            g.add_edge_by_name(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from side lists and an adjacency bitmask per left vertex.
    pub fn from_adjacency(left: Vec<String>, right: Vec<String>, adj: Vec<u64>) -> Result<Self> {
        check_names(&left, &right)?;
        if adj.len() != left.len() {
            return Err(Error::Consistency(format!("{} adjacency rows for {} left vertices", adj.len(), left.len())));
        }
        let spill = !low_mask(right.len());
        if adj.iter().any(|row| row & spill != 0) {
            return Err(Error::Consistency("adjacency row addresses a missing right vertex".into()));
        }
        Ok(BipartiteGraph { left, right, adj })
    }

    /// Graph on `x1..xd`, `y1..yd` with edges `x_i y_j` for every `(i, j)` (0-based) in `edges`.
    pub fn indexed(d: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let left = (1..=d).map(|i| format!("x{i}")).collect();
        let right = (1..=d).map(|i| format!("y{i}")).collect();
        let mut adj = vec![0u64; d];
        for (i, j) in edges {
            if i >= d || j >= d {
                return Err(Error::InvalidArgument(format!("edge ({i}, {j}) outside {d} pairs")));
            }
            adj[i] |= 1 << j;
        }
        Self::from_adjacency(left, right, adj)
    }

    /// The complete bipartite graph `K_{n,n}` on `x1..xn`, `y1..yn`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::indexed(n, (0..n).flat_map(|i| (0..n).map(move |j| (i, j))))
    }

    fn add_edge_by_name(&mut self, u: &str, v: &str) -> Result<()> {
        let (i, j) = match (self.vertex(u), self.vertex(v)) {
            (Some(a), Some(b)) if a.side == Side::Left && b.side == Side::Right => (a.index, b.index),
            (Some(_), Some(_)) => {
                return Err(Error::WrongSide { left: u.into(), right: v.into() });
            }
            (None, _) => return Err(Error::UnknownVertex(u.into())),
            (_, None) => return Err(Error::UnknownVertex(v.into())),
        };
        if self.adj[i] >> j & 1 == 1 {
            return Err(Error::DuplicateEdge(u.into(), v.into()));
        }
        self.adj[i] |= 1 << j;
        Ok(())
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn num_vertices(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Right-side neighbours of left vertex `i`, as a bitmask.
    pub fn left_neighbours(&self, i: usize) -> u64 {
        self.adj[i]
    }

    /// Left-side neighbours of right vertex `j`, as a bitmask.
    pub fn right_neighbours(&self, j: usize) -> u64 {
        self.adj.iter().enumerate().filter(|(_, row)| *row >> j & 1 == 1).fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    /// Edges as `(left index, right index)`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| (0..self.right.len()).filter(move |&j| row >> j & 1 == 1).map(move |j| (i, j)))
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        if let Some(index) = self.left.iter().position(|n| n == name) {
            return Some(Vertex { side: Side::Left, index });
        }
        self.right.iter().position(|n| n == name).map(|index| Vertex { side: Side::Right, index })
    }

    pub fn name(&self, v: Vertex) -> &str {
        match v.side {
            Side::Left => &self.left[v.index],
            Side::Right => &self.right[v.index],
        }
    }

    /// First isolated vertex in side order, if any.
    pub fn isolated_vertex(&self) -> Option<&str> {
        if let Some(i) = self.adj.iter().position(|&row| row == 0) {
            return Some(&self.left[i]);
        }
        let covered = self.adj.iter().fold(0u64, |acc, row| acc | row);
        (0..self.right.len()).find(|&j| covered >> j & 1 == 0).map(|j| self.right[j].as_str())
    }

    /// Swaps the two sides.
    pub fn transpose(&self) -> Self {
        let adj = (0..self.right.len()).map(|j| self.right_neighbours(j)).collect();
        BipartiteGraph { left: self.right.clone(), right: self.left.clone(), adj }
    }

    /// Same graph with both vertex orders reversed.
    pub fn reversed(&self) -> Self {
        let (l, r) = (self.left.len(), self.right.len());
        let adj = (0..l)
            .rev()
            .map(|i| (0..r).filter(|&j| self.has_edge(i, j)).fold(0u64, |acc, j| acc | 1 << (r - 1 - j)))
            .collect();
        BipartiteGraph {
            left: self.left.iter().rev().cloned().collect(),
            right: self.right.iter().rev().cloned().collect(),
            adj,
        }
    }

    /// Induced subgraph on the given left and right positions, in the given order.
    pub fn induced(&self, left: &[usize], right: &[usize]) -> Self {
        let adj = left
            .iter()
            .map(|&i| {
                right.iter().enumerate().filter(|(_, &j)| self.has_edge(i, j)).fold(0u64, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        BipartiteGraph {
            left: left.iter().map(|&i| self.left[i].clone()).collect(),
            right: right.iter().map(|&j| self.right[j].clone()).collect(),
            adj,
        }
    }

    /// Prepends `prefix` to every vertex name.
    pub fn with_prefix(&self, prefix: &str) -> Result<Self> {
        let rename = |v: &[String]| v.iter().map(|n| format!("{prefix}{n}")).collect();
        Self::from_adjacency(rename(&self.left), rename(&self.right), self.adj.clone())
    }

    /// `G ⊔ H`; vertex names must not overlap.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        for name in other.left.iter().chain(&other.right) {
            if self.vertex(name).is_some() {
                return Err(Error::OverlappingVertices(name.clone()));
            }
        }
        let shift = self.right.len();
        if shift + other.right.len() > MAX_SIDE || self.left.len() + other.left.len() > MAX_SIDE {
            return Err(Error::SizeGuard("disjoint union exceeds the side limit".into()));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row << shift));
        let mut left = self.left.clone();
        left.extend(other.left.iter().cloned());
        let mut right = self.right.clone();
        right.extend(other.right.iter().cloned());
        Ok(BipartiteGraph { left, right, adj })
    }

    /// `G ∖ N[v]`: removes `v`, its neighbours and all incident edges.
    /// Vertices left without neighbours stay in the result.
    pub fn delete_closed_neighborhood(&self, name: &str) -> Result<Self> {
        let v = self.vertex(name).ok_or_else(|| Error::UnknownVertex(name.into()))?;
        let (keep_left, keep_right): (Vec<usize>, Vec<usize>) = match v.side {
            Side::Left => (
                (0..self.left.len()).filter(|&i| i != v.index).collect(),
                (0..self.right.len()).filter(|&j| !self.has_edge(v.index, j)).collect(),
            ),
            Side::Right => (
                (0..self.left.len()).filter(|&i| !self.has_edge(i, v.index)).collect(),
                (0..self.right.len()).filter(|&j| j != v.index).collect(),
            ),
        };
        Ok(self.induced(&keep_left, &keep_right))
    }

    /// `K_{n,n}` with `n ≥ 1`: equal sides and every cross-side pair adjacent.
    pub fn is_complete_bipartite(&self) -> bool {
        let n = self.left.len();
        n >= 1 && n == self.right.len() && self.adj.iter().all(|&row| row == low_mask(n))
    }

    pub fn is_connected(&self) -> bool {
        let (l, r) = (self.left.len(), self.right.len());
        if l + r <= 1 {
            return true;
        }
        let (mut seen_l, mut seen_r) = if l > 0 { (1u64, 0u64) } else { (0, 1) };
        loop {
            let grow_r = (0..l).filter(|&i| seen_l >> i & 1 == 1).fold(seen_r, |acc, i| acc | self.adj[i]);
            let grow_l = (0..l).filter(|&i| self.adj[i] & grow_r != 0).fold(seen_l, |acc, i| acc | 1 << i);
            if grow_l == seen_l && grow_r == seen_r {
                break;
            }
            seen_l = grow_l;
            seen_r = grow_r;
        }
        seen_l == low_mask(l) && seen_r == low_mask(r)
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(i, j)| format!("{}-{}", self.left[i], self.right[j])).collect();
        f.debug_struct("BipartiteGraph")
            .field("left", &self.left)
            .field("right", &self.right)
            .field("edges", &edges)
            .finish()
    }
}

impl fmt::Display for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph(self))
    }
}

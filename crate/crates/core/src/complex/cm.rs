//! Cohen-Macaulay and CM_t tests by the face-link criterion.
//!
//! A complex is Cohen-Macaulay over ℚ iff for every face `F` (including `∅`)
//! the reduced homology of `lk(F)` vanishes below `dim lk(F)`. It is CM_t iff
//! it is pure and every face with at least `t` vertices has a Cohen-Macaulay
//! link. Since links of links are links, that reduces to the homology
//! condition on the links of faces of size `≥ t`.

use std::collections::HashMap;

use serde::Serialize;

use super::homology::{faces_by_size, reduced_homology_of};
use super::{independence_complex, SimplicialComplex};
use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};

fn pure(facets: &[u64]) -> bool {
    facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
}

fn link_facets(facets: &[u64], face: u64) -> Vec<u64> {
    let mut out: Vec<u64> = facets.iter().filter(|&&f| f & face == face).map(|&f| f & !face).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Reduced homology of the complex is concentrated in its top dimension.
fn top_concentrated(facets: &[u64]) -> bool {
    let Some(top) = facets.iter().map(|f| f.count_ones() as i64 - 1).max() else {
        return true;
    };
    reduced_homology_of(facets).vanishes_below(top)
}

fn all_faces(facets: &[u64]) -> Vec<u64> {
    if facets.is_empty() {
        return Vec::new();
    }
    faces_by_size(facets).into_iter().flatten().collect()
}

/// Sizes of faces whose links fail the homology condition.
fn bad_face_sizes(facets: &[u64]) -> impl Iterator<Item = usize> + '_ {
    all_faces(facets)
        .into_iter()
        .filter(move |&f| !top_concentrated(&link_facets(facets, f)))
        .map(|f| f.count_ones() as usize)
}

fn cohen_macaulay(facets: &[u64]) -> bool {
    pure(facets) && bad_face_sizes(facets).next().is_none()
}

fn codim_by_vertex_links(facets: Vec<u64>, memo: &mut HashMap<Vec<u64>, Option<usize>>) -> Option<usize> {
    if let Some(&known) = memo.get(&facets) {
        return known;
    }
    let result = if !pure(&facets) {
        None
    } else if cohen_macaulay(&facets) {
        Some(0)
    } else {
        let support = facets.iter().fold(0u64, |acc, f| acc | f);
        let mut worst = Some(0);
        let mut bits = support;
        while bits != 0 {
            let v = bits & bits.wrapping_neg();
            bits &= bits - 1;
            match (worst, codim_by_vertex_links(link_facets(&facets, v), memo)) {
                (Some(w), Some(c)) => worst = Some(w.max(c)),
                _ => worst = None,
            }
        }
        worst.map(|w| w + 1)
    };
    memo.insert(facets, result);
    result
}

impl SimplicialComplex {
    /// Cohen-Macaulay over ℚ, by the face-link homology criterion.
    pub fn is_cohen_macaulay(&self) -> bool {
        cohen_macaulay(&self.facets)
    }

    /// Pure, and every face with at least `t` vertices has a Cohen-Macaulay link.
    /// Negative `t` means `t = 0`.
    pub fn is_cm_t(&self, t: i64) -> bool {
        let t = t.max(0) as usize;
        self.is_pure() && bad_face_sizes(&self.facets).all(|size| size < t)
    }

    /// Least `t` with the complex CM_t, or `None` if it is not pure.
    ///
    /// Computed from the definition: one more than the largest face whose
    /// link has homology below its top dimension.
    pub fn cm_codim(&self) -> Option<usize> {
        if !self.is_pure() {
            return None;
        }
        Some(bad_face_sizes(&self.facets).max().map_or(0, |s| s + 1))
    }

    /// Least `t` by vertex-link recursion: `0` when Cohen-Macaulay, otherwise
    /// `1 + max_v codim(lk v)`.
    pub fn cm_codim_recursive(&self) -> Option<usize> {
        codim_by_vertex_links(self.facets.clone(), &mut HashMap::new())
    }
}

/// Largest graph (total vertices) the oracle report accepts.
pub const ORACLE_VERTEX_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmtEntry {
    pub t: usize,
    pub holds: bool,
}

/// Everything the oracle computes about `Ind(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub vertices: usize,
    pub facet_count: usize,
    pub dimension: i64,
    pub pure: bool,
    /// `f_{-1}, f_0, …`
    pub f_vector: Vec<usize>,
    /// `β̃_{-1}, β̃_0, …` over ℚ.
    pub betti: Vec<usize>,
    pub euler_poincare_holds: bool,
    pub cohen_macaulay: bool,
    pub cm_codim: Option<usize>,
    pub cm_table: Vec<CmtEntry>,
    pub facets: Vec<Vec<String>>,
}

/// Runs the oracle on `Ind(g)`. `max_t` bounds the CM_t table (default `dim + 1`).
pub fn oracle_report(g: &BipartiteGraph, max_t: Option<usize>) -> Result<OracleReport> {
    if g.num_vertices() > ORACLE_VERTEX_LIMIT {
        return Err(Error::SizeGuard(format!(
            "{} vertices exceed the oracle limit of {ORACLE_VERTEX_LIMIT}",
            g.num_vertices()
        )));
    }
    let c = independence_complex(g);
    let dimension = c.dim()?;
    let homology = c.reduced_homology();
    let max_t = max_t.unwrap_or((dimension + 1).max(0) as usize);
    Ok(OracleReport {
        vertices: c.vertices().len(),
        facet_count: c.facet_masks().len(),
        dimension,
        pure: c.is_pure(),
        f_vector: c.f_vector(),
        betti: homology.betti().to_vec(),
        euler_poincare_holds: homology.euler_characteristic() == c.reduced_euler_characteristic(),
        cohen_macaulay: c.is_cohen_macaulay(),
        cm_codim: c.cm_codim(),
        cm_table: (0..=max_t).map(|t| CmtEntry { t, holds: c.is_cm_t(t as i64) }).collect(),
        facets: c.facet_names(),
    })
}

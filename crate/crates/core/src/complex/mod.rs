//! Simplicial complexes given by facets, and the brute-force homological
//! oracle for Cohen-Macaulayness in codimension `t`.
//!
//! Nothing here knows about pure orders or blocks: the oracle decides every
//! property from the definition (links and reduced homology over ℚ), so it
//! can cross-check the structural classifier.

mod cm;
mod homology;

pub use cm::{oracle_report, CmtEntry, OracleReport, ORACLE_VERTEX_LIMIT};
pub use homology::{rational_rank, HomologyProfile};

use std::collections::{BTreeSet, HashSet};

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};

/// A finite simplicial complex on a named vertex set, stored as its facets.
///
/// Two degenerate states are kept apart: the complex with no faces at all
/// ([`SimplicialComplex::void`]) and the complex `{∅}` whose only face is
/// empty ([`SimplicialComplex::irrelevant`]), of dimension `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<u64>,
}

/// Keeps the inclusion-maximal masks, sorted and deduplicated.
fn maximal(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & m == m) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

fn check_vertices(vertices: &[String]) -> Result<()> {
    if vertices.len() > 64 {
        return Err(Error::SizeGuard(format!("{} vertices exceed 64", vertices.len())));
    }
    let mut seen = HashSet::new();
    for v in vertices {
        if !seen.insert(v.as_str()) {
            return Err(Error::DuplicateVertex(v.clone()));
        }
    }
    Ok(())
}

impl SimplicialComplex {
    /// The complex generated by `facets`; non-maximal generators are dropped.
    pub fn from_facets<V, F, S>(vertices: V, facets: &[F]) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        F: AsRef<[S]>,
        S: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        check_vertices(&vertices)?;
        let masks = facets
            .iter()
            .map(|f| {
                f.as_ref().iter().try_fold(0u64, |acc, name| {
                    let name = name.as_ref();
                    let i = vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.into()))?;
                    Ok(acc | 1 << i)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex { vertices, facets: maximal(masks) })
    }

    /// The complex generated by vertex bitmasks over `vertices`.
    pub fn from_masks(vertices: Vec<String>, masks: Vec<u64>) -> Result<Self> {
        check_vertices(&vertices)?;
        let universe = if vertices.len() == 64 { u64::MAX } else { (1u64 << vertices.len()) - 1 };
        if masks.iter().any(|m| m & !universe != 0) {
            return Err(Error::Consistency("facet mask addresses a missing vertex".into()));
        }
        Ok(SimplicialComplex { vertices, facets: maximal(masks) })
    }

    /// The complex with no faces, not even the empty one.
    pub fn void(vertices: Vec<String>) -> Result<Self> {
        Self::from_masks(vertices, Vec::new())
    }

    /// The complex `{∅}`.
    pub fn irrelevant(vertices: Vec<String>) -> Result<Self> {
        Self::from_masks(vertices, vec![0])
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Facets as vertex bitmasks over [`Self::vertices`], sorted.
    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn has_faces(&self) -> bool {
        !self.facets.is_empty()
    }

    fn names(&self, mask: u64) -> Vec<String> {
        let mut v: Vec<String> =
            (0..self.vertices.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.vertices[i].clone()).collect();
        v.sort();
        v
    }

    /// Facets as sorted name lists, themselves sorted.
    pub fn facet_names(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self.facets.iter().map(|&m| self.names(m)).collect();
        out.sort();
        out
    }

    /// Facet set keyed by names; independent of vertex order.
    pub fn facet_set(&self) -> BTreeSet<BTreeSet<String>> {
        self.facets.iter().map(|&m| self.names(m).into_iter().collect()).collect()
    }

    fn mask_of<S: AsRef<str>>(&self, face: &[S]) -> Result<u64> {
        face.iter().try_fold(0u64, |acc, name| {
            let name = name.as_ref();
            let i = self.vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.into()))?;
            Ok(acc | 1 << i)
        })
    }

    /// `(largest facet size) - 1`; `-1` for `{∅}`.
    pub fn dim(&self) -> Result<i64> {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max().ok_or(Error::EmptyComplex)
    }

    /// All facets have one cardinality. Vacuously true without facets.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    /// Every face, as bitmasks, grouped by cardinality (`result[k]` holds the size-`k` faces).
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        homology::faces_by_size(&self.facets)
    }

    /// Face counts `f_{-1}, f_0, …, f_{dim}`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// `Σ_{i ≥ -1} (-1)^i f_i`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        homology::alternating_sum(&self.f_vector())
    }

    pub(crate) fn link_of_mask(&self, face: u64) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace);
        }
        let facets = self.facets.iter().filter(|&&f| f & face == face).map(|&f| f & !face).collect();
        Ok(SimplicialComplex { vertices: self.vertices.clone(), facets: maximal(facets) })
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`, on the same vertex list.
    pub fn link<S: AsRef<str>>(&self, face: &[S]) -> Result<Self> {
        let mask = self.mask_of(face)?;
        self.link_of_mask(mask)
    }

    /// `Δ ∗ Δ'`: unions of one facet from each side. Vertex names must be disjoint.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(v) = other.vertices.iter().find(|v| self.vertices.contains(v)) {
            return Err(Error::OverlappingVertices(v.clone()));
        }
        let shift = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        check_vertices(&vertices)?;
        let facets = self.facets.iter().flat_map(|&a| other.facets.iter().map(move |&b| a | b << shift)).collect();
        Ok(SimplicialComplex { vertices, facets: maximal(facets) })
    }

    /// Reduced Betti numbers over ℚ.
    pub fn reduced_homology(&self) -> HomologyProfile {
        homology::reduced_homology_of(&self.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SimplicialComplex", 2)?;
        let mut vertices = self.vertices.clone();
        vertices.sort();
        s.serialize_field("vertices", &vertices)?;
        s.serialize_field("facets", &self.facet_names())?;
        s.end()
    }
}

/// `Ind(G)`: faces are the independent vertex sets of `g`.
///
/// Vertices are the left side followed by the right side. Facets are the
/// maximal independent sets, found by Bron–Kerbosch with pivoting on the
/// complement graph.
pub fn independence_complex(g: &BipartiteGraph) -> SimplicialComplex {
    let (l, r) = (g.left().len(), g.right().len());
    let n = l + r;
    assert!(n <= 64, "independence complex limited to 64 vertices");
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut adjacent = vec![0u64; n];
    for (i, j) in g.edges() {
        adjacent[i] |= 1 << (l + j);
        adjacent[l + j] |= 1 << i;
    }
    let compatible: Vec<u64> = (0..n).map(|v| all & !adjacent[v] & !(1 << v)).collect();

    fn extend(compatible: &[u64], chosen: u64, mut candidates: u64, mut excluded: u64, out: &mut Vec<u64>) {
        if candidates == 0 && excluded == 0 {
            out.push(chosen);
            return;
        }
        let mut pivot_pool = candidates | excluded;
        let mut best = 0;
        let mut best_cover = 0;
        while pivot_pool != 0 {
            let u = pivot_pool.trailing_zeros() as usize;
            pivot_pool &= pivot_pool - 1;
            let cover = (candidates & compatible[u]).count_ones() + 1;
            if cover > best_cover {
                best_cover = cover;
                best = u;
            }
        }
        let mut branch = candidates & !compatible[best];
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            extend(compatible, chosen | 1 << v, candidates & compatible[v], excluded & compatible[v], out);
            candidates &= !(1 << v);
            excluded |= 1 << v;
        }
    }

    let mut facets = Vec::new();
    extend(&compatible, 0, all, 0, &mut facets);
    let vertices = g.left().iter().chain(g.right()).cloned().collect();
    SimplicialComplex::from_masks(vertices, facets).expect("vertex names of a graph are distinct")
}

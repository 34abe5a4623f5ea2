//! Canonical forms and exhaustive enumeration up to isomorphism.
//!
//! Isomorphism permits swapping the two sides wholesale. Canonical forms are
//! brute force: rows are permuted within classes of equal degree, and for each
//! row order the lexicographically least column arrangement is obtained by
//! sorting columns.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::bigraph::{is_unmixed, write_graph, BipartiteGraph};
use crate::classify::classify;
use crate::construct::{expand, predicted_codim, Expansion};
use crate::error::{Error, Result};

/// Largest side size accepted by [`canonical_form`].
pub const CANONICAL_SIDE_LIMIT: usize = 8;
/// Largest pair count for [`enumerate_cm`].
pub const MAX_CM_PAIRS: usize = 5;
/// Largest pair count for [`enumerate_unmixed`].
pub const MAX_UNMIXED_PAIRS: usize = 4;
/// Largest `t` for [`enumerate_sharp_cmt`].
pub const MAX_SHARP_T: usize = 5;

/// Isomorphism-invariant key of a bipartite graph.
///
/// The smaller side is the row side; with equal sides both orientations are
/// tried. `code` is the row-major adjacency bitstring, first bit most
/// significant, minimised over all relabelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub rows: u8,
    pub cols: u8,
    pub code: u64,
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}-{:016x}", self.rows, self.cols, self.code)
    }
}

fn code_for_rows(rows: &[u64], order: &[usize], ncols: usize) -> u64 {
    let n = order.len();
    let mut keys: Vec<u64> = (0..ncols)
        .map(|c| order.iter().enumerate().fold(0u64, |acc, (p, &r)| acc | (rows[r] >> c & 1) << (n - 1 - p)))
        .collect();
    keys.sort_unstable();
    let mut code = 0u64;
    for p in 0..n {
        for &key in &keys {
            code = code << 1 | (key >> (n - 1 - p) & 1);
        }
    }
    code
}

fn least_code(rows: &[u64], ncols: usize) -> u64 {
    let n = rows.len();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&r| std::cmp::Reverse(rows[r].count_ones()));
    let slot_degree: Vec<u32> = by_degree.iter().map(|&r| rows[r].count_ones()).collect();

    fn walk(rows: &[u64], ncols: usize, slot_degree: &[u32], order: &mut Vec<usize>, used: u64, best: &mut u64) {
        let p = order.len();
        if p == rows.len() {
            *best = (*best).min(code_for_rows(rows, order, ncols));
            return;
        }
        for r in 0..rows.len() {
            if used >> r & 1 == 0 && rows[r].count_ones() == slot_degree[p] {
                order.push(r);
                walk(rows, ncols, slot_degree, order, used | 1 << r, best);
                order.pop();
            }
        }
    }

    let mut best = u64::MAX;
    walk(rows, ncols, &slot_degree, &mut Vec::with_capacity(n), 0, &mut best);
    best
}

/// Canonical form of `g` under relabeling within sides and swapping sides.
pub fn canonical_form(g: &BipartiteGraph) -> Result<CanonicalForm> {
    let (l, r) = (g.left().len(), g.right().len());
    if l > CANONICAL_SIDE_LIMIT || r > CANONICAL_SIDE_LIMIT {
        return Err(Error::SizeGuard(format!(
            "canonical forms are limited to {CANONICAL_SIDE_LIMIT} vertices per side, got {l} and {r}"
        )));
    }
    let direct: Vec<u64> = (0..l).map(|i| g.left_neighbours(i)).collect();
    let swapped: Vec<u64> = (0..r).map(|j| g.right_neighbours(j)).collect();
    let code = match l.cmp(&r) {
        std::cmp::Ordering::Less => least_code(&direct, r),
        std::cmp::Ordering::Greater => least_code(&swapped, l),
        std::cmp::Ordering::Equal => least_code(&direct, r).min(least_code(&swapped, l)),
    };
    Ok(CanonicalForm { rows: l.min(r) as u8, cols: l.max(r) as u8, code })
}

fn dedupe(graphs: impl IntoIterator<Item = BipartiteGraph>) -> Result<Vec<BipartiteGraph>> {
    let mut classes = BTreeMap::new();
    for g in graphs {
        classes.entry(canonical_form(&g)?).or_insert(g);
    }
    Ok(classes.into_values().collect())
}

/// Every naturally labelled partial order on `d` points, as strict-relation bitmask rows.
fn natural_partial_orders(d: usize) -> Vec<Vec<u64>> {
    let slots: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    (0u64..1 << slots.len())
        .filter_map(|mask| {
            let mut rel = vec![0u64; d];
            for (k, &(i, j)) in slots.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    rel[i] |= 1 << j;
                }
            }
            let closed = (0..d).all(|i| (0..d).filter(|&j| rel[i] >> j & 1 == 1).all(|j| rel[j] & !rel[i] == 0));
            closed.then_some(rel)
        })
        .collect()
}

/// Cohen-Macaulay bipartite graphs of the given dimension, up to isomorphism.
///
/// Each comes from a partial order on `d = dimension + 1` points with a
/// linear extension as labelling: edges `x_i y_j` for `i ≤ j` in the order.
pub fn enumerate_cm(dimension: usize) -> Result<Vec<BipartiteGraph>> {
    let d = dimension + 1;
    if d > MAX_CM_PAIRS {
        return Err(Error::SizeGuard(format!("Cohen-Macaulay enumeration is limited to {MAX_CM_PAIRS} pairs")));
    }
    let graphs = natural_partial_orders(d)
        .into_iter()
        .map(|rel| {
            let edges = (0..d).flat_map(|i| {
                let row = rel[i];
                std::iter::once((i, i)).chain((0..d).filter(move |&j| row >> j & 1 == 1).map(move |j| (i, j)))
            });
            BipartiteGraph::indexed(d, edges)
        })
        .collect::<Result<Vec<_>>>()?;
    dedupe(graphs)
}

/// Unmixed bipartite graphs with `d` pairs and no isolated vertices, up to isomorphism.
///
/// Such a graph has a perfect matching, so it suffices to scan edge supersets
/// of the matching `x_i y_i`.
pub fn enumerate_unmixed(d: usize) -> Result<Vec<BipartiteGraph>> {
    if d > MAX_UNMIXED_PAIRS {
        return Err(Error::SizeGuard(format!("unmixed enumeration is limited to {MAX_UNMIXED_PAIRS} pairs")));
    }
    let off: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut found = Vec::new();
    for mask in 0u64..1 << off.len() {
        let edges =
            (0..d).map(|i| (i, i)).chain(off.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e));
        let g = BipartiteGraph::indexed(d, edges)?;
        if is_unmixed(&g)? {
            found.push(g);
        }
    }
    dedupe(found)
}

/// Parameters for [`enumerate_sharp_cmt_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpCmtOptions {
    pub t: usize,
    /// Upper bound on `Σ n_i`, if any.
    pub max_total: Option<usize>,
    /// Block sizes emitted for the one-replacement family, whose block size is free.
    pub representative_sizes: Vec<usize>,
}

impl SharpCmtOptions {
    pub fn new(t: usize) -> Self {
        SharpCmtOptions { t, max_total: None, representative_sizes: vec![2, 3] }
    }
}

/// One emitted graph of a sharp CM_t enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpCmtGraph {
    pub graph: BipartiteGraph,
    pub code: CanonicalForm,
    pub base: BipartiteGraph,
    pub base_dimension: usize,
    /// Aligned with the left side of `base`.
    pub multiplicities: Vec<usize>,
    /// Member of the family with one block of free size; this graph is a representative.
    pub parametric: bool,
    /// Graphs of the same parametric family share this key.
    pub type_code: CanonicalForm,
    pub connected: bool,
}

/// Per-base-dimension tallies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub base_dimension: usize,
    pub bases: usize,
    /// `(base, multiplicity vector)` choices before isomorphism reduction.
    pub choices: usize,
    /// Isomorphism classes, parametric families counted once.
    pub types: usize,
    pub connected_types: usize,
    /// Distinct graphs emitted.
    pub graphs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpCmtEnumeration {
    pub t: usize,
    pub graphs: Vec<SharpCmtGraph>,
    pub strata: Vec<Stratum>,
}

impl SharpCmtEnumeration {
    fn types_where(&self, keep: impl Fn(&SharpCmtGraph) -> bool) -> usize {
        self.graphs.iter().filter(|g| keep(g)).map(|g| g.type_code).collect::<BTreeSet<_>>().len()
    }

    /// Isomorphism types, counting each parametric family once.
    pub fn count(&self) -> usize {
        self.types_where(|_| true)
    }

    pub fn connected_count(&self) -> usize {
        self.types_where(|g| g.connected)
    }
}

/// Multiplicity vectors allowed for a base of the given dimension.
///
/// With `dim H = t - 1` exactly one pair is replaced, by a block of free size.
/// With `dim H ≤ t - 2` at least two pairs are replaced, and both the number
/// of replacements and each block size are at most `t - dim H`.
fn multiplicity_vectors(t: usize, base_dimension: usize, representative_sizes: &[usize]) -> Vec<(Vec<usize>, bool)> {
    let d = base_dimension + 1;
    if base_dimension + 1 == t {
        return (0..d)
            .flat_map(|i| {
                representative_sizes.iter().map(move |&n| {
                    let mut m = vec![1; d];
                    m[i] = n;
                    (m, true)
                })
            })
            .collect();
    }
    let cap = t - base_dimension;
    let mut out = Vec::new();
    let mut m = vec![1usize; d];
    loop {
        let replaced = m.iter().filter(|&&n| n >= 2).count();
        if (2..=cap).contains(&replaced) {
            out.push((m.clone(), false));
        }
        // odometer over {1..=cap}^d
        let Some(k) = (0..d).find(|&k| m[k] < cap) else { break };
        m[k] += 1;
        m[..k].iter_mut().for_each(|n| *n = 1);
    }
    out
}

/// Sharp CM_t graphs (`t ≥ 2`) built by expanding Cohen-Macaulay bases.
pub fn enumerate_sharp_cmt(t: usize, max_total: Option<usize>) -> Result<SharpCmtEnumeration> {
    enumerate_sharp_cmt_with(&SharpCmtOptions { max_total, ..SharpCmtOptions::new(t) })
}

pub fn enumerate_sharp_cmt_with(opts: &SharpCmtOptions) -> Result<SharpCmtEnumeration> {
    let t = opts.t;
    if !(2..=MAX_SHARP_T).contains(&t) {
        return Err(Error::SizeGuard(format!("sharp CM_t enumeration needs 2 ≤ t ≤ {MAX_SHARP_T}, got {t}")));
    }
    if let Some(&n) = opts.representative_sizes.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidArgument(format!("representative block size {n} is below 2")));
    }
    let mut graphs: BTreeMap<CanonicalForm, SharpCmtGraph> = BTreeMap::new();
    let mut strata = Vec::new();
    for base_dimension in 1..t {
        let bases = enumerate_cm(base_dimension)?;
        let mut choices = 0;
        let mut codes = BTreeSet::new();
        for base in &bases {
            for (m, parametric) in multiplicity_vectors(t, base_dimension, &opts.representative_sizes) {
                let e = Expansion::new(base.clone(), m.clone())?;
                if opts.max_total.is_some_and(|cap| e.total() > cap) || predicted_codim(&e)? != t {
                    continue;
                }
                choices += 1;
                let graph = expand(&e)?.graph;
                let code = canonical_form(&graph)?;
                codes.insert(code);
                if graphs.contains_key(&code) {
                    continue;
                }
                if classify(&graph)?.t_sharp != Some(t) {
                    return Err(Error::Consistency(format!("expansion {m:?} of a base is not sharply CM_{t}")));
                }
                let type_code = if parametric {
                    let normal = m.iter().map(|&n| n.min(2)).collect();
                    canonical_form(&expand(&Expansion::new(base.clone(), normal)?)?.graph)?
                } else {
                    code
                };
                let connected = graph.is_connected();
                graphs.insert(
                    code,
                    SharpCmtGraph {
                        graph,
                        code,
                        base: base.clone(),
                        base_dimension,
                        multiplicities: m,
                        parametric,
                        type_code,
                        connected,
                    },
                );
            }
        }
        let in_stratum: Vec<&SharpCmtGraph> = codes.iter().map(|c| &graphs[c]).collect();
        let types = in_stratum.iter().map(|g| g.type_code).collect::<BTreeSet<_>>();
        let connected_types = in_stratum.iter().filter(|g| g.connected).map(|g| g.type_code).collect::<BTreeSet<_>>();
        strata.push(Stratum {
            base_dimension,
            bases: bases.len(),
            choices,
            types: types.len(),
            connected_types: connected_types.len(),
            graphs: codes.len(),
        });
    }
    Ok(SharpCmtEnumeration { t, graphs: graphs.into_values().collect(), strata })
}

/// What an enumeration run writes: a manifest plus one document per graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub kind: &'static str,
    pub dimension_or_t: usize,
    pub count: usize,
    pub connected_count: usize,
    pub graph_count: usize,
    pub files: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strata: Option<Vec<Stratum>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedFile {
    pub name: String,
    pub document: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOutput {
    pub manifest: Manifest,
    pub files: Vec<EnumeratedFile>,
}

fn file_name(code: &CanonicalForm) -> String {
    format!("{code}.graph")
}

/// Documents and manifest for [`enumerate_cm`].
pub fn cm_output(dimension: usize) -> Result<EnumerationOutput> {
    let graphs = enumerate_cm(dimension)?;
    let mut files = Vec::new();
    for g in &graphs {
        let code = canonical_form(g)?;
        files.push(EnumeratedFile {
            name: file_name(&code),
            document: format!("# Cohen-Macaulay, dimension {dimension}, canonical form {code}\n{}", write_graph(g)),
        });
    }
    Ok(EnumerationOutput {
        manifest: Manifest {
            kind: "cm",
            dimension_or_t: dimension,
            count: graphs.len(),
            connected_count: graphs.iter().filter(|g| g.is_connected()).count(),
            graph_count: graphs.len(),
            files: files.iter().map(|f| f.name.clone()).collect(),
            strata: None,
        },
        files,
    })
}

/// Documents and manifest for [`enumerate_sharp_cmt_with`].
pub fn sharp_cmt_output(opts: &SharpCmtOptions) -> Result<EnumerationOutput> {
    let run = enumerate_sharp_cmt_with(opts)?;
    let files: Vec<EnumeratedFile> = run
        .graphs
        .iter()
        .map(|g| {
            let m: Vec<String> = g.multiplicities.iter().map(ToString::to_string).collect();
            let family =
                if g.parametric { format!("# representative of the family {}\n", g.type_code) } else { String::new() };
            EnumeratedFile {
                name: file_name(&g.code),
                document: format!(
                    "# sharply CM_{}, base dimension {}, multiplicities {}\n{family}{}",
                    run.t,
                    g.base_dimension,
                    m.join(" "),
                    write_graph(&g.graph)
                ),
            }
        })
        .collect();
    Ok(EnumerationOutput {
        manifest: Manifest {
            kind: "cmt",
            dimension_or_t: run.t,
            count: run.count(),
            connected_count: run.connected_count(),
            graph_count: run.graphs.len(),
            files: files.iter().map(|f| f.name.clone()).collect(),
            strata: Some(run.strata.clone()),
        },
        files,
    })
}

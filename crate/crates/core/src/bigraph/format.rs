//! The line-oriented graph document.
//!
//! ```text
//! # comment
//! L: x1 x2
//! R: y1 y2
//! E: x1-y1 x1-y2
//! E: x2-y2
//! M: 1 3
//! ```
//!
//! `L:` comes first, then `R:`, then any number of `E:` lines. An optional
//! `M:` line carries expansion multiplicities aligned with the left side.

use super::{valid_name, BipartiteGraph};
use crate::error::{Error, Result};

/// A parsed graph document: the graph plus the optional `M:` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: BipartiteGraph,
    pub multiplicities: Option<Vec<usize>>,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn names(line: usize, body: &str) -> Result<Vec<String>> {
    body.split_whitespace()
        .map(|tok| {
            if valid_name(tok) {
                Ok(tok.to_string())
            } else {
                Err(syntax(line, format!("invalid vertex name `{tok}`")))
            }
        })
        .collect()
}

/// Parses a document that may carry an `M:` line.
pub fn parse_document(text: &str) -> Result<GraphDocument> {
    let mut left: Option<Vec<String>> = None;
    let mut right: Option<Vec<String>> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut multiplicities: Option<Vec<i64>> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (tag, body) =
            content.split_once(':').ok_or_else(|| syntax(line, "expected a `L:`, `R:`, `E:` or `M:` line"))?;
        match tag.trim() {
            "L" => {
                if left.is_some() {
                    return Err(syntax(line, "repeated `L:` line"));
                }
                left = Some(names(line, body)?);
            }
            "R" => {
                if left.is_none() {
                    return Err(syntax(line, "`R:` before `L:`"));
                }
                if right.is_some() {
                    return Err(syntax(line, "repeated `R:` line"));
                }
                right = Some(names(line, body)?);
            }
            "E" => {
                if right.is_none() {
                    return Err(syntax(line, "`E:` before `L:` and `R:`"));
                }
                for tok in body.split_whitespace() {
                    let (u, v) = tok
                        .split_once('-')
                        .filter(|(u, v)| valid_name(u) && valid_name(v))
                        .ok_or_else(|| syntax(line, format!("malformed edge token `{tok}`")))?;
                    edges.push((u.to_string(), v.to_string()));
                }
            }
            "M" => {
                if right.is_none() {
                    return Err(syntax(line, "`M:` before `L:` and `R:`"));
                }
                if multiplicities.is_some() {
                    return Err(syntax(line, "repeated `M:` line"));
                }
                let values = body
                    .split_whitespace()
                    .map(|tok| tok.parse::<i64>().map_err(|_| syntax(line, format!("invalid multiplicity `{tok}`"))))
                    .collect::<Result<Vec<_>>>()?;
                multiplicities = Some(values);
            }
            other => return Err(syntax(line, format!("unknown line tag `{other}:`"))),
        }
    }

    let left = left.ok_or_else(|| syntax(last_line.max(1), "missing `L:` line"))?;
    let right = right.ok_or_else(|| syntax(last_line.max(1), "missing `R:` line"))?;
    let edge_refs: Vec<(&str, &str)> = edges.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
    let graph = BipartiteGraph::new(left, right, &edge_refs)?;
    let multiplicities = multiplicities
        .map(|values| {
            values
                .into_iter()
                .map(|m| usize::try_from(m).ok().filter(|&m| m > 0).ok_or(Error::NonPositiveMultiplicity(m)))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    Ok(GraphDocument { graph, multiplicities })
}

/// Parses a plain graph document. An `M:` line is rejected.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    let doc = parse_document(text)?;
    if doc.multiplicities.is_some() {
        let line = text.lines().position(|l| l.trim_start().starts_with("M:")).map_or(1, |p| p + 1);
        return Err(syntax(line, "unexpected `M:` line in a plain graph document"));
    }
    Ok(doc.graph)
}

/// Serialises a graph; edges are listed in side order.
pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut out = format!("L: {}\nR: {}\nE:", g.left().join(" "), g.right().join(" "));
    for (i, j) in g.edges() {
        out.push(' ');
        out.push_str(&g.left()[i]);
        out.push('-');
        out.push_str(&g.right()[j]);
    }
    out.push('\n');
    out
}

/// Serialises a graph followed by an `M:` line.
pub fn write_document(g: &BipartiteGraph, multiplicities: &[usize]) -> String {
    let mut out = write_graph(g);
    let m: Vec<String> = multiplicities.iter().map(ToString::to_string).collect();
    out.push_str("M: ");
    out.push_str(&m.join(" "));
    out.push('\n');
    out
}

//! The line-based graph text format.
//!
//! ```text
//! # banana
//! vertex x genus=1
//! vertex y genus=1
//! edge b1 x y weight=2
//! edge b2 x y weight=-2
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Both `genus=` and
//! `weight=` are optional and default to 0; commands that need a surface
//! insist on every vertex carrying an explicit genus.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use thiserror::Error;
use torelli_core::{GraphError, Label, Multigraph, Multitwist, SurfaceModel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLine {
    pub id: String,
    pub genus: Option<u64>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLine {
    pub id: String,
    pub ends: (String, String),
    pub weight: BigInt,
    pub line: usize,
}

/// A parsed file, in the order the lines appeared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub vertices: Vec<VertexLine>,
    pub edges: Vec<EdgeLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("empty graph: no vertex lines")]
    Empty,
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("line {line}: vertex {id} has no genus field")]
    MissingGenus { id: String, line: usize },
    #[error("{0}")]
    Surface(#[from] torelli_core::surface::SurfaceError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut col = 0;
    let mut start_col = 0;
    for (byte, ch) in text.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((start_col, &text[s..byte]));
            }
        } else if start.is_none() {
            start = Some(byte);
            start_col = col;
        }
    }
    if let Some(s) = start {
        out.push((start_col, &text[s..]));
    }
    out
}

fn field<'a>(line: usize, col: usize, token: &'a str, key: &str) -> Result<&'a str, FormatError> {
    match token.split_once('=') {
        Some((k, v)) if k == key => Ok(v),
        Some((k, _)) => Err(syntax(line, col, format!("unknown field `{k}`"))),
        None => Err(syntax(line, col, format!("unexpected token `{token}`, expected `{key}=<integer>`"))),
    }
}

fn identifier(line: usize, col: usize, token: &str) -> Result<String, FormatError> {
    if token.contains('=') {
        return Err(syntax(line, col, format!("expected an identifier, found `{token}`")));
    }
    Ok(token.to_string())
}

pub fn parse(text: &str) -> Result<Document, FormatError> {
    let mut doc = Document { vertices: Vec::new(), edges: Vec::new() };
    let mut vertex_ids = BTreeSet::new();
    let mut edge_ids = BTreeSet::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col, keyword)) = toks.first() else { continue };
        match keyword {
            "vertex" => {
                let Some(&(c, id)) = toks.get(1) else {
                    return Err(syntax(line, col + keyword.len(), "vertex line needs an identifier"));
                };
                let id = identifier(line, c, id)?;
                let genus = match toks.get(2) {
                    None => None,
                    Some(&(c, tok)) => {
                        let v = field(line, c, tok, "genus")?;
                        let value = v.parse::<u64>().map_err(|_| {
                            syntax(line, c + "genus=".len(), format!("malformed integer `{v}`, expected a nonnegative genus"))
                        })?;
                        Some(value)
                    }
                };
                if let Some(&(c, tok)) = toks.get(3) {
                    return Err(syntax(line, c, format!("unexpected token `{tok}`")));
                }
                if !vertex_ids.insert(id.clone()) {
                    return Err(syntax(line, toks[1].0, format!("duplicate vertex identifier `{id}`")));
                }
                doc.vertices.push(VertexLine { id, genus, line });
            }
            "edge" => {
                if toks.len() < 4 {
                    return Err(syntax(line, col, "edge line needs an identifier and two vertex identifiers"));
                }
                let id = identifier(line, toks[1].0, toks[1].1)?;
                for &(c, v) in &toks[2..4] {
                    if !vertex_ids.contains(v) {
                        return Err(syntax(line, c, format!("unknown vertex `{v}`")));
                    }
                }
                let weight = match toks.get(4) {
                    None => BigInt::from(0),
                    Some(&(c, tok)) => {
                        let v = field(line, c, tok, "weight")?;
                        v.parse::<BigInt>()
                            .map_err(|_| syntax(line, c + "weight=".len(), format!("malformed integer `{v}`")))?
                    }
                };
                if let Some(&(c, tok)) = toks.get(5) {
                    return Err(syntax(line, c, format!("unexpected token `{tok}`")));
                }
                if !edge_ids.insert(id.clone()) {
                    return Err(syntax(line, toks[1].0, format!("duplicate edge identifier `{id}`")));
                }
                let ends = (toks[2].1.to_string(), toks[3].1.to_string());
                doc.edges.push(EdgeLine { id, ends, weight, line });
            }
            other => return Err(syntax(line, col, format!("unknown keyword `{other}`"))),
        }
    }
    if doc.vertices.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(doc)
}

impl Document {
    pub fn graph(&self) -> Result<Multigraph, FormatError> {
        Ok(Multigraph::new(
            self.vertices.iter().map(|v| Label::from(v.id.as_str())),
            self.edges
                .iter()
                .map(|e| (Label::from(e.id.as_str()), Label::from(e.ends.0.as_str()), Label::from(e.ends.1.as_str()))),
        )?)
    }

    /// The edge weights as a multitwist, indexed by the graph's edge order.
    pub fn multitwist(&self) -> Result<Multitwist, FormatError> {
        let g = self.graph()?;
        let mut exps = vec![BigInt::from(0); g.edge_count()];
        for e in &self.edges {
            let id = g.edge_by_label(&e.id).expect("edge was just inserted");
            exps[id.0] = e.weight.clone();
        }
        Ok(Multitwist::new(g, exps).expect("one exponent per edge"))
    }

    /// The surface model; every vertex must state its genus.
    pub fn surface(&self) -> Result<SurfaceModel, FormatError> {
        if let Some(v) = self.vertices.iter().find(|v| v.genus.is_none()) {
            return Err(FormatError::MissingGenus { id: v.id.clone(), line: v.line });
        }
        let g = self.graph()?;
        let mut genus = vec![0; g.vertex_count()];
        for v in &self.vertices {
            genus[g.vertex_by_label(&v.id).expect("vertex was just inserted").0] = v.genus.unwrap_or(0);
        }
        Ok(SurfaceModel::new(g, genus)?)
    }
}

/// Writes a surface model with explicit genera, vertices and edges in
/// identifier order. Weights are omitted.
pub fn write_surface(s: &SurfaceModel) -> String {
    let g = s.graph();
    let mut out = String::new();
    for v in g.vertices() {
        let _ = writeln!(out, "vertex {} genus={}", g.vertex_label(v), s.genus_of(v));
    }
    for e in g.edges() {
        let (u, v) = g.ends(e);
        let _ = writeln!(out, "edge {} {} {}", g.edge_label(e), g.vertex_label(u), g.vertex_label(v));
    }
    out
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            match v.genus {
                Some(genus) => writeln!(f, "vertex {} genus={genus}", v.id)?,
                None => writeln!(f, "vertex {}", v.id)?,
            }
        }
        for e in &self.edges {
            writeln!(f, "edge {} {} {} weight={}", e.id, e.ends.0, e.ends.1, e.weight)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_count_characters() {
        assert_eq!(tokens("  ab\tcd"), vec![(3, "ab"), (6, "cd")]);
        assert_eq!(tokens("é x"), vec![(1, "é"), (3, "x")]);
    }

    #[test]
    fn banana_precursor() {
        let doc = parse("vertex x\nvertex y\nedge e x y\n").unwrap();
        let g = doc.graph().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(doc.edges[0].weight, BigInt::from(0));
    }

    #[test]
    fn unknown_vertex_reports_position() {
        let err = parse("vertex x\nedge e x  zz\n").unwrap_err();
        assert_eq!(err, syntax(2, 11, "unknown vertex `zz`"));
        assert_eq!(err.to_string(), "line 2, column 11: unknown vertex `zz`");
    }

    #[test]
    fn vertices_must_come_first() {
        assert!(matches!(parse("edge e x y\nvertex x\nvertex y\n"), Err(FormatError::Syntax { line: 1, .. })));
    }

    #[test]
    fn comment_only_is_empty() {
        assert_eq!(parse("# nothing\n\n   # here\n"), Err(FormatError::Empty));
    }

    #[test]
    fn malformed_integers() {
        let err = parse("vertex x genus=-1\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 1, column: 16, .. }), "{err}");
        let err = parse("vertex x\nedge e x x weight=1.5\n").unwrap_err();
        assert!(err.to_string().contains("malformed integer `1.5`"));
        assert!(parse("vertex x\nedge e x x weight=-123456789012345678901234567890\n").is_ok());
    }

    #[test]
    fn duplicates_and_stray_tokens() {
        assert!(parse("vertex x\nvertex x\n").unwrap_err().to_string().contains("duplicate vertex"));
        assert!(parse("vertex x\nedge e x x\nedge e x x\n").unwrap_err().to_string().contains("duplicate edge"));
        assert!(parse("vertex x genus=1 extra\n").unwrap_err().to_string().contains("unexpected token"));
        assert!(parse("vertex x weight=1\n").unwrap_err().to_string().contains("unknown field"));
        assert!(parse("vertices x\n").unwrap_err().to_string().contains("unknown keyword"));
    }

    #[test]
    fn disconnected_is_rejected() {
        let doc = parse("vertex x\nvertex y\n").unwrap();
        assert_eq!(doc.graph().unwrap_err(), FormatError::Graph(GraphError::Disconnected));
    }

    #[test]
    fn surface_needs_every_genus() {
        let doc = parse("vertex x genus=2\nvertex y # no genus\nedge e x y\n").unwrap();
        assert_eq!(doc.surface().unwrap_err(), FormatError::MissingGenus { id: "y".into(), line: 2 });
    }
}

//! Text and JSON graph formats.
//!
//! Text: `v1 v2 ; e12: v1 -> v2 ; e21: v2 -> v1`. The first `;`-separated
//! section lists vertices, every later non-blank section declares one edge.
//! JSON: `{"vertices":[..],"edges":[{"id":..,"src":..,"dst":..}]}`.

use super::{DirectedMultigraph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// Parses either format; input starting with `{` is read as JSON.
pub fn parse_graph(text: &str) -> Result<DirectedMultigraph, GraphError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<DirectedMultigraph, GraphError> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| GraphError::Syntax(e.to_string()))?;
    DirectedMultigraph::new(
        doc.vertices,
        doc.edges.into_iter().map(|e| (e.id, e.src, e.dst)),
    )
}

fn parse_text(text: &str) -> Result<DirectedMultigraph, GraphError> {
    let mut sections = text.split(';');
    let vertices: Vec<String> = sections
        .next()
        .unwrap_or_default()
        .split_whitespace()
        .map(str::to_string)
        .collect();
    if vertices.is_empty() {
        return Err(GraphError::Syntax("no vertices declared".into()));
    }
    for v in &vertices {
        check_identifier(v)?;
    }
    let mut edges = Vec::new();
    for section in sections {
        let decl = section.trim();
        if decl.is_empty() {
            continue;
        }
        let (id, endpoints) = decl.split_once(':').ok_or_else(|| {
            GraphError::Syntax(format!("expected `id: src -> dst`, got `{decl}`"))
        })?;
        let (src, dst) = endpoints
            .split_once("->")
            .ok_or_else(|| GraphError::Syntax(format!("missing `->` in `{decl}`")))?;
        let (id, src, dst) = (id.trim(), src.trim(), dst.trim());
        for part in [id, src, dst] {
            check_identifier(part)?;
        }
        edges.push((id.to_string(), src.to_string(), dst.to_string()));
    }
    DirectedMultigraph::new(vertices, edges)
}

fn check_identifier(s: &str) -> Result<(), GraphError> {
    let ok = !s.is_empty()
        && s.chars()
            .all(|c| !c.is_whitespace() && !matches!(c, ';' | ':' | '(' | ')' | ','))
        && !s.contains("->");
    if ok {
        Ok(())
    } else {
        Err(GraphError::Syntax(format!("invalid identifier `{s}`")))
    }
}

impl DirectedMultigraph {
    pub fn to_json_doc(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertex_names().to_vec(),
            edges: self
                .edge_decls()
                .iter()
                .map(|e| EdgeJson {
                    id: e.id.clone(),
                    src: self.vertex_name(e.source).to_string(),
                    dst: self.vertex_name(e.range).to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_doc()).expect("graph json serializes")
    }

    /// The text format, without a trailing newline.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DirectedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.vertex_names().join(" "))?;
        f.write_str(" ;")?;
        for (i, e) in self.edge_decls().iter().enumerate() {
            if i > 0 {
                f.write_str(" ;")?;
            }
            write!(
                f,
                " {}: {} -> {}",
                e.id,
                self.vertex_name(e.source),
                self.vertex_name(e.range)
            )?;
        }
        Ok(())
    }
}

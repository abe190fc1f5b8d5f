//! Edge-labeled multigraphs over Z_d and their text format.
//!
//! ```text
//! # comment
//! d 4
//! vertex lonely
//! edge a b 1
//! edge b c ?
//! ```
//!
//! Vertex ids are opaque tokens ordered by first appearance. Edges keep file
//! order. Parallel edges are allowed, self-loops are not.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::modular::Modulus;

/// Index of a vertex in [`LabeledGraph::vertices`].
pub type VertexIdx = usize;
/// Index of an edge in [`LabeledGraph::edges`].
pub type EdgeIdx = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexIdx,
    pub v: VertexIdx,
    /// `None` is an unlabeled (`?`) edge.
    pub label: Option<u64>,
}

impl Edge {
    /// The endpoint opposite to `w`, assuming `w` is an endpoint.
    #[inline]
    pub fn other(&self, w: VertexIdx) -> VertexIdx {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    #[inline]
    pub fn touches(&self, w: VertexIdx) -> bool {
        self.u == w || self.v == w
    }
}

/// An undirected multigraph with a modulus and (possibly partial) edge labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    modulus: Modulus,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    // incident edges per vertex, in edge order
    adjacency: Vec<Vec<EdgeIdx>>,
}

impl LabeledGraph {
    /// Validates and assembles a graph from its parts.
    pub fn from_parts(modulus: Modulus, vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let n = vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            if e.u >= n {
                return Err(Error::UnknownVertex(e.u));
            }
            if e.v >= n {
                return Err(Error::UnknownVertex(e.v));
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(vertices[e.u].clone()));
            }
            if let Some(label) = e.label {
                if !modulus.contains(label) {
                    return Err(Error::LabelOutOfRange {
                        label,
                        modulus: modulus.get(),
                    });
                }
            }
            adjacency[e.u].push(idx);
            adjacency[e.v].push(idx);
        }
        Ok(LabeledGraph {
            modulus,
            vertices,
            edges,
            adjacency,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeIdx) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges incident to `v`, in edge order.
    pub fn incident(&self, v: VertexIdx) -> &[EdgeIdx] {
        &self.adjacency[v]
    }

    pub fn vertex_name(&self, v: VertexIdx) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<VertexIdx> {
        self.vertices.iter().position(|x| x == name)
    }

    pub fn is_fully_labeled(&self) -> bool {
        self.edges.iter().all(|e| e.label.is_some())
    }

    /// All labels, failing on the first unlabeled edge.
    pub fn labels(&self) -> Result<Vec<u64>> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, e)| e.label.ok_or(Error::UnlabeledEdge(i)))
            .collect()
    }

    /// A copy with the same vertices and only the labeled edges.
    ///
    /// Returns the subgraph together with the original index of each kept edge.
    pub fn labeled_subgraph(&self) -> (LabeledGraph, Vec<EdgeIdx>) {
        let kept: Vec<EdgeIdx> = (0..self.edges.len())
            .filter(|&i| self.edges[i].label.is_some())
            .collect();
        let edges = kept.iter().map(|&i| self.edges[i]).collect();
        let g = LabeledGraph::from_parts(self.modulus, self.vertices.clone(), edges)
            .expect("subgraph of a valid graph is valid");
        (g, kept)
    }

    /// A copy with every label replaced.
    pub fn with_labels(&self, labels: &[Option<u64>]) -> Result<LabeledGraph> {
        if labels.len() != self.edges.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} edges",
                labels.len(),
                self.edges.len()
            )));
        }
        let edges = self
            .edges
            .iter()
            .zip(labels)
            .map(|(e, &label)| Edge { label, ..*e })
            .collect();
        LabeledGraph::from_parts(self.modulus, self.vertices.clone(), edges)
    }

    /// Canonical text form: header, every vertex in order, then every edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "d {}", self.modulus).unwrap();
        for v in &self.vertices {
            writeln!(out, "vertex {v}").unwrap();
        }
        for e in &self.edges {
            let label = match e.label {
                Some(l) => l.to_string(),
                None => "?".to_string(),
            };
            writeln!(out, "edge {} {} {}", self.vertices[e.u], self.vertices[e.v], label).unwrap();
        }
        out
    }
}

/// Incremental construction by vertex name.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    modulus: Modulus,
    vertices: Vec<String>,
    index: HashMap<String, VertexIdx>,
    edges: Vec<Edge>,
}

impl GraphBuilder {
    pub fn new(modulus: Modulus) -> Self {
        GraphBuilder {
            modulus,
            vertices: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertex(&mut self, name: &str) -> VertexIdx {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.vertices.len();
        self.vertices.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    pub fn edge(&mut self, u: &str, v: &str, label: Option<u64>) -> Result<EdgeIdx> {
        let ui = self.vertex(u);
        let vi = self.vertex(v);
        if ui == vi {
            return Err(Error::SelfLoop(u.to_string()));
        }
        if let Some(l) = label {
            if !self.modulus.contains(l) {
                return Err(Error::LabelOutOfRange {
                    label: l,
                    modulus: self.modulus.get(),
                });
            }
        }
        self.edges.push(Edge { u: ui, v: vi, label });
        Ok(self.edges.len() - 1)
    }

    pub fn build(self) -> Result<LabeledGraph> {
        LabeledGraph::from_parts(self.modulus, self.vertices, self.edges)
    }
}

/// Parses the line-oriented graph format.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut builder: Option<GraphBuilder> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line, message };
        match (tokens[0], builder.as_mut()) {
            ("d", None) => {
                if tokens.len() != 2 {
                    return Err(parse_err("expected `d <modulus>`".into()));
                }
                let d: i128 = tokens[1]
                    .parse()
                    .map_err(|_| parse_err(format!("invalid modulus `{}`", tokens[1])))?;
                if d < 1 || d > u64::MAX as i128 {
                    return Err(Error::InvalidModulus(d));
                }
                builder = Some(GraphBuilder::new(Modulus::new(d as u64)?));
            }
            ("d", Some(_)) => return Err(parse_err("duplicate `d` header".into())),
            (_, None) => return Err(Error::MissingModulus),
            ("vertex", Some(b)) => {
                if tokens.len() != 2 {
                    return Err(parse_err("expected `vertex <id>`".into()));
                }
                b.vertex(tokens[1]);
            }
            ("edge", Some(b)) => {
                if tokens.len() != 4 {
                    return Err(parse_err("expected `edge <u> <v> <label|?>`".into()));
                }
                let label = match tokens[3] {
                    "?" => None,
                    tok => Some(
                        tok.parse::<u64>()
                            .map_err(|_| parse_err(format!("invalid label `{tok}`")))?,
                    ),
                };
                b.edge(tokens[1], tokens[2], label)?;
            }
            (other, Some(_)) => return Err(parse_err(format!("unknown directive `{other}`"))),
        }
    }
    builder.ok_or(Error::MissingModulus)?.build()
}

/// A vertex labeling; covers exactly the vertices it has entries for.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VLabeling {
    assignment: BTreeMap<VertexIdx, u64>,
}

impl VLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// A labeling covering vertices `0..values.len()`.
    pub fn from_values(values: &[u64]) -> Self {
        VLabeling {
            assignment: values.iter().copied().enumerate().collect(),
        }
    }

    pub fn set(&mut self, v: VertexIdx, value: u64) {
        self.assignment.insert(v, value);
    }

    pub fn get(&self, v: VertexIdx) -> Option<u64> {
        self.assignment.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexIdx, u64)> + '_ {
        self.assignment.iter().map(|(&v, &x)| (v, x))
    }

    /// Absorbs another (disjoint) labeling.
    pub fn extend_from(&mut self, other: &VLabeling) {
        self.assignment.extend(other.iter());
    }

    /// Dense values, if this labeling covers vertices `0..n` exactly.
    pub fn to_values(&self, n: usize) -> Option<Vec<u64>> {
        (0..n).map(|v| self.get(v)).collect()
    }

    /// True when every labeled edge satisfies `label ≡ f(u) + f(v)`.
    /// Requires every vertex to be covered.
    pub fn is_valid_for(&self, g: &LabeledGraph) -> bool {
        let d = g.modulus();
        (0..g.vertex_count()).all(|v| self.get(v).is_some_and(|x| d.contains(x)))
            && g.edges().iter().all(|e| match e.label {
                Some(l) => d.add(self.assignment[&e.u], self.assignment[&e.v]) == l,
                None => true,
            })
    }

    /// `<vertex> <residue>` per line in vertex order.
    pub fn to_text(&self, g: &LabeledGraph) -> String {
        let mut out = String::new();
        for (v, x) in self.iter() {
            writeln!(out, "{} {}", g.vertex_name(v), x).unwrap();
        }
        out
    }
}

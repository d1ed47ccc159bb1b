//! The semantic network produced by analysis.
//!
//! Vertices are symbol occurrences in utterance order, which doubles as the
//! topicality order. Arcs point from a predicate to the filler of one of its
//! cases and keep the damped unification value.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use thiserror::Error;

use crate::feature::FeatureSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("network has no vertices")]
    Empty,
    #[error("vertex {index} has position {pos}")]
    VertexOrder { index: usize, pos: usize },
    #[error("arc endpoint {0} is not a vertex")]
    DanglingArc(usize),
    #[error("arc from {0} to itself")]
    SelfArc(usize),
    #[error("two `{case}` arcs leave vertex {head}")]
    DuplicateArc { head: usize, case: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub pos: usize,
    pub symbol: String,
    pub intrinsic: FeatureSet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    pub head: usize,
    pub case_label: String,
    pub dep: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SemanticNetwork {
    vertices: Vec<Vertex>,
    arcs: Vec<Arc>,
}

impl SemanticNetwork {
    /// Check the invariants and sort arcs by `(head, case_label)`.
    pub fn new(vertices: Vec<Vertex>, mut arcs: Vec<Arc>) -> Result<Self, NetworkError> {
        if let Some((index, v)) = vertices.iter().enumerate().find(|(i, v)| v.pos != *i) {
            return Err(NetworkError::VertexOrder { index, pos: v.pos });
        }
        let mut seen = BTreeSet::new();
        for a in &arcs {
            for end in [a.head, a.dep] {
                if end >= vertices.len() {
                    return Err(NetworkError::DanglingArc(end));
                }
            }
            if a.head == a.dep {
                return Err(NetworkError::SelfArc(a.head));
            }
            if !seen.insert((a.head, a.case_label.as_str())) {
                return Err(NetworkError::DuplicateArc { head: a.head, case: a.case_label.clone() });
            }
        }
        arcs.sort_by(|x, y| (x.head, &x.case_label).cmp(&(y.head, &y.case_label)));
        Ok(Self { vertices, arcs })
    }

    /// Vertices in topic order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Arcs sorted by `(head, case_label)`.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The first vertex in topic order.
    pub fn topic(&self) -> Result<&Vertex, NetworkError> {
        self.vertices.first().ok_or(NetworkError::Empty)
    }

    pub fn arcs_from(&self, head: usize) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(move |a| a.head == head)
    }

    pub fn arc(&self, head: usize, case_label: &str) -> Option<&Arc> {
        self.arcs.iter().find(|a| a.head == head && a.case_label == case_label)
    }

    /// Vertices that take part in no arc, in topic order.
    pub fn unattached_vertices(&self) -> Vec<&Vertex> {
        let attached: BTreeSet<usize> = self.arcs.iter().flat_map(|a| [a.head, a.dep]).collect();
        self.vertices.iter().filter(|v| !attached.contains(&v.pos)).collect()
    }

    /// `(head, case, dep)` triples, for comparison against annotations.
    pub fn arc_set(&self) -> BTreeSet<(usize, String, usize)> {
        self.arcs.iter().map(|a| (a.head, a.case_label.clone(), a.dep)).collect()
    }

    /// Arcs as `(head symbol, case, dependent symbol)`, independent of positions.
    pub fn labelled_arc_set(&self) -> BTreeSet<(String, String, String)> {
        self.arcs
            .iter()
            .map(|a| {
                (
                    self.vertices[a.head].symbol.clone(),
                    a.case_label.clone(),
                    self.vertices[a.dep].symbol.clone(),
                )
            })
            .collect()
    }

    /// DOT digraph: vertices labelled by symbol, arcs by case and value.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph network {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  n{} [label=\"{}\"];", v.pos, escape(&v.symbol));
        }
        for a in &self.arcs {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{} {:.3}\"];",
                a.head,
                a.dep,
                escape(&a.case_label),
                a.value
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        if matches!(ch, '"' | '\\') {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}

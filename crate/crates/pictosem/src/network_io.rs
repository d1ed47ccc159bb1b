//! Network serialization: DOT text and the canonical JSON form
//! `{"vertices":[{"pos":0,"symbol":"i"}],"arcs":[{"head":1,"case":"agent","dep":0,"value":0.8}]}`.

use std::str::FromStr;

use pictosem_core::{Arc, Lexicon, SemanticNetwork, Vertex};
use serde::{Deserialize, Serialize};

use crate::formats::LoadError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    GraphText,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph-text" => Ok(Format::GraphText),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected graph-text or json)")),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkDoc {
    vertices: Vec<VertexDoc>,
    arcs: Vec<ArcDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    pos: usize,
    symbol: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcDoc {
    head: usize,
    case: String,
    dep: usize,
    value: f64,
}

/// Canonical JSON, compact, without a trailing newline.
pub fn network_json(network: &SemanticNetwork) -> String {
    let doc = NetworkDoc {
        vertices: network
            .vertices()
            .iter()
            .map(|v| VertexDoc { pos: v.pos, symbol: v.symbol.clone() })
            .collect(),
        arcs: network
            .arcs()
            .iter()
            .map(|a| ArcDoc { head: a.head, case: a.case_label.clone(), dep: a.dep, value: a.value })
            .collect(),
    };
    serde_json::to_string(&doc).expect("network documents always serialize")
}

pub fn serialize_network(network: &SemanticNetwork, format: Format) -> String {
    match format {
        Format::GraphText => network.to_dot(),
        Format::Json => network_json(network),
    }
}

/// Read canonical JSON back; intrinsic features are looked up in `lexicon`.
pub fn parse_network_json(text: &str, lexicon: &Lexicon) -> Result<SemanticNetwork, LoadError> {
    let doc: NetworkDoc = serde_json::from_str(text)?;
    let vertices = doc
        .vertices
        .into_iter()
        .map(|v| {
            let intrinsic = lexicon.intrinsic_features(&v.symbol)?;
            Ok(Vertex { pos: v.pos, symbol: v.symbol, intrinsic })
        })
        .collect::<Result<Vec<_>, LoadError>>()?;
    let arcs = doc
        .arcs
        .into_iter()
        .map(|a| Arc { head: a.head, case_label: a.case, dep: a.dep, value: a.value })
        .collect();
    Ok(SemanticNetwork::new(vertices, arcs)?)
}

//! Text and JSON formats: edge lists, `tww-cert/1` certificates, DOT, the
//! per-step trace CSV and the embedding text format.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::PlaneMultigraph;
use crate::trigraph::{
    ContractionSequence, ContractionStep, EdgeColor, Trigraph, TrigraphError, WidthTrace,
};

pub const CERT_FORMAT: &str = "tww-cert/1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] TrigraphError),
    #[error("invalid certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported certificate format {0:?}")]
    CertFormat(String),
    #[error("invalid embedding: {0}")]
    Embedding(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses the edge-list format: a header `n m` followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Trigraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let [n, m] = parse_pair(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        if edges.len() == m {
            return Err(syntax(ln, format!("more than {m} edge lines")));
        }
        let [u, v] = parse_pair(ln, line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(syntax(
            hl,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Trigraph::from_black_edges(n, edges)?)
}

fn parse_pair(line: usize, s: &str) -> Result<[usize; 2], FormatError> {
    let mut it = s.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| syntax(line, format!("expected non-negative integer, got {t:?}")))
    });
    let a = it.next().ok_or_else(|| syntax(line, "expected two integers"))??;
    let b = it.next().ok_or_else(|| syntax(line, "expected two integers"))??;
    if it.next().is_some() {
        return Err(syntax(line, "trailing tokens"));
    }
    Ok([a, b])
}

/// Writes the edges of `g` (colors dropped), ids unchanged, `n` = capacity.
pub fn write_edge_list(g: &Trigraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.capacity(), edges.len());
    for (u, v, _) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Serialized contraction sequence with its declared width.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub n: usize,
    pub width: usize,
    pub steps: Vec<[usize; 2]>,
}

impl Certificate {
    pub fn new(n: usize, width: usize, seq: &ContractionSequence) -> Self {
        Certificate {
            format: CERT_FORMAT.to_string(),
            n,
            width,
            steps: seq.iter().map(|s| [s.keep.0, s.remove.0]).collect(),
        }
    }

    pub fn sequence(&self) -> ContractionSequence {
        self.steps
            .iter()
            .map(|&[k, r]| ContractionStep::new(k, r))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let cert: Certificate = serde_json::from_str(text)?;
        if cert.format != CERT_FORMAT {
            return Err(FormatError::CertFormat(cert.format));
        }
        Ok(cert)
    }
}

/// DOT rendering; red edges are drawn red.
pub fn write_dot(g: &Trigraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v, c) in g.edges() {
        match c {
            EdgeColor::Black => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            EdgeColor::Red => {
                let _ = writeln!(out, "  {u} -- {v} [color=red];");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Trace CSV with header `step,keep,remove,max_red_degree`.
pub fn write_trace_csv(seq: &ContractionSequence, trace: &WidthTrace) -> String {
    let mut out = String::from("step,keep,remove,max_red_degree\n");
    for (i, (s, d)) in seq.iter().zip(&trace.per_step_max_red_degree).enumerate() {
        let _ = writeln!(out, "{i},{},{},{d}", s.keep, s.remove);
    }
    out
}

/// Embedding text format: one line `v: d1 d2 ... dk` per live vertex,
/// darts in rotation order. Dart `d` and `d ^ 1` form an edge.
pub fn write_embedding(g: &PlaneMultigraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let _ = write!(out, "{v}:");
        for d in g.rotation(v) {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_embedding(text: &str) -> Result<PlaneMultigraph, FormatError> {
    let mut rotations = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(i + 1, "expected `v: darts`"))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| syntax(i + 1, format!("bad vertex id {head:?}")))?;
        let darts = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| syntax(i + 1, format!("bad dart id {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rotations.insert(v, darts).is_some() {
            return Err(syntax(i + 1, format!("vertex {v} listed twice")));
        }
    }
    PlaneMultigraph::from_rotations(&rotations).map_err(|e| FormatError::Embedding(e.to_string()))
}

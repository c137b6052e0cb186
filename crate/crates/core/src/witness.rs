//! Width-7 contraction sequences for G_k.
//!
//! Phase 1 collapses the six non-skeleton vertices of every skeleton face
//! into one representative. Phase 2 absorbs the representatives into the
//! skeleton, processing skeleton vertices in ascending id order. Phase 3
//! reduces the remaining skeleton triangulation by embedded edge
//! contractions that keep the multigraph degree at most seven.

use thiserror::Error;

use crate::construction::GkGraph;
use crate::embedding::{EmbeddingError, PlaneMultigraph};
use crate::trigraph::{
    verify_certificate, ContractionSequence, ContractionStep, Rejection, Trigraph, Verdict,
    WidthTrace,
};

/// Width claimed for every G_k.
pub const WITNESS_WIDTH: usize = 7;

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("phase 3: {0}")]
    Embedding(#[from] EmbeddingError),
    #[error("witness rejected: {0}")]
    Rejected(Rejection),
}

#[derive(Clone, Debug)]
pub struct WitnessPlan {
    pub phase1: ContractionSequence,
    pub phase2: ContractionSequence,
    pub phase3: ContractionSequence,
    pub trace: WidthTrace,
}

impl WitnessPlan {
    pub fn sequence(&self) -> ContractionSequence {
        let mut s = self.phase1.clone();
        s.extend_from(&self.phase2);
        s.extend_from(&self.phase3);
        s
    }
}

/// Per skeleton face, contracts the other five non-skeleton vertices into the
/// lowest-id triangle vertex, in ascending id order.
pub fn phase1_collapse_faces(g: &GkGraph) -> ContractionSequence {
    let mut seq = ContractionSequence::new();
    for face in &g.skeleton_faces {
        let mut members = face.non_skeleton();
        members.sort_unstable();
        let rep = face.triangle.iter().copied().min().unwrap();
        for &m in members.iter().filter(|&&m| m != rep) {
            seq.push(ContractionStep::new(rep, m));
        }
    }
    seq
}

/// Representative left in each skeleton face by phase 1.
pub fn face_representatives(g: &GkGraph) -> Vec<usize> {
    g.skeleton_faces
        .iter()
        .map(|f| f.triangle.iter().copied().min().unwrap())
        .collect()
}

/// For each skeleton vertex in `order`, folds the representatives of the
/// faces whose remaining corners come later in `order` into one vertex and
/// contracts that vertex into the skeleton vertex.
pub fn phase2_absorb(g: &GkGraph, order: &[usize]) -> ContractionSequence {
    let mut position = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let reps = face_representatives(g);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    for (face, &rep) in g.skeleton_faces.iter().zip(&reps) {
        let first = face.corners.iter().map(|&c| position[c]).min().unwrap();
        groups[first].push(rep);
    }
    let mut seq = ContractionSequence::new();
    for (i, group) in groups.iter_mut().enumerate() {
        if group.is_empty() {
            continue;
        }
        group.sort_unstable();
        let head = group[0];
        for &other in &group[1..] {
            seq.push(ContractionStep::new(head, other));
        }
        seq.push(ContractionStep::new(order[i], head));
    }
    seq
}

/// What drove one phase-3 contraction.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Phase3Move {
    /// An edge at a vertex of degree at most two.
    LowDegree { vertex: usize, degree: usize },
    /// An edge with endpoint degree sum at most 11.
    Light { degree_sum: usize },
}

/// Observations of the multigraph around one phase-3 contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phase3Record {
    pub step: ContractionStep,
    pub kind: Phase3Move,
    pub min_degree_before: usize,
    pub max_degree_after: usize,
    pub merged_degree: usize,
    pub has_two_face_after: bool,
    pub euler_ok_after: bool,
}

/// Reduces a plane triangulation (given by its embedding) to a single
/// vertex. Each embedded contraction is mirrored as a trigraph step on the
/// same pair, the lower id surviving.
pub fn phase3_reduce_triangulation(
    embedding: &PlaneMultigraph,
) -> Result<(ContractionSequence, Vec<Phase3Record>), EmbeddingError> {
    let mut emb = embedding.clone();
    let mut seq = ContractionSequence::new();
    let mut records = Vec::new();
    while emb.vertex_count() > 1 {
        let min_degree_before = emb.min_degree();
        let (dart, kind) = match emb.low_degree_vertex() {
            Some(v) => {
                let dart = emb
                    .rotation(v)
                    .into_iter()
                    .filter(|&d| emb.target(d) != v)
                    .min()
                    .ok_or_else(|| {
                        EmbeddingError::Precondition(format!("vertex {v} has only loops"))
                    })?;
                (
                    dart,
                    Phase3Move::LowDegree {
                        vertex: v,
                        degree: emb.degree(v),
                    },
                )
            }
            None => {
                let light = emb.find_light_edge()?;
                (
                    light.edge.dart,
                    Phase3Move::Light {
                        degree_sum: light.degree_sum,
                    },
                )
            }
        };
        let (a, b) = (emb.origin(dart), emb.target(dart));
        let dart = if a < b { dart } else { dart ^ 1 };
        let res = emb.contract_embedded_edge(dart)?;
        seq.push(ContractionStep::new(res.keep, res.removed));
        records.push(Phase3Record {
            step: ContractionStep::new(res.keep, res.removed),
            kind,
            min_degree_before,
            max_degree_after: emb.max_degree(),
            merged_degree: emb.degree(res.keep),
            has_two_face_after: emb.has_two_face(),
            euler_ok_after: emb.euler_check().is_ok(),
        });
    }
    Ok((seq, records))
}

/// Full witness for G_k, replayed and checked against width seven.
pub fn synthesize_for(g: &GkGraph) -> Result<WitnessPlan, WitnessError> {
    let phase1 = phase1_collapse_faces(g);
    let order: Vec<usize> = (0..g.skeleton_count()).collect();
    let phase2 = phase2_absorb(g, &order);
    let (_, skeleton_emb) = g.skeleton_subgraph();
    let (phase3, _) = phase3_reduce_triangulation(&skeleton_emb)?;
    let mut plan = WitnessPlan {
        phase1,
        phase2,
        phase3,
        trace: WidthTrace::default(),
    };
    match verify_certificate(&g.graph, &plan.sequence(), WITNESS_WIDTH) {
        Verdict::Accept(trace) => {
            plan.trace = trace;
            Ok(plan)
        }
        Verdict::Reject(r) => Err(WitnessError::Rejected(r)),
    }
}

pub fn synthesize_witness(k: usize) -> Result<(ContractionSequence, WidthTrace), WitnessError> {
    let g = crate::construction::build_gk(k);
    let plan = synthesize_for(&g)?;
    Ok((plan.sequence(), plan.trace))
}

/// Replays a prefix of a witness and returns the state it reaches.
pub fn state_after(g: &Trigraph, seq: &ContractionSequence) -> Trigraph {
    g.replay_into(seq).expect("witness steps are well formed")
}

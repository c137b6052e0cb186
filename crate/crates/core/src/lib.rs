//! Twin-width toolkit: trigraph contraction, plane multigraph embeddings,
//! the planar family G_k with a width-7 contraction witness, an exact solver
//! for small graphs, and structural predicates on G_k skeletons.

pub mod analyzer;
pub mod construction;
pub mod embedding;
pub mod io;
pub mod solver;
pub mod trigraph;
pub mod witness;

pub use construction::{build_gk, degree_histogram, icosahedron, GkGraph, SkeletonFace, VertexRole};
pub use embedding::{EmbeddingError, FaceRecord, PlaneMultigraph};
pub use io::Certificate;
pub use trigraph::{
    verify_certificate, ContractionSequence, ContractionStep, EdgeColor, Rejection, Trigraph,
    TrigraphError, Verdict, VertexId, WidthTrace,
};

//! The icosahedron and the graphs G_k built on it.
//!
//! G_k: subdivide every icosahedron edge k times, fill each icosahedron face
//! with the matching piece of the triangular lattice (the skeleton), put a
//! triangle into every skeleton face with each triangle vertex joined to a
//! distinct face corner, and put a vertex into each resulting 4-face.
//!
//! Vertex ids: the 12 corners first, then subdivision vertices, then lattice
//! interior vertices, then six non-skeleton vertices per skeleton face.
//! Skeleton ids therefore form the prefix `0..skeleton_n`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::embedding::PlaneMultigraph;
use crate::trigraph::{Trigraph, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexRole {
    Corner,
    Subdivision,
    LatticeInterior,
    FaceTriangle,
    QuadCenter,
}

impl VertexRole {
    pub fn is_skeleton(self) -> bool {
        matches!(
            self,
            VertexRole::Corner | VertexRole::Subdivision | VertexRole::LatticeInterior
        )
    }
}

/// The non-skeleton gadget inside one skeleton face.
///
/// `triangle[i]` is joined to `corners[i]`; `quads[i]` is the center of the
/// 4-face bounded by `corners[i]`, `corners[i+1]`, `triangle[i+1]`,
/// `triangle[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonFace {
    pub corners: [usize; 3],
    pub triangle: [usize; 3],
    pub quads: [usize; 3],
}

impl SkeletonFace {
    pub fn non_skeleton(&self) -> [usize; 6] {
        let [a, b, c] = self.triangle;
        let [p, q, r] = self.quads;
        [a, b, c, p, q, r]
    }
}

#[derive(Clone, Debug)]
pub struct GkGraph {
    pub k: usize,
    pub graph: Trigraph,
    pub embedding: PlaneMultigraph,
    pub roles: Vec<VertexRole>,
    pub skeleton_faces: Vec<SkeletonFace>,
    /// Oriented triangles of the skeleton, parallel to `skeleton_faces`.
    skeleton_triangles: Vec<[usize; 3]>,
}

impl GkGraph {
    pub fn vertex_count(&self) -> usize {
        self.roles.len()
    }

    pub fn skeleton_count(&self) -> usize {
        self.roles.iter().filter(|r| r.is_skeleton()).count()
    }

    pub fn is_skeleton(&self, v: usize) -> bool {
        self.roles[v].is_skeleton()
    }

    /// Per-vertex skeleton flags.
    pub fn skeleton_flags(&self) -> Vec<bool> {
        self.roles.iter().map(|r| r.is_skeleton()).collect()
    }

    /// The subgraph induced by skeleton vertices with its embedding. Ids are
    /// unchanged.
    pub fn skeleton_subgraph(&self) -> (Trigraph, PlaneMultigraph) {
        let faces: Vec<Vec<usize>> = self.skeleton_triangles.iter().map(|t| t.to_vec()).collect();
        let emb = PlaneMultigraph::from_oriented_faces(self.skeleton_count(), &faces)
            .expect("skeleton faces are consistently oriented");
        (emb.to_trigraph(), emb)
    }

    pub fn metadata(&self) -> GkMetadata {
        GkMetadata {
            k: self.k,
            n: self.vertex_count(),
            m: self.graph.edge_count(),
            skeleton_n: self.skeleton_count(),
            histogram: degree_histogram(&self.graph),
        }
    }
}

/// Summary emitted next to exported graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkMetadata {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub skeleton_n: usize,
    pub histogram: BTreeMap<usize, usize>,
}

/// Canonical icosahedron faces: vertex 0 on top, 1..=5 upper ring, 6..=10
/// lower ring (6+i sits between 1+i and 1+(i+1)), 11 at the bottom.
pub fn icosahedron_faces() -> Vec<[usize; 3]> {
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push([0, up(i), up(i + 1)]);
    }
    for i in 0..5 {
        faces.push([up(i), low(i), up(i + 1)]);
        faces.push([up(i + 1), low(i), low(i + 1)]);
    }
    for i in 0..5 {
        faces.push([11, low(i + 1), low(i)]);
    }
    faces
}

pub fn icosahedron() -> (Trigraph, PlaneMultigraph) {
    let faces: Vec<Vec<usize>> = icosahedron_faces().iter().map(|f| f.to_vec()).collect();
    let emb = PlaneMultigraph::from_oriented_faces(12, &faces).expect("icosahedron is consistent");
    (emb.to_trigraph(), emb)
}

/// Multiset of vertex degrees.
pub fn degree_histogram(g: &Trigraph) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in g.vertices() {
        *h.entry(g.degree(v)).or_insert(0) += 1;
    }
    h
}

/// Skeleton vertex count 10k^2 + 20k + 12.
pub fn skeleton_vertex_count(k: usize) -> usize {
    10 * k * k + 20 * k + 12
}

/// Subdivided and latticed icosahedron: skeleton roles and oriented faces.
fn build_skeleton(k: usize) -> (Vec<VertexRole>, Vec<[usize; 3]>) {
    let m = k + 1;
    let ico = icosahedron_faces();
    let mut roles = vec![VertexRole::Corner; 12];

    // subdivision vertices, keyed by (lower corner, higher corner, steps
    // from the lower corner)
    let mut edge_list: Vec<(usize, usize)> = ico
        .iter()
        .flat_map(|f| (0..3).map(move |i| (f[i].min(f[(i + 1) % 3]), f[i].max(f[(i + 1) % 3]))))
        .collect();
    edge_list.sort_unstable();
    edge_list.dedup();
    let mut subdiv: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for &(p, q) in &edge_list {
        for t in 1..=k {
            subdiv.insert((p, q, t), roles.len());
            roles.push(VertexRole::Subdivision);
        }
    }

    let mut faces = Vec::with_capacity(20 * m * m);
    for &[a, b, c] in &ico {
        let corners = [a, b, c];
        let mut interior: HashMap<(usize, usize), usize> = HashMap::new();
        // barycentric point (i, j, l), i + j + l = m, weights of a, b, c
        let mut id = |p: [usize; 3], roles: &mut Vec<VertexRole>| -> usize {
            let nonzero: Vec<usize> = (0..3).filter(|&x| p[x] > 0).collect();
            match nonzero.len() {
                1 => corners[nonzero[0]],
                2 => {
                    let (x, y) = (nonzero[0], nonzero[1]);
                    let (cx, cy) = (corners[x], corners[y]);
                    // distance from corner cx is p[y]
                    if cx < cy {
                        subdiv[&(cx, cy, p[y])]
                    } else {
                        subdiv[&(cy, cx, p[x])]
                    }
                }
                _ => *interior.entry((p[0], p[1])).or_insert_with(|| {
                    roles.push(VertexRole::LatticeInterior);
                    roles.len() - 1
                }),
            }
        };
        for i in 0..m {
            for j in 0..m - i {
                let l = m - 1 - i - j;
                faces.push([
                    id([i + 1, j, l], &mut roles),
                    id([i, j + 1, l], &mut roles),
                    id([i, j, l + 1], &mut roles),
                ]);
            }
        }
        for i in 0..m.saturating_sub(1) {
            for j in 0..m - 1 - i {
                let l = m - 2 - i - j;
                faces.push([
                    id([i, j + 1, l + 1], &mut roles),
                    id([i + 1, j, l + 1], &mut roles),
                    id([i + 1, j + 1, l], &mut roles),
                ]);
            }
        }
    }
    (roles, faces)
}

/// Builds G_k.
pub fn build_gk(k: usize) -> GkGraph {
    let (mut roles, skeleton_triangles) = build_skeleton(k);
    let mut registry = Vec::with_capacity(skeleton_triangles.len());
    let mut faces: Vec<Vec<usize>> = Vec::with_capacity(13 * skeleton_triangles.len());
    for &corners in &skeleton_triangles {
        let base = roles.len();
        roles.extend([VertexRole::FaceTriangle; 3]);
        roles.extend([VertexRole::QuadCenter; 3]);
        let t = [base, base + 1, base + 2];
        let q = [base + 3, base + 4, base + 5];
        faces.push(t.to_vec());
        for i in 0..3 {
            let j = (i + 1) % 3;
            let (a, b, x, y, c) = (corners[i], corners[j], t[i], t[j], q[i]);
            // 4-face a -> b -> y -> x split around its center c
            faces.push(vec![a, b, c]);
            faces.push(vec![b, y, c]);
            faces.push(vec![y, x, c]);
            faces.push(vec![x, a, c]);
        }
        registry.push(SkeletonFace {
            corners,
            triangle: t,
            quads: q,
        });
    }
    let embedding =
        PlaneMultigraph::from_oriented_faces(roles.len(), &faces).expect("G_k faces are consistent");
    let graph = embedding.to_trigraph();
    GkGraph {
        k,
        graph,
        embedding,
        roles,
        skeleton_faces: registry,
        skeleton_triangles,
    }
}

/// Skeleton vertices of degree five in the skeleton (the 12 corners).
pub fn skeleton_five_vertices(skeleton: &Trigraph) -> Vec<VertexId> {
    skeleton.vertices().filter(|&v| skeleton.degree(v) == 5).collect()
}

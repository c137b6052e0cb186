//! Combinatorial embeddings of plane multigraphs.
//!
//! Every edge is a pair of darts `2e` and `2e + 1`; the twin of dart `d` is
//! `d ^ 1`. Each vertex keeps its outgoing darts in a cyclic rotation, and
//! faces are the orbits of `d -> rot_next(twin(d))`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::trigraph::Trigraph;

pub type DartId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("inconsistent rotation system: {0}")]
    Inconsistent(String),
    #[error("Euler check failed on component of vertex {vertex}: V={v} E={e} F={f}")]
    Euler {
        vertex: usize,
        v: usize,
        e: usize,
        f: usize,
    },
    #[error("dart {0} does not exist")]
    UnknownDart(DartId),
    #[error("cannot contract loop dart {0}")]
    LoopContraction(DartId),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no edge with degree sum at most 11 (embedding bug)")]
    NoLightEdge,
    #[error("separating cycle enumeration supports lengths up to 4, got {0}")]
    UnsupportedCycleLength(usize),
}

/// A facial walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRecord {
    pub darts: Vec<DartId>,
    pub length: usize,
}

/// An edge returned by queries, reported from its lower-id endpoint.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EdgeRef {
    /// Dart with origin `u`.
    pub dart: DartId,
    pub u: usize,
    pub v: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct LightEdge {
    pub edge: EdgeRef,
    pub degree_sum: usize,
}

/// Result of [`PlaneMultigraph::contract_embedded_edge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedContraction {
    pub keep: usize,
    pub removed: usize,
    /// Edge ids deleted by the 2-face cleanup.
    pub cleaned_edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneMultigraph {
    origin: Vec<usize>,
    dart_alive: Vec<bool>,
    rot_next: Vec<DartId>,
    rot_prev: Vec<DartId>,
    first: Vec<Option<DartId>>,
    vertex_alive: Vec<bool>,
    degree: Vec<usize>,
}

#[inline]
pub fn twin(d: DartId) -> DartId {
    d ^ 1
}

impl PlaneMultigraph {
    fn with_capacity(n: usize, darts: usize) -> Self {
        PlaneMultigraph {
            origin: vec![usize::MAX; darts],
            dart_alive: vec![false; darts],
            rot_next: vec![usize::MAX; darts],
            rot_prev: vec![usize::MAX; darts],
            first: vec![None; n],
            vertex_alive: vec![true; n],
            degree: vec![0; n],
        }
    }

    /// Builds an embedding from consistently oriented faces. Every directed
    /// pair `(a, b)` of consecutive face vertices must occur exactly once and
    /// its reverse must occur in some other face.
    pub fn from_oriented_faces(n: usize, faces: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        let mut edge_of: HashMap<(usize, usize), usize> = HashMap::new();
        let mut directed: HashMap<(usize, usize), DartId> = HashMap::new();
        for face in faces {
            for i in 0..face.len() {
                let (a, b) = (face[i], face[(i + 1) % face.len()]);
                if a >= n || b >= n || a == b {
                    return Err(EmbeddingError::Inconsistent(format!("bad face edge {a}-{b}")));
                }
                let key = (a.min(b), a.max(b));
                let next_id = edge_of.len();
                let e = *edge_of.entry(key).or_insert(next_id);
                let dart = 2 * e + usize::from(a > b);
                if directed.insert((a, b), dart).is_some() {
                    return Err(EmbeddingError::Inconsistent(format!(
                        "directed edge {a}->{b} appears in two faces"
                    )));
                }
            }
        }
        let mut g = PlaneMultigraph::with_capacity(n, 2 * edge_of.len());
        for (&(a, _), &d) in &directed {
            g.origin[d] = a;
            g.dart_alive[d] = true;
        }
        for d in 0..g.origin.len() {
            if !g.dart_alive[d] {
                return Err(EmbeddingError::Inconsistent(format!(
                    "edge {} is traversed in only one direction",
                    d / 2
                )));
            }
        }
        // face (.., a, b, c, ..) means rot_next(b->a) = b->c
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                let from = directed[&(b, a)];
                let to = directed[&(b, c)];
                g.rot_next[from] = to;
                g.rot_prev[to] = from;
            }
        }
        for d in 0..g.origin.len() {
            let v = g.origin[d];
            g.degree[v] += 1;
            if g.first[v].is_none() {
                g.first[v] = Some(d);
            }
        }
        g.validate()?;
        Ok(g)
    }

    /// Builds an embedding from explicit rotations (vertex -> darts in
    /// cyclic order). Vertices not listed are treated as absent.
    pub fn from_rotations(rotations: &BTreeMap<usize, Vec<DartId>>) -> Result<Self, EmbeddingError> {
        let n = rotations.keys().next_back().map_or(0, |&v| v + 1);
        let max_dart = rotations.values().flatten().copied().max();
        let darts = max_dart.map_or(0, |d| (d | 1) + 1);
        let mut g = PlaneMultigraph::with_capacity(n, darts);
        g.vertex_alive.iter_mut().for_each(|a| *a = false);
        for (&v, rot) in rotations {
            g.vertex_alive[v] = true;
            for (i, &d) in rot.iter().enumerate() {
                if g.dart_alive[d] {
                    return Err(EmbeddingError::Inconsistent(format!("dart {d} listed twice")));
                }
                g.dart_alive[d] = true;
                g.origin[d] = v;
                let nd = rot[(i + 1) % rot.len()];
                g.rot_next[d] = nd;
                g.rot_prev[nd] = d;
            }
            g.degree[v] = rot.len();
            g.first[v] = rot.first().copied();
        }
        g.validate()?;
        Ok(g)
    }

    /// Checks that rotations partition the darts by origin and that every
    /// dart has a twin.
    pub fn validate(&self) -> Result<(), EmbeddingError> {
        let bad = |m: String| Err(EmbeddingError::Inconsistent(m));
        for d in self.darts() {
            if !self.dart_alive.get(twin(d)).copied().unwrap_or(false) {
                return bad(format!("dart {d} has no twin"));
            }
            let v = self.origin[d];
            if v >= self.vertex_alive.len() || !self.vertex_alive[v] {
                return bad(format!("dart {d} starts at missing vertex {v}"));
            }
            let n = self.rot_next[d];
            if n >= self.origin.len() || !self.dart_alive[n] || self.rot_prev[n] != d {
                return bad(format!("rotation links broken at dart {d}"));
            }
            if self.origin[n] != v {
                return bad(format!("rotation at {v} leaves the vertex at dart {d}"));
            }
        }
        for v in self.vertices() {
            let count = match self.first[v] {
                None => 0,
                Some(f) => {
                    let mut c = 1;
                    let mut d = self.rot_next[f];
                    while d != f {
                        c += 1;
                        if c > self.origin.len() {
                            return bad(format!("rotation at {v} does not close"));
                        }
                        d = self.rot_next[d];
                    }
                    c
                }
            };
            if count != self.degree[v] {
                return bad(format!("rotation at {v} has {count} darts, degree {}", self.degree[v]));
            }
        }
        let total: usize = self.vertices().map(|v| self.degree[v]).sum();
        if total != self.darts().count() {
            return bad("darts not partitioned by rotations".into());
        }
        Ok(())
    }

    pub fn vertex_capacity(&self) -> usize {
        self.vertex_alive.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_alive.len()).filter(|&v| self.vertex_alive[v])
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.vertex_alive.len() && self.vertex_alive[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_alive.iter().filter(|&&a| a).count()
    }

    pub fn darts(&self) -> impl Iterator<Item = DartId> + '_ {
        (0..self.dart_alive.len()).filter(|&d| self.dart_alive[d])
    }

    pub fn edge_count(&self) -> usize {
        self.darts().count() / 2
    }

    pub fn origin(&self, d: DartId) -> usize {
        self.origin[d]
    }

    pub fn target(&self, d: DartId) -> usize {
        self.origin[twin(d)]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    /// Darts leaving `v` in rotation order.
    pub fn rotation(&self, v: usize) -> Vec<DartId> {
        let mut out = Vec::with_capacity(self.degree[v]);
        if let Some(f) = self.first[v] {
            let mut d = f;
            loop {
                out.push(d);
                d = self.rot_next[d];
                if d == f {
                    break;
                }
            }
        }
        out
    }

    #[inline]
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next[twin(d)]
    }

    /// One record per edge (loops included), from the lower-id endpoint.
    pub fn edges(&self) -> Vec<EdgeRef> {
        (0..self.dart_alive.len())
            .step_by(2)
            .filter(|&d| self.dart_alive[d])
            .map(|d| {
                let (a, b) = (self.origin[d], self.target(d));
                if a <= b {
                    EdgeRef { dart: d, u: a, v: b }
                } else {
                    EdgeRef {
                        dart: twin(d),
                        u: b,
                        v: a,
                    }
                }
            })
            .collect()
    }

    /// Enumerates the faces, each starting at its smallest dart.
    pub fn faces(&self) -> Result<Vec<FaceRecord>, EmbeddingError> {
        self.validate()?;
        Ok(self.faces_unchecked())
    }

    fn faces_unchecked(&self) -> Vec<FaceRecord> {
        let mut seen = vec![false; self.dart_alive.len()];
        let mut faces = Vec::new();
        for start in self.darts() {
            if seen[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                darts.push(d);
                d = self.face_next(d);
            }
            faces.push(FaceRecord {
                length: darts.len(),
                darts,
            });
        }
        faces
    }

    /// Vertex sequence of a facial walk.
    pub fn face_vertices(&self, face: &FaceRecord) -> Vec<usize> {
        face.darts.iter().map(|&d| self.origin[d]).collect()
    }

    /// Checks V - E + F = 2 on every connected component. An isolated vertex
    /// counts as one face.
    pub fn euler_check(&self) -> Result<(), EmbeddingError> {
        let faces = self.faces()?;
        let comp = self.components();
        let mut stats: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
        for v in self.vertices() {
            let s = stats.entry(comp[v]).or_default();
            s.0 += 1;
            if self.degree[v] == 0 {
                s.2 += 1;
            }
        }
        for e in self.edges() {
            stats.entry(comp[e.u]).or_default().1 += 1;
        }
        for f in &faces {
            stats.entry(comp[self.origin[f.darts[0]]]).or_default().2 += 1;
        }
        for (root, (v, e, f)) in stats {
            if v + f != e + 2 {
                return Err(EmbeddingError::Euler {
                    vertex: root,
                    v,
                    e,
                    f,
                });
            }
        }
        Ok(())
    }

    /// Component label per vertex: the smallest vertex id of its component.
    fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.vertex_alive.len()];
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = s;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for d in self.rotation(v) {
                    let w = self.target(d);
                    if comp[w] == usize::MAX {
                        comp[w] = s;
                        stack.push(w);
                    }
                }
            }
        }
        comp
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree[v]).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree[v]).min().unwrap_or(0)
    }

    pub fn min_face_length(&self) -> Result<usize, EmbeddingError> {
        Ok(self.faces()?.iter().map(|f| f.length).min().unwrap_or(0))
    }

    /// Smallest-id vertex of degree at most two, if any.
    pub fn low_degree_vertex(&self) -> Option<usize> {
        self.vertices().find(|&v| self.degree[v] <= 2)
    }

    /// Edge whose endpoint degrees sum to at most 11. Such an edge exists in
    /// every plane multigraph with max degree at most 7, min degree at least
    /// 3 and min face length at least 3. Ties: smallest degree sum, then
    /// endpoint ids, then dart id.
    pub fn find_light_edge(&self) -> Result<LightEdge, EmbeddingError> {
        let (maxd, mind) = (self.max_degree(), self.min_degree());
        if maxd > 7 {
            return Err(EmbeddingError::Precondition(format!("max degree {maxd} > 7")));
        }
        if mind < 3 {
            return Err(EmbeddingError::Precondition(format!("min degree {mind} < 3")));
        }
        let minf = self.min_face_length()?;
        if minf < 3 {
            return Err(EmbeddingError::Precondition(format!("face of length {minf}")));
        }
        self.edges()
            .into_iter()
            .filter(|e| e.u != e.v)
            .map(|e| LightEdge {
                edge: e,
                degree_sum: self.degree[e.u] + self.degree[e.v],
            })
            .filter(|l| l.degree_sum <= 11)
            .min_by_key(|l| (l.degree_sum, l.edge.u, l.edge.v, l.edge.dart))
            .ok_or(EmbeddingError::NoLightEdge)
    }

    /// True if some face has length two and consists of two distinct edges.
    pub fn has_two_face(&self) -> bool {
        self.darts().any(|d| self.is_two_face_at(d))
    }

    fn is_two_face_at(&self, d: DartId) -> bool {
        let n = self.face_next(d);
        n != twin(d) && n != d && self.face_next(n) == d
    }

    fn remove_dart_from_rotation(&mut self, d: DartId) {
        let v = self.origin[d];
        let (p, n) = (self.rot_prev[d], self.rot_next[d]);
        if n == d {
            self.first[v] = None;
        } else {
            self.rot_next[p] = n;
            self.rot_prev[n] = p;
            if self.first[v] == Some(d) {
                self.first[v] = Some(n);
            }
        }
        self.degree[v] -= 1;
        self.dart_alive[d] = false;
    }

    /// Deletes edge `e` (darts `2e`, `2e + 1`).
    pub fn remove_edge(&mut self, e: usize) -> Result<(), EmbeddingError> {
        let d = 2 * e;
        if d >= self.dart_alive.len() || !self.dart_alive[d] {
            return Err(EmbeddingError::UnknownDart(d));
        }
        self.remove_dart_from_rotation(d);
        self.remove_dart_from_rotation(d + 1);
        Ok(())
    }

    /// Contracts the edge of dart `d` into its origin, then removes one
    /// parallel edge from each 2-face created, repeating until none is left.
    /// Faces of length one (empty loops) are removed as well.
    pub fn contract_embedded_edge(&mut self, d: DartId) -> Result<EmbeddedContraction, EmbeddingError> {
        if d >= self.dart_alive.len() || !self.dart_alive[d] {
            return Err(EmbeddingError::UnknownDart(d));
        }
        let (u, v) = (self.origin[d], self.target(d));
        if u == v {
            return Err(EmbeddingError::LoopContraction(d));
        }
        if self.has_two_face() {
            return Err(EmbeddingError::Precondition("embedding has a 2-face".into()));
        }
        let b = twin(d);
        // rotation at u starting at d, rotation at v starting after b
        let rot_u: Vec<DartId> = self.rotation_from(d).into_iter().skip(1).collect();
        let rot_v: Vec<DartId> = self.rotation_from(b).into_iter().skip(1).collect();
        let merged: Vec<DartId> = rot_v.iter().chain(&rot_u).copied().collect();

        self.dart_alive[d] = false;
        self.dart_alive[b] = false;
        for &x in &rot_v {
            self.origin[x] = u;
        }
        self.set_rotation(u, &merged);
        self.vertex_alive[v] = false;
        self.first[v] = None;
        self.degree[v] = 0;

        let mut cleaned = Vec::new();
        loop {
            let mut victim = None;
            for f in self.faces_unchecked() {
                match f.length {
                    1 => {
                        victim = Some(f.darts[0] / 2);
                    }
                    2 if f.darts[1] != twin(f.darts[0]) => {
                        victim = Some((f.darts[0] / 2).max(f.darts[1] / 2));
                    }
                    _ => {}
                }
                if victim.is_some() {
                    break;
                }
            }
            match victim {
                Some(e) => {
                    self.remove_edge(e)?;
                    cleaned.push(e);
                }
                None => break,
            }
        }
        Ok(EmbeddedContraction {
            keep: u,
            removed: v,
            cleaned_edges: cleaned,
        })
    }

    fn rotation_from(&self, d: DartId) -> Vec<DartId> {
        let mut out = vec![d];
        let mut x = self.rot_next[d];
        while x != d {
            out.push(x);
            x = self.rot_next[x];
        }
        out
    }

    fn set_rotation(&mut self, v: usize, rot: &[DartId]) {
        self.degree[v] = rot.len();
        self.first[v] = rot.first().copied();
        for (i, &x) in rot.iter().enumerate() {
            let n = rot[(i + 1) % rot.len()];
            self.rot_next[x] = n;
            self.rot_prev[n] = x;
        }
    }

    /// Underlying simple graph as an all-black trigraph over the same ids.
    pub fn to_trigraph(&self) -> Trigraph {
        let edges: BTreeSet<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|e| e.u != e.v)
            .map(|e| (e.u, e.v))
            .collect();
        let mut g = Trigraph::from_black_edges(self.vertex_capacity(), edges)
            .expect("embedding edges are in range");
        let mut alive = fixedbitset::FixedBitSet::with_capacity(self.vertex_capacity());
        for v in self.vertices() {
            alive.insert(v);
        }
        if alive.count_ones(..) != self.vertex_capacity() {
            g = g.induced(&alive);
        }
        g
    }

    fn dart_between(&self, a: usize, b: usize) -> Option<DartId> {
        self.rotation(a).into_iter().find(|&d| self.target(d) == b)
    }

    /// True if the closed walk `cycle` is the boundary of a face, in either
    /// direction.
    pub fn is_facial_cycle(&self, cycle: &[usize]) -> bool {
        if cycle.is_empty() {
            return false;
        }
        let Ok(faces) = self.faces() else {
            return false;
        };
        let rev: Vec<usize> = cycle.iter().rev().copied().collect();
        faces.iter().any(|f| {
            let fv = self.face_vertices(f);
            fv.len() == cycle.len() && (is_rotation_of(&fv, cycle) || is_rotation_of(&fv, &rev))
        })
    }

    /// True if both sides of the simple cycle contain a vertex.
    pub fn is_separating_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
        let (mut left, mut right) = (false, false);
        for i in 0..k {
            let c = cycle[i];
            let (Some(out), Some(inc)) = (
                self.dart_between(c, cycle[(i + 1) % k]),
                self.dart_between(c, cycle[(i + k - 1) % k]),
            ) else {
                return false;
            };
            let mut side = true;
            for d in self.rotation_from(out).into_iter().skip(1) {
                if d == inc {
                    side = false;
                    continue;
                }
                if !on_cycle.contains(&self.target(d)) {
                    if side {
                        left = true;
                    } else {
                        right = true;
                    }
                }
            }
        }
        left && right
    }

    /// All separating cycles of length 3..=`max_len` in the underlying simple
    /// graph. Each cycle starts at its smallest vertex, second vertex smaller
    /// than the last.
    pub fn separating_cycles_up_to(&self, max_len: usize) -> Result<Vec<Vec<usize>>, EmbeddingError> {
        if max_len > 4 {
            return Err(EmbeddingError::UnsupportedCycleLength(max_len));
        }
        let adj = self.simple_adjacency();
        let mut out = Vec::new();
        for c in short_cycles(&adj, max_len) {
            if self.is_separating_cycle(&c) {
                out.push(c);
            }
        }
        Ok(out)
    }

    fn simple_adjacency(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        let mut adj: BTreeMap<usize, BTreeSet<usize>> =
            self.vertices().map(|v| (v, BTreeSet::new())).collect();
        for e in self.edges() {
            if e.u != e.v {
                adj.get_mut(&e.u).unwrap().insert(e.v);
                adj.get_mut(&e.v).unwrap().insert(e.u);
            }
        }
        adj
    }
}

fn is_rotation_of(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

/// Simple 3- and 4-cycles (as requested by `max_len`) of a simple graph,
/// each listed once.
pub(crate) fn short_cycles(adj: &BTreeMap<usize, BTreeSet<usize>>, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for (&a, na) in adj {
        for &b in na.range(a + 1..) {
            if max_len >= 3 {
                for &c in adj[&b].range(b + 1..) {
                    if na.contains(&c) {
                        out.push(vec![a, b, c]);
                    }
                }
            }
            if max_len >= 4 {
                for &c in adj[&b].range(a + 1..) {
                    if c == b {
                        continue;
                    }
                    for &d in adj[&c].range(b + 1..) {
                        if d != c && na.contains(&d) {
                            out.push(vec![a, b, c, d]);
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneMultigraph {
        PlaneMultigraph::from_oriented_faces(3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    /// Two triangles 0-1-2 and 0-2-3 glued along 0-2, outer face 0-3-2-1.
    fn diamond() -> PlaneMultigraph {
        PlaneMultigraph::from_oriented_faces(
            4,
            &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 2, 1]],
        )
        .unwrap()
    }

    fn k2() -> PlaneMultigraph {
        let mut r = BTreeMap::new();
        r.insert(0, vec![0]);
        r.insert(1, vec![1]);
        PlaneMultigraph::from_rotations(&r).unwrap()
    }

    #[test]
    fn k2_has_one_face_of_length_two() {
        let g = k2();
        let f = g.faces().unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].length, 2);
        assert_eq!(g.min_face_length().unwrap(), 2);
        assert_eq!(g.max_degree(), 1);
        g.euler_check().unwrap();
        assert!(!g.has_two_face());
    }

    #[test]
    fn triangle_faces() {
        let g = triangle();
        let f = g.faces().unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|f| f.length == 3));
        g.euler_check().unwrap();
        assert!(g.is_facial_cycle(&[0, 1, 2]));
        assert!(g.is_facial_cycle(&[2, 1, 0]));
    }

    #[test]
    fn contract_triangle_edge() {
        let mut g = triangle();
        let e = g.edges()[0];
        let res = g.contract_embedded_edge(e.dart).unwrap();
        assert_eq!(res.cleaned_edges.len(), 1);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(!g.has_two_face());
        g.euler_check().unwrap();
    }

    #[test]
    fn contract_shared_edge_of_diamond() {
        let mut g = diamond();
        let shared = g.edges().into_iter().find(|e| (e.u, e.v) == (0, 2)).unwrap();
        g.contract_embedded_edge(shared.dart).unwrap();
        g.euler_check().unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(!g.has_two_face());
        // 1 and 3 each keep a single edge to the merged vertex
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.degree(3), 1);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn loop_contraction_rejected() {
        let mut r = BTreeMap::new();
        r.insert(0, vec![0, 1]);
        let mut g = PlaneMultigraph::from_rotations(&r).unwrap();
        assert_eq!(g.contract_embedded_edge(0), Err(EmbeddingError::LoopContraction(0)));
        assert_eq!(g.contract_embedded_edge(9), Err(EmbeddingError::UnknownDart(9)));
    }

    #[test]
    fn inconsistent_rotations_rejected() {
        let mut r = BTreeMap::new();
        r.insert(0, vec![0]);
        assert!(matches!(
            PlaneMultigraph::from_rotations(&r),
            Err(EmbeddingError::Inconsistent(_))
        ));
        let faces = vec![vec![0, 1, 2], vec![0, 1, 2]];
        assert!(PlaneMultigraph::from_oriented_faces(3, &faces).is_err());
    }

    #[test]
    fn light_edge_preconditions() {
        let g = triangle();
        assert!(matches!(g.find_light_edge(), Err(EmbeddingError::Precondition(_))));
    }

    #[test]
    fn cycle_length_limit() {
        assert_eq!(
            triangle().separating_cycles_up_to(5),
            Err(EmbeddingError::UnsupportedCycleLength(5))
        );
    }

    #[test]
    fn nested_triangle_is_separating() {
        // outer triangle 0,1,2 with a vertex 3 inside joined to all three,
        // and a vertex 4 outside joined to all three
        let faces = vec![
            vec![0, 1, 3],
            vec![1, 2, 3],
            vec![2, 0, 3],
            vec![1, 0, 4],
            vec![2, 1, 4],
            vec![0, 2, 4],
        ];
        let g = PlaneMultigraph::from_oriented_faces(5, &faces).unwrap();
        g.euler_check().unwrap();
        let sep = g.separating_cycles_up_to(3).unwrap();
        assert_eq!(sep, vec![vec![0, 1, 2]]);
        assert!(!g.is_facial_cycle(&[0, 1, 2]));
    }
}

//! Trigraphs and contraction sequences.
//!
//! A trigraph carries two disjoint symmetric adjacency relations, black and
//! red. Contracting a pair merges it into the surviving `keep` vertex; an
//! edge from the merged vertex to `u` stays black only when `u` was
//! black-adjacent to both members of the pair.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Identifier of a vertex. Ids are dense indices into the trigraph's
/// capacity and are never reused after a vertex is contracted away.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Color of an edge of a trigraph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Black,
    Red,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrigraphError {
    #[error("vertex {0} does not exist")]
    UnknownVertex(VertexId),
    #[error("cannot contract vertex {0} with itself")]
    SelfContraction(VertexId),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    OutOfRange(usize, usize, usize),
}

/// A structural failure while replaying a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {step}: {source}")]
pub struct ReplayError {
    pub step: usize,
    #[source]
    pub source: TrigraphError,
}

/// One contraction: `remove` is merged into `keep`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContractionStep {
    pub keep: VertexId,
    pub remove: VertexId,
}

impl ContractionStep {
    pub fn new(keep: impl Into<VertexId>, remove: impl Into<VertexId>) -> Self {
        ContractionStep {
            keep: keep.into(),
            remove: remove.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContractionSequence {
    pub steps: Vec<ContractionStep>,
}

impl ContractionSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: ContractionStep) {
        self.steps.push(step);
    }

    pub fn extend_from(&mut self, other: &ContractionSequence) {
        self.steps.extend_from_slice(&other.steps);
    }

    pub fn iter(&self) -> impl Iterator<Item = &ContractionStep> {
        self.steps.iter()
    }
}

impl From<Vec<ContractionStep>> for ContractionSequence {
    fn from(steps: Vec<ContractionStep>) -> Self {
        ContractionSequence { steps }
    }
}

impl FromIterator<ContractionStep> for ContractionSequence {
    fn from_iter<I: IntoIterator<Item = ContractionStep>>(iter: I) -> Self {
        ContractionSequence {
            steps: iter.into_iter().collect(),
        }
    }
}

impl FromIterator<(usize, usize)> for ContractionSequence {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        iter.into_iter()
            .map(|(k, r)| ContractionStep::new(k, r))
            .collect()
    }
}

/// Maximum red degree observed while replaying a sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WidthTrace {
    /// Max red degree of the input before any step.
    pub initial_max_red_degree: usize,
    /// Max red degree of the whole trigraph after each step.
    pub per_step_max_red_degree: Vec<usize>,
    pub overall_width: usize,
    /// Vertices left after the last step.
    pub remaining_vertices: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trigraph {
    alive: FixedBitSet,
    black: Vec<FixedBitSet>,
    red: Vec<FixedBitSet>,
    red_deg: Vec<usize>,
    n_alive: usize,
}

impl Trigraph {
    /// Trigraph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        let mut alive = FixedBitSet::with_capacity(n);
        alive.insert_range(..);
        Trigraph {
            alive,
            black: vec![FixedBitSet::with_capacity(n); n],
            red: vec![FixedBitSet::with_capacity(n); n],
            red_deg: vec![0; n],
            n_alive: n,
        }
    }

    /// All-black trigraph from an edge list. Duplicate edges are accepted once.
    pub fn from_black_edges<I>(n: usize, edges: I) -> Result<Self, TrigraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Trigraph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(TrigraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(TrigraphError::Loop(u));
            }
            g.black[u].insert(v);
            g.black[v].insert(u);
        }
        Ok(g)
    }

    /// Vertex capacity: one past the largest id ever valid in this graph.
    pub fn capacity(&self) -> usize {
        self.black.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.n_alive
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.capacity() && self.alive.contains(v.0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive.ones().map(VertexId)
    }

    fn check(&self, v: VertexId) -> Result<(), TrigraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(TrigraphError::UnknownVertex(v))
        }
    }

    pub fn edge(&self, u: VertexId, v: VertexId) -> Option<EdgeColor> {
        if !self.contains(u) || !self.contains(v) {
            return None;
        }
        if self.black[u.0].contains(v.0) {
            Some(EdgeColor::Black)
        } else if self.red[u.0].contains(v.0) {
            Some(EdgeColor::Red)
        } else {
            None
        }
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge(u, v).is_some()
    }

    pub fn black_neighbors(&self, v: VertexId) -> &FixedBitSet {
        &self.black[v.0]
    }

    pub fn red_neighbors(&self, v: VertexId) -> &FixedBitSet {
        &self.red[v.0]
    }

    /// Neighbors of either color.
    pub fn neighbors(&self, v: VertexId) -> FixedBitSet {
        let mut n = self.black[v.0].clone();
        n.union_with(&self.red[v.0]);
        n
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.black[v.0].count_ones(..) + self.red_deg[v.0]
    }

    pub fn red_degree(&self, v: VertexId) -> Result<usize, TrigraphError> {
        self.check(v)?;
        Ok(self.red_deg[v.0])
    }

    pub fn max_red_degree(&self) -> usize {
        self.alive
            .ones()
            .map(|v| self.red_deg[v])
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.alive
            .ones()
            .map(|v| self.black[v].count_ones(..) + self.red_deg[v])
            .sum::<usize>()
            / 2
    }

    pub fn red_edge_count(&self) -> usize {
        self.alive.ones().map(|v| self.red_deg[v]).sum::<usize>() / 2
    }

    /// Edges `(u, v, color)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId, EdgeColor)> {
        let mut out = Vec::new();
        for u in self.alive.ones() {
            for v in self.black[u].ones().filter(|&v| v > u) {
                out.push((VertexId(u), VertexId(v), EdgeColor::Black));
            }
            for v in self.red[u].ones().filter(|&v| v > u) {
                out.push((VertexId(u), VertexId(v), EdgeColor::Red));
            }
        }
        out.sort_by_key(|&(u, v, _)| (u, v));
        out
    }

    /// Inserts (or recolors) an edge. Used to build trigraphs that already
    /// carry red edges, e.g. in tests and analyzer trial states.
    pub fn set_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        color: EdgeColor,
    ) -> Result<(), TrigraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(TrigraphError::Loop(u.0));
        }
        self.clear_edge(u.0, v.0);
        match color {
            EdgeColor::Black => {
                self.black[u.0].insert(v.0);
                self.black[v.0].insert(u.0);
            }
            EdgeColor::Red => {
                self.red[u.0].insert(v.0);
                self.red[v.0].insert(u.0);
                self.red_deg[u.0] += 1;
                self.red_deg[v.0] += 1;
            }
        }
        Ok(())
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.black[u].set(v, false);
        self.black[v].set(u, false);
        if self.red[u].contains(v) {
            self.red[u].set(v, false);
            self.red[v].set(u, false);
            self.red_deg[u] -= 1;
            self.red_deg[v] -= 1;
        }
    }

    /// Black and red neighborhoods the merged vertex would get.
    fn merged_neighborhoods(&self, keep: usize, remove: usize) -> (FixedBitSet, FixedBitSet) {
        let mut black = self.black[keep].clone();
        black.intersect_with(&self.black[remove]);
        let mut all = self.black[keep].clone();
        all.union_with(&self.black[remove]);
        all.union_with(&self.red[keep]);
        all.union_with(&self.red[remove]);
        for s in [&mut black, &mut all] {
            s.set(keep, false);
            s.set(remove, false);
        }
        all.difference_with(&black);
        (black, all)
    }

    fn check_step(&self, step: ContractionStep) -> Result<(), TrigraphError> {
        self.check(step.keep)?;
        self.check(step.remove)?;
        if step.keep == step.remove {
            return Err(TrigraphError::SelfContraction(step.keep));
        }
        Ok(())
    }

    /// Red degree the merged vertex would have, without mutating the graph.
    pub fn merge_red_degree(&self, step: ContractionStep) -> Result<usize, TrigraphError> {
        self.check_step(step)?;
        let (_, red) = self.merged_neighborhoods(step.keep.0, step.remove.0);
        Ok(red.count_ones(..))
    }

    /// Maximum red degree of the whole trigraph after `step`, without
    /// mutating the graph.
    pub fn max_red_degree_after(&self, step: ContractionStep) -> Result<usize, TrigraphError> {
        self.check_step(step)?;
        let (k, r) = (step.keep.0, step.remove.0);
        let (_, red) = self.merged_neighborhoods(k, r);
        let mut best = red.count_ones(..);
        for u in self.alive.ones() {
            if u == k || u == r {
                continue;
            }
            let mut d = self.red_deg[u];
            d -= usize::from(self.red[u].contains(k)) + usize::from(self.red[u].contains(r));
            d += usize::from(red.contains(u));
            best = best.max(d);
        }
        Ok(best)
    }

    /// Contracts `step.remove` into `step.keep` in place.
    pub fn contract_in_place(&mut self, step: ContractionStep) -> Result<(), TrigraphError> {
        self.check_step(step)?;
        let (k, r) = (step.keep.0, step.remove.0);
        let (new_black, new_red) = self.merged_neighborhoods(k, r);

        let mut touched = self.neighbors(step.keep);
        touched.union_with(&self.neighbors(step.remove));
        for u in touched.ones() {
            self.clear_edge(k, u);
            self.clear_edge(r, u);
        }
        debug_assert_eq!(self.red_deg[k], 0);
        debug_assert_eq!(self.red_deg[r], 0);

        for u in new_black.ones() {
            self.black[k].insert(u);
            self.black[u].insert(k);
        }
        for u in new_red.ones() {
            self.red[k].insert(u);
            self.red[u].insert(k);
            self.red_deg[u] += 1;
        }
        self.red_deg[k] = new_red.count_ones(..);

        self.alive.set(r, false);
        self.black[r].clear();
        self.red[r].clear();
        self.n_alive -= 1;
        Ok(())
    }

    /// Returns the contracted trigraph, leaving `self` untouched.
    pub fn contract(&self, step: ContractionStep) -> Result<Trigraph, TrigraphError> {
        let mut g = self.clone();
        g.contract_in_place(step)?;
        Ok(g)
    }

    /// Applies `seq` to a copy of the trigraph and records the red degrees.
    pub fn replay(&self, seq: &ContractionSequence) -> Result<WidthTrace, ReplayError> {
        let mut g = self.clone();
        let initial = g.max_red_degree();
        let mut per_step = Vec::with_capacity(seq.len());
        for (i, &step) in seq.iter().enumerate() {
            g.contract_in_place(step)
                .map_err(|source| ReplayError { step: i, source })?;
            per_step.push(g.max_red_degree());
        }
        Ok(WidthTrace {
            initial_max_red_degree: initial,
            overall_width: per_step.iter().copied().fold(initial, usize::max),
            per_step_max_red_degree: per_step,
            remaining_vertices: g.vertex_count(),
        })
    }

    /// Like [`Trigraph::replay`] but returns the final state as well.
    pub fn replay_into(&self, seq: &ContractionSequence) -> Result<Trigraph, ReplayError> {
        let mut g = self.clone();
        for (i, &step) in seq.iter().enumerate() {
            g.contract_in_place(step)
                .map_err(|source| ReplayError { step: i, source })?;
        }
        Ok(g)
    }

    /// True if `u` and `v` have identical black and red neighborhoods
    /// apart from each other. Contracting such a pair creates no red edge.
    pub fn are_twins(&self, u: VertexId, v: VertexId) -> bool {
        let same = |rows: &[FixedBitSet]| {
            let (a, b) = (&rows[u.0], &rows[v.0]);
            a.ones()
                .filter(|&x| x != v.0)
                .eq(b.ones().filter(|&x| x != u.0))
        };
        same(&self.black) && same(&self.red)
    }

    /// Induced subtrigraph on `keep`, with the same id space.
    pub fn induced(&self, keep: &FixedBitSet) -> Trigraph {
        let mut g = self.clone();
        for v in self.alive.ones().filter(|&v| !keep.contains(v)) {
            for u in g.neighbors(VertexId(v)).ones() {
                g.clear_edge(u, v);
            }
            g.alive.set(v, false);
            g.n_alive -= 1;
        }
        g
    }

    pub fn alive_set(&self) -> &FixedBitSet {
        &self.alive
    }
}

/// Outcome of checking a certificate against a width bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept(WidthTrace),
    Reject(Rejection),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("{0}")]
    Structural(ReplayError),
    /// `step` is `None` when the input already exceeds the bound.
    #[error("red degree {red_degree} at vertex {vertex} exceeds bound {bound} {}", at_step(.step))]
    WidthExceeded {
        step: Option<usize>,
        vertex: VertexId,
        red_degree: usize,
        bound: usize,
    },
    #[error("sequence leaves {remaining} vertices")]
    NotReduced { remaining: usize },
}

fn at_step(step: &Option<usize>) -> String {
    match step {
        Some(i) => format!("after step {i}"),
        None => "in the input".to_string(),
    }
}

/// Replays `cert` on `g` and accepts iff every state has max red degree at
/// most `bound` and the sequence ends at a single vertex.
pub fn verify_certificate(g: &Trigraph, cert: &ContractionSequence, bound: usize) -> Verdict {
    let worst = |g: &Trigraph| {
        g.vertices()
            .map(|v| (g.red_deg[v.0], v))
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)))
    };
    let mut state = g.clone();
    if let Some((d, v)) = worst(&state) {
        if d > bound {
            return Verdict::Reject(Rejection::WidthExceeded {
                step: None,
                vertex: v,
                red_degree: d,
                bound,
            });
        }
    }
    let initial = state.max_red_degree();
    let mut per_step = Vec::with_capacity(cert.len());
    for (i, &step) in cert.iter().enumerate() {
        if let Err(source) = state.contract_in_place(step) {
            return Verdict::Reject(Rejection::Structural(ReplayError { step: i, source }));
        }
        let (d, v) = worst(&state).unwrap_or((0, step.keep));
        if d > bound {
            return Verdict::Reject(Rejection::WidthExceeded {
                step: Some(i),
                vertex: v,
                red_degree: d,
                bound,
            });
        }
        per_step.push(d);
    }
    if state.vertex_count() > 1 {
        return Verdict::Reject(Rejection::NotReduced {
            remaining: state.vertex_count(),
        });
    }
    Verdict::Accept(WidthTrace {
        initial_max_red_degree: initial,
        overall_width: per_step.iter().copied().fold(initial, usize::max),
        per_step_max_red_degree: per_step,
        remaining_vertices: state.vertex_count(),
    })
}

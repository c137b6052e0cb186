//! Structural predicates on skeletons of graphs derived from G_k.
//!
//! A vertex obtained by contractions is a skeleton vertex if any original
//! vertex merged into it was. Two skeleton vertices are adjacent in the
//! derived skeleton iff some of their original constituents were adjacent
//! in G_k.

use std::collections::{BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::construction::GkGraph;
use crate::embedding::{EmbeddingError, PlaneMultigraph};
use crate::trigraph::{ContractionStep, Trigraph, TrigraphError, VertexId};

/// Smallest k for which the lower-bound argument on G_k applies.
pub const LOWER_BOUND_MIN_K: usize = 7;

#[derive(Debug, Error)]
pub enum AnalyzerError {
    #[error("skeleton map does not match the graph: {0}")]
    InconsistentMap(String),
    #[error(transparent)]
    Graph(#[from] TrigraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// Tracks which original skeleton vertices were merged into each vertex.
#[derive(Clone, Debug)]
pub struct SkeletonMap {
    alive: Vec<bool>,
    constituents: Vec<Vec<usize>>,
    /// Skeleton of G_k over original ids.
    base: Trigraph,
}

impl SkeletonMap {
    /// Identity map for a freshly built G_k.
    pub fn for_gk(g: &GkGraph) -> Self {
        let constituents = (0..g.vertex_count())
            .map(|v| if g.is_skeleton(v) { vec![v] } else { Vec::new() })
            .collect();
        SkeletonMap {
            alive: vec![true; g.vertex_count()],
            constituents,
            base: g.skeleton_subgraph().0,
        }
    }

    pub fn is_skeleton(&self, v: VertexId) -> bool {
        self.constituents
            .get(v.0)
            .is_some_and(|c| !c.is_empty())
    }

    /// Original skeleton vertices merged into `v`.
    pub fn constituents(&self, v: VertexId) -> &[usize] {
        &self.constituents[v.0]
    }

    /// Mirrors a contraction performed on the graph.
    pub fn apply(&mut self, step: ContractionStep) {
        let moved = std::mem::take(&mut self.constituents[step.remove.0]);
        self.constituents[step.keep.0].extend(moved);
        self.constituents[step.keep.0].sort_unstable();
        self.alive[step.remove.0] = false;
    }

    fn check(&self, h: &Trigraph) -> Result<(), AnalyzerError> {
        if h.capacity() != self.alive.len() {
            return Err(AnalyzerError::InconsistentMap(format!(
                "graph capacity {} vs map size {}",
                h.capacity(),
                self.alive.len()
            )));
        }
        for (v, &a) in self.alive.iter().enumerate() {
            if a != h.contains(VertexId(v)) {
                return Err(AnalyzerError::InconsistentMap(format!(
                    "vertex {v} is {} in the map but not in the graph",
                    if a { "alive" } else { "dead" }
                )));
            }
        }
        Ok(())
    }
}

/// Skeleton of a derived graph `h`, over `h`'s ids.
pub fn skeleton_of(h: &Trigraph, map: &SkeletonMap) -> Result<Trigraph, AnalyzerError> {
    map.check(h)?;
    let mut owner = vec![usize::MAX; map.base.capacity()];
    let mut keep = FixedBitSet::with_capacity(h.capacity());
    for v in h.vertices() {
        for &orig in map.constituents(v) {
            owner[orig] = v.0;
        }
        if map.is_skeleton(v) {
            keep.insert(v.0);
        }
    }
    let mut edges = BTreeSet::new();
    for (a, b, _) in map.base.edges() {
        let (x, y) = (owner[a.0], owner[b.0]);
        if x != y {
            edges.insert((x.min(y), x.max(y)));
        }
    }
    let g = Trigraph::from_black_edges(h.capacity(), edges)?;
    Ok(g.induced(&keep))
}

fn common_neighbors(g: &Trigraph, u: VertexId, v: VertexId) -> usize {
    let mut a = g.neighbors(u);
    a.intersect_with(&g.neighbors(v));
    a.count_ones(..)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommonNeighborViolation {
    pub pair: (VertexId, VertexId),
    pub common: usize,
}

/// Evaluated hypotheses; every list is an exhaustive enumeration and is
/// empty exactly when the corresponding hypothesis holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzerReport {
    pub skeleton_n: usize,
    pub skeleton_min_degree: usize,
    pub adjacent_5_pairs: Vec<(VertexId, VertexId)>,
    pub five_vertex_common_neighbor_violations: Vec<CommonNeighborViolation>,
    pub separating_3_cycles: Vec<Vec<usize>>,
    pub separating_4_cycles: Vec<Vec<usize>>,
    /// Skeleton edges on no separating 3-cycle.
    pub semiplanar_ok_edges: Vec<(VertexId, VertexId)>,
    /// Min degree 5, 5-vertex pairs share at most one neighbor, no
    /// separating (<=4)-cycles.
    pub nonadjacent_contraction_hypotheses: bool,
    /// Min degree 5 and no two adjacent 5-vertices.
    pub adjacent_six_contraction_hypotheses: bool,
}

pub fn check_lemma_hypotheses(
    skeleton: &Trigraph,
    embedding: &PlaneMultigraph,
) -> Result<AnalyzerReport, AnalyzerError> {
    let vs: Vec<VertexId> = skeleton.vertices().collect();
    let min_degree = vs.iter().map(|&v| skeleton.degree(v)).min().unwrap_or(0);
    let fives: Vec<VertexId> = vs.iter().copied().filter(|&v| skeleton.degree(v) == 5).collect();
    let mut adjacent = Vec::new();
    let mut violations = Vec::new();
    for (i, &a) in fives.iter().enumerate() {
        for &b in &fives[i + 1..] {
            if skeleton.is_adjacent(a, b) {
                adjacent.push((a, b));
            }
            let common = common_neighbors(skeleton, a, b);
            if common > 1 {
                violations.push(CommonNeighborViolation {
                    pair: (a, b),
                    common,
                });
            }
        }
    }
    let mut sep3 = Vec::new();
    let mut sep4 = Vec::new();
    for c in embedding.separating_cycles_up_to(4)? {
        if c.len() == 3 {
            sep3.push(c);
        } else {
            sep4.push(c);
        }
    }
    let on_sep3: BTreeSet<(usize, usize)> = sep3
        .iter()
        .flat_map(|c| (0..3).map(move |i| (c[i].min(c[(i + 1) % 3]), c[i].max(c[(i + 1) % 3]))))
        .collect();
    let semiplanar_ok_edges = skeleton
        .edges()
        .into_iter()
        .filter(|(a, b, _)| !on_sep3.contains(&(a.0, b.0)))
        .map(|(a, b, _)| (a, b))
        .collect();
    Ok(AnalyzerReport {
        skeleton_n: vs.len(),
        skeleton_min_degree: min_degree,
        nonadjacent_contraction_hypotheses: min_degree == 5
            && violations.is_empty()
            && sep3.is_empty()
            && sep4.is_empty(),
        adjacent_six_contraction_hypotheses: min_degree == 5 && adjacent.is_empty(),
        adjacent_5_pairs: adjacent,
        five_vertex_common_neighbor_violations: violations,
        separating_3_cycles: sep3,
        separating_4_cycles: sep4,
        semiplanar_ok_edges,
    })
}

/// Report for the skeleton of a freshly built G_k.
pub fn analyze_gk(g: &GkGraph) -> Result<AnalyzerReport, AnalyzerError> {
    let (skel, emb) = g.skeleton_subgraph();
    check_lemma_hypotheses(&skel, &emb)
}

/// In a simple plane triangulation a triangle separates iff removing its
/// vertices disconnects the graph.
fn triangle_separates(g: &Trigraph, tri: [VertexId; 3]) -> bool {
    let rest: Vec<VertexId> = g.vertices().filter(|v| !tri.contains(v)).collect();
    let Some(&start) = rest.first() else {
        return false;
    };
    let mut seen = FixedBitSet::with_capacity(g.capacity());
    for t in tri {
        seen.insert(t.0);
    }
    seen.insert(start.0);
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v).ones() {
            if !seen.contains(u) {
                seen.insert(u);
                reached += 1;
                queue.push_back(VertexId(u));
            }
        }
    }
    reached < rest.len()
}

/// A contraction is semiplanar if it involves a non-skeleton vertex, or
/// joins the ends of a skeleton edge lying on no separating 3-cycle of the
/// skeleton.
pub fn is_semiplanar(
    h: &Trigraph,
    map: &SkeletonMap,
    step: ContractionStep,
) -> Result<bool, AnalyzerError> {
    for v in [step.keep, step.remove] {
        if !h.contains(v) {
            return Err(TrigraphError::UnknownVertex(v).into());
        }
    }
    if !map.is_skeleton(step.keep) || !map.is_skeleton(step.remove) {
        return Ok(true);
    }
    let skel = skeleton_of(h, map)?;
    let (a, b) = (step.keep, step.remove);
    if !skel.is_adjacent(a, b) {
        return Ok(false);
    }
    let mut common = skel.neighbors(a);
    common.intersect_with(&skel.neighbors(b));
    Ok(!common
        .ones()
        .any(|w| triangle_separates(&skel, [a, b, VertexId(w)])))
}

/// Closed-form red-degree lower bounds from the lower-bound argument.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RedDegreeBound {
    /// Non-adjacent pair, one of skeleton degree 6, at most two common
    /// neighbors: 5 + 6 - 4.
    NonAdjacentWithSix,
    /// Non-adjacent 5-vertices with at most one common neighbor: 5 + 5 - 2.
    NonAdjacentFives,
    /// A merged skeleton pair contracted with a third skeleton vertex:
    /// 5 + 6 + 6 - 9.
    MergedPairWithThird,
    /// Two merged skeleton pairs contracted together: 5 + 6 + 6 + 6 - 14.
    TwoMergedPairs,
}

impl RedDegreeBound {
    pub fn lower_bound(self) -> usize {
        match self {
            RedDegreeBound::NonAdjacentWithSix => 5 + 6 - 4,
            RedDegreeBound::NonAdjacentFives => 5 + 5 - 2,
            RedDegreeBound::MergedPairWithThird => 5 + 6 + 6 - 9,
            RedDegreeBound::TwoMergedPairs => 5 + 6 + 6 + 6 - 14,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub bound: RedDegreeBound,
    pub expected_at_least: usize,
    /// Red degree of the vertex produced by the last merge.
    pub actual: usize,
    pub holds: bool,
}

/// Applies `merges` to a copy of `h` and compares the red degree of the
/// final merged vertex with the closed-form bound.
pub fn red_degree_bound_check(
    h: &Trigraph,
    merges: &[ContractionStep],
    bound: RedDegreeBound,
) -> Result<BoundCheck, AnalyzerError> {
    let mut state = h.clone();
    let (last, prefix) = merges
        .split_last()
        .ok_or_else(|| AnalyzerError::InconsistentMap("no merge given".into()))?;
    for &s in prefix {
        state.contract_in_place(s)?;
    }
    let actual = state.merge_red_degree(*last)?;
    Ok(BoundCheck {
        bound,
        expected_at_least: bound.lower_bound(),
        actual,
        holds: actual >= bound.lower_bound(),
    })
}

/// Summary of trial merges of every non-adjacent pair of a skeleton.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NonAdjacentScan {
    pub pairs_with_six: usize,
    pub pairs_of_fives: usize,
    pub min_red_with_six: Option<usize>,
    pub min_red_fives: Option<usize>,
    /// Pairs meeting a bound's side conditions whose merge stays below it.
    pub failures: Vec<(VertexId, VertexId, usize)>,
}

/// Trial-merges every non-adjacent pair and checks the two bounds whose side
/// conditions hold.
pub fn scan_nonadjacent_merges(skeleton: &Trigraph) -> NonAdjacentScan {
    let vs: Vec<VertexId> = skeleton.vertices().collect();
    let mut scan = NonAdjacentScan::default();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if skeleton.is_adjacent(a, b) {
                continue;
            }
            let (da, db) = (skeleton.degree(a), skeleton.degree(b));
            let common = common_neighbors(skeleton, a, b);
            let red = skeleton
                .merge_red_degree(ContractionStep { keep: a, remove: b })
                .expect("live pair");
            let bound = if (da == 6 || db == 6) && da.min(db) >= 5 && common <= 2 {
                scan.pairs_with_six += 1;
                scan.min_red_with_six = Some(scan.min_red_with_six.map_or(red, |m| m.min(red)));
                RedDegreeBound::NonAdjacentWithSix
            } else if da == 5 && db == 5 && common <= 1 {
                scan.pairs_of_fives += 1;
                scan.min_red_fives = Some(scan.min_red_fives.map_or(red, |m| m.min(red)));
                RedDegreeBound::NonAdjacentFives
            } else {
                continue;
            };
            if red < bound.lower_bound() {
                scan.failures.push((a, b, red));
            }
        }
    }
    scan
}

/// Skeleton vertices within `radius` of `v` (including `v`).
pub fn within_distance(g: &Trigraph, v: VertexId, radius: usize) -> Vec<VertexId> {
    let mut dist = vec![usize::MAX; g.capacity()];
    dist[v.0] = 0;
    let mut queue = VecDeque::from([v]);
    let mut out = vec![v];
    while let Some(x) = queue.pop_front() {
        if dist[x.0] == radius {
            continue;
        }
        for u in g.neighbors(x).ones() {
            if dist[u] == usize::MAX {
                dist[u] = dist[x.0] + 1;
                out.push(VertexId(u));
                queue.push_back(VertexId(u));
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{build_gk, icosahedron};

    #[test]
    fn icosahedron_has_adjacent_fives() {
        let (g, emb) = icosahedron();
        let r = check_lemma_hypotheses(&g, &emb).unwrap();
        assert_eq!(r.adjacent_5_pairs.len(), 30);
        assert!(!r.adjacent_six_contraction_hypotheses);
        assert!(r.separating_3_cycles.is_empty());
    }

    #[test]
    fn g1_fives_are_independent() {
        let r = analyze_gk(&build_gk(1)).unwrap();
        assert!(r.adjacent_5_pairs.is_empty());
        assert_eq!(r.skeleton_min_degree, 5);
    }

    #[test]
    fn identity_map_gives_skeleton() {
        let g = build_gk(1);
        let map = SkeletonMap::for_gk(&g);
        let s = skeleton_of(&g.graph, &map).unwrap();
        let (skel, _) = g.skeleton_subgraph();
        assert_eq!(s.edges(), skel.edges());
        assert_eq!(s.vertex_count(), skel.vertex_count());
    }

    #[test]
    fn map_mismatch_is_reported() {
        let g = build_gk(0);
        let map = SkeletonMap::for_gk(&g);
        let h = g.graph.contract(ContractionStep::new(0, 1)).unwrap();
        assert!(matches!(
            skeleton_of(&h, &map),
            Err(AnalyzerError::InconsistentMap(_))
        ));
    }

    #[test]
    fn semiplanar_basics() {
        let g = build_gk(2);
        let map = SkeletonMap::for_gk(&g);
        let f = &g.skeleton_faces[0];
        let s = |a: usize, b: usize| ContractionStep::new(a, b);
        assert!(is_semiplanar(&g.graph, &map, s(f.triangle[0], f.quads[1])).unwrap());
        assert!(is_semiplanar(&g.graph, &map, s(f.corners[0], f.corners[1])).unwrap());
        // corners 0 and 11 are far apart
        assert!(!is_semiplanar(&g.graph, &map, s(0, 11)).unwrap());
    }

    #[test]
    fn bound_constants() {
        assert_eq!(RedDegreeBound::NonAdjacentWithSix.lower_bound(), 7);
        assert_eq!(RedDegreeBound::NonAdjacentFives.lower_bound(), 8);
        assert_eq!(RedDegreeBound::MergedPairWithThird.lower_bound(), 8);
        assert_eq!(RedDegreeBound::TwoMergedPairs.lower_bound(), 9);
    }

    #[test]
    fn twins_merge_without_red() {
        let g = Trigraph::from_black_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = red_degree_bound_check(&g, &[ContractionStep::new(0, 1)], RedDegreeBound::NonAdjacentFives)
            .unwrap();
        assert_eq!(c.actual, 0);
        assert!(!c.holds);
    }

    #[test]
    fn distance_two_ball() {
        let (g, _) = icosahedron();
        // everything but the antipode
        assert_eq!(within_distance(&g, VertexId(0), 2).len(), 11);
        assert_eq!(within_distance(&g, VertexId(0), 1).len(), 6);
    }
}

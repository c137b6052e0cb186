//! Exact twin-width for small graphs.
//!
//! [`naive_twinwidth`] is the reference: it walks every sequence of pair
//! choices and only cuts branches that cannot beat the incumbent.
//! [`twinwidth_at_most`] is a depth-first decision search with twin
//! reduction, best-first branch ordering and a memo of refuted states.
//! [`twinwidth_exact`] scans widths upward with the decision search.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::trigraph::{ContractionSequence, ContractionStep, Trigraph, VertexId};

pub const NAIVE_MAX_VERTICES: usize = 8;
pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_MAX_EXACT_VERTICES: usize = 16;

/// Cap on the number of within-class orderings tried when canonizing.
const CANON_PERMUTATION_LIMIT: usize = 720;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices; naive enumeration is limited to {max}")]
    TooLarge { n: usize, max: usize },
}

/// Exhaustive minimum over all contraction sequences.
pub fn naive_twinwidth(g: &Trigraph) -> Result<(usize, ContractionSequence), SolverError> {
    let n = g.vertex_count();
    if n > NAIVE_MAX_VERTICES {
        return Err(SolverError::TooLarge {
            n,
            max: NAIVE_MAX_VERTICES,
        });
    }
    let mut best = (usize::MAX, Vec::new());
    let mut path = Vec::new();
    naive_rec(g, g.max_red_degree(), &mut path, &mut best);
    Ok((best.0, best.1.into()))
}

fn naive_rec(
    state: &Trigraph,
    width: usize,
    path: &mut Vec<ContractionStep>,
    best: &mut (usize, Vec<ContractionStep>),
) {
    if width >= best.0 {
        return;
    }
    if state.vertex_count() <= 1 {
        *best = (width, path.clone());
        return;
    }
    let vs: Vec<VertexId> = state.vertices().collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let step = ContractionStep {
                keep: vs[i],
                remove: vs[j],
            };
            let next = state.contract(step).expect("live pair");
            path.push(step);
            naive_rec(&next, width.max(next.max_red_degree()), path, best);
            path.pop();
        }
    }
}

/// Outcome of a bounded-width decision search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Found(ContractionSequence),
    /// The whole search space was explored without success.
    Infeasible,
    BudgetExhausted,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Contraction evaluations, the budget unit.
    pub evaluations: u64,
    pub nodes: u64,
    pub memo_hits: u64,
}

struct Exhausted;

struct Search {
    width: usize,
    budget: u64,
    stats: SearchStats,
    refuted: HashSet<Vec<u64>>,
}

impl Search {
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.stats.evaluations += 1;
        if self.stats.evaluations > self.budget {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }

    fn dfs(&mut self, state: Trigraph, path: &mut Vec<ContractionStep>) -> Result<bool, Exhausted> {
        self.stats.nodes += 1;
        let n = state.vertex_count();
        // with n vertices no later state has red degree above n - 2
        if n <= self.width + 2 {
            let vs: Vec<VertexId> = state.vertices().collect();
            for &v in vs.iter().skip(1) {
                path.push(ContractionStep {
                    keep: vs[0],
                    remove: v,
                });
            }
            return Ok(true);
        }
        if let Some(step) = find_twins(&state) {
            self.tick()?;
            let next = state.contract(step).expect("live pair");
            path.push(step);
            if self.dfs(next, path)? {
                return Ok(true);
            }
            path.pop();
            return Ok(false);
        }
        let key = canonical_key(&state);
        if self.refuted.contains(&key) {
            self.stats.memo_hits += 1;
            return Ok(false);
        }
        let vs: Vec<VertexId> = state.vertices().collect();
        let mut candidates = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                self.tick()?;
                let step = ContractionStep {
                    keep: vs[i],
                    remove: vs[j],
                };
                let w = state.max_red_degree_after(step).expect("live pair");
                if w <= self.width {
                    candidates.push((w, step));
                }
            }
        }
        candidates.sort_by_key(|&(w, s)| (w, s.keep, s.remove));
        for (_, step) in candidates {
            let next = state.contract(step).expect("live pair");
            path.push(step);
            if self.dfs(next, path)? {
                return Ok(true);
            }
            path.pop();
        }
        self.refuted.insert(key);
        Ok(false)
    }
}

/// First pair (in id order) with identical neighborhoods apart from each
/// other. Contracting it yields an induced subtrigraph.
fn find_twins(g: &Trigraph) -> Option<ContractionStep> {
    let vs: Vec<VertexId> = g.vertices().collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.are_twins(vs[i], vs[j]) {
                return Some(ContractionStep {
                    keep: vs[i],
                    remove: vs[j],
                });
            }
        }
    }
    None
}

/// Adjacency encoding (2 bits per vertex pair) under a vertex order refined
/// by (black degree, red degree) and one round of neighbor invariants. When
/// few orderings remain inside the refined classes, the lexicographically
/// least encoding is taken. Equal keys always mean isomorphic trigraphs.
pub fn canonical_key(g: &Trigraph) -> Vec<u64> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let base: Vec<(usize, usize)> = (0..g.capacity())
        .map(|v| {
            if g.contains(VertexId(v)) {
                let red = g.red_degree(VertexId(v)).unwrap();
                (g.degree(VertexId(v)) - red, red)
            } else {
                (0, 0)
            }
        })
        .collect();
    let refined = |v: VertexId| {
        let mut b: Vec<(usize, usize)> = g.black_neighbors(v).ones().map(|u| base[u]).collect();
        let mut r: Vec<(usize, usize)> = g.red_neighbors(v).ones().map(|u| base[u]).collect();
        b.sort_unstable();
        r.sort_unstable();
        (base[v.0], b, r)
    };
    let mut keyed: Vec<_> = vs.iter().map(|&v| (refined(v), v)).collect();
    keyed.sort();
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for i in 0..keyed.len() {
        if i == 0 || keyed[i].0 != keyed[i - 1].0 {
            classes.push(Vec::new());
        }
        classes.last_mut().unwrap().push(keyed[i].1);
    }

    let mut combos: usize = 1;
    for c in &classes {
        for f in 2..=c.len() {
            combos = combos.saturating_mul(f);
        }
    }
    if combos > CANON_PERMUTATION_LIMIT {
        let order: Vec<VertexId> = classes.concat();
        return encode(g, &order);
    }
    let mut best: Option<Vec<u64>> = None;
    loop {
        let order: Vec<VertexId> = classes.concat();
        let enc = encode(g, &order);
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
        // odometer over within-class permutations
        let mut advanced = false;
        for c in classes.iter_mut() {
            if next_permutation(c) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    best.unwrap()
}

fn encode(g: &Trigraph, order: &[VertexId]) -> Vec<u64> {
    let n = order.len();
    let mut out = vec![n as u64];
    let mut word = 0u64;
    let mut bits = 0;
    for i in 0..n {
        for j in i + 1..n {
            let code = match g.edge(order[i], order[j]) {
                None => 0,
                Some(crate::trigraph::EdgeColor::Black) => 1,
                Some(crate::trigraph::EdgeColor::Red) => 2,
            };
            word |= code << bits;
            bits += 2;
            if bits == 64 {
                out.push(word);
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(word);
    }
    out
}

/// Lexicographic next permutation; on the last one resets to sorted order
/// and returns false.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Searches for a full sequence whose states all have max red degree at
/// most `width`, spending at most `budget` contraction evaluations.
pub fn twinwidth_at_most(g: &Trigraph, width: usize, budget: u64) -> (Decision, SearchStats) {
    if g.max_red_degree() > width {
        return (Decision::Infeasible, SearchStats::default());
    }
    let mut search = Search {
        width,
        budget,
        stats: SearchStats::default(),
        refuted: HashSet::new(),
    };
    let mut path = Vec::new();
    let decision = match search.dfs(g.clone(), &mut path) {
        Ok(true) => Decision::Found(path.into()),
        Ok(false) => Decision::Infeasible,
        Err(Exhausted) => Decision::BudgetExhausted,
    };
    (decision, search.stats)
}

/// Repeatedly contracts the pair with the smallest resulting max red degree.
pub fn greedy_sequence(g: &Trigraph) -> (usize, ContractionSequence) {
    let mut state = g.clone();
    let mut width = state.max_red_degree();
    let mut seq = ContractionSequence::new();
    while state.vertex_count() > 1 {
        let vs: Vec<VertexId> = state.vertices().collect();
        let mut best: Option<(usize, ContractionStep)> = None;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let step = ContractionStep {
                    keep: vs[i],
                    remove: vs[j],
                };
                let w = state.max_red_degree_after(step).expect("live pair");
                if best.is_none_or(|(bw, _)| w < bw) {
                    best = Some((w, step));
                }
            }
        }
        let (w, step) = best.expect("at least one pair");
        state.contract_in_place(step).expect("live pair");
        width = width.max(w);
        seq.push(step);
    }
    (width, seq)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    /// The width is optimal.
    Exact,
    /// A certificate exists but optimality was not established in budget.
    UpperBound,
    /// The instance was not searched.
    Unknown,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Exact => "exact",
            SolveStatus::UpperBound => "upper-bound",
            SolveStatus::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Contraction evaluations allowed per decision search.
    pub budget: u64,
    /// Worker threads; results do not depend on this value.
    pub threads: usize,
    /// Larger graphs are not searched.
    pub max_vertices: usize,
    /// Known sequence used as an upper bound.
    pub upper_bound_hint: Option<ContractionSequence>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
            threads: 1,
            max_vertices: DEFAULT_MAX_EXACT_VERTICES,
            upper_bound_hint: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Width of `sequence`, when one is known.
    pub width: Option<usize>,
    pub sequence: Option<ContractionSequence>,
    pub stats: SearchStats,
}

/// Smallest width admitting a full contraction sequence.
pub fn twinwidth_exact(g: &Trigraph, opts: &SolveOptions) -> SolveResult {
    let n = g.vertex_count();
    let lower = g.max_red_degree();
    if n <= 1 {
        return SolveResult {
            status: SolveStatus::Exact,
            width: Some(lower),
            sequence: Some(ContractionSequence::new()),
            stats: SearchStats::default(),
        };
    }
    let hint = opts.upper_bound_hint.as_ref().and_then(|seq| {
        let t = g.replay(seq).ok()?;
        (t.remaining_vertices == 1).then(|| (t.overall_width, seq.clone()))
    });
    if n > opts.max_vertices {
        return SolveResult {
            status: SolveStatus::Unknown,
            width: hint.as_ref().map(|h| h.0),
            sequence: hint.map(|h| h.1),
            stats: SearchStats::default(),
        };
    }
    let mut best = greedy_sequence(g);
    if let Some(h) = hint {
        if h.0 < best.0 {
            best = h;
        }
    }
    let widths: Vec<usize> = (lower..best.0).collect();
    let run = |d: usize| twinwidth_at_most(g, d, opts.budget);
    let outcomes: Vec<(usize, (Decision, SearchStats))> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| widths.par_iter().map(|&d| (d, run(d))).collect())
    } else {
        let mut out = Vec::new();
        for &d in &widths {
            let r = run(d);
            let found = matches!(r.0, Decision::Found(_));
            out.push((d, r));
            if found {
                break;
            }
        }
        out
    };

    let mut stats = SearchStats::default();
    let mut all_refuted = true;
    for (_, (decision, s)) in outcomes {
        stats.evaluations += s.evaluations;
        stats.nodes += s.nodes;
        stats.memo_hits += s.memo_hits;
        match decision {
            Decision::Found(seq) => {
                let w = g.replay(&seq).expect("search emits valid steps").overall_width;
                return SolveResult {
                    status: if all_refuted {
                        SolveStatus::Exact
                    } else {
                        SolveStatus::UpperBound
                    },
                    width: Some(w),
                    sequence: Some(seq),
                    stats,
                };
            }
            Decision::Infeasible => {}
            Decision::BudgetExhausted => all_refuted = false,
        }
    }
    SolveResult {
        status: if all_refuted {
            SolveStatus::Exact
        } else {
            SolveStatus::UpperBound
        },
        width: Some(best.0),
        sequence: Some(best.1),
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Trigraph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w)));
        Trigraph::from_black_edges(n, edges).unwrap()
    }

    fn path(n: usize) -> Trigraph {
        Trigraph::from_black_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn naive_guard() {
        assert_eq!(
            naive_twinwidth(&Trigraph::empty(9)),
            Err(SolverError::TooLarge { n: 9, max: 8 })
        );
    }

    #[test]
    fn naive_small() {
        assert_eq!(naive_twinwidth(&complete(5)).unwrap().0, 0);
        let (w, seq) = naive_twinwidth(&path(4)).unwrap();
        assert_eq!(w, 1);
        assert_eq!(path(4).replay(&seq).unwrap().overall_width, 1);
        assert_eq!(naive_twinwidth(&Trigraph::empty(0)).unwrap().0, 0);
    }

    #[test]
    fn decision_examples() {
        let (d, _) = twinwidth_at_most(&complete(4), 0, DEFAULT_BUDGET);
        match d {
            Decision::Found(seq) => assert_eq!(seq.len(), 3),
            other => panic!("{other:?}"),
        }
        assert_eq!(twinwidth_at_most(&path(4), 0, DEFAULT_BUDGET).0, Decision::Infeasible);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let c7 = Trigraph::from_black_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert_eq!(twinwidth_at_most(&c7, 1, 5).0, Decision::BudgetExhausted);
    }

    #[test]
    fn canonical_key_is_label_invariant() {
        let a = Trigraph::from_black_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Trigraph::from_black_edges(4, [(3, 0), (0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        let star = Trigraph::from_black_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&a), canonical_key(&star));
    }

    #[test]
    fn permutation_odometer() {
        let mut v = [1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(v, [1, 2, 3]);
    }

    #[test]
    fn exact_refuses_large_graphs() {
        let r = twinwidth_exact(&Trigraph::empty(40), &SolveOptions::default());
        assert_eq!(r.status, SolveStatus::Unknown);
        assert_eq!(r.width, None);
    }
}

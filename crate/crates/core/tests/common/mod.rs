#![allow(dead_code)]

use rand::Rng;
use twinwidth_core::Trigraph;

pub fn complete(n: usize) -> Trigraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w)));
    Trigraph::from_black_edges(n, edges).unwrap()
}

pub fn path(n: usize) -> Trigraph {
    Trigraph::from_black_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Trigraph {
    Trigraph::from_black_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Vertex pairs of K_n in a fixed order; bit `i` of an edge mask selects
/// pair `i`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).collect()
}

pub fn from_mask(n: usize, mask: u32) -> Trigraph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p);
    Trigraph::from_black_edges(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative (the minimal edge mask) per isomorphism class of
/// graphs on `n` vertices, by brute force over all relabelings.
pub fn graph_catalog(n: usize) -> Vec<u32> {
    let ps = pairs(n);
    let index = |u: usize, w: usize| ps.iter().position(|&p| p == (u.min(w), u.max(w))).unwrap();
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| ps.iter().map(|&(u, w)| index(p[u], p[w])).collect())
        .collect();
    let total = 1u32 << ps.len();
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    for mask in 0..total {
        if seen[mask as usize] {
            continue;
        }
        reps.push(mask);
        for img in &images {
            let mut m = 0u32;
            for (i, &j) in img.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    m |= 1 << j;
                }
            }
            seen[m as usize] = true;
        }
    }
    reps
}

/// Random cograph on `n` vertices: recursive disjoint union / join.
pub fn random_cograph<R: Rng>(n: usize, rng: &mut R) -> Trigraph {
    fn build<R: Rng>(vs: &[usize], rng: &mut R, edges: &mut Vec<(usize, usize)>) {
        if vs.len() <= 1 {
            return;
        }
        let split = rng.gen_range(1..vs.len());
        let (a, b) = vs.split_at(split);
        build(a, rng, edges);
        build(b, rng, edges);
        if rng.gen_bool(0.5) {
            for &x in a {
                for &y in b {
                    edges.push((x, y));
                }
            }
        }
    }
    let vs: Vec<usize> = (0..n).collect();
    let mut edges = Vec::new();
    build(&vs, rng, &mut edges);
    Trigraph::from_black_edges(n, edges).unwrap()
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Trigraph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Trigraph::from_black_edges(n, edges).unwrap()
}

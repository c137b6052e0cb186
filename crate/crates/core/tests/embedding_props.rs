use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twinwidth_core::construction::icosahedron;
use twinwidth_core::embedding::twin;
use twinwidth_core::{build_gk, PlaneMultigraph};

fn assert_faces_partition(emb: &PlaneMultigraph) {
    let faces = emb.faces().unwrap();
    let mut seen = vec![false; emb.darts().map(|d| d + 1).max().unwrap_or(0)];
    for f in &faces {
        assert_eq!(f.darts.len(), f.length);
        for &d in &f.darts {
            assert!(!seen[d], "dart {d} lies on two faces");
            seen[d] = true;
        }
    }
    assert_eq!(emb.darts().filter(|&d| !seen[d]).count(), 0);
    assert_eq!(faces.iter().map(|f| f.length).sum::<usize>(), 2 * emb.edge_count());
}

/// K_4 with a vertex stacked into the face 0, 3, 1.
fn stacked_k4() -> PlaneMultigraph {
    let faces = [[0, 1, 2], [0, 2, 3], [1, 3, 2], [0, 3, 4], [3, 1, 4], [1, 0, 4]];
    let faces: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
    PlaneMultigraph::from_oriented_faces(5, &faces).unwrap()
}

#[test]
fn faces_partition_darts() {
    let (_, ico) = icosahedron();
    assert_faces_partition(&ico);
    assert_eq!(ico.faces().unwrap().len(), 20);
    for k in 0..=2 {
        let g = build_gk(k);
        assert_faces_partition(&g.embedding);
        g.embedding.euler_check().unwrap();
        let (_, skel) = g.skeleton_subgraph();
        assert_faces_partition(&skel);
        assert_eq!(skel.min_face_length().unwrap(), 3);
    }
}

#[test]
fn embedding_matches_graph() {
    let g = build_gk(1);
    let from_emb = g.embedding.to_trigraph();
    assert_eq!(from_emb.vertex_count(), g.graph.vertex_count());
    assert_eq!(from_emb.edges(), g.graph.edges());
    for d in g.embedding.darts() {
        assert_eq!(g.embedding.origin(twin(d)), g.embedding.target(d));
    }
}

#[test]
fn random_contractions_stay_plane() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (_, mut emb) = icosahedron();
        while emb.vertex_count() > 1 {
            let darts: Vec<usize> = emb.darts().filter(|&d| emb.origin(d) != emb.target(d)).collect();
            let d = darts[rng.gen_range(0..darts.len())];
            let (u, v) = (emb.origin(d), emb.target(d));
            let before = emb.vertex_count();
            let res = emb.contract_embedded_edge(d).unwrap();
            assert_eq!(res.keep, u);
            assert_eq!(res.removed, v);
            assert_eq!(emb.vertex_count(), before - 1);
            emb.validate().unwrap();
            emb.euler_check().unwrap();
            assert!(!emb.has_two_face());
            assert_faces_partition(&emb);
        }
    }
}

#[test]
fn separating_cycles() {
    let (_, ico) = icosahedron();
    assert!(ico.separating_cycles_up_to(4).unwrap().is_empty());
    assert!(ico.separating_cycles_up_to(5).is_err());

    let s = stacked_k4();
    s.euler_check().unwrap();
    assert!(s.is_separating_cycle(&[0, 3, 1]));
    assert!(!s.is_facial_cycle(&[0, 3, 1]));
    assert!(s.is_facial_cycle(&[0, 1, 2]));
    assert!(!s.is_separating_cycle(&[0, 1, 2]));
    let found = s.separating_cycles_up_to(3).unwrap();
    assert_eq!(found.len(), 1);
    let mut c = found[0].clone();
    c.sort_unstable();
    assert_eq!(c, vec![0, 1, 3]);
}

#[test]
fn light_edge_preconditions() {
    let s = stacked_k4();
    // vertex 4 has degree 3 and vertex 2 degree 3; every degree is at most 7
    let light = s.find_light_edge().unwrap();
    assert!(light.degree_sum <= 11);
    let g = build_gk(0);
    assert!(g.embedding.find_light_edge().is_err());
}

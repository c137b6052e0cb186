use twinwidth_core::analyzer::{
    analyze_gk, check_lemma_hypotheses, is_semiplanar, skeleton_of, RedDegreeBound, SkeletonMap,
};
use twinwidth_core::witness::phase1_collapse_faces;
use twinwidth_core::{build_gk, ContractionStep, VertexId};

#[test]
fn report_for_g2() {
    let g = build_gk(2);
    let r = analyze_gk(&g).unwrap();
    assert_eq!(r.skeleton_n, 92);
    assert_eq!(r.skeleton_min_degree, 5);
    assert!(r.adjacent_5_pairs.is_empty());
    assert!(r.separating_3_cycles.is_empty() && r.separating_4_cycles.is_empty());
    let (skel, emb) = g.skeleton_subgraph();
    let again = check_lemma_hypotheses(&skel, &emb).unwrap();
    assert_eq!(again, r);
}

#[test]
fn phase1_leaves_skeleton_unchanged() {
    let g = build_gk(1);
    let mut h = g.graph.clone();
    let mut map = SkeletonMap::for_gk(&g);
    let base = skeleton_of(&h, &map).unwrap();
    for &s in phase1_collapse_faces(&g).iter() {
        h.contract_in_place(s).unwrap();
        map.apply(s);
    }
    let after = skeleton_of(&h, &map).unwrap();
    assert_eq!(after.edges(), base.edges());
}

#[test]
fn semiplanar_examples() {
    let g = build_gk(2);
    let map = SkeletonMap::for_gk(&g);
    let (skel, _) = g.skeleton_subgraph();
    let v0 = VertexId(0);
    let nbr = VertexId(skel.neighbors(v0).ones().next().unwrap());
    assert!(is_semiplanar(&g.graph, &map, ContractionStep { keep: v0, remove: nbr }).unwrap());
    let far = skel.vertices().find(|&u| u != v0 && !skel.is_adjacent(v0, u)).unwrap();
    assert!(!is_semiplanar(&g.graph, &map, ContractionStep { keep: v0, remove: far }).unwrap());
    // a non-skeleton endpoint never breaks semiplanarity
    let t = VertexId(g.skeleton_faces[0].triangle[0]);
    assert!(is_semiplanar(&g.graph, &map, ContractionStep { keep: v0, remove: t }).unwrap());
}

#[test]
fn skeleton_of_commutes_with_skeleton_edge_contraction() {
    let g = build_gk(1);
    let mut h = g.graph.clone();
    let mut map = SkeletonMap::for_gk(&g);
    let (skel, mut emb) = g.skeleton_subgraph();
    let a = VertexId(0);
    let b = VertexId(skel.neighbors(a).ones().next().unwrap());
    let step = ContractionStep { keep: a, remove: b };
    assert!(is_semiplanar(&h, &map, step).unwrap());
    h.contract_in_place(step).unwrap();
    map.apply(step);
    let dart = emb.rotation(a.0).into_iter().find(|&d| emb.target(d) == b.0).unwrap();
    emb.contract_embedded_edge(dart).unwrap();
    let derived = skeleton_of(&h, &map).unwrap();
    let expected = emb.to_trigraph();
    assert_eq!(derived.vertex_count(), expected.vertex_count());
    for (x, y, _) in expected.edges() {
        assert!(derived.is_adjacent(x, y));
    }
    assert_eq!(derived.edge_count(), expected.edge_count());
}

#[test]
fn bound_constants() {
    assert_eq!(RedDegreeBound::NonAdjacentWithSix.lower_bound(), 7);
    assert_eq!(RedDegreeBound::NonAdjacentFives.lower_bound(), 8);
    assert_eq!(RedDegreeBound::MergedPairWithThird.lower_bound(), 8);
    assert_eq!(RedDegreeBound::TwoMergedPairs.lower_bound(), 9);
}

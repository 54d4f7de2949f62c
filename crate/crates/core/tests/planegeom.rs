use k3_core::graph::heawood;
use k3_core::planegeom::*;
use proptest::prelude::*;

#[test]
fn automorphism_count_of_pg2_f4() {
    let g = build_incidence();
    let all = count_automorphisms(&g);
    assert_eq!(all, 241_920);
    assert_eq!(all, expected_automorphism_count());
    assert_eq!(all / count_automorphisms_with(&g, true), 2);
}

#[test]
fn bijection_export_round_trip() {
    let g = build_incidence();
    let map = find_isomorphism(&g, &g).unwrap();
    let json = bijection_json(&g, &g, &map).unwrap();
    let pairs: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(pairs.len(), 42);
    assert_eq!(pairs[0]["from"], pairs[0]["to"]);
}

#[test]
fn heawood_is_not_pg2_f4() {
    assert!(find_isomorphism(&heawood(), &build_incidence()).is_none());
}

proptest! {
    #[test]
    fn relabelled_graph_is_found(seed in any::<u64>()) {
        let g = build_incidence();
        let mut perm: Vec<usize> = (0..42).collect();
        let mut s = seed;
        for i in (1..42).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut h = k3_core::graph::IncidenceGraph::unlabelled(42).unwrap();
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        let m = find_isomorphism(&g, &h).unwrap();
        prop_assert!(is_isomorphism(&g, &h, &m));
    }

    #[test]
    fn independent_sets_have_no_collinear_triple(k in 3usize..=6, idx in 0usize..168) {
        let g = build_incidence();
        let sets = independent_sets(k).unwrap();
        let set = &sets[idx % sets.len()];
        for l in 21..42 {
            let on = set.iter().filter(|&&p| g.has_edge(p, l)).count();
            prop_assert!(on <= 2);
        }
    }
}

use k3_core::fibsearch::*;
use k3_core::planegeom::{build_incidence, find_isomorphism};
use proptest::prelude::*;

#[test]
fn d4_succeeds_from_all_21_starts() {
    let g = build_incidence();
    let ok = (0..21).filter(|&r0| find_d4_configuration_from(&g, r0).is_ok()).count();
    assert_eq!(ok, 21);
}

#[test]
fn d4_extra_vertex_meets_only_centres() {
    let g = build_incidence();
    for r0 in 0..21 {
        let cfg = find_d4_configuration_from(&g, r0).unwrap();
        let n = cfg.extra.unwrap();
        let centres: Vec<usize> = cfg.fibers.iter().map(|f| f.vertices[0]).collect();
        assert_eq!(g.neighbors(n).collect::<Vec<_>>(), centres);
    }
}

#[test]
fn no_induced_affine_d20() {
    let g = build_incidence();
    let d20 = affine_d(20).unwrap();
    let r = find_subdiagram_with_symmetry(&g, &d20, 5_000_000, 6);
    assert!(r.complete && r.found.is_none());
}

#[test]
fn symmetry_breaking_agrees_with_plain_search() {
    let g = build_incidence();
    for n in [8, 9, 10, 11, 12] {
        let p = affine_d(n).unwrap();
        let plain = find_subdiagram(&g, &p, 20_000_000);
        let sym = find_subdiagram_with_symmetry(&g, &p, 20_000_000, 6);
        assert!(plain.complete && sym.complete);
        assert_eq!(plain.found.is_some(), sym.found.is_some(), "D{n}");
        if let Some(m) = &sym.found {
            assert!(find_isomorphism(&g.induced(m), &p).is_some());
        }
    }
}

proptest! {
    #[test]
    fn moving_a_section_into_a_fiber_is_rejected(r0 in 0usize..21, k in 0usize..16) {
        let g = build_incidence();
        let mut cfg = find_d4_configuration_from(&g, r0).unwrap();
        let s = cfg.sections.remove(k);
        cfg.fibers[0].vertices.push(s);
        cfg.fibers[0].multiplicities.push(1);
        prop_assert!(!validate_d4(&g, &cfg, 5).is_valid());
    }

    #[test]
    fn found_paths_are_induced(k in 2usize..12) {
        let g = build_incidence();
        let p = path_diagram(k);
        let r = find_subdiagram(&g, &p, 100_000);
        let m = r.found.unwrap();
        let induced = g.induced(&m);
        prop_assert_eq!(induced.edge_count(), k - 1);
        for i in 1..k {
            prop_assert!(induced.has_edge(i - 1, i));
        }
    }
}

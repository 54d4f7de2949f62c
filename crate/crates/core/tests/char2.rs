use k3_core::char2::models::*;
use k3_core::char2::Field;
use proptest::prelude::*;

#[test]
fn sextic_partials_vanish_exactly_on_pg2_f4() {
    let r = sextic_check(&scan_fields(3).unwrap()).unwrap();
    assert_eq!(r.scans.len(), 3);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn quintics_through_the_21_points() {
    let r = quintic_kernel();
    assert_eq!(r.monomials, 21);
    assert_eq!(r.evaluation_rank, 18);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn dickson_quartic_is_invariant() {
    assert!(dickson_invariance().passed());
}

#[test]
fn quartic_surface_has_seven_singular_points() {
    let r = quartic_singularities(&scan_fields(2).unwrap()).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn tangent_cones_have_rank_two() {
    let r = quartic_tangent_cones().unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn planes_through_f2_lines_cut_double_conics() {
    let r = plane_double_conics();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn plane_x1_plus_x3_splits_into_conjugate_conics() {
    let r = quartic_split();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn bidegree_model_curves() {
    let r = mukai_curves().unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.incidence.edge_count(), 105);
    assert_eq!(r.incidence.girth(), Some(6));
}

#[test]
fn weierstrass_identities() {
    let r = weierstrass_checks(Field::f16());
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.partial_x, "x2^2");
}

#[test]
fn scan_field_range() {
    assert!(scan_fields(0).is_err());
    assert!(scan_fields(4).is_err());
}

proptest! {
    #[test]
    fn dickson_invariant_under_random_products(i in 0usize..168, j in 0usize..168) {
        let g = gl3_f2();
        let f = dickson_quartic(Field::f2());
        let once = linear_substitution(&f, &g[i]);
        prop_assert_eq!(linear_substitution(&once, &g[j]), f);
    }

    #[test]
    fn singular_points_are_singular(k in 0usize..7) {
        let y = quartic_surface(Field::f2());
        let p = QUARTIC_SINGULAR_POINTS[k];
        prop_assert_eq!(y.eval(&p), 0);
        for d in y.gradient() {
            prop_assert_eq!(d.eval(&p), 0);
        }
    }

    #[test]
    fn sextic_partials_vanish_at_lifted_points(k in 0usize..21) {
        let f = Field::f64();
        let s = sextic(Field::f4()).lift(f).unwrap();
        let pt = &pg2_f4_points(f).unwrap()[k];
        for d in s.gradient() {
            prop_assert_eq!(d.eval(pt), 0);
        }
    }
}

use std::sync::OnceLock;

use k3_core::golay::{build_code, GolayCode};
use k3_core::lattice::{root_system_type, RootType};
use k3_core::leech::{build_basis, inner, minimal_vectors, LeechBasis, LeechVector};
use k3_core::lorentz::*;
use num_rational::Rational64;
use proptest::prelude::*;

struct Fixture {
    basis: LeechBasis,
    minvecs: Vec<LeechVector>,
    emb: D4Embedding,
    roots42: Vec<LeechRoot>,
    roots168: Vec<LeechRoot>,
    curves: CurveGraph,
    w_prime: LorentzVector,
}

fn fx() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let code: GolayCode = build_code().unwrap();
        let basis = build_basis(&code).unwrap();
        let minvecs = minimal_vectors(&basis, &code).vectors;
        let emb = D4Embedding::new(&basis).unwrap();
        let roots42 = roots_orthogonal_to_r(&emb, &basis, &minvecs);
        let roots168 = roots_attaching_d5(&emb, &basis, &minvecs);
        let curves = incidence_graph(&roots42).unwrap();
        let w_prime = weyl_projection_closed_form(&emb);
        Fixture { basis, minvecs, emb, roots42, roots168, curves, w_prime }
    })
}

fn odd_root(label: &str) -> LeechVector {
    let k = k3_core::golay::label_position(label).unwrap();
    LeechVector::omega() - 4 * LeechVector::unit(k)
}

#[test]
fn make_root_examples() {
    let f = fx();
    let z = make_root(&f.basis, LeechVector::ZERO).unwrap();
    assert_eq!(z.vector(), LorentzVector::new(LeechVector::ZERO, 1, -1));
    let x = make_root(&f.basis, 4 * LeechVector::unit(0) + LeechVector::omega()).unwrap();
    assert_eq!((x.vector().m, x.vector().n), (1, 2));
    let r = make_root(&f.basis, odd_root("4")).unwrap();
    assert_eq!((r.vector().m, r.vector().n), (1, 1));
    assert!(make_root(&f.basis, LeechVector::unit(3)).is_err());
    for root in f.emb.roots() {
        assert_eq!(root.vector().norm().unwrap(), -2);
        assert_eq!(root.pair_vector(&weyl_vector()).unwrap(), 1);
    }
}

#[test]
fn embedding_is_d4_centered_at_z() {
    let f = fx();
    let e = &f.emb;
    for leg in [e.x, e.y, e.t] {
        assert_eq!(leg.pair(&e.z), 1);
    }
    assert_eq!(e.x.pair(&e.y), 0);
    assert_eq!(e.x.pair(&e.t), 0);
    assert_eq!(e.y.pair(&e.t), 0);
    assert_eq!(root_system_type(&e.gram()).unwrap(), vec![RootType::D(4)]);
}

#[test]
fn forty_two_roots() {
    let f = fx();
    assert_eq!(f.roots42.len(), 42);
    assert!(f.roots42.iter().any(|r| *r.lambda() == cusp_lambda()));
    let mut with_r = f.emb.roots().map(|r| r.vector()).to_vec();
    for r in &f.roots42 {
        assert_eq!(r.vector().norm().unwrap(), -2);
        with_r.push(r.vector());
        let types = root_system_type(&gram_of(&with_r)).unwrap();
        assert_eq!(types, vec![RootType::A(1), RootType::D(4)]);
        with_r.pop();
    }
}

#[test]
fn hundred_roots_orthogonal_to_xyz() {
    let f = fx();
    let roots = roots_orthogonal_to_xyz(&f.emb, &f.basis, &f.minvecs);
    assert_eq!(roots.len(), 100);
    let count = |s: Shape| roots.iter().filter(|r| shape(r.lambda()) == s).count();
    assert_eq!((count(Shape::Fours), count(Shape::Octad), count(Shape::Odd)), (1, 77, 22));
}

#[test]
fn one_sixty_eight_roots() {
    let f = fx();
    assert_eq!(f.roots168.len(), 168);
    let on_t: Vec<_> =
        f.roots168.iter().filter(|r| attached_leg(&f.emb, r) == Some('t')).collect();
    assert_eq!(on_t.len(), 56);
    for leg in ['x', 'y'] {
        assert_eq!(f.roots168.iter().filter(|r| attached_leg(&f.emb, r) == Some(leg)).count(), 56);
    }
    let odd_on_t = on_t.iter().filter(|r| shape(r.lambda()) == Shape::Odd).count();
    assert_eq!(odd_on_t, 16);
    let mut with_r = f.emb.roots().map(|r| r.vector()).to_vec();
    for r in &f.roots168 {
        with_r.push(r.vector());
        assert_eq!(root_system_type(&gram_of(&with_r)).unwrap(), vec![RootType::D(5)]);
        with_r.pop();
    }
}

#[test]
fn curve_graph_families() {
    let f = fx();
    let g = &f.curves.graph;
    assert_eq!(g.edge_count(), 105);
    assert_eq!(g.girth(), Some(6));
    for (i, r) in f.curves.roots.iter().enumerate() {
        let name = root_name(r);
        let in_a = g.part(i) == 0;
        let a_like = name.starts_with('E') || name == "4vinf+4v0";
        assert_eq!(in_a, a_like, "{name}");
    }
    let names: Vec<String> = f.curves.family(1).iter().map(root_name).collect();
    for k in ["2", "3", "5", "14", "17"] {
        assert!(names.contains(&format!("vO-4v{k}")));
    }
    assert!(incidence_graph(&f.roots42[1..]).is_err());
}

#[test]
fn weyl_projection_agrees() {
    let f = fx();
    let p = weyl_projection(&f.emb).unwrap();
    assert!(p.agree);
    assert_eq!(p.norm, 14);
    for r in f.emb.roots() {
        assert_eq!(r.pair_vector(&f.w_prime).unwrap(), 0);
    }
}

#[test]
fn h_is_a_third_of_the_sum() {
    let f = fx();
    let mut vs: Vec<LorentzVector> = f.roots42.iter().map(|r| r.vector()).collect();
    assert!(verify_h_sum(&vs, &f.w_prime).unwrap().passed());
    vs[0] = -vs[0];
    assert!(!verify_h_sum(&vs, &f.w_prime).unwrap().sum_matches);
}

fn families() -> (Vec<LorentzVector>, Vec<LorentzVector>) {
    let f = fx();
    let a = f.curves.family(0).iter().map(|r| r.vector()).collect();
    let b = f.curves.family(1).iter().map(|r| r.vector()).collect();
    (a, b)
}

#[test]
fn class_l_for_both_families() {
    let f = fx();
    let (a, b) = families();
    for (fa, fb) in [(&a, &b), (&b, &a)] {
        let l = class_l(fa, &f.w_prime).unwrap();
        assert_eq!(l.norm().unwrap(), 2);
        assert!(fa.iter().all(|r| r.pair(&l).unwrap() == 0));
        assert!(fb.iter().all(|r| r.pair(&l).unwrap() == 1));
        assert!(f.emb.roots().iter().all(|r| r.pair_vector(&l).unwrap() == 0));
        assert!(f.basis.contains(&l.lambda));
    }
    let mut broken = a.clone();
    broken[0] = b[0];
    assert!(class_l(&broken, &f.w_prime).is_err());
}

#[test]
fn projections_and_reflections() {
    let f = fx();
    let (a, b) = families();
    let l = class_l(&a, &f.w_prime).unwrap();
    let lr = RationalVector::from_lattice(&l);
    for r in &f.roots168 {
        let rp = project_mod_r(&f.emb, r).unwrap();
        assert_eq!(rp.lattice_denominator(&f.basis), Some(2));
        assert_eq!(rp.norm(), Rational64::from_integer(-1));
        let met_a: Vec<LorentzVector> =
            a.iter().copied().filter(|v| rp.pair_lattice(v) != 0.into()).collect();
        let met_b = b.iter().filter(|v| rp.pair_lattice(v) != 0.into()).count();
        assert_eq!((met_a.len(), met_b), (6, 6));
        let s = sum(met_a.iter().copied());
        assert_eq!(rp.scale(2.into()), RationalVector::from_lattice(&(2 * l - s)));
        assert_eq!(reflect(&rp, &lr), RationalVector::from_lattice(&(5 * l - 2 * s)));
        for ri in &met_a {
            let img = reflect_lattice(&rp, ri, &f.basis).unwrap();
            assert_eq!(img, *ri + 2 * l - s);
        }
        for v in a.iter().chain(&b).chain([&l]) {
            let img = reflect_lattice(&rp, v, &f.basis).unwrap();
            assert_eq!(reflect_lattice(&rp, &img, &f.basis).unwrap(), *v);
            assert_eq!(img.norm().unwrap(), v.norm().unwrap());
            if rp.pair_lattice(v) == 0.into() {
                assert_eq!(img, *v);
            }
        }
    }
}

#[test]
fn named_projection_meets_twelve() {
    let f = fx();
    let r = make_root(&f.basis, odd_root("4")).unwrap();
    assert!(f.roots168.contains(&r));
    let rp = project_mod_r(&f.emb, &r).unwrap();
    let mut met: Vec<String> = f
        .roots42
        .iter()
        .filter(|v| rp.pair_lattice(&v.vector()) != 0.into())
        .map(root_name)
        .collect();
    met.sort();
    let mut want: Vec<String> = ["E1", "E5", "E9", "E10", "E11", "4vinf+4v0"]
        .iter()
        .map(|s| s.to_string())
        .chain((1..=6).map(|i| format!("L{i}")))
        .collect();
    want.sort();
    assert_eq!(met, want);
}

#[test]
fn complement_of_r() {
    let f = fx();
    let sub: Vec<LorentzVector> = f.emb.roots().map(|r| r.vector()).to_vec();
    let rep = complement_in_l(&f.basis, &sub).unwrap();
    assert_eq!(rep.rank, 22);
    assert_eq!(rep.determinant, "-4");
    assert_eq!(rep.signature, (1, 21));
    assert!(rep.even);
    assert_eq!(rep.divisors, vec![2, 2]);
    assert!(rep.sub_primitive);
    assert!(rep.complement_primitive);
    assert_eq!(lorentz_gram(&f.basis).unwrap().determinant(), (-1).into());
}

#[test]
fn complement_of_a2_a2() {
    let f = fx();
    let q = find_a2_a2(&f.basis, &f.minvecs, 2000).expect("A2+A2 among minimal-vector roots");
    let vs: Vec<LorentzVector> = q.iter().map(|r| r.vector()).collect();
    assert_eq!(root_system_type(&gram_of(&vs)).unwrap(), vec![RootType::A(2), RootType::A(2)]);
    let rep = complement_in_l(&f.basis, &vs).unwrap();
    assert_eq!(rep.rank, 22);
    assert_eq!(rep.divisors, vec![3, 3]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn root_products_from_differences(i in 0usize..196_560, j in 0usize..196_560) {
        let f = fx();
        let (a, b) = (f.minvecs[i], f.minvecs[j]);
        let ra = make_root(&f.basis, a).unwrap();
        let rb = make_root(&f.basis, b).unwrap();
        let d = a - b;
        let n = -inner(&d, &d).unwrap();
        prop_assert_eq!(ra.pair(&rb), n / 2 - 2);
    }
}

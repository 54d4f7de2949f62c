use k3_core::golay::{build_code, IndexSet24, TODD_K};
use k3_core::leech::*;
use proptest::prelude::*;
use std::sync::OnceLock;

fn fixture() -> &'static (k3_core::golay::GolayCode, LeechBasis) {
    static F: OnceLock<(k3_core::golay::GolayCode, LeechBasis)> = OnceLock::new();
    F.get_or_init(|| {
        let code = build_code().unwrap();
        let basis = build_basis(&code).unwrap();
        (code, basis)
    })
}

#[test]
fn generators_are_members() {
    let (code, basis) = fixture();
    for g in generators(code) {
        assert!(basis.contains(&g));
    }
    let k = IndexSet24::from_labels(&TODD_K).unwrap();
    assert!(basis.contains(&(2 * LeechVector::indicator(k))));
    assert!(basis.contains(&LeechVector::ZERO));
    assert!(!basis.contains(&LeechVector::unit(0)));
    let x = 4 * LeechVector::unit(0) + LeechVector::omega();
    assert!(basis.contains(&x));
}

#[test]
fn unimodular_gram() {
    let (_, basis) = fixture();
    let gram = k3_core::lattice::GramMatrix::from_rows(&basis.gram_rows().unwrap()).unwrap();
    assert_eq!(gram.determinant(), 1.into());
    assert!(gram.is_even());
    assert_eq!(gram.signature().unwrap(), (0, 24));
}

#[test]
fn minimal_vector_census() {
    let (code, basis) = fixture();
    let mv = minimal_vectors(basis, code);
    assert_eq!(mv.shapes, ShapeCounts { fours: 1104, octads: 97152, odd: 98304 });
    assert_eq!(mv.vectors.len(), MINIMAL_VECTOR_COUNT);
    assert!(mv.vectors.windows(2).all(|w| w[0] < w[1]));
    for v in &mv.vectors {
        assert_eq!(inner(v, v).unwrap(), -4);
        assert!(mv.vectors.binary_search(&-*v).is_ok());
    }
}

#[test]
fn no_roots() {
    let (_, basis) = fixture();
    let (found, examined) = norm_minus_two_vectors(basis).expect("uniform parity");
    assert!(found.is_empty());
    assert_eq!(examined, 48 + 10626 * 16);
}

#[test]
fn cache_is_validated() {
    let (code, basis) = fixture();
    let dir = tempfile::tempdir().unwrap();
    let (a, o1) = minimal_vectors_cached(basis, code, dir.path()).unwrap();
    assert_eq!(o1, CacheOutcome::Computed);
    let (b, o2) = minimal_vectors_cached(basis, code, dir.path()).unwrap();
    assert_eq!(o2, CacheOutcome::Loaded);
    assert_eq!(a, b);
    let path = cache_path(dir.path(), basis);
    let mut bytes = std::fs::read(&path).unwrap();
    bytes[10] ^= 1;
    std::fs::write(&path, &bytes).unwrap();
    let (c, o3) = minimal_vectors_cached(basis, code, dir.path()).unwrap();
    assert_eq!(o3, CacheOutcome::Rejected);
    assert_eq!(a, c);
}

proptest! {
    #[test]
    fn lattice_is_even(coef in proptest::collection::vec(-3i64..=3, 24)) {
        let (_, basis) = fixture();
        let v = (0..24).fold(LeechVector::ZERO, |acc, i| acc + coef[i] * basis.row(i));
        prop_assert!(basis.contains(&v));
        let n = inner(&v, &v).unwrap();
        prop_assert!(n % 2 == 0 && n <= 0);
        prop_assert!(v.is_zero() || n <= -4);
    }
}

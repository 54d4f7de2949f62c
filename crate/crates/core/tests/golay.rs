use std::sync::OnceLock;

use k3_core::golay::{build_code, label_position, GolayCode, IndexSet24, LABELS};
use proptest::prelude::*;

fn code() -> &'static GolayCode {
    static CODE: OnceLock<GolayCode> = OnceLock::new();
    CODE.get_or_init(|| build_code().unwrap())
}

fn codeword() -> impl Strategy<Value = IndexSet24> {
    (0usize..4096).prop_map(|i| code().codewords()[i])
}

#[test]
fn octads_json_lists_759_records() {
    let v: serde_json::Value = serde_json::from_str(&code().octads_json().unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 759);
}

#[test]
fn labels_round_trip() {
    for (i, l) in LABELS.iter().enumerate() {
        assert_eq!(label_position(l), Some(i));
    }
    assert_eq!(label_position("23"), None);
}

proptest! {
    #[test]
    fn code_is_closed_under_sum(a in codeword(), b in codeword()) {
        prop_assert!(code().contains(a.sym_diff(b)));
    }

    #[test]
    fn complements_are_codewords(a in codeword()) {
        prop_assert!(code().contains(a.complement()));
        prop_assert!(a.len() % 4 == 0);
    }

    #[test]
    fn every_five_set_lies_in_one_octad(set in proptest::sample::subsequence((0..24).collect::<Vec<usize>>(), 5)) {
        let five = IndexSet24::from_positions(set).unwrap();
        let o = code().find_octad(five).unwrap();
        prop_assert!(five.is_subset(o) && code().is_octad(o));
        prop_assert_eq!(code().octads_through(five), 1);
    }

    #[test]
    fn distinct_octads_meet_evenly(i in 0usize..759, j in 0usize..759) {
        let (a, b) = (code().octads()[i], code().octads()[j]);
        let k = a.intersection(b).len();
        prop_assert!(i == j || [0, 2, 4].contains(&k));
    }
}

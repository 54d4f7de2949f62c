//! The extended binary Golay code on the 24 points of the projective line
//! over F₂₃ and its Steiner system S(5,8,24).
//!
//! Positions are labelled `[∞, 0, 1, …, 22] ↦ [0, 1, 2, …, 23]`. The code is
//! built as the extended quadratic-residue code spanned by `{∞} ∪ (N + s)`
//! where `N` is the set of quadratic non-residues mod 23 and `s` ranges over
//! F₂₃. With this labeling `{∞,0,1,2,3,5,14,17}` is an octad and the octads
//! agree with Todd's table.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Point labels in position order.
pub const LABELS: [&str; 24] = [
    "inf", "0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "13", "14", "15",
    "16", "17", "18", "19", "20", "21", "22",
];

const FULL_MASK: u32 = (1 << 24) - 1;

/// Map a label (`"inf"`/`"∞"` or `"0"`..`"22"`) to its position.
pub fn label_position(label: &str) -> Option<usize> {
    match label {
        "inf" | "∞" => Some(0),
        _ => match label.parse::<usize>() {
            Ok(v) if v < 23 => Some(v + 1),
            _ => None,
        },
    }
}

/// A subset of the 24 positions, stored as a bit set (bit `i` = position `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet24(u32);

impl IndexSet24 {
    pub const EMPTY: IndexSet24 = IndexSet24(0);
    pub const FULL: IndexSet24 = IndexSet24(FULL_MASK);

    pub fn from_bits(bits: u32) -> Result<Self> {
        if bits & !FULL_MASK != 0 {
            return Err(Error::OutOfRange(format!("bits {bits:#x} exceed 24 positions")));
        }
        Ok(IndexSet24(bits))
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Result<Self> {
        let mut bits = 0u32;
        for p in positions {
            if p >= 24 {
                return Err(Error::OutOfRange(format!("position {p}")));
            }
            bits |= 1 << p;
        }
        Ok(IndexSet24(bits))
    }

    pub fn from_labels(labels: &[&str]) -> Result<Self> {
        let mut bits = 0u32;
        for l in labels {
            let p = label_position(l)
                .ok_or_else(|| Error::InvalidInput(format!("unknown label {l:?}")))?;
            bits |= 1 << p;
        }
        Ok(IndexSet24(bits))
    }

    pub fn singleton(position: usize) -> Self {
        assert!(position < 24);
        IndexSet24(1 << position)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, position: usize) -> bool {
        position < 24 && self.0 >> position & 1 == 1
    }

    #[inline]
    pub fn is_subset(self, other: IndexSet24) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn sym_diff(self, other: IndexSet24) -> IndexSet24 {
        IndexSet24(self.0 ^ other.0)
    }

    #[inline]
    pub fn intersection(self, other: IndexSet24) -> IndexSet24 {
        IndexSet24(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: IndexSet24) -> IndexSet24 {
        IndexSet24(self.0 | other.0)
    }

    #[inline]
    pub fn complement(self) -> IndexSet24 {
        IndexSet24(!self.0 & FULL_MASK)
    }

    pub fn positions(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..24).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn labels(self) -> Vec<&'static str> {
        self.positions().map(|p| LABELS[p]).collect()
    }
}

impl Ord for IndexSet24 {
    /// Lexicographic order on the sorted member positions.
    fn cmp(&self, other: &Self) -> Ordering {
        self.positions().cmp(other.positions())
    }
}

impl PartialOrd for IndexSet24 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet24 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

impl fmt::Display for IndexSet24 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for IndexSet24 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels())
    }
}

/// Which construction produced the code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConstructionPath {
    QuadraticResidue,
    TableSpan { completed_with: usize },
}

/// Reduced row-echelon basis over F₂, used for membership and rank.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<u32>,
}

impl Echelon {
    fn reduce(&self, mut v: u32) -> u32 {
        for &r in &self.rows {
            let pivot = 31 - r.leading_zeros();
            if v >> pivot & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// Insert `v`; returns false if it was already in the span.
    fn insert(&mut self, v: u32) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let pivot = 31 - v.leading_zeros();
        for r in self.rows.iter_mut() {
            if *r >> pivot & 1 == 1 {
                *r ^= v;
            }
        }
        self.rows.push(v);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    fn span(&self) -> Vec<u32> {
        let mut words = vec![0u32];
        for &r in &self.rows {
            let n = words.len();
            for i in 0..n {
                words.push(words[i] ^ r);
            }
        }
        words
    }
}

/// The extended binary Golay code together with its 759 octads.
#[derive(Clone, Debug)]
pub struct GolayCode {
    echelon: Echelon,
    codewords: Vec<IndexSet24>,
    octads: Vec<IndexSet24>,
    path: ConstructionPath,
}

impl GolayCode {
    fn from_echelon(echelon: Echelon, path: ConstructionPath) -> Self {
        let mut codewords: Vec<IndexSet24> =
            echelon.span().into_iter().map(IndexSet24).collect();
        codewords.sort();
        let octads = codewords.iter().copied().filter(|w| w.len() == 8).collect();
        GolayCode { echelon, codewords, octads, path }
    }

    pub fn dimension(&self) -> usize {
        self.echelon.rows.len()
    }

    pub fn basis(&self) -> Vec<IndexSet24> {
        self.echelon.rows.iter().map(|&r| IndexSet24(r)).collect()
    }

    /// All codewords in canonical order.
    pub fn codewords(&self) -> &[IndexSet24] {
        &self.codewords
    }

    /// The weight-8 codewords, sorted lexicographically by member positions.
    pub fn octads(&self) -> &[IndexSet24] {
        &self.octads
    }

    pub fn construction_path(&self) -> ConstructionPath {
        self.path
    }

    pub fn contains(&self, word: IndexSet24) -> bool {
        self.echelon.reduce(word.bits()) == 0
    }

    pub fn is_octad(&self, set: IndexSet24) -> bool {
        set.len() == 8 && self.contains(set)
    }

    pub fn weight_distribution(&self) -> BTreeMap<usize, usize> {
        let mut dist = BTreeMap::new();
        for w in &self.codewords {
            *dist.entry(w.len()).or_insert(0) += 1;
        }
        dist
    }

    pub fn minimum_weight(&self) -> usize {
        self.codewords.iter().map(|w| w.len()).filter(|&w| w > 0).min().unwrap_or(0)
    }

    /// The unique octad containing a 5-element set.
    pub fn find_octad(&self, five: IndexSet24) -> Result<IndexSet24> {
        if five.len() != 5 {
            return Err(Error::InvalidInput(format!(
                "expected a 5-element set, got {} elements",
                five.len()
            )));
        }
        let mut hits = self.octads.iter().filter(|o| five.is_subset(**o));
        match (hits.next(), hits.next()) {
            (Some(o), None) => Ok(*o),
            (None, _) => Err(Error::StructureViolation(format!("no octad contains {five}"))),
            (Some(_), Some(_)) => {
                Err(Error::StructureViolation(format!("several octads contain {five}")))
            }
        }
    }

    /// Number of octads containing every point of `points`.
    pub fn octads_through(&self, points: IndexSet24) -> usize {
        self.octads.iter().filter(|o| points.is_subset(**o)).count()
    }

    pub fn verify_steiner(&self) -> SteinerReport {
        verify_steiner_blocks(&self.octads)
    }

    pub fn verify_todd_table(&self) -> ToddTableReport {
        let mut entries = Vec::new();
        for (name, labels) in todd_table() {
            let set = IndexSet24::from_labels(&labels).expect("table labels are valid");
            entries.push(ToddEntry { is_octad: self.is_octad(set), name, set });
        }
        let mut duplicates = Vec::new();
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if entries[i].set == entries[j].set {
                    duplicates.push((entries[i].name.clone(), entries[j].name.clone()));
                }
            }
        }
        let mut distinct: Vec<IndexSet24> = entries.iter().map(|e| e.set).collect();
        distinct.sort();
        distinct.dedup();
        ToddTableReport { entries, duplicates, distinct: distinct.len() }
    }

    /// Octads as a JSON array of sorted label lists.
    pub fn octads_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.octads)?)
    }
}

/// Build the Golay code in the fixed labeling.
///
/// The quadratic-residue construction runs first; if it does not contain
/// the tabulated octads, the code is rebuilt from the table itself.
pub fn build_code() -> Result<GolayCode> {
    let qr = quadratic_residue_code();
    let table = table_sets();
    if check_code(&qr) && table.iter().all(|s| qr.is_octad(*s)) {
        log::debug!("golay: quadratic-residue construction accepted");
        return Ok(qr);
    }
    log::warn!("golay: quadratic-residue code misses tabulated octads, using table span");
    let code = table_span_code(&table)?;
    if !check_code(&code) {
        return Err(Error::ConstructionFailure(
            "table span does not complete to a [24,12,8] code".into(),
        ));
    }
    Ok(code)
}

fn check_code(code: &GolayCode) -> bool {
    let expected: BTreeMap<usize, usize> =
        [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)].into_iter().collect();
    code.dimension() == 12 && code.weight_distribution() == expected
}

/// Extended quadratic-residue code spanned by `{∞} ∪ (N + s)`.
pub fn quadratic_residue_code() -> GolayCode {
    let residues: Vec<usize> = (1..23).map(|x| x * x % 23).collect();
    let non_residues: Vec<usize> = (1..23).filter(|x| !residues.contains(x)).collect();
    let mut echelon = Echelon::default();
    for shift in 0..23 {
        let mut bits = 1u32; // ∞ restores even weight
        for &n in &non_residues {
            bits |= 1 << ((n + shift) % 23 + 1);
        }
        echelon.insert(bits);
    }
    GolayCode::from_echelon(echelon, ConstructionPath::QuadraticResidue)
}

/// Span of the given sets, completed to dimension 12 by adding weight-8
/// words (in lexicographic order) that keep the code doubly even with
/// minimum weight 8.
pub fn table_span_code(sets: &[IndexSet24]) -> Result<GolayCode> {
    let mut echelon = Echelon::default();
    for s in sets {
        echelon.insert(s.bits());
    }
    let mut added = 0;
    if echelon.rows.len() < 12 {
        let mut candidate = Vec::with_capacity(8);
        greedy_complete(&mut echelon, &mut candidate, 0, &mut added);
    }
    if echelon.rows.len() != 12 {
        return Err(Error::RankDeficiency { expected: 12, actual: echelon.rows.len() });
    }
    Ok(GolayCode::from_echelon(echelon, ConstructionPath::TableSpan { completed_with: added }))
}

fn greedy_complete(echelon: &mut Echelon, chosen: &mut Vec<usize>, start: usize, added: &mut usize) {
    if echelon.rows.len() >= 12 {
        return;
    }
    if chosen.len() == 8 {
        let bits = chosen.iter().fold(0u32, |acc, &p| acc | 1 << p);
        if extends_doubly_even(echelon, bits) {
            echelon.insert(bits);
            *added += 1;
        }
        return;
    }
    for p in start..24 {
        if 24 - p < 8 - chosen.len() {
            break;
        }
        chosen.push(p);
        greedy_complete(echelon, chosen, p + 1, added);
        chosen.pop();
        if echelon.rows.len() >= 12 {
            return;
        }
    }
}

fn extends_doubly_even(echelon: &Echelon, bits: u32) -> bool {
    if echelon.reduce(bits) == 0 {
        return false;
    }
    if echelon.rows.iter().any(|r| (r & bits).count_ones() % 2 == 1) {
        return false;
    }
    echelon.span().iter().all(|w| {
        let weight = (w ^ bits).count_ones();
        weight.is_multiple_of(4) && weight >= 8
    })
}

/// Outcome of a Steiner-property sweep over all 5-subsets.
#[derive(Clone, Debug, Serialize)]
pub struct SteinerReport {
    pub subsets_checked: usize,
    pub uncovered: usize,
    pub multiply_covered: usize,
}

impl SteinerReport {
    pub fn passed(&self) -> bool {
        self.subsets_checked == 42_504 && self.uncovered == 0 && self.multiply_covered == 0
    }
}

const fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1;
    let mut i = 0;
    while i < k {
        r = r * (n - i) / (i + 1);
        i += 1;
    }
    r
}

/// Colex rank of a 5-subset of 0..24.
fn rank5(positions: &[usize; 5]) -> usize {
    positions.iter().enumerate().map(|(i, &p)| binomial(p, i + 1)).sum()
}

/// Count, for every 5-subset of the 24 points, the blocks containing it.
pub fn verify_steiner_blocks(blocks: &[IndexSet24]) -> SteinerReport {
    let total = binomial(24, 5);
    let mut cover = vec![0u16; total];
    for block in blocks {
        let pts: Vec<usize> = block.positions().collect();
        let n = pts.len();
        if n < 5 {
            continue;
        }
        let mut idx = [0usize, 1, 2, 3, 4];
        loop {
            let five = [pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]], pts[idx[4]]];
            cover[rank5(&five)] += 1;
            // next combination
            let mut i = 5;
            while i > 0 && idx[i - 1] == n - 5 + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..5 {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    SteinerReport {
        subsets_checked: total,
        uncovered: cover.iter().filter(|&&c| c == 0).count(),
        multiply_covered: cover.iter().filter(|&&c| c > 1).count(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ToddEntry {
    pub name: String,
    pub set: IndexSet24,
    pub is_octad: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ToddTableReport {
    pub entries: Vec<ToddEntry>,
    /// Pairs of table names listing the same set.
    pub duplicates: Vec<(String, String)>,
    pub distinct: usize,
}

impl ToddTableReport {
    pub fn failures(&self) -> Vec<&ToddEntry> {
        self.entries.iter().filter(|e| !e.is_octad).collect()
    }
}

/// The fixed octad `K = {∞,0,1,2,3,5,14,17}`.
pub const TODD_K: [&str; 8] = ["inf", "0", "1", "2", "3", "5", "14", "17"];

/// Octads meeting `K` in `{∞,0,1,*}`, in Todd's numbering.
pub const TODD_E: [[&str; 8]; 20] = [
    ["inf", "0", "1", "2", "4", "13", "16", "22"],
    ["inf", "0", "1", "2", "6", "7", "19", "21"],
    ["inf", "0", "1", "2", "8", "11", "12", "18"],
    ["inf", "0", "1", "2", "9", "10", "15", "20"],
    ["inf", "0", "1", "3", "4", "11", "19", "20"],
    ["inf", "0", "1", "3", "6", "8", "10", "13"],
    ["inf", "0", "1", "3", "7", "9", "16", "18"],
    ["inf", "0", "1", "3", "12", "15", "21", "22"],
    ["inf", "0", "1", "4", "5", "7", "8", "15"],
    ["inf", "0", "1", "4", "6", "9", "12", "17"],
    ["inf", "0", "1", "4", "10", "14", "18", "21"],
    ["inf", "0", "1", "5", "6", "18", "20", "22"],
    ["inf", "0", "1", "5", "9", "11", "13", "21"],
    ["inf", "0", "1", "5", "10", "12", "16", "19"],
    ["inf", "0", "1", "6", "11", "14", "15", "16"],
    ["inf", "0", "1", "7", "10", "11", "17", "22"],
    ["inf", "0", "1", "7", "12", "13", "14", "20"],
    ["inf", "0", "1", "8", "9", "14", "19", "22"],
    ["inf", "0", "1", "8", "16", "17", "20", "21"],
    ["inf", "0", "1", "13", "15", "17", "18", "19"],
];

/// Octads meeting `K` in `{∞,0}`, in Todd's numbering. Entries 9 and 10
/// coincide in the source table.
pub const TODD_L: [[&str; 8]; 16] = [
    ["inf", "0", "4", "6", "8", "16", "18", "19"],
    ["inf", "0", "4", "6", "13", "15", "20", "21"],
    ["inf", "0", "4", "7", "9", "10", "13", "19"],
    ["inf", "0", "4", "7", "11", "12", "16", "21"],
    ["inf", "0", "4", "8", "10", "12", "20", "22"],
    ["inf", "0", "4", "9", "11", "15", "18", "22"],
    ["inf", "0", "6", "7", "8", "9", "11", "20"],
    ["inf", "0", "6", "7", "10", "12", "15", "18"],
    ["inf", "0", "6", "9", "10", "16", "21", "22"],
    ["inf", "0", "6", "9", "10", "16", "21", "22"],
    ["inf", "0", "7", "8", "13", "18", "21", "22"],
    ["inf", "0", "7", "15", "16", "19", "20", "22"],
    ["inf", "0", "8", "9", "12", "13", "15", "16"],
    ["inf", "0", "8", "10", "11", "15", "19", "21"],
    ["inf", "0", "9", "12", "18", "19", "20", "21"],
    ["inf", "0", "10", "11", "13", "16", "18", "20"],
];

/// `K`, `E1..E20`, `L1..L16` with their names.
pub fn todd_table() -> Vec<(String, [&'static str; 8])> {
    let mut out = vec![("K".to_string(), TODD_K)];
    out.extend(TODD_E.iter().enumerate().map(|(i, s)| (format!("E{}", i + 1), *s)));
    out.extend(TODD_L.iter().enumerate().map(|(i, s)| (format!("L{}", i + 1), *s)));
    out
}

fn table_sets() -> Vec<IndexSet24> {
    todd_table()
        .into_iter()
        .map(|(_, l)| IndexSet24::from_labels(&l).expect("valid labels"))
        .collect()
}

/// Todd's name (`E7`, `L3`, `K`) for a set, if it appears in the table.
pub fn todd_name(set: IndexSet24) -> Option<String> {
    todd_table()
        .into_iter()
        .find(|(_, l)| IndexSet24::from_labels(l).map(|s| s == set).unwrap_or(false))
        .map(|(n, _)| n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[&str]) -> IndexSet24 {
        IndexSet24::from_labels(labels).unwrap()
    }

    #[test]
    fn labels_round_trip() {
        for (i, l) in LABELS.iter().enumerate() {
            assert_eq!(label_position(l), Some(i));
        }
        assert_eq!(label_position("∞"), Some(0));
        assert_eq!(label_position("23"), None);
        assert!(IndexSet24::from_positions([24]).is_err());
        assert!(IndexSet24::from_bits(1 << 24).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let a = IndexSet24::from_positions([0, 5]).unwrap();
        let b = IndexSet24::from_positions([0, 1, 23]).unwrap();
        assert!(b < a);
    }

    #[test]
    fn find_octad_examples() {
        let code = build_code().unwrap();
        assert_eq!(code.construction_path(), ConstructionPath::QuadraticResidue);
        assert_eq!(code.find_octad(set(&["inf", "0", "1", "2", "3"])).unwrap(), set(&TODD_K));
        assert_eq!(code.find_octad(set(&["inf", "0", "1", "2", "4"])).unwrap(), set(&TODD_E[0]));
        assert!(matches!(
            code.find_octad(set(&["inf", "0", "1", "2"])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn removing_an_octad_uncovers_56() {
        let code = build_code().unwrap();
        let report = verify_steiner_blocks(&code.octads()[1..]);
        assert!(!report.passed());
        assert_eq!(report.uncovered, 56);
        assert_eq!(report.multiply_covered, 0);
    }

    #[test]
    fn table_duplicate_detected() {
        let code = build_code().unwrap();
        let report = code.verify_todd_table();
        assert_eq!(report.duplicates, vec![("L9".to_string(), "L10".to_string())]);
        assert_eq!(report.distinct, 36);
        assert!(report.failures().is_empty());
    }

    #[test]
    fn table_span_fallback_reaches_golay() {
        let code = table_span_code(&table_sets()).unwrap();
        assert!(check_code(&code));
        assert_eq!(code.construction_path(), ConstructionPath::TableSpan { completed_with: 1 });
        assert!(code.is_octad(set(&TODD_K)));
    }

    #[test]
    fn todd_names() {
        assert_eq!(todd_name(set(&TODD_E[4])).as_deref(), Some("E5"));
        assert_eq!(todd_name(set(&TODD_L[8])).as_deref(), Some("L9"));
        assert_eq!(todd_name(IndexSet24::EMPTY), None);
    }
}

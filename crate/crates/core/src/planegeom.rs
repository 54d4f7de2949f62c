//! The projective plane over F4: points, lines, incidence, independent
//! subsets, and isomorphism/automorphism search on small graphs.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, IncidenceGraph};

/// Element of F4 = {0, 1, a, a²} stored as index 0..3, with a² = a + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct F4(pub u8);

const ADD: [[u8; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const INV: [u8; 4] = [0, 1, 3, 2];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const A: F4 = F4(2);
    pub const A2: F4 = F4(3);

    pub fn all() -> [F4; 4] {
        [F4(0), F4(1), F4(2), F4(3)]
    }

    pub fn inv(self) -> Option<F4> {
        (self.0 != 0).then(|| F4(INV[self.0 as usize]))
    }
}

impl std::ops::Add for F4 {
    type Output = F4;
    fn add(self, o: F4) -> F4 {
        F4(ADD[self.0 as usize][o.0 as usize])
    }
}

impl std::ops::Mul for F4 {
    type Output = F4;
    fn mul(self, o: F4) -> F4 {
        F4(MUL[self.0 as usize][o.0 as usize])
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "a", "a2"][self.0 as usize])
    }
}

/// A normalized triple: the first nonzero coordinate is 1. Used for both
/// points and lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triple(pub [F4; 3]);

impl Triple {
    pub fn new(c: [F4; 3]) -> Result<Self> {
        let lead = c
            .iter()
            .find(|x| x.0 != 0)
            .ok_or_else(|| Error::InvalidInput("zero vector".into()))?;
        let s = lead.inv().expect("nonzero");
        Ok(Triple(c.map(|x| x * s)))
    }

    pub fn from_indices(c: [u8; 3]) -> Result<Self> {
        if c.iter().any(|&x| x > 3) {
            return Err(Error::OutOfRange(format!("{c:?} is not a triple over F4")));
        }
        Self::new(c.map(F4))
    }

    pub fn dot(&self, o: &Triple) -> F4 {
        (0..3).fold(F4::ZERO, |s, i| s + self.0[i] * o.0[i])
    }

    pub fn indices(&self) -> [u8; 3] {
        self.0.map(|x| x.0)
    }

    /// Comma-free form for labels and CSV cells, e.g. `1 a a2`.
    pub fn compact(&self) -> String {
        format!("{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// All 21 normalized triples, sorted.
pub fn enumerate_points() -> Vec<Triple> {
    let mut out = Vec::with_capacity(21);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                if let Ok(t) = Triple::from_indices([a, b, c]) {
                    if t.indices() == [a, b, c] {
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The point list as printed in the source material, in its printed
/// order (entries as F4 indices, `a = 2`, `a² = 3`).
pub const PRINTED_POINT_LIST: [[u8; 3]; 21] = [
    [1, 1, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 1],
    [0, 1, 1],
    [1, 0, 1],
    [1, 2, 0],
    [1, 3, 0],
    [1, 0, 2],
    [1, 0, 3],
    [0, 1, 2],
    [0, 1, 3],
    [1, 1, 2],
    [1, 1, 3],
    [1, 2, 1],
    [1, 3, 1],
    [1, 2, 2],
    [1, 2, 3],
    [1, 3, 1],
    [1, 3, 3],
];

#[derive(Clone, Debug, Serialize)]
pub struct PointListCheck {
    pub duplicates: Vec<String>,
    pub missing: Vec<String>,
}

impl PointListCheck {
    pub fn is_clean(&self) -> bool {
        self.duplicates.is_empty() && self.missing.is_empty()
    }
}

/// Compare a printed list against the canonical enumeration.
pub fn check_point_list(list: &[[u8; 3]]) -> Result<PointListCheck> {
    let mut seen = std::collections::BTreeMap::<Triple, usize>::new();
    for c in list {
        *seen.entry(Triple::from_indices(*c)?).or_default() += 1;
    }
    Ok(PointListCheck {
        duplicates: seen.iter().filter(|(_, &n)| n > 1).map(|(t, _)| t.to_string()).collect(),
        missing: enumerate_points()
            .into_iter()
            .filter(|t| !seen.contains_key(t))
            .map(|t| t.to_string())
            .collect(),
    })
}

/// Point/line incidence graph: vertices 0..21 are points (part 0), 21..42
/// are lines (part 1), both in sorted triple order.
pub fn build_incidence() -> IncidenceGraph {
    let pts = enumerate_points();
    let mut labels: Vec<String> = pts.iter().map(|p| format!("P({})", p.compact())).collect();
    labels.extend(pts.iter().map(|l| format!("L({})", l.compact())));
    let mut parts = vec![0u8; 21];
    parts.extend([1u8; 21]);
    let mut g = IncidenceGraph::new(labels, parts).expect("42 vertices");
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if p.dot(l) == F4::ZERO {
                g.add_edge(i, 21 + j);
            }
        }
    }
    g
}

/// The duality point ↦ line with the same coordinates, as a vertex map.
pub fn duality_map() -> Vec<usize> {
    (0..42).map(|v| (v + 21) % 42).collect()
}

pub fn is_automorphism(g: &IncidenceGraph, map: &[usize]) -> bool {
    is_isomorphism(g, g, map)
}

pub fn is_isomorphism(g1: &IncidenceGraph, g2: &IncidenceGraph, map: &[usize]) -> bool {
    let n = g1.len();
    if g2.len() != n || map.len() != n {
        return false;
    }
    let mut used = 0u64;
    for &m in map {
        if m >= n || used >> m & 1 == 1 {
            return false;
        }
        used |= 1 << m;
    }
    (0..n).all(|u| (0..n).all(|v| g1.has_edge(u, v) == g2.has_edge(map[u], map[v])))
}

/// Two distinct points span one line, two distinct lines meet in one point,
/// and the five lines through a point split the other 20 points 4+4+4+4+4.
pub fn verify_plane_axioms(g: &IncidenceGraph) -> bool {
    let common = |u: usize, v: usize| (g.neighbor_mask(u) & g.neighbor_mask(v)).count_ones();
    let pairs_ok = (0..42).all(|u| {
        (u + 1..42).filter(|&v| g.part(u) == g.part(v)).all(|v| common(u, v) == 1)
    });
    let pencils_ok = (0..21).all(|p| {
        let mut covered = 0u64;
        g.neighbors(p).all(|l| {
            let others = g.neighbor_mask(l) & !(1 << p);
            let fresh = others & covered == 0 && others.count_ones() == 4;
            covered |= others;
            fresh
        }) && covered.count_ones() == 20
    });
    pairs_ok && pencils_ok
}

/// Mask of points on the line through points `i` and `j` (indices into
/// [`enumerate_points`]).
fn line_masks(g: &IncidenceGraph) -> Vec<Vec<u64>> {
    let points = g.part_mask(0);
    (0..21)
        .map(|i| {
            (0..21)
                .map(|j| {
                    if i == j {
                        return 1 << i;
                    }
                    let l = bits(g.neighbor_mask(i) & g.neighbor_mask(j)).next().expect("a line");
                    g.neighbor_mask(l) & points
                })
                .collect()
        })
        .collect()
}

/// Sets of `k` points with no three collinear, `1 ≤ k ≤ 6`.
pub fn independent_sets(k: usize) -> Result<Vec<Vec<usize>>> {
    if !(1..=6).contains(&k) {
        return Err(Error::OutOfRange(format!("k = {k} (expected 1..=6)")));
    }
    let g = build_incidence();
    let lines = line_masks(&g);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        lines: &[Vec<u64>],
        k: usize,
        start: usize,
        blocked: u64,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in start..21 {
            if blocked >> p & 1 == 1 {
                continue;
            }
            let add = cur.iter().fold(1u64 << p, |m, &q| m | lines[p][q]);
            cur.push(p);
            rec(lines, k, p + 1, blocked | add, cur, out);
            cur.pop();
        }
    }
    rec(&lines, k, 0, 0, &mut cur, &mut out);
    Ok(out)
}

pub fn independent_subsets(k: usize) -> Result<usize> {
    Ok(independent_sets(k)?.len())
}

/// No conic over F4 passes through the six points: the 6×6 evaluation
/// matrix of the degree-2 monomials is invertible.
pub fn off_every_conic(points: &[Triple]) -> bool {
    let rows: Vec<[F4; 6]> = points
        .iter()
        .map(|p| {
            let [x, y, z] = p.0;
            [x * x, y * y, z * z, x * y, x * z, y * z]
        })
        .collect();
    rank_f4(rows) == points.len()
}

fn rank_f4<const N: usize>(mut m: Vec<[F4; N]>) -> usize {
    let mut r = 0;
    for c in 0..N {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != F4::ZERO) else { continue };
        m.swap(r, p);
        let s = m[r][c].inv().expect("nonzero");
        m[r] = m[r].map(|x| x * s);
        let pivot = m[r];
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != F4::ZERO {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = *x + k * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// For each vertex and distance `d`, the mask of vertices at distance `d`.
fn distance_classes(g: &IncidenceGraph) -> Vec<Vec<u64>> {
    let dm = g.distance_matrix();
    let n = g.len();
    let maxd = dm.iter().flatten().filter(|&&d| d != u8::MAX).max().copied().unwrap_or(0) as usize;
    (0..n)
        .map(|u| {
            let mut classes = vec![0u64; maxd + 2];
            for v in 0..n {
                let d = dm[u][v];
                let idx = if d == u8::MAX { maxd + 1 } else { d as usize };
                classes[idx] |= 1 << v;
            }
            classes
        })
        .collect()
}

struct Matcher<'a> {
    g1: &'a IncidenceGraph,
    g2: &'a IncidenceGraph,
    d1: Vec<Vec<u8>>,
    c2: Vec<Vec<u64>>,
}

/// Search state: `cand[v]` holds the images still allowed for each
/// unmapped `v`, narrowed by distances to every mapped vertex.
#[derive(Clone)]
struct State {
    map: Vec<usize>,
    cand: Vec<u64>,
    used: u64,
}

impl<'a> Matcher<'a> {
    fn new(g1: &'a IncidenceGraph, g2: &'a IncidenceGraph) -> Self {
        Matcher { g1, g2, d1: g1.distance_matrix(), c2: distance_classes(g2) }
    }

    fn compatible_sizes(&self) -> bool {
        let degs = |g: &IncidenceGraph| {
            let mut d: Vec<usize> = (0..g.len()).map(|v| g.degree(v)).collect();
            d.sort_unstable();
            d
        };
        self.g1.len() == self.g2.len() && degs(self.g1) == degs(self.g2)
    }

    fn initial(&self, preserve_parts: bool) -> State {
        let n = self.g1.len();
        let cand = (0..n)
            .map(|v| {
                let mut m = (0..n)
                    .filter(|&w| self.g2.degree(w) == self.g1.degree(v))
                    .fold(0u64, |m, w| m | 1 << w);
                if preserve_parts {
                    m &= self.g2.part_mask(self.g1.part(v));
                }
                m
            })
            .collect();
        State { map: vec![usize::MAX; n], cand, used: 0 }
    }

    /// Map `v ↦ w` and narrow the other candidate sets; `false` on a wipeout.
    fn assign(&self, s: &mut State, v: usize, w: usize) -> bool {
        s.map[v] = w;
        s.used |= 1 << w;
        let classes = &self.c2[w];
        for u in 0..s.map.len() {
            if s.map[u] != usize::MAX {
                continue;
            }
            let d = self.d1[v][u];
            let idx = if d == u8::MAX { classes.len() - 1 } else { d as usize };
            s.cand[u] &= classes.get(idx).copied().unwrap_or(0) & !s.used;
            if s.cand[u] == 0 {
                return false;
            }
        }
        true
    }

    /// Unmapped vertex with the fewest candidates, or `None` when done.
    fn pick(&self, s: &State) -> Option<usize> {
        (0..s.map.len())
            .filter(|&v| s.map[v] == usize::MAX)
            .min_by_key(|&v| (s.cand[v].count_ones(), v))
    }

    fn count(&self, s: &State) -> u64 {
        let Some(v) = self.pick(s) else { return 1 };
        bits(s.cand[v])
            .map(|w| {
                let mut t = s.clone();
                if self.assign(&mut t, v, w) {
                    self.count(&t)
                } else {
                    0
                }
            })
            .sum()
    }

    fn first(&self, s: &State) -> Option<Vec<usize>> {
        let Some(v) = self.pick(s) else { return Some(s.map.clone()) };
        bits(s.cand[v]).find_map(|w| {
            let mut t = s.clone();
            if self.assign(&mut t, v, w) {
                self.first(&t)
            } else {
                None
            }
        })
    }
}

/// A vertex bijection `g1 → g2` preserving adjacency, if one exists. The
/// first one in the deterministic search order is returned.
pub fn find_isomorphism(g1: &IncidenceGraph, g2: &IncidenceGraph) -> Option<Vec<usize>> {
    let m = Matcher::new(g1, g2);
    if !m.compatible_sizes() {
        return None;
    }
    m.first(&m.initial(false))
}

/// Whether some automorphism of `g` maps `u ↦ w` for every pair given.
pub fn extends_to_automorphism(g: &IncidenceGraph, pairs: &[(usize, usize)]) -> bool {
    let m = Matcher::new(g, g);
    let mut s = m.initial(false);
    for &(u, w) in pairs {
        if s.map[u] != usize::MAX || s.cand[u] >> w & 1 == 0 || !m.assign(&mut s, u, w) {
            return false;
        }
    }
    m.first(&s).is_some()
}

/// One vertex from each orbit, restricted to `candidates`, of the
/// automorphisms fixing every vertex of `fixed`. Representatives are the
/// smallest members of their orbits within `candidates`.
pub fn orbit_representatives(g: &IncidenceGraph, fixed: &[usize], candidates: u64) -> Vec<usize> {
    let mut reps: Vec<usize> = Vec::new();
    for w in bits(candidates) {
        let seen = reps.iter().any(|&r| {
            let mut pairs: Vec<(usize, usize)> = fixed.iter().map(|&x| (x, x)).collect();
            pairs.push((r, w));
            extends_to_automorphism(g, &pairs)
        });
        if !seen {
            reps.push(w);
        }
    }
    reps
}

/// Number of automorphisms of `g`, counting part-swapping maps unless
/// `preserve_parts` is set. Exhaustive: every automorphism is a leaf.
pub fn count_automorphisms_with(g: &IncidenceGraph, preserve_parts: bool) -> u64 {
    let m = Matcher::new(g, g);
    let s = m.initial(preserve_parts);
    let Some(v) = m.pick(&s) else { return 1 };
    let top: Vec<usize> = bits(s.cand[v]).collect();
    top.par_iter()
        .map(|&w| {
            let mut t = s.clone();
            if m.assign(&mut t, v, w) {
                m.count(&t)
            } else {
                0
            }
        })
        .sum()
}

pub fn count_automorphisms(g: &IncidenceGraph) -> u64 {
    count_automorphisms_with(g, false)
}

/// Independent order computation: `|PGL(3,4)|` times the Frobenius
/// twist times the duality. `|PSL(3,4)| = |PGL(3,4)| / 3 = 20160`.
pub fn expected_automorphism_count() -> u64 {
    let q: u64 = 4;
    let gl = (q.pow(3) - 1) * (q.pow(3) - q) * (q.pow(3) - q * q);
    let pgl = gl / (q - 1);
    let psl = pgl / 3;
    debug_assert_eq!(psl, 20160);
    pgl * 2 * 2
}

/// 21×21 point/line incidence matrix as CSV with a header row of line
/// labels and a leading column of point labels.
pub fn incidence_csv(g: &IncidenceGraph) -> String {
    let rows: Vec<usize> = bits(g.part_mask(0)).collect();
    let cols: Vec<usize> = bits(g.part_mask(1)).collect();
    let mut s = String::from("point");
    for &c in &cols {
        s.push(',');
        s.push_str(g.label(c));
    }
    s.push('\n');
    for &r in &rows {
        s.push_str(g.label(r));
        for &c in &cols {
            s.push_str(if g.has_edge(r, c) { ",1" } else { ",0" });
        }
        s.push('\n');
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelPair {
    pub from: String,
    pub to: String,
}

pub fn bijection_json(g1: &IncidenceGraph, g2: &IncidenceGraph, map: &[usize]) -> Result<String> {
    let pairs: Vec<LabelPair> = map
        .iter()
        .enumerate()
        .map(|(u, &v)| LabelPair { from: g1.label(u).into(), to: g2.label(v).into() })
        .collect();
    Ok(serde_json::to_string_pretty(&pairs)?)
}

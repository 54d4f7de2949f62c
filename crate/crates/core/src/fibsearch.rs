//! Searches for fibre configurations in the 42-curve intersection graph:
//! five D̃4 stars with sixteen sections, four Ã5 hexagons with eighteen
//! sections, and induced affine Dynkin subdiagrams in general.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, IncidenceGraph};
use crate::planegeom::orbit_representatives;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub vertices: Vec<usize>,
    pub multiplicities: Vec<u8>,
}

impl Fiber {
    fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    fn simple_mask(&self) -> u64 {
        self.vertices
            .iter()
            .zip(&self.multiplicities)
            .filter(|(_, &k)| k == 1)
            .fold(0, |m, (&v, _)| m | 1 << v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationConfig {
    pub fibers: Vec<Fiber>,
    pub sections: Vec<usize>,
    pub extra: Option<usize>,
}

/// Everything an independent re-check finds wrong with a configuration.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Validation {
    pub violations: Vec<String>,
    /// Edges with both ends among the sections.
    pub section_edges: usize,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn all_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Checks shared by every fibre type: the pieces partition the vertex
/// set, distinct fibres do not meet, and each section meets each fibre in
/// exactly one simple component and no multiple one.
fn validate_common(g: &IncidenceGraph, cfg: &FibrationConfig, v: &mut Validation) {
    let mut seen = 0u64;
    let mut total = 0;
    let pieces = cfg
        .fibers
        .iter()
        .map(|f| f.vertices.as_slice())
        .chain([cfg.sections.as_slice(), cfg.extra.as_slice()]);
    for p in pieces {
        total += p.len();
        let m = mask_of(p);
        if m & seen != 0 || m.count_ones() as usize != p.len() {
            v.violations.push("a vertex is used twice".into());
        }
        seen |= m;
    }
    if seen != all_mask(g.len()) || total != g.len() {
        v.violations.push(format!("{total} vertices used, graph has {}", g.len()));
    }
    for (i, f) in cfg.fibers.iter().enumerate() {
        if f.vertices.len() != f.multiplicities.len() {
            v.violations.push(format!("fiber {i}: multiplicity list length"));
        }
        for (j, h) in cfg.fibers.iter().enumerate().skip(i + 1) {
            if bits(f.mask()).any(|u| g.neighbor_mask(u) & h.mask() != 0) {
                v.violations.push(format!("fibers {i} and {j} meet"));
            }
        }
    }
    for &s in &cfg.sections {
        for (i, f) in cfg.fibers.iter().enumerate() {
            let nb = g.neighbor_mask(s);
            let simple = (nb & f.simple_mask()).count_ones();
            let multiple = (nb & f.mask() & !f.simple_mask()).count_ones();
            if simple != 1 || multiple != 0 {
                v.violations.push(format!(
                    "section {} meets fiber {i} in {simple} simple, {multiple} multiple components",
                    g.label(s)
                ));
            }
        }
    }
    let sm = mask_of(&cfg.sections);
    v.section_edges =
        cfg.sections.iter().map(|&s| (g.neighbor_mask(s) & sm).count_ones() as usize).sum::<usize>() / 2;
}

/// Star fibres `2c + l1 + l2 + l3 + l4`, pairwise disjoint sections, and
/// the extra vertex meeting exactly the centres.
pub fn validate_d4(g: &IncidenceGraph, cfg: &FibrationConfig, fibers: usize) -> Validation {
    let mut v = Validation::default();
    if cfg.fibers.len() != fibers {
        v.violations.push(format!("{} fibers, expected {fibers}", cfg.fibers.len()));
    }
    for (i, f) in cfg.fibers.iter().enumerate() {
        let ok_shape = f.vertices.len() == 5 && f.multiplicities == [2, 1, 1, 1, 1];
        if !ok_shape {
            v.violations.push(format!("fiber {i} is not a star with four leaves"));
            continue;
        }
        let c = f.vertices[0];
        let leaves = mask_of(&f.vertices[1..]);
        if g.neighbor_mask(c) & leaves != leaves {
            v.violations.push(format!("fiber {i}: centre misses a leaf"));
        }
        if bits(leaves).any(|l| g.neighbor_mask(l) & leaves != 0) {
            v.violations.push(format!("fiber {i}: leaves meet"));
        }
    }
    validate_common(g, cfg, &mut v);
    if v.section_edges != 0 {
        v.violations.push(format!("{} pairs of sections meet", v.section_edges));
    }
    let centres = cfg.fibers.iter().fold(0u64, |m, f| m | f.vertices.first().map_or(0, |&c| 1 << c));
    match cfg.extra {
        Some(n) if g.neighbor_mask(n) == centres => {}
        _ => v.violations.push("extra vertex does not meet exactly the centres".into()),
    }
    v
}

/// Induced hexagon fibres in cyclic order, no extra vertex.
pub fn validate_a5(g: &IncidenceGraph, cfg: &FibrationConfig, fibers: usize) -> Validation {
    let mut v = Validation::default();
    if cfg.fibers.len() != fibers {
        v.violations.push(format!("{} fibers, expected {fibers}", cfg.fibers.len()));
    }
    for (i, f) in cfg.fibers.iter().enumerate() {
        let n = f.vertices.len();
        let cyc = n == 6
            && f.multiplicities.iter().all(|&k| k == 1)
            && (0..n).all(|j| {
                let nb = g.neighbor_mask(f.vertices[j]) & f.mask();
                nb == (1 << f.vertices[(j + 1) % n]) | (1 << f.vertices[(j + n - 1) % n])
            });
        if !cyc {
            v.violations.push(format!("fiber {i} is not an induced hexagon"));
        }
    }
    if cfg.extra.is_some() {
        v.violations.push("unexpected extra vertex".into());
    }
    validate_common(g, cfg, &mut v);
    v
}

/// The D̃4 configuration through `r0`: for a neighbour `N` of `r0`, the
/// five neighbours of `N` are the centres, each with its other four
/// neighbours as leaves, and everything else in `r0`'s part is a section.
/// Neighbours `N` are tried in increasing order.
pub fn find_d4_configuration_from(g: &IncidenceGraph, r0: usize) -> Result<FibrationConfig> {
    for n in g.neighbors(r0) {
        let centres: Vec<usize> = g.neighbors(n).collect();
        let fibers: Vec<Fiber> = centres
            .iter()
            .map(|&c| {
                let mut vertices = vec![c];
                vertices.extend(g.neighbors(c).filter(|&l| l != n));
                let multiplicities = std::iter::once(2).chain(std::iter::repeat(1)).take(vertices.len()).collect();
                Fiber { vertices, multiplicities }
            })
            .collect();
        let used = fibers.iter().fold(1u64 << n, |m, f| m | f.mask());
        let sections: Vec<usize> = bits(all_mask(g.len()) & !used).collect();
        let cfg = FibrationConfig { fibers, sections, extra: Some(n) };
        if validate_d4(g, &cfg, 5).is_valid() {
            return Ok(cfg);
        }
    }
    Err(Error::NotFound(format!("no D4 configuration through {}", g.label(r0))))
}

/// First D̃4 configuration over starting vertices of part 0.
pub fn find_d4_configuration(g: &IncidenceGraph) -> Result<FibrationConfig> {
    bits(g.part_mask(0))
        .find_map(|r0| find_d4_configuration_from(g, r0).ok())
        .ok_or_else(|| Error::NotFound("no D4 configuration".into()))
}

/// All induced 6-cycles, each as vertices in cyclic order starting from
/// its smallest vertex, sorted.
pub fn induced_hexagons(g: &IncidenceGraph) -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    let n = g.len();
    for s in 0..n {
        let mut path = vec![s];
        extend_cycle(g, s, &mut path, &mut out);
    }
    out.sort();
    out
}

fn extend_cycle(g: &IncidenceGraph, s: usize, path: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
    let last = *path.last().expect("nonempty");
    let inner = if path.len() > 2 { mask_of(&path[1..path.len() - 1]) } else { 0 };
    if path.len() == 6 {
        // close up, counting each cycle in one direction only
        if g.has_edge(last, s) && path[1] < path[5] {
            out.push(path[..].try_into().expect("six"));
        }
        return;
    }
    for v in g.neighbors(last) {
        if v <= s || path.contains(&v) || g.neighbor_mask(v) & inner != 0 {
            continue;
        }
        if path.len() < 5 && g.has_edge(v, s) && path.len() > 1 {
            continue;
        }
        if path.len() == 5 && !g.has_edge(v, s) {
            continue;
        }
        path.push(v);
        extend_cycle(g, s, path, out);
        path.pop();
    }
}

/// Four pairwise non-meeting induced hexagons such that every other vertex
/// meets each hexagon exactly once. The first one in lexicographic order
/// of hexagon indices is returned.
pub fn find_a5_configuration(g: &IncidenceGraph) -> Result<FibrationConfig> {
    let hex = induced_hexagons(g);
    let masks: Vec<u64> = hex.iter().map(|h| mask_of(h)).collect();
    let reach: Vec<u64> =
        masks.iter().map(|&m| bits(m).fold(m, |r, v| r | g.neighbor_mask(v))).collect();
    let full = all_mask(g.len());
    let mut chosen = Vec::with_capacity(4);
    if !a5_rec(g, &masks, &reach, full, 0, &mut chosen) {
        return Err(Error::NotFound("no configuration of four hexagons".into()));
    }
    let fibers: Vec<Fiber> = chosen
        .iter()
        .map(|&i| Fiber { vertices: hex[i].to_vec(), multiplicities: vec![1; 6] })
        .collect();
    let used = chosen.iter().fold(0u64, |m, &i| m | masks[i]);
    Ok(FibrationConfig { fibers, sections: bits(full & !used).collect(), extra: None })
}

fn a5_rec(
    g: &IncidenceGraph,
    masks: &[u64],
    reach: &[u64],
    full: u64,
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == 4 {
        let used = chosen.iter().fold(0u64, |m, &i| m | masks[i]);
        return bits(full & !used).all(|s| {
            chosen.iter().all(|&i| (g.neighbor_mask(s) & masks[i]).count_ones() == 1)
        });
    }
    for i in start..masks.len() {
        // fibres may not share or touch a vertex
        if chosen.iter().any(|&j| reach[j] & masks[i] != 0) {
            continue;
        }
        // no outside vertex may meet one hexagon twice
        let used = chosen.iter().fold(masks[i], |m, &j| m | masks[j]);
        let bad = bits(full & !used).any(|s| (g.neighbor_mask(s) & masks[i]).count_ones() > 1);
        if bad {
            continue;
        }
        chosen.push(i);
        if a5_rec(g, masks, reach, full, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Path with `k` vertices.
pub fn path_diagram(k: usize) -> IncidenceGraph {
    let mut g = IncidenceGraph::unlabelled(k).expect("small");
    for i in 1..k {
        g.add_edge(i - 1, i);
    }
    g
}

/// Affine diagram D̃n (`n ≥ 4`, `n + 1` vertices): a chain of `n − 3`
/// vertices with two extra leaves at each end (four at the single vertex
/// when `n = 4`).
pub fn affine_d(n: usize) -> Result<IncidenceGraph> {
    if !(4..=63).contains(&n) {
        return Err(Error::OutOfRange(format!("D~{n}")));
    }
    let chain = n - 3;
    let mut g = IncidenceGraph::unlabelled(n + 1)?;
    for i in 1..chain {
        g.add_edge(i - 1, i);
    }
    g.add_edge(0, chain);
    g.add_edge(0, chain + 1);
    g.add_edge(chain - 1, chain + 2);
    g.add_edge(chain - 1, chain + 3);
    Ok(g)
}

#[derive(Clone, Debug, Serialize)]
pub struct SubdiagramSearch {
    /// `found[i]` is the image of pattern vertex `i`.
    pub found: Option<Vec<usize>>,
    /// The search space was fully explored (or a match was found).
    pub complete: bool,
    pub nodes: u64,
}

/// Induced copy of `pattern` in `g`, by backtracking with at most
/// `budget` search nodes. Every unmapped pattern vertex keeps the set of
/// images still consistent with adjacency and non-adjacency to all mapped
/// vertices; the search branches on the smallest such set among vertices
/// next to the mapped part.
pub fn find_subdiagram(g: &IncidenceGraph, pattern: &IncidenceGraph, budget: u64) -> SubdiagramSearch {
    find_subdiagram_with_symmetry(g, pattern, budget, 0)
}

/// As [`find_subdiagram`], but the first `levels` choices only try one
/// image per orbit of the automorphisms of `g` fixing the images chosen so
/// far. Any embedding can be moved onto those representatives, so the
/// answer is unchanged while the search shrinks by up to `|Aut(g)|`.
pub fn find_subdiagram_with_symmetry(
    g: &IncidenceGraph,
    pattern: &IncidenceGraph,
    budget: u64,
    levels: usize,
) -> SubdiagramSearch {
    let mut nodes = 0u64;
    if pattern.len() > g.len() {
        return SubdiagramSearch { found: None, complete: true, nodes };
    }
    let state = SubState {
        map: vec![usize::MAX; pattern.len()],
        cand: vec![all_mask(g.len()); pattern.len()],
        used: 0,
    };
    let found = sub_rec(g, pattern, state, levels, &mut nodes, budget);
    SubdiagramSearch { complete: found.is_some() || nodes < budget, found, nodes }
}

#[derive(Clone)]
struct SubState {
    map: Vec<usize>,
    cand: Vec<u64>,
    used: u64,
}

fn sub_rec(
    g: &IncidenceGraph,
    p: &IncidenceGraph,
    s: SubState,
    levels: usize,
    nodes: &mut u64,
    budget: u64,
) -> Option<Vec<usize>> {
    let unmapped = || (0..p.len()).filter(|&v| s.map[v] == usize::MAX);
    let frontier = unmapped()
        .filter(|&v| p.neighbors(v).any(|u| s.map[u] != usize::MAX))
        .min_by_key(|&v| (s.cand[v].count_ones(), v));
    let Some(v) = frontier.or_else(|| unmapped().next()) else {
        return Some(s.map);
    };
    let choices: Vec<usize> = if levels > 0 {
        let images: Vec<usize> = s.map.iter().copied().filter(|&x| x != usize::MAX).collect();
        orbit_representatives(g, &images, s.cand[v])
    } else {
        bits(s.cand[v]).collect()
    };
    for w in choices {
        if *nodes >= budget {
            return None;
        }
        *nodes += 1;
        let mut t = s.clone();
        t.map[v] = w;
        t.used |= 1 << w;
        let nb = g.neighbor_mask(w);
        let mut alive = true;
        for u in 0..p.len() {
            if t.map[u] != usize::MAX {
                continue;
            }
            t.cand[u] &= !t.used & if p.has_edge(u, v) { nb } else { !nb };
            if t.cand[u] == 0 {
                alive = false;
                break;
            }
        }
        if alive {
            if let Some(m) = sub_rec(g, p, t, levels.saturating_sub(1), nodes, budget) {
                return Some(m);
            }
        }
    }
    None
}

#[derive(Serialize)]
struct ConfigJson<'a> {
    fibers: Vec<Vec<&'a str>>,
    sections: Vec<&'a str>,
    extra: Option<&'a str>,
}

/// `{fibers: [[labels]], sections: [labels], extra: label}`.
pub fn config_json(g: &IncidenceGraph, cfg: &FibrationConfig) -> Result<serde_json::Value> {
    let j = ConfigJson {
        fibers: cfg.fibers.iter().map(|f| f.vertices.iter().map(|&v| g.label(v)).collect()).collect(),
        sections: cfg.sections.iter().map(|&v| g.label(v)).collect(),
        extra: cfg.extra.map(|v| g.label(v)),
    };
    Ok(serde_json::to_value(j)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::heawood;
    use crate::planegeom::build_incidence;

    #[test]
    fn d4_from_every_point() {
        let g = build_incidence();
        for r0 in 0..21 {
            let cfg = find_d4_configuration_from(&g, r0).unwrap();
            assert!(validate_d4(&g, &cfg, 5).is_valid());
            assert_eq!(cfg.sections.len(), 16);
            assert!(cfg.fibers.iter().any(|f| f.vertices[0] == r0));
        }
    }

    #[test]
    fn heawood_has_no_d4() {
        assert!(find_d4_configuration(&heawood()).is_err());
    }

    #[test]
    fn hexagon_count() {
        assert_eq!(induced_hexagons(&build_incidence()).len(), 1120);
        assert_eq!(induced_hexagons(&heawood()).len(), 28);
    }

    #[test]
    fn a5_configuration() {
        let g = build_incidence();
        let cfg = find_a5_configuration(&g).unwrap();
        let v = validate_a5(&g, &cfg, 4);
        assert!(v.is_valid(), "{:?}", v.violations);
        assert_eq!(cfg.sections.len(), 18);
        assert_eq!(cfg.sections.iter().filter(|&&s| g.part(s) == 0).count(), 9);
        // degree 5 minus one edge into each of four hexagons
        assert_eq!(v.section_edges, 9);
        for f in &cfg.fibers {
            let parts: Vec<u8> = f.vertices.iter().map(|&u| g.part(u)).collect();
            assert!(parts.windows(2).all(|w| w[0] != w[1]));
        }
    }

    #[test]
    fn corrupted_configs_are_rejected() {
        let g = build_incidence();
        let mut cfg = find_d4_configuration(&g).unwrap();
        let s = cfg.sections.pop().unwrap();
        assert!(!validate_d4(&g, &cfg, 5).is_valid());
        cfg.sections.push(s);
        cfg.fibers[0].vertices.swap(0, 1);
        assert!(!validate_d4(&g, &cfg, 5).is_valid());
    }

    #[test]
    fn small_subdiagrams() {
        let g = build_incidence();
        let r = find_subdiagram(&g, &path_diagram(3), 1000);
        assert!(r.found.is_some() && r.complete);
        let d4 = affine_d(4).unwrap();
        assert_eq!(d4.degree(0), 4);
        assert!(find_subdiagram(&g, &d4, 1000).found.is_some());
        let d20 = affine_d(20).unwrap();
        assert_eq!(d20.len(), 21);
        assert_eq!(d20.edge_count(), 20);
        assert!(find_subdiagram(&heawood(), &d4, 100_000).found.is_none());
        let r = find_subdiagram_with_symmetry(&heawood(), &d4, 100_000, 3);
        assert!(r.found.is_none() && r.complete);
        let p = find_subdiagram_with_symmetry(&g, &path_diagram(9), 100_000, 3);
        assert_eq!(g.induced(&p.found.unwrap()).edge_count(), 8);
    }

    #[test]
    fn export_shape() {
        let g = build_incidence();
        let cfg = find_d4_configuration(&g).unwrap();
        let j = config_json(&g, &cfg).unwrap();
        assert_eq!(j["fibers"].as_array().unwrap().len(), 5);
        assert_eq!(j["sections"].as_array().unwrap().len(), 16);
        assert!(j["extra"].is_string());
    }
}

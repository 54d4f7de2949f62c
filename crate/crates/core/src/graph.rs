//! Small undirected graphs (at most 64 vertices) with a two-part labelling,
//! stored as adjacency bitmasks.

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    adj: Vec<u64>,
    parts: Vec<u8>,
    labels: Vec<String>,
}

impl IncidenceGraph {
    pub fn new(labels: Vec<String>, parts: Vec<u8>) -> Result<Self> {
        if labels.len() != parts.len() || labels.len() > MAX_VERTICES {
            return Err(Error::InvalidInput(format!(
                "{} labels, {} parts (max {MAX_VERTICES} vertices)",
                labels.len(),
                parts.len()
            )));
        }
        Ok(IncidenceGraph { adj: vec![0; labels.len()], parts, labels })
    }

    /// Unlabelled graph with every vertex in part 0.
    pub fn unlabelled(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), vec![0; n])
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn part(&self, v: usize) -> u8 {
        self.parts[v]
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn part_mask(&self, part: u8) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == part)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|u| self.neighbors(u).filter(move |&v| u < v).map(move |v| (u, v)))
            .collect()
    }

    /// No edge joins two vertices of the same part.
    pub fn respects_parts(&self) -> bool {
        (0..self.len()).all(|v| self.adj[v] & self.part_mask(self.parts[v]) == 0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.len()).all(|v| self.degree(v) == k)
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.distances_from(0).iter().all(|d| d.is_some())
    }

    /// BFS distances from `s`.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[s] = Some(0);
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let next = bits(frontier).fold(0, |m, v| m | self.adj[v]) & !seen;
            for v in bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// All-pairs distances; `u8::MAX` marks unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.len())
            .map(|s| {
                self.distances_from(s)
                    .into_iter()
                    .map(|d| d.map_or(u8::MAX, |d| d as u8))
                    .collect()
            })
            .collect()
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let n = self.len();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// 0/1 adjacency between part-0 rows and part-1 columns, in vertex order.
    pub fn biadjacency(&self) -> Vec<Vec<u8>> {
        let cols: Vec<usize> = bits(self.part_mask(1)).collect();
        bits(self.part_mask(0))
            .map(|r| cols.iter().map(|&c| self.has_edge(r, c) as u8).collect())
            .collect()
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> IncidenceGraph {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let parts = vertices.iter().map(|&v| self.parts[v]).collect();
        let mut g = IncidenceGraph { adj: vec![0; vertices.len()], parts, labels };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Iterator over the set bit positions of a mask, ascending.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

/// Heawood graph: the point/line incidence graph of the Fano plane.
pub fn heawood() -> IncidenceGraph {
    let labels = (0..14).map(|i| format!("h{i}")).collect();
    let parts = (0..14).map(|i| (i % 2) as u8).collect();
    let mut g = IncidenceGraph::new(labels, parts).expect("14 vertices");
    for i in 0..14 {
        g.add_edge(i, (i + 1) % 14);
        if i % 2 == 0 {
            g.add_edge(i, (i + 5) % 14);
        }
    }
    g
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub part_sizes: [usize; 2],
    pub degrees: Vec<usize>,
    pub girth: Option<usize>,
}

impl IncidenceGraph {
    pub fn summary(&self) -> GraphSummary {
        let mut degrees: Vec<usize> = (0..self.len()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        GraphSummary {
            vertices: self.len(),
            edges: self.edge_count(),
            part_sizes: [
                self.part_mask(0).count_ones() as usize,
                self.part_mask(1).count_ones() as usize,
            ],
            degrees,
            girth: self.girth(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heawood_invariants() {
        let h = heawood();
        assert_eq!(h.edge_count(), 21);
        assert!(h.is_regular(3));
        assert!(h.respects_parts());
        assert_eq!(h.girth(), Some(6));
        assert!(h.is_connected());
        assert_eq!(h.distance_matrix()[0].iter().max(), Some(&3));
    }

    #[test]
    fn cycle_girth() {
        let mut c = IncidenceGraph::unlabelled(5).unwrap();
        for i in 0..5 {
            c.add_edge(i, (i + 1) % 5);
        }
        assert_eq!(c.girth(), Some(5));
        let mut path = IncidenceGraph::unlabelled(3).unwrap();
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        assert_eq!(path.girth(), None);
        assert_eq!(path.induced(&[0, 2]).edge_count(), 0);
    }

    #[test]
    fn bit_iteration() {
        assert_eq!(bits(0b1010_0001).collect::<Vec<_>>(), vec![0, 5, 7]);
        assert_eq!(bits(1 << 63).collect::<Vec<_>>(), vec![63]);
    }
}

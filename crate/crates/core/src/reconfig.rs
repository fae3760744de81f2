//! `k`-dominating graphs and dominating-set reconfiguration.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::domination::{cover, enumerate_dominating_sets_capped, DEFAULT_MAX_SETS};
use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Largest dominating graph accepted by [`DominatingGraph::is_hamiltonian`].
pub const MAX_HAMILTONIAN: usize = 20;

/// Explicit `D_k(G)`.
///
/// Vertices are the dominating sets of `source` of cardinality at most `k`,
/// listed in canonical order; `i ~ j` iff the sets differ in exactly one vertex.
#[derive(Clone, Debug)]
pub struct DominatingGraph {
    source: Graph,
    k: usize,
    verts: Vec<VertexSet>,
    adj: Vec<Vec<u32>>,
}

/// Diameter of a possibly disconnected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Serialize)]
struct DominatingGraphJson {
    source_graph6: String,
    k: usize,
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
    vertex_sets: Vec<Vec<usize>>,
}

/// Builds `D_k(G)` under the default cap. `k` is clamped to `|G|`; below
/// `γ(G)` the result has no vertices.
pub fn build_dominating_graph(g: &Graph, k: usize) -> Result<DominatingGraph> {
    build_dominating_graph_capped(g, k, DEFAULT_MAX_SETS)
}

pub fn build_dominating_graph_capped(
    g: &Graph,
    k: usize,
    max_sets: usize,
) -> Result<DominatingGraph> {
    let k = k.min(g.n());
    let verts = enumerate_dominating_sets_capped(g, k, max_sets)?;
    let index: HashMap<u64, u32> = verts
        .iter()
        .enumerate()
        .map(|(i, s)| (s.bits(), i as u32))
        .collect();
    let adj = verts
        .iter()
        .map(|s| {
            let mut nbrs: Vec<u32> = (0..g.n())
                .filter_map(|v| index.get(&s.toggled(v).bits()).copied())
                .collect();
            nbrs.sort_unstable();
            nbrs
        })
        .collect();
    Ok(DominatingGraph {
        source: g.clone(),
        k,
        verts,
        adj,
    })
}

impl DominatingGraph {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    /// Effective cardinality cap (after clamping to `|G|`).
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_sets(&self) -> &[VertexSet] {
        &self.verts
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| {
                nb.iter()
                    .map(move |&j| (i, j as usize))
                    .filter(|&(i, j)| i < j)
            })
            .collect()
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.verts.binary_search(&s).ok()
    }

    /// `r`-regular for some `r`, or empty.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map(Vec::len)?;
        self.adj.iter().all(|nb| nb.len() == d).then_some(d)
    }

    /// Component id per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.verts.len()];
        let mut count = 0;
        for s in 0..self.verts.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w as usize] == usize::MAX {
                        comp[w as usize] = count;
                        stack.push(w as usize);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn num_components(&self) -> Result<usize> {
        self.require_nonempty()?;
        Ok(self.components().1)
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.num_components()? == 1)
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.verts.is_empty() {
            Err(Error::EmptyDominatingGraph)
        } else {
            Ok(())
        }
    }

    fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.verts.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Result<Diameter> {
        self.require_nonempty()?;
        let mut best = 0;
        for s in 0..self.verts.len() {
            for d in self.bfs_distances(s) {
                if d == usize::MAX {
                    return Ok(Diameter::Infinite);
                }
                best = best.max(d);
            }
        }
        Ok(Diameter::Finite(best))
    }

    /// Proper 2-coloring check by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.verts.len()];
        for s in 0..self.verts.len() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if color[w] == u8::MAX {
                        color[w] = color[u] ^ 1;
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every edge joins an even-cardinality set to an odd-cardinality set.
    pub fn parity_classes_are_proper(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(i, j)| self.verts[i].len() % 2 != self.verts[j].len() % 2)
    }

    /// Exact Hamiltonian-cycle test by subset dynamic programming.
    /// Graphs with fewer than three vertices have no Hamiltonian cycle.
    pub fn is_hamiltonian(&self) -> Result<bool> {
        let m = self.verts.len();
        if m > MAX_HAMILTONIAN {
            return Err(Error::TooLargeForExhaustive {
                n: m,
                max: MAX_HAMILTONIAN,
            });
        }
        if m < 3 {
            return Ok(false);
        }
        let nbr: Vec<u32> = self
            .adj
            .iter()
            .map(|nb| nb.iter().fold(0u32, |acc, &w| acc | 1 << w))
            .collect();
        // ends[mask]: vertices at which a path from 0 covering `mask` can end
        let mut ends = vec![0u32; 1 << m];
        ends[1] = 1;
        for mask in 1..1usize << m {
            if mask & 1 == 0 || ends[mask] == 0 {
                continue;
            }
            let mut e = ends[mask];
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut next = nbr[v] & !(mask as u32);
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
        Ok(ends[(1 << m) - 1] & nbr[0] != 0)
    }

    /// As a [`Graph`] with set-notation labels (1-indexed), when it fits in
    /// 64 vertices.
    pub fn to_graph(&self) -> Result<Graph> {
        let m = self.verts.len();
        if m == 0 {
            return Err(Error::EmptyDominatingGraph);
        }
        if m > MAX_VERTICES {
            return Err(Error::TooLarge {
                n: m,
                max: MAX_VERTICES,
            });
        }
        let adj = self
            .adj
            .iter()
            .map(|nb| nb.iter().fold(0u64, |acc, &w| acc | 1 << w))
            .collect();
        Graph::from_adjacency(adj)?.with_labels(self.verts.iter().map(|s| s.label(1)).collect())
    }

    /// DOT with 1-indexed set-notation labels.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"D_{}\" {{\n", self.k);
        for (i, s) in self.verts.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", s.label(1));
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = DominatingGraphJson {
            source_graph6: to_graph6(&self.source),
            k: self.k,
            num_vertices: self.verts.len(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
            vertex_sets: self.verts.iter().map(|s| s.to_vec()).collect(),
        };
        serde_json::to_string(&doc).expect("dominating graph serializes")
    }
}

/// Number of neighbors of `s` in `D_k(G)`, computed locally.
pub fn degree_of_set(g: &Graph, s: VertexSet, k: usize) -> Result<usize> {
    check_endpoint(g, s, k.min(g.n()), "set")?;
    let k = k.min(g.n());
    let closed = g.closed_masks();
    let full = g.vertex_mask();
    let additions = if s.len() < k { g.n() - s.len() } else { 0 };
    let deletions = s
        .iter()
        .filter(|&v| cover(&closed, s.without(v).bits()) == full)
        .count();
    Ok(additions + deletions)
}

fn check_endpoint(g: &Graph, s: VertexSet, k: usize, what: &str) -> Result<()> {
    if g.check_set(s).is_err() {
        return Err(Error::InvalidEndpoint(format!(
            "{what} {s} is not a subset of the vertex set"
        )));
    }
    if s.len() > k {
        return Err(Error::InvalidEndpoint(format!(
            "{what} {s} has cardinality {} > k = {k}",
            s.len()
        )));
    }
    if cover(&g.closed_masks(), s.bits()) != g.vertex_mask() {
        return Err(Error::InvalidEndpoint(format!(
            "{what} {s} does not dominate"
        )));
    }
    Ok(())
}

/// A dominating-set reconfiguration instance.
#[derive(Clone, Debug)]
pub struct DsrQuery<'a> {
    pub graph: &'a Graph,
    pub start: VertexSet,
    pub goal: VertexSet,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsrResult {
    pub reachable: bool,
    /// Shortest reconfiguration sequence from start to goal, if reachable.
    pub path: Option<Vec<VertexSet>>,
    /// Number of dominating sets dequeued by the search.
    pub explored: usize,
}

/// Breadth-first search over the implicit move graph under the default cap.
pub fn dsr_reachable(q: &DsrQuery<'_>) -> Result<DsrResult> {
    dsr_reachable_capped(q, DEFAULT_MAX_SETS)
}

/// As [`dsr_reachable`]; fails once more than `max_states` sets are visited.
pub fn dsr_reachable_capped(q: &DsrQuery<'_>, max_states: usize) -> Result<DsrResult> {
    let g = q.graph;
    let k = q.k.min(g.n());
    check_endpoint(g, q.start, k, "start")?;
    check_endpoint(g, q.goal, k, "goal")?;
    let closed = g.closed_masks();
    let full = g.vertex_mask();
    let mut parent: HashMap<u64, u64> = HashMap::from([(q.start.bits(), q.start.bits())]);
    let mut queue = VecDeque::from([q.start.bits()]);
    let mut explored = 0;
    while let Some(s) = queue.pop_front() {
        explored += 1;
        if s == q.goal.bits() {
            let mut path = vec![VertexSet::from_bits(s)];
            let mut cur = s;
            while cur != q.start.bits() {
                cur = parent[&cur];
                path.push(VertexSet::from_bits(cur));
            }
            path.reverse();
            return Ok(DsrResult {
                reachable: true,
                path: Some(path),
                explored,
            });
        }
        let size = s.count_ones() as usize;
        for v in 0..g.n() {
            let t = s ^ 1 << v;
            if t > s && size >= k {
                continue;
            }
            if parent.contains_key(&t) || cover(&closed, t) != full {
                continue;
            }
            if parent.len() >= max_states {
                return Err(Error::OutputCapExceeded { cap: max_states });
            }
            parent.insert(t, s);
            queue.push_back(t);
        }
    }
    Ok(DsrResult {
        reachable: false,
        path: None,
        explored,
    })
}

pub fn is_connected_dk(g: &Graph, k: usize) -> Result<bool> {
    build_dominating_graph(g, k)?.is_connected()
}

pub fn num_components_dk(g: &Graph, k: usize) -> Result<usize> {
    build_dominating_graph(g, k)?.num_components()
}

pub fn diameter_dk(g: &Graph, k: usize) -> Result<Diameter> {
    build_dominating_graph(g, k)?.diameter()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn small_builds() {
        let d = build_dominating_graph(&Graph::complete(3).unwrap(), 2).unwrap();
        assert_eq!(d.num_vertices(), 6);
        assert_eq!(d.num_edges(), 6);
        assert_eq!(d.regular_degree(), Some(2));
        let p = build_dominating_graph(&Graph::path(4).unwrap(), 3).unwrap();
        assert_eq!(p.num_vertices(), 8);
        assert_eq!(p.regular_degree(), Some(2));
        assert!(p.is_connected().unwrap());
    }

    #[test]
    fn below_gamma_is_empty() {
        let d = build_dominating_graph(&Graph::path(4).unwrap(), 1).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.is_connected(), Err(Error::EmptyDominatingGraph));
        assert_eq!(d.diameter(), Err(Error::EmptyDominatingGraph));
        assert!(matches!(d.to_graph(), Err(Error::EmptyDominatingGraph)));
    }

    #[test]
    fn k_is_clamped() {
        let d = build_dominating_graph(&Graph::complete(3).unwrap(), 10).unwrap();
        assert_eq!(d.k(), 3);
        assert_eq!(d.num_vertices(), 7);
    }

    #[test]
    fn star_connectivity() {
        let s = Graph::star(4).unwrap();
        assert!(is_connected_dk(&s, 2).unwrap());
        assert!(!is_connected_dk(&s, 3).unwrap());
        assert_eq!(num_components_dk(&s, 3).unwrap(), 2);
        assert_eq!(diameter_dk(&s, 3).unwrap(), Diameter::Infinite);
        assert_eq!(
            diameter_dk(&Graph::complete(3).unwrap(), 2).unwrap(),
            Diameter::Finite(3)
        );
    }

    #[test]
    fn dsr_examples() {
        let s = Graph::star(4).unwrap();
        let r = dsr_reachable(&DsrQuery {
            graph: &s,
            start: set(&[1, 2, 3]),
            goal: set(&[0]),
            k: 3,
        })
        .unwrap();
        assert!(!r.reachable);
        assert!(r.path.is_none());
        let k3 = Graph::complete(3).unwrap();
        let r = dsr_reachable(&DsrQuery {
            graph: &k3,
            start: set(&[0]),
            goal: set(&[1]),
            k: 2,
        })
        .unwrap();
        assert_eq!(r.path.unwrap(), vec![set(&[0]), set(&[0, 1]), set(&[1])]);
        let p4 = Graph::path(4).unwrap();
        let r = dsr_reachable(&DsrQuery {
            graph: &p4,
            start: set(&[1, 2]),
            goal: set(&[1, 2]),
            k: 2,
        })
        .unwrap();
        assert_eq!(r.path.unwrap(), vec![set(&[1, 2])]);
        assert_eq!(r.explored, 1);
    }

    #[test]
    fn dsr_rejects_bad_endpoints() {
        let p4 = Graph::path(4).unwrap();
        let q = |start, goal, k| DsrQuery {
            graph: &p4,
            start,
            goal,
            k,
        };
        assert!(matches!(
            dsr_reachable(&q(set(&[0, 1]), set(&[1, 2]), 3)),
            Err(Error::InvalidEndpoint(_))
        ));
        assert!(matches!(
            dsr_reachable(&q(set(&[0, 1, 2]), set(&[1, 2]), 2)),
            Err(Error::InvalidEndpoint(_))
        ));
        assert!(matches!(
            dsr_reachable(&q(set(&[1, 2]), set(&[7]), 3)),
            Err(Error::InvalidEndpoint(_))
        ));
    }

    #[test]
    fn dsr_cap() {
        let g = Graph::empty(1)
            .unwrap()
            .join(&Graph::empty(15).unwrap())
            .unwrap();
        let q = DsrQuery {
            graph: &g,
            start: set(&[0]),
            goal: VertexSet::full(16).without(0),
            k: 16,
        };
        assert!(matches!(
            dsr_reachable_capped(&q, 100),
            Err(Error::OutputCapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn local_degree() {
        assert_eq!(
            degree_of_set(&Graph::complete(3).unwrap(), set(&[0]), 2).unwrap(),
            2
        );
        assert_eq!(
            degree_of_set(&Graph::path(4).unwrap(), set(&[1, 2]), 3).unwrap(),
            2
        );
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(degree_of_set(&c5, VertexSet::full(5), 5).unwrap(), 5);
        assert!(matches!(
            degree_of_set(&c5, set(&[0]), 5),
            Err(Error::InvalidEndpoint(_))
        ));
        let d = build_dominating_graph(&c5, 4).unwrap();
        for (i, &s) in d.vertex_sets().iter().enumerate() {
            assert_eq!(degree_of_set(&c5, s, 4).unwrap(), d.degree(i));
        }
    }

    #[test]
    fn hamiltonicity() {
        let k3 = build_dominating_graph(&Graph::complete(3).unwrap(), 2).unwrap();
        assert!(k3.is_hamiltonian().unwrap());
        let p4 = Graph::path(4).unwrap();
        assert!(build_dominating_graph(&p4, 3)
            .unwrap()
            .is_hamiltonian()
            .unwrap());
        assert!(!build_dominating_graph(&p4, 4)
            .unwrap()
            .is_hamiltonian()
            .unwrap());
        let big = build_dominating_graph(&Graph::complete(5).unwrap(), 5).unwrap();
        assert!(matches!(
            big.is_hamiltonian(),
            Err(Error::TooLargeForExhaustive { .. })
        ));
        assert!(!build_dominating_graph(&Graph::complete(1).unwrap(), 1)
            .unwrap()
            .is_hamiltonian()
            .unwrap());
    }

    #[test]
    fn outputs() {
        let d = build_dominating_graph(&Graph::complete(2).unwrap(), 2).unwrap();
        assert_eq!(
            d.to_json(),
            r#"{"source_graph6":"A_","k":2,"num_vertices":3,"edges":[[0,2],[1,2]],"vertex_sets":[[0],[1],[0,1]]}"#
        );
        assert_eq!(
            d.to_dot(),
            "graph \"D_2\" {\n  0 [label=\"{1}\"];\n  1 [label=\"{2}\"];\n  2 [label=\"{1,2}\"];\n  0 -- 2;\n  1 -- 2;\n}\n"
        );
        let g = d.to_graph().unwrap();
        assert_eq!(g.labels().unwrap()[2], "{1,2}");
        assert_eq!(g, Graph::path(3).unwrap().relabel(&[0, 2, 1]).unwrap());
    }
}

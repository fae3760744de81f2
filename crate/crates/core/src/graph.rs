//! Simple graphs on at most 64 vertices with bitmask adjacency.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard cap on graph order; every vertex subset fits in one `u64`.
pub const MAX_VERTICES: usize = 64;

/// Largest order accepted by [`Graph::matching_number`].
pub const MAX_EXACT_MATCHING: usize = 16;

/// Mask with bits `0..n` set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of vertices stored as a bitmask.
///
/// Ordering is the canonical dominating-set order used throughout the crate:
/// first by cardinality, then by numeric mask value.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// The full vertex set of a graph on `n` vertices.
    #[inline]
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
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
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn toggled(self, v: usize) -> Self {
        VertexSet(self.0 ^ 1u64 << v)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Set-notation display with vertices shifted by `offset` (use 1 for
    /// 1-indexed labels such as `{1,3}`).
    pub fn label(self, offset: usize) -> String {
        let parts: Vec<String> = self.iter().map(|v| (v + offset).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{}", self.label(0))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label(0))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().fold(0u64, |acc, v| acc | 1u64 << v))
    }
}

/// Iterator over set bits of a mask, lowest first.
#[derive(Clone, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

/// Standard graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Star,
    Empty,
    /// `n` is the dimension; the graph has `2^n` vertices.
    Hypercube,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "path" | "p" => Ok(FamilyKind::Path),
            "cycle" | "c" => Ok(FamilyKind::Cycle),
            "complete" | "k" => Ok(FamilyKind::Complete),
            "star" => Ok(FamilyKind::Star),
            "empty" | "edgeless" => Ok(FamilyKind::Empty),
            "hypercube" | "cube" | "q" => Ok(FamilyKind::Hypercube),
            other => Err(Error::MalformedFamilySpec(format!(
                "unknown family `{other}`"
            ))),
        }
    }
}

/// Immutable simple graph on `1..=64` vertices.
///
/// `adj[v]` is the open neighborhood of `v`. Labels are display-only and do
/// not take part in equality.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else if n > MAX_VERTICES {
        Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            adj: vec![0; n],
            labels: None,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from open-neighborhood masks, validating symmetry,
    /// irreflexivity and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let full = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in BitIter(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { adj, labels: None })
    }

    /// Attaches per-vertex display labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidArgument(format!(
                "expected {} labels, got {}",
                self.n(),
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Constructs a member of a standard family.
    ///
    /// `cycle(1)` is `K_1` and `cycle(2)` is `K_2`; `star(n)` has its center
    /// at vertex 0; `hypercube(d)` has `2^d` vertices.
    pub fn family(kind: FamilyKind, n: usize) -> Result<Self> {
        match kind {
            FamilyKind::Path => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edge_list(n, &edges)
            }
            FamilyKind::Cycle => {
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                if n >= 3 {
                    edges.push((n - 1, 0));
                }
                Graph::from_edge_list(n, &edges)
            }
            FamilyKind::Complete => {
                check_order(n)?;
                let full = full_mask(n);
                Ok(Graph {
                    adj: (0..n).map(|v| full & !(1u64 << v)).collect(),
                    labels: None,
                })
            }
            FamilyKind::Star => {
                let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
                Graph::from_edge_list(n, &edges)
            }
            FamilyKind::Empty => Graph::empty(n),
            FamilyKind::Hypercube => {
                if n > 6 {
                    return Err(Error::TooLarge {
                        n: 1usize.checked_shl(n as u32).unwrap_or(usize::MAX),
                        max: MAX_VERTICES,
                    });
                }
                let order = 1usize << n;
                let adj = (0..order)
                    .map(|v| (0..n).fold(0u64, |acc, b| acc | 1u64 << (v ^ (1 << b))))
                    .collect();
                Ok(Graph { adj, labels: None })
            }
        }
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::family(FamilyKind::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Graph::family(FamilyKind::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::family(FamilyKind::Complete, n)
    }

    pub fn star(n: usize) -> Result<Self> {
        Graph::family(FamilyKind::Star, n)
    }

    pub fn hypercube(dim: usize) -> Result<Self> {
        Graph::family(FamilyKind::Hypercube, dim)
    }

    /// Join `G + H`: disjoint union plus every cross edge. `h` is shifted by `|g|`.
    pub fn join(&self, h: &Graph) -> Result<Graph> {
        let (a, b) = (self.n(), h.n());
        check_order(a + b)?;
        let g_mask = full_mask(a);
        let h_mask = full_mask(b) << a;
        let mut adj = Vec::with_capacity(a + b);
        adj.extend(self.adj.iter().map(|&row| row | h_mask));
        adj.extend(h.adj.iter().map(|&row| row << a | g_mask));
        Ok(Graph { adj, labels: None })
    }

    /// Disjoint union `G ∪ H`. `h` is shifted by `|g|`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let (a, b) = (self.n(), h.n());
        check_order(a + b)?;
        let mut adj = Vec::with_capacity(a + b);
        adj.extend_from_slice(&self.adj);
        adj.extend(h.adj.iter().map(|&row| row << a));
        Ok(Graph { adj, labels: None })
    }

    /// Corona `G ∘ H`. Vertex `i` of `g` keeps id `i`; copy `i` of `h` occupies
    /// ids `|g| + i·|h| ..` and is fully joined to vertex `i`.
    pub fn corona(&self, h: &Graph) -> Result<Graph> {
        let (a, b) = (self.n(), h.n());
        let total = a.checked_mul(b + 1).ok_or(Error::TooLarge {
            n: usize::MAX,
            max: MAX_VERTICES,
        })?;
        check_order(total)?;
        let mut adj = vec![0u64; total];
        adj[..a].copy_from_slice(&self.adj);
        for i in 0..a {
            let base = a + i * b;
            let copy_mask = full_mask(b) << base;
            adj[i] |= copy_mask;
            for (j, &row) in h.adj.iter().enumerate() {
                adj[base + j] = row << base | 1u64 << i;
            }
        }
        Ok(Graph { adj, labels: None })
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            seen |= 1 << p;
        }
        if seen != full_mask(n) {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let mut adj = vec![0u64; n];
        for v in 0..n {
            adj[perm[v]] = BitIter(self.adj[v]).fold(0u64, |acc, u| acc | 1u64 << perm[u]);
        }
        Ok(Graph { adj, labels: None })
    }

    /// Subgraph induced on `keep`, with vertices renumbered in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let verts = keep.to_vec();
        let mut index = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            if v >= self.n() {
                return Err(Error::SetOutOfRange {
                    bits: keep.bits(),
                    n: self.n(),
                });
            }
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                BitIter(self.adj[v] & keep.bits()).fold(0u64, |acc, u| acc | 1u64 << index[u])
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Open-neighborhood masks.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < 64 && self.adj[u] >> v & 1 == 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.bits() & !self.vertex_mask() != 0 {
            Err(Error::SetOutOfRange {
                bits: s.bits(),
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v]))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v] | 1 << v))
    }

    /// Closed-neighborhood masks, the domination primitive.
    pub fn closed_masks(&self) -> Vec<u64> {
        self.adj
            .iter()
            .enumerate()
            .map(|(v, &row)| row | 1 << v)
            .collect()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, &row) in self.adj.iter().enumerate() {
            out.extend(BitIter(row >> u >> 1).map(|d| (u, u + 1 + d)));
        }
        out
    }

    pub fn triangle_count(&self) -> usize {
        let mut total = 0;
        for (u, v) in self.edges() {
            let above = !full_mask(v + 1);
            total += (self.adj[u] & self.adj[v] & above).count_ones() as usize;
        }
        total
    }

    /// Vertex mask of the component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let next = BitIter(frontier).fold(0u64, |acc, u| acc | self.adj[u]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    pub fn num_components(&self) -> usize {
        let mut remaining = self.vertex_mask();
        let mut count = 0;
        while remaining != 0 {
            remaining &= !self.component_of(remaining.trailing_zeros() as usize);
            count += 1;
        }
        count
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in BitIter(self.adj[u]) {
                    if color[w] == u8::MAX {
                        color[w] = color[u] ^ 1;
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Chordality by repeated elimination of simplicial vertices.
    pub fn is_chordal(&self) -> bool {
        let mut alive = self.vertex_mask();
        while alive != 0 {
            let simplicial = BitIter(alive).find(|&v| {
                let nb = self.adj[v] & alive;
                BitIter(nb).all(|u| nb & !(self.adj[u] | 1 << u) == 0)
            });
            match simplicial {
                Some(v) => alive &= !(1 << v),
                None => return false,
            }
        }
        true
    }

    /// Exact matching number via a memoized subset recursion.
    pub fn matching_number(&self) -> Result<usize> {
        let n = self.n();
        if n > MAX_EXACT_MATCHING {
            return Err(Error::TooLargeForExactMatching {
                n,
                max: MAX_EXACT_MATCHING,
            });
        }
        let mut memo = vec![u8::MAX; 1 << n];
        Ok(self.matching_in(full_mask(n), &mut memo) as usize)
    }

    fn matching_in(&self, mask: u64, memo: &mut [u8]) -> u8 {
        if mask == 0 {
            return 0;
        }
        if memo[mask as usize] != u8::MAX {
            return memo[mask as usize];
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = self.matching_in(rest, memo);
        for u in BitIter(self.adj[v] & rest) {
            best = best.max(1 + self.matching_in(rest & !(1 << u), memo));
        }
        memo[mask as usize] = best;
        best
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &row)| !row & full & !(1 << v))
                .collect(),
            labels: None,
        }
    }
}

//! Canonical labeling and isomorphism testing for graphs up to 64 vertices.
//!
//! The search individualizes vertices of an ordered partition, refines to an
//! equitable partition after each step, and keeps the leaf whose relabeled
//! adjacency rows are lexicographically largest. Automorphisms discovered at
//! equal leaves prune sibling branches that lie in the same orbit of the
//! subgroup fixing the current individualization prefix.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, MAX_VERTICES};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL: usize = MAX_VERTICES;

/// Cap on stored automorphism generators.
const MAX_STORED_AUTOMORPHISMS: usize = 256;

/// Relabeling-invariant certificate: the adjacency rows of the canonical
/// relabeling. Equal certificates ⇔ isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The canonical representative of the isomorphism class.
    pub fn graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.clone()).expect("certificate rows form a valid graph")
    }

    /// Hex rendering: two hex digits of order, then the upper triangle packed
    /// row-major, most significant bit first.
    pub fn to_hex(&self) -> String {
        let mut bytes = Vec::new();
        let mut acc = 0u8;
        let mut filled = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                acc = acc << 1 | (self.rows[i] >> j & 1) as u8;
                filled += 1;
                if filled == 8 {
                    bytes.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push(acc << (8 - filled));
        }
        let mut out = format!("{:02x}", self.n);
        for b in bytes {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Ordered partition of the vertex set; each cell is a bitmask.
type Partition = Vec<u64>;

/// Splits cells by neighbor counts into the splitter sets until the
/// partition is equitable. Only label-invariant information drives the
/// splits, so the result commutes with relabeling.
fn refine(adj: &[u64], cells: &mut Partition, splitters: Vec<u64>) {
    let mut queue: VecDeque<u64> = splitters.into();
    let mut groups: Vec<(u32, u64)> = Vec::new();
    while let Some(splitter) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() == 1 {
                i += 1;
                continue;
            }
            groups.clear();
            for v in BitIter(cell) {
                let c = (adj[v] & splitter).count_ones();
                match groups.iter_mut().find(|(k, _)| *k == c) {
                    Some((_, m)) => *m |= 1 << v,
                    None => groups.push((c, 1 << v)),
                }
            }
            if groups.len() == 1 {
                i += 1;
                continue;
            }
            groups.sort_unstable_by_key(|&(k, _)| k);
            let len = groups.len();
            cells.splice(i..=i, groups.iter().map(|&(_, m)| m));
            queue.extend(groups.iter().map(|&(_, m)| m));
            i += len;
        }
    }
}

/// Non-singleton cell to branch on: the first smallest one.
fn target_cell(cells: &Partition) -> Option<usize> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.count_ones() > 1)
        .min_by_key(|(i, c)| (c.count_ones(), *i))
        .map(|(i, _)| i)
}

fn individualize(cells: &Partition, ti: usize, v: usize) -> Partition {
    let mut child = cells.clone();
    let cell = cells[ti];
    child.splice(ti..=ti, [1u64 << v, cell & !(1 << v)]);
    child
}

/// A leaf of the search tree: its certificate and vertex order.
struct Leaf {
    cert: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn make_leaf(&self, cells: &Partition) -> Leaf {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cert = order
            .iter()
            .map(|&v| BitIter(self.adj[v]).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        Leaf { cert, order }
    }

    /// Records the automorphism taking leaf `from` to leaf `to` (equal certificates).
    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        if self.automorphisms.len() >= MAX_STORED_AUTOMORPHISMS {
            return;
        }
        let mut aut = vec![0usize; self.n];
        for (i, &v) in from.iter().enumerate() {
            aut[v] = to[i];
        }
        if aut.iter().enumerate().any(|(v, &w)| v != w) {
            self.automorphisms.push(aut);
        }
    }

    fn offer(&mut self, leaf: &Leaf) {
        match &self.best {
            Some(best) if leaf.cert < best.cert => {}
            Some(best) if leaf.cert == best.cert => {
                let from = best.order.clone();
                self.record_automorphism(&from, &leaf.order);
            }
            _ => {
                self.best = Some(Leaf {
                    cert: leaf.cert.clone(),
                    order: leaf.order.clone(),
                })
            }
        }
    }

    /// `true` if `v` shares an orbit with some vertex in `explored` under the
    /// known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: u64, v: usize) -> bool {
        if explored == 0 {
            return false;
        }
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut orbit = 1u64 << v;
        loop {
            let mut grown = orbit;
            for a in &gens {
                for u in BitIter(orbit) {
                    grown |= 1 << a[u];
                }
            }
            if grown & explored != 0 {
                return true;
            }
            if grown == orbit {
                return false;
            }
            orbit = grown;
        }
    }

    /// Leftmost leaf below an already refined partition.
    fn probe(&self, mut cells: Partition) -> Leaf {
        while let Some(ti) = target_cell(&cells) {
            let v = cells[ti].trailing_zeros() as usize;
            cells = individualize(&cells, ti, v);
            refine(self.adj, &mut cells, vec![1u64 << v]);
        }
        self.make_leaf(&cells)
    }

    /// Explores the subtree below a refined partition and returns its
    /// leftmost leaf.
    ///
    /// Two leaves below the same node agree on the individualized prefix, so
    /// the automorphism between them fixes it and maps the child containing
    /// one onto the child containing the other. A sibling whose leftmost leaf
    /// matches an explored child's leftmost leaf is therefore skipped whole.
    fn descend(&mut self, cells: Partition, prefix: &mut Vec<usize>) -> Leaf {
        let Some(ti) = target_cell(&cells) else {
            let leaf = self.make_leaf(&cells);
            self.offer(&leaf);
            return leaf;
        };
        let cell = cells[ti];
        let mut explored = 0u64;
        let mut firsts: Vec<Leaf> = Vec::new();
        for v in BitIter(cell) {
            if self.same_orbit(prefix, explored, v) {
                continue;
            }
            let mut child = individualize(&cells, ti, v);
            refine(self.adj, &mut child, vec![1u64 << v]);
            if !firsts.is_empty() {
                let probe = self.probe(child.clone());
                if let Some(twin) = firsts.iter().find(|f| f.cert == probe.cert) {
                    let from = twin.order.clone();
                    self.record_automorphism(&from, &probe.order);
                    explored |= 1 << v;
                    continue;
                }
            }
            prefix.push(v);
            let first = self.descend(child, prefix);
            prefix.pop();
            firsts.push(first);
            explored |= 1 << v;
        }
        firsts.swap_remove(0)
    }
}

/// Canonical certificate together with the canonical labeling: `labeling[v]`
/// is the position of vertex `v` in the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL {
        return Err(Error::TooLargeForCanonical {
            n,
            max: MAX_CANONICAL,
        });
    }
    let mut search = Search {
        adj: g.adjacency(),
        n,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut root = vec![g.vertex_mask()];
    refine(g.adjacency(), &mut root, vec![g.vertex_mask()]);
    search.descend(root, &mut Vec::new());
    let Leaf { cert: rows, order } = search.best.expect("search always reaches a leaf");
    let mut labeling = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        labeling[v] = i;
    }
    Ok((CanonicalForm { n, rows }, labeling))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.0)
}

/// Cheap invariants compared before any search.
fn screen(g: &Graph) -> (usize, usize, Vec<usize>, usize) {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    (g.n(), g.edge_count(), degrees, g.triangle_count())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > MAX_CANONICAL {
            return Err(Error::TooLargeForCanonical {
                n: x.n(),
                max: MAX_CANONICAL,
            });
        }
    }
    if screen(g) != screen(h) {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeling_invariance_simple() {
        let p = Graph::path(4).unwrap();
        let q = p.relabel(&[2, 0, 3, 1]).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
    }

    #[test]
    fn distinct_classes() {
        let c6 = Graph::cycle(6).unwrap();
        let p6 = Graph::path(6).unwrap();
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&p6).unwrap());
        assert!(!is_isomorphic(&Graph::star(4).unwrap(), &Graph::path(4).unwrap()).unwrap());
        // same degree sequence and no triangles, different structure
        let two_triangles_free = Graph::cycle(6).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let c3 = Graph::cycle(3).unwrap();
        assert!(!is_isomorphic(&two_triangles_free, &c3.disjoint_union(&c3).unwrap()).unwrap());
        let c4_c4 = Graph::cycle(4)
            .unwrap()
            .disjoint_union(&Graph::cycle(4).unwrap())
            .unwrap();
        assert!(!is_isomorphic(&Graph::cycle(8).unwrap(), &c4_c4).unwrap());
        assert!(is_isomorphic(&k2, &Graph::path(2).unwrap()).unwrap());
    }

    #[test]
    fn canonical_graph_is_isomorphic_representative() {
        let g =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (2, 3)]).unwrap();
        let (cf, lab) = canonical_labeling(&g).unwrap();
        assert_eq!(g.relabel(&lab).unwrap(), cf.graph());
        assert_eq!(canonical_form(&cf.graph()).unwrap(), cf);
    }

    #[test]
    fn deterministic_hex() {
        let a = canonical_form(&Graph::cycle(5).unwrap()).unwrap().to_hex();
        let b = canonical_form(&Graph::cycle(5).unwrap().relabel(&[4, 2, 0, 3, 1]).unwrap())
            .unwrap()
            .to_hex();
        assert_eq!(a, b);
        assert!(a.starts_with("05"));
        assert_eq!(
            canonical_form(&Graph::complete(1).unwrap())
                .unwrap()
                .to_hex(),
            "01"
        );
    }

    #[test]
    fn symmetric_graphs_finish() {
        for g in [
            Graph::empty(12).unwrap(),
            Graph::complete(12).unwrap(),
            Graph::hypercube(5).unwrap(),
            Graph::hypercube(6).unwrap(),
            Graph::cycle(40).unwrap(),
            Graph::empty(64).unwrap(),
        ] {
            let cf = canonical_form(&g).unwrap();
            assert_eq!(cf.order(), g.n());
        }
    }
}

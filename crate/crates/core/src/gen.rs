//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Classes of order `n` are obtained by attaching a new vertex, with every
//! possible neighborhood, to each class representative of order `n − 1`, then
//! deduplicating by canonical certificate. Every graph of order `n` arises
//! this way (delete any vertex). Representatives are canonical relabelings
//! and are emitted in certificate order.

use std::collections::{BTreeMap, HashMap};
use std::io::{self, Write};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};

/// Largest order the generator accepts.
pub const MAX_CENSUS_ORDER: usize = 8;

/// Which graphs of a given order to emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphClassFilter {
    pub order: usize,
    pub connected: bool,
    pub min_degree_at_least: usize,
}

impl GraphClassFilter {
    pub fn all(order: usize) -> Self {
        GraphClassFilter {
            order,
            connected: false,
            min_degree_at_least: 0,
        }
    }

    pub fn connected(order: usize) -> Self {
        GraphClassFilter {
            connected: true,
            ..Self::all(order)
        }
    }

    /// Graphs with `δ ≥ 1`.
    pub fn isolate_free(order: usize) -> Self {
        GraphClassFilter {
            min_degree_at_least: 1,
            ..Self::all(order)
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        g.n() == self.order
            && (!self.connected || g.is_connected())
            && g.min_degree() >= self.min_degree_at_least
    }
}

type ClassList = Arc<Vec<(CanonicalForm, Graph)>>;

fn cache() -> &'static Mutex<HashMap<usize, ClassList>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, ClassList>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All isomorphism classes of order `n`, sorted by certificate.
fn classes(n: usize) -> Result<ClassList> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_CENSUS_ORDER {
        return Err(Error::TooLargeForCensus {
            n,
            max: MAX_CENSUS_ORDER,
        });
    }
    if let Some(hit) = cache().lock().expect("generator cache poisoned").get(&n) {
        return Ok(hit.clone());
    }
    let list: Vec<(CanonicalForm, Graph)> = if n == 1 {
        let k1 = Graph::empty(1)?;
        vec![(canonical_form(&k1)?, k1)]
    } else {
        let smaller = classes(n - 1)?;
        let extended: Vec<Vec<CanonicalForm>> = smaller
            .par_iter()
            .map(|(_, base)| {
                (0..1u64 << (n - 1))
                    .map(|nbrs| {
                        let mut adj = base.adjacency().to_vec();
                        for (v, row) in adj.iter_mut().enumerate() {
                            *row |= (nbrs >> v & 1) << (n - 1);
                        }
                        adj.push(nbrs);
                        let g = Graph::from_adjacency(adj).expect("extension stays simple");
                        canonical_form(&g).expect("order within canonical range")
                    })
                    .collect()
            })
            .collect();
        let unique: BTreeMap<CanonicalForm, ()> =
            extended.into_iter().flatten().map(|cf| (cf, ())).collect();
        unique
            .into_keys()
            .map(|cf| {
                let g = cf.graph();
                (cf, g)
            })
            .collect()
    };
    let list = Arc::new(list);
    cache()
        .lock()
        .expect("generator cache poisoned")
        .insert(n, list.clone());
    Ok(list)
}

/// Streaming view over the class representatives accepted by a filter.
pub struct GraphStream {
    classes: ClassList,
    filter: GraphClassFilter,
    next: usize,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.classes.len() {
            let (_, g) = &self.classes[self.next];
            self.next += 1;
            if self.filter.accepts(g) {
                return Some(g.clone());
            }
        }
        None
    }
}

/// One representative per isomorphism class of order `filter.order`
/// satisfying the filter, in certificate order.
pub fn generate_graphs(filter: GraphClassFilter) -> Result<GraphStream> {
    Ok(GraphStream {
        classes: classes(filter.order)?,
        filter,
        next: 0,
    })
}

/// Representatives of every order in `1..=n_max`, concatenated by order.
pub fn graphs_up_to(
    n_max: usize,
    filter: impl Fn(usize) -> GraphClassFilter,
) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(generate_graphs(filter(n))?);
    }
    Ok(out)
}

/// Writes graphs as newline-delimited graph6.
pub fn write_graph6_lines<W: Write>(
    mut out: W,
    graphs: impl IntoIterator<Item = Graph>,
) -> io::Result<usize> {
    let mut count = 0;
    for g in graphs {
        writeln!(out, "{}", to_graph6(&g))?;
        count += 1;
    }
    Ok(count)
}

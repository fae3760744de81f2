use std::collections::VecDeque;

use domreconf::domination::{domination_number, gamma_sets, is_dominating};
use domreconf::gen::{graphs_up_to, GraphClassFilter};
use domreconf::iso::is_isomorphic;
use domreconf::reconfig::*;
use domreconf::{Error, Graph, VertexSet};

fn explicit_sets(g: &Graph, k: usize) -> Vec<u64> {
    let mut sets: Vec<u64> = (0..1u64 << g.n())
        .filter(|&s| {
            s.count_ones() as usize <= k && is_dominating(g, VertexSet::from_bits(s)).unwrap()
        })
        .collect();
    sets.sort_by_key(|&s| (s.count_ones(), s));
    sets
}

fn bfs_distances(sets: &[u64], from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; sets.len()];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(i) = queue.pop_front() {
        for j in 0..sets.len() {
            if dist[j].is_none() && (sets[i] ^ sets[j]).count_ones() == 1 {
                dist[j] = Some(dist[i].unwrap() + 1);
                queue.push_back(j);
            }
        }
    }
    dist
}

#[test]
fn dominating_graphs_match_explicit_construction() {
    for g in graphs_up_to(5, GraphClassFilter::all).unwrap() {
        for k in 0..=g.n() + 1 {
            let d = build_dominating_graph(&g, k).unwrap();
            let sets = explicit_sets(&g, k);
            let got: Vec<u64> = d.vertex_sets().iter().map(|s| s.bits()).collect();
            assert_eq!(got, sets);
            let mut edges = Vec::new();
            for i in 0..sets.len() {
                for j in i + 1..sets.len() {
                    if (sets[i] ^ sets[j]).count_ones() == 1 {
                        edges.push((i, j));
                    }
                }
            }
            assert_eq!(d.edges(), edges);
            if !sets.is_empty() {
                let finite: Vec<usize> = (0..sets.len())
                    .flat_map(|i| bfs_distances(&sets, i))
                    .map(|d| d.unwrap_or(usize::MAX))
                    .collect();
                let want = match finite.iter().max() {
                    Some(&usize::MAX) => Diameter::Infinite,
                    Some(&m) => Diameter::Finite(m),
                    None => unreachable!(),
                };
                assert_eq!(d.diameter().unwrap(), want);
            }
        }
    }
}

#[test]
fn vertex_sets_grow_with_k() {
    for g in graphs_up_to(5, GraphClassFilter::connected).unwrap() {
        for k in 1..g.n() {
            let small = build_dominating_graph(&g, k).unwrap();
            let big = build_dominating_graph(&g, k + 1).unwrap();
            assert!(small
                .vertex_sets()
                .iter()
                .all(|&s| big.index_of(s).is_some()));
            assert!(small.num_edges() <= big.num_edges());
        }
    }
}

#[test]
fn complete_graphs_give_punctured_cubes() {
    for n in 2..=5 {
        let d = build_dominating_graph(&Graph::complete(n).unwrap(), n)
            .unwrap()
            .to_graph()
            .unwrap();
        assert_eq!(d.n(), (1 << n) - 1);
        let cube = Graph::hypercube(n).unwrap();
        let punctured = cube
            .induced(VertexSet::from_bits(cube.vertex_mask() & !1))
            .unwrap();
        assert!(is_isomorphic(&d, &punctured).unwrap());
    }
}

#[test]
fn dsr_paths_are_shortest() {
    for g in graphs_up_to(4, GraphClassFilter::all).unwrap() {
        for k in domination_number(&g)..=g.n() {
            let sets = explicit_sets(&g, k);
            for (i, &s) in sets.iter().enumerate() {
                let dist = bfs_distances(&sets, i);
                for (j, &t) in sets.iter().enumerate() {
                    let res = dsr_reachable(&DsrQuery {
                        graph: &g,
                        start: VertexSet::from_bits(s),
                        goal: VertexSet::from_bits(t),
                        k,
                    })
                    .unwrap();
                    assert_eq!(res.reachable, dist[j].is_some());
                    if let Some(path) = res.path {
                        assert_eq!(path.len() - 1, dist[j].unwrap());
                        for w in path.windows(2) {
                            assert_eq!(w[0].symmetric_difference(w[1]).len(), 1);
                            assert!(w[1].len() <= k && is_dominating(&g, w[1]).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn dsr_rejects_bad_endpoints() {
    let g = Graph::path(3).unwrap();
    let q = |start, goal, k| DsrQuery {
        graph: &g,
        start: VertexSet::from_bits(start),
        goal: VertexSet::from_bits(goal),
        k,
    };
    assert!(matches!(
        dsr_reachable(&q(0b001, 0b010, 3)),
        Err(Error::InvalidEndpoint(_))
    ));
    assert!(matches!(
        dsr_reachable(&q(0b111, 0b010, 2)),
        Err(Error::InvalidEndpoint(_))
    ));
    let star = Graph::star(4).unwrap();
    let res = dsr_reachable(&DsrQuery {
        graph: &star,
        start: VertexSet::from_iter([1, 2, 3]),
        goal: VertexSet::singleton(0),
        k: 3,
    })
    .unwrap();
    assert!(!res.reachable && res.path.is_none());
}

#[test]
fn gamma_sets_have_the_predicted_degree() {
    for g in graphs_up_to(5, GraphClassFilter::connected).unwrap() {
        let gamma = domination_number(&g);
        let k = (gamma + 1).min(g.n());
        let d = build_dominating_graph(&g, k).unwrap();
        for s in gamma_sets(&g) {
            assert_eq!(d.degree(d.index_of(s).unwrap()), g.n() - gamma);
            assert_eq!(degree_of_set(&g, s, k).unwrap(), g.n() - gamma);
        }
    }
}

fn brute_hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut perm: Vec<usize> = (1..n).collect();
    fn rec(g: &Graph, path: &mut Vec<usize>, rest: &mut Vec<usize>) -> bool {
        if rest.is_empty() {
            return g.has_edge(*path.last().unwrap(), path[0]);
        }
        for i in 0..rest.len() {
            let v = rest[i];
            if g.has_edge(*path.last().unwrap(), v) {
                rest.remove(i);
                path.push(v);
                if rec(g, path, rest) {
                    return true;
                }
                path.pop();
                rest.insert(i, v);
            }
        }
        false
    }
    rec(g, &mut vec![0], &mut perm)
}

#[test]
fn hamiltonicity_matches_backtracking() {
    for g in graphs_up_to(4, GraphClassFilter::all).unwrap() {
        for k in domination_number(&g)..=g.n() {
            let d = build_dominating_graph(&g, k).unwrap();
            let explicit = d.to_graph().unwrap();
            assert_eq!(d.is_hamiltonian().unwrap(), brute_hamiltonian(&explicit));
        }
    }
    let big = build_dominating_graph(&Graph::complete(5).unwrap(), 5).unwrap();
    assert!(matches!(
        big.is_hamiltonian(),
        Err(Error::TooLargeForExhaustive { .. })
    ));
}

#[test]
fn connectivity_of_star_dominating_graphs() {
    for n in 4..=8 {
        let star = Graph::star(n).unwrap();
        assert!(!is_connected_dk(&star, n - 1).unwrap());
        assert_eq!(num_components_dk(&star, n - 1).unwrap(), 2);
        for k in 1..=n - 2 {
            assert!(is_connected_dk(&star, k).unwrap(), "n={n} k={k}");
        }
        assert!(is_connected_dk(&star, n).unwrap());
    }
    assert!(matches!(
        is_connected_dk(&Graph::path(4).unwrap(), 1),
        Err(Error::EmptyDominatingGraph)
    ));
}

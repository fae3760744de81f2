"""Smoke test for the domreconf extension module.

Build first, e.g. `maturin develop -m crates/python/Cargo.toml`, then run
`python python/smoke_test.py`.
"""

import json

import domreconf as dr

k3 = dr.Graph.complete(3)
assert k3.n == 3 and len(k3.edges()) == 3
assert dr.domination_polynomial(dr.Graph.cycle(3)) == [0, 3, 3, 1]
assert dr.count_dominating_sets(dr.Graph.cycle(3)) == 7
assert dr.cycle_dominating_count(200) > 2**64

d = dr.dominating_graph(k3, 2)
assert d.num_vertices() == 6 and d.num_edges() == 6
assert dr.is_isomorphic(d.to_graph(), dr.Graph.cycle(6))
assert dr.is_isomorphic(dr.dominating_graph(dr.Graph.path(4), 3).to_graph(), dr.Graph.cycle(8))
assert d.diameter() == 3 and d.is_bipartite()

assert dr.dsr(k3, [0], [1], 2) == [[0], [0, 1], [1]]
assert dr.dsr(dr.Graph.star(4), [1, 2, 3], [0], 3) is None

p4 = dr.Graph.from_graph6("Ch")
assert p4 == dr.Graph.path(4)
assert dr.canonical_form(p4) == dr.canonical_form(p4.relabel([3, 1, 0, 2]))
assert len(dr.generate_graphs(5, connected=True)) == 21

report = json.loads(dr.run_census("regular", r=2))
assert report["verdict"] == "verified"

try:
    dr.Graph.from_graph6("B")
except dr.DomreconfError as e:
    assert "graph6" in str(e)
else:
    raise AssertionError("malformed graph6 accepted")

print("smoke test passed")

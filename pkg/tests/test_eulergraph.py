from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclesmith.eulergraph import (
    MultiDigraph,
    NotEulerianError,
    arborescence_count,
    bareiss_det,
    best_count,
    brute_circuits,
    degrees,
    hierholzer,
    is_balanced,
    is_circuit,
    is_strongly_connected,
    is_weakly_connected,
    laplacian,
)
from cyclesmith.posetcycle import build_arc_digraph
from oracles import arborescences

# printed 7x7 Laplacian for the size-4 arc digraph
REFERENCE_L4 = [
    [3, -1, -2, 0, 0, 0, 0],
    [0, 5, 0, -1, -1, -2, -1],
    [0, 0, 6, -1, -2, -2, -1],
    [-1, -2, -2, 5, 0, 0, 0],
    [-2, -2, -2, 0, 6, 0, 0],
    [0, 0, 0, -2, -2, 6, -2],
    [0, 0, 0, -1, -1, -2, 4],
]


def graph(n, arcs):
    g = MultiDigraph(list(range(n)))
    for t, h in arcs:
        g.add_edge(t, h)
    return g


def single_loop():
    return graph(1, [(0, 0)])


def test_degrees():
    assert sorted(o for _, o in degrees(build_arc_digraph(3).graph).values()) == [3, 4]
    assert sorted(o for _, o in degrees(build_arc_digraph(4).graph).values()) == [4, 5, 5, 6, 6, 6, 8]
    assert degrees(MultiDigraph()) == {}
    assert degrees(single_loop()) == {0: (1, 1)}


def test_connectivity_predicates():
    g3 = build_arc_digraph(3).graph
    assert is_balanced(g3) and is_strongly_connected(g3) and is_weakly_connected(g3)
    two_loops = graph(2, [(0, 0), (1, 1)])
    assert is_balanced(two_loops) and not is_weakly_connected(two_loops)
    loop = single_loop()
    assert is_balanced(loop) and is_strongly_connected(loop)
    path = graph(2, [(0, 1)])
    assert not is_balanced(path) and is_weakly_connected(path) and not is_strongly_connected(path)


def test_hierholzer_small():
    assert hierholzer(single_loop()) == [0]
    with pytest.raises(NotEulerianError):
        hierholzer(graph(2, [(0, 1)]))
    with pytest.raises(NotEulerianError):
        hierholzer(graph(2, [(0, 0), (1, 1)]))


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_hierholzer_circuits(k):
    g = build_arc_digraph(k).graph
    for start in {0, g.m // 2, g.m - 1}:
        c = hierholzer(g, start)
        assert c[0] == start
        assert is_circuit(g, c)
    assert hierholzer(g) == hierholzer(g)


def test_laplacian_k3():
    assert laplacian(build_arc_digraph(3).graph) == [[2, -2], [-2, 2]]
    assert laplacian(graph(2, [])) == [[0, 0], [0, 0]]


def test_laplacian_k4_matches_printed_matrix_up_to_permutation():
    L = laplacian(build_arc_digraph(4).graph)
    hits = [
        p for p in permutations(range(7))
        if all(L[p[i]][p[j]] == REFERENCE_L4[i][j] for i in range(7) for j in range(7))
    ]
    assert hits
    assert bareiss_det([row[1:] for row in REFERENCE_L4[1:]]) == 4900


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_laplacian_rows_sum_to_zero(k):
    assert all(sum(row) == 0 for row in laplacian(build_arc_digraph(k).graph))


def test_arborescence_counts():
    assert arborescence_count(build_arc_digraph(3).graph, 0) == 2
    assert arborescence_count(build_arc_digraph(4).graph, 0) == 4900
    assert arborescence_count(graph(1, [(0, 0), (0, 0), (0, 0)]), 0) == 1


@pytest.mark.parametrize("k", [3, 4, 5])
def test_arborescence_count_is_root_independent(k):
    g = build_arc_digraph(k).graph
    counts = {arborescence_count(g, r) for r in range(g.n)}
    assert len(counts) == 1


@pytest.mark.parametrize("k", [3, 4])
def test_arborescences_match_enumeration(k):
    g = build_arc_digraph(k).graph
    arcs = [(e.tail, e.head) for e in g.edges]
    assert arborescence_count(g, 0) == arborescences(g.n, arcs, 0)


def test_best_counts():
    assert best_count(build_arc_digraph(3).graph).circuits == 24
    res = best_count(build_arc_digraph(4).graph)
    assert res.arborescences == 4900
    assert res.circuits == 147_483_721_728_000_000
    assert res.circuits == 4900 * 6 * 24 * 120 * 24 * 120 * 5040 * 120
    assert best_count(single_loop()).circuits == 1
    with pytest.raises(NotEulerianError):
        best_count(graph(2, [(0, 1)]))


def test_brute_circuits():
    assert brute_circuits(build_arc_digraph(3).graph) == 24
    assert brute_circuits(single_loop()) == 1
    assert brute_circuits(graph(1, [(0, 0), (0, 0)])) == 1
    with pytest.raises(ValueError):
        brute_circuits(build_arc_digraph(4).graph)


CORPUS = [
    [(0, 0)],
    [(0, 0), (0, 0)],
    [(0, 1), (1, 0)],
    [(0, 1), (1, 0), (0, 1), (1, 0)],
    [(0, 1), (1, 2), (2, 0), (0, 0), (1, 1)],
    [(0, 1), (1, 2), (2, 0), (0, 2), (2, 1), (1, 0)],
    [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)],
]


@pytest.mark.parametrize("arcs", CORPUS)
def test_best_equals_brute_force(arcs):
    n = 1 + max(max(a) for a in arcs)
    g = graph(n, arcs)
    assert best_count(g).circuits == brute_circuits(g)
    assert best_count(g).circuits == best_count(g).arborescences * _fact_prod(g)


def _fact_prod(g):
    out = 1
    for _, o in degrees(g).values():
        out *= factorial(o - 1)
    return out


@st.composite
def eulerian_graphs(draw):
    """Unions of random closed walks on up to 4 vertices, at most 10 edges."""
    n = draw(st.integers(1, 4))
    arcs = []
    walks = draw(st.integers(1, 3))
    for _ in range(walks):
        cyc = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=4))
        cyc = [0] + cyc
        arcs += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    if len(arcs) > 10:
        arcs = None
    return n, arcs


@given(eulerian_graphs())
@settings(max_examples=150, deadline=None)
def test_best_equals_brute_force_random(case):
    n, arcs = case
    if arcs is None:
        return
    g = graph(n, arcs)
    if not (is_balanced(g) and is_weakly_connected(g)):
        return
    assert best_count(g).circuits == brute_circuits(g)
    c = hierholzer(g)
    assert is_circuit(g, c)


def _naive_det(M):
    n = len(M)
    if n == 0:
        return 1
    total = 0
    for p in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= M[i][p[i]]
        total += prod
    return total


@given(st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=200, deadline=None)
def test_bareiss_matches_permutation_expansion(M):
    assert bareiss_det(M) == _naive_det(M)

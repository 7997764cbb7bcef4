"""Directed multigraphs with loops, Eulerian circuits and exact circuit counting.

Counting follows the BEST theorem: the number of Eulerian circuits of a
balanced, connected digraph is ``t_w(G) * prod((deg(v) - 1)!)`` where ``t_w``
counts arborescences rooted at any vertex ``w``.  ``t_w`` is a cofactor of the
Laplacian and is computed by fraction-free (Bareiss) elimination, so every
count is an exact Python integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import factorial
from typing import Hashable, Iterable, Sequence


class NotEulerianError(ValueError):
    """Raised when a graph is unbalanced or its edges are not connected."""


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    key: Hashable = None


@dataclass
class MultiDigraph:
    """Vertices are dense ids ``0..n-1`` carrying opaque keys; edges may repeat and loop."""

    vertex_keys: list = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)

    def __post_init__(self):
        self._index = {key: v for v, key in enumerate(self.vertex_keys)}
        self._out: list[list[int]] = [[] for _ in self.vertex_keys]
        self._in: list[list[int]] = [[] for _ in self.vertex_keys]
        edges, self.edges = self.edges, []
        for e in edges:
            self.add_edge(e.tail, e.head, e.key)

    @classmethod
    def from_edges(cls, vertex_keys: Iterable, arcs: Iterable[tuple]) -> MultiDigraph:
        """Build from ``(tail_key, head_key, edge_key)`` triples."""
        g = cls(list(vertex_keys))
        for tail, head, key in arcs:
            g.add_edge(g.vertex_id(tail), g.vertex_id(head), key)
        return g

    @property
    def n(self) -> int:
        return len(self.vertex_keys)

    @property
    def m(self) -> int:
        return len(self.edges)

    def add_vertex(self, key) -> int:
        if key in self._index:
            return self._index[key]
        self._index[key] = len(self.vertex_keys)
        self.vertex_keys.append(key)
        self._out.append([])
        self._in.append([])
        return self._index[key]

    def add_edge(self, tail: int, head: int, key=None) -> int:
        if not (0 <= tail < self.n and 0 <= head < self.n):
            raise IndexError(f"edge endpoints ({tail}, {head}) out of range")
        e = Edge(len(self.edges), tail, head, key)
        self.edges.append(e)
        self._out[tail].append(e.id)
        self._in[head].append(e.id)
        return e.id

    def vertex_id(self, key) -> int:
        return self._index[key]

    def out_edges(self, v: int) -> list[int]:
        return list(self._out[v])

    def in_edges(self, v: int) -> list[int]:
        return list(self._in[v])

    def support(self) -> list[int]:
        return [v for v in range(self.n) if self._out[v] or self._in[v]]

    def to_json(self) -> dict:
        return {
            "vertices": [str(k) for k in self.vertex_keys],
            "edges": [[e.tail, e.head, str(e.key)] for e in self.edges],
        }

    def to_dot(self, name: str = "G", vertex_label=str, edge_label=str) -> str:
        lines = [f"digraph {name} {{"]
        for v, key in enumerate(self.vertex_keys):
            lines.append(f'  v{v} [label="{vertex_label(key)}"];')
        for e in self.edges:
            lines.append(f'  v{e.tail} -> v{e.head} [label="{edge_label(e.key)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def degrees(G: MultiDigraph) -> dict[int, tuple[int, int]]:
    """``{vertex: (in_degree, out_degree)}``; a loop counts once in each."""
    return {v: (len(G._in[v]), len(G._out[v])) for v in range(G.n)}


def is_balanced(G: MultiDigraph) -> bool:
    return all(i == o for i, o in degrees(G).values())


def _reach(G: MultiDigraph, start: int, forward: bool = True, undirected: bool = False) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        nbrs = []
        if forward or undirected:
            nbrs += [G.edges[e].head for e in G._out[v]]
        if not forward or undirected:
            nbrs += [G.edges[e].tail for e in G._in[v]]
        for w in nbrs:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_weakly_connected(G: MultiDigraph) -> bool:
    sup = G.support()
    if not sup:
        return True
    return set(sup) <= _reach(G, sup[0], undirected=True)


def is_strongly_connected(G: MultiDigraph) -> bool:
    sup = G.support()
    if not sup:
        return True
    s = set(sup)
    return s <= _reach(G, sup[0]) and s <= _reach(G, sup[0], forward=False)


def is_eulerian(G: MultiDigraph) -> bool:
    return G.m > 0 and is_balanced(G) and is_weakly_connected(G)


def _require_eulerian(G: MultiDigraph) -> None:
    if G.m == 0:
        raise NotEulerianError("graph has no edges")
    if not is_balanced(G):
        bad = [v for v, (i, o) in degrees(G).items() if i != o][:5]
        raise NotEulerianError(f"graph is not balanced (e.g. vertices {bad})")
    if not is_weakly_connected(G):
        raise NotEulerianError("graph edges are not connected")


def hierholzer(G: MultiDigraph, start_edge: int = 0) -> list[int]:
    """Eulerian circuit as edge ids, beginning with ``start_edge``.

    After the first edge, the unused out-edge with the smallest id is always
    taken, so the result is deterministic.
    """
    _require_eulerian(G)
    if not 0 <= start_edge < G.m:
        raise IndexError(f"start edge {start_edge} out of range")
    out = [sorted(G._out[v], reverse=True) for v in range(G.n)]
    first = G.edges[start_edge]
    out[first.tail].remove(start_edge)
    used = {start_edge}
    stack = [start_edge]
    circuit: list[int] = []
    while stack:
        v = G.edges[stack[-1]].head
        pool = out[v]
        while pool and pool[-1] in used:
            pool.pop()
        if pool:
            e = pool.pop()
            used.add(e)
            stack.append(e)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def is_circuit(G: MultiDigraph, edge_ids: Sequence[int]) -> bool:
    """True iff ``edge_ids`` is a closed walk using every edge exactly once."""
    if sorted(edge_ids) != list(range(G.m)):
        return False
    m = len(edge_ids)
    return all(G.edges[edge_ids[i]].head == G.edges[edge_ids[(i + 1) % m]].tail for i in range(m))


def laplacian(G: MultiDigraph) -> list[list[int]]:
    """Out-degree diagonal minus adjacency counted with multiplicity.

    Loops land on both the diagonal and the adjacency, so they cancel.
    """
    n = G.n
    L = [[0] * n for _ in range(n)]
    for e in G.edges:
        L[e.tail][e.tail] += 1
        L[e.tail][e.head] -= 1
    return L


def adjacency(G: MultiDigraph) -> list[list[int]]:
    A = [[0] * G.n for _ in range(G.n)]
    for e in G.edges:
        A[e.tail][e.head] += 1
    return A


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        row_k = A[k]
        for i in range(k + 1, n):
            row_i = A[i]
            a_ik = row_i[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - a_ik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def minor(M: Sequence[Sequence[int]], drop: int) -> list[list[int]]:
    return [[x for j, x in enumerate(row) if j != drop] for i, row in enumerate(M) if i != drop]


def arborescence_count(G: MultiDigraph, root: int) -> int:
    """Spanning arborescences oriented towards ``root``, over the edge-carrying vertices.

    Equal to the cofactor of the Laplacian at ``root``.  Returns 0 when ``root``
    carries no edges but others do, or when the support is disconnected.
    """
    sup = G.support()
    if not sup:
        return 1
    if root not in sup:
        return 0
    L = laplacian(G)
    sub = [[L[i][j] for j in sup] for i in sup]
    return bareiss_det(minor(sub, sup.index(root)))


@dataclass(frozen=True)
class CountResult:
    arborescences: int
    circuits: int


def best_count(G: MultiDigraph) -> CountResult:
    _require_eulerian(G)
    sup = G.support()
    t = arborescence_count(G, sup[0])
    prod = 1
    for v in sup:
        prod *= factorial(len(G._out[v]) - 1)
    return CountResult(t, t * prod)


BRUTE_EDGE_LIMIT = 16


def brute_circuits(G: MultiDigraph, max_edges: int = BRUTE_EDGE_LIMIT) -> int:
    """Count Eulerian circuits by exhaustive backtracking from edge 0.

    Each circuit, taken up to rotation, has exactly one representative that
    starts with a fixed edge, so this matches the BEST count.
    """
    if G.m > max_edges:
        raise ValueError(f"brute force limited to {max_edges} edges, graph has {G.m}")
    if G.m == 0:
        return 0
    used = [False] * G.m
    start_tail = G.edges[0].tail
    used[0] = True

    def walk(v: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if v == start_tail else 0
        total = 0
        for e in G._out[v]:
            if not used[e]:
                used[e] = True
                total += walk(G.edges[e].head, remaining - 1)
                used[e] = False
        return total

    return walk(G.edges[0].head, G.m - 1)


def format_matrix(M: Sequence[Sequence[int]]) -> str:
    if not M:
        return ""
    width = max(len(str(x)) for row in M for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in M)

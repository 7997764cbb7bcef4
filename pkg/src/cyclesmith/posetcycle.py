"""The arc digraph of NL posets and the universal cycles it carries.

Vertices are the NL posets of size ``k-1`` and every NL poset ``Q`` of size
``k`` is an edge from ``drop_max(Q)`` to ``drop_min(Q)``.  Each vertex has in-
and out-degree equal to its number of antichains, and the graph is strongly
connected, so every Eulerian circuit spells a universal cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from cyclesmith import coding
from cyclesmith.coding import CyclicCode, format_symbols
from cyclesmith.eulergraph import MultiDigraph, best_count, hierholzer
from cyclesmith.poset import NLPoset, append_max, cover_code, covers, drop_max, drop_min, enumerate_posets
from cyclesmith.verify import MAX_REPORTED, PosetCodeDecoder, WindowScheme, verify_cycle


@dataclass
class PosetArcDigraph:
    k: int
    graph: MultiDigraph
    vertices: list[NLPoset]
    edges: list[NLPoset]
    edge_index: dict[NLPoset, int] = field(repr=False)

    def vertex_of(self, P: NLPoset) -> int:
        return self.graph.vertex_id(P)

    def to_dot(self) -> str:
        return self.graph.to_dot(name=f"nl{self.k}", vertex_label=poset_label, edge_label=poset_label)


@lru_cache(maxsize=8)
def build_arc_digraph(k: int) -> PosetArcDigraph:
    if k < 2:
        raise ValueError("the arc digraph needs k >= 2")
    vertices = enumerate_posets(k - 1)
    edges = enumerate_posets(k)
    g = MultiDigraph.from_edges(vertices, ((drop_max(Q), drop_min(Q), Q) for Q in edges))
    return PosetArcDigraph(k, g, vertices, edges, {Q: i for i, Q in enumerate(edges)})


def circuit_posets(k: int, start_edge: int = 0) -> list[NLPoset]:
    arc = build_arc_digraph(k)
    return [arc.edges[e] for e in hierholzer(arc.graph, start_edge)]


def generate_ucycle(k: int) -> CyclicCode:
    return coding.emit_ucycle(circuit_posets(k))


@dataclass
class UcycleReport:
    k: int
    window_count: int
    posets: list[NLPoset | None]
    duplicates: list[tuple[int, int]]
    invalid_windows: list[tuple[int, str]]
    coverage: bool
    valid: bool

    def to_json(self, code: CyclicCode | None = None) -> dict:
        out = {"k": self.k}
        if code is not None:
            out["cycle"] = list(code.symbols)
        out.update(
            valid=self.valid,
            count=self.window_count,
            coverage=self.coverage,
            duplicates=[list(d) for d in self.duplicates[:MAX_REPORTED]],
            invalid_windows=[[i, m] for i, m in self.invalid_windows[:MAX_REPORTED]],
        )
        return out


def verify_ucycle(code: CyclicCode, k: int | None = None) -> UcycleReport:
    k = code.k if k is None else k
    scheme = WindowScheme(k - 1, 1, PosetCodeDecoder(k))
    rep = verify_cycle(code.symbols, scheme)
    return UcycleReport(
        k=k,
        window_count=rep.window_count,
        posets=rep.objects,
        duplicates=rep.duplicates,
        invalid_windows=rep.invalid_windows,
        coverage=bool(rep.coverage_complete),
        valid=rep.valid,
    )


def build_path(source: NLPoset, target: NLPoset) -> list[NLPoset]:
    """Walk from ``source`` to ``target`` in the arc digraph of size ``k = source.size + 1``.

    Target elements are introduced smallest first, each as the new maximum of
    the window, above exactly the already introduced target elements it covers.
    After ``k-1`` steps the window equals ``target``.  Equal endpoints give the
    empty path.
    """
    if source.size != target.size:
        raise ValueError("source and target must have the same size")
    if source == target:
        return []
    w = source.size
    window = source
    path = []
    for t in range(1, w + 1):
        # target element j currently sits at window label (w - t + 1) + j
        offset = w - t + 1
        below = {offset + i for i, j in covers(target) if j == t}
        edge = append_max(window, below)
        path.append(edge)
        window = drop_min(edge)
    assert window == target
    return path


def path_edge_ids(path: list[NLPoset]) -> list[int]:
    if not path:
        return []
    arc = build_arc_digraph(path[0].size)
    return [arc.edge_index[Q] for Q in path]


def count_ucycles(k: int) -> int:
    return best_count(build_arc_digraph(k).graph).circuits


def poset_label(P: NLPoset) -> str:
    """Code string of ``P``; posets too small to carry a code print as ``()``."""
    return format_symbols(cover_code(P)) if P.size >= 2 else "()"

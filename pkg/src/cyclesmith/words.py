"""Overlap cycles of weight-``k`` words of length ``n`` over ``{0..q}``.

Words are edges from their ``s``-prefix to their ``s``-suffix.  The graph is
balanced because rotating an incoming word by ``n-s`` gives an outgoing one.
Connectivity is checked directly on the built graph; ``reduction_trace``
additionally produces the append/rearrange walk towards the most-maximal
vertex as a human-readable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from cyclesmith.eulergraph import MultiDigraph, hierholzer, is_balanced, is_weakly_connected
from cyclesmith.verify import CycleReport, InvalidWindow, LiteralWord, WindowScheme, overlap_string, verify_cycle

Word = tuple[int, ...]

Q_FIRST = "q-first"
REMAINDER_FIRST = "remainder-first"


class InfeasibleParams(ValueError):
    """Parameters for which no overlap cycle is constructed."""


@dataclass(frozen=True)
class WordCycleParams:
    n: int
    k: int
    q: int
    s: int

    def __post_init__(self):
        n, k, q, s = self.n, self.k, self.q, self.s
        # s = n - 1 (a plain universal cycle) is accepted; generation fails loudly if disconnected
        if not 1 <= s <= n - 1:
            raise InfeasibleParams(f"overlap s={s} must lie in [1, n-1] for n={n}")
        if gcd(n, s) != 1:
            raise InfeasibleParams(f"gcd(n={n}, s={s}) != 1")
        if not 1 <= q <= k:
            raise InfeasibleParams(f"largest letter q={q} must satisfy 1 <= q <= k={k}")
        if k > n * q:
            raise InfeasibleParams(f"weight k={k} exceeds n*q={n * q}")

    @property
    def stride(self) -> int:
        return self.n - self.s

    def vertex_weight_range(self) -> tuple[int, int]:
        return max(0, self.k - (self.n - self.s) * self.q), min(self.k, self.s * self.q)


def _compositions(length: int, total: int, q: int) -> list[Word]:
    """All words of ``length`` letters in ``[0, q]`` summing to ``total``, lexicographic."""
    if length == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(0, min(q, total) + 1):
        rest = total - first
        if rest > (length - 1) * q:
            continue
        out.extend((first,) + tail for tail in _compositions(length - 1, rest, q))
    return out


def enumerate_words(params: WordCycleParams) -> list[Word]:
    return _compositions(params.n, params.k, params.q)


def is_vertex(v: Sequence[int], params: WordCycleParams) -> bool:
    lo, hi = params.vertex_weight_range()
    return len(v) == params.s and all(0 <= x <= params.q for x in v) and lo <= sum(v) <= hi


def build_word_graph(params: WordCycleParams) -> MultiDigraph:
    words = enumerate_words(params)
    s = params.s
    vertices = sorted({w[:s] for w in words} | {w[-s:] for w in words})
    return MultiDigraph.from_edges(vertices, ((w[:s], w[-s:], w) for w in words))


def _ocycle_from_graph(G: MultiDigraph, stride: int) -> tuple[int, ...]:
    if not is_balanced(G):
        raise InfeasibleParams("overlap graph is not balanced")
    if not is_weakly_connected(G):
        raise InfeasibleParams("overlap graph is not connected")
    circuit = [G.edges[e].key for e in hierholzer(G)]
    return overlap_string(circuit, stride)


def generate_ocycle(params: WordCycleParams) -> tuple[int, ...]:
    """Cyclic letter string in which every weight-``k`` word appears once at stride ``n-s``."""
    return _ocycle_from_graph(build_word_graph(params), params.stride)


class _WeightWordDecoder(LiteralWord):
    name = "weight-word"

    def __init__(self, params: WordCycleParams):
        super().__init__(params.n, range(params.q + 1))
        self.params = params

    def decode(self, window):
        w = super().decode(window)
        if sum(w) != self.params.k:
            raise InvalidWindow(f"{w} has weight {sum(w)}, expected {self.params.k}")
        return w

    def universe(self):
        return set(enumerate_words(self.params))


def verify_ocycle(sequence: Sequence[int], params: WordCycleParams) -> CycleReport:
    scheme = WindowScheme(params.n, params.stride, _WeightWordDecoder(params))
    return verify_cycle(sequence, scheme)


def most_maximal_vertex(params: WordCycleParams) -> Word:
    s, q = params.s, params.q
    r = min(s, params.k // q)
    return (0,) * (s - r) + (q,) * r


def append_letters(v: Sequence[int], params: WordCycleParams, order: str = Q_FIRST) -> Word:
    """Extend vertex ``v`` to a weight-``k`` word of length ``n``.

    The missing weight ``k - sum(v)`` is spread as full letters ``q`` and one
    remainder letter, padded with zeros.  ``order`` chooses whether the q's or
    the remainder come first.
    """
    v = tuple(v)
    if not is_vertex(v, params):
        raise InfeasibleParams(f"{v} is not an extendable overlap for {params}")
    need = params.k - sum(v)
    full, rem = divmod(need, params.q)
    qs = (params.q,) * full
    tail = (rem,) if rem else ()
    if order == Q_FIRST:
        ext = qs + tail
    elif order == REMAINDER_FIRST:
        ext = tail + qs
    else:
        raise ValueError(f"unknown append order {order!r}")
    ext = ext + (0,) * (params.n - params.s - len(ext))
    return v + ext


def rearrange(w: Sequence[int], q: int) -> Word:
    """Letters below ``q`` in descending order, then every ``q``."""
    small = sorted((x for x in w if x < q), reverse=True)
    return tuple(small) + (q,) * (len(w) - len(small))


@dataclass(frozen=True)
class TraceStep:
    vertex: Word
    word: Word
    rearranged: Word

    @property
    def next_vertex(self) -> Word:
        return self.rearranged[len(self.rearranged) - len(self.vertex):]


MAX_TRACE_STEPS = 10_000


def reduction_trace(v: Sequence[int], params: WordCycleParams, order: str = Q_FIRST) -> list[TraceStep]:
    """Append, rearrange and step to the suffix vertex until the most-maximal vertex."""
    target = most_maximal_vertex(params)
    v = tuple(v)
    steps: list[TraceStep] = []
    while v != target:
        if len(steps) >= MAX_TRACE_STEPS:
            raise RuntimeError(f"reduction from {steps[0].vertex} did not reach {target}")
        w = append_letters(v, params, order)
        step = TraceStep(v, w, rearrange(w, params.q))
        steps.append(step)
        v = step.next_vertex
    return steps

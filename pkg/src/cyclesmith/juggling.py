"""Site-swap juggling sequences and their ``(n-2)``-overlap cycles.

A throw sequence ``j`` of period ``n`` is valid when ``n`` divides its sum and
``(j[i] + i) mod n`` is a permutation of ``0..n-1``.  Sequences of at most
``b`` balls are edges from their ``(n-2)``-prefix to their ``(n-2)``-suffix;
for odd ``n`` the resulting graph is Eulerian.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from cyclesmith.eulergraph import MultiDigraph
from cyclesmith.verify import CycleReport, Decoder, InvalidWindow, WindowScheme, verify_cycle
from cyclesmith.words import InfeasibleParams, _ocycle_from_graph

Throws = tuple[int, ...]


class InvalidSequence(ValueError):
    pass


def validate(throws: Sequence[int], n: int | None = None) -> bool:
    throws = tuple(throws)
    n = len(throws) if n is None else n
    if n == 0 or len(throws) != n or any(t < 0 for t in throws):
        return False
    if sum(throws) % n:
        return False
    return len({(t + i) % n for i, t in enumerate(throws)}) == n


def _require_valid(throws: Sequence[int]) -> Throws:
    throws = tuple(throws)
    if not validate(throws):
        raise InvalidSequence(f"{throws} is not a valid juggling sequence")
    return throws


def ball_count(throws: Sequence[int]) -> int:
    throws = _require_valid(throws)
    return sum(throws) // len(throws)


def underlying_permutation(throws: Sequence[int]) -> Throws:
    throws = _require_valid(throws)
    n = len(throws)
    return tuple((t + i) % n for i, t in enumerate(throws))


@dataclass(frozen=True)
class JuggleParams:
    """Period ``n`` and ball bound ``b``; the overlap is fixed at ``n - 2``."""

    n: int
    b: int

    def __post_init__(self):
        if self.n < 1 or self.b < 0:
            raise InfeasibleParams(f"need n >= 1 and b >= 0, got n={self.n}, b={self.b}")

    @property
    def s(self) -> int:
        return self.n - 2

    @property
    def max_throw(self) -> int:
        return self.n * self.b

    def require_overlap(self) -> None:
        if self.n < 3 or self.n % 2 == 0:
            raise InfeasibleParams(f"period {self.n} must be odd and >= 3 so that gcd(n, n-2) = 1")


def cyclic_shift(throws: Sequence[int], params: JuggleParams | None = None) -> Throws:
    """Move the first ``n - s`` throws to the end."""
    throws = _require_valid(throws)
    d = 2 if params is None else params.n - params.s
    return throws[d:] + throws[:d]


def enumerate_sequences(params: JuggleParams) -> list[Throws]:
    """Valid sequences with at most ``b`` balls, throws in ``[0, n*b]``, lexicographic."""
    n, b = params.n, params.b
    limit = n * b
    out: list[Throws] = []
    prefix: list[int] = []
    landed: set[int] = set()

    def extend(total: int) -> None:
        i = len(prefix)
        if i == n:
            if total % n == 0:
                out.append(tuple(prefix))
            return
        for t in range(0, limit - total + 1):
            land = (t + i) % n
            if land in landed:
                continue
            prefix.append(t)
            landed.add(land)
            extend(total + t)
            landed.discard(land)
            prefix.pop()

    extend(0)
    return out


def build_juggling_graph(params: JuggleParams) -> MultiDigraph:
    params.require_overlap()
    seqs = enumerate_sequences(params)
    s = params.s
    vertices = sorted({j[:s] for j in seqs} | {j[-s:] for j in seqs})
    return MultiDigraph.from_edges(vertices, ((j[:s], j[-s:], j) for j in seqs))


def generate_ocycle(params: JuggleParams) -> Throws:
    return _ocycle_from_graph(build_juggling_graph(params), params.n - params.s)


class _JuggleDecoder(Decoder):
    name = "juggling"

    def __init__(self, params: JuggleParams):
        self.params = params
        self.window = params.n

    def decode(self, window):
        if not validate(window):
            raise InvalidWindow(f"{window} is not a juggling sequence")
        if sum(window) > self.params.max_throw:
            raise InvalidWindow(f"{window} uses more than {self.params.b} balls")
        return tuple(window)

    def universe(self):
        return set(enumerate_sequences(self.params))


def verify_ocycle(sequence: Sequence[int], params: JuggleParams) -> CycleReport:
    params.require_overlap()
    return verify_cycle(sequence, WindowScheme(params.n, params.n - params.s, _JuggleDecoder(params)))


MAX_REDUCTION_STEPS = 100_000


def _rotation_shifts(j: Throws, start: int) -> int:
    """Number of 2-shifts that bring index ``start`` of ``j`` to the front."""
    n = len(j)
    return start * pow(2, -1, n) % n


def _best_rotation(j: Throws, pred) -> int | None:
    """Fewest 2-shifts reaching a rotation satisfying ``pred``; ties by the smaller rotation."""
    n = len(j)
    best = None
    for start in range(n):
        r = j[start:] + j[:start]
        if pred(r):
            key = (_rotation_shifts(j, start), r)
            if best is None or key < best:
                best = key
    return None if best is None else best[0]


def breakdown(j: Sequence[int]) -> Throws:
    """``j_3 ... j_n, j_2 + 1, j_1 - 1``, with appended throws of height ``>= n`` reduced mod ``n``."""
    j = _require_valid(j)
    n = len(j)
    if j[0] == 0:
        raise InvalidSequence("break-down needs a nonzero first throw")
    m2, m1 = j[1] + 1, j[0] - 1
    if m2 >= n:
        m2 %= n
    if m1 >= n:
        m1 %= n
    return j[2:] + (m2, m1)


def reduce_to_zero(throws: Sequence[int], params: JuggleParams | None = None) -> list[Throws]:
    """Walk from ``throws`` to the all-zero sequence using shifts and break-downs.

    The largest throw is rotated into the second slot; when a rotation puts a
    nonzero throw in front of it, that throw is broken down into it.
    Otherwise the next largest throw (below the maximum, or the maximum itself
    when nothing smaller is nonzero) is rotated to the front and broken down.
    Every consecutive pair in the returned list shares an ``(n-2)``-overlap.
    """
    j = _require_valid(throws)
    n = len(j)
    if params is not None and params.n != n:
        raise InfeasibleParams(f"sequence length {n} differs from period {params.n}")
    JuggleParams(n, 0).require_overlap()
    steps = [j]

    def shift_by(count: int) -> None:
        nonlocal j
        for _ in range(count):
            j = j[2:] + j[:2]
            steps.append(j)

    while any(j):
        if len(steps) > MAX_REDUCTION_STEPS:
            raise RuntimeError(f"reduction of {steps[0]} exceeded {MAX_REDUCTION_STEPS} steps")
        top = max(j)
        count = _best_rotation(j, lambda r: r[1] == top and r[0] != 0)
        if count is None:
            shift_by(_best_rotation(j, lambda r: r[1] == top))
            lower = [t for t in j if 0 < t < top]
            pick = max(lower) if lower else top
            count = _best_rotation(j, lambda r: r[0] == pick)
        shift_by(count)
        j = breakdown(j)
        steps.append(j)
    return steps


def is_transition(a: Sequence[int], b: Sequence[int], overlap: int) -> bool:
    return tuple(a[len(a) - overlap:]) == tuple(b[:overlap])

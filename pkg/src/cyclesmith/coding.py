"""Integer-string codes for NL posets and for whole poset universal cycles.

A poset of size ``k`` is written as ``(a_2, ..., a_k)``.  The binary digits of
``a_j`` list the elements covered by ``j``, with element 1 as the most
significant bit and element ``j-1`` as the least significant one.  A universal
cycle is the cyclic string of last symbols; a window of ``k-1`` consecutive
symbols is read back by reducing position ``p`` modulo ``2**p``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from cyclesmith.poset import NLPoset, cover_code, covers, drop_max, drop_min, transitive_closure

PosetCode = tuple[int, ...]

STRICT = "strict"
NORMALIZE = "normalize"


class CodeError(ValueError):
    """Raised when a code or cyclic code cannot be decoded."""


def format_symbols(symbols: Sequence[int]) -> str:
    """Render compactly when every symbol is a single digit, otherwise comma-separated."""
    if all(0 <= s < 10 for s in symbols):
        return "".join(str(s) for s in symbols)
    return ",".join(str(s) for s in symbols)


def parse_symbols(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        parts = [p for p in text.replace(" ", ",").split(",") if p]
        return tuple(int(p) for p in parts)
    if not text.isdigit():
        raise CodeError(f"cannot parse symbols from {text!r}")
    return tuple(int(c) for c in text)


def encode_poset(P: NLPoset) -> PosetCode:
    if P.size < 2:
        raise CodeError("encoding needs a poset with at least two elements")
    return cover_code(P)


def decode_code(code: Iterable[int], mode: str = STRICT) -> NLPoset:
    """Rebuild the poset named by ``code``.

    In strict mode every set bit must name a genuine cover of the resulting
    order.  In normalize mode redundant bits are accepted and dropped.
    """
    code = tuple(code)
    if mode not in (STRICT, NORMALIZE):
        raise ValueError(f"unknown decode mode {mode!r}")
    k = len(code) + 1
    edges = []
    for j, a in enumerate(code, start=2):
        if not 0 <= a < 2 ** (j - 1):
            raise CodeError(f"symbol a_{j}={a} out of range [0, {2 ** (j - 1)})")
        for i in range(1, j):
            if a >> (j - 1 - i) & 1:
                edges.append((i, j))
    P = NLPoset(k, transitive_closure(edges, k))
    if mode == STRICT:
        extra = set(edges) - covers(P)
        if extra:
            raise CodeError(f"code {format_symbols(code)} names non-cover edges {sorted(extra)}")
    return P


def window_read(window: Sequence[int]) -> PosetCode:
    """Reduce the symbol at 1-indexed position ``p`` modulo ``2**p``."""
    return tuple(s % (2**p) for p, s in enumerate(window, start=1))


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic symbol string whose ``k-1`` windows encode size-``k`` posets."""

    k: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))

    def __len__(self):
        return len(self.symbols)

    def windows(self) -> list[tuple[int, ...]]:
        m, w = len(self.symbols), self.k - 1
        s = self.symbols
        return [tuple(s[(i + t) % m] for t in range(w)) for i in range(m)]

    def rotate(self, r: int) -> CyclicCode:
        if not self.symbols:
            return self
        r %= len(self.symbols)
        return CyclicCode(self.k, self.symbols[r:] + self.symbols[:r])

    def canonical(self) -> CyclicCode:
        """Lexicographically least rotation."""
        if not self.symbols:
            return self
        return min((self.rotate(r) for r in range(len(self.symbols))), key=lambda c: c.symbols)

    def to_text(self) -> str:
        return f"k={self.k};" + ",".join(str(s) for s in self.symbols)

    @classmethod
    def from_text(cls, text: str) -> CyclicCode:
        head, sep, body = text.strip().partition(";")
        if not sep or not head.startswith("k="):
            raise CodeError(f"expected 'k=<k>;<s1>,<s2>,...', got {text!r}")
        return cls(int(head[2:]), parse_symbols(body))

    def to_json(self) -> dict:
        return {"k": self.k, "cycle": list(self.symbols)}

    @classmethod
    def from_json(cls, data: dict | str) -> CyclicCode:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["k"]), tuple(int(s) for s in data["cycle"]))


def emit_ucycle(circuit: Sequence[NLPoset]) -> CyclicCode:
    """Turn a closed walk of overlapping size-``k`` posets into its cyclic code.

    The string is rotated so that window ``i`` decodes to ``circuit[i]``.
    """
    if not circuit:
        raise CodeError("empty circuit")
    k = circuit[0].size
    if k < 2 or any(P.size != k for P in circuit):
        raise CodeError("circuit posets must share one size k >= 2")
    m = len(circuit)
    for idx, P in enumerate(circuit):
        Q = circuit[(idx + 1) % m]
        if drop_min(P) != drop_max(Q):
            raise CodeError(f"posets {idx} and {(idx + 1) % m} do not overlap")
    last = [encode_poset(P)[-1] for P in circuit]
    # window i ends at the symbol of edge i
    shift = (k - 2) % m
    symbols = tuple(last[(i - shift) % m] for i in range(m))
    return CyclicCode(k, symbols)


def decode_ucycle(code: CyclicCode, k: int | None = None) -> list[NLPoset]:
    k = code.k if k is None else k
    if not code.symbols:
        raise CodeError("empty cyclic code")
    c = CyclicCode(k, code.symbols)
    if k == 1:
        return [NLPoset(1) for _ in c.symbols]
    top = 2 ** (k - 1)
    bad = [s for s in c.symbols if not 0 <= s < top]
    if bad:
        raise CodeError(f"symbol {bad[0]} outside 0..{top - 1}")
    return [decode_code(window_read(w), STRICT) for w in c.windows()]

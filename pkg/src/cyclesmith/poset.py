"""Naturally labeled posets, their antichains and one-element extensions.

A naturally labeled (NL) poset on ``{1..k}`` only relates ``i < j`` when the
label of ``i`` is smaller.  Posets are stored by their full, transitively
closed strict relation; Hasse covers are derived on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

Pair = tuple[int, int]


class PosetError(ValueError):
    """Raised for malformed posets or illegal extensions."""


def is_natural_order(relation: Iterable[Pair], k: int) -> bool:
    rel = set(relation)
    for i, j in rel:
        if not (1 <= i < j <= k):
            return False
    for i, j in rel:
        for j2, m in rel:
            if j == j2 and (i, m) not in rel:
                return False
    return True


def transitive_closure(pairs: Iterable[Pair], k: int) -> frozenset[Pair]:
    below: list[set[int]] = [set() for _ in range(k + 1)]
    edges = sorted(set(pairs), key=lambda p: p[1])
    for i, j in edges:
        if not 1 <= i < j <= k:
            raise PosetError(f"pair {(i, j)} is not naturally labeled on 1..{k}")
    # labels increase along every chain, so one ascending pass closes the relation
    direct: list[set[int]] = [set() for _ in range(k + 1)]
    for i, j in edges:
        direct[j].add(i)
    for j in range(1, k + 1):
        for i in direct[j]:
            below[j].add(i)
            below[j] |= below[i]
    return frozenset((i, j) for j in range(1, k + 1) for i in below[j])


@dataclass(frozen=True)
class NLPoset:
    """A naturally labeled poset of ``size`` elements.

    ``relation`` holds every strict comparison ``(i, j)`` meaning ``i < j`` in
    the order; it must be transitively closed.
    """

    size: int
    relation: frozenset[Pair] = frozenset()

    def __post_init__(self):
        if self.size < 0:
            raise PosetError("size must be nonnegative")
        rel = frozenset(self.relation)
        object.__setattr__(self, "relation", rel)
        if not is_natural_order(rel, self.size):
            raise PosetError(f"relation {sorted(rel)} is not a naturally labeled order")

    @classmethod
    def from_covers(cls, size: int, covers: Iterable[Pair]) -> NLPoset:
        return cls(size, transitive_closure(covers, size))

    @classmethod
    def chain(cls, size: int) -> NLPoset:
        return cls.from_covers(size, [(i, i + 1) for i in range(1, size)])

    @classmethod
    def antichain(cls, size: int) -> NLPoset:
        return cls(size)

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.relation

    def comparable(self, i: int, j: int) -> bool:
        return (i, j) in self.relation or (j, i) in self.relation

    def down_set(self, j: int) -> frozenset[int]:
        """Elements strictly below ``j``."""
        return frozenset(i for i, m in self.relation if m == j)

    def up_set(self, i: int) -> frozenset[int]:
        return frozenset(m for a, m in self.relation if a == i)

    def is_antichain(self, members: Iterable[int]) -> bool:
        ms = sorted(set(members))
        if any(not 1 <= m <= self.size for m in ms):
            return False
        return not any(self.comparable(a, b) for a, b in combinations(ms, 2))

    def restrict(self, labels: Iterable[int]) -> NLPoset:
        """Induced subposet on ``labels``, relabeled ``1..len(labels)`` preserving order."""
        keep = sorted(set(labels))
        new = {old: idx + 1 for idx, old in enumerate(keep)}
        rel = frozenset((new[i], new[j]) for i, j in self.relation if i in new and j in new)
        return NLPoset(len(keep), rel)

    def __repr__(self):
        return f"NLPoset({self.size}, covers={sorted(covers(self))})"


def covers(P: NLPoset) -> frozenset[Pair]:
    """Hasse edges: the transitive reduction of ``P.relation``."""
    rel = P.relation
    out = set()
    for i, j in rel:
        if not any((i, m) in rel and (m, j) in rel for m in range(i + 1, j)):
            out.add((i, j))
    return frozenset(out)


def antichains(P: NLPoset) -> list[frozenset[int]]:
    """All antichains of ``P``, the empty one first, ordered by sorted member tuple."""
    found: list[tuple[int, ...]] = [()]

    def extend(current: tuple[int, ...], start: int) -> None:
        for x in range(start, P.size + 1):
            if all(not P.comparable(a, x) for a in current):
                nxt = current + (x,)
                found.append(nxt)
                extend(nxt, x + 1)

    extend((), 1)
    found.sort()
    return [frozenset(a) for a in found]


def append_max(P: NLPoset, A: Iterable[int]) -> NLPoset:
    """Add a new largest element ``k+1`` lying above exactly ``A`` and its down-sets."""
    A = frozenset(A)
    if not P.is_antichain(A):
        raise PosetError(f"{sorted(A)} is not an antichain of {P!r}")
    top = P.size + 1
    below = set(A)
    for a in A:
        below |= P.down_set(a)
    return NLPoset(top, P.relation | {(i, top) for i in below})


def prepend_min(P: NLPoset, A: Iterable[int]) -> NLPoset:
    """Add a new smallest element below exactly ``A`` and its up-sets; old labels shift up by one."""
    A = frozenset(A)
    if not P.is_antichain(A):
        raise PosetError(f"{sorted(A)} is not an antichain of {P!r}")
    above = set(A)
    for a in A:
        above |= P.up_set(a)
    rel = {(i + 1, j + 1) for i, j in P.relation}
    rel |= {(1, j + 1) for j in above}
    return NLPoset(P.size + 1, frozenset(rel))


def drop_min(P: NLPoset) -> NLPoset:
    if P.size < 2:
        raise PosetError("drop_min needs a poset with at least two elements")
    return P.restrict(range(2, P.size + 1))


def drop_max(P: NLPoset) -> NLPoset:
    if P.size < 2:
        raise PosetError("drop_max needs a poset with at least two elements")
    return P.restrict(range(1, P.size))


def cover_code(P: NLPoset) -> tuple[int, ...]:
    """Integer code ``(a_2, ..., a_k)``; bit ``2**(j-1-i)`` of ``a_j`` is set when ``j`` covers ``i``."""
    code = [0] * max(P.size - 1, 0)
    for i, j in covers(P):
        code[j - 2] |= 1 << (j - 1 - i)
    return tuple(code)


# enumerations loaded from elsewhere (the on-disk cache) take precedence
_seeded: dict[int, tuple[NLPoset, ...]] = {}


def seed_enumeration(k: int, posets: Iterable[NLPoset]) -> None:
    _seeded[k] = tuple(posets)
    _enumerate.cache_clear()


@lru_cache(maxsize=None)
def _enumerate(k: int) -> tuple[NLPoset, ...]:
    if k in _seeded:
        return _seeded[k]
    if k == 0:
        return (NLPoset(0),)
    out = [append_max(P, A) for P in _enumerate(k - 1) for A in antichains(P)]
    out.sort(key=cover_code)
    return tuple(out)


def enumerate_posets(k: int) -> list[NLPoset]:
    """Every NL poset of size ``k`` exactly once, sorted by cover code.

    Built by extending each poset of size ``k-1`` with a new maximum over each of
    its antichains; the elements covered by the new maximum recover the
    antichain, so no poset is produced twice.
    """
    if k < 0:
        raise PosetError("k must be nonnegative")
    return list(_enumerate(k))


def to_json(P: NLPoset) -> dict:
    return {"size": P.size, "covers": [list(c) for c in sorted(covers(P))]}


def from_json(data: dict | str) -> NLPoset:
    if isinstance(data, str):
        data = json.loads(data)
    return NLPoset.from_covers(int(data["size"]), [tuple(c) for c in data["covers"]])


def to_dot(P: NLPoset, name: str = "hasse") -> str:
    lines = [f"graph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for v in range(1, P.size + 1):
        lines.append(f'  {v} [label="{v}"];')
    for i, j in sorted(covers(P)):
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

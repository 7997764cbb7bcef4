"""Generic checker for universal cycles and overlap cycles.

A cyclic symbol string is cut into windows of length ``window`` starting every
``stride`` symbols (stride 1 for u-cycles, ``window - s`` for s-overlap
cycles).  A decoder turns each window into an object, or rejects it; when the
decoder knows its whole universe the report also states coverage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Any, Hashable, Iterable, Sequence

from cyclesmith.coding import CodeError, decode_code, parse_symbols, window_read
from cyclesmith.poset import enumerate_posets

MAX_REPORTED = 10


class InvalidWindow(ValueError):
    pass


class Decoder:
    name = "abstract"
    window: int | None = None

    def decode(self, window: tuple[int, ...]) -> Hashable:
        raise NotImplementedError

    def universe(self) -> set | None:
        return None


class LiteralWord(Decoder):
    """The window itself is the object, optionally restricted to an alphabet."""

    name = "literal-word"

    def __init__(self, length: int, alphabet: Iterable[int] | None = None):
        self.window = length
        self.alphabet = None if alphabet is None else tuple(sorted(set(alphabet)))

    def decode(self, window):
        if self.alphabet is not None and any(s not in self.alphabet for s in window):
            raise InvalidWindow(f"symbols outside alphabet in {window}")
        return tuple(window)

    def universe(self):
        if self.alphabet is None:
            return None
        return set(product(self.alphabet, repeat=self.window))


class KSubset(Decoder):
    """A window of ``k`` distinct symbols from ``1..n`` names a ``k``-subset."""

    name = "k-subset-of-n"

    def __init__(self, k: int, n: int):
        self.window, self.k, self.n = k, k, n

    def decode(self, window):
        if len(set(window)) != len(window):
            raise InvalidWindow(f"repeated symbol in {window}")
        if any(not 1 <= s <= self.n for s in window):
            raise InvalidWindow(f"symbol outside 1..{self.n} in {window}")
        return frozenset(window)

    def universe(self):
        return {frozenset(c) for c in combinations(range(1, self.n + 1), self.k)}


class CharacteristicVector(Decoder):
    """A 0/1 window of length ``n`` names the subset of positions holding 1."""

    name = "characteristic-vector"

    def __init__(self, n: int, low: int, high: int):
        if not 0 <= low <= high <= n:
            raise ValueError(f"weight range [{low}, {high}] invalid for n={n}")
        self.window, self.low, self.high = n, low, high

    def decode(self, window):
        if any(s not in (0, 1) for s in window):
            raise InvalidWindow(f"non-binary symbol in {window}")
        members = frozenset(i + 1 for i, s in enumerate(window) if s)
        if not self.low <= len(members) <= self.high:
            raise InvalidWindow(f"weight {len(members)} outside [{self.low}, {self.high}]")
        return members

    def universe(self):
        return {
            frozenset(c)
            for r in range(self.low, self.high + 1)
            for c in combinations(range(1, self.window + 1), r)
        }


class Permutation(Decoder):
    """A window must be an arrangement of ``1..n``."""

    name = "permutation"

    def __init__(self, n: int):
        self.window = n

    def decode(self, window):
        if sorted(window) != list(range(1, self.window + 1)):
            raise InvalidWindow(f"{window} is not a permutation of 1..{self.window}")
        return tuple(window)

    def universe(self):
        return set(permutations(range(1, self.window + 1)))


class PosetCodeDecoder(Decoder):
    """Windows of ``k-1`` symbols read modulo powers of two as NL poset codes."""

    name = "poset-code"

    def __init__(self, k: int):
        if k < 2:
            raise ValueError("poset-code decoder needs k >= 2")
        self.k = k
        self.window = k - 1

    def decode(self, window):
        # every symbol is the last entry of some window, so it must fit there
        top = 2 ** (self.k - 1)
        if not 0 <= window[-1] < top:
            raise InvalidWindow(f"symbol {window[-1]} outside 0..{top - 1}")
        try:
            return decode_code(window_read(window))
        except CodeError as exc:
            raise InvalidWindow(str(exc)) from exc

    def universe(self):
        return set(enumerate_posets(self.k))


DECODERS = {
    cls.name: cls for cls in (LiteralWord, KSubset, CharacteristicVector, Permutation, PosetCodeDecoder)
}


@dataclass(frozen=True)
class WindowScheme:
    window: int
    stride: int
    decoder: Decoder

    def __post_init__(self):
        if not 1 <= self.stride <= self.window:
            raise ValueError(f"stride must lie in [1, window], got {self.stride}")
        if self.decoder.window is not None and self.decoder.window != self.window:
            raise ValueError(
                f"decoder {self.decoder.name} expects windows of {self.decoder.window}, not {self.window}"
            )


@dataclass
class CycleReport:
    symbol_count: int
    window_count: int
    objects: list[Any] = field(default_factory=list)
    duplicates: list[tuple[int, int]] = field(default_factory=list)
    invalid_windows: list[tuple[int, str]] = field(default_factory=list)
    universe_size: int | None = None
    expected_length: int | None = None
    coverage_complete: bool | None = None
    valid: bool = False

    def to_json(self) -> dict:
        return {
            "symbols": self.symbol_count,
            "windows": self.window_count,
            "duplicates": [list(d) for d in self.duplicates],
            "invalid_windows": [[i, msg] for i, msg in self.invalid_windows],
            "universe_size": self.universe_size,
            "expected_length": self.expected_length,
            "coverage_complete": self.coverage_complete,
            "valid": self.valid,
        }


def expected_length(scheme: WindowScheme, universe_size: int) -> int:
    return scheme.stride * universe_size


def cyclic_windows(symbols: Sequence[int], window: int, stride: int) -> list[tuple[int, ...]]:
    m = len(symbols)
    if m == 0:
        return []
    return [tuple(symbols[(i + t) % m] for t in range(window)) for i in range(0, m, stride)]


def overlap_string(words: Sequence[Sequence[int]], stride: int) -> tuple[int, ...]:
    """Cyclic string of a closed walk of overlapping words: the first ``stride`` letters of each."""
    return tuple(x for w in words for x in w[:stride])


def verify_cycle(symbols: Sequence[int], scheme: WindowScheme) -> CycleReport:
    symbols = tuple(symbols)
    wins = cyclic_windows(symbols, scheme.window, scheme.stride)
    report = CycleReport(symbol_count=len(symbols), window_count=len(wins))
    ok = bool(symbols)
    if len(symbols) % scheme.stride:
        report.invalid_windows.append((-1, f"length {len(symbols)} is not a multiple of stride {scheme.stride}"))
        ok = False
    first_seen: dict[Hashable, int] = {}
    n_dup = n_bad = 0
    for idx, w in enumerate(wins):
        try:
            obj = scheme.decoder.decode(w)
        except InvalidWindow as exc:
            n_bad += 1
            if len(report.invalid_windows) < MAX_REPORTED:
                report.invalid_windows.append((idx, str(exc)))
            report.objects.append(None)
            continue
        report.objects.append(obj)
        if obj in first_seen:
            n_dup += 1
            if len(report.duplicates) < MAX_REPORTED:
                report.duplicates.append((first_seen[obj], idx))
        else:
            first_seen[obj] = idx
    ok = ok and n_dup == 0 and n_bad == 0
    universe = scheme.decoder.universe()
    if universe is not None:
        report.universe_size = len(universe)
        report.expected_length = expected_length(scheme, len(universe))
        report.coverage_complete = set(first_seen) == universe
        ok = ok and report.coverage_complete and len(symbols) == report.expected_length
    report.valid = ok
    return report


def make_decoder(name: str, window: int, params: dict[str, str] | None = None) -> Decoder:
    """Build a decoder from CLI-style string parameters."""
    params = dict(params or {})
    if name == "literal-word":
        alpha = params.get("alphabet")
        return LiteralWord(window, None if alpha is None else parse_symbols(alpha))
    if name == "k-subset-of-n":
        return KSubset(int(params.get("k", window)), int(params["n"]))
    if name == "characteristic-vector":
        return CharacteristicVector(window, int(params["low"]), int(params["high"]))
    if name == "permutation":
        return Permutation(window)
    if name == "poset-code":
        return PosetCodeDecoder(int(params.get("k", window + 1)))
    raise ValueError(f"unknown decoder {name!r}; choose from {sorted(DECODERS)}")

"""On-disk cache of NL poset enumerations, one canonical code per line."""

from __future__ import annotations

import os
from pathlib import Path

from cyclesmith.coding import decode_code, parse_symbols
from cyclesmith.poset import NLPoset, cover_code, enumerate_posets

ENV_VAR = "CYCLESMITH_CACHE"


def cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def _path(root: Path, k: int) -> Path:
    return root / f"nl-{k}.txt"


def cached_posets(k: int, root: Path | None) -> list[NLPoset]:
    """``enumerate_posets(k)``, read from or written to ``root`` when given."""
    if root is None or k < 2:
        return enumerate_posets(k)
    path = _path(root, k)
    if path.exists():
        lines = [ln for ln in path.read_text(encoding="utf-8").splitlines() if ln.strip()]
        return [decode_code(parse_symbols(ln)) for ln in lines]
    posets = enumerate_posets(k)
    root.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("".join(",".join(map(str, cover_code(P))) + "\n" for P in posets), encoding="utf-8")
    tmp.replace(path)
    return posets

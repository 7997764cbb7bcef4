"""Brute-force reference implementations, independent of the package internals."""

from itertools import combinations, product


def nl_relations(k):
    """Every transitively closed subset of {(i, j): 1 <= i < j <= k}."""
    pairs = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    out = []
    for mask in range(1 << len(pairs)):
        rel = {p for b, p in enumerate(pairs) if mask >> b & 1}
        if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
            out.append(frozenset(rel))
    return out


def antichain_count(k, rel):
    total = 0
    for r in range(k + 1):
        for sub in combinations(range(1, k + 1), r):
            if all((a, b) not in rel and (b, a) not in rel for a, b in combinations(sub, 2)):
                total += 1
    return total


def arborescences(n, arcs, root):
    """Count in-arborescences to ``root`` by choosing one out-arc per other vertex."""
    choices = []
    for v in range(n):
        if v == root:
            continue
        outs = [h for t, h in arcs if t == v and h != v]
        if not outs:
            return 0
        choices.append((v, outs))
    total = 0
    for pick in product(*[outs for _, outs in choices]):
        parent = {v: h for (v, _), h in zip(choices, pick)}
        ok = True
        for v in parent:
            seen = set()
            while v != root:
                if v in seen:
                    ok = False
                    break
                seen.add(v)
                v = parent[v]
            if not ok:
                break
        total += ok
    return total


def juggling_sequences(n, b):
    out = []
    for t in product(range(n * b + 1), repeat=n):
        if sum(t) % n == 0 and sum(t) <= n * b and len({(x + i) % n for i, x in enumerate(t)}) == n:
            out.append(t)
    return out


def weight_words(n, k, q):
    return [w for w in product(range(q + 1), repeat=n) if sum(w) == k]

"""Permutations of group elements, stored as image tuples.

A permutation on n points is a tuple p of length n with p[i] = image of i.
Tuples keep permutations hashable so groups of them can live in sets.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

from .errors import MalformedInputError, ResourceLimitError

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(seq: Sequence[int], n: int) -> bool:
    return len(seq) == n and sorted(seq) == list(range(n))


def check_permutation(seq: Sequence[int], n: int) -> Perm:
    if not is_permutation(seq, n):
        raise MalformedInputError(f"not a permutation of {n} points: {list(seq)!r}")
    return tuple(seq)


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Apply q first, then p: compose(p, q)[i] = p[q[i]]."""
    return tuple(p[x] for x in q)


def invert(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_order(p: Sequence[int]) -> int:
    """Multiplicative order of a permutation (lcm of its cycle lengths)."""
    from math import lcm

    seen = [False] * len(p)
    order = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        order = lcm(order, length)
    return order


def cycles_str(p: Sequence[int]) -> str:
    """Cycle notation, fixed points omitted; '()' for the identity."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


def perm_str(p: Sequence[int]) -> str:
    """One-line image array, space separated."""
    return " ".join(map(str, p))


def closure(generators: Iterable[Sequence[int]], n: int, cap: int | None = None) -> set[Perm]:
    """All products of the given permutations (BFS over right multiplication).

    Always contains the identity. Raises ResourceLimitError if the closure
    grows past `cap` elements.
    """
    gens = [tuple(g) for g in generators]
    e = identity_perm(n)
    seen: set[Perm] = {e}
    queue: deque[Perm] = deque([e])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = compose(p, g)
            if q not in seen:
                if cap is not None and len(seen) >= cap:
                    raise ResourceLimitError(
                        f"permutation closure exceeded cap of {cap} elements"
                    )
                seen.add(q)
                queue.append(q)
    return seen

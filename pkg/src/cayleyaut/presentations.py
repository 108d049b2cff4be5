"""Finite group presentations realized as multiplication tables.

A presentation is written `< s1, s2 | s1 s2 s1^-1 s2, ... >` with relators
understood as words equal to the identity. Enumeration is HLT-style coset
enumeration over the trivial subgroup (relator scanning with immediate
deductions, union-find coincidence handling, and table compaction), which
yields the regular representation, i.e. the full multiplication table.

Coset numbering in the result is normalized by breadth-first discovery
order from the identity coset, so outputs are deterministic across runs.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .errors import MalformedInputError, ParseError, ResourceLimitError
from .groups import FiniteGroup

Word = tuple[int, ...]  # letters are column indices: gen i -> 2i, inverse -> 2i+1


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def word_str(self, word: Word) -> str:
        """Render a column word with run-length powers, e.g. 'a^2*b^-1'."""
        parts: list[str] = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.generators[word[i] // 2]
            power = (j - i) * (-1 if word[i] % 2 else 1)
            parts.append(name if power == 1 else f"{name}^{power}")
            i = j
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(self.word_str(w) for w in self.relators)
        return f"< {gens} | {rels} >"


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"-?\d+")


def parse_presentation(text: str) -> Presentation:
    """Parse `< gens | relators >`; raises ParseError with a position."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos] in " \t\r\n":
            pos += 1

    def expect(ch: str):
        nonlocal pos
        skip_ws()
        if pos >= n or text[pos] != ch:
            raise ParseError(f"expected {ch!r}", text, pos)
        pos += 1

    expect("<")
    generators: list[str] = []
    while True:
        skip_ws()
        m = _NAME_RE.match(text, pos)
        if not m:
            raise ParseError("expected generator name", text, pos)
        if m.group() in generators:
            raise ParseError(f"duplicate generator {m.group()!r}", text, pos)
        generators.append(m.group())
        pos = m.end()
        skip_ws()
        if pos < n and text[pos] == ",":
            pos += 1
            continue
        break
    expect("|")
    gen_index = {g: i for i, g in enumerate(generators)}

    relators: list[Word] = []
    skip_ws()
    if pos < n and text[pos] == ">":
        pos += 1
        return Presentation(tuple(generators), ())
    while True:
        word: list[int] = []
        while True:
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
            m = _NAME_RE.match(text, pos)
            if not m:
                break
            name = m.group()
            if name not in gen_index:
                raise ParseError(f"unknown generator {name!r}", text, pos)
            pos = m.end()
            power = 1
            if pos < n and text[pos] == "^":
                pos += 1
                mi = _INT_RE.match(text, pos)
                if not mi:
                    raise ParseError("expected integer power after '^'", text, pos)
                power = int(mi.group())
                pos = mi.end()
            col = 2 * gen_index[name] + (1 if power < 0 else 0)
            word.extend([col] * abs(power))
        if not word:
            raise ParseError("empty relator", text, pos)
        relators.append(tuple(word))
        skip_ws()
        if pos < n and text[pos] == ",":
            pos += 1
            continue
        break
    expect(">")
    skip_ws()
    if pos != n:
        raise ParseError("trailing input after '>'", text, pos)
    return Presentation(tuple(generators), tuple(relators))


@dataclass(frozen=True)
class CosetTable:
    """Closed coset table over the trivial subgroup.

    rows[c][x] is the coset reached from c along column x (generator i is
    column 2i, its inverse column 2i+1); row 0 is the identity coset.
    """

    rows: tuple[tuple[int, ...], ...]
    count: int
    ngens: int


class _Enumerator:
    """HLT coset enumeration with a live-coset cap."""

    def __init__(self, ngens: int, relators: tuple[Word, ...], max_cosets: int):
        self.cols = 2 * ngens
        self.relators = relators
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.cols]
        self.parent: list[int] = [0]
        self.n_live = 1
        self.total_defined = 1

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def _set(self, a: int, x: int, b: int) -> None:
        self.table[a][x] = b
        self.table[b][x ^ 1] = a

    def define(self, a: int, x: int) -> None:
        if self.n_live >= self.max_cosets:
            raise ResourceLimitError(
                f"coset enumeration exceeded {self.max_cosets} live cosets "
                "(group may be infinite or the limit too small)"
            )
        if self.total_defined >= 64 * self.max_cosets + 1024:
            raise ResourceLimitError("coset enumeration is not converging")
        b = len(self.table)
        self.table.append([None] * self.cols)
        self.parent.append(b)
        self.n_live += 1
        self.total_defined += 1
        self._set(a, x, b)

    def _merge(self, a: int, b: int, queue: deque[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.n_live -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        queue: deque[int] = deque()
        self._merge(a, b, queue)
        while queue:
            dead = queue.popleft()
            for x in range(self.cols):
                target = self.table[dead][x]
                if target is None:
                    continue
                if self.table[target][x ^ 1] == dead:
                    self.table[target][x ^ 1] = None
                mu, nu = self.rep(dead), self.rep(target)
                if self.table[mu][x] is not None:
                    self._merge(nu, self.table[mu][x], queue)
                elif self.table[nu][x ^ 1] is not None:
                    self._merge(mu, self.table[nu][x ^ 1], queue)
                else:
                    self._set(mu, x, nu)

    def scan_and_fill(self, alpha: int, word: Word) -> None:
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and self.table[f][word[i]] is not None:
                f = self.table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.table[b][word[j] ^ 1] is not None:
                b = self.table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self._set(f, word[i], b)
                return
            self.define(f, word[i])

    def _sweep(self) -> None:
        alpha = 0
        while alpha < len(self.table):
            if self.parent[alpha] != alpha:
                alpha += 1
                continue
            for rel in self.relators:
                self.scan_and_fill(alpha, rel)
                if self.parent[alpha] != alpha:
                    break
            if self.parent[alpha] == alpha:
                for x in range(self.cols):
                    if self.table[alpha][x] is None:
                        self.define(alpha, x)
            alpha += 1

    def run(self) -> None:
        self._sweep()
        # coincidences can punch holes into rows processed earlier;
        # sweep until the live part of the table is total and stable
        while True:
            live = [c for c in range(len(self.table)) if self.parent[c] == c]
            if all(self.table[c][x] is not None for c in live for x in range(self.cols)):
                break
            self._sweep()

    def compact(self) -> CosetTable:
        start = self.rep(0)
        new_index: dict[int, int] = {start: 0}
        order = [start]
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for x in range(self.cols):
                d = self.rep(self.table[c][x])
                if d not in new_index:
                    new_index[d] = len(order)
                    order.append(d)
                    queue.append(d)
        assert len(order) == self.n_live, "coset table is disconnected"
        rows = tuple(
            tuple(new_index[self.rep(self.table[c][x])] for x in range(self.cols))
            for c in order
        )
        return CosetTable(rows=rows, count=len(order), ngens=self.cols // 2)


def _trace(rows, start: int, word: Word) -> int:
    c = start
    for x in word:
        c = rows[c][x]
    return c


def todd_coxeter(
    pres: Presentation, max_cosets: int = 4096
) -> tuple[FiniteGroup, CosetTable]:
    """Enumerate the group defined by `pres` over the trivial subgroup.

    Returns the group as a full multiplication table (element 0 is the
    identity) together with the closed coset table. Raises
    ResourceLimitError when more than `max_cosets` cosets are needed.
    """
    if max_cosets < 1:
        raise MalformedInputError("max_cosets must be >= 1")
    enum = _Enumerator(len(pres.generators), pres.relators, max_cosets)
    enum.run()
    ctable = enum.compact()
    rows, count = ctable.rows, ctable.count

    for x in range(2 * ctable.ngens):
        if sorted(rows[c][x] for c in range(count)) != list(range(count)):
            raise MalformedInputError("generator action is not a permutation of cosets")
    for c in range(count):
        for rel in pres.relators:
            if _trace(rows, c, rel) != c:
                raise MalformedInputError("closed table fails a relator")

    # BFS words give each coset a canonical expression in the generators;
    # right-multiplying by them turns the coset table into a group table.
    words: list[Word] = [()] * count
    seen = [False] * count
    seen[0] = True
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for x in range(2 * ctable.ngens):
            d = rows[c][x]
            if not seen[d]:
                seen[d] = True
                words[d] = words[c] + (x,)
                queue.append(d)

    table = [[_trace(rows, g, words[h]) for h in range(count)] for g in range(count)]
    names = [pres.word_str(w) for w in words]
    group = FiniteGroup(table, names=names, name=str(pres))
    return group, ctable


def h_group_presentation(n: int) -> Presentation:
    """Generators s1..sn with every pair satisfying si sj si^-1 = sj^-1."""
    gens = tuple(f"s{i}" for i in range(1, n + 1))
    relators = [
        (2 * i, 2 * j, 2 * i + 1, 2 * j)
        for i in range(n)
        for j in range(n)
        if i != j
    ]
    return Presentation(gens, tuple(relators))


def h_group(n: int):
    """The order-2^(n+1) group in which every generator inverts the others.

    Returns (group, generating set) where the generating set is the
    symmetric closure of {s1, ..., sn}.
    """
    from .cayley import make_genset

    if not 2 <= n <= 8:
        raise MalformedInputError("h_group(n) supports 2 <= n <= 8")
    pres = h_group_presentation(n)
    group, ctable = todd_coxeter(pres, max_cosets=max(1024, 2 ** (n + 1) * 16))
    expected = 2 ** (n + 1)
    if group.order != expected:
        raise MalformedInputError(
            f"h_group({n}) enumeration gave order {group.order}, expected {expected}"
        )
    gens = [ctable.rows[0][2 * i] for i in range(n)]
    return group, make_genset(group, gens, symmetrize=True)

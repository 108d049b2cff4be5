"""Finite groups as dense multiplication tables.

Elements are indices 0..order-1; human-readable names are carried alongside.
All construction paths validate the group axioms: Latin-square shape,
identity, inverses, and associativity (exhaustively up to order 512,
by random spot checks above that).
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from collections.abc import Iterable, Sequence

import numpy as np

from .errors import DegenerateInputError, MalformedInputError

ASSOCIATIVITY_EXHAUSTIVE_LIMIT = 512
ASSOCIATIVITY_SAMPLES_PER_ELEMENT = 10


class FiniteGroup:
    """A finite group given by its complete multiplication table.

    table[g][h] is the index of the product g*h. The table is immutable
    (tuple of tuples) and instances are safe to share across threads.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        names: Sequence[str] | None = None,
        name: str = "G",
        rng_seed: int = 0,
    ):
        n = len(table)
        if n == 0:
            raise MalformedInputError("a group needs at least one element")
        arr = np.asarray(table, dtype=np.int64)
        if arr.shape != (n, n):
            raise MalformedInputError(f"table must be {n}x{n}, got {arr.shape}")
        self.order: int = n
        self.name = name
        if names is None:
            names = tuple(str(i) for i in range(n))
        else:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise MalformedInputError("names length does not match group order")
            if len(set(names)) != n:
                raise MalformedInputError("element names must be unique")
        self.names: tuple[str, ...] = names

        self.identity: int = self._find_identity(arr)
        self._check_latin(arr)
        self._inv = self._build_inverses(arr)
        self._check_associativity(arr, rng_seed)

        self.table: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(x) for x in row) for row in arr
        )
        self._name_to_index = {nm: i for i, nm in enumerate(names)}

    # -- validation -----------------------------------------------------

    @staticmethod
    def _find_identity(arr: np.ndarray) -> int:
        n = arr.shape[0]
        idx = np.arange(n)
        for e in range(n):
            if np.array_equal(arr[e], idx) and np.array_equal(arr[:, e], idx):
                return e
        raise MalformedInputError("table has no two-sided identity")

    @staticmethod
    def _check_latin(arr: np.ndarray) -> None:
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise MalformedInputError("table entries out of range")
        idx = np.arange(n)
        if not np.all(np.sort(arr, axis=1) == idx):
            raise MalformedInputError("a table row is not a permutation")
        if not np.all(np.sort(arr, axis=0) == idx[:, None]):
            raise MalformedInputError("a table column is not a permutation")

    def _build_inverses(self, arr: np.ndarray) -> tuple[int, ...]:
        e = self.identity
        inv = [int(np.nonzero(arr[g] == e)[0][0]) for g in range(self.order)]
        for g, h in enumerate(inv):
            if arr[h][g] != e:
                raise MalformedInputError(f"element {g} has no two-sided inverse")
        return tuple(inv)

    def _check_associativity(self, arr: np.ndarray, rng_seed: int) -> None:
        n = self.order
        if n <= ASSOCIATIVITY_EXHAUSTIVE_LIMIT:
            # row-by-row to keep memory at O(n^2):
            # arr[arr[i]] has entries T[T[i,j],k]; arr[i][arr] has T[i,T[j,k]].
            for i in range(n):
                if not np.array_equal(arr[arr[i]], arr[i][arr]):
                    raise MalformedInputError(f"associativity fails in row {i}")
            return
        rng = random.Random(rng_seed)
        for _ in range(ASSOCIATIVITY_SAMPLES_PER_ELEMENT * n):
            i, j, k = (rng.randrange(n) for _ in range(3))
            if arr[arr[i, j], k] != arr[i, arr[j, k]]:
                raise MalformedInputError(f"associativity fails on ({i},{j},{k})")

    # -- arithmetic -----------------------------------------------------

    @property
    def inv_table(self) -> tuple[int, ...]:
        """Inverse of every element, indexed by element."""
        return self._inv

    def _check_element(self, g: int) -> int:
        if not 0 <= g < self.order:
            raise MalformedInputError(
                f"element index {g} out of range for group of order {self.order}"
            )
        return g

    def mul(self, g: int, h: int) -> int:
        return self.table[self._check_element(g)][self._check_element(h)]

    def inv(self, g: int) -> int:
        return self._inv[self._check_element(g)]

    def conjugate(self, x: int, a: int) -> int:
        """x * a * x^-1."""
        return self.table[self.table[x][a]][self._inv[x]]

    def power(self, g: int, k: int) -> int:
        self._check_element(g)
        if k < 0:
            g, k = self._inv[g], -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][g]
        return out

    def element_order(self, g: int) -> int:
        self._check_element(g)
        n = 1
        x = g
        while x != self.identity:
            x = self.table[x][g]
            n += 1
        return n

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(g) for g in range(self.order))

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(
            t[g][h] == t[h][g] for g in range(self.order) for h in range(g + 1, self.order)
        )

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        out = 1
        for k in self.element_orders:
            out = lcm(out, k)
        return out

    def element_by_name(self, name: str) -> int:
        try:
            return self._name_to_index[name]
        except KeyError:
            raise MalformedInputError(
                f"no element named {name!r} in group {self.name}"
            ) from None

    def subgroup_generated(self, gens: Iterable[int]) -> tuple[int, ...]:
        """Closure of the given elements under product and inverse, sorted."""
        gens = [self._check_element(g) for g in gens]
        closed = {self.identity}
        frontier = [self.identity]
        step = gens + [self._inv[g] for g in gens]
        while frontier:
            nxt = []
            for a in frontier:
                row = self.table[a]
                for g in step:
                    b = row[g]
                    if b not in closed:
                        closed.add(b)
                        nxt.append(b)
            frontier = nxt
        return tuple(sorted(closed))

    def equal_table(self, other: "FiniteGroup") -> bool:
        return self.order == other.order and self.table == other.table

    @cached_property
    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(str(self.order).encode())
        for row in self.table:
            h.update(bytes(str(row), "utf-8"))
        h.update("|".join(self.names).encode())
        return h.hexdigest()[:16]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class DicyclicWitness:
    """Structural witness for a generalized dicyclic group.

    a_elements is the abelian index-2 subgroup (sorted element indices),
    x an element outside it of order exactly 4 with x*a*x^-1 = a^-1 for all
    a in the subgroup, and x^2 inside it.
    """

    a_elements: tuple[int, ...]
    x: int

    def validate(self, G: FiniteGroup) -> None:
        A = self.a_elements
        aset = set(A)
        if tuple(sorted(aset)) != A:
            raise MalformedInputError("witness subgroup must be sorted and duplicate-free")
        if 2 * len(A) != G.order:
            raise MalformedInputError("witness subgroup does not have index 2")
        if self.x in aset:
            raise MalformedInputError("witness element x lies inside the subgroup")
        for a in A:
            if G.inv(a) not in aset:
                raise MalformedInputError("witness subgroup not closed under inverse")
            for b in A:
                if G.table[a][b] not in aset:
                    raise MalformedInputError("witness subgroup not closed under product")
                if G.table[a][b] != G.table[b][a]:
                    raise MalformedInputError("witness subgroup is not abelian")
        if G.element_order(self.x) != 4:
            raise MalformedInputError("witness element x must have order exactly 4")
        if G.table[self.x][self.x] not in aset:
            raise MalformedInputError("x^2 must lie in the subgroup")
        for a in A:
            if G.conjugate(self.x, a) != G.inv(a):
                raise MalformedInputError("conjugation by x must invert the subgroup")

    def holds_in(self, G: FiniteGroup) -> bool:
        try:
            self.validate(G)
            return True
        except MalformedInputError:
            return False

    def to_json_dict(self) -> dict:
        return {"a_subgroup": list(self.a_elements), "x": self.x}


# -- constructors -------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    """Z/nZ in additive notation; the trivial group for n = 1."""
    if n < 1:
        raise MalformedInputError(f"cyclic group order must be >= 1, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, names=[str(i) for i in range(n)], name=f"Z/{n}")


def abelian(factors: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups, elements as mixed-radix tuples."""
    factors = list(factors)
    for f in factors:
        if f < 1:
            raise MalformedInputError(f"cyclic factor must be >= 1, got {f}")
    if not factors:
        return FiniteGroup([[0]], names=["()"], name="1")
    tuples = list(itertools.product(*[range(f) for f in factors]))
    index = {t: i for i, t in enumerate(tuples)}
    table = [
        [index[tuple((a + b) % f for a, b, f in zip(u, v, factors))] for v in tuples]
        for u in tuples
    ]
    names = ["(" + ",".join(map(str, t)) + ")" for t in tuples]
    return FiniteGroup(table, names=names, name="x".join(f"Z/{f}" for f in factors))


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Componentwise product; element (g, h) has index g*|H| + h."""
    m = H.order
    table = [
        [G.table[g1][g2] * m + H.table[h1][h2] for g2 in range(G.order) for h2 in range(m)]
        for g1 in range(G.order)
        for h1 in range(m)
    ]
    names = [f"({gn},{hn})" for gn in G.names for hn in H.names]
    return FiniteGroup(table, names=names, name=f"({G.name})x({H.name})")


_Q8_AXIS_PRODUCT = {
    (1, 2): (3, 1), (2, 3): (1, 1), (3, 1): (2, 1),
    (2, 1): (3, -1), (3, 2): (1, -1), (1, 3): (2, -1),
}


def quaternion() -> FiniteGroup:
    """The quaternion group {1,-1,i,-i,j,-j,k,-k} with i^2=j^2=k^2=ijk=-1."""

    # element index = 2*axis + (0 if positive else 1), axes 0:'1' 1:'i' 2:'j' 3:'k'
    def mul(a: int, b: int) -> int:
        ax_a, sg_a = a // 2, 1 - 2 * (a % 2)
        ax_b, sg_b = b // 2, 1 - 2 * (b % 2)
        sign = sg_a * sg_b
        if ax_a == 0:
            axis = ax_b
        elif ax_b == 0:
            axis = ax_a
        elif ax_a == ax_b:
            axis, sign = 0, -sign
        else:
            axis, eps = _Q8_AXIS_PRODUCT[(ax_a, ax_b)]
            sign *= eps
        return 2 * axis + (0 if sign > 0 else 1)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return FiniteGroup(
        table, names=["1", "-1", "i", "-i", "j", "-j", "k", "-k"], name="Q8"
    )


def generalized_dicyclic(A: FiniteGroup, y: int) -> tuple[FiniteGroup, DicyclicWitness]:
    """Group generated by the abelian group A and an element x with x^2 = y,
    x*a*x^-1 = a^-1; elements are pairs (a, eps) = a*x^eps, index a + eps*|A|.

    y must have order 2; A of exponent <= 2 is rejected because the result
    would be abelian, hence not dicyclic.
    """
    if not A.is_abelian:
        raise MalformedInputError("dicyclic construction needs an abelian base group")
    A._check_element(y)
    if A.element_order(y) != 2:
        raise MalformedInputError("x^2 must be an element of order exactly 2")
    if A.exponent <= 2:
        raise DegenerateInputError(
            "base group of exponent <= 2 would give an abelian result"
        )
    m = A.order
    t, inv = A.table, A._inv

    def mul(p: int, q: int) -> int:
        a, ea = p % m, p // m
        b, eb = q % m, q // m
        if ea == 0:
            return t[a][b] + eb * m
        if eb == 0:
            return t[a][inv[b]] + m
        return t[t[a][inv[b]]][y]

    table = [[mul(p, q) for q in range(2 * m)] for p in range(2 * m)]
    names = list(A.names) + [
        "x" if a == A.identity else f"{A.names[a]}x" for a in range(m)
    ]
    G = FiniteGroup(table, names=names, name=f"Dic({A.name}@{y})")
    assert not G.is_abelian
    witness = DicyclicWitness(a_elements=tuple(range(m)), x=A.identity + m)
    witness.validate(G)
    return G, witness


def group_from_permutations(
    perms: Sequence[tuple[int, ...]], names: Sequence[str], name: str
) -> FiniteGroup:
    """Multiplication table of a closed set of permutations under composition."""
    index = {p: i for i, p in enumerate(perms)}
    if len(index) != len(perms):
        raise MalformedInputError("duplicate permutations")
    table = []
    for p in perms:
        row = []
        for q in perms:
            prod = tuple(p[x] for x in q)
            if prod not in index:
                raise MalformedInputError("permutation set is not closed under product")
            row.append(index[prod])
        table.append(row)
    return FiniteGroup(table, names=names, name=name)


def _parity(p: tuple[int, ...]) -> int:
    inversions = sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )
    return inversions % 2


def symmetric(n: int) -> FiniteGroup:
    """The symmetric group on n points (n <= 6 keeps tables reasonable)."""
    if not 1 <= n <= 6:
        raise MalformedInputError("symmetric(n) supports 1 <= n <= 6")
    from .perms import cycles_str

    perms = sorted(itertools.permutations(range(n)))
    names = ["e" if p == tuple(range(n)) else cycles_str(p) for p in perms]
    return group_from_permutations(perms, names, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    """The alternating group on n points."""
    if not 1 <= n <= 6:
        raise MalformedInputError("alternating(n) supports 1 <= n <= 6")
    from .perms import cycles_str

    perms = sorted(p for p in itertools.permutations(range(n)) if _parity(p) == 0)
    names = ["e" if p == tuple(range(n)) else cycles_str(p) for p in perms]
    return group_from_permutations(perms, names, name=f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n (rotations r*, reflections s*)."""
    if n < 1:
        raise MalformedInputError("dihedral(n) needs n >= 1")
    rotations = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    reflections = [tuple((k - i) % n for i in range(n)) for k in range(n)]
    if n <= 2:
        # the permutation action is not faithful for n <= 2; build directly
        # from the presentation semantics (r of order n, s of order 2).
        elems = [("r", k) for k in range(n)] + [("s", k) for k in range(n)]

        def mul(a, b):
            (ta, ka), (tb, kb) = a, b
            if ta == "r" and tb == "r":
                return ("r", (ka + kb) % n)
            if ta == "r" and tb == "s":
                return ("s", (ka + kb) % n)
            if ta == "s" and tb == "r":
                return ("s", (ka - kb) % n)
            return ("r", (ka - kb) % n)

        index = {e: i for i, e in enumerate(elems)}
        table = [[index[mul(a, b)] for b in elems] for a in elems]
        names = [f"{t}{k}" for t, k in elems]
        return FiniteGroup(table, names=names, name=f"D{n}")
    perms = rotations + reflections
    names = [f"r{k}" for k in range(n)] + [f"s{k}" for k in range(n)]
    return group_from_permutations(perms, names, name=f"D{n}")


# -- brute-force isomorphism (small orders only) ------------------------


def _generator_sequence(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    closed = {G.identity}
    while len(closed) < G.order:
        g = min(x for x in range(G.order) if x not in closed)
        gens.append(g)
        closed = set(G.subgroup_generated(gens))
    return gens


def is_isomorphic_bruteforce(G: FiniteGroup, H: FiniteGroup, max_order: int = 64) -> bool:
    """Decide isomorphism by backtracking over generator images.

    Meant for small groups; refuses orders above `max_order`.
    """
    if G.order > max_order or H.order > max_order:
        raise MalformedInputError(
            f"brute-force isomorphism is limited to order <= {max_order}"
        )
    if G.order != H.order:
        return False
    if sorted(G.element_orders) != sorted(H.element_orders):
        return False
    if G.is_abelian != H.is_abelian:
        return False

    gens = _generator_sequence(G)
    n = G.order

    def extend(images: list[int]) -> bool:
        # grow the partial map from the generator images by word closure
        mapping = [-1] * n
        mapping[G.identity] = H.identity
        frontier = [G.identity]
        assigned = 1
        while frontier:
            nxt = []
            for a in frontier:
                for g, img in zip(gens, images):
                    b = G.table[a][g]
                    hb = H.table[mapping[a]][img]
                    if mapping[b] == -1:
                        mapping[b] = hb
                        nxt.append(b)
                        assigned += 1
                    elif mapping[b] != hb:
                        return False
            frontier = nxt
        if assigned != n or len(set(mapping)) != n:
            return False
        return all(
            mapping[G.table[a][b]] == H.table[mapping[a]][mapping[b]]
            for a in range(n)
            for b in range(n)
        )

    candidates = [
        [h for h in range(n) if H.element_order(h) == G.element_order(g)] for g in gens
    ]

    def search(i: int, chosen: list[int]) -> bool:
        if i == len(gens):
            return extend(chosen)
        for h in candidates[i]:
            if search(i + 1, chosen + [h]):
                return True
        return False

    return search(0, [])

"""Validated generating sets, product balls, and Cayley graph construction.

The Cayley graph of (G, S) is simple and undirected: vertices are group
elements, with an edge {g, h} exactly when g^-1 h lies in S. Edges carry a
colour, the inverse-pair class {s, s^-1} of the connecting generator,
canonically keyed by min(s, s^-1) in element-index order.
"""

from __future__ import annotations

import colorsys
import hashlib
import io
from dataclasses import dataclass
from collections.abc import Iterable

from .errors import DegenerateInputError, MalformedInputError, NotGeneratingError
from .groups import FiniteGroup


@dataclass(frozen=True)
class GeneratingSet:
    """A symmetric, identity-free subset of a group that generates it."""

    group: FiniteGroup
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in set(self.elements)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.group.names[s] for s in self.elements)

    def colour_keys(self) -> tuple[int, ...]:
        """Canonical keys of the inverse-pair colour classes, sorted."""
        inv = self.group.inv_table
        return tuple(sorted({min(s, inv[s]) for s in self.elements}))

    def is_subset_of(self, other: "GeneratingSet") -> bool:
        return self.group is other.group and set(self.elements) <= set(other.elements)


def make_genset(
    G: FiniteGroup, elems: Iterable[int], symmetrize: bool = False
) -> GeneratingSet:
    """Validate (and optionally symmetrize) a generating set.

    Without `symmetrize`, the input must already be symmetric and must not
    contain the identity. Non-generating sets raise NotGeneratingError
    naming the order of the subgroup they do generate.
    """
    elems = [G._check_element(g) for g in elems]
    chosen = set(elems)
    if symmetrize:
        chosen.discard(G.identity)
        chosen |= {G.inv_table[s] for s in chosen}
    else:
        if G.identity in chosen:
            raise MalformedInputError("generating set must not contain the identity")
        for s in chosen:
            if G.inv_table[s] not in chosen:
                raise MalformedInputError(
                    f"set is not symmetric: inverse of {G.names[s]} is missing"
                )
    generated = G.subgroup_generated(chosen)
    if len(generated) != G.order:
        raise NotGeneratingError(len(generated), G.order)
    return GeneratingSet(group=G, elements=tuple(sorted(chosen)))


def full_genset(G: FiniteGroup) -> GeneratingSet:
    """All non-identity elements of G."""
    if G.order < 2:
        raise DegenerateInputError("the trivial group has no generating set")
    return GeneratingSet(
        group=G, elements=tuple(g for g in range(G.order) if g != G.identity)
    )


def ball(S: GeneratingSet, k: int) -> GeneratingSet:
    """All products of at most k elements of S, minus the identity.

    Expansion stops early once the set stabilizes, so large k is cheap.
    """
    if k < 1:
        raise MalformedInputError("ball radius must be >= 1")
    G = S.group
    table = G.table
    current = set(S.elements) | {G.identity}
    for _ in range(k - 1):
        grown = set(current)
        for b in current:
            row = table[b]
            for s in S.elements:
                grown.add(row[s])
        if grown == current:
            break
        current = grown
    current.discard(G.identity)
    return GeneratingSet(group=G, elements=tuple(sorted(current)))


def ball_saturation_radius(S: GeneratingSet, cap: int = 64) -> int:
    """Smallest k with ball(S, k) equal to all non-identity elements."""
    G = S.group
    target = G.order - 1
    for k in range(1, cap + 1):
        if len(ball(S, k)) == target:
            return k
    raise MalformedInputError(f"ball did not saturate within radius {cap}")


class CayleyGraph:
    """Cayley graph of a validated generating set, with edge colours."""

    def __init__(self, genset: GeneratingSet):
        G = genset.group
        n = G.order
        inv = G.inv_table
        self.group = G
        self.genset = genset
        adjacency = []
        edge_colour: dict[tuple[int, int], int] = {}
        for g in range(n):
            row = G.table[g]
            nbrs = sorted({row[s] for s in genset.elements})
            adjacency.append(tuple(nbrs))
            for s in genset.elements:
                edge_colour[(g, row[s])] = min(s, inv[s])
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(adjacency)
        self.edge_colour = edge_colour
        self.colour_keys: tuple[int, ...] = genset.colour_keys()

    @property
    def n_vertices(self) -> int:
        return self.group.order

    @property
    def degree(self) -> int:
        return len(self.genset.elements)

    def edges(self) -> list[tuple[int, int, int]]:
        """Unordered edges as (u, v, colour_key) with u < v, sorted."""
        out = []
        for (g, h), key in self.edge_colour.items():
            if g < h:
                out.append((g, h, key))
        return sorted(out)

    @property
    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(self.group.digest.encode())
        h.update(str(self.genset.elements).encode())
        return h.hexdigest()[:16]

    def colour_name(self, key: int) -> str:
        inv = self.group.inv_table[key]
        names = self.group.names
        if inv == key:
            return f"{{{names[key]}}}"
        return f"{{{names[key]},{names[inv]}}}"

    def to_dot(self) -> str:
        """GraphViz DOT with one colour per inverse-pair class."""
        palette = _palette(len(self.colour_keys))
        colour_of = {key: palette[i] for i, key in enumerate(self.colour_keys)}
        out = io.StringIO()
        out.write("graph cayley {\n")
        out.write("  node [shape=circle];\n")
        for v in range(self.n_vertices):
            out.write(f'  {v} [label="{self.group.names[v]}"];\n')
        for u, v, key in self.edges():
            out.write(
                f'  {u} -- {v} [color="{colour_of[key]}", '
                f'tooltip="{self.colour_name(key)}"];\n'
            )
        out.write("}\n")
        return out.getvalue()

    def to_adjacency_csv(self) -> str:
        """Edge list CSV: columns source,target,colour (one row per edge)."""
        lines = ["source,target,colour"]
        for u, v, key in self.edges():
            lines.append(f"{u},{v},{self.colour_name(key)}")
        return "\n".join(lines) + "\n"


def _palette(k: int) -> list[str]:
    out = []
    for i in range(max(k, 1)):
        r, g, b = colorsys.hsv_to_rgb(i / max(k, 1), 0.85, 0.80)
        out.append(f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}")
    return out


def build_graph(S: GeneratingSet) -> CayleyGraph:
    return CayleyGraph(S)

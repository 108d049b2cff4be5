"""The three automorphism groups of a Cayley graph.

* labelled automorphisms (phi(gs) = phi(g)s): exactly the left translations;
* colour-preserving automorphisms (phi(gs) in {phi(g)s, phi(g)s^-1}):
  computed through their stabilizer of the identity vertex by a depth-first
  search over per-vertex sign choices with forward constraint propagation;
* full graph automorphisms of the uncoloured graph: individualization plus
  equitable-partition refinement, with the order obtained from the orbit
  sizes along the discovered stabilizer chain.

Searches are deterministic: generators are explored in ascending colour
order with the positive representative before its inverse, and element
lists are reported in lexicographic order of the image arrays.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from collections.abc import Iterable, Sequence

from .cayley import CayleyGraph, GeneratingSet, build_graph, full_genset
from .errors import MalformedInputError, ResourceLimitError
from .groups import DicyclicWitness, FiniteGroup, quaternion
from .perms import Perm, check_permutation, closure, compose, identity_perm

log = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 5_000_000
DEFAULT_EXPLICIT_CAP = 10_000
DEFAULT_VERTEX_CAP = 64


@dataclass(frozen=True)
class Stabilizer:
    """All colour-preserving automorphisms fixing the identity vertex."""

    graph_digest: str
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Sequence[int]) -> bool:
        return tuple(p) in set(self.elements)

    def to_json_dict(self) -> dict:
        return {
            "kind": "colour-stabilizer",
            "order": self.order,
            "elements": [list(p) for p in self.elements],
            "base_graph_digest": self.graph_digest,
        }


@dataclass(frozen=True)
class AutGroup:
    """An automorphism group of a Cayley graph.

    Elements are stored explicitly when the order fits under the explicit
    cap; otherwise only generators and the exact order are kept (complete
    graphs make the full group factorially large).
    """

    kind: str  # "labelled" | "colour" | "full"
    order: int
    graph_digest: str
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...] | None

    def has_element(self, p: Sequence[int]) -> bool:
        if self.elements is None:
            raise MalformedInputError(
                "membership test needs explicit elements (order above the cap)"
            )
        return tuple(p) in set(self.elements)

    def to_json_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "order": self.order,
            "base_graph_digest": self.graph_digest,
        }
        if self.elements is not None:
            out["elements"] = [list(p) for p in self.elements]
        else:
            out["generators"] = [list(p) for p in self.generators]
        return out


# -- labelled automorphisms ---------------------------------------------


def left_translation(G: FiniteGroup, h: int) -> Perm:
    """The permutation g -> h*g."""
    row = G.table[h]
    return tuple(row[g] for g in range(G.order))


def left_translations(graph: CayleyGraph) -> AutGroup:
    """The left regular representation; these are all labelled automorphisms."""
    G = graph.group
    elems = tuple(sorted(left_translation(G, h) for h in range(G.order)))
    return AutGroup(
        kind="labelled",
        order=G.order,
        graph_digest=graph.digest,
        generators=elems,
        elements=elems,
    )


# -- colour-preserving stabilizer ---------------------------------------


def colour_stabilizer(
    graph: CayleyGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> Stabilizer:
    """Enumerate every permutation phi with phi(1) = 1 and
    phi(g s) in {phi(g) s, phi(g) s^-1} for all g and all s in S.

    The search walks a BFS spanning tree from the identity vertex; the tree
    edge into each vertex leaves at most two candidate images (the two signs
    of its generator), and every non-tree edge to an earlier vertex becomes
    a pruning constraint.
    """
    G = graph.group
    n = G.order
    if n == 1:
        return Stabilizer(graph.digest, (identity_perm(1),))
    table = G.table
    inv = G.inv_table
    e = G.identity
    S = graph.genset.elements

    gen_seq: list[int] = []
    for key in graph.colour_keys:
        gen_seq.append(key)
        if inv[key] != key:
            gen_seq.append(inv[key])

    # BFS spanning tree from the identity vertex
    order_list = [e]
    pos = [-1] * n
    pos[e] = 0
    tree: list[tuple[int, int] | None] = [None] * n
    qi = 0
    while qi < len(order_list):
        g = order_list[qi]
        qi += 1
        row = table[g]
        for s in gen_seq:
            h = row[s]
            if pos[h] == -1:
                pos[h] = len(order_list)
                tree[h] = (g, s)
                order_list.append(h)
    assert len(order_list) == n, "generating set does not connect the graph"

    # edges into already-placed vertices, grouped by the later endpoint
    constraints: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for v in range(n):
        if v == e:
            continue
        pv = pos[v]
        for s in S:
            u = table[v][inv[s]]  # u * s = v
            if pos[u] < pv:
                constraints[pv].append((u, s, inv[s]))

    parent_at: list[tuple[int, int, int] | None] = [None] * n
    for v in range(n):
        if v != e:
            p, s = tree[v]
            parent_at[pos[v]] = (p, s, inv[s])

    images = [-1] * n
    used = [False] * n
    images[e] = e
    used[e] = True

    sols: list[Perm] = []
    nodes = 0
    cands_at: list[tuple[int, ...]] = [()] * n
    idx_at = [0] * n

    def candidates(pv: int) -> tuple[int, ...]:
        p, s, si = parent_at[pv]
        row = table[images[p]]
        a, b = row[s], row[si]
        return (a,) if a == b else (a, b)

    pv = 1
    cands_at[1] = candidates(1)
    idx_at[1] = 0
    while pv >= 1:
        if pv == n:
            sols.append(tuple(images))
            pv -= 1
        v = order_list[pv]
        if images[v] != -1:
            used[images[v]] = False
            images[v] = -1
        placed = False
        while idx_at[pv] < len(cands_at[pv]):
            c = cands_at[pv][idx_at[pv]]
            idx_at[pv] += 1
            if used[c]:
                continue
            ok = True
            for u, s, si in constraints[pv]:
                row = table[images[u]]
                if row[s] != c and row[si] != c:
                    ok = False
                    break
            if not ok:
                continue
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError(
                    f"colour stabilizer search exceeded {node_budget} nodes"
                )
            images[v] = c
            used[c] = True
            placed = True
            break
        if placed:
            pv += 1
            if pv < n:
                cands_at[pv] = candidates(pv)
                idx_at[pv] = 0
        else:
            pv -= 1

    sols.sort()
    return Stabilizer(graph_digest=graph.digest, elements=tuple(sols))


def full_colour_stabilizer(
    G: FiniteGroup, node_budget: int = DEFAULT_NODE_BUDGET
) -> Stabilizer:
    """Colour stabilizer over the full generating set (all of G minus 1)."""
    return colour_stabilizer(build_graph(full_genset(G)), node_budget=node_budget)


def colour_aut_group(
    graph: CayleyGraph,
    explicit_cap: int = DEFAULT_EXPLICIT_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> AutGroup:
    """The whole colour-preserving group: translations composed with the
    identity-vertex stabilizer."""
    G = graph.group
    stab = colour_stabilizer(graph, node_budget=node_budget)
    order = G.order * stab.order
    trans = [left_translation(G, h) for h in range(G.order)]
    gens = tuple(sorted(set(trans) | set(stab.elements)))
    elements = None
    if order <= explicit_cap:
        elems = {compose(t, p) for t in trans for p in stab.elements}
        assert len(elems) == order, "translation/stabilizer product is not free"
        elements = tuple(sorted(elems))
    return AutGroup(
        kind="colour",
        order=order,
        graph_digest=graph.digest,
        generators=gens,
        elements=elements,
    )


# -- full automorphism group of the uncoloured graph ---------------------


def _neighbour_signature(adjacency, colours, v):
    return tuple(sorted(colours[u] for u in adjacency[v]))


def _refine(adjacency, colours: Sequence[int]) -> list[int]:
    """Equitable refinement: split classes by neighbour colour multisets."""
    col = list(colours)
    n = len(col)
    while True:
        sigs = [(col[v], _neighbour_signature(adjacency, col, v)) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[sigs[v]] for v in range(n)]
        if len(set(new)) == len(set(col)):
            return new
        col = new


def _refine_pair(adjacency, src: Sequence[int], tgt: Sequence[int]):
    """Refine two colourings in lockstep; None if their histograms diverge."""
    src, tgt = list(src), list(tgt)
    n = len(src)
    while True:
        ssigs = [(src[v], _neighbour_signature(adjacency, src, v)) for v in range(n)]
        tsigs = [(tgt[v], _neighbour_signature(adjacency, tgt, v)) for v in range(n)]
        if sorted(ssigs) != sorted(tsigs):
            return None
        ranks = {s: i for i, s in enumerate(sorted(set(ssigs) | set(tsigs)))}
        nsrc = [ranks[x] for x in ssigs]
        ntgt = [ranks[x] for x in tsigs]
        if len(set(nsrc)) == len(set(src)):
            return nsrc, ntgt
        src, tgt = nsrc, ntgt


def _find_mapping(adj_bits: list[int], src_col, tgt_col) -> Perm | None:
    """One colour- and adjacency-consistent bijection, or None."""
    n = len(adj_bits)
    full = (1 << n) - 1
    cand = []
    for v in range(n):
        m = 0
        for u in range(n):
            if tgt_col[u] == src_col[v]:
                m |= 1 << u
        if m == 0:
            return None
        cand.append(m)
    images = [-1] * n

    def search(cand: list[int], remaining: frozenset[int]) -> bool:
        if not remaining:
            return True
        v = min(remaining, key=lambda w: cand[w].bit_count())
        m = cand[v]
        rest = remaining - {v}
        while m:
            bit = m & -m
            m ^= bit
            u = bit.bit_length() - 1
            images[v] = u
            ncand = list(cand)
            ok = True
            for w in rest:
                if (adj_bits[v] >> w) & 1:
                    nm = ncand[w] & adj_bits[u]
                else:
                    nm = ncand[w] & (full ^ adj_bits[u])
                nm &= ~bit
                if nm == 0:
                    ok = False
                    break
                ncand[w] = nm
            if ok and search(ncand, rest):
                return True
        images[v] = -1
        return False

    if search(cand, frozenset(range(n))):
        return tuple(images)
    return None


def _automorphism_extending(adjacency, adj_bits, fixed: list[int], b: int, c: int):
    n = len(adj_bits)
    src = [0] * n
    tgt = [0] * n
    for i, f in enumerate(fixed):
        src[f] = i + 1
        tgt[f] = i + 1
    src[b] = len(fixed) + 1
    tgt[c] = len(fixed) + 1
    refined = _refine_pair(adjacency, src, tgt)
    if refined is None:
        return None
    return _find_mapping(adj_bits, refined[0], refined[1])


def _orbit(start: int, perms: Iterable[Perm]) -> set[int]:
    perms = list(perms)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for p in perms:
            y = p[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def full_aut(
    graph: CayleyGraph,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    explicit_cap: int = DEFAULT_EXPLICIT_CAP,
) -> AutGroup:
    """Exact automorphism group of the uncoloured Cayley graph.

    The order is the product of the orbit sizes along a stabilizer chain:
    fix a vertex in a non-singleton refinement cell, enumerate its orbit
    under the current stabilizer (one individualization-refinement search
    per candidate image), multiply, and recurse on the point stabilizer.
    """
    n = graph.n_vertices
    if n > vertex_cap:
        raise ResourceLimitError(
            f"graph has {n} vertices, above the cap of {vertex_cap}"
        )
    adjacency = graph.adjacency
    adj_bits = [sum(1 << u for u in nbrs) for nbrs in adjacency]

    order = 1
    generators: list[Perm] = []
    fixed: list[int] = []
    while True:
        init = [0] * n
        for i, f in enumerate(fixed):
            init[f] = i + 1
        colours = _refine(adjacency, init)
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colours[v], []).append(v)
        target = None
        for v in range(n):
            if len(cells[colours[v]]) >= 2:
                target = cells[colours[v]]
                break
        if target is None:
            break
        b = target[0]
        orbit = {b}
        level_gens: list[Perm] = []
        for c in target[1:]:
            if c in orbit:
                continue
            perm = _automorphism_extending(adjacency, adj_bits, fixed, b, c)
            if perm is None:
                continue
            generators.append(perm)
            level_gens.append(perm)
            orbit = _orbit(b, level_gens)
        order *= len(orbit)
        fixed.append(b)

    elements = None
    if order <= explicit_cap:
        elems = closure(generators, n, cap=explicit_cap + 1)
        assert len(elems) == order, "closure disagrees with orbit-chain order"
        elements = tuple(sorted(elems))
    return AutGroup(
        kind="full",
        order=order,
        graph_digest=graph.digest,
        generators=tuple(generators) if generators else (identity_perm(n),),
        elements=elements,
    )


# -- named maps and membership checks -----------------------------------


def inversion_map(G: FiniteGroup) -> Perm:
    """g -> g^-1; an involution fixing the identity."""
    return tuple(G.inv_table)


def coset_inversion_map(G: FiniteGroup, witness: DicyclicWitness) -> Perm:
    """Identity on the witness subgroup, inversion on its other coset."""
    witness.validate(G)
    inside = set(witness.a_elements)
    return tuple(g if g in inside else G.inv_table[g] for g in range(G.order))


_CANONICAL_Q8_NAMES = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def _require_quaternion(Q: FiniteGroup) -> None:
    if Q.names != _CANONICAL_Q8_NAMES or not Q.equal_table(quaternion()):
        raise MalformedInputError("this map is only defined on the named quaternion group")


def sign_flip_map(Q: FiniteGroup, eps: tuple[int, int, int]) -> Perm:
    """Fix +-1 and send +-x to +-x^eps_x for each axis x in {i, j, k}."""
    _require_quaternion(Q)
    if any(e not in (1, -1) for e in eps) or len(eps) != 3:
        raise MalformedInputError("eps must be a triple of +-1")
    images = [0, 1]
    for axis, e in enumerate(eps):
        base = 2 * (axis + 1)
        if e == 1:
            images += [base, base + 1]
        else:
            images += [base + 1, base]
    return tuple(images)


def sign_flip_maps(Q: FiniteGroup) -> tuple[Perm, ...]:
    """The eight sign-flip maps; they form an elementary abelian group."""
    import itertools

    return tuple(
        sign_flip_map(Q, eps) for eps in itertools.product((1, -1), repeat=3)
    )


def is_colour_automorphism(graph: CayleyGraph, p: Sequence[int]) -> bool:
    """Does p satisfy p(gs) in {p(g)s, p(g)s^-1} for all g, s?"""
    G = graph.group
    n = G.order
    p = check_permutation(p, n)
    table = G.table
    inv = G.inv_table
    for g in range(n):
        row = table[g]
        pg_row = table[p[g]]
        for s in graph.genset.elements:
            img = p[row[s]]
            if img != pg_row[s] and img != pg_row[inv[s]]:
                return False
    return True


def is_labelled_automorphism(graph: CayleyGraph, p: Sequence[int]) -> bool:
    """Does p satisfy p(gs) = p(g)s for all g, s?"""
    G = graph.group
    p = check_permutation(p, G.order)
    table = G.table
    for g in range(G.order):
        row = table[g]
        pg_row = table[p[g]]
        for s in graph.genset.elements:
            if p[row[s]] != pg_row[s]:
                return False
    return True


def is_graph_automorphism(graph: CayleyGraph, p: Sequence[int]) -> bool:
    """Does p preserve adjacency of the uncoloured graph?"""
    p = check_permutation(p, graph.n_vertices)
    adj = graph.adjacency
    for u in range(graph.n_vertices):
        mapped = sorted(p[v] for v in adj[u])
        if mapped != list(adj[p[u]]):
            return False
    return True


def check_propagation(
    graph_T: CayleyGraph,
    S: GeneratingSet,
    S0: Iterable[int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> bool:
    """Propagation check for identity-forcing subsets.

    Premise: every colour stabilizer element of the larger set T that fixes
    S0 pointwise also fixes S and S*S0 pointwise. Conclusion: every such
    element is the identity. Returns premise AND conclusion, logging which
    half failed.
    """
    T = graph_T.genset
    if not S.is_subset_of(T):
        raise MalformedInputError("S must be a subset of the genset of graph_T")
    G = graph_T.group
    S0 = [G._check_element(a) for a in S0]
    stab = colour_stabilizer(graph_T, node_budget=node_budget)
    fixers = [p for p in stab.elements if all(p[a] == a for a in S0)]
    targets = set(S.elements) | {G.table[s][a] for s in S.elements for a in S0}
    premise = all(p[t] == t for p in fixers for t in targets)
    ident = identity_perm(G.order)
    conclusion = all(p == ident for p in fixers)
    if not premise:
        log.info("propagation premise fails: a stabilizer element fixing S0 moves S u S*S0")
    elif not conclusion:
        log.warning("propagation conclusion fails despite premise holding")
    return premise and conclusion

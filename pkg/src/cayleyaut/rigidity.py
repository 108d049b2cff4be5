"""Cayley-index searches, radius-bound verification, and the pinned
optimality example families.

The Cayley index of (G, S) is [Aut(graph) : G] for the uncoloured graph;
the colour index is the same ratio for the colour-preserving group, which
equals the order of the identity-vertex stabilizer. The searcher minimizes
the Cayley index over symmetric generating sets, enumerating subsets of
inverse-pair classes (exhaustively for small groups, seeded sampling above).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from collections.abc import Callable

from .autsearch import (
    colour_stabilizer,
    full_aut,
    full_colour_stabilizer,
    identity_perm,
    inversion_map,
    is_colour_automorphism,
)
from .cayley import GeneratingSet, ball, build_graph, make_genset
from .classify import StructureCase, classify, predicted_stabilizer
from .errors import MalformedInputError
from .groups import (
    FiniteGroup,
    abelian,
    cyclic,
    direct_product,
    is_isomorphic_bruteforce,
    quaternion,
)
from .perms import Perm

DEFAULT_SEARCH_BUDGET = 100_000


@dataclass(frozen=True)
class IndexReport:
    group_digest: str
    group_name: str
    genset: tuple[int, ...]
    genset_names: tuple[str, ...]
    full_aut_order: int
    colour_aut_order: int
    cayley_index: int
    colour_index: int

    def to_json_dict(self) -> dict:
        return {
            "group": self.group_name,
            "group_digest": self.group_digest,
            "genset": list(self.genset_names),
            "set_size": len(self.genset),
            "full_aut_order": self.full_aut_order,
            "colour_aut_order": self.colour_aut_order,
            "cayley_index": self.cayley_index,
            "colour_index": self.colour_index,
        }


@dataclass(frozen=True)
class SearchResult:
    best_index: int
    witness_genset: tuple[int, ...]
    witness_names: tuple[str, ...]
    exhaustive: bool
    sets_examined: int
    seed: int | None = None

    def to_json_dict(self) -> dict:
        out = {
            "best_index": self.best_index,
            "witness_genset": list(self.witness_names),
            "exhaustive": self.exhaustive,
            "sets_examined": self.sets_examined,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def index_of(S: GeneratingSet, vertex_cap: int = 64, explicit_cap: int = 10_000) -> IndexReport:
    """Exact Cayley and colour indices for one generating set."""
    G = S.group
    graph = build_graph(S)
    aut = full_aut(graph, vertex_cap=vertex_cap, explicit_cap=explicit_cap)
    stab = colour_stabilizer(graph)
    colour_order = G.order * stab.order
    if aut.order % G.order != 0 or colour_order > aut.order:
        raise MalformedInputError(
            "automorphism search violated the translation-containment invariant"
        )
    return IndexReport(
        group_digest=G.digest,
        group_name=G.name,
        genset=S.elements,
        genset_names=S.names,
        full_aut_order=aut.order,
        colour_aut_order=colour_order,
        cayley_index=aut.order // G.order,
        colour_index=stab.order,
    )


def _inverse_pair_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    inv = G.inv_table
    keys = sorted({min(g, inv[g]) for g in range(G.order) if g != G.identity})
    return [tuple(sorted({k, inv[k]})) for k in keys]


def cayley_index_search(
    G: FiniteGroup,
    budget: int = DEFAULT_SEARCH_BUDGET,
    exhaustive: bool | None = None,
    seed: int = 0,
    vertex_cap: int = 64,
) -> SearchResult:
    """Minimal observed Cayley index over symmetric generating sets.

    Exhaustive mode (groups of order <= 16) walks inverse-pair subsets in
    ascending bitmask order; larger groups draw seeded random subsets
    biased toward small size. Non-generating subsets are skipped before any
    graph is built. Ties keep the first witness in enumeration order.
    """
    if exhaustive is None:
        exhaustive = G.order <= 16
    if exhaustive and G.order > 16:
        raise MalformedInputError("exhaustive search is limited to order <= 16")
    classes = _inverse_pair_classes(G)
    m = len(classes)

    best: tuple[int, GeneratingSet] | None = None
    examined = 0
    complete = True

    def consider(mask: int) -> None:
        nonlocal best, examined
        elems: list[int] = []
        for i in range(m):
            if mask >> i & 1:
                elems.extend(classes[i])
        if len(G.subgroup_generated(elems)) != G.order:
            return
        S = GeneratingSet(group=G, elements=tuple(sorted(elems)))
        report = index_of(S, vertex_cap=vertex_cap)
        examined += 1
        if best is None or report.cayley_index < best[0]:
            best = (report.cayley_index, S)

    if exhaustive:
        for mask in range(1, 1 << m):
            if examined >= budget:
                complete = False
                break
            consider(mask)
        used_seed = None
    else:
        complete = False
        rng = random.Random(seed)
        weights = [2.0 ** (-c) for c in range(1, m + 1)]
        seen: set[int] = set()
        attempts = 0
        while examined < budget and attempts < 50 * budget:
            attempts += 1
            size = rng.choices(range(1, m + 1), weights=weights)[0]
            chosen = rng.sample(range(m), k=size)
            mask = sum(1 << i for i in chosen)
            if mask in seen:
                continue
            seen.add(mask)
            consider(mask)
        used_seed = seed

    if best is None:
        raise MalformedInputError("no generating subset was found within the budget")
    return SearchResult(
        best_index=best[0],
        witness_genset=best[1].elements,
        witness_names=best[1].names,
        exhaustive=complete and exhaustive,
        sets_examined=examined,
        seed=used_seed,
    )


# -- radius-bound verification -------------------------------------------


_CASE_RADIUS = {
    StructureCase.BOOLEAN: 1,
    StructureCase.ABELIAN_ORDER_GE3: 2,
    StructureCase.Q8_TIMES_BOOLEAN: 3,
    StructureCase.OTHER_GENERALIZED_DICYCLIC: 3,
    StructureCase.NEITHER: 3,
}


@dataclass(frozen=True)
class QuantitativeReport:
    group_name: str
    group_digest: str
    case: StructureCase
    radius: int
    ball_stab_order: int
    full_stab_order: int
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "group": self.group_name,
            "group_digest": self.group_digest,
            "case": self.case.value,
            "radius": self.radius,
            "ball_stabilizer_order": self.ball_stab_order,
            "full_stabilizer_order": self.full_stab_order,
            "pass": self.passed,
        }


def verify_quantitative(G: FiniteGroup, S: GeneratingSet) -> QuantitativeReport:
    """Check that the stabilizer over the case radius ball equals the
    stabilizer over the full generating set, as sets of permutations."""
    cls = classify(G)
    k = _CASE_RADIUS[cls.case]
    ball_stab = colour_stabilizer(build_graph(ball(S, k)))
    full_stab = full_colour_stabilizer(G)
    return QuantitativeReport(
        group_name=G.name,
        group_digest=G.digest,
        case=cls.case,
        radius=k,
        ball_stab_order=ball_stab.order,
        full_stab_order=full_stab.order,
        passed=ball_stab.elements == full_stab.elements,
    )


# -- optimality example families ------------------------------------------


@dataclass(frozen=True)
class ExampleReport:
    name: str
    checks: dict[str, bool]
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "checks": dict(self.checks),
            "pass": self.passed,
            "details": dict(self.details),
        }


def optimality_example_product(m: int, n: int) -> ExampleReport:
    """Z/m x Z/n with coordinate generators: the radius-1 stabilizer keeps
    the two per-factor inversions, so radius 1 cannot replace radius 2 in
    the abelian bound."""
    if m < 3 or n < 3:
        raise MalformedInputError("both factors need an element of order >= 3")
    G = direct_product(cyclic(m), cyclic(n))
    e1 = G.element_by_name("(1,0)")
    e2 = G.element_by_name("(0,1)")
    S = make_genset(G, [e1, e2], symmetrize=True)
    stab = colour_stabilizer(build_graph(S))
    eta = inversion_map(G)
    eta1 = tuple(((m - a) % m) * n + b for a in range(m) for b in range(n))
    eta2 = tuple(a * n + (n - b) % n for a in range(m) for b in range(n))
    four = (identity_perm(G.order), eta, eta1, eta2)
    stab2 = colour_stabilizer(build_graph(ball(S, 2)))
    checks = {
        "four_maps_pairwise_distinct": len(set(four)) == 4,
        "four_maps_in_radius1_stabilizer": all(p in stab for p in four),
        "radius1_stabilizer_at_least_4": stab.order >= 4,
        "radius2_stabilizer_order_2": stab2.order == 2,
    }
    return ExampleReport(
        name=f"product:{m},{n}",
        checks=checks,
        details={"radius1_order": stab.order, "radius2_order": stab2.order},
    )


def q8_boolean_family(n: int) -> tuple[FiniteGroup, GeneratingSet]:
    """Q8 x (Z/2)^n with the twisted generating set: the six order-4
    quaternion units paired with the first Z/2 coordinate set to 1, plus
    (for n >= 2) the remaining coordinate vectors."""
    if not 1 <= n <= 4:
        raise MalformedInputError("the family is built for 1 <= n <= 4")
    G = direct_product(quaternion(), abelian([2] * n))
    two = 2**n
    eps_bit = 2 ** (n - 1)  # first coordinate of the Boolean part
    elems = [q * two + eps_bit for q in (2, 3, 4, 5, 6, 7)]
    elems += [z for z in range(1, eps_bit)]  # (1, 0, z), z nonzero
    return G, make_genset(G, elems)


def _mixed_sign_map(G: FiniteGroup, n: int) -> Perm:
    """Identity on the even fibre of the first Boolean coordinate,
    quaternion inversion on the odd fibre, identity elsewhere."""
    two = 2**n
    eps_bit = 2 ** (n - 1)
    q_inv = quaternion().inv_table
    images = []
    for g in range(G.order):
        q, z = divmod(g, two)
        if z & eps_bit:
            q = q_inv[q]
        images.append(q * two + z)
    return tuple(images)


def optimality_example_q8(n: int) -> ExampleReport:
    """The mixed sign map lies in the radius-2 stabilizer but not in the
    full-colour stabilizer, so radius 2 cannot replace radius 3 in the
    quaternion-times-Boolean bound."""
    G, S = q8_boolean_family(n)
    phi = _mixed_sign_map(G, n)
    graph_full = build_graph(ball(S, 64))  # saturates to all non-identity elements
    graph2 = build_graph(ball(S, 2))
    stab2 = colour_stabilizer(graph2)
    checks = {
        "mixed_map_fixes_identity": phi[G.identity] == G.identity,
        "mixed_map_in_radius2_stabilizer": phi in stab2,
        "mixed_map_not_in_full_stabilizer": not is_colour_automorphism(graph_full, phi),
        "radius2_stabilizer_exceeds_8": stab2.order > 8,
    }
    details: dict = {"radius2_order": stab2.order}
    if n == 1:
        stab3 = colour_stabilizer(build_graph(ball(S, 3)))
        checks["mixed_map_not_in_radius3_stabilizer"] = phi not in stab3
        details["radius3_order"] = stab3.order
    return ExampleReport(name=f"q8:{n}", checks=checks, details=details)


def optimality_example_h(n: int) -> ExampleReport:
    """The pairwise-inverting family: inversion lives in every radius-2
    stabilizer, while the radius-3 stabilizer is already minimal."""
    from .presentations import h_group

    if not 2 <= n <= 6:
        raise MalformedInputError("the family is built for 2 <= n <= 6")
    G, S = h_group(n)
    eta = inversion_map(G)
    graph2 = build_graph(ball(S, 2))
    checks = {
        "inversion_in_radius2_stabilizer": eta[G.identity] == G.identity
        and is_colour_automorphism(graph2, eta)
    }
    details: dict = {}
    if n >= 4:
        stab3 = colour_stabilizer(build_graph(ball(S, 3)))
        checks["radius3_stabilizer_trivial"] = stab3.elements == (
            identity_perm(G.order),
        )
        checks["inversion_shows_radius2_insufficient"] = eta not in stab3
        details["radius3_order"] = stab3.order
    elif n == 3:
        # the three pairwise-inverting generators of order 16 carry a central
        # involution s1*s2*s3, so this member splits as quaternion x Z/2 and
        # its radius-3 stabilizer is the eight lifted sign-flip maps
        cls = classify(G)
        stab3 = colour_stabilizer(build_graph(ball(S, 3)))
        checks["classified_quaternion_times_boolean"] = (
            cls.case is StructureCase.Q8_TIMES_BOOLEAN
        )
        checks["radius3_stabilizer_is_predicted"] = stab3.elements == predicted_stabilizer(
            G, cls
        )
        checks["inversion_in_radius3_stabilizer"] = eta in stab3
        details["radius3_order"] = stab3.order
    else:  # n == 2
        checks["isomorphic_to_quaternion"] = is_isomorphic_bruteforce(G, quaternion())
    return ExampleReport(name=f"h:{n}", checks=checks, details=details)


def k_family(n: int) -> tuple[FiniteGroup, GeneratingSet]:
    """H3 x (Z/2)^n with generators from the H3 part paired with zero and
    the nonzero Boolean vectors paired with the identity."""
    from .presentations import h_group

    if not 1 <= n <= 3:
        raise MalformedInputError("the family is built for 1 <= n <= 3")
    H3, S3 = h_group(3)
    G = direct_product(H3, abelian([2] * n))
    two = 2**n
    elems = [s * two for s in S3.elements] + list(range(1, two))
    return G, make_genset(G, elems)


def optimality_example_k(n: int) -> ExampleReport:
    """Mixed generating sets on the h:3 member times a Boolean group:
    inversion is colour-preserving already at radius 1 (every generator is
    an involution or squares to the central involution)."""
    G, T = k_family(n)
    eta = inversion_map(G)
    graph1 = build_graph(T)
    graph2 = build_graph(ball(T, 2))
    cls = classify(G)
    stab3 = colour_stabilizer(build_graph(ball(T, 3)))
    checks = {
        # h:3 splits as quaternion x Z/2, so this family is
        # quaternion-times-Boolean as well and its stabilizer has order 8
        "classified_quaternion_times_boolean": cls.case
        is StructureCase.Q8_TIMES_BOOLEAN,
        "inversion_in_radius1_stabilizer": eta[G.identity] == G.identity
        and is_colour_automorphism(graph1, eta),
        "inversion_in_radius2_stabilizer": is_colour_automorphism(graph2, eta),
        "radius3_stabilizer_is_predicted": stab3.elements
        == predicted_stabilizer(G, cls),
        "inversion_in_radius3_stabilizer": eta in stab3,
    }
    details = {"radius3_order": stab3.order, "case": cls.case.value}
    return ExampleReport(name=f"k:{n}", checks=checks, details=details)


EXAMPLE_BUILDERS: dict[str, Callable[..., ExampleReport]] = {
    "product": optimality_example_product,
    "q8": optimality_example_q8,
    "h": optimality_example_h,
    "k": optimality_example_k,
}


def run_example(name: str) -> ExampleReport:
    """Dispatch a named example: 'product:3,3', 'q8:1', 'h:4', 'k:2'."""
    if ":" not in name:
        raise MalformedInputError(f"example name needs arguments: {name!r}")
    kind, _, argstr = name.partition(":")
    if kind not in EXAMPLE_BUILDERS:
        raise MalformedInputError(
            f"unknown example {kind!r}; choose from {sorted(EXAMPLE_BUILDERS)}"
        )
    try:
        args = [int(a) for a in argstr.split(",")]
    except ValueError:
        raise MalformedInputError(f"bad example arguments in {name!r}") from None
    return EXAMPLE_BUILDERS[kind](*args)

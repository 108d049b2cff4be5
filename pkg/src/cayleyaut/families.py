"""Named group families and check suites driven by the CLI `verify` command.

The small suite covers every classification case with groups up to order
64; the radius suite pins one generating set per case for the ball-radius
verifier; the lemma suite bundles the Boolean-factor, square-dichotomy and
propagation checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Callable

from .autsearch import check_propagation
from .cayley import GeneratingSet, ball, build_graph, make_genset
from .classify import check_boolean_factor_lemma, find_a0, find_dicyclic_witness
from .errors import MalformedInputError, PreconditionError
from .groups import FiniteGroup, cyclic
from .rigidity import k_family, q8_boolean_family
from .specs import build_group

SMALLSUITE_SPECS: tuple[str, ...] = (
    *[f"cyclic:{n}" for n in range(3, 13)],
    "abelian:2",
    "abelian:2,2",
    "abelian:2,2,2",
    "abelian:2,2,2,2",
    "abelian:4,2",
    "abelian:3,3",
    "abelian:6,2",
    "q8",
    "product:(q8)x(abelian:2)",
    "product:(q8)x(abelian:2,2)",
    "dic:abelian:6@3",
    "dic:abelian:4,2@1",
    "hgroup:3",
    "hgroup:4",
    "hgroup:5",
    "sym:3",
    "dih:4",
    "alt:4",
    "sym:4",
)

FAMILIES: dict[str, tuple[str, ...]] = {"smallsuite": SMALLSUITE_SPECS}


def family_specs(name: str) -> tuple[str, ...]:
    try:
        return FAMILIES[name]
    except KeyError:
        raise MalformedInputError(
            f"unknown family {name!r}; choose from {sorted(FAMILIES)}"
        ) from None


def smallsuite() -> list[tuple[str, FiniteGroup]]:
    return [(spec, build_group(spec)) for spec in SMALLSUITE_SPECS]


@dataclass(frozen=True)
class RadiusInstance:
    label: str
    build: Callable[[], tuple[FiniteGroup, GeneratingSet]]


def _by_names(spec: str, names: list[str], symmetrize: bool = True):
    def build():
        G = build_group(spec)
        return G, make_genset(G, [G.element_by_name(n) for n in names], symmetrize)

    return build


def _h_instance(n: int):
    def build():
        from .presentations import h_group

        return h_group(n)

    return build


RADIUS_SUITE: tuple[RadiusInstance, ...] = (
    RadiusInstance(
        "abelian:2,2,2+units", _by_names("abelian:2,2,2", ["(1,0,0)", "(0,1,0)", "(0,0,1)"])
    ),
    RadiusInstance("cyclic:6+step1", _by_names("cyclic:6", ["1"])),
    RadiusInstance(
        "abelian:3,3+units", _by_names("abelian:3,3", ["(1,0)", "(0,1)"])
    ),
    RadiusInstance("q8xZ2+twisted", lambda: q8_boolean_family(1)),
    RadiusInstance("hgroup:3+s", _h_instance(3)),
    RadiusInstance("k1+mixed", lambda: k_family(1)),
    RadiusInstance("hgroup:4+s", _h_instance(4)),
    RadiusInstance("hgroup:5+s", _h_instance(5)),
    RadiusInstance("sym:4+2gens", _by_names("sym:4", ["(0 1)", "(0 1 2 3)"])),
)


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    run: Callable[[], bool]


def _factor_lemma(spec: str) -> Callable[[], bool]:
    def run() -> bool:
        return check_boolean_factor_lemma(build_group(spec), cyclic(2))

    return run


def _a0_succeeds(spec: str) -> Callable[[], bool]:
    def run() -> bool:
        G = build_group(spec)
        w = find_dicyclic_witness(G)
        if w is None:
            return False
        a = find_a0(G, w)
        sq = G.table[a][a]
        return sq != G.identity and sq != G.table[w.x][w.x]

    return run


def _a0_rejects(spec: str) -> Callable[[], bool]:
    def run() -> bool:
        G = build_group(spec)
        w = find_dicyclic_witness(G)
        if w is None:
            return False
        try:
            find_a0(G, w)
        except PreconditionError:
            return True
        return False

    return run


def _propagation_q8z2() -> bool:
    G, S = q8_boolean_family(1)
    graph_T = build_graph(ball(S, 3))
    s, t = S.elements[0], S.elements[2]  # one representative per quaternion axis
    st = G.table[s][t]
    return check_propagation(graph_T, S, [s, t, st])


def _propagation_z6() -> bool:
    G = cyclic(6)
    S = make_genset(G, [1], symmetrize=True)
    graph_T = build_graph(ball(S, 2))
    return check_propagation(graph_T, S, [1])


def _propagation_h4_vacuous() -> bool:
    from .presentations import h_group

    G, S = h_group(4)
    graph_T = build_graph(ball(S, 2))
    # empty fixing set: the premise fails because the radius-2 stabilizer
    # contains the inversion map; expect False
    return check_propagation(graph_T, S, []) is False


LEMMA_SUITE: tuple[LemmaCheck, ...] = (
    LemmaCheck("boolean-factor:q8", _factor_lemma("q8")),
    LemmaCheck("boolean-factor:cyclic:5", _factor_lemma("cyclic:5")),
    LemmaCheck("boolean-factor:hgroup:3", _factor_lemma("hgroup:3")),
    LemmaCheck("square-dichotomy:dic:abelian:6@3", _a0_succeeds("dic:abelian:6@3")),
    LemmaCheck("square-dichotomy:dic:abelian:4,2@1", _a0_succeeds("dic:abelian:4,2@1")),
    LemmaCheck("square-dichotomy-rejects:hgroup:3", _a0_rejects("hgroup:3")),
    LemmaCheck("square-dichotomy-rejects:q8", _a0_rejects("q8")),
    LemmaCheck(
        "square-dichotomy-rejects:product:(q8)x(abelian:2)",
        _a0_rejects("product:(q8)x(abelian:2)"),
    ),
    LemmaCheck(
        "square-dichotomy-rejects:product:(q8)x(abelian:2,2)",
        _a0_rejects("product:(q8)x(abelian:2,2)"),
    ),
    LemmaCheck("propagation:q8xZ2", _propagation_q8z2),
    LemmaCheck("propagation:cyclic:6", _propagation_z6),
    LemmaCheck("propagation-premise-fails:hgroup:4", _propagation_h4_vacuous),
)

"""The compact group-spec mini-language used by the CLI and test fixtures.

Grammar (no whitespace inside a spec):

    spec    := atom
    atom    := '(' spec ')'
             | 'cyclic:' INT
             | 'abelian:' INT (',' INT)*
             | 'q8'
             | 'hgroup:' INT
             | 'sym:' INT | 'alt:' INT | 'dih:' INT
             | 'dic:' atom '@' INT          -- abelian base group, element y = x^2
             | 'product:(' spec ')x(' spec ')'

Examples: cyclic:5, abelian:4,2, q8, dic:abelian:6@3,
product:(q8)x(abelian:2), hgroup:4.

Specs round-trip: `parse_group_spec(s).canonical()` parses back to an
identical group table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cayley import GeneratingSet
from .errors import ParseError
from .groups import (
    FiniteGroup,
    abelian,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    generalized_dicyclic,
    quaternion,
    symmetric,
)

_INT_RE = re.compile(r"\d+")
_WORD_RE = re.compile(r"[a-z][a-z0-9]*")


class GroupSpec:
    def build(self) -> FiniteGroup:
        raise NotImplementedError

    def build_with_genset(self) -> tuple[FiniteGroup, GeneratingSet | None]:
        """Like build(), plus a natural generating set when the family has
        one (the presentation generators of hgroup)."""
        return self.build(), None

    def canonical(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.canonical()


@dataclass(frozen=True)
class CyclicSpec(GroupSpec):
    n: int

    def build(self):
        return cyclic(self.n)

    def canonical(self):
        return f"cyclic:{self.n}"


@dataclass(frozen=True)
class AbelianSpec(GroupSpec):
    factors: tuple[int, ...]

    def build(self):
        return abelian(self.factors)

    def canonical(self):
        return "abelian:" + ",".join(map(str, self.factors))


@dataclass(frozen=True)
class Q8Spec(GroupSpec):
    def build(self):
        return quaternion()

    def canonical(self):
        return "q8"


@dataclass(frozen=True)
class NamedFamilySpec(GroupSpec):
    family: str  # sym | alt | dih
    n: int

    def build(self):
        builder = {"sym": symmetric, "alt": alternating, "dih": dihedral}[self.family]
        return builder(self.n)

    def canonical(self):
        return f"{self.family}:{self.n}"


@dataclass(frozen=True)
class HGroupSpec(GroupSpec):
    n: int

    def build(self):
        return self.build_with_genset()[0]

    def build_with_genset(self):
        from .presentations import h_group

        return h_group(self.n)

    def canonical(self):
        return f"hgroup:{self.n}"


@dataclass(frozen=True)
class DicSpec(GroupSpec):
    base: GroupSpec
    y: int

    def build(self):
        group, _witness = generalized_dicyclic(self.base.build(), self.y)
        return group

    def canonical(self):
        inner = self.base.canonical()
        if isinstance(self.base, ProductSpec):
            inner = f"({inner})"
        return f"dic:{inner}@{self.y}"


@dataclass(frozen=True)
class ProductSpec(GroupSpec):
    left: GroupSpec
    right: GroupSpec

    def build(self):
        return direct_product(self.left.build(), self.right.build())

    def canonical(self):
        return f"product:({self.left.canonical()})x({self.right.canonical()})"


class _Parser:
    def __init__(self, text: str):
        self.text = text.strip()
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def read_int(self) -> int:
        m = _INT_RE.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def read_int_list(self) -> tuple[int, ...]:
        out = [self.read_int()]
        while self.text.startswith(",", self.pos):
            save = self.pos
            self.pos += 1
            m = _INT_RE.match(self.text, self.pos)
            if not m:
                self.pos = save
                break
            self.pos = m.end()
            out.append(int(m.group()))
        return tuple(out)

    def parse_spec(self) -> GroupSpec:
        if self.text.startswith("(", self.pos):
            self.pos += 1
            inner = self.parse_spec()
            self.expect(")")
            return inner
        m = _WORD_RE.match(self.text, self.pos)
        if not m:
            raise self.error("expected a group-spec keyword")
        word = m.group()
        self.pos = m.end()
        if word == "q8":
            return Q8Spec()
        if word == "cyclic":
            self.expect(":")
            return CyclicSpec(self.read_int())
        if word == "abelian":
            self.expect(":")
            return AbelianSpec(self.read_int_list())
        if word == "hgroup":
            self.expect(":")
            return HGroupSpec(self.read_int())
        if word in ("sym", "alt", "dih"):
            self.expect(":")
            return NamedFamilySpec(word, self.read_int())
        if word == "dic":
            self.expect(":")
            base = self.parse_spec()
            self.expect("@")
            return DicSpec(base, self.read_int())
        if word == "product":
            self.expect(":")
            self.expect("(")
            left = self.parse_spec()
            self.expect(")")
            self.expect("x")
            self.expect("(")
            right = self.parse_spec()
            self.expect(")")
            return ProductSpec(left, right)
        raise self.error(f"unknown group-spec keyword {word!r}")


def parse_group_spec(text: str) -> GroupSpec:
    parser = _Parser(text)
    spec = parser.parse_spec()
    if parser.pos != len(parser.text):
        raise parser.error("trailing input after group spec")
    return spec


def build_group(text: str) -> FiniteGroup:
    return parse_group_spec(text).build()


def describe_group(text: str) -> dict:
    """The `describe` dump: canonical spec plus structural facts."""
    from .classify import classify, literal_order2_witness

    spec = parse_group_spec(text)
    G, genset = spec.build_with_genset()
    cls = classify(G)
    orders: dict[int, int] = {}
    for k in G.element_orders:
        orders[k] = orders.get(k, 0) + 1
    out = {
        "spec": spec.canonical(),
        "name": G.name,
        "order": G.order,
        "digest": G.digest,
        "abelian": G.is_abelian,
        "exponent": G.exponent,
        "element_order_histogram": {str(k): v for k, v in sorted(orders.items())},
        "classification": cls.to_json_dict(),
    }
    if genset is not None:
        out["default_genset"] = list(genset.names)
    if cls.case.value in ("Neither",) and literal_order2_witness(G) is not None:
        out["note"] = (
            "an order-2 element inverts an abelian index-2 subgroup "
            "(generalized dihedral); excluded from the dicyclic case, which "
            "requires the twisting element to have order exactly 4"
        )
    return out

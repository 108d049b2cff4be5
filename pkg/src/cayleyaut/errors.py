"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: malformed/degenerate input and parse
problems exit 2, resource limits exit 3, failed verification checks exit 1.
"""

from __future__ import annotations


class CayleyError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(CayleyError):
    """An argument violates a documented precondition (bad index, bad spec, ...)."""


class DegenerateInputError(CayleyError):
    """Input is structurally valid but the operation is undefined on it.

    Examples: the full generating set of the trivial group, or a dicyclic
    construction over an exponent-2 abelian group (the result would be
    abelian, hence not dicyclic).
    """


class NotGeneratingError(MalformedInputError):
    """A candidate generating set only generates a proper subgroup."""

    def __init__(self, subgroup_order: int, group_order: int):
        self.subgroup_order = subgroup_order
        self.group_order = group_order
        super().__init__(
            f"set generates a subgroup of order {subgroup_order}, "
            f"not the full group of order {group_order}"
        )


class ParseError(MalformedInputError):
    """Syntax error in a presentation or group-spec string."""

    def __init__(self, message: str, text: str, position: int):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}: {text!r}")


class ResourceLimitError(CayleyError):
    """A configured cap was exceeded (coset limit, vertex cap, search budget)."""


class PreconditionError(CayleyError):
    """A structural precondition fails in a way the caller may want to branch on.

    Raised e.g. when asked for an element a with a^2 outside {1, x^2} in a
    group where no such element exists (the quaternion-times-Boolean case).
    """

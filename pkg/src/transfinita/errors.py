"""Error types and sentinel result values shared across the package.

Every failure mode an operation can signal is either an exception from the
hierarchy below or one of the sentinel values at the bottom.  Sentinels are
used where "no result" is an ordinary, expected answer (a non-cyclic element,
an exhausted witness search) rather than a contract violation.
"""

from __future__ import annotations


class TransfinitaError(Exception):
    """Base class for all arithmetic and evaluation errors."""


class NotRepresentable(TransfinitaError):
    """The value reaches or exceeds the boundary of the finite notation."""


class ResourceExceeded(TransfinitaError):
    """A finite value would blow past the configured magnitude budget."""


class Undefined(TransfinitaError):
    """The operation's precondition is violated (no value is defined)."""


class Unsupported(TransfinitaError):
    """The input is outside the range this implementation evaluates."""


class DivisionByZero(TransfinitaError):
    """Exact division with a zero divisor."""


class InvalidLambda(TransfinitaError):
    """The truncation point is not omega or a multiplication-closed ordinal."""


class OutOfField(TransfinitaError):
    """The element does not belong to the ambient truncated field."""


class FragmentExceeded(TransfinitaError):
    """A definitional-oracle computation escapes the small fragment."""


class _Sentinel:
    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name

    def __bool__(self) -> bool:
        return False


NOT_CYCLIC = _Sentinel("NotCyclic")
NOT_DIVISIBLE = _Sentinel("NotDivisible")
NO_WITNESS = _Sentinel("NoWitness")

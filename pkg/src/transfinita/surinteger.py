"""The discretely ordered ring of signed normal forms ("surintegers").

A surinteger looks like an ordinal normal form whose coefficients may be any
nonzero integer: ``w^5*4 - w^4*2 - w^2*7 + w*3 - 1``.  Equivalently it is a
pair of ordinary ordinals sharing no power of omega, the negative part and
the positive part; :func:`to_coordinates`/:func:`from_coordinates` convert
between the two views.  Addition is coefficientwise, multiplication is the
distributive product with natural exponent sums, and the order compares the
first term where two values disagree.

Truncating at omega gives the ordinary integers, the unique discrete cyclic
ring; truncating at any multiplication-closed ordinal gives one of a whole
tower of discretely ordered rings, and :func:`in_lambda_ring` decides
membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import NOT_CYCLIC, InvalidLambda, Undefined
from .natural import ClosureKind, is_closure_number, nat_add
from .ordinal import (
    EQ,
    GT,
    LT,
    ZERO,
    Ordinal,
    compare,
    validate as validate_ordinal,
)
from .ordinal import _make as _make_ordinal
from .ordinal import _term_str


class SurInteger:
    """Immutable signed normal form; exponents strictly decreasing,
    coefficients nonzero integers."""

    __slots__ = ("terms", "_hash")

    terms: tuple
    _hash: object

    def __init__(self, value: int = 0):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"SurInteger() takes an int, got {value!r}")
        self.terms = ((ZERO, value),) if value else ()
        self._hash = None

    @staticmethod
    def from_terms(terms: Iterable[tuple]) -> "SurInteger":
        a = _make(tuple(terms))
        validate(a)
        return a

    @staticmethod
    def from_ordinal(o: Ordinal) -> "SurInteger":
        return _make(o.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def __int__(self) -> int:
        if not self.terms:
            return 0
        if self.is_finite:
            return self.terms[0][1]
        raise Undefined("transfinite surinteger has no integer value")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SurInteger):
            return NotImplemented
        return self is other or self.terms == other.terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(("si", self.terms))
            self._hash = h
        return h

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"SurInteger[{surinteger_str(self)}]"


def _make(terms: tuple) -> SurInteger:
    a = SurInteger.__new__(SurInteger)
    a.terms = terms
    a._hash = None
    return a


S_ZERO = SurInteger(0)
S_ONE = SurInteger(1)


def validate(a: SurInteger) -> None:
    """Check the signed normal-form invariants.  Raises ValueError."""
    if not isinstance(a, SurInteger):
        raise ValueError(f"not a SurInteger: {a!r}")
    prev = None
    for t in a.terms:
        e, c = t
        if not isinstance(c, int) or isinstance(c, bool) or c == 0:
            raise ValueError(f"coefficient must be a nonzero int, got {c!r}")
        validate_ordinal(e)
        if prev is not None and compare(prev, e) <= 0:
            raise ValueError("exponents must be strictly decreasing")
        prev = e


@dataclass(frozen=True)
class CoordinateForm:
    """(negative part, positive part) pair of plain ordinals with disjoint
    exponent support."""

    negative: Ordinal
    positive: Ordinal


def to_coordinates(a: SurInteger) -> CoordinateForm:
    """Split into the pair view: negated negative terms / positive terms."""
    neg = tuple((e, -c) for e, c in a.terms if c < 0)
    pos = tuple((e, c) for e, c in a.terms if c > 0)
    return CoordinateForm(_make_ordinal(neg), _make_ordinal(pos))


def from_coordinates(c: CoordinateForm) -> SurInteger:
    """Signed merge of the pair view; shared exponents balance out."""
    tn, tp = c.negative.terms, c.positive.terms
    out = []
    i = j = 0
    while i < len(tn) and j < len(tp):
        cmp = compare(tn[i][0], tp[j][0])
        if cmp > 0:
            out.append((tn[i][0], -tn[i][1]))
            i += 1
        elif cmp < 0:
            out.append(tp[j])
            j += 1
        else:
            d = tp[j][1] - tn[i][1]
            if d:
                out.append((tn[i][0], d))
            i += 1
            j += 1
    out.extend((e, -c2) for e, c2 in tn[i:])
    out.extend(tp[j:])
    return _make(tuple(out))


def si_add(a: SurInteger, b: SurInteger) -> SurInteger:
    """Exponentwise signed sum; zero coefficients drop out."""
    ta, tb = a.terms, b.terms
    out = []
    i = j = 0
    while i < len(ta) and j < len(tb):
        c = compare(ta[i][0], tb[j][0])
        if c > 0:
            out.append(ta[i])
            i += 1
        elif c < 0:
            out.append(tb[j])
            j += 1
        else:
            s = ta[i][1] + tb[j][1]
            if s:
                out.append((ta[i][0], s))
            i += 1
            j += 1
    out.extend(ta[i:])
    out.extend(tb[j:])
    return _make(tuple(out))


def neg(a: SurInteger) -> SurInteger:
    return _make(tuple((e, -c) for e, c in a.terms))


def si_mul(a: SurInteger, b: SurInteger) -> SurInteger:
    """Distributive product with natural exponent sums; like terms collect
    and may cancel."""
    if not a.terms or not b.terms:
        return S_ZERO
    bucket: dict = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            e = nat_add(ea, eb)
            bucket[e] = bucket.get(e, 0) + ca * cb
    exps = sorted((e for e, c in bucket.items() if c), reverse=True)
    return _make(tuple((e, bucket[e]) for e in exps))


def si_sub(a: SurInteger, b: SurInteger) -> SurInteger:
    return si_add(a, neg(b))


def si_compare(a: SurInteger, b: SurInteger) -> int:
    """Total order: decided at the first index where the term lists differ;
    a missing term counts as coefficient zero at that exponent."""
    ta, tb = a.terms, b.terms
    i = 0
    while i < len(ta) and i < len(tb):
        (ea, ca), (eb, cb) = ta[i], tb[i]
        c = compare(ea, eb)
        if c == 0:
            if ca != cb:
                return LT if ca < cb else GT
            i += 1
            continue
        if c > 0:
            return GT if ca > 0 else LT
        return LT if cb > 0 else GT
    if i < len(ta):
        return GT if ta[i][1] > 0 else LT
    if i < len(tb):
        return LT if tb[i][1] > 0 else GT
    return EQ


def is_positive(a: SurInteger) -> bool:
    """Sign predicate with zero counted positive (the pair view puts (0,0)
    on the non-negative side)."""
    return si_compare(a, S_ZERO) >= 0


def si_abs(a: SurInteger) -> SurInteger:
    return a if si_compare(a, S_ZERO) >= 0 else neg(a)


def si_pow(a: SurInteger, n: int) -> SurInteger:
    if n < 0:
        raise Undefined("surinteger powers take natural exponents")
    result, base = S_ONE, a
    while n:
        if n & 1:
            result = si_mul(result, base)
        n >>= 1
        if n:
            base = si_mul(base, base)
    return result


def si_scale(a: SurInteger, k: int) -> SurInteger:
    if k == 0:
        return S_ZERO
    return _make(tuple((e, c * k) for e, c in a.terms))


def check_lambda(lam: Ordinal) -> None:
    """A valid truncation point is a transfinite multiplication-closed
    ordinal (omega is the least one)."""
    if lam.is_finite or not is_closure_number(ClosureKind.NAT_MUL, lam):
        raise InvalidLambda(f"{lam!r} is not omega or a multiplication-closed ordinal")


def in_lambda_ring(a: SurInteger, lam: Ordinal) -> bool:
    """Membership in the ring truncated at ``lam``: both coordinates below it."""
    check_lambda(lam)
    c = to_coordinates(a)
    return compare(c.negative, lam) < 0 and compare(c.positive, lam) < 0


def cyclic_decompose(a: SurInteger):
    """Express ``a`` as a signed finite sum of ones: ('+'|'-', count).

    Only the finite surintegers decompose; anything transfinite returns the
    NotCyclic sentinel, witnessing that the omega truncation is the unique
    cyclic ring in the tower.
    """
    if not a.terms:
        return ("+", 0)
    if a.is_finite:
        n = a.terms[0][1]
        return ("+", n) if n > 0 else ("-", -n)
    return NOT_CYCLIC


def content(a: SurInteger) -> int:
    """Positive gcd of all coefficients (0 for the zero value)."""
    g = 0
    for _, c in a.terms:
        g = gcd(g, abs(c))
    return g


def surinteger_str(a: SurInteger) -> str:
    """Canonical signed text form, e.g. ``w^2*2 - w*3 + 1``."""
    if not a.terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(a.terms):
        body = _term_str(e, abs(c))
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def to_ordinal(a: SurInteger):
    """The plain ordinal with the same terms, or None if any sign is negative."""
    if all(c > 0 for _, c in a.terms):
        return _make_ordinal(a.terms)
    return None

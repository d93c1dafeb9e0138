"""Decidable cut predicates over a truncated surrational field, plus the
Gaussian (complex) extension of the field.

A cut specification names a left set inside the field truncated at some
multiplication-closed ordinal: either all elements below a given surrational
or all elements whose n-th power stays below a positive surrational.
Membership is a single exact surinteger inequality, so it is decidable even
though the cut itself is an infinite set.

Root cuts classify as surrational (an exact n-th root exists, returned as a
witness) or irrational.  The decision is structural: integer radicands use
exact integer roots, monomial radicands divide the exponent and take the
root of the coefficient, and anything else falls back to a bounded trial
search that may report ``inconclusive`` rather than guess.

The Gaussian extension is the plain pair construction with the textbook
formulas; over an ordered field they make every nonzero element invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DivisionByZero, OutOfField, Undefined
from .ordinal import GT, LT, Ordinal
from .ordinal import _make as _make_ordinal
from .surinteger import (
    SurInteger,
    _make as _make_si,
    check_lambda,
    si_compare,
    si_mul,
    si_pow,
)
from .surrational import (
    Q_ZERO,
    SurRational,
    in_lambda_field,
    q_add,
    q_compare,
    q_div,
    q_eq,
    q_from_int,
    q_mul,
    q_neg,
    q_sub,
    reduce as q_reduce,
)


@dataclass(frozen=True)
class RationalCut:
    """Left set of every field element below ``q``."""

    q: SurRational
    lam: Ordinal

    def __post_init__(self):
        check_lambda(self.lam)


@dataclass(frozen=True)
class RootCut:
    """Left set of every field element whose n-th power is below ``q > 0``."""

    q: SurRational
    n: int
    lam: Ordinal

    def __post_init__(self):
        check_lambda(self.lam)
        if self.n < 2:
            raise Undefined("root cuts need n >= 2")
        if q_compare(self.q, Q_ZERO) != GT:
            raise Undefined("root cuts need a strictly positive radicand")


def cut_member(cut, p: SurRational) -> bool:
    """Exact membership of ``p`` in the cut's left set.

    Raises OutOfField when ``p`` does not live in the ambient truncated
    field.
    """
    if not in_lambda_field(p, cut.lam):
        raise OutOfField(f"{p!r} is not in the field truncated at {cut.lam!r}")
    if isinstance(cut, RationalCut):
        lhs = si_mul(p.num, cut.q.den)
        rhs = si_mul(p.den, cut.q.num)
        return si_compare(lhs, rhs) == LT
    lhs = si_mul(si_pow(p.num, cut.n), cut.q.den)
    rhs = si_mul(si_pow(p.den, cut.n), cut.q.num)
    return si_compare(lhs, rhs) == LT


@dataclass(frozen=True)
class RootClassification:
    kind: str  # "surrational" | "irrational" | "inconclusive"
    witness: Optional[SurRational] = None

    def __repr__(self) -> str:
        if self.kind == "surrational":
            return f"Surrational({self.witness!r})"
        return self.kind.capitalize()


def _int_nth_root(v: int, n: int) -> int:
    # floor n-th root for v >= 0
    if v < 2:
        return v
    r = int(round(v ** (1.0 / n)))
    while r > 1 and r**n > v:
        r -= 1
    while (r + 1) ** n <= v:
        r += 1
    return r


def _si_nth_root(a: SurInteger, n: int):
    """(root, decided): exact n-th root when ``a`` is an integer or a single
    monomial, decided negatively when the leading term rules a root out,
    undecided otherwise."""
    if a.is_zero:
        return SurInteger(0), True
    if len(a.terms) != 1:
        return None, False
    e, c = a.terms[0]
    if c < 0 and n % 2 == 0:
        return None, True
    root_c = _int_nth_root(abs(c), n)
    if root_c**n != abs(c):
        return None, True
    if c < 0:
        root_c = -root_c
    if not e.terms:
        return SurInteger(root_c), True
    # monomial: every coefficient of the exponent must divide by n, since
    # the n-th power of any value leads with n times its leading exponent
    if any(k % n for _, k in e.terms):
        return None, True
    root_e = _make_ordinal(tuple((x, k // n) for x, k in e.terms))
    return _make_si(((root_e, root_c),)), True


def classify_root_cut(cut: RootCut, search_bound: int = 24) -> RootClassification:
    """Decide whether the root cut sits at an exact n-th root.

    A returned witness p always satisfies ``p^n == q`` up to value equality;
    an ``irrational`` verdict comes from the structural leading-term
    analysis, and ``inconclusive`` means the radicand has a shape the
    analysis does not cover and the bounded trial search found nothing.
    """
    q = q_reduce(cut.q)
    rn, dec_n = _si_nth_root(q.num, cut.n)
    rd, dec_d = _si_nth_root(q.den, cut.n)
    if dec_n and dec_d:
        if rn is not None and rd is not None:
            witness = SurRational(rn, rd)
            assert q_eq(_q_pow(witness, cut.n), q)
            return RootClassification("surrational", witness)
        return RootClassification("irrational")
    for i in range(1, search_bound + 1):
        for j in range(1, search_bound + 1):
            cand = SurRational(SurInteger(i), SurInteger(j))
            if q_eq(_q_pow(cand, cut.n), q):
                return RootClassification("surrational", cand)
    return RootClassification("inconclusive")


def _q_pow(p: SurRational, n: int) -> SurRational:
    return SurRational(si_pow(p.num, n), si_pow(p.den, n))


def rational_cut_bump(cut: RationalCut, p: SurRational) -> SurRational:
    """A member strictly above member ``p``: the midpoint towards the cut
    value, witnessing that the left set has no greatest element."""
    from .surrational import midpoint

    return midpoint(p, cut.q)


@dataclass(frozen=True)
class GaussianSurRational:
    """Pair (re, im) with the usual complex formulas over surrationals."""

    re: SurRational
    im: SurRational

    def __repr__(self) -> str:
        return f"Gaussian[{self.re!r}, {self.im!r}]"


CX_ZERO = GaussianSurRational(Q_ZERO, Q_ZERO)
CX_ONE = GaussianSurRational(q_from_int(1), Q_ZERO)
CX_I = GaussianSurRational(Q_ZERO, q_from_int(1))


def cx_eq(a: GaussianSurRational, b: GaussianSurRational) -> bool:
    return q_eq(a.re, b.re) and q_eq(a.im, b.im)


def cx_add(a: GaussianSurRational, b: GaussianSurRational) -> GaussianSurRational:
    return GaussianSurRational(q_add(a.re, b.re), q_add(a.im, b.im))


def cx_neg(a: GaussianSurRational) -> GaussianSurRational:
    return GaussianSurRational(q_neg(a.re), q_neg(a.im))


def cx_sub(a: GaussianSurRational, b: GaussianSurRational) -> GaussianSurRational:
    return cx_add(a, cx_neg(b))


def cx_mul(a: GaussianSurRational, b: GaussianSurRational) -> GaussianSurRational:
    re = q_sub(q_mul(a.re, b.re), q_mul(a.im, b.im))
    im = q_add(q_mul(a.re, b.im), q_mul(a.im, b.re))
    return GaussianSurRational(re, im)


def cx_inv(a: GaussianSurRational) -> GaussianSurRational:
    d = q_add(q_mul(a.re, a.re), q_mul(a.im, a.im))
    if d.is_zero:
        raise DivisionByZero("inverse of complex zero")
    return GaussianSurRational(q_div(a.re, d), q_neg(q_div(a.im, d)))


def cx_div(a: GaussianSurRational, b: GaussianSurRational) -> GaussianSurRational:
    return cx_mul(a, cx_inv(b))

"""The ordered field of surinteger fractions ("surrationals").

A surrational is a numerator/denominator pair with strictly positive
denominator.  Equality and order never need a canonical form: both are
decided by cross-multiplication in the surinteger ring, which is exact and
total.  Reduction is best-effort only -- the underlying ring has no known
division algorithm with a greatest common factor, so :func:`reduce` divides
out what it can find (integer content, a shared monomial, one side dividing
the other) and the ``reduced`` flag records that the strategy ran, not that
the pair is provably coprime.

The field truncated at omega is the ordinary rationals and is the only
Archimedean stage of the tower: :func:`archimedean_witness` finds the
bounding multiple there and reports NoWitness against, say, (1, omega).
"""

from __future__ import annotations

from math import gcd

from .errors import NO_WITNESS, NOT_DIVISIBLE, DivisionByZero, Undefined
from .ordinal import LT, Ordinal
from .ordinal import _make as _make_ordinal
from .surinteger import (
    S_ONE,
    S_ZERO,
    SurInteger,
    _make,
    content,
    in_lambda_ring,
    neg,
    si_abs,
    si_add,
    si_compare,
    si_mul,
    si_scale,
    si_sub,
    surinteger_str,
)


class SurRational:
    """Fraction of surintegers with positive denominator.

    ``reduced`` marks that the best-effort reduction strategy has been run
    to completion on this representation.  Mixed-sign input denominators are
    normalised at construction by negating both components.
    """

    __slots__ = ("num", "den", "reduced")

    def __init__(self, num, den=S_ONE, *, reduced: bool = False):
        if isinstance(num, int):
            num = SurInteger(num)
        if isinstance(den, int):
            den = SurInteger(den)
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        if si_compare(den, S_ZERO) == LT:
            num, den = neg(num), neg(den)
        self.num = num
        self.den = den
        self.reduced = reduced

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __repr__(self) -> str:
        return f"SurRational[{surrational_str(self)}]"

    # structural equality only; value equality is q_eq
    def __eq__(self, other) -> bool:
        if not isinstance(other, SurRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("q", self.num, self.den))


Q_ZERO = SurRational(S_ZERO)
Q_ONE = SurRational(S_ONE)
Q_HALF = SurRational(SurInteger(1), SurInteger(2), reduced=True)


def q_eq(p: SurRational, q: SurRational) -> bool:
    """Value equality by cross-multiplication; no reduction involved."""
    return si_mul(p.num, q.den) == si_mul(q.num, p.den)


def q_compare(p: SurRational, q: SurRational) -> int:
    """Total order via the cross products (denominators are positive)."""
    return si_compare(si_mul(p.num, q.den), si_mul(q.num, p.den))


def q_add(p: SurRational, q: SurRational) -> SurRational:
    num = si_add(si_mul(p.num, q.den), si_mul(p.den, q.num))
    return _light_reduce(num, si_mul(p.den, q.den))


def q_neg(p: SurRational) -> SurRational:
    return SurRational(neg(p.num), p.den, reduced=p.reduced)


def q_sub(p: SurRational, q: SurRational) -> SurRational:
    return q_add(p, q_neg(q))


def q_mul(p: SurRational, q: SurRational) -> SurRational:
    return _light_reduce(si_mul(p.num, q.num), si_mul(p.den, q.den))


def q_inv(p: SurRational) -> SurRational:
    """Swap the components, fixing signs so the denominator stays positive.

    The inverse of zero is zero by definition here (callers that must treat
    division by zero as an error check for zero themselves).
    """
    if p.num.is_zero:
        return Q_ZERO
    return SurRational(p.den, p.num, reduced=p.reduced)


def q_div(p: SurRational, q: SurRational) -> SurRational:
    if q.num.is_zero:
        raise DivisionByZero("division by zero")
    return q_mul(p, q_inv(q))


def q_abs(p: SurRational) -> SurRational:
    return SurRational(si_abs(p.num), p.den, reduced=p.reduced)


def q_from_int(n: int) -> SurRational:
    return SurRational(SurInteger(n), S_ONE, reduced=True)


def from_surinteger(a: SurInteger) -> SurRational:
    return SurRational(a, S_ONE, reduced=True)


def _monomial_content(a: SurInteger):
    # largest exponent m such that w^m divides every term of a
    dom = None
    for e, _ in a.terms:
        if dom is None:
            dom = dict(e.terms)
        else:
            dom = {
                x: min(k, dom[x])
                for x, k in e.terms
                if x in dom
            }
        if not dom:
            return None
    if not dom:
        return None
    exps = sorted(dom, reverse=True)
    return _make_ordinal(tuple((x, dom[x]) for x in exps))


def _strip_monomial(a: SurInteger, m: Ordinal) -> SurInteger:
    out = []
    for e, c in a.terms:
        left = dict(e.terms)
        for x, k in m.terms:
            left[x] -= k
            if not left[x]:
                del left[x]
        exps = sorted(left, reverse=True)
        out.append((_make_ordinal(tuple((x, left[x]) for x in exps)), c))
    return _make(tuple(out))


def _light_reduce(num: SurInteger, den: SurInteger) -> SurRational:
    # the cheap half of reduce(): shared integer content and shared monomial
    if num.is_zero:
        return SurRational(S_ZERO, S_ONE)
    g = gcd(content(num), content(den))
    if g > 1:
        num = _make(tuple((e, c // g) for e, c in num.terms))
        den = _make(tuple((e, c // g) for e, c in den.terms))
    m = _monomial_content(num)
    md = _monomial_content(den)
    if m is not None and md is not None:
        shared = _min_exponent(m, md)
        if shared.terms:
            num = _strip_monomial(num, shared)
            den = _strip_monomial(den, shared)
    return SurRational(num, den)


def _min_exponent(x: Ordinal, y: Ordinal) -> Ordinal:
    dx = dict(x.terms)
    out = {e: min(k, dx[e]) for e, k in y.terms if e in dx}
    exps = sorted(out, reverse=True)
    return _make_ordinal(tuple((e, out[e]) for e in exps))


def exact_divide(a: SurInteger, b: SurInteger):
    """Exact quotient c with ``b * c == a`` by leading-term long division.

    Returns the NotDivisible sentinel when the division leaves a remainder
    at any step (no exponent match or a coefficient that does not divide).
    Exponent "division" is coefficientwise natural subtraction, which is
    exactly what inverts the natural sum of exponents.
    """
    if b.is_zero:
        raise DivisionByZero("exact division by zero")
    if a.is_zero:
        return S_ZERO
    eb, cb = b.terms[0]
    quot = []
    r = a
    while r.terms:
        er, cr = r.terms[0]
        eq = _exp_diff(er, eb)
        if eq is None or cr % cb:
            return NOT_DIVISIBLE
        cq = cr // cb
        quot.append((eq, cq))
        r = si_sub(r, si_mul(b, _make(((eq, cq),))))
    q = _make(tuple(quot))
    return q if si_mul(b, q) == a else NOT_DIVISIBLE


def _exp_diff(er: Ordinal, eb: Ordinal):
    # x with nat_add(eb, x) == er, or None
    left = dict(er.terms)
    for e, k in eb.terms:
        have = left.get(e, 0)
        if have < k:
            return None
        if have == k:
            del left[e]
        else:
            left[e] = have - k
    exps = sorted(left, reverse=True)
    return _make_ordinal(tuple((e, left[e]) for e in exps))


def reduce(p: SurRational) -> SurRational:
    """Best-effort canonical form: shared content, shared monomial, then one
    side exactly dividing the other.  Always value-equal to the input."""
    base = _light_reduce(p.num, p.den)
    num, den = base.num, base.den
    if num.is_zero:
        return SurRational(S_ZERO, S_ONE, reduced=True)
    c = exact_divide(num, den)
    if isinstance(c, SurInteger):
        return SurRational(c, S_ONE, reduced=True)
    c = exact_divide(den, num)
    if isinstance(c, SurInteger):
        return SurRational(S_ONE, c, reduced=True)
    return SurRational(num, den, reduced=True)


def in_lambda_field(p: SurRational, lam: Ordinal) -> bool:
    """Membership in the field truncated at ``lam``: both components in the
    matching ring."""
    return in_lambda_ring(p.num, lam) and in_lambda_ring(p.den, lam)


def archimedean_witness(p: SurRational, q: SurRational, bound: int):
    """Least n <= bound with ``|q| <= n*|p|``, else the NoWitness sentinel.

    Monotone in n, so found by binary search; requires p != 0.
    """
    if p.is_zero:
        raise Undefined("the reference element must be nonzero")
    aq, ap = q_abs(q), q_abs(p)
    if not _le_scaled(aq, ap, bound):
        return NO_WITNESS
    lo, hi = 0, bound
    while lo < hi:
        mid = (lo + hi) // 2
        if _le_scaled(aq, ap, mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _le_scaled(aq: SurRational, ap: SurRational, n: int) -> bool:
    # |q| <= n*|p|  <=>  num_q*den_p <= n*num_p*den_q
    lhs = si_mul(aq.num, ap.den)
    rhs = si_scale(si_mul(ap.num, aq.den), n)
    return si_compare(lhs, rhs) <= 0


def midpoint(p: SurRational, q: SurRational) -> SurRational:
    """(p + q)/2, strictly between its arguments; requires p < q."""
    if q_compare(p, q) != LT:
        raise Undefined("midpoint needs p < q")
    return q_mul(q_add(p, q), Q_HALF)


def surrational_str(p: SurRational) -> str:
    """Canonical text form ``num / den``; the denominator is omitted when 1."""
    num_s = surinteger_str(p.num)
    if p.den == S_ONE:
        return num_s
    if len(p.num.terms) > 1:
        num_s = f"({num_s})"
    den_s = surinteger_str(p.den)
    # a lone number or a coefficient-free power parses unambiguously after /
    e, c = p.den.terms[0]
    if len(p.den.terms) > 1 or (e.terms and c != 1):
        den_s = f"({den_s})"
    return f"{num_s} / {den_s}"

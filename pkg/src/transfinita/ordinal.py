"""Ordinals below the first fixed point of ``x -> w^x``, in iterated Cantor
normal form, with the recursive (non-commutative) arithmetic.

An ordinal is a finite descending sum ``w^e1*c1 + ... + w^ek*ck`` with
positive integer coefficients and exponents that are themselves ordinals of
the same shape.  The empty sum is 0.  This notation covers exactly the
ordinals whose normal form terminates after finitely many nestings; anything
beyond that boundary raises :class:`NotRepresentable` where it can arise.

The recursive operations ``rec_add``/``rec_mul``/``rec_pow`` implement the
successor/limit recursions through their standard closed forms on normal
forms; the definitional recursions themselves live in :mod:`.oracle` and the
two are checked against each other by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DivisionByZero, ResourceExceeded, Undefined

LT, EQ, GT = -1, 0, 1

# Digit budget for finite powers.  A guard estimates the decimal size of
# m**n before computing it and raises ResourceExceeded past the budget.
DEFAULT_MAX_DIGITS = 2**64


class Ordinal:
    """Immutable ordinal in iterated Cantor normal form.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs with strictly
    decreasing Ordinal exponents and integer coefficients >= 1.  Values are
    hashable and totally ordered; all arithmetic lives in module functions
    because there are two distinct arithmetics (recursive and natural) and
    operator overloading would have to pick one.
    """

    __slots__ = ("terms", "_hash")

    terms: tuple
    _hash: object

    def __init__(self, value: int = 0):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"Ordinal() takes a non-negative int, got {value!r}")
        if value < 0:
            raise Undefined("ordinals are non-negative")
        self.terms = ((ZERO, value),) if value else ()
        self._hash = None

    @staticmethod
    def from_terms(terms: Iterable[tuple]) -> "Ordinal":
        """Build an ordinal from normal-form terms, validating the invariants."""
        o = _make(tuple(terms))
        validate(o)
        return o

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def leading_exp(self) -> "Ordinal":
        if not self.terms:
            raise Undefined("0 has no leading term")
        return self.terms[0][0]

    @property
    def leading_coeff(self) -> int:
        if not self.terms:
            raise Undefined("0 has no leading term")
        return self.terms[0][1]

    def __int__(self) -> int:
        if not self.terms:
            return 0
        if self.is_finite:
            return self.terms[0][1]
        raise Undefined("transfinite ordinal has no integer value")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self is other or self.terms == other.terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other) -> bool:
        return compare(self, other) < 0

    def __le__(self, other) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other) -> bool:
        return compare(self, other) >= 0

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.terms)
            self._hash = h
        return h

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Ordinal[{ordinal_str(self)}]"


def _make(terms: tuple) -> Ordinal:
    o = Ordinal.__new__(Ordinal)
    o.terms = terms
    o._hash = None
    return o


ZERO = Ordinal(0)
ONE = Ordinal(1)
OMEGA: Ordinal = _make(((ONE, 1),))


def validate(o: Ordinal) -> None:
    """Check all normal-form invariants, recursively.  Raises ValueError."""
    if not isinstance(o, Ordinal):
        raise ValueError(f"not an Ordinal: {o!r}")
    if not isinstance(o.terms, tuple):
        raise ValueError("terms must be a tuple")
    prev = None
    for t in o.terms:
        if not (isinstance(t, tuple) and len(t) == 2):
            raise ValueError(f"bad term {t!r}")
        e, c = t
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise ValueError(f"coefficient must be a positive int, got {c!r}")
        validate(e)
        if prev is not None and compare(prev, e) <= 0:
            raise ValueError("exponents must be strictly decreasing")
        prev = e


class OrdinalClass(Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


def compare(a: Ordinal, b: Ordinal) -> int:
    """Total order; returns LT, EQ or GT (-1, 0, 1).

    Lexicographic on term lists: exponents compare recursively, then
    coefficients, then the remaining terms; a shorter list that is a prefix
    of the other is smaller.
    """
    if a is b:
        return EQ
    ta, tb = a.terms, b.terms
    for (ea, ca), (eb, cb) in zip(ta, tb):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return LT if ca < cb else GT
    if len(ta) == len(tb):
        return EQ
    return LT if len(ta) < len(tb) else GT


def classify(a: Ordinal) -> OrdinalClass:
    """Zero / successor / limit trichotomy, read off the last term."""
    if not a.terms:
        return OrdinalClass.ZERO
    if not a.terms[-1][0].terms:
        return OrdinalClass.SUCCESSOR
    return OrdinalClass.LIMIT


def successor(a: Ordinal) -> Ordinal:
    if a.terms and not a.terms[-1][0].terms:
        e, c = a.terms[-1]
        return _make(a.terms[:-1] + ((e, c + 1),))
    return _make(a.terms + ((ZERO, 1),))


def predecessor(a: Ordinal) -> Ordinal:
    if classify(a) is not OrdinalClass.SUCCESSOR:
        raise Undefined("only successor ordinals have a predecessor")
    e, c = a.terms[-1]
    if c > 1:
        return _make(a.terms[:-1] + ((e, c - 1),))
    return _make(a.terms[:-1])


def rec_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Recursive (non-commutative) sum: absorbs a's tail below b's lead."""
    if not b.terms:
        return a
    if not a.terms:
        return b
    e = b.terms[0][0]
    ta = a.terms
    i = 0
    while i < len(ta) and compare(ta[i][0], e) > 0:
        i += 1
    if i < len(ta) and ta[i][0] == e:
        merged = ((e, ta[i][1] + b.terms[0][1]),) + b.terms[1:]
    else:
        merged = b.terms
    return _make(ta[:i] + merged)


def rec_sub_left(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique g with ``rec_add(a, g) == b``; requires a < b."""
    if compare(a, b) != LT:
        raise Undefined("left subtraction needs a < b")
    ta, tb = a.terms, b.terms
    i = 0
    while i < len(ta) and ta[i] == tb[i]:
        i += 1
    if i == len(ta):
        return _make(tb[i:])
    (ea, ca), (eb, cb) = ta[i], tb[i]
    c = compare(ea, eb)
    if c == LT:
        return _make(tb[i:])
    # a < b rules out ea > eb and ca > cb at the first difference
    return _make(((eb, cb - ca),) + tb[i + 1:])


def rec_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """Recursive product, distributed over b's normal form left-to-right."""
    if not a.terms or not b.terms:
        return ZERO
    za, ca = a.terms[0]
    out = ZERO
    for e, c in b.terms:
        if e.terms:
            part = _make(((rec_add(za, e), c),))
        else:
            part = _make(((za, ca * c),) + a.terms[1:])
        out = rec_add(out, part)
    return out


def _guard_pow(base: int, exp: int, max_digits: int) -> int:
    """base**exp with an up-front decimal-digit budget check."""
    if base <= 1 or exp <= 1:
        return base**exp
    # bits(result) = exp*log2(base) <= exp*bit_length(base); digits ~ bits*0.30103
    est_digits = exp * base.bit_length() * 30103 // 100000 + 1
    if est_digits > max_digits:
        # the estimate itself can be astronomical: report only its size
        raise ResourceExceeded(
            f"finite power needs a number with more than 10^{est_digits.bit_length() // 4} "
            f"digits, budget is 10^{len(str(max_digits)) - 1}-ish ({max_digits})"
        )
    return base**exp


def _int_log_floor(c: int, m: int) -> int:
    """Largest n with m**n <= c, for m >= 2, c >= 1."""
    n, p = 0, 1
    while p * m <= c:
        p *= m
        n += 1
    return n


def _dec_exp(e: Ordinal) -> Ordinal:
    # e "minus one" for the finite-base power rule: finite e >= 1 decrements,
    # transfinite e is a fixed point of that shift and stays put.
    if e.is_finite:
        return Ordinal(int(e) - 1)
    return e


def _inc_exp(x: Ordinal) -> Ordinal:
    # inverse of _dec_exp
    if x.is_finite:
        return Ordinal(int(x) + 1)
    return x


def _ord_int_pow(a: Ordinal, n: int) -> Ordinal:
    # a**n by binary exponentiation; powers of one ordinal commute.
    result, base = ONE, a
    while n:
        if n & 1:
            result = rec_mul(result, base)
        n >>= 1
        if n:
            base = rec_mul(base, base)
    return result


def rec_pow(a: Ordinal, b: Ordinal, max_digits: int = DEFAULT_MAX_DIGITS) -> Ordinal:
    """Recursive exponentiation ``a^b`` via the normal-form case split.

    Finite powers of finite bases are guarded by ``max_digits`` (decimal
    digit budget); exceeding it raises :class:`ResourceExceeded`.
    """
    if not b.terms:
        return ONE
    if not a.terms:
        return ZERO  # 0^b = 0 for b > 0
    if a == ONE:
        return ONE
    finite_part = b.terms[-1][1] if not b.terms[-1][0].terms else 0
    if a.is_finite:
        m = int(a)
        if b.is_finite:
            return Ordinal(_guard_pow(m, int(b), max_digits))
        # m^(w^e * k) = w^(w^(e-1) * k) for finite e, w^(w^e * k) for limit e
        head_exp = ZERO
        for e, k in b.terms:
            if e.terms:
                head_exp = rec_add(head_exp, _make(((_dec_exp(e), k),)))
        head = _make(((head_exp, 1),))
        if finite_part:
            return rec_mul(head, Ordinal(_guard_pow(m, finite_part, max_digits)))
        return head
    # transfinite base: a^(limit part) collapses to a single omega power
    za = a.terms[0][0]
    limit_terms = b.terms[:-1] if finite_part else b.terms
    if limit_terms:
        head = _make(((rec_mul(za, _make(limit_terms)), 1),))
        if finite_part:
            return rec_mul(head, _ord_int_pow(a, finite_part))
        return head
    return _ord_int_pow(a, finite_part)


def rec_sum(seq: Sequence[Ordinal], n: int) -> Ordinal:
    """Left fold of rec_add over the first n entries (missing entries are 0)."""
    out = ZERO
    for x in seq[:n]:
        out = rec_add(out, x)
    return out


def ordinal_divmod(a: Ordinal, d: Ordinal) -> tuple:
    """Unique (q, r) with ``a == rec_add(rec_mul(d, q), r)`` and r < d."""
    if not d.terms:
        raise DivisionByZero("ordinal division by zero")
    q, r = ZERO, a
    zd, cd = d.terms[0]
    while compare(r, d) >= 0:
        zr, cr = r.terms[0]
        if compare(zr, zd) > 0:
            x = rec_sub_left(zd, zr)
            q = rec_add(q, _make(((x, cr),)))
            r = _make(r.terms[1:])
        else:
            k = cr // cd
            cand = rec_mul(d, Ordinal(k))
            if compare(cand, r) > 0:
                k -= 1
                cand = rec_mul(d, Ordinal(k))
            q = rec_add(q, Ordinal(k))
            r = rec_sub_left(cand, r) if compare(cand, r) < 0 else ZERO
            break
    return q, r


@dataclass(frozen=True)
class BaseExpansion:
    """Positional expansion of an ordinal in an arbitrary base > 1.

    ``digits`` is a tuple of (exponent, digit) pairs with strictly decreasing
    exponents and 0 < digit < base; both entries are ordinals.
    """

    base: Ordinal
    digits: tuple

    def recompose(self) -> Ordinal:
        out = ZERO
        for e, d in self.digits:
            out = rec_add(out, rec_mul(rec_pow(self.base, e), d))
        return out


def _log_floor(base: Ordinal, a: Ordinal) -> Ordinal:
    """Largest g with base^g <= a, for base > 1, a >= 1."""
    if compare(a, base) < 0:
        return ZERO
    if base.is_finite:
        m = int(base)
        if a.is_finite:
            return Ordinal(_int_log_floor(int(a), m))
        # match the leading omega power of a exactly, then fit a finite tail
        zeta, c = a.terms[0]
        trans = tuple((_inc_exp(x), k) for x, k in zeta.terms) if zeta.terms else ()
        g = rec_add(_make(trans), Ordinal(_int_log_floor(c, m)))
        return g
    g, _ = ordinal_divmod(a.terms[0][0], base.terms[0][0])
    if compare(rec_pow(base, g), a) > 0:
        g = predecessor(g)
    return g


def base_expand(a: Ordinal, base: Ordinal) -> BaseExpansion:
    """Greedy positional expansion; recomposes to ``a`` exactly.

    For base omega the digits coincide with the normal-form coefficients.
    """
    if compare(base, ONE) <= 0:
        raise Undefined("expansion base must exceed 1")
    if not a.terms:
        raise Undefined("0 has no expansion")
    if base == OMEGA:
        return BaseExpansion(base, tuple((e, Ordinal(c)) for e, c in a.terms))
    digits = []
    rest = a
    while rest.terms:
        g = _log_floor(base, rest)
        d, rest = ordinal_divmod(rest, rec_pow(base, g))
        digits.append((g, d))
    return BaseExpansion(base, tuple(digits))


def depth(a: Ordinal) -> int:
    """Nesting depth of the normal form: 0 for finite values."""
    if a.is_finite:
        return 0
    return 1 + max(depth(e) for e, _ in a.terms)


def ordinal_str(a: Ordinal) -> str:
    """Canonical text form, e.g. ``w^(w^2)*3 + w*2 + 7``."""
    if not a.terms:
        return "0"
    return " + ".join(_term_str(e, c) for e, c in a.terms)


def _term_str(e: Ordinal, c: int) -> str:
    if not e.terms:
        return str(c)
    if e == ONE:
        body = "w"
    elif e.is_finite:
        body = f"w^{int(e)}"
    elif e == OMEGA:
        body = "w^w"
    else:
        body = f"w^({ordinal_str(e)})"
    return body if c == 1 else f"{body}*{c}"

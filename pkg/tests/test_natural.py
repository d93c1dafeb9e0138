"""Natural (commutative) arithmetic and closure-point predicates."""

import random

import pytest
from hypothesis import given

from transfinita import (
    LT,
    OMEGA,
    ONE,
    ZERO,
    ClosureKind,
    NotRepresentable,
    Ordinal,
    Undefined,
    compare,
    is_closure_number,
    nat_add,
    nat_mul,
    nat_sum,
    next_closure,
    rec_add,
    rec_mul,
)
from transfinita.natural import closure_counterexample
from transfinita.ordinal import validate

from conftest import o, ordinals


class TestNatAdd:
    def test_commutes_where_recursive_does_not(self):
        assert nat_add(ONE, OMEGA) == o("w + 1")
        assert nat_add(OMEGA, ONE) == o("w + 1")

    def test_coefficientwise_merge(self):
        assert nat_add(o("w^2 + w*3"), o("w*5 + 2")) == o("w^2 + w*8 + 2")
        # nested exponent sets here coincide with the recursive sum
        assert rec_add(o("w^2 + w*3"), o("w*5 + 2")) == o("w^2 + w*8 + 2")

    @given(ordinals())
    def test_zero_identity(self, a):
        assert nat_add(a, ZERO) == a

    @given(ordinals(), ordinals())
    def test_commutative(self, a, b):
        assert nat_add(a, b) == nat_add(b, a)

    @given(ordinals(), ordinals(), ordinals())
    def test_associative(self, a, b, c):
        assert nat_add(nat_add(a, b), c) == nat_add(a, nat_add(b, c))

    @given(ordinals(), ordinals())
    def test_result_is_normal(self, a, b):
        validate(nat_add(a, b))


class TestNatMul:
    def test_four_term_expansion(self):
        assert nat_mul(o("w + 1"), o("w + 1")) == o("w^2 + w*2 + 1")

    def test_contrast_with_recursive_product(self):
        assert nat_mul(Ordinal(2), OMEGA) == o("w*2")
        assert rec_mul(Ordinal(2), OMEGA) == OMEGA

    @given(ordinals())
    def test_one_identity(self, a):
        assert nat_mul(a, ONE) == a

    @given(ordinals(), ordinals())
    def test_commutative(self, a, b):
        assert nat_mul(a, b) == nat_mul(b, a)

    @given(ordinals(depth=1), ordinals(depth=1), ordinals(depth=1))
    def test_associative(self, a, b, c):
        assert nat_mul(nat_mul(a, b), c) == nat_mul(a, nat_mul(b, c))

    @given(ordinals(depth=1), ordinals(depth=1), ordinals(depth=1))
    def test_distributes_over_nat_add(self, a, b, c):
        assert nat_mul(a, nat_add(b, c)) == nat_add(nat_mul(a, b), nat_mul(a, c))

    @given(ordinals(), ordinals())
    def test_result_is_normal(self, a, b):
        validate(nat_mul(a, b))


class TestNatSum:
    def test_fold(self):
        assert nat_sum([OMEGA, ONE, OMEGA], 3) == o("w*2 + 1")

    def test_permutation_invariant(self):
        seq = [OMEGA, ONE, OMEGA]
        assert nat_sum(list(reversed(seq)), 3) == nat_sum(seq, 3)

    def test_empty(self):
        assert nat_sum([], 0) == ZERO

    def test_short_sequences_pad_with_zero(self):
        assert nat_sum([ONE], 5) == ONE


@given(ordinals(), ordinals())
def test_recursive_operations_bounded_by_natural(a, b):
    assert compare(rec_add(a, b), nat_add(a, b)) <= 0
    assert compare(rec_mul(a, b), nat_mul(a, b)) <= 0


class TestClosurePredicates:
    def test_additive_absorber_examples(self):
        assert is_closure_number(ClosureKind.GAMMA_ADD, o("w^2"))
        assert is_closure_number(ClosureKind.GAMMA_ADD, OMEGA)
        assert not is_closure_number(ClosureKind.GAMMA_ADD, o("w*2"))
        assert not is_closure_number(ClosureKind.GAMMA_ADD, o("w + 1"))

    def test_multiplicative_absorber_examples(self):
        assert is_closure_number(ClosureKind.DELTA_MUL, o("w^w"))
        assert is_closure_number(ClosureKind.DELTA_MUL, OMEGA)
        assert not is_closure_number(ClosureKind.DELTA_MUL, o("w^2"))

    def test_natural_multiplication_closure_examples(self):
        # witness against w^2: w * w is not below w^2
        assert not is_closure_number(ClosureKind.NAT_MUL, o("w^2"))
        assert is_closure_number(ClosureKind.NAT_MUL, o("w^w"))
        assert is_closure_number(ClosureKind.NAT_MUL, o("w^(w^2)"))

    def test_small_case_table(self):
        for kind in ClosureKind:
            assert is_closure_number(kind, ZERO)
        assert is_closure_number(ClosureKind.GAMMA_ADD, ONE)
        assert not is_closure_number(ClosureKind.GAMMA_ADD, Ordinal(2))
        assert is_closure_number(ClosureKind.DELTA_MUL, Ordinal(2))
        assert is_closure_number(ClosureKind.EPSILON_EXP, Ordinal(2))
        assert not is_closure_number(ClosureKind.NAT_ADD, Ordinal(2))
        assert not is_closure_number(ClosureKind.EPSILON_EXP, Ordinal(3))

    @given(ordinals())
    def test_additive_absorption_subsumes_natural_closure(self, a):
        if is_closure_number(ClosureKind.GAMMA_ADD, a):
            assert is_closure_number(ClosureKind.NAT_ADD, a)
        if is_closure_number(ClosureKind.DELTA_MUL, a):
            assert is_closure_number(ClosureKind.NAT_MUL, a)

    @given(ordinals())
    def test_structural_decision_never_refuted(self, a):
        rng = random.Random(17)
        for kind in ClosureKind:
            if is_closure_number(kind, a):
                assert closure_counterexample(kind, a, rng, tries=12) is None

    def test_refuter_finds_witnesses_on_known_failures(self):
        rng = random.Random(5)
        for kind, value in [
            (ClosureKind.NAT_ADD, o("w*2")),
            (ClosureKind.NAT_ADD, o("w^2 + 1")),
            (ClosureKind.NAT_MUL, o("w^2")),
            (ClosureKind.GAMMA_ADD, o("w + 1")),
            (ClosureKind.DELTA_MUL, o("w^3")),
            (ClosureKind.EPSILON_EXP, o("w*2")),
        ]:
            assert not is_closure_number(kind, value)
            assert closure_counterexample(kind, value, rng, tries=400) is not None


class TestNextClosure:
    def test_additive_jump(self):
        assert next_closure(ClosureKind.GAMMA_ADD, OMEGA) == o("w^2")
        assert next_closure(ClosureKind.GAMMA_ADD, o("w^2")) == o("w^3")

    def test_multiplicative_jump(self):
        assert next_closure(ClosureKind.DELTA_MUL, o("w^w")) == o("w^(w^2)")
        assert next_closure(ClosureKind.NAT_MUL, o("w^w")) == o("w^(w^2)")
        assert next_closure(ClosureKind.NAT_MUL, OMEGA) == o("w^w")

    def test_small_cases(self):
        assert next_closure(ClosureKind.GAMMA_ADD, ZERO) == ONE
        assert next_closure(ClosureKind.GAMMA_ADD, ONE) == OMEGA
        assert next_closure(ClosureKind.DELTA_MUL, ONE) == Ordinal(2)
        assert next_closure(ClosureKind.DELTA_MUL, Ordinal(2)) == OMEGA
        assert next_closure(ClosureKind.EPSILON_EXP, Ordinal(2)) == OMEGA

    def test_exponential_jump_leaves_the_notation(self):
        with pytest.raises(NotRepresentable):
            next_closure(ClosureKind.EPSILON_EXP, OMEGA)

    def test_requires_a_closure_point(self):
        with pytest.raises(Undefined):
            next_closure(ClosureKind.GAMMA_ADD, o("w*2"))

    @given(ordinals())
    def test_jump_is_a_closure_point_above(self, a):
        for kind in (ClosureKind.GAMMA_ADD, ClosureKind.NAT_ADD, ClosureKind.NAT_MUL):
            if is_closure_number(kind, a):
                nxt = next_closure(kind, a)
                assert compare(a, nxt) == LT
                assert is_closure_number(kind, nxt)

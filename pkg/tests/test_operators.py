"""The eight operators: closed forms against the rational-division oracle,
algebraic relations, and the word application goldens."""

import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from divdiff import (
    BRAIDED_KINDS,
    OperatorKind,
    Polynomial,
    apply,
    apply_perm,
    apply_word,
    coerce_kind,
    from_terms,
    long_element,
)
from oracles import monomials_to_sympy, o_apply, o_apply_word, poly_to_sympy, same_poly

ALL_KINDS = [k.value for k in OperatorKind]

SLIDE_11 = [
    (3, 1, 1, 0, 0), (3, 1, 0, 1, 0), (3, 0, 1, 1, 0), (2, 1, 1, 1, 0),
    (1, 2, 1, 1, 0), (0, 3, 1, 1, 0), (3, 1, 0, 0, 1), (3, 0, 1, 0, 1),
    (2, 1, 1, 0, 1), (1, 2, 1, 0, 1), (0, 3, 1, 0, 1),
]

FATOM_6 = [
    (2, 0, 1, 2, 0, 1), (1, 1, 1, 2, 0, 1), (0, 2, 1, 2, 0, 1),
    (1, 0, 2, 2, 0, 1), (0, 1, 2, 2, 0, 1), (0, 0, 3, 2, 0, 1),
]


class TestSpecExamples:
    def test_pi_tilde_fixes_doubly_occupied(self):
        # pi~ = 1 + th~, so a monomial with both entries positive is fixed
        for exps in [(2, 1), (1, 3)]:
            p = Polynomial.monomial(exps)
            assert apply("pi~", 1, p) == p

    def test_pi_tilde_expands_into_empty_right(self):
        got = apply("pi~", 1, Polynomial.monomial((2, 0)))
        assert got == from_terms(2, [((2, 0), 1), ((1, 1), 1), ((0, 2), 1)])

    def test_theta_tilde_splits_right(self):
        got = apply("th~", 1, Polynomial.monomial((2, 0)))
        assert got == from_terms(2, [((1, 1), 1), ((0, 2), 1)])

    def test_theta_tilde_kills_doubly_occupied(self):
        assert apply("th~", 1, Polynomial.monomial((1, 1))).is_zero()

    def test_pi_tilde_word_gives_slide_golden(self):
        got = apply_word("pi~", (1, 2, 4, 3), Polynomial.monomial((3, 1, 1, 0, 0)))
        assert same_poly(got, monomials_to_sympy(SLIDE_11, 5))

    def test_theta_tilde_word_gives_fatom_golden(self):
        got = apply_word(
            "th~", (2, 1, 3, 2, 5, 4, 3), Polynomial.monomial((3, 2, 1, 0, 0, 0))
        )
        assert same_poly(got, monomials_to_sympy(FATOM_6, 6))

    def test_empty_word_is_identity(self):
        p = from_terms(2, [((1, 0), 2), ((0, 2), -1)])
        assert apply_word("pi", (), p) == p

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            apply("pi", 3, Polynomial.one(3))
        with pytest.raises(ValueError):
            apply("d", 0, Polynomial.one(3))


class TestOracleAgreement:
    def test_every_kind_on_all_small_monomials(self):
        n = 3
        for exps in itertools.product(range(4), repeat=n):
            p = Polynomial.monomial(exps)
            e = poly_to_sympy(p)
            for kind in ALL_KINDS:
                for i in range(1, n):
                    assert same_poly(apply(kind, i, p), o_apply(kind, i, e, n)), (
                        kind,
                        i,
                        exps,
                    )

    @given(
        st.dictionaries(
            st.tuples(*(st.integers(0, 3) for _ in range(3))),
            st.integers(-5, 5),
            max_size=4,
        ),
        st.sampled_from(ALL_KINDS),
        st.integers(1, 2),
    )
    @settings(max_examples=80, deadline=None)
    def test_linearity_on_random_polynomials(self, terms, kind, i):
        p = from_terms(3, terms.items())
        assert same_poly(apply(kind, i, p), o_apply(kind, i, poly_to_sympy(p), 3))


def _monomials(n, deg):
    for exps in itertools.product(range(deg + 1), repeat=n):
        if sum(exps) <= deg:
            yield Polynomial.monomial(exps)


class TestRelations:
    def test_squares(self):
        # s and s~ are involutions; d and d~ square to zero; pi and pi~ are
        # idempotent; th and th~ satisfy t^2 = -t
        for p in _monomials(3, 4):
            for i in (1, 2):
                for kind, law in [
                    ("s", "involution"), ("s~", "involution"),
                    ("d", "zero"), ("d~", "zero"),
                    ("pi", "idempotent"), ("pi~", "idempotent"),
                    ("th", "minus"), ("th~", "minus"),
                ]:
                    once = apply(kind, i, p)
                    twice = apply(kind, i, once)
                    if law == "involution":
                        assert twice == p
                    elif law == "zero":
                        assert twice.is_zero()
                    elif law == "idempotent":
                        assert twice == once
                    else:
                        assert twice == -once

    def test_theta_is_pi_minus_one(self):
        for p in _monomials(3, 4):
            for i in (1, 2):
                assert apply("th", i, p) == apply("pi", i, p) - p
                assert apply("th~", i, p) == apply("pi~", i, p) - p

    def test_braid_for_braided_kinds(self):
        for p in _monomials(3, 4):
            for kind in sorted(k.value for k in BRAIDED_KINDS):
                assert apply_word(kind, (1, 2, 1), p) == apply_word(
                    kind, (2, 1, 2), p
                )

    def test_partial_tilde_braid_counterexample(self):
        # frozen witness: the two braid words disagree on x1*x2^2
        p = Polynomial.monomial((1, 2, 0))
        lhs = apply_word("d~", (1, 2, 1), p)
        rhs = apply_word("d~", (2, 1, 2), p)
        assert lhs.is_zero()
        assert rhs == Polynomial.one(3) * -1
        assert lhs != rhs

    def test_distant_commutation(self):
        for p in _monomials(4, 3):
            for kind in ALL_KINDS:
                a = apply(kind, 1, apply(kind, 3, p))
                b = apply(kind, 3, apply(kind, 1, p))
                assert a == b


class TestWordsAndPerms:
    def test_coerce_kind(self):
        assert coerce_kind("pi~") is OperatorKind.PI_TILDE
        assert coerce_kind(OperatorKind.S) is OperatorKind.S
        with pytest.raises(ValueError):
            coerce_kind("nope")

    def test_apply_word_matches_oracle(self):
        for exps in [(2, 0, 1), (0, 0, 3), (1, 1, 0)]:
            p = Polynomial.monomial(exps)
            for word in [(1,), (2, 1), (1, 2, 1)]:
                for kind in ALL_KINDS:
                    got = apply_word(kind, word, p)
                    want = o_apply_word(kind, word, poly_to_sympy(p), 3)
                    assert same_poly(got, want), (kind, word, exps)

    def test_apply_perm_uses_any_reduced_word(self):
        p = Polynomial.monomial((2, 1, 0))
        w0 = long_element(3)
        assert apply_perm("pi", w0, p) == apply_word("pi", (1, 2, 1), p)

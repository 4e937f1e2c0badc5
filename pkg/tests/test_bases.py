"""The seven basis families against their oracles and worked examples."""

import itertools

import pytest
import sympy

from divdiff import (
    BasisFamily,
    Composition,
    Permutation,
    Polynomial,
    all_permutations,
    atom,
    basis_element,
    dominates,
    fatom,
    gessel,
    key,
    schubert,
    schur,
    slide,
)
from oracles import (
    monomials_to_sympy,
    o_atom,
    o_compositions,
    o_fatom,
    o_gessel,
    o_key,
    o_schubert,
    o_schur,
    o_slide,
    same_poly,
    sym_vars,
)

from test_operators import FATOM_6, SLIDE_11


def small_compositions(max_weight, max_length, min_length=1):
    for n in range(min_length, max_length + 1):
        for w in range(max_weight + 1):
            yield from o_compositions(w, n)


class TestKeyAtom:
    def test_key_goldens(self):
        x1, x2 = sym_vars(2)
        assert same_poly(key((0, 1)), x1 + x2)
        assert same_poly(key((0, 2)), x1**2 + x1 * x2 + x2**2)

    def test_weakly_decreasing_is_monomial(self):
        for a in [(3, 1), (2, 2, 0), (5,)]:
            assert key(a) == Polynomial.monomial(a)
            assert atom(a) == Polynomial.monomial(a)

    def test_atom_golden(self):
        x1, x2 = sym_vars(2)
        assert same_poly(atom((0, 2)), x1 * x2 + x2**2)

    def test_atoms_decompose_schur(self):
        total = atom((2, 0)) + atom((0, 2))
        assert total == schur((2,), n=2)

    def test_against_oracle(self):
        for a in small_compositions(4, 3):
            assert same_poly(key(a), o_key(a)), a
            assert same_poly(atom(a), o_atom(a)), a


class TestSchubert:
    def test_identity_is_one(self):
        assert schubert(Permutation((1, 2))) == Polynomial.one(2)

    def test_simple_transposition(self):
        assert schubert(Permutation((2, 1))) == Polynomial.monomial((1, 0))

    def test_longest_element_staircase(self):
        assert schubert(Permutation((3, 2, 1))) == Polynomial.monomial((2, 1, 0))

    def test_against_oracle_s3_s4(self):
        for n in (3, 4):
            for w in all_permutations(n):
                assert same_poly(schubert(w), o_schubert(tuple(w))), w


class TestSchur:
    def test_goldens(self):
        x1, x2 = sym_vars(2)
        assert same_poly(schur((1, 1), n=2), x1 * x2)
        assert same_poly(schur((2,), n=2), x1**2 + x1 * x2 + x2**2)

    def test_matches_key_of_reversal(self):
        for shape in [(2, 1), (3,), (2, 2), (3, 1)]:
            n = 3
            padded = tuple(shape) + (0,) * (n - len(shape))
            assert schur(shape, n=n) == key(tuple(reversed(padded)))

    def test_partition_only(self):
        with pytest.raises(ValueError):
            schur((1, 2), n=2)

    def test_against_oracle(self):
        for shape in [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1)]:
            for n in (2, 3):
                if len(shape) > n:
                    continue
                assert same_poly(schur(shape, n=n), o_schur(shape, n))


class TestSlide:
    def test_golden_eleven_monomials(self):
        assert same_poly(slide((0, 3, 1, 0, 1)), monomials_to_sympy(SLIDE_11, 5))

    def test_zero_free_is_monomial(self):
        assert slide((2, 1, 3)) == Polynomial.monomial((2, 1, 3))

    def test_prepended_zeros_give_gessel(self):
        for a, n in [((2,), 2), ((1, 1), 3), ((1, 2), 3)]:
            padded = (0,) * (n - len(a)) + tuple(a)
            assert slide(padded) == gessel(a, n)

    def test_methods_agree(self):
        for a in small_compositions(4, 4):
            assert slide(a, "combinatorial") == slide(a, "operator"), a

    def test_against_oracle(self):
        for a in small_compositions(4, 3):
            assert same_poly(slide(a), o_slide(a)), a

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            slide((0, 1), "magic")


class TestFatom:
    def test_golden_six_monomials(self):
        assert same_poly(fatom((0, 0, 3, 2, 0, 1)), monomials_to_sympy(FATOM_6, 6))

    def test_weight_two_golden(self):
        x1, x2 = sym_vars(2)
        assert same_poly(fatom((0, 2)), x2**2 + x1 * x2)

    def test_zero_free_is_monomial(self):
        assert fatom((1, 3, 1)) == Polynomial.monomial((1, 3, 1))

    def test_methods_agree(self):
        for a in small_compositions(4, 4):
            assert fatom(a, "combinatorial") == fatom(a, "operator"), a

    def test_against_oracle(self):
        for a in small_compositions(4, 3):
            assert same_poly(fatom(a), o_fatom(a)), a


class TestGessel:
    def test_single_part(self):
        xs = sym_vars(3)
        assert same_poly(gessel((1,), 3), sum(xs))

    def test_goldens(self):
        assert same_poly(gessel((2,), 2), o_gessel((2,), 2))
        x1, x2, x3 = sym_vars(3)
        assert same_poly(
            gessel((1, 2), 3),
            x1 * x2**2 + x1 * x2 * x3 + x1 * x3**2 + x2 * x3**2,
        )

    def test_three_methods_agree(self):
        for n in (1, 2, 3):
            for w in range(5):
                for parts in {tuple(p for p in a if p) for a in o_compositions(w, n)}:
                    if len(parts) > n or (w and not parts):
                        continue
                    c = gessel(parts, n, "combinatorial")
                    assert c == gessel(parts, n, "operator"), (parts, n)
                    assert c == gessel(parts, n, "theta_sum"), (parts, n)

    def test_against_oracle(self):
        for n in (2, 3):
            for w in range(1, 5):
                for parts in {tuple(p for p in a if p) for a in o_compositions(w, n)}:
                    if not parts or len(parts) > n:
                        continue
                    assert same_poly(gessel(parts, n), o_gessel(parts, n))

    def test_requires_strong_index(self):
        with pytest.raises(ValueError):
            gessel((1, 0, 2), 3)

    def test_requires_enough_variables(self):
        with pytest.raises(ValueError):
            gessel((1, 1, 1), 2)


class TestLeadingTerm:
    def test_monomial_minimality(self):
        # x^a has coefficient 1; every other support monomial dominates a
        for a in small_compositions(4, 3):
            for p in (slide(a), fatom(a)):
                recs = {tuple(r["exponents"]): r["coeff"] for r in p.to_records()}
                assert recs[tuple(Composition(a))] == 1
                for b in recs:
                    assert dominates(tuple(Composition(a)), b)


class TestDispatcher:
    def test_families(self):
        assert basis_element("K", (0, 2)) == key((0, 2))
        assert basis_element(BasisFamily.ATOM, (0, 2)) == atom((0, 2))
        assert basis_element("F", (0, 2)) == slide((0, 2))
        assert basis_element("A", (0, 2)) == fatom((0, 2))
        assert basis_element("S", (2, 1, 3)) == schubert(Permutation((2, 1, 3)))
        assert basis_element("Sch", (2, 1)) == schur((2, 1), n=2)
        assert basis_element("Fq", (2,), n=2) == gessel((2,), 2)

    def test_gessel_needs_explicit_n(self):
        with pytest.raises(ValueError):
            basis_element("Fq", (2,))

    def test_method_passthrough(self):
        assert basis_element("F", (0, 2), method="operator") == slide((0, 2))

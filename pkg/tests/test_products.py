"""Product rules: shuffle sets, fundamental shuffle sets, the signed
multiset-partition rule, and the psi fusion map.

Signed expansion goldens were frozen from the reconstruction oracle
expand_fatom(fatom(a) * fatom(b)), which this file also re-runs."""

import itertools

import pytest

from divdiff import (
    Composition,
    atom_multiset_partitions,
    dominates,
    expand_fatom,
    expand_slide,
    fatom,
    fatom_product,
    fatom_product_contributions,
    fundamental_shuffle_set,
    j_index,
    natural_position,
    psi_image,
    qshift,
    shuffle_set,
    slide,
    slide_product,
    slide_times_fatom,
    words_AB,
)
from oracles import o_compositions

GOLDEN_8_WORDS = {
    "33|1444|2",
    "334|144|2",
    "3344|14|2",
    "*|33444|12",
    "34|344|12",
    "344|34|12",
    "4|3344|12",
    "44|334|12",
}

FXA_TEXT = (
    "A[0,5,2] + A[1,4,2] + 2*A[2,3,2] + A[2,4,1]"
    " + A[3,2,2] + A[3,3,1] + A[4,2,1]"
)

A003_SQ_TEXT = (
    "A[0,0,6] + A[0,1,5] + 2*A[0,2,4] + A[0,3,3] - A[0,5,1] + A[1,0,5]"
    " + A[1,2,3] - A[1,4,1] + 2*A[2,0,4] - 2*A[2,3,1] + A[3,0,3]"
    " - A[3,2,1] - A[5,0,1]"
)

A102_X_A002_TEXT = "A[1,0,4] + A[1,1,3] - A[1,3,1] + A[2,0,3] - A[2,2,1]"


def pairs(max_weight, n):
    pool = [c for w in range(max_weight + 1) for c in o_compositions(w, n)]
    return itertools.product(pool, pool)


class TestWords:
    def test_words_AB_goldens(self):
        assert words_AB((0, 2, 1), (0, 3, 1)) == ((3, 3, 1), (4, 4, 4, 2))
        assert words_AB((1, 1), (2, 0)) == ((3, 1), (4, 4))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            words_AB((1, 1), (2,))

    def test_natural_positions(self):
        # odd letters 5,3,1 and even letters 6,4,2 sit at slots 1,2,3
        assert [natural_position(l, 3) for l in (5, 3, 1)] == [1, 2, 3]
        assert [natural_position(l, 3) for l in (6, 4, 2)] == [1, 2, 3]


class TestShuffleSet:
    def test_small_goldens(self):
        assert [w.display() for w in shuffle_set((1, 0), (1, 0))] == ["34"]
        assert sorted(w.display() for w in shuffle_set((0, 1), (1, 0))) == [
            "14",
            "4|1",
        ]
        assert sorted(w.display() for w in shuffle_set((1, 1), (0, 1))) == [
            "23|1",
            "3|12",
        ]

    def test_word_structure(self):
        for wd in shuffle_set((0, 2), (1, 1)):
            assert wd.kind == "plain"
            assert len(wd.letters) == len(wd.sources) == 4
            assert sorted(wd.sources).count("A") == 2
            da, db, d = wd.des_a, wd.des_b, wd.des
            assert [x + y for x, y in zip(da, db)] == list(d)

    def test_slide_product_golden(self):
        assert slide_product((0, 1), (0, 1)).to_text() == "F[0,2] + F[1,1]"

    def test_reconstruction(self):
        for a, b in pairs(2, 3):
            exp = slide_product(a, b)
            assert exp.to_polynomial() == slide(a) * slide(b), (a, b)
            assert all(c > 0 for c in exp.coeffs.values())

    def test_commutative(self):
        for a, b in [((0, 2), (1, 1)), ((1, 0, 1), (0, 2, 0))]:
            assert slide_product(a, b) == slide_product(b, a)


class TestFundamentalShuffleSet:
    def test_golden_eight_words(self):
        fs = fundamental_shuffle_set((0, 2, 1), (0, 3, 1))
        assert len(fs) == 8
        assert {w.display() for w in fs} == GOLDEN_8_WORDS

    def test_des_b_stays_in_fatom_window(self):
        b = (0, 3, 1)
        hi = tuple(qshift(b))
        for wd in fundamental_shuffle_set((0, 2, 1), b):
            assert wd.kind == "fundamental"
            assert dominates(b, wd.des_b) and dominates(wd.des_b, hi)

    def test_star_rejection(self):
        # (3,0,1) passes the lower dominance bound for b=(0,3,1) but falls
        # outside the qshift window, so no word in the set carries it.
        b = (0, 3, 1)
        assert dominates(b, (3, 0, 1))
        assert not dominates((3, 0, 1), tuple(qshift(b)))
        fs = fundamental_shuffle_set((0, 2, 1), b)
        assert (3, 0, 1) not in {tuple(w.des_b) for w in fs}

    def test_slide_times_fatom_golden(self):
        exp = slide_times_fatom((0, 2, 1), (0, 3, 1))
        assert exp.to_text() == FXA_TEXT
        assert exp.coeffs[Composition((2, 3, 2))] == 2
        assert len(exp.coeffs) == 7

    def test_reconstruction(self):
        for a, b in pairs(2, 3):
            exp = slide_times_fatom(a, b)
            assert exp.to_polynomial() == slide(a) * fatom(b), (a, b)
            assert all(c > 0 for c in exp.coeffs.values())


class TestJIndex:
    def test_goldens(self):
        g = (0, 0, 3, 0, 1, 4, 0, 5)
        assert j_index(g, 3) == 1
        assert j_index(g, 5) == 4
        assert j_index(g, 6) == 6
        assert j_index(g, 8) == 7

    def test_rejects_zero_part_and_out_of_range(self):
        g = (0, 0, 3, 0, 1, 4, 0, 5)
        for i in (4, 0, 9):
            with pytest.raises(ValueError):
                j_index(g, i)


class TestMultisetPartitions:
    def test_counts_and_signs(self):
        mp = atom_multiset_partitions((0, 0, 3), (0, 0, 3))
        assert len(mp) == 16
        assert sum(1 for m in mp if m.sign > 0) == 10
        assert sum(1 for m in mp if m.sign < 0) == 6

        mp = atom_multiset_partitions((1, 0, 2), (0, 0, 2))
        assert len(mp) == 5
        assert sum(1 for m in mp if m.sign > 0) == 3
        assert sum(1 for m in mp if m.sign < 0) == 2

    def test_zero_free_pair_is_single_positive(self):
        mp = atom_multiset_partitions((1, 1), (1, 1))
        assert len(mp) == 1
        assert mp[0].sign == 1
        assert tuple(mp[0].weight) == (2, 2)

    def test_signs_sum_to_structure_constants(self):
        for a, b in [((0, 0, 3), (0, 0, 3)), ((1, 0, 2), (0, 0, 2))]:
            totals = {}
            for m in atom_multiset_partitions(a, b):
                w = tuple(m.weight)
                totals[w] = totals.get(w, 0) + m.sign
            exp = fatom_product(a, b)
            assert {k: v for k, v in totals.items() if v} == {
                tuple(k): v for k, v in exp.coeffs.items()
            }


class TestFatomProduct:
    def test_signed_goldens(self):
        assert fatom_product((0, 0, 3), (0, 0, 3)).to_text() == A003_SQ_TEXT
        assert fatom_product((1, 0, 2), (0, 0, 2)).to_text() == A102_X_A002_TEXT
        assert len(fatom_product((0, 0, 3), (0, 0, 3)).coeffs) == 13
        assert len(fatom_product((1, 0, 2), (0, 0, 2)).coeffs) == 5

    def test_small_goldens_from_oracle(self):
        assert fatom_product((1, 1), (0, 1)).to_text() == "A[1,2]"
        assert fatom_product((0, 1), (0, 1)).to_text() == "A[0,2] - A[1,1]"
        assert (
            fatom_product((1, 0, 1), (2, 0, 1)).to_text() == "A[3,0,2] - A[3,1,1]"
        )
        assert (
            fatom_product((1, 0, 1), (0, 0, 2)).to_text()
            == "A[1,0,3] - A[1,2,1] + A[2,0,2] - A[2,1,1]"
        )

    def test_reconstruction(self):
        for a, b in pairs(2, 3):
            exp = fatom_product(a, b)
            assert exp.to_polynomial() == fatom(a) * fatom(b), (a, b)
            assert exp == expand_fatom(fatom(a) * fatom(b))

    def test_commutative(self):
        for a, b in [((0, 1), (1, 1)), ((1, 0, 2), (0, 0, 2)), ((0, 0, 3), (0, 2, 0))]:
            assert fatom_product(a, b) == fatom_product(b, a)

    def test_cancellation_free(self):
        for a, b in pairs(3, 2):
            for idx, (pos, neg) in fatom_product_contributions(a, b).items():
                assert pos == 0 or neg == 0, (a, b, idx)

    def test_contributions_match_product(self):
        for a, b in [((0, 0, 3), (0, 0, 3)), ((1, 0, 2), (0, 0, 2))]:
            contrib = fatom_product_contributions(a, b)
            exp = fatom_product(a, b)
            assert {k: p - n for k, (p, n) in contrib.items() if p != n} == dict(
                exp.coeffs
            )

    def test_strong_first_factor_positive(self):
        for n in (2, 3):
            strong = [
                c for w in range(1, 4) for c in o_compositions(w, n) if all(c)
            ]
            weak = [c for w in range(4) for c in o_compositions(w, n)]
            for a in strong:
                for b in weak:
                    exp = fatom_product(a, b)
                    assert all(c > 0 for c in exp.coeffs.values()), (a, b)


class TestPsi:
    def test_worked_example(self):
        img = psi_image(
            (2, 0, 3, 0, 1), (0, 0, 2, 0, 2), (2, 2, 1, 0, 1), (0, 0, 2, 1, 1)
        )
        assert img.display_inline() == "99*55566212"
        assert tuple(img.des) == (2, 0, 5, 1, 2)
        assert img.parts == ((9, 9), (), (5, 5, 5, 6, 6), (2,), (1, 2))

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            psi_image((2, 0, 3, 0, 1), (0, 0, 2, 0, 2), (2, 2, 1), (0, 0, 2, 1, 1))
        with pytest.raises(ValueError):
            psi_image(
                (2, 0, 3, 0, 1), (0, 0, 2, 0, 2), (2, 2, 2, 0, 1), (0, 0, 2, 1, 1)
            )

    def test_descent_weight_is_conserved(self):
        img = psi_image(
            (2, 0, 3, 0, 1), (0, 0, 2, 0, 2), (2, 2, 1, 0, 1), (0, 0, 2, 1, 1)
        )
        assert img.des.weight == 10
        assert sum(len(p) for p in img.parts) == 10

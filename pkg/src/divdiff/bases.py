"""Polynomial basis families built from divided differences.

Each quasisymmetric family has an operator construction and an independent
combinatorial one; both are exposed and tested against each other.
"""

from __future__ import annotations

import enum
import functools
from typing import Sequence

from . import operators
from .compositions import (
    Composition,
    atom_interval,
    compositions,
    csum,
    flat,
    is_strong,
    refines,
    set_of,
    sort_desc,
)
from .operators import OperatorKind
from .permutations import (
    Permutation,
    all_permutations,
    any_reduced_word,
    long_element,
    min_word_flat,
    min_word_sort,
)
from .polynomials import Polynomial


class BasisFamily(str, enum.Enum):
    KEY = "K"
    ATOM = "At"
    SCHUBERT = "S"
    SCHUR = "Sch"
    SLIDE = "F"
    FATOM = "A"
    GESSEL = "Fq"


def key(a: Sequence[int]) -> Polynomial:
    """Key polynomial: the pi word for a applied to the sorted monomial."""
    return _key_cached(Composition(a))


@functools.lru_cache(maxsize=None)
def _key_cached(a: Composition) -> Polynomial:
    return operators.apply_word(
        OperatorKind.PI, min_word_sort(a), Polynomial.monomial(sort_desc(a))
    )


def atom(a: Sequence[int]) -> Polynomial:
    """Classical Demazure atom: the theta word for a applied to the sorted monomial."""
    return _atom_cached(Composition(a))


@functools.lru_cache(maxsize=None)
def _atom_cached(a: Composition) -> Polynomial:
    return operators.apply_word(
        OperatorKind.THETA, min_word_sort(a), Polynomial.monomial(sort_desc(a))
    )


def schubert(w: Sequence[int]) -> Polynomial:
    """Schubert polynomial of a permutation, by descending induction from the staircase."""
    w = Permutation(w)
    n = w.n
    staircase = tuple(range(n - 1, -1, -1))
    v = w.inverse() * long_element(n)
    return operators.apply_perm(
        OperatorKind.PARTIAL, v, Polynomial.monomial(staircase)
    )


def schur(shape: Sequence[int], n: int) -> Polynomial:
    """Schur polynomial of a partition in n variables."""
    shape = tuple(shape)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError("schur() needs a partition (weakly decreasing), got %r" % (shape,))
    lam = Composition(shape, n=n)
    return operators.apply_perm(
        OperatorKind.PI, long_element(n), Polynomial.monomial(lam)
    )


def slide(a: Sequence[int], method: str = "combinatorial") -> Polynomial:
    """Fundamental slide polynomial of a weak composition."""
    a = Composition(a)
    if method == "combinatorial":
        return _slide_comb(a)
    if method == "operator":
        return operators.apply_word(
            OperatorKind.PI_TILDE, min_word_flat(a), Polynomial.monomial(flat(a))
        )
    raise ValueError("unknown slide method %r" % (method,))


@functools.lru_cache(maxsize=None)
def _slide_comb(a: Composition) -> Polynomial:
    # monomials are the b of equal weight dominating a whose flattening
    # refines the flattening of a
    fa = flat(a)
    lo = csum(a)
    w = a.weight
    terms = {}
    for b in _dominating(a.n, w, lo):
        if refines(flat(b), fa):
            terms[tuple(b)] = 1
    return Polynomial(a.n, terms)


def _dominating(n, weight, lo):
    # all weak compositions of the weight whose csum is entrywise >= lo
    def rec(i, prev, acc):
        if i == n:
            yield acc
            return
        for c in range(max(prev, lo[i]), weight + 1):
            if i == n - 1 and c != weight:
                continue
            yield from rec(i + 1, c, acc + (c - prev,))

    if n == 0:
        if weight == 0:
            yield ()
        return
    yield from rec(0, 0, ())


def fatom(a: Sequence[int], method: str = "combinatorial") -> Polynomial:
    """Fundamental particle (atom) of a weak composition."""
    a = Composition(a)
    if method == "combinatorial":
        return _fatom_comb(a)
    if method == "operator":
        return operators.apply_word(
            OperatorKind.THETA_TILDE, min_word_flat(a), Polynomial.monomial(flat(a))
        )
    raise ValueError("unknown fatom method %r" % (method,))


@functools.lru_cache(maxsize=None)
def _fatom_comb(a: Composition) -> Polynomial:
    return Polynomial(a.n, {tuple(b): 1 for b in atom_interval(a)})


def gessel(a: Sequence[int], n: int, method: str = "combinatorial") -> Polynomial:
    """Gessel fundamental quasisymmetric polynomial of a strong composition in n variables."""
    a = Composition(a)
    if not is_strong(a):
        raise ValueError("gessel() needs a strong composition, got %r" % (tuple(a),))
    parts = tuple(p for p in a if p)
    if len(parts) > n:
        raise ValueError(
            "composition %r has more parts than variables (%d)" % (parts, n)
        )
    if method == "combinatorial":
        return _gessel_comb(parts, n)
    padded = Polynomial.monomial(Composition(parts, n=n))
    if method == "operator":
        return operators.apply_perm(OperatorKind.PI_TILDE, long_element(n), padded)
    if method == "theta_sum":
        total = Polynomial.zero(n)
        for sigma in all_permutations(n):
            total = total + operators.apply_word(
                OperatorKind.THETA_TILDE, any_reduced_word(sigma), padded
            )
        return total
    raise ValueError("unknown gessel method %r" % (method,))


@functools.lru_cache(maxsize=None)
def _gessel_comb(parts: tuple[int, ...], n: int) -> Polynomial:
    # monomials from weakly increasing variable chains, strictly increasing
    # across the partial-sum positions of the index
    k = sum(parts)
    strict = set_of(parts)
    terms: dict[tuple[int, ...], int] = {}

    def rec(j, var, counts):
        if j == k:
            terms[counts] = 1
            return
        for i in range(var, n + 1):
            bumped = counts[: i - 1] + (counts[i - 1] + 1,) + counts[i:]
            rec(j + 1, i + 1 if (j + 1) in strict else i, bumped)

    rec(0, 1, (0,) * n)
    return Polynomial(n, terms)


def basis_element(family, index, n: int | None = None, method: str | None = None) -> Polynomial:
    """Uniform constructor used by the expansion engine and the CLI."""
    family = BasisFamily(family)
    if family is BasisFamily.KEY:
        return key(Composition(index, n=n))
    if family is BasisFamily.ATOM:
        return atom(Composition(index, n=n))
    if family is BasisFamily.SCHUBERT:
        return schubert(index)
    if family is BasisFamily.SCHUR:
        idx = tuple(index)
        return schur(idx, n if n is not None else len(idx))
    if family is BasisFamily.SLIDE:
        return slide(Composition(index, n=n), method or "combinatorial")
    if family is BasisFamily.FATOM:
        return fatom(Composition(index, n=n), method or "combinatorial")
    if family is BasisFamily.GESSEL:
        if n is None:
            raise ValueError("gessel elements need an explicit variable count")
        return gessel(Composition(index), n, method or "combinatorial")
    raise ValueError("unknown family %r" % (family,))


__all__ = [
    "BasisFamily",
    "key",
    "atom",
    "schubert",
    "schur",
    "slide",
    "fatom",
    "gessel",
    "basis_element",
]

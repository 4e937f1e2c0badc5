"""Change of basis by greedy elimination of the dominance-minimal monomial."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .bases import BasisFamily, basis_element
from .compositions import Composition, csum, flat, is_strong
from .polynomials import Polynomial

# families whose elements have unitriangular monomial support over dominance,
# hence admit the greedy algorithm
GREEDY_FAMILIES = (
    BasisFamily.FATOM,
    BasisFamily.SLIDE,
    BasisFamily.KEY,
    BasisFamily.ATOM,
)


@dataclass(frozen=True, eq=False)
class BasisExpansion:
    """A finite integer combination of basis elements of one family."""

    family: BasisFamily
    nvars: int
    coeffs: Mapping[Composition, int]

    def items_canonical(self) -> list[tuple[Composition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: csum(kv[0]))

    def to_polynomial(self) -> Polynomial:
        total = Polynomial.zero(self.nvars)
        for index, c in self.coeffs.items():
            total = total + basis_element(self.family, index, n=self.nvars) * c
        return total

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for index, c in self.items_canonical():
            mag = "" if abs(c) == 1 else "%d*" % abs(c)
            term = "%s%s[%s]" % (mag, self.family.value, ",".join(map(str, index)))
            if not chunks:
                chunks.append(term if c > 0 else "-" + term)
            else:
                chunks.append(("+ " if c > 0 else "- ") + term)
        return " ".join(chunks)

    def to_records(self) -> dict:
        return {
            "family": self.family.value,
            "terms": [
                {"index": list(index), "coeff": c}
                for index, c in self.items_canonical()
            ],
        }

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return (
            self.family == other.family
            and self.nvars == other.nvars
            and dict(self.coeffs) == dict(other.coeffs)
        )


@dataclass
class GreedyRun:
    """Trace of one greedy expansion, kept for the termination diagnostics."""

    expansion: BasisExpansion
    steps: int
    pivots: list[Composition] = field(default_factory=list)
    pivot_supports: list[int] = field(default_factory=list)


def greedy_expand(p: Polynomial, family) -> GreedyRun:
    """Expand p in the family by repeatedly clearing the csum-lex least monomial.

    Each basis element has its index as the unique dominance-minimal support
    monomial with coefficient 1, so every step removes the current pivot and
    only ever introduces monomials strictly above it; the pivot sequence is
    strictly increasing in csum-lex order, which both guarantees termination
    and is asserted as a guard.
    """
    family = BasisFamily(family)
    if family not in GREEDY_FAMILIES:
        raise ValueError("no greedy expansion for family %r" % (family,))
    coeffs: dict[Composition, int] = {}
    run = GreedyRun(BasisExpansion(family, p.nvars, coeffs), 0)
    rem = p
    prev_key = None
    while not rem.is_zero():
        pivot = min(rem.support(), key=csum)
        key_ = csum(pivot)
        if prev_key is not None and key_ <= prev_key:
            raise ArithmeticError(
                "pivot %r did not advance; family %s is not triangular here"
                % (pivot, family.value)
            )
        prev_key = key_
        c = rem.coefficient(pivot)
        index = Composition(pivot)
        elem = basis_element(family, index, n=p.nvars)
        coeffs[index] = c
        run.pivots.append(index)
        run.pivot_supports.append(len(elem))
        rem = rem - elem * c
        run.steps += 1
    return run


def expand_in_basis(p: Polynomial, family) -> BasisExpansion:
    return greedy_expand(p, family).expansion


def expand_fatom(p: Polynomial) -> BasisExpansion:
    return expand_in_basis(p, BasisFamily.FATOM)


def expand_slide(p: Polynomial) -> BasisExpansion:
    return expand_in_basis(p, BasisFamily.SLIDE)


def expand_key(p: Polynomial) -> BasisExpansion:
    return expand_in_basis(p, BasisFamily.KEY)


def expand_atom(p: Polynomial) -> BasisExpansion:
    return expand_in_basis(p, BasisFamily.ATOM)


def slide_to_fatoms(a: Sequence[int]) -> BasisExpansion:
    """Closed-form particle expansion of one slide polynomial.

    The indices are the b of equal weight that dominate a and have the same
    flattening; every coefficient is 1.
    """
    a = Composition(a)
    parts = [p for p in flat(a) if p]
    coeffs: dict[Composition, int] = {}
    for positions in itertools.combinations(range(a.n), len(parts)):
        b = [0] * a.n
        for pos, val in zip(positions, parts):
            b[pos] = val
        b = Composition(b)
        if _dominates_csum(b, a):
            coeffs[b] = 1
    return BasisExpansion(BasisFamily.FATOM, a.n, coeffs)


def gessel_to_fatoms(a: Sequence[int], n: int) -> BasisExpansion:
    """Particle expansion of a Gessel function: every spread of a into n slots."""
    a = Composition(a)
    if not is_strong(a):
        raise ValueError("gessel_to_fatoms() needs a strong composition")
    parts = [p for p in a if p]
    if len(parts) > n:
        raise ValueError("more parts than variables")
    coeffs: dict[Composition, int] = {}
    for positions in itertools.combinations(range(n), len(parts)):
        b = [0] * n
        for pos, val in zip(positions, parts):
            b[pos] = val
        coeffs[Composition(b)] = 1
    return BasisExpansion(BasisFamily.FATOM, n, coeffs)


def _dominates_csum(b, a) -> bool:
    ta = tb = 0
    for pb, pa in zip(b, a):
        tb += pb
        ta += pa
        if tb < ta:
            return False
    return True


__all__ = [
    "BasisExpansion",
    "GreedyRun",
    "GREEDY_FAMILIES",
    "greedy_expand",
    "expand_in_basis",
    "expand_fatom",
    "expand_slide",
    "expand_key",
    "expand_atom",
    "slide_to_fatoms",
    "gessel_to_fatoms",
]

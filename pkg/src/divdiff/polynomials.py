"""Sparse multivariate polynomials with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence


def _canonical_key(exps: tuple[int, ...]) -> tuple:
    # graded order first, then lexicographic with the x1-heavy monomial first
    return (sum(exps), tuple(-e for e in exps))


class Polynomial:
    """An element of Z[x_1..x_n], stored as {exponent vector: coefficient}.

    Instances are treated as immutable; every operation returns a new object
    and zero coefficients are never stored.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(
                    "exponent vector %r has length %d, expected %d"
                    % (exps, len(exps), nvars)
                )
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in %r" % (exps,))
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError("coefficients must be integers, got %r" % (c,))
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 1 <= i <= nvars:
            raise ValueError("variable index %d out of range" % i)
        exps = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return cls(nvars, {exps: 1})

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self._terms.items())

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self._terms, key=_canonical_key))

    def canonical_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return [(e, self._terms[e]) for e in self.support()]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    # -- arithmetic -------------------------------------------------------

    def _require_same_ring(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                "mixed variable counts: %d vs %d" % (self.nvars, other.nvars)
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.one(self.nvars) * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.one(self.nvars) * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero(self.nvars)
            return Polynomial(
                self.nvars, {e: c * other for e, c in self._terms.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Polynomial.one(self.nvars) * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # mutable-dict backed; not hashable

    # -- rendering --------------------------------------------------------

    def to_text(self) -> str:
        """Human form, e.g. ``3*x1^2*x2 + -1*x3``; the zero polynomial is ``0``."""
        if not self._terms:
            return "0"
        chunks = []
        for exps, c in self.canonical_terms():
            vars_part = "*".join(
                "x%d" % (i + 1) if e == 1 else "x%d^%d" % (i + 1, e)
                for i, e in enumerate(exps)
                if e
            )
            if not vars_part:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(vars_part)
            else:
                chunks.append("%d*%s" % (c, vars_part))
        return " + ".join(chunks)

    def to_records(self) -> list[dict]:
        """Canonically ordered [{exponents, coeff}] rows for structured output."""
        return [
            {"exponents": list(e), "coeff": c} for e, c in self.canonical_terms()
        ]

    def __repr__(self) -> str:
        return "Polynomial(%d, %s)" % (self.nvars, self.to_text())


def from_terms(nvars: int, pairs: Iterable[tuple[Sequence[int], int]]) -> Polynomial:
    acc: dict[tuple[int, ...], int] = {}
    for exps, c in pairs:
        e = tuple(exps)
        acc[e] = acc.get(e, 0) + c
    return Polynomial(nvars, acc)

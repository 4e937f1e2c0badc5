"""Divided-difference operators, classical and quasisymmetric.

Every operator acts linearly; the monomial actions below are closed-form
telescoping sums, so no polynomial division is ever performed.  Writing
(a, b) for the exponents in positions (i, i+1):

  s    swap a and b
  s~   swap a and b only when one of them is zero
  d    0 if a = b, else the signed sum of x_i^j x_{i+1}^{a+b-1-j}
       for j between min(a,b) and max(a,b)-1, positive when a > b
  pi   d after multiplying by x_i
  th   pi - 1
  d~   0 if s~ fixes the monomial, else the signed staircase of degree
       a+b-1 spread across positions i, i+1
  th~  x_{i+1} d~
  pi~  1 + th~

The quasisymmetric lowering operator d~ does NOT satisfy the braid
relation; the other seven do.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .permutations import Permutation, any_reduced_word, word_indices
from .polynomials import Polynomial


class OperatorKind(str, enum.Enum):
    S = "s"
    S_TILDE = "s~"
    PARTIAL = "d"
    PI = "pi"
    THETA = "th"
    PARTIAL_TILDE = "d~"
    PI_TILDE = "pi~"
    THETA_TILDE = "th~"


# kinds whose word action is independent of the reduced word chosen
BRAIDED_KINDS = frozenset(
    k for k in OperatorKind if k is not OperatorKind.PARTIAL_TILDE
)


def _emit_s(a, b):
    yield (b, a), 1


def _emit_s_tilde(a, b):
    if a == 0 or b == 0:
        yield (b, a), 1
    else:
        yield (a, b), 1


def _emit_partial(a, b):
    if a > b:
        for j in range(b, a):
            yield (j, a + b - 1 - j), 1
    elif a < b:
        for j in range(a, b):
            yield (j, a + b - 1 - j), -1


def _emit_pi(a, b):
    if a >= b:
        for j in range(b, a + 1):
            yield (j, a + b - j), 1
    else:
        for j in range(a + 1, b):
            yield (j, a + b - j), -1


def _emit_theta(a, b):
    if a > b:
        for j in range(b, a):
            yield (j, a + b - j), 1
    elif a < b:
        for j in range(a, b):
            yield (j, a + b - j), -1


def _emit_partial_tilde(a, b):
    if a > 0 and b == 0:
        for t in range(a):
            yield (t, a - 1 - t), 1
    elif a == 0 and b > 0:
        for t in range(b):
            yield (t, b - 1 - t), -1
    # both zero or both positive: s~ fixes the monomial, difference vanishes


def _emit_theta_tilde(a, b):
    if a > 0 and b == 0:
        for j in range(1, a + 1):
            yield (a - j, j), 1
    elif a == 0 and b > 0:
        for j in range(b):
            yield (j, b - j), -1


def _emit_pi_tilde(a, b):
    # 1 + th~; a blocked monomial (both entries positive) is fixed
    if b == 0:
        for j in range(a + 1):
            yield (a - j, j), 1
    elif a == 0:
        for j in range(1, b):
            yield (j, b - j), -1
    else:
        yield (a, b), 1


_EMITTERS = {
    OperatorKind.S: _emit_s,
    OperatorKind.S_TILDE: _emit_s_tilde,
    OperatorKind.PARTIAL: _emit_partial,
    OperatorKind.PI: _emit_pi,
    OperatorKind.THETA: _emit_theta,
    OperatorKind.PARTIAL_TILDE: _emit_partial_tilde,
    OperatorKind.PI_TILDE: _emit_pi_tilde,
    OperatorKind.THETA_TILDE: _emit_theta_tilde,
}


def coerce_kind(kind) -> OperatorKind:
    if isinstance(kind, OperatorKind):
        return kind
    try:
        return OperatorKind(kind)
    except ValueError:
        raise ValueError("unknown operator kind %r" % (kind,)) from None


def apply(kind, i: int, p: Polynomial) -> Polynomial:
    """Apply one elementary operator at position i."""
    kind = coerce_kind(kind)
    if not 1 <= i < p.nvars:
        raise ValueError("operator index %d out of range for %d variables" % (i, p.nvars))
    emit = _EMITTERS[kind]
    out: dict[tuple[int, ...], int] = {}
    for exps, c in p.items():
        a, b = exps[i - 1], exps[i]
        for (na, nb), mult in emit(a, b):
            e = exps[: i - 1] + (na, nb) + exps[i + 1 :]
            out[e] = out.get(e, 0) + c * mult
    return Polynomial(p.nvars, out)


def apply_word(kind, word, p: Polynomial) -> Polynomial:
    """Apply a word of operators, rightmost index first."""
    kind = coerce_kind(kind)
    for i in reversed(word_indices(word)):
        if p.is_zero():
            return p
        p = apply(kind, i, p)
    return p


def apply_perm(kind, w: Permutation, p: Polynomial) -> Polynomial:
    """Apply the operator indexed by a permutation, via a reduced word.

    Rejected for the non-braiding kind d~, whose word action depends on the
    word chosen; pass an explicit word instead.
    """
    kind = coerce_kind(kind)
    if kind not in BRAIDED_KINDS:
        raise ValueError(
            "operator %s does not braid; apply an explicit word instead" % kind.value
        )
    return apply_word(kind, any_reduced_word(Permutation(w)), p)


__all__ = [
    "OperatorKind",
    "BRAIDED_KINDS",
    "coerce_kind",
    "apply",
    "apply_word",
    "apply_perm",
]

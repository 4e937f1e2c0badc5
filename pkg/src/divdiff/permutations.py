"""Permutations, reduced words, and their actions on weak compositions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .compositions import Composition


class Permutation(tuple):
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ()

    def __new__(cls, one_line: Iterable[int]):
        vals = tuple(one_line)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError("not a permutation of 1..n: %r" % (vals,))
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self*other)(i) = self(other(i)); other acts first
        if len(self) != len(other):
            raise ValueError("size mismatch")
        return Permutation(self[other[i] - 1] for i in range(len(self)))

    def inverse(self) -> "Permutation":
        out = [0] * len(self)
        for i, v in enumerate(self):
            out[v - 1] = i + 1
        return Permutation(out)

    def length(self) -> int:
        """Number of inversions."""
        return sum(
            1
            for i in range(len(self))
            for j in range(i + 1, len(self))
            if self[i] > self[j]
        )

    def __repr__(self) -> str:
        return "Permutation(%s)" % (list(self),)


@dataclass(frozen=True)
class ReducedWord:
    """A word in the elementary indices, tagged with which action it drives."""

    indices: tuple[int, ...]
    flavor: str = "symmetric"  # or "quasisymmetric"

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def long_element(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def simple(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError("simple transposition index out of range: %d" % i)
    vals = list(range(1, n + 1))
    vals[i - 1], vals[i] = vals[i], vals[i - 1]
    return Permutation(vals)


def word_indices(word) -> tuple[int, ...]:
    return tuple(word.indices) if isinstance(word, ReducedWord) else tuple(word)


def perm_from_word(word, n: int | None = None) -> Permutation:
    """Evaluate a word as a product of simple transpositions.

    The rightmost index acts first: (i1, ..., ik) evaluates to
    s_{i1} o ... o s_{ik} as a function.
    """
    idx = word_indices(word)
    if n is None:
        n = max(idx) + 1 if idx else 1
    vals = list(range(1, n + 1))
    for i in reversed(idx):
        if not 1 <= i < n:
            raise ValueError("word index %d out of range for n=%d" % (i, n))
        # left-multiplying by s_i swaps the VALUES i and i+1
        vals = [v + 1 if v == i else v - 1 if v == i + 1 else v for v in vals]
    return Permutation(vals)


def any_reduced_word(w: Permutation) -> tuple[int, ...]:
    """The lexicographically least reduced word of w (deterministic)."""
    w = Permutation(w)
    inv = list(w.inverse())
    out = []
    remaining = w.length()
    while remaining:
        for i in range(1, len(inv)):
            if inv[i - 1] > inv[i]:  # smallest left descent
                out.append(i)
                inv[i - 1], inv[i] = inv[i], inv[i - 1]
                remaining -= 1
                break
    return tuple(out)


def s_swap(i: int, a: Sequence[int]) -> Composition:
    """Classical action of s_i: swap entries i and i+1."""
    a = Composition(a)
    if not 1 <= i < a.n:
        raise ValueError("index %d out of range for length %d" % (i, a.n))
    out = list(a)
    out[i - 1], out[i] = out[i], out[i - 1]
    return Composition(out)


def s_tilde_swap(i: int, a: Sequence[int]) -> Composition:
    """Quasisymmetric action of s_i: swap entries i and i+1 only if one is zero."""
    a = Composition(a)
    if not 1 <= i < a.n:
        raise ValueError("index %d out of range for length %d" % (i, a.n))
    if a[i - 1] != 0 and a[i] != 0:
        return a
    return s_swap(i, a)


def act(w, a: Sequence[int], action: str = "symmetric") -> Composition:
    """Apply a permutation or a word to a composition.

    A permutation w acts classically by (w.a)_{w(i)} = a_i; the
    quasisymmetric action applies the zero-aware swaps along a reduced word
    of w (well defined since they braid).  A raw word is applied with the
    rightmost index first, matching operator composition.
    """
    a = Composition(a)
    if action not in ("symmetric", "quasisymmetric"):
        raise ValueError("unknown action %r" % action)
    elementary = s_swap if action == "symmetric" else s_tilde_swap
    if isinstance(w, Permutation):
        if action == "symmetric":
            if w.n != a.n:
                raise ValueError("size mismatch")
            out = [0] * a.n
            for i in range(a.n):
                out[w[i] - 1] = a[i]
            return Composition(out)
        w = any_reduced_word(w)
    for i in reversed(word_indices(w)):
        a = elementary(i, a)
    return a


def sort_permutation(a: Sequence[int]) -> Permutation:
    """The standardizing permutation: act(w, a) = sort_desc(a), equal parts kept stable."""
    a = Composition(a)
    order = sorted(range(a.n), key=lambda i: (-a[i], i))
    out = [0] * a.n
    for rank, i in enumerate(order):
        out[i] = rank + 1
    return Permutation(out)


def flat_permutation(a: Sequence[int]) -> Permutation:
    """The zero-packing permutation: act(w, a) = flat(a), nonzeros kept in order."""
    a = Composition(a)
    order = [i for i in range(a.n) if a[i]] + [i for i in range(a.n) if not a[i]]
    out = [0] * a.n
    for rank, i in enumerate(order):
        out[i] = rank + 1
    return Permutation(out)


def min_word_sort(a: Sequence[int]) -> ReducedWord:
    """Lex-least reduced word of sort_permutation(a)^{-1}.

    This is the word driving the operator products that build keys and
    classical atoms; equal parts are never permuted.
    """
    return ReducedWord(any_reduced_word(sort_permutation(a).inverse()), "symmetric")


def min_word_flat(a: Sequence[int]) -> ReducedWord:
    """Word of flat_permutation(a)^{-1} built by bubbling zeros through.

    With the nonzero positions p_1 < ... < p_m, part k travels from slot k
    out to p_k; reading those moves back gives the word that carries
    x^flat(a) to the basis element indexed by a.
    """
    a = Composition(a)
    pos = [i + 1 for i in range(a.n) if a[i]]
    moves: list[int] = []
    for k in range(len(pos), 0, -1):
        moves.extend(range(k, pos[k - 1]))
    return ReducedWord(tuple(reversed(moves)), "quasisymmetric")


__all__ = [
    "Permutation",
    "ReducedWord",
    "identity",
    "long_element",
    "all_permutations",
    "simple",
    "perm_from_word",
    "any_reduced_word",
    "s_swap",
    "s_tilde_swap",
    "act",
    "sort_permutation",
    "flat_permutation",
    "min_word_sort",
    "min_word_flat",
    "word_indices",
]

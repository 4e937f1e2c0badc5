"""Weak compositions and the combinatorial maps and orders defined on them."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Composition(tuple):
    """A weak composition with a fixed ambient length.

    Parts are nonnegative integers; the ambient length is the length of the
    underlying tuple.  Construction pads with trailing zeros (or strips
    surplus trailing zeros) to reach a requested length ``n``, so equality
    compares zero-padded forms of the same ambient length.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = (), n: int | None = None):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 0:
                raise ValueError("parts must be nonnegative integers, got %r" % (p,))
        if n is not None:
            if n < 0:
                raise ValueError("ambient length must be nonnegative")
            if n < len(parts):
                if any(parts[n:]):
                    raise ValueError(
                        "cannot truncate nonzero parts of %r to length %d" % (parts, n)
                    )
                parts = parts[:n]
            else:
                parts = parts + (0,) * (n - len(parts))
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "Composition(%s)" % (tuple(self),)


def flat(a: Sequence[int]) -> Composition:
    """Strong composition of a's nonzero parts in order, padded to a's length."""
    a = Composition(a)
    return Composition([p for p in a if p != 0], n=a.n)


def sort_desc(a: Sequence[int]) -> Composition:
    """Parts rearranged weakly decreasing (same ambient length)."""
    a = Composition(a)
    return Composition(sorted(a, reverse=True))


def csum(a: Sequence[int]) -> tuple[int, ...]:
    """Cumulative sums (c_1, c_1+c_2, ...)."""
    out = []
    t = 0
    for p in a:
        t += p
        out.append(t)
    return tuple(out)


def dominates(b: Sequence[int], c: Sequence[int]) -> bool:
    """True when b's cumulative sums are entrywise <= c's, written b <| c.

    Both arguments must share one ambient length.  This is the raw
    comparison; callers that need a partial order use equal weights.
    """
    if len(b) != len(c):
        raise ValueError("length mismatch: %d vs %d" % (len(b), len(c)))
    tb = tc = 0
    for pb, pc in zip(b, c):
        tb += pb
        tc += pc
        if tb > tc:
            return False
    return True


def is_strong(a: Sequence[int]) -> bool:
    """Zero parts appear only in trailing positions."""
    seen_zero = False
    for p in a:
        if p == 0:
            seen_zero = True
        elif seen_zero:
            return False
    return True


def refines(b: Sequence[int], a: Sequence[int]) -> bool:
    """True when consecutive blocks of b sum to the parts of a, in order.

    Both arguments must be strong (zeros only trailing); ambient lengths may
    differ.  Example: (1,2,1,3) refines (4,3).
    """
    if not is_strong(b) or not is_strong(a):
        raise ValueError("refines() requires strong compositions")
    bp = [p for p in b if p]
    ap = [p for p in a if p]
    i = 0
    for target in ap:
        block = 0
        while block < target:
            if i >= len(bp):
                return False
            block += bp[i]
            i += 1
        if block != target:
            return False
    return i == len(bp)


def set_of(a: Sequence[int]) -> frozenset[int]:
    """Partial sums of a strong composition, excluding the last."""
    if not is_strong(a):
        raise ValueError("set_of() requires a strong composition")
    parts = [p for p in a if p]
    return frozenset(csum(parts)[:-1])


def qshift(a: Sequence[int]) -> Composition:
    """Upper end of the fundamental-atom interval.

    Each nonzero part with a zero immediately to its left drops to 1; its
    surplus lands just right of the nearest nonzero part further left, or in
    position 1 when there is none.  A part whose left neighbor is nonzero
    (or which sits in position 1) keeps its value.
    """
    a = Composition(a)
    nz = [i for i, p in enumerate(a) if p]
    out = [0] * a.n
    for k, i in enumerate(nz):
        if i == 0 or a[i - 1] != 0:
            out[i] = a[i]
        else:
            out[i] = 1
            target = nz[k - 1] + 1 if k else 0
            # target position is a zero slot of a, never another landing site
            out[target] += a[i] - 1
    return Composition(out)


def compositions(weight: int, length: int) -> Iterator[Composition]:
    """All weak compositions of the given weight and ambient length."""
    if length == 0:
        if weight == 0:
            yield Composition(())
        return

    def rec(rem: int, slots: int, acc: tuple[int, ...]) -> Iterator[Composition]:
        if slots == 1:
            yield Composition(acc + (rem,))
            return
        for p in range(rem + 1):
            yield from rec(rem - p, slots - 1, acc + (p,))

    yield from rec(weight, length, ())


def compositions_up_to(max_weight: int, length: int) -> Iterator[Composition]:
    for w in range(max_weight + 1):
        yield from compositions(w, length)


def strong_compositions(weight: int, max_length: int) -> Iterator[tuple[int, ...]]:
    """All strong compositions of the given weight into at most max_length parts."""
    if weight == 0:
        yield ()
        return

    def rec(rem: int, slots: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield acc
            return
        if slots == 0:
            return
        for p in range(1, rem + 1):
            yield from rec(rem - p, slots - 1, acc + (p,))

    yield from rec(weight, max_length, ())


def atom_interval(a: Sequence[int]) -> list[Composition]:
    """All b of the same weight and length with a <= b <= qshift(a) in dominance."""
    a = Composition(a)
    if a.n == 0:
        return [a]
    lo = csum(a)
    hi = csum(qshift(a))
    out: list[Composition] = []

    def rec(i: int, prev: int, acc: tuple[int, ...]) -> None:
        if i == a.n:
            out.append(Composition(acc))
            return
        for c in range(max(prev, lo[i]), hi[i] + 1):
            rec(i + 1, c, acc + (c - prev,))

    rec(0, 0, ())
    return out

"""Product rules: shuffle sets for slides, signed multiset partitions for particles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .bases import BasisFamily
from .compositions import Composition, flat, is_strong, qshift, refines
from .expansions import BasisExpansion


def words_AB(a: Sequence[int], b: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Shuffle alphabets: part i of a contributes copies of the odd letter
    2n-2i+1, part i of b copies of the even letter 2n-2i+2."""
    a = Composition(a)
    b = Composition(b)
    if a.n != b.n:
        raise ValueError("factors must share one ambient length")
    n = a.n
    A = tuple(l for i, p in enumerate(a, 1) for l in [2 * n - 2 * i + 1] * p)
    B = tuple(l for i, p in enumerate(b, 1) for l in [2 * n - 2 * i + 2] * p)
    return A, B


def natural_position(letter: int, n: int) -> int:
    """The slot a letter wants: its originating part index, n+1-ceil(letter/2)."""
    return n + 1 - (letter + 1) // 2


def _interleavings(A, B) -> Iterator[tuple[tuple[int, ...], tuple[str, ...]]]:
    # sources are recoverable from letter parity, so no dedup is needed
    out_letters: list[int] = []
    out_sources: list[str] = []

    def rec(i, j):
        if i == len(A) and j == len(B):
            yield tuple(out_letters), tuple(out_sources)
            return
        if i < len(A):
            out_letters.append(A[i])
            out_sources.append("A")
            yield from rec(i + 1, j)
            out_letters.pop()
            out_sources.pop()
        if j < len(B):
            out_letters.append(B[j])
            out_sources.append("B")
            yield from rec(i, j + 1)
            out_letters.pop()
            out_sources.pop()

    yield from rec(0, 0)


def _runs(letters: Sequence[int]) -> list[tuple[int, int]]:
    """Half-open index spans of the maximal weakly increasing runs."""
    spans = []
    start = 0
    for t in range(1, len(letters)):
        if letters[t - 1] > letters[t]:
            spans.append((start, t))
            start = t
    if letters:
        spans.append((start, len(letters)))
    return spans


@dataclass(frozen=True)
class ShuffleWord:
    """One word of a shuffle set: an interleaving split into runs, with each
    run assigned to a slot in 1..n (unoccupied slots read as empty runs)."""

    letters: tuple[int, ...]
    sources: tuple[str, ...]
    spans: tuple[tuple[int, int], ...]
    slots: tuple[int, ...]
    n: int
    kind: str  # "plain" or "fundamental"

    def _counts(self, want=None) -> Composition:
        out = [0] * self.n
        for (s, e), slot in zip(self.spans, self.slots):
            size = sum(
                1
                for t in range(s, e)
                if want is None or self.sources[t] == want
            )
            out[slot - 1] += size
        return Composition(out)

    @property
    def des(self) -> Composition:
        return self._counts()

    @property
    def des_a(self) -> Composition:
        return self._counts("A")

    @property
    def des_b(self) -> Composition:
        return self._counts("B")

    def _run_text(self, s: int, e: int) -> str:
        sep = "." if any(l > 9 for l in self.letters) else ""
        return sep.join(str(l) for l in self.letters[s:e])

    def display(self) -> str:
        """Runs joined by ``|``; for fundamental words empty slots print as ``*``."""
        if self.kind == "plain":
            return "|".join(self._run_text(s, e) for s, e in self.spans)
        by_slot = {slot: span for span, slot in zip(self.spans, self.slots)}
        segs = []
        for slot in range(1, self.n + 1):
            if slot in by_slot:
                segs.append(self._run_text(*by_slot[slot]))
            else:
                segs.append("*")
        return "|".join(segs)

    def display_inline(self) -> str:
        """Letters in order with ``*`` marking empty slots, no dividers."""
        by_slot = {slot: span for span, slot in zip(self.spans, self.slots)}
        segs = []
        for slot in range(1, self.n + 1):
            segs.append(self._run_text(*by_slot[slot]) if slot in by_slot else "*")
        return "".join(segs)


def shuffle_set(a: Sequence[int], b: Sequence[int]) -> list[ShuffleWord]:
    """The slide-product shuffle set.

    Runs are pushed right-to-left toward their natural positions: the last
    run takes the natural position of its largest letter (capped at n) and
    each earlier run sits at its own natural position or one below its right
    neighbor, whichever is smaller.  Words that run off the left edge are
    discarded, and the per-source run sizes must dominate the factors.
    """
    a = Composition(a)
    b = Composition(b)
    A, B = words_AB(a, b)
    n = a.n
    out = []
    for letters, sources in _interleavings(A, B):
        spans = _runs(letters)
        r = len(spans)
        if r > n:
            continue
        slots = [0] * r
        ok = True
        for j in range(r - 1, -1, -1):
            nat = min(natural_position(letters[t], n) for t in range(*spans[j]))
            cap = n if j == r - 1 else slots[j + 1] - 1
            slots[j] = min(nat, cap)
            if slots[j] < 1:
                ok = False
                break
        if not ok:
            continue
        word = ShuffleWord(letters, sources, tuple(spans), tuple(slots), n, "plain")
        if _dominates(word.des_a, a) and _dominates(word.des_b, b):
            out.append(word)
    out.sort(key=lambda w: (w.letters, w.slots))
    return out


def fundamental_shuffle_set(a: Sequence[int], b: Sequence[int]) -> list[ShuffleWord]:
    """The slide-times-particle shuffle set.

    Every interleaving with at most n runs is padded with empty runs in all
    possible ways (descents automatically surround each inserted gap).  A
    word survives when its slide-side run sizes dominate a with flattening
    refining flat(a), and its particle-side run sizes lie in the dominance
    interval [b, qshift(b)].
    """
    a = Composition(a)
    b = Composition(b)
    A, B = words_AB(a, b)
    n = a.n
    fa = flat(a)
    fb_hi = qshift(b)
    out = []
    for letters, sources in _interleavings(A, B):
        spans = _runs(letters)
        r = len(spans)
        if r > n:
            continue
        for gaps in _weak_compositions(n - r, r + 1):
            slots = []
            pos = 0
            for j in range(r):
                pos += gaps[j] + 1
                slots.append(pos)
            word = ShuffleWord(
                letters, sources, tuple(spans), tuple(slots), n, "fundamental"
            )
            da = word.des_a
            db = word.des_b
            if not _dominates(da, a):
                continue
            if not refines(flat(da), fa):
                continue
            if not (_dominates(fb_hi, db) and _dominates(db, b)):
                continue
            out.append(word)
    out.sort(key=lambda w: (w.letters, w.slots))
    return out


def _weak_compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if total == 0:
            yield ()
        return

    def rec(rem, k, acc):
        if k == 1:
            yield acc + (rem,)
            return
        for p in range(rem + 1):
            yield from rec(rem - p, k - 1, acc + (p,))

    yield from rec(total, slots, ())


def _dominates(x, y) -> bool:
    tx = ty = 0
    for px, py in zip(x, y):
        tx += px
        ty += py
        if tx < ty:
            return False
    return True


def slide_product(a: Sequence[int], b: Sequence[int]) -> BasisExpansion:
    """Product of two slide polynomials, expanded back into slides."""
    a = Composition(a)
    acc: dict[Composition, int] = {}
    for word in shuffle_set(a, b):
        d = word.des
        acc[d] = acc.get(d, 0) + 1
    return BasisExpansion(BasisFamily.SLIDE, a.n, acc)


def slide_times_fatom(a: Sequence[int], b: Sequence[int]) -> BasisExpansion:
    """Product slide(a) * fatom(b), expanded into particles."""
    a = Composition(a)
    acc: dict[Composition, int] = {}
    for word in fundamental_shuffle_set(a, b):
        d = word.des
        acc[d] = acc.get(d, 0) + 1
    return BasisExpansion(BasisFamily.FATOM, a.n, acc)


# -- particle times particle ---------------------------------------------


class MarkedElement(NamedTuple):
    """A letter of the two-factor multiset: a value, barred when it came
    from the first factor, with one circled representative per part."""

    value: int
    barred: bool
    circled: bool

    @property
    def rank(self) -> tuple[int, int]:
        # circled-unbarred < circled-barred < plain-unbarred < plain-barred
        kind = (1 if self.barred else 0) + (0 if self.circled else 2)
        return (self.value, kind)

    def display(self) -> str:
        s = str(self.value)
        if self.barred:
            s += "'"
        if self.circled:
            s = "(%s)" % s
        return s


def j_index(g: Sequence[int], i: int) -> int:
    """One past the nearest nonzero position strictly left of i, else 1."""
    g = Composition(g)
    if not 1 <= i <= g.n or g[i - 1] == 0:
        raise ValueError("position %d is not a nonzero part of %r" % (i, tuple(g)))
    for p in range(i - 1, 0, -1):
        if g[p - 1]:
            return p + 1
    return 1


@dataclass(frozen=True)
class AtomMultisetPartition:
    """One term of the particle product: an ordered block partition of the
    marked multiset, its sign, and the block-size weight."""

    blocks: tuple[tuple[MarkedElement, ...], ...]
    sign: int
    weight: Composition

    def display(self) -> str:
        return "(%s)" % ", ".join(
            "".join(e.display() for e in blk) if blk else "-" for blk in self.blocks
        )


def _distributions(mult: int, lo: int, hi: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Ways to drop `mult` identical elements into blocks lo..hi."""
    if mult == 0:
        yield ()
        return
    if hi < lo:
        return

    def rec(block, rem, acc):
        if block == hi:
            yield acc + ((block, rem),) if rem else acc
            return
        for c in range(rem + 1):
            nxt = acc + ((block, c),) if c else acc
            yield from rec(block + 1, rem - c, nxt)

    yield from rec(lo, mult, ())


def atom_multiset_partitions(
    a: Sequence[int], b: Sequence[int]
) -> list[AtomMultisetPartition]:
    """All legal ordered block partitions for the particle product.

    Value-i elements: a_i barred copies (one circled), b_i unbarred copies
    (one circled).  Barred copies live in blocks j(a,i)..i and unbarred in
    j(b,i)..i; a lone circled element is pinned to block i, and when both
    circled copies exist the barred one is pinned while the unbarred one may
    sit in any block j >= max(j(a,i), j(b,i)); choosing j < i forces every
    plain value-i element into blocks <= j and flips the sign once.  The
    lower bound takes both windows: a displaced circled element must leave a
    block its barred partner could legally occupy, otherwise the pairing
    that cancels mixed terms breaks down.  Finally consecutive nonempty blocks
    must ascend: min of the left block strictly below max of the right.
    """
    a = Composition(a)
    b = Composition(b)
    if a.n != b.n:
        raise ValueError("factors must share one ambient length")
    k = a.n

    # per-value placement options: (additions, sign_flip)
    per_value: list[list[tuple[tuple[tuple[int, MarkedElement, int], ...], bool]]] = []
    for i in range(1, k + 1):
        ai, bi = a[i - 1], b[i - 1]
        if not ai and not bi:
            continue
        options = []
        ja = j_index(a, i) if ai else None
        jb = j_index(b, i) if bi else None
        bar_plain = MarkedElement(i, True, False)
        un_plain = MarkedElement(i, False, False)
        base: list[tuple[int, MarkedElement, int]] = []
        if ai:
            base.append((i, MarkedElement(i, True, True), 1))
        if bi:
            # With both circled copies present the unbarred one may move left,
            # but only through blocks both windows reach: its pinned partner
            # must be able to take its place block for block.
            j0_choices = range(max(ja, jb), i + 1) if ai else [i]
        else:
            j0_choices = [None]
        for j0 in j0_choices:
            adds = list(base)
            flip = False
            hi_bar = hi_un = i
            if j0 is not None:
                adds.append((j0, MarkedElement(i, False, True), 1))
                if ai and j0 < i:
                    flip = True
                    hi_bar = hi_un = j0
            for bar_dist in _distributions(ai - 1 if ai else 0, ja or 1, hi_bar):
                for un_dist in _distributions(bi - 1 if bi else 0, jb or 1, hi_un):
                    full = tuple(
                        adds
                        + [(blk, bar_plain, c) for blk, c in bar_dist]
                        + [(blk, un_plain, c) for blk, c in un_dist]
                    )
                    options.append((full, flip))
        per_value.append(options)

    results: list[AtomMultisetPartition] = []
    blocks: list[list[MarkedElement]] = [[] for _ in range(k)]

    def emit(flips: int) -> None:
        prev_min = None
        for blk in blocks:
            if not blk:
                continue
            lo = min(e.rank for e in blk)
            hi = max(e.rank for e in blk)
            if prev_min is not None and not prev_min < hi:
                return
            prev_min = lo
        results.append(
            AtomMultisetPartition(
                tuple(
                    tuple(sorted(blk, key=lambda e: e.rank, reverse=True))
                    for blk in blocks
                ),
                -1 if flips % 2 else 1,
                Composition([len(blk) for blk in blocks]),
            )
        )

    def rec(v: int, flips: int) -> None:
        if v == len(per_value):
            emit(flips)
            return
        for adds, flip in per_value[v]:
            for blk, elem, c in adds:
                blocks[blk - 1].extend([elem] * c)
            rec(v + 1, flips + (1 if flip else 0))
            for blk, elem, c in adds:
                del blocks[blk - 1][-c:]

    rec(0, 0)
    return results


def fatom_product(a: Sequence[int], b: Sequence[int]) -> BasisExpansion:
    """Signed particle expansion of fatom(a) * fatom(b)."""
    a = Composition(a)
    acc: dict[Composition, int] = {}
    for part in atom_multiset_partitions(a, b):
        acc[part.weight] = acc.get(part.weight, 0) + part.sign
    return BasisExpansion(
        BasisFamily.FATOM, a.n, {w: c for w, c in acc.items() if c}
    )


def fatom_product_contributions(
    a: Sequence[int], b: Sequence[int]
) -> dict[Composition, tuple[int, int]]:
    """Per-index (positive, negative) partition counts, for cancellation checks."""
    acc: dict[Composition, tuple[int, int]] = {}
    for part in atom_multiset_partitions(a, b):
        pos, neg = acc.get(part.weight, (0, 0))
        if part.sign > 0:
            pos += 1
        else:
            neg += 1
        acc[part.weight] = (pos, neg)
    return acc


# -- the proof map on descent-split pairs ----------------------------------


@dataclass(frozen=True)
class PsiImage:
    parts: tuple[tuple[int, ...], ...]
    des: Composition

    def display_inline(self) -> str:
        sep = "." if any(l > 9 for part in self.parts for l in part) else ""
        return "".join(
            sep.join(str(l) for l in part) if part else "*" for part in self.parts
        )


def psi_image(
    alpha: Sequence[int],
    beta: Sequence[int],
    nu: Sequence[int],
    delta: Sequence[int],
) -> PsiImage:
    """Split the shuffle alphabets by (nu, delta), merge part-wise, then fuse
    each part into its right neighbor while no descent separates them."""
    alpha = Composition(alpha)
    beta = Composition(beta)
    nu = Composition(nu)
    delta = Composition(delta)
    if not (alpha.n == beta.n == nu.n == delta.n):
        raise ValueError("all four compositions must share one ambient length")
    if nu.weight != alpha.weight or delta.weight != beta.weight:
        raise ValueError("split weights must match the factor weights")
    A, B = words_AB(alpha, beta)
    parts: list[list[int]] = []
    ia = ib = 0
    for i in range(nu.n):
        chunk = sorted(A[ia : ia + nu[i]] + B[ib : ib + delta[i]])
        ia += nu[i]
        ib += delta[i]
        parts.append(list(chunk))
    changed = True
    while changed:
        changed = False
        occupied = [i for i, p in enumerate(parts) if p]
        for x, y in zip(occupied, occupied[1:]):
            if parts[x][-1] <= parts[y][0]:
                parts[y] = sorted(parts[x] + parts[y])
                parts[x] = []
                changed = True
                break
    return PsiImage(
        tuple(tuple(p) for p in parts),
        Composition([len(p) for p in parts]),
    )


__all__ = [
    "words_AB",
    "natural_position",
    "ShuffleWord",
    "shuffle_set",
    "fundamental_shuffle_set",
    "slide_product",
    "slide_times_fatom",
    "MarkedElement",
    "j_index",
    "AtomMultisetPartition",
    "atom_multiset_partitions",
    "fatom_product",
    "fatom_product_contributions",
    "PsiImage",
    "psi_image",
]

"""Subsets of [n] as lattice walks, and the named families built from them.

A subset F of [n] is a walk of n steps starting at the origin: step j goes
up if j is in F, right otherwise. After j steps the walk sits at height
2*|F intersect [j]| - j. "Hitting the line at level l" means some prefix
reaches height l.

Ground size n is carried on every subset; the trailing right-steps matter
(the same element set over a larger ground is a different walk), so
operations refuse to mix ground sizes.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator


class SubsetMask:
    """An element subset of [n], 1-based, usable as a walk.

    Immutable. Stores both the element frozenset and an n-bit integer mask
    (bit j-1 set iff element j present); the mask is what the heavy loops
    use.
    """

    __slots__ = ("n", "elements", "mask")

    def __init__(self, n: int, elements: Iterable[int] = ()):
        if n < 0:
            raise ValueError("ground size must be nonnegative")
        elems = frozenset(elements)
        for e in elems:
            if not (1 <= e <= n):
                raise ValueError(f"element {e} outside ground set [{n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elements", elems)
        m = 0
        for e in elems:
            m |= 1 << (e - 1)
        object.__setattr__(self, "mask", m)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "SubsetMask":
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(
            self, "elements", frozenset(j + 1 for j in range(n) if mask >> j & 1)
        )
        return self

    def __setattr__(self, *a):
        raise AttributeError("SubsetMask is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SubsetMask)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.n, self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, e):
        return e in self.elements

    def __repr__(self):
        return f"SubsetMask({self.n}, {sorted(self.elements)})"

    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))


class Family:
    """A finite collection of subsets over one ground size.

    Members are stored as a frozenset of integer masks; the SubsetMask view
    is materialized on demand. Iteration order is the canonical one: masks
    ascending.
    """

    __slots__ = ("n", "masks")

    def __init__(self, n: int, members: Iterable[SubsetMask] = ()):
        masks = set()
        for m in members:
            if m.n != n:
                raise ValueError("member ground size does not match family")
            masks.add(m.mask)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", frozenset(masks))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Family":
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", frozenset(masks))
        return self

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Family":
        return cls(n, (SubsetMask(n, s) for s in sets))

    def __setattr__(self, *a):
        raise AttributeError("Family is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Family)
            and self.n == other.n
            and self.masks == other.masks
        )

    def __hash__(self):
        return hash((self.n, self.masks))

    def __len__(self):
        return len(self.masks)

    def __iter__(self) -> Iterator[SubsetMask]:
        for m in sorted(self.masks):
            yield SubsetMask.from_mask(self.n, m)

    def __contains__(self, item):
        if isinstance(item, SubsetMask):
            return item.n == self.n and item.mask in self.masks
        return False

    def __repr__(self):
        return f"Family(n={self.n}, {len(self.masks)} members)"

    @property
    def members(self) -> frozenset:
        return frozenset(SubsetMask.from_mask(self.n, m) for m in self.masks)

    def member_sets(self) -> list[tuple[int, ...]]:
        """Members as sorted element tuples, in canonical order."""
        return [
            tuple(j + 1 for j in range(self.n) if m >> j & 1)
            for m in sorted(self.masks)
        ]


class WalkClass(Enum):
    """Class of a walk relative to the line at level l.

    TILDE: climbs past the line (reaches level l+1 somewhere).
    HAT: touches level l exactly once and never l+1.
    DOUBLEHAT: touches level l at least twice and never l+1.
    NONE: never reaches level l.

    A "touch" is a lattice point of the walk at height exactly l, counting
    the end of the walk.
    """

    TILDE = "TILDE"
    HAT = "HAT"
    DOUBLEHAT = "DOUBLEHAT"
    NONE = "NONE"


def prefix_height(F: SubsetMask, j: int) -> int:
    """Height of the walk after j steps: 2*|F intersect [j]| - j."""
    if not (0 <= j <= F.n):
        raise ValueError(f"step index {j} outside [0, {F.n}]")
    inside = sum(1 for e in F.elements if e <= j)
    return 2 * inside - j


def _height_profile(mask: int, n: int) -> list[int]:
    hs = []
    h = 0
    for j in range(n):
        h += 1 if mask >> j & 1 else -1
        hs.append(h)
    return hs


def hits_line(F: SubsetMask, l: int) -> bool:
    """Does some prefix of the walk reach height l?"""
    if l < 1:
        raise ValueError("line level must be >= 1")
    h = 0
    for j in range(F.n):
        h += 1 if F.mask >> j & 1 else -1
        if h >= l:
            return True
    return False


def lambda_family(A: Family) -> int:
    """Highest line hit by every member walk (0 if only the vacuous line).

    The empty family has no well-defined value and is rejected.
    """
    if len(A) == 0:
        raise ValueError("lambda of an empty family is undefined")
    best = None
    for m in A.masks:
        peak = 0
        h = 0
        for j in range(A.n):
            h += 1 if m >> j & 1 else -1
            if h > peak:
                peak = h
        best = peak if best is None else min(best, peak)
    return best


def classify_walk(F: SubsetMask, l: int) -> WalkClass:
    """Classify the walk against the line at level l (see WalkClass)."""
    if l < 1:
        raise ValueError("line level must be >= 1")
    if l > F.n:
        raise ValueError(f"line level {l} exceeds ground size {F.n}")
    touches = 0
    h = 0
    for j in range(F.n):
        h += 1 if F.mask >> j & 1 else -1
        if h == l:
            touches += 1
        elif h == l + 1:
            return WalkClass.TILDE
    if touches == 0:
        return WalkClass.NONE
    if touches == 1:
        return WalkClass.HAT
    return WalkClass.DOUBLEHAT


def frankl_family(n: int, t: int, i: int) -> Family:
    """All F in 2^[n] with |F intersect [t+2i]| >= t+i, materialized.

    These are the conjectured optima: walks passing at height >= t when
    restricted to the first t+2i steps. Closed under supersets.
    """
    if t < 1 or i < 0:
        raise ValueError("need t >= 1 and i >= 0")
    if n < t + 2 * i:
        raise ValueError(f"ground size {n} too small for window {t + 2 * i}")
    window = (1 << (t + 2 * i)) - 1
    need = t + i
    masks = [m for m in range(1 << n) if (m & window).bit_count() >= need]
    return Family.from_masks(n, masks)


def hit_family(n: int, l: int) -> Family:
    """All walks over [n] that hit the line at level l."""
    if l < 1:
        raise ValueError("line level must be >= 1")
    out = []
    for m in range(1 << n):
        h = 0
        for j in range(n):
            h += 1 if m >> j & 1 else -1
            if h >= l:
                out.append(m)
                break
    return Family.from_masks(n, out)


def d_walk(n: int, l: int, s: int, i: int) -> SubsetMask:
    """The canonical single-touch walk through (s, l+s) with tail offset i.

    Construction: all of [l-1], then the alternating block
    {l+1, l+3, ..., l+2s-1}, then l+2s (the step that produces the unique
    touch of level l), then the tail {l+2s+i+2k : k >= 1} clipped to [n].
    Valid tail offsets are 1 <= i <= n-l-2s-1; at the top of that range the
    tail is empty and the construction saturates.
    """
    if l < 1 or s < 0:
        raise ValueError("need l >= 1 and s >= 0")
    imax = n - l - 2 * s - 1
    if not (1 <= i <= imax):
        raise ValueError(f"tail offset {i} outside [1, {imax}]")
    elems = set(range(1, l))
    elems.update(l - 1 + 2 * k for k in range(1, s + 1))
    elems.add(l + 2 * s)
    k = 1
    while l + 2 * s + i + 2 * k <= n:
        elems.add(l + 2 * s + i + 2 * k)
        k += 1
    return SubsetMask(n, elems)


def e_walk(n: int, t: int, i: int) -> SubsetMask:
    """The off-pattern single-touch walk [t-1] + {t+1, t+3, t+4} + tail.

    Touches level t exactly once (at step t+4) and never t+1. Tail offsets
    run over 1 <= i <= n-t-5.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if not (1 <= i <= n - t - 5):
        raise ValueError(f"tail offset {i} outside [1, {n - t - 5}]")
    elems = set(range(1, t))
    elems.update((t + 1, t + 3, t + 4))
    j = 1
    while t + 4 + i + 2 * j <= n:
        elems.add(t + 4 + i + 2 * j)
        j += 1
    return SubsetMask(n, elems)


def dual_t(F: SubsetMask, t: int) -> SubsetMask:
    """[(F)_t - 1] together with the complement of F.

    (F)_t is the t-th smallest element. The result never t-intersects F:
    inside [(F)_t - 1] it can grab at most t-1 elements of F, and beyond
    that it is disjoint from F.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    srt = sorted(F.elements)
    if len(srt) < t:
        raise ValueError(f"member has fewer than {t} elements")
    ft = srt[t - 1]
    elems = set(range(1, ft)) | (set(range(1, F.n + 1)) - F.elements)
    return SubsetMask(F.n, elems)


def shifts_to(A: SubsetMask, B: SubsetMask) -> bool:
    """Is B reachable from A by pushing elements toward the front?

    True iff |A| <= |B| and the k-th smallest element of A is >= the k-th
    smallest of B for every k up to |A|.
    """
    if A.n != B.n:
        raise ValueError("ground sizes differ")
    a = sorted(A.elements)
    b = sorted(B.elements)
    if len(a) > len(b):
        return False
    return all(x >= y for x, y in zip(a, b))


def upset_closure(A: Family) -> Family:
    """Smallest superset-closed family containing A."""
    n = A.n
    full = (1 << n) - 1
    seen = set(A.masks)
    stack = list(A.masks)
    while stack:
        m = stack.pop()
        free = full & ~m
        while free:
            bit = free & -free
            free ^= bit
            m2 = m | bit
            if m2 not in seen:
                seen.add(m2)
                stack.append(m2)
    return Family.from_masks(n, seen)

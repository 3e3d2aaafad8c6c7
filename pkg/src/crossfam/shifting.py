"""Compression of families toward the front of the ground set.

The (i,j)-shift replaces j by i in every member that allows it. It
preserves weight, preserves cross-intersection when applied to both
families of a pair, and drives any pair to a fixpoint where the structure
parameters (the line levels u, v and the column bounds s, s') exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .families import Family, SubsetMask, WalkClass, classify_walk, lambda_family


def shift_ij(A: Family, i: int, j: int) -> Family:
    """Apply the (i,j)-compression to every member of A.

    A member containing j but not i gets j replaced by i, unless the
    replacement is already a member of the input family, in which case it
    stays put. Requires 1 <= i < j <= n.
    """
    if i >= j:
        raise ValueError(f"need i < j, got ({i}, {j})")
    if not (1 <= i and j <= A.n):
        raise ValueError(f"indices ({i}, {j}) outside ground set [{A.n}]")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    src = A.masks
    out = set()
    for m in src:
        if m & bj and not m & bi:
            m2 = (m ^ bj) | bi
            out.add(m if m2 in src else m2)
        else:
            out.add(m)
    return Family.from_masks(A.n, out)


def is_shifted(A: Family) -> bool:
    """True iff every (i,j)-shift leaves A unchanged."""
    src = A.masks
    n = A.n
    for m in src:
        for j in range(2, n + 1):
            if not m >> (j - 1) & 1:
                continue
            for i in range(1, j):
                if m >> (i - 1) & 1:
                    continue
                if (m ^ (1 << (j - 1))) | (1 << (i - 1)) not in src:
                    return False
    return True


def shift_pair_to_fixpoint(A: Family, B: Family) -> tuple[Family, Family]:
    """Drive (A, B) to a common fixpoint of all (i,j)-shifts.

    Each shift is applied to both families in the same step. Sweep order is
    lexicographic over (i, j), repeated until one full pass changes
    nothing; termination follows from the element-sum potential, which
    drops on every effective shift.
    """
    if A.n != B.n:
        raise ValueError("families live on different ground sizes")
    n = A.n
    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                A2 = shift_ij(A, i, j)
                B2 = shift_ij(B, i, j)
                if A2 != A or B2 != B:
                    A, B = A2, B2
                    changed = True
    return A, B


def is_cross_t_intersecting(A: Family, B: Family, t: int) -> bool:
    """Do all pairs (a, b) in A x B share at least t elements?"""
    if A.n != B.n:
        raise ValueError("families live on different ground sizes")
    if t < 0:
        raise ValueError("threshold must be nonnegative")
    bm = list(B.masks)
    return all((a & b).bit_count() >= t for a in A.masks for b in bm)


def maximal_partner(A: Family, t: int) -> Family:
    """The largest family B with every member t-intersecting all of A.

    This is the unique inclusion-maximal partner: any B' cross
    t-intersecting with A is a subfamily of it. May be empty.
    """
    if len(A) == 0:
        raise ValueError("partner of an empty family is everything; refused")
    n = A.n
    src = sorted(A.masks, key=lambda m: m.bit_count())
    out = [
        b
        for b in range(1 << n)
        if all((a & b).bit_count() >= t for a in src)
    ]
    return Family.from_masks(n, out)


@dataclass(frozen=True)
class ShiftedPair:
    """A cross t-intersecting pair at its shift fixpoint, with parameters.

    u and v are the top lines hit by every member of A and of B; for
    inclusion-maximal shifted pairs u + v >= 2t. The column bounds s, s'
    stay None until extract_ss fills them in (they only exist when
    u + v = 2t exactly).
    """

    A: Family
    B: Family
    t: int
    u: int
    v: int
    s: Optional[int] = None
    sp: Optional[int] = None

    @classmethod
    def build(cls, A: Family, B: Family, t: int) -> "ShiftedPair":
        """Validate shiftedness and cross-intersection, compute u and v."""
        if not is_cross_t_intersecting(A, B, t):
            raise ValueError("pair is not cross t-intersecting")
        if not (is_shifted(A) and is_shifted(B)):
            raise ValueError("pair is not at a shift fixpoint")
        u = lambda_family(A)
        v = lambda_family(B)
        if u + v < 2 * t:
            raise ValueError(f"line levels u={u}, v={v} violate u+v >= 2t")
        return cls(A=A, B=B, t=t, u=u, v=v)


def _touched_part(F: Family, l: int) -> tuple[list[int], list[int]]:
    """Masks of the HAT and DOUBLEHAT members relative to level l."""
    hat, dhat = [], []
    for m in F.masks:
        c = classify_walk(SubsetMask.from_mask(F.n, m), l)
        if c is WalkClass.HAT:
            hat.append(m)
        elif c is WalkClass.DOUBLEHAT:
            dhat.append(m)
    return hat, dhat


def _column_bound(masks: list[int], n: int, l: int) -> list[int]:
    """All s with every given walk meeting [l+2s] in at least l+s elements."""
    out = []
    for s in range((n - l) // 2 + 1):
        window = (1 << (l + 2 * s)) - 1
        if all((m & window).bit_count() >= l + s for m in masks):
            out.append(s)
    return out


def extract_ss(pair: ShiftedPair) -> tuple[int, int]:
    """Column bounds (s, s') of the single-touch parts on the lines u and v.

    Defined only on the boundary u + v = 2t. The HAT part of A relative to
    u and of B relative to v must both be nonempty; the full touched part
    (HAT and DOUBLEHAT together) of A then sits inside the window family
    at exactly one column bound s, likewise s' for B, and the skew matches
    the line gap: s - s' = (v - u) / 2.
    """
    if pair.u + pair.v != 2 * pair.t:
        raise ValueError(
            f"u+v = {pair.u + pair.v} != 2t = {2 * pair.t}; "
            "column bounds exist only on the boundary"
        )
    hat_a, dhat_a = _touched_part(pair.A, pair.u)
    hat_b, dhat_b = _touched_part(pair.B, pair.v)
    if not hat_a or not hat_b:
        raise ValueError("a HAT part is empty; column bounds undefined")
    cand_s = _column_bound(hat_a + dhat_a, pair.A.n, pair.u)
    cand_sp = _column_bound(hat_b + dhat_b, pair.B.n, pair.v)
    if len(cand_s) != 1 or len(cand_sp) != 1:
        raise ValueError(
            f"column bound not unique: candidates {cand_s} and {cand_sp}"
        )
    s, sp = cand_s[0], cand_sp[0]
    if 2 * (s - sp) != pair.v - pair.u:
        raise AssertionError(
            f"skew mismatch: s-s'={s - sp}, (v-u)/2={(pair.v - pair.u) // 2}"
        )
    return s, sp


def max_index(A: Family, walk_gen: Callable[[int], SubsetMask]) -> int:
    """Largest index i with walk_gen(i) a member of A.

    walk_gen is a one-parameter constructor (a d_walk or e_walk with all
    other arguments bound); it must raise ValueError past its saturation
    index, which bounds the scan. Index 1 must be a member.
    """
    try:
        first = walk_gen(1)
    except ValueError as exc:
        raise ValueError(f"walk generator rejects index 1: {exc}") from exc
    if first not in A:
        raise ValueError("walk_gen(1) is not a member; max index undefined")
    best = 1
    i = 2
    while True:
        try:
            w = walk_gen(i)
        except ValueError:
            break
        if w in A:
            best = i
        i += 1
    return best

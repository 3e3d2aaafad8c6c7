"""Exhaustive search for the best cross-intersecting product at desk scale.

Families are reduced to superset-closed ones (closing up never lowers a
weight and never breaks cross-intersection), and for a fixed A the best
partner is forced, so the search space is the set of up-sets over [n].
That count is the Dedekind sequence 2, 3, 6, 20, 168, 7581, 7828354 for
n = 0..6, which is why the hard cap sits at n = 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Iterator, Optional

from .families import Family, frankl_family
from .shifting import is_cross_t_intersecting

UPSET_CAP = 6


def _upset_tables(k: int) -> list[int]:
    """Truth tables (bit m set iff mask m is a member) of all up-sets of [k]."""
    tables = [0, 1]
    for level in range(1, k + 1):
        width = 1 << (level - 1)
        tables = [
            lo | (hi << width)
            for hi in tables
            for lo in tables
            if lo & ~hi == 0
        ]
    return tables


def _stream_upset_tables(n: int) -> Iterator[int]:
    """Same tables as _upset_tables(n) but lazily at the top level."""
    if n == 0:
        yield 0
        yield 1
        return
    prev = _upset_tables(n - 1)
    width = 1 << (n - 1)
    for hi in prev:
        for lo in prev:
            if lo & ~hi == 0:
                yield lo | (hi << width)


def enumerate_upsets(n: int, unsafe_n: bool = False) -> Iterator[Family]:
    """Every superset-closed family over [n], each exactly once.

    Built by splitting on the last element: an up-set is a pair (lo, hi)
    of up-sets over [n-1] (members without n, members with n stripped of
    it) with lo a subfamily of hi. The count grows doubly exponentially,
    so n is capped unless unsafe_n lifts the guard.
    """
    if n < 0:
        raise ValueError("ground size must be nonnegative")
    if n > UPSET_CAP and not unsafe_n:
        raise ValueError(f"up-set enumeration capped at n = {UPSET_CAP}")
    for table in _stream_upset_tables(n):
        yield Family.from_masks(
            n, [m for m in range(1 << n) if table >> m & 1]
        )


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one exhaustive product search.

    best_value is exactly mu_weight(witness_A, p) * mu_weight(witness_B, p);
    witness_isomorphic_to holds the window size r when both witnesses are
    the same family and it is a relabeling of the window family of that r.
    """

    n: int
    t: int
    p: Fraction
    best_value: Fraction
    witness_A: Family
    witness_B: Family
    witness_isomorphic_to: Optional[int]


def _minimal_masks(masks: list[int], table: int) -> list[int]:
    """Members with no proper subset in the family (drop-one-bit test)."""
    out = []
    for m in masks:
        mm = m
        minimal = True
        while mm:
            bit = mm & -mm
            mm ^= bit
            if table >> (m ^ bit) & 1:
                minimal = False
                break
        if minimal:
            out.append(m)
    return out


def max_product(n: int, t: int, p: Fraction, unsafe_n: bool = False) -> SearchResult:
    """Exact maximum of weight(A) * weight(B) over cross t-intersecting pairs.

    Sweeps every up-set A and pairs it with its forced best partner (the
    family of all sets t-intersecting everything in A). Ties are broken
    toward the lexicographically smallest (table_A, table_B) encoding, so
    the witnesses are deterministic.
    """
    if n > UPSET_CAP and not unsafe_n:
        raise ValueError(f"search capped at n = {UPSET_CAP}")
    if not (1 <= t <= n):
        raise ValueError(f"threshold {t} outside [1, {n}]")
    if not (0 < p < 1):
        raise ValueError("bias must lie in (0,1)")
    num, den = p.numerator, p.denominator
    size = 1 << n
    wt = [num ** m.bit_count() * (den - num) ** (n - m.bit_count()) for m in range(size)]
    total = den**n

    best_val = -1
    best_key: tuple[int, int] | None = None
    best_data = None
    for table in _stream_upset_tables(n):
        masks_a = [m for m in range(size) if table >> m & 1]
        if not masks_a:
            continue
        w_a = sum(wt[m] for m in masks_a)
        if w_a * total < best_val:
            continue
        # partner membership only needs checking against inclusion-minimal
        # members: supersets intersect anything at least as much
        mins = _minimal_masks(masks_a, table)
        masks_b = [
            b
            for b in range(size)
            if all((a & b).bit_count() >= t for a in mins)
        ]
        w_b = sum(wt[m] for m in masks_b)
        val = w_a * w_b
        if val < best_val:
            continue
        table_b = 0
        for b in masks_b:
            table_b |= 1 << b
        key = (table, table_b)
        if val > best_val or (best_key is not None and key < best_key):
            best_val = val
            best_key = key
            best_data = (masks_a, masks_b)
    assert best_data is not None
    fam_a = Family.from_masks(n, best_data[0])
    fam_b = Family.from_masks(n, best_data[1])
    iso = None
    if fam_a == fam_b and n <= UPSET_CAP:
        for r in range((n - t) // 2 + 1):
            if is_isomorphic_to_frankl(fam_a, t, r):
                iso = r
                break
    return SearchResult(
        n=n,
        t=t,
        p=p,
        best_value=Fraction(best_val, total * total),
        witness_A=fam_a,
        witness_B=fam_b,
        witness_isomorphic_to=iso,
    )


def verify_monotone_n(n: int, t: int, p: Fraction) -> bool:
    """Does the best product at ground size n+1 dominate the one at n?"""
    return max_product(n, t, p).best_value <= max_product(n + 1, t, p).best_value


def _permute_mask(m: int, perm: tuple[int, ...]) -> int:
    out = 0
    for src, dst in enumerate(perm):
        if m >> src & 1:
            out |= 1 << dst
    return out


def is_isomorphic_to_frankl(A: Family, t: int, r: int) -> bool:
    """Is A a relabeling of the window family with threshold t and size r?

    Full permutation search; False when the window t+2r does not fit in
    the ground set.
    """
    n = A.n
    if n > UPSET_CAP:
        raise ValueError(f"isomorphism search capped at n = {UPSET_CAP}")
    if t < 1 or r < 0:
        raise ValueError("need t >= 1 and r >= 0")
    if n < t + 2 * r:
        return False
    target = frankl_family(n, t, r).masks
    if len(A.masks) != len(target):
        return False
    src = A.masks
    for perm in permutations(range(n)):
        if all(_permute_mask(m, perm) in target for m in src):
            return True
    return False


def kneser_link_connected(t: int, r: int) -> bool:
    """Connectivity of the two-sided middle-layer intersection graph.

    Vertices: two copies of the (t+r-1)-subsets of [t+2r-1]; an edge joins
    a left a to a right b exactly when |a intersect b| = t-1. Checked by
    breadth-first search.
    """
    if t < 2 or r < 0:
        raise ValueError("need t >= 2 and r >= 0")
    ground = t + 2 * r - 1
    k = t + r - 1
    count = comb(ground, k)
    if count > 10**4:
        raise ValueError(f"vertex count {count} exceeds cap 10^4")
    verts = [m for m in range(1 << ground) if m.bit_count() == k]
    idx = {m: i for i, m in enumerate(verts)}
    nv = len(verts)
    adj: list[list[int]] = [[] for _ in range(nv)]
    for i, a in enumerate(verts):
        for j, b in enumerate(verts):
            if (a & b).bit_count() == t - 1:
                adj[i].append(j)
    seen = [[False] * nv, [False] * nv]
    stack = [(0, 0)]
    seen[0][0] = True
    reached = 1
    while stack:
        side, i = stack.pop()
        for j in adj[i]:
            if not seen[1 - side][j]:
                seen[1 - side][j] = True
                reached += 1
                stack.append((1 - side, j))
    return reached == 2 * nv


def uniqueness_witness_check(
    A: Family, B: Family, t: int, r: int, i: int, j: int
) -> bool:
    """Does a pair shifting onto the window family already equal it up to relabeling?

    Preconditions (each reported distinctly): both families land exactly on
    the window family under the single (i,j)-shift, the pair is cross
    t-intersecting, t >= 2, and the ground size is within the search cap.
    Returns true iff A = B and A is a relabeling of the window family.
    """
    from .shifting import shift_ij

    n = A.n
    if n > UPSET_CAP:
        raise ValueError(f"uniqueness check capped at n = {UPSET_CAP}")
    if t < 2:
        raise ValueError("threshold must be at least 2")
    target = frankl_family(n, t, r)
    if shift_ij(A, i, j) != target:
        raise ValueError("A does not shift onto the window family")
    if shift_ij(B, i, j) != target:
        raise ValueError("B does not shift onto the window family")
    if not is_cross_t_intersecting(A, B, t):
        raise ValueError("pair is not cross t-intersecting")
    return A == B and is_isomorphic_to_frankl(A, t, r)

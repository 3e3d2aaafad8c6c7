"""Exact product-measure weights and walk-count combinatorics.

The weight of a family under bias p gives each member F mass
p^|F| * (1-p)^(n-|F|). Everything here is exact rational arithmetic; there
is no floating point in this module because the downstream inequality
checks have margins like 0.99 versus 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .families import Family, WalkClass, hit_family

Rat = Fraction


def _check_p(p: Fraction) -> None:
    if not (0 < p < 1):
        raise ValueError(f"bias must lie in (0,1), got {p}")


def mu_weight(A: Family, p: Fraction) -> Fraction:
    """Exact weight sum p^|F| q^(n-|F|) over the members of A.

    Computed through the size histogram with integer arithmetic, one
    Fraction at the end.
    """
    _check_p(p)
    n = A.n
    num, den = p.numerator, p.denominator
    cnt = [0] * (n + 1)
    for m in A.masks:
        cnt[m.bit_count()] += 1
    total = sum(
        c * num**k * (den - num) ** (n - k) for k, c in enumerate(cnt) if c
    )
    return Fraction(total, den**n)


def mu_frankl_closed(t: int, i: int, p: Fraction) -> Fraction:
    """Closed-form weight of the window family: sets meeting [t+2i] in >= t+i.

    Sum over j = t+i .. t+2i of C(t+2i, j) p^j q^(t+2i-j). Independent of the
    ambient ground size, since membership only constrains the window.
    """
    if t < 1 or i < 0:
        raise ValueError("need t >= 1 and i >= 0")
    _check_p(p)
    q = 1 - p
    w = t + 2 * i
    return sum(comb(w, j) * p**j * q ** (w - j) for j in range(t + i, w + 1))


def count_walks_avoiding_line(x0: int, y0: int, c: int) -> int:
    """Walks (0,0) -> (x0,y0) in unit right/up steps never touching y = x+c.

    Reflection count C(x0+y0, x0) - C(x0+y0, y0-c), valid in the window
    0 < c < y0 < x0 + c (start strictly below the line, end strictly below
    it, line reachable). Outside the window the formula is not the right
    count and the call is rejected.
    """
    if not (0 < c < y0 < x0 + c):
        raise ValueError(
            f"parameters (x0={x0}, y0={y0}, c={c}) outside validity window"
        )
    return comb(x0 + y0, x0) - comb(x0 + y0, y0 - c)


def mu_hit_prob(n: int, l: int, p: Fraction) -> Fraction:
    """Weight of all walks over [n] that ever reach height l.

    Dynamic program over (height, already-hit flag); O(n^2) rational
    operations, agreeing exactly with enumeration of hit_family.
    """
    if l < 1:
        raise ValueError("line level must be >= 1")
    _check_p(p)
    q = 1 - p
    # states: height -> weight, for walks that have not yet hit
    alive = {0: Fraction(1)}
    hit = Fraction(0)
    for _ in range(n):
        nxt: dict[int, Fraction] = {}
        for h, w in alive.items():
            up = h + 1
            if up >= l:
                hit += w * p
            else:
                nxt[up] = nxt.get(up, Fraction(0)) + w * p
            down = h - 1
            nxt[down] = nxt.get(down, Fraction(0)) + w * q
        alive = nxt
    return hit


def mu_class_weight(n: int, l: int, cls: WalkClass, p: Fraction) -> Fraction:
    """Weight of one walk class at level l over ground size n, by DP.

    Tracks (height, touch count capped at 2) for walks that have stayed at
    or below the line; mass that steps above the line is absorbed into the
    TILDE bucket. The four class weights sum to 1.
    """
    if l < 1:
        raise ValueError("line level must be >= 1")
    _check_p(p)
    q = 1 - p
    alive: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    tilde = Fraction(0)
    for _ in range(n):
        nxt: dict[tuple[int, int], Fraction] = {}
        for (h, touched), w in alive.items():
            for h2, mass in ((h + 1, w * p), (h - 1, w * q)):
                if h2 > l:
                    tilde += mass
                    continue
                t2 = min(2, touched + (1 if h2 == l else 0))
                key = (h2, t2)
                nxt[key] = nxt.get(key, Fraction(0)) + mass
        alive = nxt
    if cls is WalkClass.TILDE:
        return tilde
    want = {WalkClass.NONE: 0, WalkClass.HAT: 1, WalkClass.DOUBLEHAT: 2}[cls]
    return sum(
        (w for (h, touched), w in alive.items() if touched == want),
        Fraction(0),
    )


def mu_hit_enum(n: int, l: int, p: Fraction) -> Fraction:
    """Enumeration cross-check for mu_hit_prob (exponential; keep n small)."""
    return mu_weight(hit_family(n, l), p)


def optimal_r(t: int, p: Fraction) -> set[int]:
    """All window sizes r whose optimality range contains p.

    The range for r is r/(t+2r-1) <= p <= (r+1)/(t+2r+1); a boundary p
    belongs to two consecutive ranges. Requires p < 1/2 strictly; at 1/2
    the ranges degenerate and every r would qualify.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if not (0 < p < Fraction(1, 2)):
        raise ValueError("bias must lie in (0, 1/2)")
    out = set()
    r = 0
    while True:
        lo = Fraction(r, t + 2 * r - 1) if r > 0 else Fraction(0)
        hi = Fraction(r + 1, t + 2 * r + 1)
        if lo <= p <= hi:
            out.add(r)
        if lo > p:
            break
        r += 1
    return out

import random
from fractions import Fraction

import pytest

from crossfam.families import Family, SubsetMask, d_walk, frankl_family
from crossfam.measure import mu_weight
from crossfam.shifting import (
    ShiftedPair,
    extract_ss,
    is_cross_t_intersecting,
    is_shifted,
    max_index,
    maximal_partner,
    shift_ij,
    shift_pair_to_fixpoint,
)


def rand_family(rng, n):
    size = 1 << n
    return Family.from_masks(n, rng.sample(range(size), rng.randrange(1, size + 1)))


def test_shift_ij_membership_rule():
    # {2}: 2 moves to 1 since {1} is absent; {1,2} untouched; {2,3} keeps
    # its 2 because {1,3} is already present
    fam = Family.from_masks(3, [0b010, 0b011, 0b110, 0b101])
    out = shift_ij(fam, 1, 2)
    assert sorted(m.mask for m in out) == [0b001, 0b011, 0b101, 0b110]
    with pytest.raises(ValueError):
        shift_ij(fam, 2, 2)
    with pytest.raises(ValueError):
        shift_ij(fam, 0, 2)
    with pytest.raises(ValueError):
        shift_ij(fam, 1, 4)


def test_shift_preserves_weight_and_size():
    rng = random.Random(7)
    p = Fraction(2, 7)
    for _ in range(200):
        n = rng.randrange(1, 8)
        fam = rand_family(rng, n)
        i = rng.randrange(1, n + 1)
        j = rng.randrange(1, n + 1)
        if i >= j:
            continue
        out = shift_ij(fam, i, j)
        assert len(out.masks) == len(fam.masks)
        assert mu_weight(out, p) == mu_weight(fam, p)


def test_is_shifted_frankl():
    assert is_shifted(frankl_family(5, 2, 1))
    assert not is_shifted(Family.from_masks(3, [0b100]))


def test_fixpoint_is_shifted_and_preserves_cross():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randrange(2, 7)
        A = rand_family(rng, n)
        B = rand_family(rng, n)
        t = rng.randrange(0, 3)
        before = is_cross_t_intersecting(A, B, t)
        sa, sb = shift_pair_to_fixpoint(A, B)
        assert is_shifted(sa) and is_shifted(sb)
        if before:
            assert is_cross_t_intersecting(sa, sb, t)


def test_maximal_partner_vs_brute():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randrange(1, 7)
        A = rand_family(rng, n)
        t = rng.randrange(0, n + 1)
        partner = maximal_partner(A, t)
        ref = [
            b
            for b in range(1 << n)
            if all((a.mask & b).bit_count() >= t for a in A)
        ]
        assert sorted(m.mask for m in partner) == ref
    with pytest.raises(ValueError):
        maximal_partner(Family.from_masks(3, []), 1)


def test_partner_of_frankl_is_frankl():
    # the window family is its own maximal partner at its threshold
    for n, t, r in [(4, 2, 1), (5, 2, 0), (5, 3, 1)]:
        fam = frankl_family(n, t, r)
        assert maximal_partner(fam, t) == fam


def test_shifted_pair_build():
    A = frankl_family(5, 2, 1)
    pair = ShiftedPair.build(A, A, 2)
    assert (pair.u, pair.v) == (2, 2)
    bad = Family.from_masks(5, [0b00011])
    with pytest.raises(ValueError):
        ShiftedPair.build(A, bad, 2)  # not cross 2-intersecting
    with pytest.raises(ValueError):
        ShiftedPair.build(Family.from_masks(5, [0b10000]), A, 2)  # unshifted


def test_extract_ss_symmetric_point():
    A = frankl_family(6, 2, 1)
    pair = ShiftedPair.build(A, A, 2)
    assert extract_ss(pair) == (1, 1)


def test_extract_ss_asymmetric_point():
    # A needs two of {1,2,3}; B is everything above {1,2,3}: levels 1 and 3
    A = Family.from_masks(
        4, [m for m in range(16) if (m & 0b0111).bit_count() >= 2]
    )
    B = Family.from_masks(4, [0b0111, 0b1111])
    pair = ShiftedPair.build(A, B, 2)
    assert (pair.u, pair.v) == (1, 3)
    assert extract_ss(pair) == (1, 0)


def test_extract_ss_requires_tight_sum():
    A = frankl_family(6, 3, 0)
    B = frankl_family(6, 3, 1)
    pair = ShiftedPair.build(A, B, 2)  # u+v = 6 > 4
    with pytest.raises(ValueError):
        extract_ss(pair)


def test_max_index_scans_generator_range():
    n, l, s = 8, 1, 0
    gen = lambda i: d_walk(n, l, s, i)
    A = Family.from_masks(n, [gen(1).mask, gen(2).mask, gen(5).mask, 0b11111111])
    assert max_index(A, gen) == 5
    missing_first = Family.from_masks(n, [gen(3).mask])
    with pytest.raises(ValueError):
        max_index(missing_first, gen)

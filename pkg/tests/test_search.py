from fractions import Fraction

import pytest

from crossfam.families import Family, frankl_family
from crossfam.measure import mu_weight
from crossfam.search import (
    enumerate_upsets,
    is_isomorphic_to_frankl,
    kneser_link_connected,
    max_product,
    uniqueness_witness_check,
    verify_monotone_n,
)
from crossfam.shifting import is_cross_t_intersecting, shift_ij

# up-set counts for ground sizes 0..5 (the n=6 count 7828354 is exercised
# in the demo scripts, not here: the stream is minutes long)
UPSET_COUNTS = [2, 3, 6, 20, 168, 7581]


def test_upset_counts():
    for n, expected in enumerate(UPSET_COUNTS):
        assert sum(1 for _ in enumerate_upsets(n)) == expected


def test_upsets_are_upward_closed_and_distinct():
    for n in range(5):
        seen = set()
        for fam in enumerate_upsets(n):
            key = frozenset(fam.masks)
            assert key not in seen
            seen.add(key)
            for m in fam.masks:
                for b in range(n):
                    assert (m | (1 << b)) in fam.masks


def test_upset_cap():
    with pytest.raises(ValueError):
        list(enumerate_upsets(7))


def test_max_product_frozen_t1():
    for n in range(2, 6):
        r = max_product(n, 1, Fraction(1, 2))
        assert r.best_value == Fraction(1, 4)
        assert r.witness_A == r.witness_B
        assert r.witness_isomorphic_to == 0
        r = max_product(n, 1, Fraction(1, 4))
        assert r.best_value == Fraction(1, 16)
        assert r.witness_isomorphic_to == 0


def test_max_product_frozen_t2():
    r = max_product(3, 2, Fraction(1, 3))
    assert r.best_value == Fraction(1, 81)
    assert r.witness_isomorphic_to == 0
    r = max_product(3, 2, Fraction(2, 5))
    assert r.best_value == Fraction(16, 625)
    assert r.witness_isomorphic_to == 0
    for n in (4, 5):
        r = max_product(n, 2, Fraction(2, 5))
        assert r.best_value == Fraction(12544, 390625)
        assert r.witness_A == r.witness_B
        assert r.witness_isomorphic_to == 1
    r = max_product(4, 2, Fraction(11, 30))
    assert r.best_value == Fraction(1489882801, 72900000000)
    assert r.witness_isomorphic_to == 1


def test_max_product_matches_frankl_maximum():
    # independent reference: the best window family squared
    for n, t, p in [
        (4, 1, Fraction(1, 3)),
        (4, 2, Fraction(2, 5)),
        (5, 2, Fraction(1, 4)),
        (5, 2, Fraction(11, 30)),
    ]:
        best = max(
            mu_weight(frankl_family(n, t, r), p) ** 2
            for r in range((n - t) // 2 + 1)
        )
        assert max_product(n, t, p).best_value == best


def test_max_product_witnesses_are_cross_intersecting():
    r = max_product(5, 2, Fraction(1, 4))
    assert is_cross_t_intersecting(r.witness_A, r.witness_B, 2)
    w = mu_weight(r.witness_A, r.p) * mu_weight(r.witness_B, r.p)
    assert w == r.best_value


def test_max_product_determinism_and_caps():
    a = max_product(4, 2, Fraction(1, 3))
    b = max_product(4, 2, Fraction(1, 3))
    assert a == b
    with pytest.raises(ValueError):
        max_product(7, 1, Fraction(1, 2))
    with pytest.raises(ValueError):
        max_product(4, 0, Fraction(1, 2))
    with pytest.raises(ValueError):
        max_product(4, 5, Fraction(1, 2))


def test_verify_monotone_n():
    for p in (Fraction(1, 4), Fraction(1, 3), Fraction(2, 5)):
        for n in (2, 3, 4):
            assert verify_monotone_n(n, 1, p)


def test_isomorphism_check():
    fam = frankl_family(4, 2, 1)
    relabeled = Family.from_masks(
        4, [_swap_mask(m, 0, 3) for m in fam.masks]
    )
    assert is_isomorphic_to_frankl(relabeled, 2, 1)
    assert not is_isomorphic_to_frankl(relabeled, 2, 0)
    # window larger than the ground set can never match
    assert not is_isomorphic_to_frankl(frankl_family(4, 2, 1), 2, 2)


def _swap_mask(m: int, a: int, b: int) -> int:
    bit_a = m >> a & 1
    bit_b = m >> b & 1
    m &= ~(1 << a | 1 << b)
    if bit_a:
        m |= 1 << b
    if bit_b:
        m |= 1 << a
    return m


def test_kneser_link_connected_small():
    assert kneser_link_connected(2, 0)
    assert kneser_link_connected(3, 2)
    with pytest.raises(ValueError):
        kneser_link_connected(1, 1)
    with pytest.raises(ValueError):
        kneser_link_connected(2, 8)  # C(17,9) above the vertex cap


def test_uniqueness_preimage_sweep():
    """Every family shifting onto the window family under s_24 at n=4."""
    target = frankl_family(4, 2, 0)
    preimages = []
    for bits in range(1 << 16):
        fam = Family.from_masks(4, [m for m in range(16) if bits >> m & 1])
        if shift_ij(fam, 2, 4) == target:
            preimages.append(fam)
    assert len(preimages) == 4
    passing = []
    for A in preimages:
        for B in preimages:
            if is_cross_t_intersecting(A, B, 2):
                assert uniqueness_witness_check(A, B, 2, 0, 2, 4)
                passing.append((A, B))
    assert len(passing) == 2


def test_uniqueness_error_paths():
    fam = frankl_family(4, 2, 0)
    other = frankl_family(4, 2, 1)
    with pytest.raises(ValueError):
        uniqueness_witness_check(fam, fam, 1, 0, 2, 4)
    with pytest.raises(ValueError):
        uniqueness_witness_check(other, other, 2, 0, 2, 4)

"""Exact p-biased weights and line-hitting probabilities.

Every number here is a Fraction; nothing is floated unless printed.
"""

from fractions import Fraction

from crossfam.families import WalkClass, frankl_family
from crossfam.measure import (
    mu_class_weight,
    mu_frankl_closed,
    mu_hit_prob,
    mu_weight,
    optimal_r,
)


def main():
    t = 2
    print("weight of the window family is independent of the ground size:")
    p = Fraction(1, 3)
    for n in (4, 6, 8):
        w = mu_weight(frankl_family(n, t, 1), p)
        print(f"  n={n}: {w}")
    print(f"  closed form: {mu_frankl_closed(t, 1, p)}")

    print("\ncrossing biases, where adjacent window sizes tie exactly:")
    for tt in (1, 2, 5, 10):
        left = Fraction(1, tt + 1)
        right = Fraction(2, tt + 3)
        assert mu_frankl_closed(tt, 0, left) == mu_frankl_closed(tt, 1, left)
        assert mu_frankl_closed(tt, 1, right) == mu_frankl_closed(tt, 2, right)
        print(f"  t={tt}: sizes 0 and 1 tie at p={left}, sizes 1 and 2 at p={right}")

    print("\nwhich window size wins, as the bias sweeps through t=2's band:")
    for p in (Fraction(1, 4), Fraction(1, 3), Fraction(37, 100), Fraction(2, 5)):
        print(f"  p={str(p):>6}: optimal sizes {sorted(optimal_r(2, p))}")

    print("\nhitting the line y=l is geometrically rare; cap is (p/q)^l:")
    p = Fraction(1, 3)
    alpha = p / (1 - p)
    for l in (1, 2, 4):
        hit = mu_hit_prob(30, l, p)
        print(f"  l={l}: weight {float(hit):.6f} <= {float(alpha**l):.6f}")

    print("\nthe four walk classes partition all of 2^[n]:")
    n, l = 12, 2
    parts = {c: mu_class_weight(n, l, c, p) for c in WalkClass}
    for c, w in parts.items():
        print(f"  {c.name:>9}: {w}")
    assert sum(parts.values()) == 1
    print("  total ", sum(parts.values()))


if __name__ == "__main__":
    main()

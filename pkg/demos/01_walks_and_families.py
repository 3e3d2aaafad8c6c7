"""Tour of the walk view of subsets.

A subset F of [n] is read as a lattice walk: step k goes up if k is in F,
down otherwise. Height after j steps is 2|F intersect [j]| - j. Everything
else in the package is built on top of this picture.
"""

from crossfam.families import (
    SubsetMask,
    classify_walk,
    d_walk,
    dual_t,
    e_walk,
    frankl_family,
    lambda_family,
    prefix_height,
)


def show_walk(F, l):
    heights = [prefix_height(F, j) for j in range(F.n + 1)]
    cls = classify_walk(F, l)
    print(f"  {str(F.sorted_elements()):>18}  heights {heights}  -> {cls.name}")


def main():
    n, l = 6, 2
    print(f"walks over [{n}] against the line y = {l}:")
    for elems in [(1, 2), (1, 2, 3), (1, 3, 5), (2, 3), (4, 5, 6), ()]:
        show_walk(SubsetMask(n, elems), l)

    print("\nwindow families: members must meet [t+2i] in at least t+i points")
    for t, i in [(2, 0), (2, 1), (2, 2)]:
        fam = frankl_family(6, t, i)
        lam = lambda_family(fam)
        print(f"  t={t} i={i}: {len(fam)} members of 2^[6], min member peak {lam}")

    print("\ncanonical boundary walks (d touches the line, e overshoots once):")
    for i in (1, 2, 3):
        print(f"  d_walk(10, 2, 1, {i}) = {d_walk(10, 2, 1, i).sorted_elements()}")
    for i in (1, 2):
        print(f"  e_walk(12, 2, {i}) = {e_walk(12, 2, i).sorted_elements()}")

    F = SubsetMask(6, (1, 2, 5))
    print(f"\nduality: dual_t({F.sorted_elements()}, t=2) = "
          f"{dual_t(F, 2).sorted_elements()}")
    print("a set and its dual never 2-intersect, which is the obstruction")
    print("the cross-intersecting search has to fight against.")


if __name__ == "__main__":
    main()

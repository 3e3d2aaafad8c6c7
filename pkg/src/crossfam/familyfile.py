"""Plain-text serialization for set families.

Format: a header line "n <ground size>", then one member per line as
comma separated 1-based elements in increasing order, with "-" standing
for the empty set. Blank lines and lines starting with "#" are ignored.
Parsing is strict: out-of-order or duplicate elements, elements outside
1..n, duplicate members and malformed headers are all errors, so a file
round-trips byte for byte through parse -> serialize.
"""

from __future__ import annotations

from .families import Family


class FamilyFileError(ValueError):
    """Raised on any malformed family file."""


def parse_family(text: str) -> Family:
    """Parse the text of a family file into a Family."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise FamilyFileError("missing header line 'n <int>'")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise FamilyFileError(f"bad header {lines[0]!r}, expected 'n <int>'")
    try:
        n = int(head[1])
    except ValueError:
        raise FamilyFileError(f"bad ground size {head[1]!r}") from None
    if n < 0:
        raise FamilyFileError("ground size must be nonnegative")
    masks = set()
    for line in lines[1:]:
        if line == "-":
            mask = 0
        else:
            mask = 0
            prev = 0
            for part in line.split(","):
                part = part.strip()
                try:
                    el = int(part)
                except ValueError:
                    raise FamilyFileError(f"bad element {part!r} in {line!r}") from None
                if not (1 <= el <= n):
                    raise FamilyFileError(f"element {el} outside 1..{n}")
                if el <= prev:
                    raise FamilyFileError(
                        f"elements must be strictly increasing in {line!r}"
                    )
                prev = el
                mask |= 1 << (el - 1)
        if mask in masks:
            raise FamilyFileError(f"duplicate member {line!r}")
        masks.add(mask)
    return Family.from_masks(n, masks)


def serialize_family(fam: Family) -> str:
    """Canonical text for a family: members sorted by element tuple."""
    rows = sorted(s.sorted_elements() for s in fam)
    out = [f"n {fam.n}"]
    for row in rows:
        out.append(",".join(str(e) for e in row) if row else "-")
    return "\n".join(out) + "\n"

"""Independent oracles for expected values.

Everything here recomputes order-theoretic data from first principles
(label-level relation sets, brute-force bound searches) without touching the
library's tables, so tests can compare the two sides.
"""

from itertools import product

# cover lists transcribed independently of the bundled data files
CHAIN4 = ("0", "a", "b", "1")
CHAIN4_COVERS = [("0", "a"), ("a", "b"), ("b", "1")]

N5 = ("0", "a", "b", "c", "1")
N5_COVERS = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]

L6 = ("0", "a", "b", "c", "d", "1")
L6_COVERS = [
    ("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("c", "1"), ("d", "1"),
]

DIAMOND = ("0", "p", "q", "1")
DIAMOND_COVERS = [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")]


def reachability(names, covers):
    """Reflexive-transitive closure of a cover list, as a set of label pairs."""
    rel = {(x, x) for x in names} | set(covers)
    changed = True
    while changed:
        changed = False
        for (x, y), (y2, z) in product(tuple(rel), tuple(rel)):
            if y == y2 and (x, z) not in rel:
                rel.add((x, z))
                changed = True
    return rel


def naive_glb(names, rel, x, y):
    """Greatest lower bound by candidate scan; None if it does not exist."""
    lower = [z for z in names if (z, x) in rel and (z, y) in rel]
    for g in lower:
        if all((w, g) in rel for w in lower):
            return g
    return None


def naive_lub(names, rel, x, y):
    upper = [z for z in names if (x, z) in rel and (y, z) in rel]
    for g in upper:
        if all((g, w) in rel for w in upper):
            return g
    return None


def naive_focal_members(names, rel, a):
    """P_a by the defining condition, computed with naive bounds."""
    out = []
    for x in names:
        for y in names:
            m = naive_glb(names, rel, x, y)
            j = naive_lub(names, rel, x, y)
            if (m, a) in rel and (a, j) in rel:
                out.append((x, y))
    return out

"""Finite posets and lattices as dense tables over labelled carriers.

Elements are plain integers indexing into a carrier's label tuple, and every
table is a nested tuple, so all structures are immutable, hashable and safe
to share between threads.  Carriers stay tiny (a few dozen elements at most,
even for twist-products), which makes dense tables the simplest and fastest
representation.

Checkers report the lexicographically first violation in carrier order, so
failures are deterministic and directly testable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotALattice, NotAPoset, UnknownLabel
from .report import CheckReport

__all__ = [
    "Carrier",
    "FiniteLattice",
    "Involution",
    "validate_lattice",
    "is_distributive",
    "is_join_irreducible",
    "is_meet_irreducible",
    "comparable_with_all",
    "check_involution",
    "hasse_covers",
    "dual",
]


@dataclass(frozen=True)
class Carrier:
    """Ordered tuple of distinct, non-empty element labels."""

    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("carrier must contain at least one element")
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise ValueError(f"carrier labels must be non-empty strings, got {name!r}")
            if name in index:
                raise ValueError(f"duplicate carrier label {name!r}")
            index[name] = i
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element label {label!r}") from None

    def label(self, i: int) -> str:
        return self.names[i]


@dataclass(frozen=True)
class FiniteLattice:
    """Bounded lattice given by explicit order, meet and join tables.

    Instances should be built through :func:`validate_lattice`, which checks
    the poset axioms and computes the bound tables; the fields are trusted by
    every other module.
    """

    carrier: Carrier
    leq: tuple[tuple[bool, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def size(self) -> int:
        return self.carrier.size

    def elements(self) -> range:
        return range(self.carrier.size)

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def label(self, x: int) -> str:
        return self.carrier.names[x]

    def labels(self, xs: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.carrier.names[x] for x in xs)

    def index(self, label: str) -> int:
        return self.carrier.index(label)


@dataclass(frozen=True)
class Involution:
    """Unary element table, candidate for an antitone involution.

    Validity (self-inverse, order-reversing) is established against a
    concrete lattice by :func:`check_involution`; constructors that need a
    valid involution re-check it and raise on failure.
    """

    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self) -> int:
        return len(self.table)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def validate_lattice(
    carrier: Carrier,
    pairs: Iterable[tuple[str, str]],
    *,
    covers: bool = False,
) -> FiniteLattice:
    """Build a :class:`FiniteLattice` from an order relation on labels.

    With ``covers=False`` the pairs must spell out the full order relation,
    reflexive pairs included.  With ``covers=True`` the pairs are covers and
    are closed reflexively and transitively first.  The mode is an explicit
    flag and never auto-detected, since the two readings are ambiguous for
    chains.

    Raises UnknownLabel, NotAPoset or NotALattice, each with the first
    offending witness.
    """
    n = carrier.size
    names = carrier.names
    rows = [0] * n  # rows[i] has bit j set iff i <= j
    for a, b in pairs:
        rows[carrier.index(a)] |= 1 << carrier.index(b)

    if covers:
        for i in range(n):
            rows[i] |= 1 << i
        for k in range(n):
            bit = 1 << k
            for i in range(n):
                if rows[i] & bit:
                    rows[i] |= rows[k]

    for i in range(n):
        if not rows[i] >> i & 1:
            raise NotAPoset(
                f"reflexivity fails: {names[i]} ≤ {names[i]} is missing",
                witness=(names[i],),
            )
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i] >> j & 1 and rows[j] >> i & 1:
                raise NotAPoset(
                    f"antisymmetry fails: {names[i]} ≤ {names[j]} and {names[j]} ≤ {names[i]}",
                    witness=(names[i], names[j]),
                )
    for i in range(n):
        for j in _bits(rows[i]):
            missing = rows[j] & ~rows[i]
            if missing:
                k = (missing & -missing).bit_length() - 1
                raise NotAPoset(
                    f"transitivity fails: {names[i]} ≤ {names[j]} ≤ {names[k]}"
                    f" but not {names[i]} ≤ {names[k]}",
                    witness=(names[i], names[j], names[k]),
                )

    cols = [0] * n  # cols[j] has bit i set iff i <= j
    for i in range(n):
        for j in _bits(rows[i]):
            cols[j] |= 1 << i

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            low = cols[i] & cols[j]
            glb = next((k for k in _bits(low) if not low & ~cols[k]), None)
            if glb is None:
                raise NotALattice(
                    f"no greatest lower bound for ({names[i]}, {names[j]})",
                    witness=(names[i], names[j]),
                )
            up = rows[i] & rows[j]
            lub = next((k for k in _bits(up) if not up & ~rows[k]), None)
            if lub is None:
                raise NotALattice(
                    f"no least upper bound for ({names[i]}, {names[j]})",
                    witness=(names[i], names[j]),
                )
            meet[i][j] = meet[j][i] = glb
            join[i][j] = join[j][i] = lub

    full = (1 << n) - 1
    bottom = next((k for k in range(n) if rows[k] == full), None)
    top = next((k for k in range(n) if cols[k] == full), None)
    if bottom is None or top is None:
        # unreachable once all pairs have bounds, kept as a safety net
        raise NotALattice("lattice has no bottom or top element")

    leq = tuple(tuple(bool(rows[i] >> j & 1) for j in range(n)) for i in range(n))
    return FiniteLattice(
        carrier=carrier,
        leq=leq,
        meet=tuple(tuple(r) for r in meet),
        join=tuple(tuple(r) for r in join),
        bottom=bottom,
        top=top,
    )


def is_distributive(lat: FiniteLattice) -> CheckReport:
    """Check x∧(y∨z) = (x∧y)∨(x∧z) over all triples."""
    meet, join, n = lat.meet, lat.join, lat.size
    for x in range(n):
        mx = meet[x]
        for y in range(n):
            for z in range(n):
                if mx[join[y][z]] != join[mx[y]][mx[z]]:
                    lx, ly, lz = lat.labels((x, y, z))
                    return CheckReport.fail(
                        f"x∧(y∨z) ≠ (x∧y)∨(x∧z) at (x, y, z) = ({lx}, {ly}, {lz})",
                        witness=(lx, ly, lz),
                    )
    return CheckReport.ok("distributive")


def is_join_irreducible(lat: FiniteLattice, a: int) -> bool:
    """True iff a = x∨y forces a ∈ {x, y}.

    Binary formulation only: the bottom element counts as join-irreducible
    (some textbooks exclude it via the empty join; this package does not).
    """
    join, n = lat.join, lat.size
    for x in range(n):
        if x == a:
            continue
        row = join[x]
        for y in range(n):
            if row[y] == a and y != a:
                return False
    return True


def is_meet_irreducible(lat: FiniteLattice, a: int) -> bool:
    """True iff a = x∧y forces a ∈ {x, y}; the top element qualifies."""
    meet, n = lat.meet, lat.size
    for x in range(n):
        if x == a:
            continue
        row = meet[x]
        for y in range(n):
            if row[y] == a and y != a:
                return False
    return True


def comparable_with_all(lat: FiniteLattice, a: int) -> bool:
    """True iff every element is comparable with a."""
    leq = lat.leq
    return all(leq[x][a] or leq[a][x] for x in range(lat.size))


def _involution_table(n: int, mapping) -> tuple[int, ...]:
    table = tuple(mapping.table if isinstance(mapping, Involution) else mapping)
    if len(table) != n:
        raise ValueError(f"involution table has length {len(table)}, expected {n}")
    if any(not isinstance(v, int) or not 0 <= v < n for v in table):
        raise ValueError("involution table entries must be element indices")
    return table


def check_involution(lat: FiniteLattice, mapping) -> CheckReport:
    """Check that a unary table is a self-inverse, order-reversing map."""
    table = _involution_table(lat.size, mapping)
    for x in range(lat.size):
        if table[table[x]] != x:
            lx = lat.label(x)
            return CheckReport.fail(
                f"not self-inverse: ({lx}')' = {lat.label(table[table[x]])} ≠ {lx}",
                witness=(lx,),
            )
    leq = lat.leq
    for x in range(lat.size):
        for y in range(lat.size):
            if leq[x][y] and not leq[table[y]][table[x]]:
                lx, ly = lat.label(x), lat.label(y)
                return CheckReport.fail(
                    f"not order-reversing: {lx} ≤ {ly} but {ly}' ≰ {lx}'",
                    witness=(lx, ly),
                )
    return CheckReport.ok("antitone involution")


def hasse_covers(lat: FiniteLattice) -> tuple[tuple[int, int], ...]:
    """Cover pairs (x, y) with x < y and nothing strictly between.

    Returned in lexicographic carrier-index order; composing with the
    reflexive-transitive closure reproduces the full order relation.
    """
    n = lat.size
    out = []
    for x in range(n):
        for y in range(n):
            if not lat.lt(x, y):
                continue
            if any(lat.lt(x, z) and lat.lt(z, y) for z in range(n)):
                continue
            out.append((x, y))
    return tuple(out)


def dual(lat: FiniteLattice) -> FiniteLattice:
    """Order-dual lattice: relation transposed, meet and join swapped."""
    n = lat.size
    return FiniteLattice(
        carrier=lat.carrier,
        leq=tuple(tuple(lat.leq[j][i] for j in range(n)) for i in range(n)),
        meet=lat.join,
        join=lat.meet,
        bottom=lat.top,
        top=lat.bottom,
    )

"""Commutative residuated structures on finite lattices, and MV-algebras.

A residuated structure couples a finite lattice with a commutative monoid
table ``mul`` and a residuum table ``imp`` linked by adjointness:

    x·y ≤ z  ⟺  x ≤ y→z.

The preferred ingestion path is :func:`derive_residuum`, which computes the
unique residuum forced by the monoid when it exists; explicitly supplied
residuum tables are always re-verified against the derived one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core_order import Carrier, FiniteLattice, check_involution, validate_lattice
from .errors import NoResiduum, NotAMonoid, NotMV, PreconditionViolated
from .report import CheckReport

__all__ = [
    "ResiduatedStructure",
    "MVAlgebra",
    "check_residuated",
    "derive_residuum",
    "is_integral",
    "satisfies_dnl",
    "dnl_negation",
    "check_integral_laws",
    "check_mv",
    "mv_to_residuated",
    "residuated_to_mv",
]


@dataclass(frozen=True)
class ResiduatedStructure:
    """Finite lattice plus monoid and residuum tables.

    ``unit`` and the lattice top are deliberately separate fields: some
    constructions (the twist-product with the classic operation pair) produce
    residuated structures whose monoid unit is not the top element.
    """

    lattice: FiniteLattice
    mul: tuple[tuple[int, ...], ...]
    imp: tuple[tuple[int, ...], ...]
    unit: int

    @property
    def size(self) -> int:
        return self.lattice.size

    def label(self, x: int) -> str:
        return self.lattice.label(x)


def _freeze(table: Sequence[Sequence[int]], n: int, what: str) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(row) for row in table)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"{what} table must be {n}×{n}")
    if any(not isinstance(v, int) or not 0 <= v < n for row in rows for v in row):
        raise ValueError(f"{what} table entries must be element indices")
    return rows


def check_residuated(r: ResiduatedStructure) -> CheckReport:
    """Verify the residuated-structure axioms by exhaustive scan.

    Checks, in order: monoid unit, commutativity, associativity, adjointness,
    and (as an asserted consequence) monotonicity of the product in each
    argument.  The first failure names the axiom and carries the witness.
    """
    lat, mul, imp, unit = r.lattice, r.mul, r.imp, r.unit
    n, leq = lat.size, lat.leq
    for x in range(n):
        if mul[unit][x] != x:
            return CheckReport.fail(
                f"monoid unit fails: 1·{lat.label(x)} = {lat.label(mul[unit][x])}",
                witness=(lat.label(unit), lat.label(x)),
            )
    for x in range(n):
        for y in range(x + 1, n):
            if mul[x][y] != mul[y][x]:
                return CheckReport.fail(
                    f"commutativity fails at ({lat.label(x)}, {lat.label(y)})",
                    witness=(lat.label(x), lat.label(y)),
                )
    for x in range(n):
        for y in range(n):
            xy = mul[x][y]
            for z in range(n):
                if mul[xy][z] != mul[x][mul[y][z]]:
                    return CheckReport.fail(
                        "associativity fails at "
                        f"({lat.label(x)}, {lat.label(y)}, {lat.label(z)})",
                        witness=lat.labels((x, y, z)),
                    )
    for x in range(n):
        for y in range(n):
            xy = mul[x][y]
            for z in range(n):
                if leq[xy][z] != leq[x][imp[y][z]]:
                    return CheckReport.fail(
                        "adjointness fails at "
                        f"({lat.label(x)}, {lat.label(y)}, {lat.label(z)})",
                        witness=lat.labels((x, y, z)),
                    )
    for x in range(n):
        for y in range(n):
            if not leq[x][y]:
                continue
            for z in range(n):
                if not leq[mul[x][z]][mul[y][z]]:
                    return CheckReport.fail(
                        "product is not order-preserving at "
                        f"({lat.label(x)}, {lat.label(y)}, {lat.label(z)})",
                        witness=lat.labels((x, y, z)),
                    )
    return CheckReport.ok("commutative residuated lattice")


def derive_residuum(
    lat: FiniteLattice,
    mul: Sequence[Sequence[int]],
    unit: int,
) -> tuple[tuple[int, ...], ...]:
    """Compute the residuum forced by adjointness: y→z = max{x : x·y ≤ z}.

    The monoid laws are checked first (NotAMonoid).  If for some (y, z) the
    set {x : x·y ≤ z} is empty or has no greatest element, or the pointwise
    maxima fail the final adjointness re-check (possible for non-monotone
    products), no residuum exists at all and NoResiduum is raised.  The result
    is unique when it exists and is never trusted: adjointness is re-verified
    exhaustively before returning.
    """
    n = lat.size
    tab = _freeze(mul, n, "mul")
    for x in range(n):
        for y in range(x + 1, n):
            if tab[x][y] != tab[y][x]:
                raise NotAMonoid(
                    f"not commutative at ({lat.label(x)}, {lat.label(y)})",
                    witness=(lat.label(x), lat.label(y)),
                )
    for x in range(n):
        for y in range(n):
            xy = tab[x][y]
            for z in range(n):
                if tab[xy][z] != tab[x][tab[y][z]]:
                    raise NotAMonoid(
                        f"not associative at ({lat.label(x)}, {lat.label(y)}, {lat.label(z)})",
                        witness=lat.labels((x, y, z)),
                    )
    for x in range(n):
        if tab[unit][x] != x:
            raise NotAMonoid(
                f"unit fails: {lat.label(unit)}·{lat.label(x)} = {lat.label(tab[unit][x])}",
                witness=(lat.label(unit), lat.label(x)),
            )

    leq = lat.leq
    below = [0] * n  # below[k] has bit x set iff x <= k
    for x in range(n):
        for k in range(n):
            if leq[x][k]:
                below[k] |= 1 << x

    imp = [[0] * n for _ in range(n)]
    for y in range(n):
        for z in range(n):
            sat = 0
            for x in range(n):
                if leq[tab[x][y]][z]:
                    sat |= 1 << x
            greatest = None
            m = sat
            while m:
                k = (m & -m).bit_length() - 1
                m &= m - 1
                if not sat & ~below[k]:
                    greatest = k
                    break
            if greatest is None:
                raise NoResiduum(
                    f"{{x : x·{lat.label(y)} ≤ {lat.label(z)}}} has no greatest element",
                    witness=(lat.label(y), lat.label(z)),
                )
            imp[y][z] = greatest

    for x in range(n):
        for y in range(n):
            xy = tab[x][y]
            for z in range(n):
                if leq[xy][z] != leq[x][imp[y][z]]:
                    raise NoResiduum(
                        "adjointness is unachievable (product not order-preserving), "
                        f"witnessed at ({lat.label(x)}, {lat.label(y)}, {lat.label(z)})",
                        witness=lat.labels((x, y, z)),
                    )
    return tuple(tuple(row) for row in imp)


def is_integral(r: ResiduatedStructure) -> bool:
    """True iff the monoid unit is the lattice top."""
    return r.unit == r.lattice.top


def satisfies_dnl(r: ResiduatedStructure) -> CheckReport:
    """Double negation law: (x→0)→0 = x, with 0 the lattice bottom."""
    zero = r.lattice.bottom
    imp = r.imp
    for x in range(r.size):
        if imp[imp[x][zero]][zero] != x:
            lx = r.label(x)
            return CheckReport.fail(
                f"(x→0)→0 ≠ x at x = {lx}: got {r.label(imp[imp[x][zero]][zero])}",
                witness=(lx,),
            )
    return CheckReport.ok("double negation law")


def dnl_negation(r: ResiduatedStructure) -> tuple[int, ...]:
    """The table x ↦ x→0.  An antitone involution whenever DNL holds."""
    zero = r.lattice.bottom
    return tuple(r.imp[x][zero] for x in range(r.size))


_LAW_NAMES = {
    "i": "x ≤ y implies x·z ≤ y·z",
    "ii": "x·y ≤ x and x·y ≤ y",
    "iii": "1→x = x",
    "iv": "x ≤ y→x",
    "v": "x→y = 1 iff x ≤ y",
    "vi": "x ≤ y implies y→z ≤ x→z",
    "vii": "x ≤ y implies z→x ≤ z→y",
    "viii": "x→(y∧z) = (x→y)∧(x→z)",
    "ix": "(x·y)→z = x→(y→z)",
}


def check_integral_laws(r: ResiduatedStructure, *, force: bool = False) -> CheckReport:
    """Verify the nine standard derived laws of integral residuated structures.

    Serves as a self-test oracle: every valid integral instance must pass all
    of (i)-(ix).  The integrality gate can be bypassed with ``force=True`` for
    negative experiments; several laws then genuinely fail.
    """
    if not force:
        rep = check_residuated(r)
        if not rep.passed:
            raise PreconditionViolated(f"not a residuated structure: {rep.detail}")
        if not is_integral(r):
            raise PreconditionViolated("unit is not the top element")

    lat, mul, imp, unit = r.lattice, r.mul, r.imp, r.unit
    n, leq, meet = lat.size, lat.leq, lat.meet

    def _fail(law: str, *xs: int) -> CheckReport:
        return CheckReport.fail(
            f"law ({law}) [{_LAW_NAMES[law]}] fails at ({', '.join(lat.labels(xs))})",
            witness=lat.labels(xs),
        )

    for x in range(n):
        for y in range(n):
            if not leq[x][y]:
                continue
            for z in range(n):
                if not leq[mul[x][z]][mul[y][z]]:
                    return _fail("i", x, y, z)
    for x in range(n):
        for y in range(n):
            if not (leq[mul[x][y]][x] and leq[mul[x][y]][y]):
                return _fail("ii", x, y)
    for x in range(n):
        if imp[unit][x] != x:
            return _fail("iii", x)
    for x in range(n):
        for y in range(n):
            if not leq[x][imp[y][x]]:
                return _fail("iv", x, y)
    for x in range(n):
        for y in range(n):
            if (imp[x][y] == unit) != leq[x][y]:
                return _fail("v", x, y)
    for x in range(n):
        for y in range(n):
            if not leq[x][y]:
                continue
            for z in range(n):
                if not leq[imp[y][z]][imp[x][z]]:
                    return _fail("vi", x, y, z)
                if not leq[imp[z][x]][imp[z][y]]:
                    return _fail("vii", x, y, z)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if imp[x][meet[y][z]] != meet[imp[x][y]][imp[x][z]]:
                    return _fail("viii", x, y, z)
                if imp[mul[x][y]][z] != imp[x][imp[y][z]]:
                    return _fail("ix", x, y, z)
    return CheckReport.ok("all derived laws (i)-(ix) hold")


@dataclass(frozen=True)
class MVAlgebra:
    """Carrier with a truncated-addition table, a negation and a zero."""

    carrier: Carrier
    oplus: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    zero: int

    @property
    def size(self) -> int:
        return self.carrier.size

    def label(self, x: int) -> str:
        return self.carrier.names[x]


def check_mv(m: MVAlgebra) -> CheckReport:
    """Verify the MV-algebra axioms by exhaustive scan."""
    n, oplus, neg, zero = m.size, m.oplus, m.neg, m.zero
    for x in range(n):
        for y in range(x + 1, n):
            if oplus[x][y] != oplus[y][x]:
                return CheckReport.fail(
                    f"⊕ not commutative at ({m.label(x)}, {m.label(y)})",
                    witness=(m.label(x), m.label(y)),
                )
    for x in range(n):
        for y in range(n):
            xy = oplus[x][y]
            for z in range(n):
                if oplus[xy][z] != oplus[x][oplus[y][z]]:
                    return CheckReport.fail(
                        f"⊕ not associative at ({m.label(x)}, {m.label(y)}, {m.label(z)})",
                        witness=(m.label(x), m.label(y), m.label(z)),
                    )
    for x in range(n):
        if oplus[zero][x] != x:
            return CheckReport.fail(
                f"0 is not a ⊕-unit at {m.label(x)}",
                witness=(m.label(zero), m.label(x)),
            )
    for x in range(n):
        if neg[neg[x]] != x:
            return CheckReport.fail(
                f"¬¬x ≠ x at x = {m.label(x)}",
                witness=(m.label(x),),
            )
    for x in range(n):
        for y in range(n):
            left = oplus[neg[oplus[neg[x]][y]]][y]
            right = oplus[neg[oplus[neg[y]][x]]][x]
            if left != right:
                return CheckReport.fail(
                    f"¬(¬x⊕y)⊕y ≠ ¬(¬y⊕x)⊕x at ({m.label(x)}, {m.label(y)})",
                    witness=(m.label(x), m.label(y)),
                )
    return CheckReport.ok("MV-algebra")


def mv_to_residuated(m: MVAlgebra) -> ResiduatedStructure:
    """Turn an MV-algebra into a bounded residuated structure with DNL.

    The lattice order is derived from x∨y := ¬(¬x⊕y)⊕y, the product is
    x·y := ¬(¬x⊕¬y), the residuum x→y := ¬x⊕y, and the unit is ¬0.  Every
    derived guarantee (lattice laws, adjointness, boundedness, DNL) is
    re-verified; any failure reports the input as not MV.
    """
    rep = check_mv(m)
    if not rep.passed:
        raise NotMV(rep.detail, witness=rep.witness)

    n, oplus, neg = m.size, m.oplus, m.neg
    join = [[oplus[neg[oplus[neg[x]][y]]][y] for y in range(n)] for x in range(n)]
    meet = [[neg[join[neg[x]][neg[y]]] for y in range(n)] for x in range(n)]
    pairs = [
        (m.label(x), m.label(y))
        for x in range(n)
        for y in range(n)
        if join[x][y] == y
    ]
    try:
        lat = validate_lattice(m.carrier, pairs, covers=False)
    except Exception as exc:  # NotAPoset / NotALattice
        raise NotMV(f"derived order is not a lattice: {exc}") from exc
    for x in range(n):
        for y in range(n):
            if lat.join[x][y] != join[x][y] or lat.meet[x][y] != meet[x][y]:
                raise NotMV(
                    "derived join/meet disagree with the lattice bounds at "
                    f"({m.label(x)}, {m.label(y)})",
                    witness=(m.label(x), m.label(y)),
                )

    mul = tuple(tuple(neg[oplus[neg[x]][neg[y]]] for y in range(n)) for x in range(n))
    imp = tuple(tuple(oplus[neg[x]][y] for y in range(n)) for x in range(n))
    r = ResiduatedStructure(lattice=lat, mul=mul, imp=imp, unit=neg[m.zero])

    rep = check_residuated(r)
    if not rep.passed:
        raise NotMV(f"derived structure is not residuated: {rep.detail}", witness=rep.witness)
    if m.zero != lat.bottom or r.unit != lat.top:
        raise NotMV("derived structure is not bounded by (0, ¬0)")
    dnl = satisfies_dnl(r)
    if not dnl.passed:
        raise NotMV(f"derived structure violates DNL: {dnl.detail}", witness=dnl.witness)
    return r


def residuated_to_mv(r: ResiduatedStructure) -> MVAlgebra:
    """Extract the MV candidate (⊕, ¬, 0) with ¬x := x→0, x⊕y := ¬(¬x·¬y).

    Purely mechanical; run :func:`check_mv` on the result to find out whether
    the source structure really carries an MV-algebra.
    """
    n = r.size
    neg = dnl_negation(r)
    oplus = tuple(tuple(neg[r.mul[neg[x]][neg[y]]] for y in range(n)) for x in range(n))
    return MVAlgebra(
        carrier=r.lattice.carrier,
        oplus=oplus,
        neg=neg,
        zero=r.lattice.bottom,
    )

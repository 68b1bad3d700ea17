"""Full twist-products and the two adjoint operation pairs on them.

The full twist-product of a lattice L is the lattice on L×L with

    (x,y) ⊔ (z,v) = (x∨z, y∧v),      (x,y) ⊓ (z,v) = (x∧z, y∨v),

so (x,y) ≤ (z,v) iff x ≤ z and v ≤ y.  Its bottom is (0,1) and its top is
(1,0).  Two operation pairs turn the twist-product of a suitable residuated
base into a residuated structure:

* the classic pair (flavor ``"bc"``), for an integral base:
    (x,y)⊙(z,v) = (x·z, (x→v)∧(z→y)),
    (x,y)⇒(z,v) = ((x→z)∧(v→y), x·v),
  with unit (1,1), which is not the top element;

* the double-negation pair (flavor ``"dn"``), for a bounded base with the
  double negation law (or any explicitly supplied antitone involution '):
    (x,y)⊙(z,v) = (x·z, (y'·v')'),
    (x,y)⇒(z,v) = (x→z, (y'→v')'),
  with unit (1,0), the top element, so the result is integral.

Pair elements are canonically indexed as x*n + y and all tables are dense.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core_order import Carrier, FiniteLattice, Involution, check_involution, validate_lattice
from .errors import HypothesisViolated, PreconditionViolated
from .report import CheckReport
from .residuated import (
    ResiduatedStructure,
    check_residuated,
    dnl_negation,
    is_integral,
    satisfies_dnl,
)

__all__ = [
    "FLAVOR_BC",
    "FLAVOR_DN",
    "TwistAlgebra",
    "pair_index",
    "index_pair",
    "pair_label",
    "twist_lattice",
    "twist_product",
    "twist_residuum",
    "twist_product_dn",
    "twist_residuum_dn",
    "check_adjoint",
    "build_twist",
    "check_swap_interdefinability",
    "check_orthogonal_dnl",
    "check_componentwise_negation",
]

FLAVOR_BC = "bc"
FLAVOR_DN = "dn"

Pair = tuple[int, int]


def pair_index(n: int, p: Pair) -> int:
    return p[0] * n + p[1]


def index_pair(n: int, i: int) -> Pair:
    return divmod(i, n)


def pair_label(lat: FiniteLattice, p: Pair) -> str:
    return f"({lat.label(p[0])},{lat.label(p[1])})"


@lru_cache(maxsize=256)
def twist_lattice(lat: FiniteLattice) -> FiniteLattice:
    """The full twist-product lattice on all ordered pairs of ``lat``.

    Validated from scratch, so the componentwise order really is a lattice
    with bottom (0,1) and top (1,0).
    """
    n = lat.size
    names = [f"({a},{b})" for a in lat.carrier.names for b in lat.carrier.names]
    carrier = Carrier(tuple(names))
    leq = lat.leq
    pairs = []
    for x in range(n):
        for y in range(n):
            p = names[x * n + y]
            for z in range(n):
                if not leq[x][z]:
                    continue
                for v in range(n):
                    if leq[v][y]:
                        pairs.append((p, names[z * n + v]))
    return validate_lattice(carrier, pairs, covers=False)


def twist_product(r: ResiduatedStructure, p: Pair, q: Pair) -> Pair:
    """(x,y)⊙(z,v) = (x·z, (x→v)∧(z→y)), the classic pair's product."""
    x, y = p
    z, v = q
    return (r.mul[x][z], r.lattice.meet[r.imp[x][v]][r.imp[z][y]])


def twist_residuum(r: ResiduatedStructure, p: Pair, q: Pair) -> Pair:
    """(x,y)⇒(z,v) = ((x→z)∧(v→y), x·v), the classic pair's residuum."""
    x, y = p
    z, v = q
    return (r.lattice.meet[r.imp[x][z]][r.imp[v][y]], r.mul[x][v])


def twist_product_dn(r: ResiduatedStructure, inv: Involution, p: Pair, q: Pair) -> Pair:
    """(x,y)⊙(z,v) = (x·z, (y'·v')'), the double-negation pair's product."""
    x, y = p
    z, v = q
    return (r.mul[x][z], inv(r.mul[inv(y)][inv(v)]))


def twist_residuum_dn(r: ResiduatedStructure, inv: Involution, p: Pair, q: Pair) -> Pair:
    """(x,y)⇒(z,v) = (x→z, (y'→v')'), the double-negation pair's residuum."""
    x, y = p
    z, v = q
    return (r.imp[x][z], inv(r.imp[inv(y)][inv(v)]))


def check_adjoint(lat: FiniteLattice, mul, imp) -> CheckReport:
    """Generic adjointness oracle: mul[p][q] ≤ r ⟺ p ≤ imp[q][r] on any lattice.

    Shared by the twist-product verifications and by the adjoint-pair claims
    about operation tables restricted to a focal subset.
    """
    n, leq = lat.size, lat.leq
    for p in range(n):
        for q in range(n):
            pq = mul[p][q]
            for s in range(n):
                if leq[pq][s] != leq[p][imp[q][s]]:
                    return CheckReport.fail(
                        f"adjointness fails at ({lat.label(p)}, {lat.label(q)}, {lat.label(s)})",
                        witness=lat.labels((p, q, s)),
                    )
    return CheckReport.ok("adjoint pair")


@dataclass(frozen=True)
class TwistAlgebra:
    """A twist-product lattice with one of the two operation pairs attached.

    ``algebra`` is a plain :class:`ResiduatedStructure` over the pair lattice,
    so every residuated-structure checker applies to it directly.  For the
    ``"dn"`` flavor, ``involution`` records the base involution actually used
    (by default x ↦ x→0 under DNL, but an arbitrary antitone involution can be
    supplied for experiments).
    """

    base: ResiduatedStructure
    flavor: str
    algebra: ResiduatedStructure
    involution: Involution | None = None

    @property
    def lattice(self) -> FiniteLattice:
        return self.algebra.lattice

    @property
    def unit_pair(self) -> Pair:
        return index_pair(self.base.size, self.algebra.unit)

    def product(self, p: Pair, q: Pair) -> Pair:
        n = self.base.size
        return index_pair(n, self.algebra.mul[pair_index(n, p)][pair_index(n, q)])

    def residuum(self, p: Pair, q: Pair) -> Pair:
        n = self.base.size
        return index_pair(n, self.algebra.imp[pair_index(n, p)][pair_index(n, q)])


def build_twist(
    r: ResiduatedStructure,
    flavor: str,
    involution: Involution | None = None,
) -> TwistAlgebra:
    """Tabulate a twist algebra of the requested flavor over base ``r``.

    Flavor ``"bc"`` requires an integral base; flavor ``"dn"`` requires a
    bounded base satisfying the double negation law, unless an explicit
    antitone involution is supplied (negative-experiment mode, in which case
    only the involution itself is validated).  Raises HypothesisViolated when
    a required hypothesis is missing.  The output is not self-certified:
    callers verify it with check_residuated and friends.
    """
    if flavor not in (FLAVOR_BC, FLAVOR_DN):
        raise ValueError(f"unknown twist flavor {flavor!r}")
    rep = check_residuated(r)
    if not rep.passed:
        raise HypothesisViolated(f"base is not a commutative residuated lattice: {rep.detail}")

    lat = r.lattice
    n = lat.size
    if flavor == FLAVOR_BC:
        if not is_integral(r):
            raise HypothesisViolated("base is not integral (unit differs from top)")
        inv = None
        unit = (lat.top, lat.top)

        def prod(p: Pair, q: Pair) -> Pair:
            return twist_product(r, p, q)

        def res(p: Pair, q: Pair) -> Pair:
            return twist_residuum(r, p, q)

    else:
        if involution is None:
            if not is_integral(r):
                raise HypothesisViolated("base is not bounded (unit differs from top)")
            dnl = satisfies_dnl(r)
            if not dnl.passed:
                raise HypothesisViolated(
                    f"base violates the double negation law: {dnl.detail}",
                    witness=dnl.witness,
                )
            inv = Involution(dnl_negation(r))
        else:
            inv = involution if isinstance(involution, Involution) else Involution(involution)
            irep = check_involution(lat, inv)
            if not irep.passed:
                raise HypothesisViolated(
                    f"supplied map is not an antitone involution: {irep.detail}",
                    witness=irep.witness,
                )
        unit = (lat.top, lat.bottom)

        def prod(p: Pair, q: Pair) -> Pair:
            return twist_product_dn(r, inv, p, q)

        def res(p: Pair, q: Pair) -> Pair:
            return twist_residuum_dn(r, inv, p, q)

    lat2 = twist_lattice(lat)
    m = n * n
    mul2 = [[0] * m for _ in range(m)]
    imp2 = [[0] * m for _ in range(m)]
    for i in range(m):
        p = index_pair(n, i)
        for j in range(m):
            q = index_pair(n, j)
            mul2[i][j] = pair_index(n, prod(p, q))
            imp2[i][j] = pair_index(n, res(p, q))
    algebra = ResiduatedStructure(
        lattice=lat2,
        mul=tuple(tuple(row) for row in mul2),
        imp=tuple(tuple(row) for row in imp2),
        unit=pair_index(n, unit),
    )
    return TwistAlgebra(base=r, flavor=flavor, algebra=algebra, involution=inv)


def check_swap_interdefinability(t: TwistAlgebra) -> CheckReport:
    """With s(x,y) = (y,x): p⊙q = s(p ⇒ s(q)) and p⇒q = s(p ⊙ s(q)).

    These identities tie the classic pair's two operations together; they are
    specific to flavor ``"bc"``.
    """
    if t.flavor != FLAVOR_BC:
        raise PreconditionViolated("swap interdefinability applies to the bc flavor only")
    n = t.base.size
    lat = t.base.lattice
    for x in range(n):
        for y in range(n):
            p = (x, y)
            for z in range(n):
                for v in range(n):
                    q = (z, v)
                    got = t.residuum(p, (v, z))
                    if t.product(p, q) != (got[1], got[0]):
                        return CheckReport.fail(
                            "p⊙q ≠ s(p ⇒ s(q)) at "
                            f"({pair_label(lat, p)}, {pair_label(lat, q)})",
                            witness=(lat.labels(p), lat.labels(q)),
                        )
                    got = t.product(p, (v, z))
                    if t.residuum(p, q) != (got[1], got[0]):
                        return CheckReport.fail(
                            "p⇒q ≠ s(p ⊙ s(q)) at "
                            f"({pair_label(lat, p)}, {pair_label(lat, q)})",
                            witness=(lat.labels(p), lat.labels(q)),
                        )
    return CheckReport.ok("⊙ and ⇒ are swap-interdefinable")


def check_orthogonal_dnl(t: TwistAlgebra) -> CheckReport:
    """Double negation on orthogonal pairs, with p' := p ⇒ (0,1).

    Requires a bc twist over a base with DNL.  For every pair (x,y) with
    x ≤ y' (x orthogonal to y), checks the intermediate identity
    (x,y)' = (y,x) and then (x,y)'' = (x,y).
    """
    if t.flavor != FLAVOR_BC:
        raise PreconditionViolated("orthogonal double negation applies to the bc flavor only")
    base = t.base
    dnl = satisfies_dnl(base)
    if not dnl.passed:
        raise HypothesisViolated(
            f"base violates the double negation law: {dnl.detail}", witness=dnl.witness
        )
    neg = dnl_negation(base)
    lat = base.lattice
    zero_one = (lat.bottom, lat.top)
    for x in range(base.size):
        for y in range(base.size):
            if not lat.leq[x][neg[y]]:
                continue
            p = (x, y)
            p1 = t.residuum(p, zero_one)
            if p1 != (y, x):
                return CheckReport.fail(
                    f"p ⇒ (0,1) ≠ swap(p) on orthogonal pair {pair_label(lat, p)}",
                    witness=(lat.labels(p),),
                )
            if t.residuum(p1, zero_one) != p:
                return CheckReport.fail(
                    f"p'' ≠ p on orthogonal pair {pair_label(lat, p)}",
                    witness=(lat.labels(p),),
                )
    return CheckReport.ok("double negation law holds on orthogonal pairs")


def check_componentwise_negation(t: TwistAlgebra) -> CheckReport:
    """For the dn flavor: p ⇒ (0,1) = (x', y') componentwise, for all p = (x,y)."""
    if t.flavor != FLAVOR_DN:
        raise PreconditionViolated("componentwise negation applies to the dn flavor only")
    inv = t.involution
    lat = t.base.lattice
    zero_one = (lat.bottom, lat.top)
    for x in range(t.base.size):
        for y in range(t.base.size):
            p = (x, y)
            if t.residuum(p, zero_one) != (inv(x), inv(y)):
                return CheckReport.fail(
                    f"p ⇒ (0,1) ≠ (x',y') at p = {pair_label(lat, p)}",
                    witness=(lat.labels(p),),
                )
    return CheckReport.ok("p ⇒ (0,1) is the componentwise involution")

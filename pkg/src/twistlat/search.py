"""Exhaustive enumeration of small lattices and residuated structures.

Lattices are enumerated up to isomorphism by scanning all upper-triangular
order relations with the bottom first and the top last (every finite lattice
admits such a labelling), rejecting duplicates through a canonical form: the
least adjacency encoding over all permutations that fix bottom and top.
Integral residuated structures are enumerated per lattice by backtracking
over commutative product tables bounded by the meet, with the unit pinned to
the top element; every emitted structure re-derives its residuum and
re-passes the residuated axioms, so the enumerator never trusts its own
pruning.

:func:`run_task` drives verification of the package's structural laws over
the enumerated universe, and can hunt for counterexamples when named
hypotheses are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Iterator

from .core_order import (
    Carrier,
    FiniteLattice,
    Involution,
    comparable_with_all,
    is_distributive,
    is_join_irreducible,
    is_meet_irreducible,
    validate_lattice,
)
from .errors import (
    HypothesisViolated,
    NoResiduum,
    NotAMonoid,
    PreconditionViolated,
    SizeOutOfRange,
    UnknownTarget,
)
from .kleene import (
    adjoint_pair_criterion,
    atom_closure_condition,
    atom_residuum_condition,
    check_embedding,
    closure_check,
    comparability_characterization,
    distributive_closure_condition,
    dn_residuum_triviality_check,
    focal_subset,
    is_pseudo_kleene,
    is_sublattice,
    sublattice_criterion,
    subset_lattice,
    swap_involution,
)
from .residuated import (
    ResiduatedStructure,
    check_residuated,
    derive_residuum,
    is_integral,
    satisfies_dnl,
)
from .twist import (
    FLAVOR_BC,
    FLAVOR_DN,
    build_twist,
    check_componentwise_negation,
    pair_index,
    twist_product,
    twist_product_dn,
    twist_residuum,
)

__all__ = [
    "MAX_ENUM_SIZE",
    "EnumerationTask",
    "TaskReport",
    "canonical_form",
    "enumerate_lattices",
    "enumerate_residuations",
    "antitone_involutions",
    "run_task",
    "TARGET_DESCRIPTIONS",
]

MAX_ENUM_SIZE = 7


def canonical_form(lat: FiniteLattice) -> tuple[int, ...]:
    """Least adjacency encoding over permutations fixing bottom and top.

    Lattice isomorphisms necessarily preserve bottom and top, so placing them
    first and last and minimizing the flattened relation matrix over all
    arrangements of the interior elements yields an isomorphism invariant.
    """
    n = lat.size
    if n == 1:
        return (1,)
    middles = [x for x in range(n) if x not in (lat.bottom, lat.top)]
    leq = lat.leq
    best = None
    for perm in permutations(middles):
        old = (lat.bottom, *perm, lat.top)  # old[i] is the element at new slot i
        enc = tuple(
            1 if leq[old[i]][old[j]] else 0 for i in range(n) for j in range(n)
        )
        if best is None or enc < best:
            best = enc
    return best


def _lattice_from_encoding(n: int, enc: tuple[int, ...]) -> FiniteLattice:
    carrier = Carrier(tuple(str(i) for i in range(n)))
    pairs = [
        (str(i), str(j)) for i in range(n) for j in range(n) if enc[i * n + j]
    ]
    return validate_lattice(carrier, pairs, covers=False)


def _is_transitive(rows: list[int]) -> bool:
    for i, row in enumerate(rows):
        m = row
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            if rows[j] & ~row:
                return False
    return True


def _is_lattice_relation(rows: list[int], n: int) -> bool:
    cols = [0] * n
    for i in range(n):
        for j in range(n):
            if rows[i] >> j & 1:
                cols[j] |= 1 << i
    for i in range(n):
        for j in range(i + 1, n):
            low = cols[i] & cols[j]
            if not any(not low & ~cols[k] for k in _bits(low)):
                return False
            up = rows[i] & rows[j]
            if not any(not up & ~rows[k] for k in _bits(up)):
                return False
    return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_lattices(n: int) -> Iterator[FiniteLattice]:
    """All n-element lattices, one per isomorphism class, in canonical order.

    The stream is deterministic (sorted by canonical encoding) and every
    yielded lattice has been rebuilt through validate_lattice.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_ENUM_SIZE:
        raise SizeOutOfRange(f"lattice enumeration supports sizes 1..{MAX_ENUM_SIZE}, got {n}")
    if n == 1:
        yield _lattice_from_encoding(1, (1,))
        return

    free = [(i, j) for i in range(1, n - 1) for j in range(i + 1, n - 1)]
    base = [1 << i for i in range(n)]
    for i in range(n):
        base[0] |= 1 << i  # bottom below everything
        base[i] |= 1 << (n - 1)  # top above everything
    forms = set()
    for bits in product((0, 1), repeat=len(free)):
        rows = list(base)
        for (i, j), b in zip(free, bits):
            if b:
                rows[i] |= 1 << j
        if not _is_transitive(rows):
            continue
        if not _is_lattice_relation(rows, n):
            continue
        carrier = Carrier(tuple(str(i) for i in range(n)))
        pairs = [
            (str(i), str(j)) for i in range(n) for j in range(n) if rows[i] >> j & 1
        ]
        lat = validate_lattice(carrier, pairs, covers=False)
        forms.add(canonical_form(lat))
    for enc in sorted(forms):
        yield _lattice_from_encoding(n, enc)


def enumerate_residuations(lat: FiniteLattice) -> Iterator[ResiduatedStructure]:
    """All integral residuated structures on ``lat``, unit pinned to the top.

    Backtracks over commutative product tables with entries bounded by the
    meet (a necessary condition for integral residuation), pruning with
    partial monotonicity and associativity; each leaf re-derives the residuum
    and is re-validated, so pruning is never trusted.
    """
    n = lat.size
    leq, meet = lat.leq, lat.meet
    top, bottom = lat.top, lat.bottom
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    for x in range(n):
        table[top][x] = table[x][top] = x
        table[bottom][x] = table[x][bottom] = bottom

    cells = [
        (x, y)
        for x in range(n)
        for y in range(x, n)
        if x not in (top, bottom) and y not in (top, bottom)
    ]
    candidates = [
        [z for z in range(n) if leq[z][meet[x][y]]] for x, y in cells
    ]

    def monotone_ok(x: int, y: int, v: int) -> bool:
        for p in range(n):
            for q in range(n):
                w = table[p][q]
                if w is None:
                    continue
                if leq[p][x] and leq[q][y] and not leq[w][v]:
                    return False
                if leq[x][p] and leq[y][q] and not leq[v][w]:
                    return False
        return True

    def assoc_ok() -> bool:
        for p in range(n):
            for q in range(n):
                pq = table[p][q]
                if pq is None:
                    continue
                for s in range(n):
                    qs = table[q][s]
                    if qs is None:
                        continue
                    left = table[pq][s]
                    right = table[p][qs]
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def rec(k: int) -> Iterator[ResiduatedStructure]:
        if k == len(cells):
            mul = tuple(tuple(row) for row in table)  # type: ignore[arg-type]
            try:
                imp = derive_residuum(lat, mul, top)
            except (NotAMonoid, NoResiduum):
                return
            yield ResiduatedStructure(lattice=lat, mul=mul, imp=imp, unit=top)
            return
        x, y = cells[k]
        for v in candidates[k]:
            if not monotone_ok(x, y, v):
                continue
            table[x][y] = table[y][x] = v
            if assoc_ok():
                yield from rec(k + 1)
            table[x][y] = table[y][x] = None

    yield from rec(0)


def antitone_involutions(lat: FiniteLattice) -> Iterator[Involution]:
    """All self-inverse order-reversing unary tables, in lexicographic order."""
    n = lat.size
    leq = lat.leq
    for perm in permutations(range(n)):
        if any(perm[perm[x]] != x for x in range(n)):
            continue
        if all(
            not leq[x][y] or leq[perm[y]][perm[x]] for x in range(n) for y in range(n)
        ):
            yield Involution(tuple(perm))


TARGET_DESCRIPTIONS = {
    "th1": "comparability characterization: both descriptions agree, and imply sublattice",
    "th2": "sublattice focal subsets are pseudo-Kleene, embed the base, transfer distributivity",
    "th3": "exchange condition ⟺ sublattice closure",
    "th4": "closure criterion ⟺ closure under the classic pair (and ⊙ ⟺ ⇒)",
    "th5": "classic twist algebra is a commutative residuated lattice",
    "th6": "double-negation twist algebra is bounded, integral and satisfies DNL",
    "lem1": "bound condition ⟺ ⊙-closure over distributive bases",
    "cor2": "atom condition ⟺ ⊙-closure at atom focals",
    "implem": "atom residuum condition ⟺ ⇒-closure at atom focals",
    "dnclosure": "focal subset closes under the double-negation product",
    "triviality": "double-negation residuum closure forces a one-element base",
}

_TARGET_FLAGS = {
    "th1": (),
    "th2": ("sublattice",),
    "th3": (),
    "th4": ("idempotent", "join_irreducible", "meet_irreducible", "comparable_with_all"),
    "th5": (),
    "th6": ("dnl",),
    "lem1": ("distributive",),
    "cor2": ("distributive", "atom"),
    "implem": ("distributive", "atom"),
    "dnclosure": (
        "idempotent",
        "join_irreducible",
        "meet_irreducible",
        "involution_idempotent",
        "comparable_with_all",
    ),
    "triviality": (),
}


@dataclass(frozen=True)
class EnumerationTask:
    """A verification or counterexample-hunting sweep over small models."""

    max_size: int
    target: str
    mode: str = "verify"
    without: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.max_size, int) or not 1 <= self.max_size <= MAX_ENUM_SIZE:
            raise SizeOutOfRange(
                f"max_size must be between 1 and {MAX_ENUM_SIZE}, got {self.max_size}"
            )
        if self.target not in _TARGET_FLAGS:
            raise UnknownTarget(f"unknown target {self.target!r}")
        if self.mode not in ("verify", "falsify_without"):
            raise ValueError(f"mode must be 'verify' or 'falsify_without', got {self.mode!r}")
        object.__setattr__(self, "without", tuple(self.without))
        unknown = [f for f in self.without if f not in _TARGET_FLAGS[self.target]]
        if unknown:
            raise ValueError(
                f"target {self.target!r} has no hypothesis flags {unknown}; "
                f"available: {list(_TARGET_FLAGS[self.target])}"
            )


@dataclass(frozen=True)
class TaskReport:
    """Outcome of an enumeration sweep."""

    task: EnumerationTask
    lattices: int
    cases_total: int
    cases_checked: int
    cases_skipped: int
    violations: tuple[str, ...]
    counterexample: str | None

    @property
    def outcome(self) -> str:
        if self.task.mode == "verify":
            return "verified" if not self.violations else "violations"
        return "counterexample" if self.counterexample is not None else "exhausted"

    def summary(self) -> str:
        lines = [
            f"target: {self.task.target} ({TARGET_DESCRIPTIONS[self.task.target]})",
            f"mode: {self.task.mode}"
            + (f" without {', '.join(self.task.without)}" if self.task.without else "")
            + f"; sizes 1..{self.task.max_size}",
            f"lattices: {self.lattices}  cases: {self.cases_total}"
            f"  checked: {self.cases_checked}  skipped: {self.cases_skipped}",
            f"outcome: {self.outcome}",
        ]
        for v in self.violations:
            lines.append(f"violation: {v}")
        if self.counterexample is not None:
            lines.append(f"counterexample: {self.counterexample}")
        return "\n".join(lines)


@dataclass(frozen=True)
class _Case:
    description: str
    flags: tuple[tuple[str, bool], ...]
    conclude: Callable[[], tuple[bool, str]]


def _cases_th1(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    for a in range(lat.size):
        def conclude(a=a):
            rep = comparability_characterization(lat, a)
            if not rep.flag("agreement"):
                return False, f"characterizations disagree: {rep.detail}"
            if rep.flag("element_characterization"):
                sub = is_sublattice(focal_subset(lat, a))
                if not sub.passed:
                    return False, f"characterization holds but not a sublattice: {sub.detail}"
            return True, ""

        yield _Case(f"{tag} focal={lat.label(a)}", (), conclude)


def _cases_th2(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    base_dist = is_distributive(lat).passed
    for a in range(lat.size):
        subset = focal_subset(lat, a)
        sub = is_sublattice(subset).passed

        def conclude(a=a, subset=subset):
            lat2 = subset_lattice(subset)
            pk = is_pseudo_kleene(lat2, swap_involution(subset))
            if not pk.passed:
                return False, f"not pseudo-Kleene: {pk.detail}"
            emb = check_embedding(lat, a)
            if not emb.passed:
                return False, f"embedding fails: {emb.detail}"
            if is_distributive(lat2).passed != base_dist:
                return False, "distributivity does not transfer"
            return True, ""

        yield _Case(f"{tag} focal={lat.label(a)}", (("sublattice", sub),), conclude)


def _cases_th3(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    for a in range(lat.size):
        def conclude(a=a):
            cond = sublattice_criterion(lat, a).passed
            sub = is_sublattice(focal_subset(lat, a)).passed
            if cond != sub:
                return False, f"exchange condition {cond} but sublattice {sub}"
            return True, ""

        yield _Case(f"{tag} focal={lat.label(a)}", (), conclude)


def _cases_th4(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    for m, r in enumerate(enumerate_residuations(lat)):
        for a in range(lat.size):
            crit = adjoint_pair_criterion(r, a)
            flags = tuple((k, v) for k, v in crit.flags if k in _TARGET_FLAGS["th4"])

            def conclude(r=r, a=a, crit=crit):
                subset = focal_subset(lat, a)
                c_prod = closure_check(subset, lambda p, q: twist_product(r, p, q), "⊙").passed
                c_res = closure_check(subset, lambda p, q: twist_residuum(r, p, q), "⇒").passed
                if c_prod != crit.passed:
                    return False, f"⊙-closure {c_prod} but criterion {crit.passed}"
                if c_prod != c_res:
                    return False, f"⊙-closure {c_prod} but ⇒-closure {c_res}"
                return True, ""

            yield _Case(f"{tag} mul#{m} focal={lat.label(a)}", flags, conclude)


def _cases_th5(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    base_dist = is_distributive(lat).passed
    for m, r in enumerate(enumerate_residuations(lat)):
        def conclude(r=r):
            t = build_twist(r, FLAVOR_BC)
            rep = check_residuated(t.algebra)
            if not rep.passed:
                return False, f"twist algebra not residuated: {rep.detail}"
            if t.algebra.unit != pair_index(lat.size, (lat.top, lat.top)):
                return False, "unit is not (1,1)"
            if is_distributive(t.lattice).passed != base_dist:
                return False, "pair lattice distributivity does not match the base"
            return True, ""

        yield _Case(f"{tag} mul#{m}", (), conclude)


def _cases_th6(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    for m, r in enumerate(enumerate_residuations(lat)):
        dnl = satisfies_dnl(r).passed

        def conclude(r=r):
            t = build_twist(r, FLAVOR_DN)
            alg = t.algebra
            rep = check_residuated(alg)
            if not rep.passed:
                return False, f"twist algebra not residuated: {rep.detail}"
            if not is_integral(alg):
                return False, "twist algebra not integral"
            if not satisfies_dnl(alg).passed:
                return False, "twist algebra violates DNL"
            if not check_componentwise_negation(t).passed:
                return False, "p ⇒ (0,1) is not the componentwise involution"
            return True, ""

        yield _Case(f"{tag} mul#{m}", (("dnl", dnl),), conclude)


def _cases_lem1(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    dist = is_distributive(lat).passed
    for m, r in enumerate(enumerate_residuations(lat)):
        for a in range(lat.size):
            def conclude(r=r, a=a):
                cond = distributive_closure_condition(r, a, enforce_hypotheses=False).passed
                cl = closure_check(
                    focal_subset(lat, a), lambda p, q: twist_product(r, p, q), "⊙"
                ).passed
                if cond != cl:
                    return False, f"bound condition {cond} but ⊙-closure {cl}"
                return True, ""

            yield _Case(
                f"{tag} mul#{m} focal={lat.label(a)}", (("distributive", dist),), conclude
            )


def _is_atom(lat: FiniteLattice, a: int) -> bool:
    if a == lat.bottom or not lat.leq[lat.bottom][a]:
        return False
    return not any(lat.lt(lat.bottom, z) and lat.lt(z, a) for z in range(lat.size))


def _cases_cor2(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    dist = is_distributive(lat).passed
    for m, r in enumerate(enumerate_residuations(lat)):
        for a in range(lat.size):
            flags = (("distributive", dist), ("atom", _is_atom(lat, a)))

            def conclude(r=r, a=a):
                cond = atom_closure_condition(r, a, enforce_hypotheses=False).passed
                cl = closure_check(
                    focal_subset(lat, a), lambda p, q: twist_product(r, p, q), "⊙"
                ).passed
                if cond != cl:
                    return False, f"atom condition {cond} but ⊙-closure {cl}"
                return True, ""

            yield _Case(f"{tag} mul#{m} focal={lat.label(a)}", flags, conclude)


def _cases_implem(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    dist = is_distributive(lat).passed
    for m, r in enumerate(enumerate_residuations(lat)):
        for a in range(lat.size):
            flags = (("distributive", dist), ("atom", _is_atom(lat, a)))

            def conclude(r=r, a=a):
                cond = atom_residuum_condition(r, a, enforce_hypotheses=False).passed
                cl = closure_check(
                    focal_subset(lat, a), lambda p, q: twist_residuum(r, p, q), "⇒"
                ).passed
                if cond != cl:
                    return False, f"atom residuum condition {cond} but ⇒-closure {cl}"
                return True, ""

            yield _Case(f"{tag} mul#{m} focal={lat.label(a)}", flags, conclude)


def _cases_dnclosure(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    for m, r in enumerate(enumerate_residuations(lat)):
        for k, inv in enumerate(antitone_involutions(lat)):
            for a in range(lat.size):
                ai = inv(a)
                flags = (
                    ("idempotent", r.mul[a][a] == a),
                    ("join_irreducible", is_join_irreducible(lat, a)),
                    ("meet_irreducible", is_meet_irreducible(lat, a)),
                    ("involution_idempotent", r.mul[ai][ai] == ai),
                    ("comparable_with_all", comparable_with_all(lat, a)),
                )

                def conclude(r=r, inv=inv, a=a):
                    rep = closure_check(
                        focal_subset(lat, a),
                        lambda p, q: twist_product_dn(r, inv, p, q),
                        "⊙",
                    )
                    return rep.passed, rep.detail

                yield _Case(
                    f"{tag} mul#{m} involution#{k} focal={lat.label(a)}", flags, conclude
                )


def _cases_triviality(lat: FiniteLattice, tag: str) -> Iterator[_Case]:
    for m, r in enumerate(enumerate_residuations(lat)):
        for k, inv in enumerate(antitone_involutions(lat)):
            for a in range(lat.size):
                def conclude(r=r, inv=inv, a=a):
                    rep = dn_residuum_triviality_check(r, inv, a)
                    return rep.passed, rep.detail

                yield _Case(
                    f"{tag} mul#{m} involution#{k} focal={lat.label(a)}", (), conclude
                )


_TARGET_CASES = {
    "th1": _cases_th1,
    "th2": _cases_th2,
    "th3": _cases_th3,
    "th4": _cases_th4,
    "th5": _cases_th5,
    "th6": _cases_th6,
    "lem1": _cases_lem1,
    "cor2": _cases_cor2,
    "implem": _cases_implem,
    "dnclosure": _cases_dnclosure,
    "triviality": _cases_triviality,
}


def run_task(task: EnumerationTask) -> TaskReport:
    """Run a verification or falsification sweep over all small models.

    In verify mode, the target law is asserted on every instance whose
    hypothesis flags all hold; the report lists any violations (none are
    expected).  In falsify_without mode, the flags named in ``task.without``
    are not required, and the sweep stops at the first instance where the
    remaining hypotheses hold but the conclusion fails; instances whose
    conclusion cannot even be evaluated without the dropped hypotheses are
    counted as skipped.
    """
    gen = _TARGET_CASES[task.target]
    lattices = 0
    total = 0
    checked = 0
    skipped = 0
    violations: list[str] = []
    for n in range(1, task.max_size + 1):
        for idx, lat in enumerate(enumerate_lattices(n)):
            lattices += 1
            tag = f"size={n} lattice#{idx}"
            for case in gen(lat, tag):
                total += 1
                values = dict(case.flags)
                if task.mode == "verify":
                    if not all(values.values()):
                        continue
                    checked += 1
                    ok, note = case.conclude()
                    if not ok:
                        violations.append(f"{case.description}: {note}")
                else:
                    if not all(v for k, v in case.flags if k not in task.without):
                        continue
                    checked += 1
                    try:
                        ok, note = case.conclude()
                    except (HypothesisViolated, PreconditionViolated):
                        skipped += 1
                        continue
                    if not ok:
                        return TaskReport(
                            task=task,
                            lattices=lattices,
                            cases_total=total,
                            cases_checked=checked,
                            cases_skipped=skipped,
                            violations=(),
                            counterexample=f"{case.description}: {note}",
                        )
    return TaskReport(
        task=task,
        lattices=lattices,
        cases_total=total,
        cases_checked=checked,
        cases_skipped=skipped,
        violations=tuple(violations),
        counterexample=None,
    )

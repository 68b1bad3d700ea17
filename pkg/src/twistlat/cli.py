"""Command-line surface tying the checkers together.

Subcommands: check, twist, pa, render, search.  Exit codes: 0 when every
asserted check passes, 1 when a check fails (the witness is printed), 2 for
usage or validation errors.  Verdicts printed here are the library's
CheckReports verbatim; there is no reinterpretation layer.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algfile import (
    AlgebraDocument,
    document_from_residuated,
    load,
    load_involution,
    parse_document,
    serialize_document,
)
from .core_order import FiniteLattice, Involution, is_distributive
from .dot import render_dot
from .errors import AlgebraError
from .kleene import (
    adjoint_pair_criterion,
    atom_closure_condition,
    atom_residuum_condition,
    closure_check,
    comparability_characterization,
    distributive_closure_condition,
    dn_product_closure_check,
    dn_residuum_triviality_check,
    focal_subset,
    is_kleene,
    is_sublattice,
    sublattice_criterion,
    subset_lattice,
    swap_involution,
)
from .report import CheckReport
from .residuated import (
    ResiduatedStructure,
    check_integral_laws,
    check_mv,
    check_residuated,
    dnl_negation,
    is_integral,
    residuated_to_mv,
    satisfies_dnl,
)
from .search import MAX_ENUM_SIZE, TARGET_DESCRIPTIONS, EnumerationTask, run_task
from .twist import (
    FLAVOR_BC,
    FLAVOR_DN,
    build_twist,
    check_componentwise_negation,
    check_swap_interdefinability,
    pair_label,
    twist_product,
    twist_product_dn,
    twist_residuum,
    twist_residuum_dn,
)

__all__ = ["main"]


class _Usage(Exception):
    """Raised for validation problems that map to exit code 2."""


def _emit(name: str, report: CheckReport) -> bool:
    if report.passed:
        note = f" ({report.detail})" if report.detail else ""
        print(f"{name}: pass{note}")
    else:
        print(f"{name}: fail ({report.detail})")
    return report.passed


def _emit_flags(report: CheckReport) -> None:
    for key, value in report.flags:
        print(f"  {key}: {'yes' if value else 'no'}")


def _load_document(path: str) -> AlgebraDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc}") from exc
    return parse_document(text)


def _need_residuated(obj) -> ResiduatedStructure:
    if not isinstance(obj, ResiduatedStructure):
        raise _Usage("this check needs a residuated structure; the file has no mul table")
    return obj


def _lattice_of(obj) -> FiniteLattice:
    return obj.lattice if isinstance(obj, ResiduatedStructure) else obj


def _involution_for(doc: AlgebraDocument, r: ResiduatedStructure) -> Involution:
    inv = load_involution(doc, r.lattice)
    if inv is not None:
        return inv
    if satisfies_dnl(r).passed:
        return Involution(dnl_negation(r))
    raise _Usage(
        "no antitone involution available: the file carries none and the "
        "double negation law fails"
    )


def _cmd_check(args) -> int:
    doc = _load_document(args.file)
    obj = load(doc)
    lat = _lattice_of(obj)
    checks: list[tuple[str, CheckReport]] = []
    what = args.what
    if what is None:
        if isinstance(obj, ResiduatedStructure):
            checks.append(("def1", check_residuated(obj)))
        checks.append(("distributive", is_distributive(lat)))
    elif what == "def1":
        checks.append(("def1", check_residuated(_need_residuated(obj))))
    elif what == "prop1":
        checks.append(("prop1", check_integral_laws(_need_residuated(obj))))
    elif what == "dnl":
        checks.append(("dnl", satisfies_dnl(_need_residuated(obj))))
    elif what == "mv":
        checks.append(("mv", check_mv(residuated_to_mv(_need_residuated(obj)))))
    elif what == "distributive":
        checks.append(("distributive", is_distributive(lat)))
    ok = True
    for name, report in checks:
        ok &= _emit(name, report)
    return 0 if ok else 1


def _cmd_twist(args) -> int:
    doc = _load_document(args.file)
    r = _need_residuated(load(doc))
    lat = r.lattice
    if args.flavor == FLAVOR_DN and doc.involution is not None:
        twist = build_twist(r, FLAVOR_DN, involution=load_involution(doc, lat))
    else:
        twist = build_twist(r, args.flavor)
    alg = twist.algebra
    ok = _emit("commutative residuated", check_residuated(alg))
    unit_lbl = pair_label(lat, twist.unit_pair)
    top_lbl = alg.lattice.label(alg.lattice.top)
    if args.flavor == FLAVOR_BC:
        if is_integral(alg):
            print("integral: pass")
        else:
            # informational for this flavor: the unit is (1,1) by design
            print(f"integral: fail (unit {unit_lbl} ≠ top {top_lbl})")
        ok &= _emit("swap interdefinability", check_swap_interdefinability(twist))
    else:
        integ = CheckReport(
            is_integral(alg),
            "" if is_integral(alg) else f"unit {unit_lbl} ≠ top {top_lbl}",
        )
        ok &= _emit("integral", integ)
        ok &= _emit("dnl", satisfies_dnl(alg))
        ok &= _emit("componentwise negation", check_componentwise_negation(twist))
    if args.out:
        out_doc = document_from_residuated(f"{doc.name}_twist_{args.flavor}", alg)
        Path(args.out).write_text(serialize_document(out_doc), encoding="utf-8")
        print(f"written: {args.out}")
    return 0 if ok else 1


def _cmd_pa(args) -> int:
    doc = _load_document(args.file)
    obj = load(doc)
    lat = _lattice_of(obj)
    a = lat.index(args.focal)
    subset = focal_subset(lat, a)
    what = args.what
    checks: list[tuple[str, CheckReport]] = []

    if what == "sublattice":
        checks.append(("sublattice", is_sublattice(subset)))
    elif what == "kleene":
        checks.append(("kleene", is_kleene(subset_lattice(subset), swap_involution(subset))))
    elif what == "th1":
        checks.append(("th1", comparability_characterization(lat, a)))
    elif what == "th3":
        checks.append(("th3", sublattice_criterion(lat, a)))
    elif what == "th4":
        r = _need_residuated(obj)
        if not is_integral(r):
            raise _Usage("th4 needs an integral structure (unit = top)")
        checks.append(("th4", adjoint_pair_criterion(r, a)))
    elif what == "lem1":
        checks.append(("lem1", distributive_closure_condition(_need_residuated(obj), a)))
    elif what == "cor2":
        checks.append(("cor2", atom_closure_condition(_need_residuated(obj), a)))
    elif what == "implem":
        checks.append(("implem", atom_residuum_condition(_need_residuated(obj), a)))
    elif what == "closure-bc":
        r = _need_residuated(obj)
        checks.append(
            ("closure ⊙", closure_check(subset, lambda p, q: twist_product(r, p, q), "⊙"))
        )
        checks.append(
            ("closure ⇒", closure_check(subset, lambda p, q: twist_residuum(r, p, q), "⇒"))
        )
    elif what == "closure-dn":
        r = _need_residuated(obj)
        checks.append(("closure-dn", dn_product_closure_check(r, _involution_for(doc, r), a)))
    elif what == "triviality":
        r = _need_residuated(obj)
        checks.append(("triviality", dn_residuum_triviality_check(r, _involution_for(doc, r), a)))

    ok = True
    for name, report in checks:
        ok &= _emit(name, report)
        _emit_flags(report)
    return 0 if ok else 1


def _cmd_render(args) -> int:
    doc = _load_document(args.file)
    obj = load(doc)
    lat = _lattice_of(obj)
    if args.pa is not None:
        subset = focal_subset(lat, lat.index(args.pa))
        lat = subset_lattice(subset)
    sys.stdout.write(render_dot(lat))
    return 0


def _cmd_search(args) -> int:
    without = tuple(f for f in (args.without or "").split(",") if f)
    try:
        task = EnumerationTask(
            max_size=args.max_size,
            target=args.target,
            mode="falsify_without" if without or args.falsify else "verify",
            without=without,
        )
    except ValueError as exc:
        raise _Usage(str(exc)) from exc
    report = run_task(task)
    print(report.summary())
    if task.mode == "verify" and report.violations:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistlat",
        description="Finite ordered-algebra workbench: check, twist, pa, render, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run axiom checkers on an algebra file")
    p_check.add_argument("file")
    p_check.add_argument(
        "--what",
        choices=["def1", "prop1", "dnl", "mv", "distributive"],
        default=None,
        help="which checker to run (default: every applicable one)",
    )
    p_check.set_defaults(func=_cmd_check)

    p_twist = sub.add_parser("twist", help="build and verify a twist algebra")
    p_twist.add_argument("file")
    p_twist.add_argument("--flavor", choices=[FLAVOR_BC, FLAVOR_DN], required=True)
    p_twist.add_argument("--out", default=None, help="serialize the twist algebra to FILE")
    p_twist.set_defaults(func=_cmd_twist)

    p_pa = sub.add_parser("pa", help="checks on the focal subset P_a")
    p_pa.add_argument("file")
    p_pa.add_argument("--focal", required=True, help="focal element label")
    p_pa.add_argument(
        "--what",
        choices=[
            "sublattice",
            "kleene",
            "th1",
            "th3",
            "th4",
            "lem1",
            "cor2",
            "implem",
            "closure-bc",
            "closure-dn",
            "triviality",
        ],
        default="sublattice",
    )
    p_pa.set_defaults(func=_cmd_pa)

    p_render = sub.add_parser("render", help="render a Hasse diagram as DOT")
    p_render.add_argument("file")
    p_render.add_argument("--pa", default=None, help="render P_a for this focal label instead")
    p_render.add_argument("--format", choices=["dot"], default="dot")
    p_render.set_defaults(func=_cmd_render)

    p_search = sub.add_parser("search", help="verify laws over all small lattices")
    p_search.add_argument("--max-size", type=int, required=True, metavar=f"N(≤{MAX_ENUM_SIZE})")
    p_search.add_argument("--target", required=True, choices=sorted(TARGET_DESCRIPTIONS))
    p_search.add_argument(
        "--without",
        default=None,
        help="comma-separated hypothesis flags to drop (switches to counterexample hunting)",
    )
    p_search.add_argument(
        "--falsify",
        action="store_true",
        help="counterexample mode even with no dropped flags",
    )
    p_search.set_defaults(func=_cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

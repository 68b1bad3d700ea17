"""The .alg algebra file format: strict JSON documents for lattices and
residuated structures.

A document is a single JSON object with these keys (unknown keys rejected):

    name        required string
    elements    required ordered list of distinct labels
    order       required object with exactly one of
                  {"covers": [[x, y], ...]}  or  {"leq": [[x, y], ...]}
    mul         optional list of triples [x, y, product]; commutative
                completion is applied, every pair must be covered
    unit        required label iff mul is present
    involution  optional total label map {x: x', ...}
    imp         optional list of triples [x, y, residuum], full coverage;
                always cross-checked against the derived residuum

Presence of ``mul`` switches the loaded type from a bare lattice to a
residuated structure.  A supplied ``imp`` is never trusted: it is compared
entry by entry with the residuum derived from ``mul`` and rejected on any
mismatch, so loaded structures are never internally inconsistent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .core_order import Carrier, FiniteLattice, Involution, check_involution, hasse_covers, validate_lattice
from .errors import (
    DocumentSyntaxError,
    DocumentValidationError,
    ImpMismatch,
)
from .residuated import ResiduatedStructure, derive_residuum

__all__ = [
    "AlgebraDocument",
    "parse_document",
    "serialize_document",
    "load",
    "load_involution",
    "document_from_lattice",
    "document_from_residuated",
    "bundled_path",
    "bundled_document",
    "BUNDLED_NAMES",
]

BUNDLED_NAMES = ("chain4", "l6", "n5", "diamond", "trivial")

_ALLOWED_KEYS = {"name", "elements", "order", "mul", "unit", "involution", "imp"}


@dataclass(frozen=True)
class AlgebraDocument:
    """Parsed .alg document; labels are resolved but tables are verbatim."""

    name: str
    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...] | None
    leq: tuple[tuple[str, str], ...] | None
    mul: tuple[tuple[str, str, str], ...] | None
    unit: str | None
    involution: tuple[tuple[str, str], ...] | None
    imp: tuple[tuple[str, str, str], ...] | None


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise DocumentValidationError(message)


def _label_pairs(value, elements: set[str], key: str) -> tuple[tuple[str, str], ...]:
    _expect(isinstance(value, list), f"{key} must be a list of label pairs")
    out = []
    for entry in value:
        _expect(
            isinstance(entry, list) and len(entry) == 2
            and all(isinstance(s, str) for s in entry),
            f"{key} entries must be two-element label lists, got {entry!r}",
        )
        for s in entry:
            _expect(s in elements, f"{key} references unknown label {s!r}")
        out.append((entry[0], entry[1]))
    return tuple(out)


def _label_triples(value, elements: set[str], key: str) -> tuple[tuple[str, str, str], ...]:
    _expect(isinstance(value, list), f"{key} must be a list of label triples")
    out = []
    for entry in value:
        _expect(
            isinstance(entry, list) and len(entry) == 3
            and all(isinstance(s, str) for s in entry),
            f"{key} entries must be three-element label lists, got {entry!r}",
        )
        for s in entry:
            _expect(s in elements, f"{key} references unknown label {s!r}")
        out.append((entry[0], entry[1], entry[2]))
    return tuple(out)


def parse_document(text: str) -> AlgebraDocument:
    """Parse and schema-check a document; does not validate the algebra."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        ) from exc
    _expect(isinstance(raw, dict), "document must be a JSON object")
    unknown = set(raw) - _ALLOWED_KEYS
    _expect(not unknown, f"unknown document keys: {sorted(unknown)}")
    for key in ("name", "elements", "order"):
        _expect(key in raw, f"missing required key {key!r}")
    _expect(isinstance(raw["name"], str) and raw["name"], "name must be a non-empty string")
    _expect(
        isinstance(raw["elements"], list)
        and raw["elements"]
        and all(isinstance(s, str) and s for s in raw["elements"]),
        "elements must be a non-empty list of non-empty strings",
    )
    elements = tuple(raw["elements"])
    _expect(len(set(elements)) == len(elements), "elements must be pairwise distinct")
    universe = set(elements)

    order = raw["order"]
    _expect(isinstance(order, dict), "order must be an object")
    _expect(
        set(order) in ({"covers"}, {"leq"}),
        "order must contain exactly one of 'covers' or 'leq'",
    )
    covers = leq = None
    if "covers" in order:
        covers = _label_pairs(order["covers"], universe, "order.covers")
    else:
        leq = _label_pairs(order["leq"], universe, "order.leq")

    mul = unit = involution = imp = None
    if "mul" in raw:
        mul = _label_triples(raw["mul"], universe, "mul")
        _expect("unit" in raw, "mul requires unit")
        _expect(isinstance(raw["unit"], str), "unit must be a label")
        _expect(raw["unit"] in universe, f"unit references unknown label {raw['unit']!r}")
        unit = raw["unit"]
    else:
        _expect("unit" not in raw, "unit without mul")
        _expect("imp" not in raw, "imp without mul")
    if "involution" in raw:
        inv = raw["involution"]
        _expect(isinstance(inv, dict), "involution must be a label map")
        for k, v in inv.items():
            _expect(isinstance(k, str) and isinstance(v, str), "involution entries must be labels")
            _expect(k in universe, f"involution references unknown label {k!r}")
            _expect(v in universe, f"involution references unknown label {v!r}")
        _expect(set(inv) == universe, "involution must be total on the elements")
        involution = tuple((k, inv[k]) for k in elements)
    if "imp" in raw:
        imp = _label_triples(raw["imp"], universe, "imp")

    return AlgebraDocument(
        name=raw["name"],
        elements=elements,
        covers=covers,
        leq=leq,
        mul=mul,
        unit=unit,
        involution=involution,
        imp=imp,
    )


def serialize_document(doc: AlgebraDocument) -> str:
    """Canonical JSON text for a document; parse ∘ serialize is the identity."""
    raw: dict = {"name": doc.name, "elements": list(doc.elements)}
    if doc.covers is not None:
        raw["order"] = {"covers": [list(p) for p in doc.covers]}
    else:
        raw["order"] = {"leq": [list(p) for p in doc.leq]}
    if doc.mul is not None:
        raw["mul"] = [list(t) for t in doc.mul]
        raw["unit"] = doc.unit
    if doc.involution is not None:
        raw["involution"] = {k: v for k, v in doc.involution}
    if doc.imp is not None:
        raw["imp"] = [list(t) for t in doc.imp]
    return json.dumps(raw, indent=2, ensure_ascii=False) + "\n"


def _triples_to_table(
    doc_triples, carrier: Carrier, key: str, symmetric: bool
) -> tuple[tuple[int, ...], ...]:
    n = carrier.size
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    for xl, yl, vl in doc_triples:
        x, y, v = carrier.index(xl), carrier.index(yl), carrier.index(vl)
        if table[x][y] is not None and table[x][y] != v:
            raise DocumentValidationError(
                f"{key} assigns conflicting values at ({xl}, {yl})"
            )
        table[x][y] = v
        if symmetric:
            if table[y][x] is not None and table[y][x] != v:
                raise DocumentValidationError(
                    f"{key} assigns conflicting values at ({yl}, {xl})"
                )
            table[y][x] = v
    for x in range(n):
        for y in range(n):
            if table[x][y] is None:
                raise DocumentValidationError(
                    f"{key} is missing the entry for "
                    f"({carrier.label(x)}, {carrier.label(y)})"
                )
    return tuple(tuple(row) for row in table)  # type: ignore[arg-type]


def load(doc: AlgebraDocument) -> FiniteLattice | ResiduatedStructure:
    """Validate a document into a lattice or residuated structure.

    Lattice validation errors propagate (NotAPoset, NotALattice, ...).  When
    ``mul`` is present the residuum is derived from scratch; a supplied
    ``imp`` must match it exactly or ImpMismatch is raised.
    """
    carrier = Carrier(doc.elements)
    if doc.covers is not None:
        lat = validate_lattice(carrier, doc.covers, covers=True)
    else:
        lat = validate_lattice(carrier, doc.leq, covers=False)
    if doc.mul is None:
        return lat
    mul = _triples_to_table(doc.mul, carrier, "mul", symmetric=True)
    unit = carrier.index(doc.unit)
    imp = derive_residuum(lat, mul, unit)
    if doc.imp is not None:
        given = _triples_to_table(doc.imp, carrier, "imp", symmetric=False)
        for y in range(lat.size):
            for z in range(lat.size):
                if given[y][z] != imp[y][z]:
                    raise ImpMismatch(
                        f"imp disagrees with the derived residuum at "
                        f"({lat.label(y)}, {lat.label(z)}): document has "
                        f"{lat.label(given[y][z])}, derived {lat.label(imp[y][z])}",
                        witness=(lat.label(y), lat.label(z)),
                    )
    return ResiduatedStructure(lattice=lat, mul=mul, imp=imp, unit=unit)


def load_involution(doc: AlgebraDocument, lat: FiniteLattice) -> Involution | None:
    """Validate the document's involution against a loaded lattice, if any."""
    if doc.involution is None:
        return None
    table = [0] * lat.size
    for k, v in doc.involution:
        table[lat.index(k)] = lat.index(v)
    inv = Involution(tuple(table))
    rep = check_involution(lat, inv)
    if not rep.passed:
        raise DocumentValidationError(f"involution is not antitone/self-inverse: {rep.detail}")
    return inv


def document_from_lattice(
    name: str,
    lat: FiniteLattice,
    involution: Involution | None = None,
) -> AlgebraDocument:
    """Serialize a lattice (plus optional involution) as a covers document."""
    covers = tuple((lat.label(x), lat.label(y)) for x, y in hasse_covers(lat))
    inv = None
    if involution is not None:
        inv = tuple((lat.label(x), lat.label(involution(x))) for x in range(lat.size))
    return AlgebraDocument(
        name=name,
        elements=lat.carrier.names,
        covers=covers,
        leq=None,
        mul=None,
        unit=None,
        involution=inv,
        imp=None,
    )


def document_from_residuated(
    name: str,
    r: ResiduatedStructure,
    involution: Involution | None = None,
) -> AlgebraDocument:
    """Serialize a residuated structure; the residuum is left to derivation."""
    lat = r.lattice
    base = document_from_lattice(name, lat, involution)
    mul = tuple(
        (lat.label(x), lat.label(y), lat.label(r.mul[x][y]))
        for x in range(lat.size)
        for y in range(x, lat.size)
    )
    return AlgebraDocument(
        name=base.name,
        elements=base.elements,
        covers=base.covers,
        leq=None,
        mul=mul,
        unit=lat.label(r.unit),
        involution=base.involution,
        imp=None,
    )


def bundled_path(name: str):
    """Filesystem path of a bundled corpus file such as ``chain4``."""
    if name not in BUNDLED_NAMES:
        raise DocumentValidationError(
            f"no bundled algebra {name!r}; available: {', '.join(BUNDLED_NAMES)}"
        )
    return resources.files("twistlat.data").joinpath(f"{name}.alg")


def bundled_document(name: str) -> AlgebraDocument:
    """Parse a bundled corpus file by short name."""
    return parse_document(bundled_path(name).read_text(encoding="utf-8"))

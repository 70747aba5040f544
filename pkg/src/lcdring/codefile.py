"""The on-disk code format.

A ring code is a JSON document:

    {
      "kind": "ring",                       // optional, default "ring"
      "field": {"p": 5, "e": 1, "modulus": [0, 1]},   // modulus optional
      "n": 2,
      "basis": "gamma",                     // or "u"; default "gamma"
      "components": [rows, rows, rows, rows]
      // or instead:
      "generators": [[[r1,r2,r3,r4], ...n entries], ...]
    }

Exactly one of "components"/"generators" must be present.  All field
elements are canonical integer encodings.  "basis" applies to the
generators representation: with "u" every 4-tuple is read as coefficients
of (1, u, v, uv) and converted on load; components are always the four
idempotent-slot codes, so they require the "gamma" basis.

The expanded image of a ring code is written as a field code:

    {"kind": "field", "field": {...}, "n": 8, "rows": [[...], ...]}
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .fqcode import FqCode
from .gf import GF
from .rcode import RCode
from .ring import RingElement

FORMAT_VERSION = 1


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParseError(msg)


def _load_field(doc: dict[str, Any]) -> GF:
    spec = doc.get("field")
    _require(isinstance(spec, dict), "missing or malformed 'field' object")
    _require("p" in spec, "'field' needs a prime 'p'")
    p = spec["p"]
    e = spec.get("e", 1)
    modulus = spec.get("modulus")
    _require(isinstance(p, int) and isinstance(e, int), "'p' and 'e' must be integers")
    return GF(p, e, modulus)


def _check_int_rows(field: GF, rows: Any, n: int, what: str) -> list[list[int]]:
    _require(isinstance(rows, list), f"{what} must be a list of rows")
    out = []
    for r, row in enumerate(rows):
        _require(isinstance(row, list), f"{what} row {r} is not a list")
        _require(len(row) == n, f"{what} row {r} has width {len(row)}, expected {n}")
        for v in row:
            _require(isinstance(v, int) and 0 <= v < field.q,
                     f"{what} row {r} entry {v!r} is not an encoding in [0, {field.q})")
        out.append(list(row))
    return out


def parse_code(text: str) -> RCode:
    """Parse and validate a ring-code document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "top level must be an object")
    kind = doc.get("kind", "ring")
    _require(kind == "ring", f"expected a ring-code document, got kind={kind!r}")
    field = _load_field(doc)
    n = doc.get("n")
    _require(isinstance(n, int) and n >= 1, "'n' must be a positive integer")
    basis = doc.get("basis", "gamma")
    _require(basis in ("gamma", "u"), f"unknown basis {basis!r}")
    has_comp = "components" in doc
    has_gen = "generators" in doc
    _require(has_comp != has_gen,
             "exactly one of 'components' and 'generators' must be present")
    if has_comp:
        _require(basis == "gamma", "component matrices are only meaningful in the gamma basis")
        comps = doc["components"]
        _require(isinstance(comps, list) and len(comps) == 4,
                 "'components' must list exactly four generator matrices")
        parts = [
            FqCode.from_rows(field, n, _check_int_rows(field, comp, n, f"component {i + 1}"))
            for i, comp in enumerate(comps)
        ]
        return RCode.from_components(parts)
    gens = doc["generators"]
    _require(isinstance(gens, list), "'generators' must be a list of rows")
    rows = []
    for r, row in enumerate(gens):
        _require(isinstance(row, list) and len(row) == n,
                 f"generator row {r} must list {n} ring elements")
        entries = []
        for j, quad in enumerate(row):
            _require(isinstance(quad, list) and len(quad) == 4,
                     f"generator row {r} entry {j} must be a 4-list")
            for v in quad:
                _require(isinstance(v, int) and 0 <= v < field.q,
                         f"generator row {r} entry {j} holds {v!r}, not an encoding")
            if basis == "u":
                entries.append(RingElement.from_u(field, quad))
            else:
                entries.append(RingElement(field, tuple(quad)))
        rows.append(entries)
    return RCode.from_generators(field, n, rows)


def code_document(
    code: RCode, representation: str = "components", basis: str = "gamma"
) -> dict[str, Any]:
    """Serialize a ring code back into the document shape."""
    if representation not in ("components", "generators"):
        raise ValueError(f"unknown representation {representation!r}")
    if basis not in ("gamma", "u"):
        raise ValueError(f"unknown basis {basis!r}")
    doc: dict[str, Any] = {
        "kind": "ring",
        "field": {"p": code.field.p, "e": code.field.e, "modulus": list(code.field.modulus)},
        "n": code.n,
        "basis": basis,
    }
    if representation == "components":
        if basis != "gamma":
            raise ValueError("component matrices are only meaningful in the gamma basis")
        doc["components"] = [c.gen.to_rows() for c in code.comps]
    else:
        rows = []
        for row in code.generator_rows():
            if basis == "u":
                rows.append([list(x.to_u()) for x in row])
            else:
                rows.append([list(x.g) for x in row])
        doc["generators"] = rows
    return doc


def field_code_document(code: FqCode) -> dict[str, Any]:
    return {
        "kind": "field",
        "field": {"p": code.field.p, "e": code.field.e, "modulus": list(code.field.modulus)},
        "n": code.n,
        "rows": code.gen.to_rows(),
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"

"""Reading and writing invariant tables as JSON (schema version 1).

Rationals are written as ``"p/q"`` strings, integers as bare JSON integers.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from gvlocal.transform import CapExceededError, DegreeFunctional, InvariantTable

__all__ = ["InvariantFileError", "dumps_table", "loads_table", "read_table", "write_table"]

SCHEMA_VERSION = 1
_RATIONAL = re.compile(r"\s*-?\d+(\s*/\s*\d+)?\s*")


class InvariantFileError(ValueError):
    pass


def format_rational(v: Fraction):
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_rational(raw, where: str) -> Fraction:
    if isinstance(raw, bool):
        raise InvariantFileError(f"{where}: boolean is not a rational")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str) and _RATIONAL.fullmatch(raw):
        try:
            return Fraction(raw.replace(" ", ""))
        except ZeroDivisionError:
            raise InvariantFileError(f"{where}: zero denominator in {raw!r}") from None
    raise InvariantFileError(f"{where}: value {raw!r} is not an integer or a 'p/q' string")


def _int_field(doc: dict, name: str, minimum: int = 0) -> int:
    if name not in doc:
        raise InvariantFileError(f"missing field {name!r}")
    v = doc[name]
    if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
        raise InvariantFileError(f"field {name!r} must be an integer >= {minimum}, got {v!r}")
    return v


def table_to_dict(table: InvariantTable) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": table.kind,
        "lattice_rank": table.rank,
        "degree_functional": list(table.functional.weights),
        "degree_cap": table.degree_cap,
        "genus_cap": table.genus_cap,
        "entries": [
            {"class": list(beta), "genus": g, "value": format_rational(v)}
            for beta, g, v in table.sorted_items()
        ],
    }


def table_from_dict(doc) -> InvariantTable:
    if not isinstance(doc, dict):
        raise InvariantFileError("top level must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise InvariantFileError(f"unsupported schema_version {doc.get('schema_version')!r}")
    kind = doc.get("kind")
    if kind not in ("gv", "gw"):
        raise InvariantFileError(f"kind must be 'gv' or 'gw', got {kind!r}")
    rank = _int_field(doc, "lattice_rank", 1)
    weights = doc.get("degree_functional")
    if (not isinstance(weights, list) or len(weights) != rank
            or not all(isinstance(w, int) and not isinstance(w, bool) and w > 0 for w in weights)):
        raise InvariantFileError(f"degree_functional must be {rank} positive integers, got {weights!r}")
    table = InvariantTable(kind, DegreeFunctional(tuple(weights)),
                           _int_field(doc, "degree_cap"), _int_field(doc, "genus_cap"))
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise InvariantFileError("entries must be a list")
    seen = set()
    for idx, entry in enumerate(entries):
        where = f"entries[{idx}]"
        if not isinstance(entry, dict):
            raise InvariantFileError(f"{where}: expected an object")
        beta = entry.get("class")
        if (not isinstance(beta, list) or len(beta) != rank
                or not all(isinstance(b, int) and not isinstance(b, bool) for b in beta)):
            raise InvariantFileError(f"{where}: class must be a list of {rank} integers, got {beta!r}")
        g = entry.get("genus")
        if isinstance(g, bool) or not isinstance(g, int):
            raise InvariantFileError(f"{where}: genus must be an integer, got {g!r}")
        key = (tuple(beta), g)
        if key in seen:
            raise InvariantFileError(f"{where}: duplicate entry for class {beta} genus {g}")
        seen.add(key)
        value = parse_rational(entry.get("value"), where)
        try:
            table.set(beta, g, value)
        except CapExceededError as exc:
            raise InvariantFileError(f"{where}: {exc}") from None
        except ValueError as exc:
            raise InvariantFileError(f"{where}: {exc}") from None
    return table


def dumps_table(table: InvariantTable) -> str:
    return json.dumps(table_to_dict(table), indent=2) + "\n"


def loads_table(text: str, source: str = "<string>") -> InvariantTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvariantFileError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return table_from_dict(doc)
    except InvariantFileError as exc:
        raise InvariantFileError(f"{source}: {exc}") from None


def read_table(path) -> InvariantTable:
    path = Path(path)
    return loads_table(path.read_text(encoding="utf-8"), str(path))


def write_table(table: InvariantTable, path) -> None:
    Path(path).write_text(dumps_table(table), encoding="utf-8")

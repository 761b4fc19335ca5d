"""Plain-text documents for friezes, frieze collections and successor graphs.

Documents are JSON written in one canonical layout: keys sorted, two-space
indentation, every band row on a single line, entries as decimal strings
("12") or rational strings ("-3/4").  ``serialize(parse_document(t)) == t``
holds for every canonical text ``t``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .arith import as_rational
from .errors import FriezeError, ParseError
from .frieze import PERIODIC, WINDOW, FriezePattern, from_band_rows
from .wild import GammaSubgraph, GammaVertex


def _entry(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _dump(obj: Any, indent: int = 0) -> str:
    """Canonical JSON: sorted keys, lists of scalars on one line."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_dump(obj[k], indent + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return "[" + ", ".join(json.dumps(x) for x in obj) + "]"
        items = [inner + _dump(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def dumps(obj: Any) -> str:
    return _dump(obj) + "\n"


def frieze_to_obj(f: FriezePattern) -> dict:
    if f.mode == PERIODIC:
        vertical = {"mode": PERIODIC, "period": len(f.rows)}
    else:
        vertical = {"mode": WINDOW, "first_row_index": f.first_index}
    obj = {"k": f.k, "n": f.n, "rows": [[_entry(x) for x in r] for r in f.rows],
           "vertical": vertical}
    if f.name is not None:
        obj["name"] = f.name
    if f.source is not None:
        obj["source"] = f.source
    return obj


def serialize(f: FriezePattern) -> str:
    return dumps(frieze_to_obj(f))


def serialize_collection(friezes) -> str:
    return dumps({"friezes": [frieze_to_obj(f) for f in friezes]})


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None


def _row_position(text: str, row_index: int, start: int = 0):
    """(line, column) of the row-th single-line row after ``start`` in a
    canonical text, or (None, None)."""
    at = text.find('"rows"', start)
    if at < 0:
        return None, None
    line = text.count("\n", 0, at) + 1
    lines = text.splitlines()
    seen = -1
    for ln in range(line, len(lines)):
        stripped = lines[ln].lstrip()
        if stripped.startswith("["):
            seen += 1
            if seen == row_index:
                return ln + 1, len(lines[ln]) - len(stripped) + 1
        elif stripped.startswith("]"):
            break
    return None, None


def _require(obj, key, kind, text, where=0):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {key!r}", *_key_position(text, None, where))
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise ParseError(f"field {key!r} has the wrong type", *_key_position(text, key, where))
    return val


def _key_position(text, key, start=0):
    if key is None:
        return None, None
    at = text.find(json.dumps(key), start)
    if at < 0:
        return None, None
    line = text.count("\n", 0, at) + 1
    col = at - (text.rfind("\n", 0, at) + 1) + 1
    return line, col


def obj_to_frieze(obj: dict, text: str = "", start: int = 0) -> FriezePattern:
    k = _require(obj, "k", int, text, start)
    n = _require(obj, "n", int, text, start)
    rows = _require(obj, "rows", list, text, start)
    vertical = _require(obj, "vertical", dict, text, start)
    parsed = []
    for idx, r in enumerate(rows):
        if not isinstance(r, list) or len(r) != n:
            raise ParseError(f"band row {idx} should be a list of {n} entries",
                             *_row_position(text, idx, start))
        try:
            parsed.append(tuple(as_rational(x) for x in r))
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise ParseError(f"band row {idx}: {e}", *_row_position(text, idx, start)) from None
    mode = vertical.get("mode")
    if mode == PERIODIC:
        period = _require(vertical, "period", int, text, start)
        if period != len(parsed):
            raise ParseError(f"period {period} but {len(parsed)} rows stored",
                             *_key_position(text, "period", start))
        first = 1
    elif mode == WINDOW:
        first = _require(vertical, "first_row_index", int, text, start)
    else:
        raise ParseError(f"unknown vertical mode {mode!r}", *_key_position(text, "mode", start))
    name = obj.get("name")
    source = obj.get("source")
    try:
        return from_band_rows(k, n, parsed, mode, first, name, source)
    except FriezeError as e:
        raise ParseError(str(e), *_key_position(text, "k", start)) from None


def parse_document(text: str) -> FriezePattern:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise ParseError("a frieze document is a JSON object", 1, 1)
    return obj_to_frieze(obj, text)


def parse_collection(text: str) -> list[FriezePattern]:
    obj = _loads(text)
    items = _require(obj, "friezes", list, text)
    out = []
    pos = 0
    for item in items:
        out.append(obj_to_frieze(item, text, pos))
        nxt = text.find('"rows"', pos)
        pos = nxt + 1 if nxt >= 0 else pos
    return out


def parse_any(text: str) -> list[FriezePattern]:
    """A single frieze or a collection, always returned as a list."""
    obj = _loads(text)
    if isinstance(obj, dict) and "friezes" in obj:
        return parse_collection(text)
    return [parse_document(text)]


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

def graph_to_obj(g: GammaSubgraph) -> dict:
    v0 = next(iter(sorted(g.vertices)), None)
    return {
        "bound": g.bound,
        "k": v0.k if v0 else None,
        "n": v0.n if v0 else None,
        "adjacency": g.adjacency(),
        "frontier": sorted(v.key() for v in g.frontier),
        "exhausted": g.exhausted,
    }


def serialize_graph(g: GammaSubgraph) -> str:
    return dumps(graph_to_obj(g))


def parse_graph(text: str) -> GammaSubgraph:
    obj = _loads(text)
    bound = _require(obj, "bound", int, text)
    adj = _require(obj, "adjacency", dict, text)
    try:
        verts = {GammaVertex.from_key(key) for key in adj}
        edges = {(GammaVertex.from_key(a), GammaVertex.from_key(b))
                 for a, succ in adj.items() for b in succ}
        frontier = {GammaVertex.from_key(key) for key in obj.get("frontier", [])}
    except (ValueError, FriezeError) as e:
        raise ParseError(f"bad vertex key: {e}", *_key_position(text, "adjacency")) from None
    if any(b not in verts for _, b in edges):
        raise ParseError("edge target missing from the adjacency keys",
                         *_key_position(text, "adjacency"))
    return GammaSubgraph(bound, verts, edges, frontier, bool(obj.get("exhausted", False)))

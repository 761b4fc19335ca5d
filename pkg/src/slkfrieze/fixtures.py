"""Built-in friezes, read off the printed blocks in :mod:`slkfrieze.printed`."""
from __future__ import annotations

from functools import lru_cache

from . import printed
from .frieze import FriezePattern, parse_printed, periodic, window_pattern


def tokenize(block: str) -> list[list]:
    out = []
    for line in block.strip().splitlines():
        out.append([int(x) if x.lstrip("-").isdigit() else x for x in line.split()])
    return out


def _periodic_fixture(block, k, n, period, name, source):
    rows, _ = parse_printed(k, n, tokenize(block))
    for i, r in enumerate(rows):
        if r != rows[i % period]:
            raise AssertionError(f"{name}: printed rows do not repeat with period {period}")
    return periodic(k, n, rows[:period], name=name, source=source)


@lru_cache(maxsize=None)
def period9_example() -> FriezePattern:
    return _periodic_fixture(printed.PERIOD9, 3, 5, 9, "period9", "doubly 9-periodic SL_3 array")


@lru_cache(maxsize=None)
def tame_example() -> FriezePattern:
    return _periodic_fixture(printed.TAME_GENERIC, 3, 4, 2, "tame",
                             "tame integral positive SL_3 example")


@lru_cache(maxsize=None)
def nongeneric_example() -> FriezePattern:
    return _periodic_fixture(printed.TAME_NOT_GENERIC, 3, 3, 7, "nongeneric",
                             "tame, not generic, integral SL_3 example")


@lru_cache(maxsize=None)
def wild_example() -> FriezePattern:
    return _periodic_fixture(printed.WILD_PERIODIC, 3, 4, 2, "wild",
                             "wild periodic integral positive SL_3 example")


@lru_cache(maxsize=None)
def conway_coxeter() -> FriezePattern:
    return periodic(2, 1, [(1,), (2,), (1,), (2,)], name="cc_height1",
                    source="height-1 Conway-Coxeter frieze")


@lru_cache(maxsize=None)
def pieces() -> tuple[FriezePattern, ...]:
    """A_1 .. A_12 as two-row windows (k=3, n=5)."""
    out = []
    for idx, block in enumerate(printed.PIECES, start=1):
        rows, _ = parse_printed(3, 5, tokenize(block))
        out.append(window_pattern(3, 5, rows, 1, name=f"A{idx}",
                                  source="vertex of the successor graph"))
    return tuple(out)


@lru_cache(maxsize=None)
def printed_segment(which: int) -> FriezePattern:
    block = {0: printed.SEGMENT_0, 1: printed.SEGMENT_1}[which]
    rows, _ = parse_printed(3, 8, tokenize(block))
    return window_pattern(3, 8, rows, 12 * which + 1, name=f"Q{which}",
                          source="segment of the unbounded frieze")


def printed_view(f: FriezePattern, block: str, first_row: int | None = None) -> list[list]:
    """Render ``f`` in the shape and phase of a printed block, for comparison."""
    cells = tokenize(block)
    k, n = f.k, f.n
    _, phase = parse_printed(k, n, cells)
    first = f.first_index if first_row is None else first_row
    out = []
    for r, line in enumerate(cells):
        i = first + r
        out.append([f.entry(i, c - phase + i - 1 - r) for c in range(len(line))])
    return out


BUILTINS = {
    "period9": period9_example,
    "tame": tame_example,
    "nongeneric": nongeneric_example,
    "wild": wild_example,
    "cc_height1": conway_coxeter,
    "Q0": lambda: printed_segment(0),
    "Q1": lambda: printed_segment(1),
}


def builtin(name: str):
    if name == "A12":
        return pieces()
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; known: {sorted(BUILTINS) + ['A12']}")


def fixture_documents() -> dict:
    """File name -> canonical document text for every shipped fixture."""
    from .io import serialize, serialize_collection
    docs = {f"{name}.frieze": serialize(build()) for name, build in BUILTINS.items()}
    docs["A_pieces.frieze"] = serialize_collection(pieces())
    return docs

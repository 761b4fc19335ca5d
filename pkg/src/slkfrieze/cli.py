"""Command-line entry point.

Exit codes: 0 the checked property holds, 1 it fails (a witness is
printed), 2 usage or parse error, 3 a budget or limit ran out.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import fixtures, io
from .classify import classify, dual, locate_dual_offset, verify_slk
from .enumerate import CONVENTIONS, enumerate_tame_positive
from .errors import BudgetExhausted, FriezeError, NonIntegralValue, ParseError, WildInput
from .frieze import PERIODIC, FriezePattern, same_array, window_pattern
from .wild import (FREE, INCONSISTENT, GammaVertex, IntegerRange, analyze, build_subgraph,
                   continue_row, cycle_word, fibonacci_word, has_period_at_most,
                   prune_dead_ends, two_cycles_through, walk_frieze)
from .xi import extract_xi, reconstruct

OK, FAILS, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _out(args, lines, obj):
    if args.json:
        sys.stdout.write(io.dumps(obj))
    else:
        for line in lines:
            print(line)


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def load_friezes(spec: str) -> list[FriezePattern]:
    """A file path or ``builtin:NAME``."""
    if spec.startswith("builtin:"):
        try:
            got = fixtures.builtin(spec.split(":", 1)[1])
        except KeyError as e:
            raise UsageError(str(e.args[0]))
        return list(got) if isinstance(got, tuple) else [got]
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {spec}: {e.strerror}")
    return io.parse_any(text)


def load_one(spec: str) -> FriezePattern:
    fs = load_friezes(spec)
    if len(fs) != 1:
        raise UsageError(f"{spec} holds {len(fs)} friezes, expected one")
    return fs[0]


def _rows_str(rows):
    return [" ".join(io._entry(x) for x in r) for r in rows]


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    f = load_one(args.file)
    rep = verify_slk(f)
    lines = [f"windows checked: {rep.windows_checked}",
             "SL_%d condition holds" % f.k if rep.ok else "SL_%d condition FAILS" % f.k]
    lines += [f"  det at ({w.i},{w.j}) = {w.value}" for w in rep.failures[:5]]
    _out(args, lines, {"holds": rep.ok, "windows_checked": rep.windows_checked,
                       "failures": [w.as_dict() for w in rep.failures]})
    return OK if rep.ok else FAILS


def cmd_classify(args) -> int:
    f = load_one(args.file)
    rep = classify(f, args.period_bound)
    d = rep.as_dict()
    lines = [f"{key}: {d[key]}" for key in ("is_slk", "integral", "nonzero", "positive",
                                          "period", "generic", "tame", "wild")]
    lines += [f"  witness {w.prop} at ({w.i},{w.j}) size {w.size}: {w.value}"
              for w in rep.witnesses]
    _out(args, lines, d)
    return OK if rep.is_slk else FAILS


def cmd_xi(args) -> int:
    f = load_one(args.file)
    try:
        s = extract_xi(f)
    except WildInput as e:
        _out(args, [f"not tame: {e}"], {"tame": False, "reason": str(e)})
        return FAILS
    prod = s.product()
    lines = [f"B_{j}: ({', '.join(str(c) for c in t)})" for j, t in enumerate(s.tuples, start=1)]
    lines.append("product: " + "; ".join(" ".join(str(x) for x in r) for r in prod.row_lists()))
    obj = {"tame": True, "tuples": [[str(c) for c in t] for t in s.tuples],
           "product": [[str(x) for x in r] for r in prod.row_lists()]}
    code = OK
    if args.reconstruct:
        same = same_array(reconstruct(s), f)
        lines.append("reconstruction matches" if same else "reconstruction DIFFERS")
        obj["reconstruction_matches"] = same
        code = OK if same else FAILS
    _out(args, lines, obj)
    return code


def cmd_dual(args) -> int:
    f = load_one(args.file)
    g = dual(f)
    offset = locate_dual_offset(f) if f.mode == PERIODIC else None
    lines = ["dual band rows:"] + ["  " + r for r in _rows_str(g.rows)]
    lines.append(f"transposed-translate offset (s, t): {offset}")
    if args.out:
        _write(args.out, io.serialize(g))
    _out(args, lines, {"dual": io.frieze_to_obj(g),
                       "offset": list(offset) if offset else None})
    return OK if offset is not None else FAILS


def cmd_extend(args) -> int:
    f = load_one(args.file)
    k = f.k
    rows = [f.band(i) for i in f.row_indices()]
    constraint = IntegerRange(0, args.bound)
    steps = []
    code = OK
    for step in range(args.steps):
        res = continue_row(rows[-(k - 1):], constraint, k=k)
        if res.kind == INCONSISTENT or not res.rows:
            steps.append({"step": step + 1, "kind": res.kind, "position": res.position,
                          "reason": res.reason})
            code = FAILS
            break
        entry = {"step": step + 1, "kind": res.kind,
                 "row": [io._entry(x) for x in res.rows[0]]}
        if res.kind == FREE:
            entry["free_positions"] = res.free_positions
            if args.all:
                entry["solutions"] = [[io._entry(x) for x in r] for r in res.rows]
        steps.append(entry)
        rows.append(res.rows[0])
    lines = []
    for e in steps:
        if "row" in e:
            lines.append(f"step {e['step']}: {e['kind']} -> {' '.join(e['row'])}")
            for sol in e.get("solutions", [])[1:]:
                lines.append(f"    also {' '.join(sol)}")
        else:
            lines.append(f"step {e['step']}: {e['kind']} at position {e['position']}"
                         f" ({e['reason']})")
    ext = window_pattern(k, f.n, rows, f.first_index, name=f.name)
    if args.out:
        _write(args.out, io.serialize(ext))
    _out(args, lines, {"steps": steps, "complete": code == OK})
    return code


def _seed_vertices(spec, k_hint=None) -> list[GammaVertex]:
    seeds = []
    for f in load_friezes(spec):
        rows = [f.band(i) for i in f.row_indices()]
        m = f.k - 1
        if f.mode == PERIODIC:
            rows = rows + rows[:m - 1]
        for t in range(len(rows) - m + 1):
            seeds.append(GammaVertex.of(rows[t:t + m]))
    return sorted(set(seeds))


def cmd_graph(args) -> int:
    seeds = _seed_vertices(args.seed)
    restrict = set(seeds) if args.restrict else None
    g = build_subgraph(seeds, args.bound, args.max_vertices, args.max_depth,
                       restrict, args.workers)
    if args.prune:
        g = prune_dead_ends(g)
    obj = {"vertices": len(g.vertices), "edges": len(g.edges), "exhausted": g.exhausted}
    lines = [f"vertices: {len(g.vertices)}", f"edges: {len(g.edges)}",
             f"limits hit: {g.exhausted}"]
    if args.analyze:
        an = analyze(g, args.cycle_cap)
        obj["cycles"] = [[v.key() for v in c] for c in an.cycles]
        obj["longest_path"] = [v.key() for v in an.longest_path]
        obj["longest_path_exact"] = an.longest_path_exact
        lines.append(f"cycles (length <= {args.cycle_cap}): {len(an.cycles)}")
        for c in an.cycles:
            lines.append("  " + " -> ".join(v.key() for v in c))
        lines.append(f"longest simple path: {len(an.longest_path)} vertices"
                     + ("" if an.longest_path_exact else " (search budget hit)"))
    if args.out:
        _write(args.out, io.serialize_graph(g))
    _out(args, lines, obj)
    return BUDGET if g.exhausted else OK


def _parse_word(g, spec: str) -> list[GammaVertex]:
    kind, _, rest = spec.partition(":")
    if kind == "keys":
        return [GammaVertex.from_key(key) for key in rest.split(";") if key]
    cycles = analyze(g, 12, path_budget=1).cycles
    if kind == "cycle":
        idx, _, reps = rest.partition(":")
        c = cycles[int(idx)]
        return cycle_word([c], [0] * int(reps or 1))
    if kind == "fib":
        pair = two_cycles_through(cycles)
        if pair is None:
            raise UsageError("the graph has no two cycles through a common vertex")
        length = int(rest)
        v0 = pair[0][0]
        letters = 1
        while True:
            walk = cycle_word(pair, fibonacci_word(letters))
            if len(walk) + v0.k - 2 >= length:
                return walk[:length - (v0.k - 2)]
            letters *= 2
    raise UsageError(f"unknown walk spec {spec!r}; use keys:..., cycle:I:REPS or fib:ROWS")


def cmd_walk(args) -> int:
    try:
        with open(args.graph, encoding="utf-8") as fh:
            g = io.parse_graph(fh.read())
    except OSError as e:
        raise UsageError(f"cannot read {args.graph}: {e.strerror}")
    try:
        word = _parse_word(g, args.word)
    except ValueError as e:
        raise UsageError(f"bad walk spec: {e}")
    f = walk_frieze(g, word)
    rep = verify_slk(f)
    period = has_period_at_most(f, args.period_bound)
    if args.out:
        _write(args.out, io.serialize(f))
    lines = [f"rows: {len(f.rows)}", f"SL_{f.k} holds: {rep.ok}",
             f"vertical period <= {args.period_bound}: {period}"]
    _out(args, lines, {"rows": len(f.rows), "holds": rep.ok, "period": period,
                       "period_bound": args.period_bound})
    return OK if rep.ok else FAILS


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"range must look like LO..HI, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like LO..HI, got {text!r}")


def cmd_unbounded(args) -> int:
    from . import unbounded
    lo, hi = _parse_range(args.range)
    if lo > hi:
        raise UsageError("empty range")
    try:
        rep = unbounded.verify_concatenation(lo, hi)
    except NonIntegralValue as e:
        _out(args, [f"non-integral entry: {e}"], {"ok": False, "error": str(e)})
        return FAILS
    obj = rep.as_dict()
    lines = [f"segments {lo}..{hi}: SL_3 {rep.slk_ok}, integral {rep.integral}, "
             f"positive {rep.positive} ({rep.windows_checked} windows)"]
    matches = {}
    for which in (0, 1):
        if lo <= which <= hi:
            same = unbounded.segment(which) == fixtures.printed_segment(which).rows
            matches[str(which)] = same
            lines.append(f"segment {which} matches the printed Q_{which}: {same}")
    obj["printed_match"] = matches
    for l, m in sorted(rep.max_entry.items()):
        lines.append(f"  max entry of segment {l}: {m}")
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        for l in range(lo, hi + 1):
            seg = window_pattern(3, 8, unbounded.segment(l), 12 * l + 1, name=f"Q{l}")
            _write(os.path.join(args.emit, f"segment_{l}.frieze"), io.serialize(seg))
    _out(args, lines, obj)
    return OK if rep.ok and all(matches.values()) else FAILS


def cmd_enumerate(args) -> int:
    try:
        schedule = [int(x) for x in args.bound_schedule.split(",") if x]
    except ValueError:
        raise UsageError("bound schedule must be a comma-separated list of integers")
    try:
        res = enumerate_tame_positive(args.k, args.n, args.convention, schedule,
                                      args.budget, args.algorithm, args.workers)
    except BudgetExhausted as e:
        part = e.partial
        _out(args, [f"budget exhausted: {e}",
                     f"completed bounds {part.bound_schedule}: counts {part.count_per_bound}"
                     " (inconclusive)"],
             part.as_dict())
        return BUDGET
    lines = [f"k={res.k} n={res.n} convention={res.convention} algorithm={res.algorithm}",
             f"bounds {res.bound_schedule}: counts {res.count_per_bound}",
             f"stabilized: {res.stabilized}", f"time: {res.budget_spent:.2f}s"]
    obj = res.as_dict(args.max_friezes)
    if args.out:
        _write(args.out, io.dumps(obj))
    _out(args, lines, obj)
    return OK if res.stabilized else FAILS


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="slkfrieze", description="Exact tools for SL_k-frieze patterns.")
    p.add_argument("--json", action="store_true", help="emit the report as a JSON document")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def file_verb(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="frieze document, or builtin:NAME")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    file_verb("verify", cmd_verify, "check every adjacent k x k determinant")
    sp = file_verb("classify", cmd_classify, "integrality, positivity, period, genericity, tameness")
    sp.add_argument("--period-bound", type=int, default=None)
    sp = file_verb("xi", cmd_xi, "transfer matrices of a tame frieze")
    sp.add_argument("--reconstruct", action="store_true")
    sp = file_verb("dual", cmd_dual, "frieze of (k-1) x (k-1) minors")
    sp.add_argument("--out")
    sp = file_verb("extend", cmd_extend, "continue the last k-1 rows")
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="list every solution at free steps")
    sp.add_argument("--out")

    sp = sub.add_parser("graph", help="bounded successor graph")
    sp.add_argument("--seed", required=True, help="frieze file or builtin:A12")
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--max-vertices", type=int, default=1000)
    sp.add_argument("--max-depth", type=int, default=None)
    sp.add_argument("--restrict", action="store_true", help="only keep edges among the seeds")
    sp.add_argument("--prune", action="store_true")
    sp.add_argument("--analyze", action="store_true")
    sp.add_argument("--cycle-cap", type=int, default=12)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("walk", help="stack the vertices of a walk in a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--word", required=True, help="keys:K1;K2;..., cycle:I:REPS or fib:ROWS")
    sp.add_argument("--period-bound", type=int, default=1000)
    sp.add_argument("--out")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_walk)

    sp = sub.add_parser("unbounded", help="segments of the unbounded SL_3 frieze")
    sp.add_argument("--range", required=True, help="LO..HI")
    sp.add_argument("--emit", help="directory for segment documents")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_unbounded)

    sp = sub.add_parser("enumerate", help="count tame integral positive friezes")
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--bound-schedule", default="8,16,32,64")
    sp.add_argument("--budget", type=float, default=None, help="seconds")
    sp.add_argument("--convention", choices=CONVENTIONS, default="pattern")
    sp.add_argument("--algorithm", choices=("xi", "scan"), default="xi")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-friezes", type=int, default=0)
    sp.add_argument("--out")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_enumerate)
    return p


def _join_range(argv):
    """Let ``--range -3..3`` through; argparse would read -3..3 as a flag."""
    out = []
    it = iter(argv)
    for a in it:
        if a == "--range":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--range={nxt}")
        else:
            out.append(a)
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_join_range(argv))
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return USAGE
    except FriezeError as e:
        print(f"error: {e}", file=sys.stderr)
        return FAILS


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

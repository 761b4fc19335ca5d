"""Row continuation and the successor graph on (k-1)-tuples of band rows.

Given k-1 consecutive band rows, the next row's entries x_1..x_n are solved
left to right.  The k x k window whose bottom-right corner is x_s has
determinant ``D * x_s + rest`` where D is the (k-1)x(k-1) minor of the known
rows above-left of x_s.  D != 0 pins x_s; D == 0 turns the window into a
consistency condition and leaves x_s free.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from .arith import det_rows
from .classify import minimal_period, verify_slk
from .errors import BudgetExhausted, NotAWalk, ShapeMismatch
from .frieze import FriezePattern, band_entry, window_pattern


@dataclass(frozen=True)
class IntegerRange:
    lo: int
    hi: int

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    def admits(self, x: Fraction) -> bool:
        return x.denominator == 1 and self.lo <= x <= self.hi


@dataclass(frozen=True)
class ExactRational:
    pass


Constraint = Union[IntegerRange, ExactRational]

UNIQUE, FREE, INCONSISTENT = "unique", "free", "inconsistent"


@dataclass
class ContinuationResult:
    kind: str
    rows: list = field(default_factory=list)
    free_positions: list = field(default_factory=list)
    position: Optional[int] = None
    reason: Optional[str] = None

    @property
    def row(self):
        if self.kind != UNIQUE:
            raise ValueError(f"continuation is {self.kind}, not unique")
        return self.rows[0]


def _block(k, n, known, new, upto):
    """Rows 1..k of the array restricted to columns ``upto`` (an iterable),
    with the new (k-th) row's band given by ``new``."""
    bands = list(known) + [new]
    return [[band_entry(k, n, b, i, c) for c in upto] for i, b in enumerate(bands, start=1)]


def continue_row(window: Sequence[Sequence], constraint: Constraint = ExactRational(),
                 k: Optional[int] = None) -> ContinuationResult:
    """All ways to append one band row below ``window`` (k-1 band rows)."""
    window = [tuple(Fraction(x) for x in r) for r in window]
    k = len(window) + 1 if k is None else k
    if len(window) != k - 1 or not window:
        raise ShapeMismatch(f"continuation needs k-1 = {k - 1} rows, got {len(window)}")
    n = len(window[0])
    if any(len(r) != n for r in window):
        raise ShapeMismatch("window rows have different lengths")

    # pivots only involve the known rows
    pivots = []
    for s in range(1, n + 1):
        blk = [[band_entry(k, n, b, i, c) for c in range(s, s + k - 1)]
               for i, b in enumerate(window, start=1)]
        pivots.append(det_rows(blk))
    free_positions = [s for s, d in enumerate(pivots, start=1) if d == 0]

    exact = isinstance(constraint, ExactRational)

    solutions = []
    failure = {}
    branched = False
    x = [Fraction(0)] * n

    def window_det(s):
        return det_rows(_block(k, n, window, x, range(s, s + k)))

    def closes():
        # all k x k windows with top row 1 over one horizontal period
        blk_rows = list(window) + [tuple(x)]
        for j in range(1 - k, n + 3):
            rows = [[band_entry(k, n, b, i, c) for c in range(j, j + k)]
                    for i, b in enumerate(blk_rows, start=1)]
            if det_rows(rows) != 1:
                return False
        return True

    def fail(s, reason):
        if not failure:
            failure.update(position=s, reason=reason)

    def solve(s):
        nonlocal branched
        if s > n:
            if closes():
                solutions.append(tuple(x))
            else:
                fail(n, "determinant")
            return
        d = pivots[s - 1]
        x[s - 1] = Fraction(0)
        rest = window_det(s)
        if d != 0:
            v = (1 - rest) / d
            if not exact and not constraint.admits(v):
                fail(s, "range")
                return
            x[s - 1] = v
            solve(s + 1)
            return
        if rest != 1:
            fail(s, "determinant")
            return
        if exact:
            return
        branched = True
        for v in constraint.values():
            x[s - 1] = Fraction(v)
            solve(s + 1)
        x[s - 1] = Fraction(0)

    solve(1)

    if exact and free_positions:
        if failure and failure["position"] < free_positions[0]:
            return ContinuationResult(INCONSISTENT, position=failure["position"],
                                      reason=failure["reason"])
        return ContinuationResult(FREE, [], free_positions)
    if free_positions and branched:
        return ContinuationResult(FREE, sorted(set(solutions)), free_positions)
    if solutions:
        return ContinuationResult(UNIQUE, solutions)
    return ContinuationResult(INCONSISTENT, position=failure.get("position"),
                              reason=failure.get("reason"))


# ---------------------------------------------------------------------------
# the successor graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class GammaVertex:
    rows: tuple

    @classmethod
    def of(cls, rows: Iterable[Iterable]) -> "GammaVertex":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatch("vertex rows must be nonempty and of equal length")
        if any(x < 0 for r in rows for x in r):
            raise ShapeMismatch("vertex entries are nonnegative")
        return cls(rows)

    @property
    def k(self) -> int:
        return len(self.rows) + 1

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def key(self) -> str:
        return "|".join(",".join(str(x) for x in r) for r in self.rows)

    @classmethod
    def from_key(cls, key: str) -> "GammaVertex":
        return cls.of([[int(x) for x in part.split(",")] for part in key.split("|")])


def successors(v: GammaVertex, bound: int) -> list[GammaVertex]:
    res = continue_row(v.rows, IntegerRange(0, bound))
    out = {GammaVertex.of(v.rows[1:] + (tuple(int(x) for x in row),)) for row in res.rows}
    return sorted(out)


def is_edge(v: GammaVertex, w: GammaVertex) -> bool:
    """The edge rule checked directly on the k stacked rows."""
    if v.rows[1:] != w.rows[:-1]:
        return False
    f = window_pattern(v.k, v.n, list(v.rows) + [w.rows[-1]])
    return verify_slk(f).ok


@dataclass
class GammaSubgraph:
    bound: int
    vertices: set = field(default_factory=set)
    edges: set = field(default_factory=set)
    frontier: set = field(default_factory=set)
    exhausted: bool = False

    def sorted_vertices(self) -> list[GammaVertex]:
        return sorted(self.vertices)

    def index(self) -> dict:
        return {v: idx for idx, v in enumerate(self.sorted_vertices())}

    def out_degree(self, v) -> int:
        return sum(1 for a, _ in self.edges if a == v)

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.sorted_vertices())
        g.add_edges_from(sorted(self.edges))
        return g

    def adjacency(self) -> dict:
        """Deterministic adjacency list keyed by canonical vertex encoding."""
        adj = {v.key(): [] for v in self.sorted_vertices()}
        for a, b in sorted(self.edges):
            adj[a.key()].append(b.key())
        return adj


def _expand(args):
    v, bound = args
    return successors(v, bound)


def build_subgraph(seeds: Iterable[GammaVertex], bound: int, max_vertices: int = 1000,
                   max_depth: Optional[int] = None, restrict_to: Optional[set] = None,
                   workers: int = 1) -> GammaSubgraph:
    """Breadth-first closure of ``seeds`` under :func:`successors`.

    Layers are expanded in canonical order, so the result does not depend on
    ``workers``.  Vertices beyond ``max_vertices`` or ``max_depth`` are left
    in ``frontier`` and the graph is flagged ``exhausted``.
    """
    g = GammaSubgraph(bound)
    layer = sorted(set(seeds))
    if len(layer) > max_vertices:
        raise BudgetExhausted("more seeds than max_vertices", g)
    g.vertices.update(layer)
    depth = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while layer:
            if max_depth is not None and depth >= max_depth:
                g.frontier.update(layer)
                break
            jobs = [(v, bound) for v in layer]
            results = list(pool.map(_expand, jobs)) if pool else [_expand(j) for j in jobs]
            nxt = []
            for v, succ in zip(layer, results):
                for w in succ:
                    if restrict_to is not None and w not in restrict_to:
                        continue
                    if w not in g.vertices:
                        if len(g.vertices) >= max_vertices:
                            g.frontier.add(v)
                            continue
                        g.vertices.add(w)
                        nxt.append(w)
                    g.edges.add((v, w))
            layer = sorted(set(nxt))
            depth += 1
    finally:
        if pool:
            pool.shutdown()
    g.exhausted = bool(g.frontier)
    return g


def prune_dead_ends(g: GammaSubgraph) -> GammaSubgraph:
    verts = set(g.vertices)
    edges = set(g.edges)
    while True:
        has_out = {a for a, _ in edges}
        dead = verts - has_out
        if not dead:
            break
        verts -= dead
        edges = {(a, b) for a, b in edges if a in verts and b in verts}
    return GammaSubgraph(g.bound, verts, edges, g.frontier & verts, g.exhausted)


@dataclass
class Analysis:
    cycles: list
    longest_path: list
    longest_path_exact: bool


def canonical_cycle(cycle: Sequence) -> tuple:
    m = min(range(len(cycle)), key=lambda t: cycle[t])
    return tuple(cycle[m:]) + tuple(cycle[:m])


def longest_simple_path(adj: dict, budget: int = 2_000_000):
    """Exhaustive DFS for a maximum-length simple path (vertex count).

    Returns ``(path, exact)``; ``exact`` is False when the step budget ran
    out and the best path seen so far is returned.
    """
    nodes = sorted(adj)
    best = []
    steps = 0
    exact = True
    reach_cache = {}

    def reach(v):
        if v not in reach_cache:
            reach_cache[v] = nx.descendants(_g, v) | {v}
        return reach_cache[v]

    _g = nx.DiGraph()
    _g.add_nodes_from(nodes)
    _g.add_edges_from((a, b) for a in nodes for b in adj[a])

    def dfs(path, onpath):
        nonlocal best, steps, exact
        steps += 1
        if steps > budget:
            exact = False
            return
        if len(path) > len(best):
            best = list(path)
        v = path[-1]
        # cannot beat best: not enough unvisited vertices reachable
        if len(path) + len(reach(v) - onpath) <= len(best):
            return
        for w in adj[v]:
            if w not in onpath:
                path.append(w)
                onpath.add(w)
                dfs(path, onpath)
                onpath.discard(w)
                path.pop()
                if not exact:
                    return

    for v in nodes:
        if len(reach(v)) <= len(best):
            continue
        dfs([v], {v})
        if not exact:
            break
    return best, exact


def analyze(g: GammaSubgraph, cycle_length_cap: int = 12, path_budget: int = 2_000_000) -> Analysis:
    dg = g.digraph()
    cycles = sorted({canonical_cycle(c)
                     for c in nx.simple_cycles(dg, length_bound=cycle_length_cap)})
    adj = {v: sorted(dg.successors(v)) for v in dg.nodes}
    path, exact = longest_simple_path(adj, path_budget)
    return Analysis([list(c) for c in cycles], path, exact)


# ---------------------------------------------------------------------------
# walks
# ---------------------------------------------------------------------------

def walk_frieze(g: Optional[GammaSubgraph], word: Sequence[GammaVertex]) -> FriezePattern:
    """Stack the vertices of a walk: the first vertex contributes its k-1
    rows, every further step its last row."""
    if not word:
        raise NotAWalk("empty walk")
    edges = g.edges if g is not None else None
    for a, b in zip(word, word[1:]):
        ok = (a, b) in edges if edges is not None else is_edge(a, b)
        if not ok:
            raise NotAWalk(f"{a.key()} -> {b.key()} is not an edge")
    rows = list(word[0].rows) + [w.rows[-1] for w in word[1:]]
    v = word[0]
    return window_pattern(v.k, v.n, rows, 1)


def fibonacci_word(length: int) -> list[int]:
    """Prefix of the Fibonacci word 0100101001001... (aperiodic)."""
    a, b = [0], [0, 1]
    while len(b) < length:
        a, b = b, b + a
    return b[:length]


def cycle_word(cycles: Sequence[Sequence[GammaVertex]], letters: Iterable[int]) -> list[GammaVertex]:
    """Walk that traverses ``cycles[letter]`` for each letter.  All cycles
    must start at the same vertex."""
    start = cycles[0][0]
    if any(c[0] != start for c in cycles):
        raise NotAWalk("cycles must share their first vertex")
    walk = [start]
    for letter in letters:
        walk.extend(cycles[letter][1:])
        walk.append(start)
    return walk


def two_cycles_through(cycles: Sequence[Sequence]) -> Optional[tuple]:
    """The shortest pair of distinct cycles sharing a vertex, both rotated
    to start at the smallest shared vertex."""
    best = None
    for x in range(len(cycles)):
        for y in range(x + 1, len(cycles)):
            common = sorted(set(cycles[x]) & set(cycles[y]))
            if not common:
                continue
            cost = len(cycles[x]) + len(cycles[y])
            if best is None or cost < best[0]:
                best = (cost, x, y, common[0])
    if best is None:
        return None
    _, x, y, v = best
    rot = []
    for c in (cycles[x], cycles[y]):
        t = list(c).index(v)
        rot.append(list(c[t:]) + list(c[:t]))
    return tuple(rot)


def has_period_at_most(f: FriezePattern, bound: int) -> Optional[int]:
    return minimal_period(f.rows, bound)

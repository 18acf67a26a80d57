"""Exhaustive enumeration of fixed polyominoes and marked pairs.

The fast path is Redelmeier's algorithm: polyominoes grow from a root cell at
the origin, only into cells above the origin row or to its right on that row,
and an untried set plus a "seen" mask guarantees every fixed polyomino is
produced exactly once. Every node of the search tree is a polyomino, so a
single run to depth ``n`` yields counts for all sizes ``1..n``.

Each node is also classified cell by cell against the mark predicates, which
gives f(n), g(n) and the bucket counts used in the bound proof without ever
materializing the polyominoes.
"""

from __future__ import annotations

import functools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .lattice import Cell, MarkedPair, MarkVariant, Polyomino, canonicalize, satisfies
from .tables import CountTable

log = logging.getLogger(__name__)

MAX_BACKTRACKING_N = 16
MAX_NAIVE_N = 10
DEFAULT_SPLIT_DEPTH = 4


class SizeOutOfRange(ValueError):
    pass


def _check_range(n: int, lo: int, hi: int, what: str) -> None:
    if not isinstance(n, int) or not lo <= n <= hi:
        raise SizeOutOfRange(f"{what}: n={n!r} outside {lo}..{hi}")


@dataclass(frozen=True)
class BucketCountsB:
    """Type-B-left pairs of size ``n`` split by their right/above neighbors."""

    n: int
    no_right: int
    right_no_above: int
    right_and_above: int

    @property
    def total(self) -> int:
        return self.no_right + self.right_no_above + self.right_and_above


@dataclass(frozen=True)
class BucketCountsA:
    n: int
    no_left: int
    has_left: int

    @property
    def total(self) -> int:
        return self.no_left + self.has_left


@dataclass
class Census:
    """Per-size counters from one enumeration run; index ``k`` is size ``k``."""

    max_n: int
    classified: bool
    fixed: list[int] = field(default_factory=list)
    type_a: list[int] = field(default_factory=list)
    type_b_left: list[int] = field(default_factory=list)
    type_b_right: list[int] = field(default_factory=list)
    no_right: list[int] = field(default_factory=list)
    right_no_above: list[int] = field(default_factory=list)
    right_and_above: list[int] = field(default_factory=list)

    _COUNTERS = (
        "fixed",
        "type_a",
        "type_b_left",
        "type_b_right",
        "no_right",
        "right_no_above",
        "right_and_above",
    )

    @classmethod
    def empty(cls, max_n: int, classified: bool) -> Census:
        kw = {name: [0] * (max_n + 1) for name in cls._COUNTERS}
        return cls(max_n, classified, **kw)

    def merge(self, other: Census) -> None:
        for name in self._COUNTERS:
            mine = getattr(self, name)
            for k, v in enumerate(getattr(other, name)):
                mine[k] += v

    def _need_classified(self) -> None:
        if not self.classified:
            raise ValueError("census was run without pair classification")

    def table(self, label: str) -> CountTable:
        """A, f or g as a CountTable; f(0) = g(0) = 1 by convention."""
        if label == "A":
            return CountTable("A", tuple(self.fixed[1:]))
        self._need_classified()
        if label == "f":
            return CountTable("f", (1, *self.type_a[1:]))
        if label == "g":
            return CountTable("g", (1, *self.type_b_left[1:]))
        raise ValueError(f"census has no table {label!r}")

    def marked(self, n: int, variant: MarkVariant) -> int:
        self._need_classified()
        return {
            MarkVariant.TYPE_A: self.type_a,
            MarkVariant.TYPE_B_LEFT: self.type_b_left,
            MarkVariant.TYPE_B_RIGHT: self.type_b_right,
        }[variant][n]

    def buckets_b(self, n: int) -> BucketCountsB:
        self._need_classified()
        return BucketCountsB(n, self.no_right[n], self.right_no_above[n], self.right_and_above[n])

    def buckets_a(self, n: int) -> BucketCountsA:
        self._need_classified()
        # a Type-A pair with no left neighbor is exactly a Type-B-left pair
        no_left = self.type_b_left[n]
        return BucketCountsA(n, no_left, self.type_a[n] - no_left)


class _Grid:
    """Flat padded board for sizes up to ``n``; cell (x, y) -> index."""

    def __init__(self, n: int):
        self.n = n
        self.width = 2 * n + 3
        self.size = (n + 3) * self.width
        self.origin = self.index(0, 0)

    def index(self, x: int, y: int) -> int:
        return (y + 1) * self.width + (x + self.n + 1)

    def cell(self, i: int) -> Cell:
        y, x = divmod(i, self.width)
        return Cell(x - self.n - 1, y - 1)

    def initial_seen(self) -> bytearray:
        seen = bytearray(self.size)
        # row y = -1 and cells left of the origin on row 0 are never used
        seen[: self.origin + 1] = b"\x01" * (self.origin + 1)
        return seen


# A subtask is the search state at the split depth: placed cells, the untried
# list handed to the child call, and the seen mask.
_Task = tuple[tuple[int, ...], tuple[int, ...], bytes]


def _search(
    n: int,
    classify: bool,
    placed: list[int],
    untried: list[int],
    seen: bytearray,
    split_depth: int | None = None,
    tasks: list[_Task] | None = None,
    visit: Callable[[list[int]], None] | None = None,
) -> Census:
    grid = _Grid(n)
    W = grid.width
    occ = bytearray(grid.size)
    for p in placed:
        occ[p] = 1
    census = Census.empty(n, classify)
    fixed = census.fixed
    type_a = census.type_a
    b_left = census.type_b_left
    b_right = census.type_b_right
    no_right = census.no_right
    right_no_above = census.right_no_above
    right_and_above = census.right_and_above

    def grow(untried: list[int], depth: int) -> None:
        k = depth + 1
        while untried:
            c = untried.pop()
            occ[c] = 1
            placed.append(c)
            fixed[k] += 1
            if classify:
                fa = gl = gr = nr = rna = raa = 0
                for p in placed:
                    below = p - W
                    if occ[below] or occ[below - 1] or occ[below + 1]:
                        continue
                    fa += 1
                    right = occ[p + 1]
                    if not right:
                        gr += 1
                    if not occ[p - 1]:
                        gl += 1
                        if not right:
                            nr += 1
                        elif not occ[p + W]:
                            rna += 1
                        else:
                            raa += 1
                type_a[k] += fa
                b_left[k] += gl
                b_right[k] += gr
                no_right[k] += nr
                right_no_above[k] += rna
                right_and_above[k] += raa
            if visit is not None:
                visit(placed)
            if k < n:
                new = [nb for nb in (c + 1, c - 1, c + W, c - W) if not seen[nb]]
                for nb in new:
                    seen[nb] = 1
                if k == split_depth:
                    tasks.append((tuple(placed), tuple(untried + new), bytes(seen)))
                else:
                    grow(untried + new, k)
                for nb in new:
                    seen[nb] = 0
            occ[c] = 0
            placed.pop()

    grow(untried, len(placed))
    return census


def _run_task(args: tuple[int, bool, _Task]) -> Census:
    n, classify, (placed, untried, seen) = args
    return _search(n, classify, list(placed), list(untried), bytearray(seen))


def census(
    max_n: int,
    *,
    classify: bool = True,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> Census:
    """Enumerate every fixed polyomino with at most ``max_n`` cells.

    With ``workers > 1`` the search tree is cut at ``split_depth`` and the
    subtrees are explored in separate processes. Counters are summed, so the
    result does not depend on ``workers``.
    """
    _check_range(max_n, 1, MAX_BACKTRACKING_N, "census")
    grid = _Grid(max_n)
    if workers <= 1 or split_depth >= max_n:
        return _search(max_n, classify, [], [grid.origin], grid.initial_seen())

    tasks: list[_Task] = []
    total = _search(
        max_n, classify, [], [grid.origin], grid.initial_seen(), split_depth=split_depth, tasks=tasks
    )
    log.debug("census(%d): %d subtasks at depth %d on %d workers", max_n, len(tasks), split_depth, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_run_task, [(max_n, classify, t) for t in tasks], chunksize=1):
            total.merge(part)
    return total


@functools.lru_cache(maxsize=8)
def _cached_census(max_n: int, classify: bool) -> Census:
    return census(max_n, classify=classify)


def count_fixed(n: int, algorithm: str = "backtracking", *, workers: int = 1) -> int:
    """A(n), the number of fixed polyominoes with ``n`` cells."""
    if algorithm == "backtracking":
        _check_range(n, 1, MAX_BACKTRACKING_N, "count_fixed")
        if workers > 1:
            return census(n, classify=False, workers=workers).fixed[n]
        return _cached_census(n, False).fixed[n]
    if algorithm == "naive_oracle":
        _check_range(n, 1, MAX_NAIVE_N, "count_fixed")
        return len(naive_fixed_polyominoes(n)[n])
    raise ValueError(f"unknown algorithm {algorithm!r}")


def count_marked(n: int, variant: MarkVariant) -> int:
    """Number of marked pairs of size ``n`` whose mark satisfies ``variant``."""
    _check_range(n, 1, MAX_BACKTRACKING_N, "count_marked")
    return _cached_census(n, True).marked(n, variant)


def classify_type_b(n: int) -> BucketCountsB:
    _check_range(n, 2, MAX_BACKTRACKING_N, "classify_type_b")
    return _cached_census(n, True).buckets_b(n)


def classify_type_a(n: int) -> BucketCountsA:
    _check_range(n, 1, MAX_BACKTRACKING_N, "classify_type_a")
    return _cached_census(n, True).buckets_a(n)


def canonical_anchor(p: Polyomino) -> MarkedPair:
    """Mark the leftmost cell of the bottom row; always a Type-B-left pair."""
    return MarkedPair(p, 0)


def visit_polyominoes(n: int, visit: Callable[[Polyomino], None]) -> None:
    """Call ``visit`` once for every fixed polyomino of exactly ``n`` cells."""
    _check_range(n, 1, MAX_BACKTRACKING_N, "visit_polyominoes")
    grid = _Grid(n)

    def on_node(placed: list[int]) -> None:
        if len(placed) == n:
            visit(canonicalize(grid.cell(i) for i in placed))

    _search(n, False, [], [grid.origin], grid.initial_seen(), visit=on_node)


def visit_marked_pairs(n: int, variant: MarkVariant, visit: Callable[[MarkedPair], None]) -> None:
    """Call ``visit`` for each marked pair of size ``n`` satisfying ``variant``."""

    def on_poly(p: Polyomino) -> None:
        for i in range(len(p.cells)):
            pair = MarkedPair(p, i)
            if satisfies(pair, variant):
                visit(pair)

    visit_polyominoes(n, on_poly)


def polyominoes(n: int) -> list[Polyomino]:
    out: list[Polyomino] = []
    visit_polyominoes(n, out.append)
    return out


def _normal_form(cells) -> tuple[tuple[int, int], ...]:
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return tuple(sorted((x - mx, y - my) for x, y in cells))


def naive_fixed_polyominoes(max_n: int) -> dict[int, set[tuple[tuple[int, int], ...]]]:
    """Oracle: grow every polyomino by one cell and dedupe translates.

    Returns a map from size to the set of normalized cell tuples. Independent
    of the backtracking search; slow but obviously correct.
    """
    _check_range(max_n, 1, MAX_NAIVE_N, "naive_fixed_polyominoes")
    levels = {1: {((0, 0),)}}
    for k in range(2, max_n + 1):
        nxt = set()
        for poly in levels[k - 1]:
            occupied = set(poly)
            for x, y in poly:
                for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if nb not in occupied:
                        nxt.add(_normal_form(poly + (nb,)))
        levels[k] = nxt
    return levels


def eden_bound(n: int) -> int:
    """binomial(3n, n - 1), an upper bound on A(n)."""
    return math.comb(3 * n, n - 1)

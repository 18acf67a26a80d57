"""Bicolored Motzkin paths: up and level steps come in two colors, down in one."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .tables import CountTable

MAX_BRUTEFORCE_LEN = 16

UP, DOWN, LEVEL = "U", "D", "L"
_HEIGHT_CHANGE = {UP: 1, DOWN: -1, LEVEL: 0}
_COLORS = {UP: 2, DOWN: 1, LEVEL: 2}


@dataclass(frozen=True)
class Step:
    kind: str
    color: int = 1


@dataclass(frozen=True)
class MotzkinPath:
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        h = 0
        for s in self.steps:
            if s.kind not in _HEIGHT_CHANGE or not 1 <= s.color <= _COLORS[s.kind]:
                raise ValueError(f"invalid step {s}")
            h += _HEIGHT_CHANGE[s.kind]
            if h < 0:
                raise ValueError("path dips below the axis")
        if h != 0:
            raise ValueError("path does not return to the axis")


def motzkin_shapes(length: int) -> Iterator[str]:
    """All uncolored Motzkin words of the given length, by pruned DFS."""

    def walk(prefix: list[str], height: int) -> Iterator[str]:
        left = length - len(prefix)
        if left == 0:
            yield "".join(prefix)
            return
        for kind in (UP, LEVEL, DOWN):
            h = height + _HEIGHT_CHANGE[kind]
            if 0 <= h <= left - 1:
                prefix.append(kind)
                yield from walk(prefix, h)
                prefix.pop()

    yield from walk([], 0)


def bicolored_paths(length: int) -> Iterator[MotzkinPath]:
    """Every colored path explicitly; exponential, meant for small lengths."""

    def colorings(shape: str, i: int) -> Iterator[tuple[Step, ...]]:
        if i == len(shape):
            yield ()
            return
        for color in range(1, _COLORS[shape[i]] + 1):
            for rest in colorings(shape, i + 1):
                yield (Step(shape[i], color),) + rest

    for shape in motzkin_shapes(length):
        for steps in colorings(shape, 0):
            yield MotzkinPath(steps)


def _bruteforce(length: int) -> int:
    # each listed shape stands for 2^(#up + #level) colorings
    return sum(1 << (len(w) - w.count(DOWN)) for w in motzkin_shapes(length))


def path_table(max_len: int) -> list[list[int]]:
    """``table[L][h]``: colored paths of length L from height 0 ending at height h."""
    table = [[1]]
    for L in range(1, max_len + 1):
        prev = table[-1]
        row = []
        for h in range(L + 1):
            total = 0
            if h < len(prev):
                total += 2 * prev[h]  # level
            if 0 <= h - 1 < len(prev):
                total += 2 * prev[h - 1]  # up
            if h + 1 < len(prev):
                total += prev[h + 1]  # down
            row.append(total)
        table.append(row)
    return table


def _dp(length: int) -> int:
    # state: height; heights above the remaining length cannot return to 0
    counts = {0: 1}
    for step in range(length):
        remaining = length - step - 1
        nxt: dict[int, int] = {}
        for h, c in counts.items():
            for dh, mult in ((0, 2), (1, 2), (-1, 1)):
                h2 = h + dh
                if 0 <= h2 <= remaining:
                    nxt[h2] = nxt.get(h2, 0) + mult * c
        counts = nxt
    return counts.get(0, 0)


def count_bicolored_paths(length: int, method: str = "dp") -> int:
    if length < 0:
        raise ValueError("length must be nonnegative")
    if method == "bruteforce":
        if length > MAX_BRUTEFORCE_LEN:
            raise ValueError(f"bruteforce is limited to length <= {MAX_BRUTEFORCE_LEN}")
        return _bruteforce(length)
    if method == "dp":
        return _dp(length)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class MotzkinReport:
    max_len: int
    checked: int
    first_mismatch: tuple[int, int, int] | None  # (length, paths, G(length + 1))

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None


def verify_motzkin_identity(max_len: int, G: CountTable, bruteforce_upto: int = 12) -> MotzkinReport:
    """Check paths(L) == G(L + 1) for 0 <= L <= max_len."""
    if G.max_n < max_len + 1:
        raise ValueError(f"G must reach {max_len + 1}")
    table = path_table(max_len)
    for L in range(max_len + 1):
        paths = _bruteforce(L) if L <= bruteforce_upto else table[L][0]
        if paths != G[L + 1]:
            return MotzkinReport(max_len, L, (L, paths, G[L + 1]))
    return MotzkinReport(max_len, max_len + 1, None)

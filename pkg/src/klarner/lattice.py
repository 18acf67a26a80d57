"""Cells, canonical fixed polyominoes, dihedral transforms and mark predicates.

Coordinates follow one convention everywhere: ``y`` grows upward, so the row
below ``(x, y)`` is row ``y - 1`` and the cell to the left is ``(x - 1, y)``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Cell(NamedTuple):
    x: int
    y: int


NEIGHBOR_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1))


class PolyominoError(ValueError):
    """Base class for malformed cell sets."""


class EmptyPolyominoError(PolyominoError):
    pass


class DisconnectedPolyominoError(PolyominoError):
    pass


def _sort_key(c: Cell) -> tuple[int, int]:
    return (c.y, c.x)


def is_connected(cells: Iterable[tuple[int, int]]) -> bool:
    """True iff the cells form one component under 4-adjacency.

    The empty set is not connected.
    """
    remaining = set(cells)
    if not remaining:
        return False
    start = next(iter(remaining))
    remaining.discard(start)
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for dx, dy in NEIGHBOR_OFFSETS:
            nb = (x + dx, y + dy)
            if nb in remaining:
                remaining.discard(nb)
                queue.append(nb)
    return not remaining


@dataclass(frozen=True)
class Polyomino:
    """A fixed polyomino in canonical position.

    ``cells`` is strictly increasing in ``(y, x)`` order with minimum x and y
    both zero, so ``cells[0]`` is the leftmost cell of the bottom row. Build
    instances with :func:`canonicalize`; the constructor only validates.
    """

    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        cells = self.cells
        if not cells:
            raise EmptyPolyominoError("polyomino has no cells")
        if any(_sort_key(a) >= _sort_key(b) for a, b in zip(cells, cells[1:])):
            raise PolyominoError("cells must be strictly increasing in (y, x) order")
        if min(c.x for c in cells) != 0 or min(c.y for c in cells) != 0:
            raise PolyominoError("polyomino is not in canonical position")
        if not is_connected(cells):
            raise DisconnectedPolyominoError("cells are not edge-connected")

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cellset

    @property
    def cellset(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    def render(self) -> str:
        """ASCII picture, top row first."""
        occupied = self.cellset
        width = 1 + max(c.x for c in self.cells)
        height = 1 + max(c.y for c in self.cells)
        rows = []
        for y in reversed(range(height)):
            rows.append("".join("#" if (x, y) in occupied else "." for x in range(width)))
        return "\n".join(rows)


def canonicalize(cells: Iterable[tuple[int, int]]) -> Polyomino:
    """Translate a connected cell set so that min x = min y = 0.

    Raises EmptyPolyominoError or DisconnectedPolyominoError on bad input.
    """
    unique = {Cell(*c) for c in cells}
    if not unique:
        raise EmptyPolyominoError("cannot canonicalize an empty cell set")
    if not is_connected(unique):
        raise DisconnectedPolyominoError(f"cell set {sorted(unique)} is not edge-connected")
    mx = min(c.x for c in unique)
    my = min(c.y for c in unique)
    shifted = sorted((Cell(c.x - mx, c.y - my) for c in unique), key=_sort_key)
    return Polyomino(tuple(shifted))


class Symmetry(enum.Enum):
    """The eight symmetries of the square as integer matrices ((a, b), (c, d)).

    A cell ``(x, y)`` maps to ``(a*x + b*y, c*x + d*y)``.
    """

    IDENTITY = ((1, 0), (0, 1))
    ROT90 = ((0, -1), (1, 0))
    ROT180 = ((-1, 0), (0, -1))
    ROT270 = ((0, 1), (-1, 0))
    FLIP_X = ((-1, 0), (0, 1))  # left-right mirror
    FLIP_Y = ((1, 0), (0, -1))  # up-down mirror
    TRANSPOSE = ((0, 1), (1, 0))
    ANTI_TRANSPOSE = ((0, -1), (-1, 0))

    def apply(self, cell: tuple[int, int]) -> Cell:
        (a, b), (c, d) = self.value
        x, y = cell
        return Cell(a * x + b * y, c * x + d * y)

    @property
    def inverse(self) -> Symmetry:
        # orthogonal matrices: inverse is the transpose
        (a, b), (c, d) = self.value
        return Symmetry(((a, c), (b, d)))

    def compose(self, other: Symmetry) -> Symmetry:
        """The symmetry ``self ∘ other`` (apply ``other`` first)."""
        (a, b), (c, d) = self.value
        (e, f), (g, h) = other.value
        return Symmetry(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))


def transform(p: Polyomino, sym: Symmetry) -> Polyomino:
    return canonicalize(sym.apply(c) for c in p.cells)


class MarkVariant(enum.Enum):
    TYPE_A = "A"
    TYPE_B_LEFT = "B-left"
    TYPE_B_RIGHT = "B-right"

    @property
    def forbidden(self) -> tuple[tuple[int, int], ...]:
        """Offsets from the marked cell that must be empty."""
        below = ((-1, -1), (0, -1), (1, -1))
        if self is MarkVariant.TYPE_A:
            return below
        if self is MarkVariant.TYPE_B_LEFT:
            return below + ((-1, 0),)
        return below + ((1, 0),)


@dataclass(frozen=True)
class MarkedPair:
    poly: Polyomino
    mark: int

    def __post_init__(self) -> None:
        if not 0 <= self.mark < len(self.poly.cells):
            raise IndexError(f"mark {self.mark} out of range for {len(self.poly.cells)} cells")

    @property
    def cell(self) -> Cell:
        return self.poly.cells[self.mark]


def satisfies(pair: MarkedPair, variant: MarkVariant) -> bool:
    cx, cy = pair.cell
    occupied = pair.poly.cellset
    return not any((cx + dx, cy + dy) in occupied for dx, dy in variant.forbidden)


def transform_pair(pair: MarkedPair, sym: Symmetry) -> MarkedPair:
    """Apply ``sym`` to the polyomino and carry the mark to its image cell."""
    image = [sym.apply(c) for c in pair.poly.cells]
    mx = min(c.x for c in image)
    my = min(c.y for c in image)
    target = Cell(image[pair.mark].x - mx, image[pair.mark].y - my)
    poly = canonicalize(image)
    return MarkedPair(poly, poly.cells.index(target))

import pytest
from hypothesis import strategies as st

from klarner.lattice import NEIGHBOR_OFFSETS

ACCEPTANCE_LINES: list[str] = []


@st.composite
def connected_cells(draw, min_size=1, max_size=10):
    """A random edge-connected cell set, grown one neighbor at a time."""
    n = draw(st.integers(min_size, max_size))
    cells = {(0, 0)}
    while len(cells) < n:
        frontier = sorted(
            {(x + dx, y + dy) for x, y in cells for dx, dy in NEIGHBOR_OFFSETS} - cells
        )
        cells.add(frontier[draw(st.integers(0, len(frontier) - 1))])
    ox = draw(st.integers(-50, 50))
    oy = draw(st.integers(-50, 50))
    return frozenset((x + ox, y + oy) for x, y in cells)


@pytest.fixture
def acceptance():
    def record(number: int, text: str, ok: bool) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

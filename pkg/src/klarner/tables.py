from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

LABEL_BASE = {"A": 1, "f": 0, "g": 0, "F": 0, "G": 0}


@dataclass(frozen=True)
class CountTable:
    """Exact integer sequence on the contiguous range ``base .. max_n``.

    ``label`` is one of A, f, g, F, G and fixes the starting index.
    """

    label: str
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.label not in LABEL_BASE:
            raise ValueError(f"unknown table label {self.label!r}")
        if not self.values:
            raise ValueError("table must hold at least one value")
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"table {self.label} holds invalid value {v!r}")

    @classmethod
    def from_mapping(cls, label: str, mapping: Mapping[int, int]) -> CountTable:
        base = LABEL_BASE.get(label)
        if base is None:
            raise ValueError(f"unknown table label {label!r}")
        keys = sorted(mapping)
        if keys != list(range(base, base + len(keys))):
            raise ValueError(f"table {label} is not contiguous from {base}")
        return cls(label, tuple(mapping[k] for k in keys))

    @property
    def base(self) -> int:
        return LABEL_BASE[self.label]

    @property
    def max_n(self) -> int:
        return self.base + len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not self.base <= n <= self.max_n:
            raise KeyError(f"{self.label}({n}) is outside {self.base}..{self.max_n}")
        return self.values[n - self.base]

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and self.base <= n <= self.max_n

    def items(self) -> Iterator[tuple[int, int]]:
        return enumerate(self.values, start=self.base)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    def prefix(self, max_n: int) -> CountTable:
        if max_n > self.max_n:
            raise KeyError(f"table {self.label} only reaches {self.max_n}")
        return CountTable(self.label, self.values[: max_n - self.base + 1])

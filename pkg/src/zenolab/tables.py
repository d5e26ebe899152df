"""Rectangular numeric tables with metadata, the common output currency."""

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError


@dataclass
class DataTable:
    """Named columns over homogeneous numeric rows.

    ``metadata`` carries run context (experiment tag, units, mode flags)
    that the emitters write into file headers.  Cells may be int, float
    or str; every row must match the column count.
    """

    columns: Sequence[str]
    rows: list
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise DomainError(
                    f"row {i} has {len(row)} cells, expected {len(self.columns)}")

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> list:
        try:
            j = list(self.columns).index(name)
        except ValueError:
            raise DomainError(f"no column named {name!r}") from None
        return [row[j] for row in self.rows]

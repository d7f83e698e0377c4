"""The monitoring table: one row per subformula, one column per sample."""

from __future__ import annotations

import numpy as np

UNSET = -1


class UnsetCellError(RuntimeError):
    """A cell was read before the current pass wrote it."""


class ColumnOrderError(RuntimeError):
    """A pass wrote a column left of its instantiation point."""


class MonitoringTable:
    """Tri-state boolean matrix indexed ``table[j, u]`` with 1-based rows.

    Cells hold ``-1`` (unset), ``0`` or ``1``. A *strict* table additionally
    checks evaluation order: during a pass started with :meth:`begin_pass`,
    rows declared fresh may only be read at cells written in that same pass,
    and no write may land left of the pass's floor column.
    """

    def __init__(self, n_rows: int, n_cols: int, strict: bool = False, cells=None):
        if cells is None:
            cells = np.full((n_rows + 1, n_cols), UNSET, dtype=np.int8)
        self.cells = cells
        self.writes = 0
        self.strict = strict
        self._fresh = frozenset()
        self._floor = 0
        self._epoch = 0
        if strict:
            self._stamp = np.zeros(cells.shape, dtype=np.int64)

    @property
    def n_rows(self) -> int:
        return self.cells.shape[0] - 1

    @property
    def n_cols(self) -> int:
        return self.cells.shape[1]

    def begin_pass(self, fresh_rows=(), floor: int = 0) -> None:
        self._epoch += 1
        self._fresh = frozenset(fresh_rows)
        self._floor = floor

    def __getitem__(self, key) -> bool:
        j, u = key
        value = self.cells[j, u]
        if value == UNSET:
            raise UnsetCellError(f"cell [{j}, {u}] read before it was written")
        if self.strict and j in self._fresh and self._stamp[j, u] != self._epoch:
            raise UnsetCellError(f"cell [{j}, {u}] read with a value from an earlier pass")
        return bool(value)

    def __setitem__(self, key, value) -> None:
        j, u = key
        if self.strict:
            if u < self._floor:
                raise ColumnOrderError(f"write to column {u} during a pass starting at {self._floor}")
            self._stamp[j, u] = self._epoch
        self.cells[j, u] = 1 if value else 0
        self.writes += 1

    def is_set(self, j: int, u: int) -> bool:
        return self.cells[j, u] != UNSET

    def row(self, j: int) -> list:
        """Row ``j`` as a list of ``True``/``False``/``None`` (unset)."""
        return [None if v == UNSET else bool(v) for v in self.cells[j]]

    def to_array(self) -> np.ndarray:
        """Rows ``1..n`` as an int8 array (row 0 of the result is row 1)."""
        return self.cells[1:].copy()

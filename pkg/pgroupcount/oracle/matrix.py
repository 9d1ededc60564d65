"""Square integer matrices with exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    """``s x s`` matrix of Python integers, stored row-major as nested tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError(f"IntMatrix must be square and non-empty, got {len(rows)} rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, s: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(s)) for i in range(s)))

    @classmethod
    def diag(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def s(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows))

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> IntMatrix:
        return IntMatrix(tuple(tuple(self.rows[i][j] for j in col_order) for i in row_order))

    def entries(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        a = [list(row) for row in self.rows]
        n, sign, prev = self.s, 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.rows) + "]"


def solve_lower(h: IntMatrix, b: IntMatrix) -> IntMatrix | None:
    """Integer ``X`` with ``X @ h == b`` for lower triangular ``h``, or None when ``X`` is not integral.

    Row ``x`` of ``X`` solves ``x @ h = b_row``; column ``j`` only involves ``x_i`` with ``i >= j``,
    so it is found by back substitution from the last column.
    """
    n = h.s
    rows = []
    for target in b.rows:
        x = [0] * n
        for j in range(n - 1, -1, -1):
            rest = target[j] - sum(x[i] * h.rows[i][j] for i in range(j + 1, n))
            q, rem = divmod(rest, h.rows[j][j])
            if rem:
                return None
            x[j] = q
        rows.append(tuple(x))
    return IntMatrix(tuple(rows))

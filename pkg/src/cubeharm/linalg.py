"""Exact Gaussian elimination over the rationals.

Matrices are plain sequences of rows of Fractions.  Solving reports
inconsistency and underdetermination through dedicated exceptions so
callers can tell a bad system apart from an internal bug.
"""

from fractions import Fraction

__all__ = [
    "LinearSystemError",
    "InconsistentSystemError",
    "UnderdeterminedSystemError",
    "solve_or_rank",
    "rank",
    "RowBasis",
]


class LinearSystemError(ValueError):
    pass


class InconsistentSystemError(LinearSystemError):
    """The system has no solution."""


class UnderdeterminedSystemError(LinearSystemError):
    """The system has more than one solution."""


def _as_rows(matrix):
    rows = [[c if isinstance(c, Fraction) else Fraction(c) for c in row] for row in matrix]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
    return rows


def solve_or_rank(matrix, rhs=None):
    """Return the rank of `matrix`, or the unique solution of matrix * x = rhs.

    Raises InconsistentSystemError when no solution exists and
    UnderdeterminedSystemError when the solution is not unique.
    """
    rows = _as_rows(matrix)
    if not rows:
        if rhs is not None:
            raise ValueError("cannot solve an empty system")
        return 0
    ncols = len(rows[0])
    augmented = rhs is not None
    if augmented:
        if len(rhs) != len(rows):
            raise ValueError("rhs length does not match row count")
        for row, b in zip(rows, rhs):
            row.append(b if isinstance(b, Fraction) else Fraction(b))

    pivot_cols = []
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = Fraction(1) / rows[pivot_row][col]
        rows[pivot_row] = [c * inv for c in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break

    if not augmented:
        return len(pivot_cols)

    for r in range(pivot_row, len(rows)):
        if rows[r][ncols]:
            raise InconsistentSystemError("no solution")
    if len(pivot_cols) < ncols:
        raise UnderdeterminedSystemError("solution is not unique")
    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivot_cols):
        solution[col] = rows[r][ncols]
    return solution


def rank(matrix):
    return solve_or_rank(matrix)


class RowBasis:
    """Incrementally maintained row-echelon basis of rational row vectors."""

    def __init__(self, width):
        self.width = width
        self._pivots = {}  # leading column -> normalized reduced row

    def _reduce(self, row):
        work = [c if isinstance(c, Fraction) else Fraction(c) for c in row]
        if len(work) != self.width:
            raise ValueError("row width mismatch")
        for col in sorted(self._pivots):
            if work[col]:
                factor = work[col]
                pivot = self._pivots[col]
                work = [a - factor * b for a, b in zip(work, pivot)]
        return work

    def add(self, row):
        """Insert a row; returns True when it was independent of the basis."""
        reduced = self._reduce(row)
        lead = next((i for i, c in enumerate(reduced) if c), None)
        if lead is None:
            return False
        inv = Fraction(1) / reduced[lead]
        self._pivots[lead] = [c * inv for c in reduced]
        return True

    def contains(self, row):
        return next((i for i, c in enumerate(self._reduce(row)) if c), None) is None

    @property
    def rank(self):
        return len(self._pivots)

"""Exact 0/1 matrix arithmetic over unbounded non-negative integers.

Two value types live here:

* :class:`SparseBinaryMatrix` — a 0/1 matrix stored as a sorted coordinate
  set.  This is the representation of every adjacency block in a layered
  topology.
* :class:`CountMatrix` — a dense grid of exact non-negative integers, used
  for path counting, where values grow geometrically and must never wrap.

All operations are pure and all types are immutable after construction, so
values can be shared freely across threads.

``count_product`` is exact by contract.  Internally it takes a float64 fast
path whenever a pre-computed bound proves that every partial sum stays below
2**53 (the range in which float64 arithmetic on integers is lossless), and
falls back to arbitrary-precision Python integers otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ShapeError, SizeOverflow

# Dimension ceiling.  Far beyond anything materialisable, but keeping every
# dimension product below 2**53 means size arithmetic survives float64
# round-trips (numpy shape handling, plotting) without loss.
MAX_DIM = 2**53

# Largest integer magnitude below which float64 add/multiply stays exact.
_FLOAT_EXACT = 2**53


@dataclass(frozen=True)
class SparseBinaryMatrix:
    """A ``rows`` x ``cols`` 0/1 matrix as a sorted tuple of (row, col) pairs.

    The constructor demands canonical form: coordinates in range, strictly
    ascending in (row, col) order, no duplicates.  Use :meth:`from_entries`
    to build from an unordered iterable.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if self.rows > MAX_DIM or self.cols > MAX_DIM:
            raise SizeOverflow(f"dimension exceeds ceiling {MAX_DIM}")
        previous = None
        for entry in self.entries:
            r, c = entry
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ShapeError(f"entry {entry} outside {self.rows}x{self.cols} matrix")
            if previous is not None and entry <= previous:
                raise ShapeError("entries must be strictly ascending in (row, col) order")
            previous = entry

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]) -> SparseBinaryMatrix:
        """Build from any iterable of coordinates; duplicates collapse to one."""
        canonical = tuple(sorted(set((int(r), int(c)) for r, c in entries)))
        return cls(rows, cols, canonical)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def row_degrees(self) -> list[int]:
        degrees = [0] * self.rows
        for r, _ in self.entries:
            degrees[r] += 1
        return degrees

    def col_degrees(self) -> list[int]:
        degrees = [0] * self.cols
        for _, c in self.entries:
            degrees[c] += 1
        return degrees

    def to_bool_array(self) -> np.ndarray:
        """Dense boolean view; intended for plotting and small-scale checks."""
        dense = np.zeros((self.rows, self.cols), dtype=bool)
        for r, c in self.entries:
            dense[r, c] = True
        return dense


@dataclass(frozen=True)
class CountMatrix:
    """Dense matrix of exact non-negative integers (arbitrary precision)."""

    rows: int
    cols: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.values) != self.rows:
            raise ShapeError(f"expected {self.rows} rows, got {len(self.values)}")
        for row in self.values:
            if len(row) != self.cols:
                raise ShapeError(f"expected {self.cols} columns, got {len(row)}")
            for v in row:
                if v < 0:
                    raise ShapeError(f"count values must be non-negative, got {v}")

    @classmethod
    def from_rows(cls, rows_of_values: Iterable[Iterable[int]]) -> CountMatrix:
        values = tuple(tuple(int(v) for v in row) for row in rows_of_values)
        if not values:
            raise ShapeError("a count matrix needs at least one row")
        return cls(len(values), len(values[0]), values)

    def min_value(self) -> int:
        return min(min(row) for row in self.values)

    def max_value(self) -> int:
        return max(max(row) for row in self.values)

    def total(self) -> int:
        return sum(sum(row) for row in self.values)


def identity(n: int) -> SparseBinaryMatrix:
    """The n x n identity as a sparse 0/1 matrix."""
    return SparseBinaryMatrix(n, n, tuple((i, i) for i in range(n)))


def ones(rows: int, cols: int) -> SparseBinaryMatrix:
    """The all-ones rows x cols matrix (a fully dense block)."""
    return SparseBinaryMatrix(rows, cols, tuple((r, c) for r in range(rows) for c in range(cols)))


def cyclic_shift(n: int, power: int) -> SparseBinaryMatrix:
    """The n x n permutation matrix with a 1 at (u, v) iff v == u + power (mod n).

    Orientation convention, fixed for bit-exact output everywhere in this
    package: the shift maps node u *forward* to node (u + power) mod n, i.e.
    the 1s sit on the +power wrapped off-diagonal.  The transposed (backward)
    convention would produce an isomorphic topology under node relabelling;
    we never use it.

    ``power`` is reduced mod n, so ``cyclic_shift(n, 0)`` is the identity and
    powers cycle with period n.  Negative powers are rejected: the layered
    construction only ever steps forward.
    """
    if n < 1:
        raise ShapeError(f"cyclic shift needs n >= 1, got {n}")
    if power < 0:
        raise ValueError(f"cyclic shift power must be non-negative, got {power}")
    k = power % n
    return SparseBinaryMatrix(n, n, tuple((u, (u + k) % n) for u in range(n)))


def kronecker(a: SparseBinaryMatrix, b: SparseBinaryMatrix) -> SparseBinaryMatrix:
    """Kronecker product: a copy of ``b`` at every nonzero of ``a``.

    Entry ((ra * b.rows + rb), (ca * b.cols + cb)) is present iff (ra, ca) is
    in ``a`` and (rb, cb) is in ``b``; the entry count is exactly
    ``a.nnz * b.nnz``.
    """
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    if rows > MAX_DIM or cols > MAX_DIM:
        raise SizeOverflow(f"kronecker result {rows}x{cols} exceeds dimension ceiling {MAX_DIM}")
    br, bc = b.rows, b.cols
    entries = sorted(
        (ra * br + rb, ca * bc + cb)
        for ra, ca in a.entries
        for rb, cb in b.entries
    )
    return SparseBinaryMatrix(rows, cols, tuple(entries))


def to_counts(m: SparseBinaryMatrix) -> CountMatrix:
    """Reinterpret a 0/1 matrix as a count matrix (1 at entries, 0 elsewhere)."""
    grid = [[0] * m.cols for _ in range(m.rows)]
    for r, c in m.entries:
        grid[r][c] = 1
    return CountMatrix(m.rows, m.cols, tuple(tuple(row) for row in grid))


def count_product(a: CountMatrix, b: CountMatrix) -> CountMatrix:
    """Exact integer matrix product, no modular reduction, never wraps."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    a_max = a.max_value()
    b_max = b.max_value()
    if a_max == 0 or b_max == 0:
        zero_row = (0,) * b.cols
        return CountMatrix(a.rows, b.cols, tuple(zero_row for _ in range(a.rows)))
    # Every output value is a sum of a.cols products bounded by a_max * b_max;
    # if the total bound stays below 2**53, float64 evaluation is lossless.
    if a.cols * a_max * b_max < _FLOAT_EXACT:
        fa = np.array(a.values, dtype=np.float64)
        fb = np.array(b.values, dtype=np.float64)
        product = (fa @ fb).astype(np.int64)
        return CountMatrix(a.rows, b.cols, tuple(map(tuple, product.tolist())))
    return _count_product_exact(a, b)


def _count_product_exact(a: CountMatrix, b: CountMatrix) -> CountMatrix:
    """Pure-Python product over arbitrary-precision integers."""
    out = []
    for row in a.values:
        acc = [0] * b.cols
        for k, v in enumerate(row):
            if v == 0:
                continue
            b_row = b.values[k]
            if v == 1:
                acc = [x + y for x, y in zip(acc, b_row)]
            else:
                acc = [x + v * y for x, y in zip(acc, b_row)]
        out.append(tuple(acc))
    return CountMatrix(a.rows, b.cols, tuple(out))

"""Exact verification of layered topologies: path counts, symmetry, density.

Everything here works in integers and exact rationals.  The guarantees being
checked are combinatorial identities; floating-point tolerance could mask a
genuine off-by-a-factor error in a closed form, so none is used.

Two independent path-counting routes exist on purpose:

* :func:`path_count_matrix` — the ordered product of the adjacency blocks,
  evaluated exactly (internally via a certified float64 fast path with an
  arbitrary-precision fallback, see :mod:`radixnet.matrix`);
* :func:`enumerate_paths` — literal depth-first enumeration that walks every
  individual path.  Feasible only for small path totals; used to cross-check
  the matrix route, never to replace it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse

from .errors import ShapeError
from .matrix import CountMatrix, SparseBinaryMatrix, _FLOAT_EXACT, count_product, to_counts
from .topology import (
    LayeredTopology,
    RadixNetSpec,
    printed_path_count,
    theoretical_density,
    theoretical_path_count,
)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of verifying one built topology against its spec.

    ``printed_eq5_value`` carries the uncorrected closed-form path count (the
    originally published expression) next to the corrected
    ``theoretical_path_count``, so exports document the discrepancy instead
    of hiding it.  Field semantics:

    * symmetric means every input/output pair has the same number of paths
      (min == max), which in turn implies path-connectedness;
    * densities are exact rationals and must match exactly for a valid build.
    """

    path_count_min: int
    path_count_max: int
    is_symmetric: bool
    is_path_connected: bool
    measured_density: Fraction
    theoretical_density: Fraction
    theoretical_path_count: int
    printed_eq5_value: int
    fnnt_valid: bool

    def failures(self) -> list[str]:
        """Names of every failed check; empty when the topology verifies."""
        problems = []
        if not self.fnnt_valid:
            problems.append("feedforward conditions violated (zero row/column or broken chain)")
        if not self.is_path_connected:
            problems.append("not path-connected (some input/output pair has no path)")
        if not self.is_symmetric:
            problems.append(
                f"not symmetric (path counts range {self.path_count_min}..{self.path_count_max})"
            )
        if self.measured_density != self.theoretical_density:
            problems.append(
                f"density mismatch (measured {self.measured_density}, "
                f"closed form {self.theoretical_density})"
            )
        if self.path_count_min != self.theoretical_path_count:
            problems.append(
                f"path count mismatch (enumerated {self.path_count_min}, "
                f"closed form {self.theoretical_path_count})"
            )
        return problems

    @property
    def passed(self) -> bool:
        return not self.failures()

    @property
    def printed_formula_agrees(self) -> bool:
        """Whether the uncorrected closed form happens to match the oracle."""
        return self.printed_eq5_value == self.path_count_min == self.path_count_max


def check_fnnt(topology: LayeredTopology) -> bool:
    """True iff the blocks chain correctly and no row or column is zero.

    These are exactly the feedforward conditions: dimensions must match the
    declared layer sizes, every non-output node needs out-degree >= 1, and
    every non-input node needs in-degree >= 1.
    """
    sizes = topology.layer_sizes
    for i, m in enumerate(topology.submatrices):
        if m.rows != sizes[i] or m.cols != sizes[i + 1]:
            return False
        if any(d == 0 for d in m.row_degrees()):
            return False
        if any(d == 0 for d in m.col_degrees()):
            return False
    return True


def _max_col_degree(m: SparseBinaryMatrix) -> int:
    degrees = m.col_degrees()
    return max(degrees) if degrees else 0


def _csr(m: SparseBinaryMatrix) -> scipy.sparse.csr_array:
    if m.entries:
        rows, cols = zip(*m.entries)
    else:
        rows, cols = (), ()
    data = np.ones(len(m.entries), dtype=np.float64)
    return scipy.sparse.csr_array((data, (rows, cols)), shape=(m.rows, m.cols))


def _exact_rows(current: list[list[int]], m: SparseBinaryMatrix) -> list[list[int]]:
    """One arbitrary-precision step of the chain: current @ m, column-wise."""
    n_rows = len(current)
    out = [[0] * m.cols for _ in range(n_rows)]
    for k, j in m.entries:
        for i in range(n_rows):
            v = current[i][k]
            if v:
                out[i][j] += v
    return out


def path_count_matrix(topology: LayeredTopology) -> CountMatrix:
    """Exact per-pair path counts: the ordered product of all blocks as counts.

    Entry (u, v) is the number of directed paths from input node u to output
    node v.  Mathematically identical to folding
    :func:`radixnet.matrix.count_product` over the block chain; evaluated
    with a per-step certified float64 bound (every partial sum provably
    below 2**53) and an exact big-integer fallback once counts outgrow it.
    """
    mats = topology.submatrices
    current = None  # float64 ndarray while certified, list-of-int-lists after
    exact: list[list[int]] | None = None
    current_max = 0
    for m in mats:
        if current is None:
            current = _csr(m).toarray()
            current_max = int(current.max()) if current.size else 0
            continue
        if exact is None:
            if current.shape[1] != m.rows:
                raise ShapeError(
                    f"block chain broken: {current.shape[1]} columns feed {m.rows} rows"
                )
            bound = current_max * _max_col_degree(m)
            if bound < _FLOAT_EXACT:
                current = current @ _csr(m)
                current_max = int(current.max())
                continue
            exact = [[int(v) for v in row] for row in current.tolist()]
        else:
            if len(exact[0]) != m.rows:
                raise ShapeError(
                    f"block chain broken: {len(exact[0])} columns feed {m.rows} rows"
                )
        exact = _exact_rows(exact, m)
    if exact is not None:
        return CountMatrix.from_rows(exact)
    as_int = current.astype(np.int64)
    return CountMatrix(as_int.shape[0], as_int.shape[1], tuple(map(tuple, as_int.tolist())))


def path_count_matrix_by_products(topology: LayeredTopology) -> CountMatrix:
    """Reference form of :func:`path_count_matrix`: a plain count_product fold."""
    result = to_counts(topology.submatrices[0])
    for m in topology.submatrices[1:]:
        result = count_product(result, to_counts(m))
    return result


def enumerate_paths(topology: LayeredTopology, max_paths: int | None = None) -> CountMatrix:
    """Count paths by walking every one of them individually (DFS).

    Independent of the matrix-product route by design: no memoization, no
    algebra, just literal traversal.  Raises ``ValueError`` once more than
    ``max_paths`` complete paths have been walked, since enumeration cost is
    proportional to the total path count.
    """
    adjacency = []
    for m in topology.submatrices:
        nexts: list[list[int]] = [[] for _ in range(m.rows)]
        for r, c in m.entries:
            nexts[r].append(c)
        adjacency.append(nexts)
    n_in = topology.submatrices[0].rows
    n_out = topology.submatrices[-1].cols
    counts = [[0] * n_out for _ in range(n_in)]
    last = len(adjacency)
    walked = 0

    def walk(layer: int, node: int, start: int) -> None:
        nonlocal walked
        if layer == last:
            walked += 1
            if max_paths is not None and walked > max_paths:
                raise ValueError(f"more than {max_paths} paths; enumeration aborted")
            counts[start][node] += 1
            return
        for nxt in adjacency[layer][node]:
            walk(layer + 1, nxt, start)

    for u in range(n_in):
        walk(0, u, u)
    return CountMatrix.from_rows(counts)


def verify(topology: LayeredTopology, spec: RadixNetSpec) -> VerificationReport:
    """Fill a full report for a topology built from ``spec``.

    Value-level disagreements (density or path-count mismatch, asymmetry)
    never raise; they are recorded in the report and surfaced through
    :meth:`VerificationReport.failures`.  Structural impossibilities (a
    block chain whose dimensions cannot be multiplied at all) do raise,
    since no count matrix exists to report about.
    """
    counts = path_count_matrix(topology)
    lo = counts.min_value()
    hi = counts.max_value()
    measured = Fraction(topology.edge_count, topology.dense_edge_count)
    return VerificationReport(
        path_count_min=lo,
        path_count_max=hi,
        is_symmetric=lo == hi,
        is_path_connected=lo >= 1,
        measured_density=measured,
        theoretical_density=theoretical_density(spec),
        theoretical_path_count=theoretical_path_count(spec),
        printed_eq5_value=printed_path_count(spec),
        fnnt_valid=check_fnnt(topology),
    )

"""Layered sparse topology construction from mixed-radix systems.

The construction has two stages:

1. Each mixed-radix system (N1, ..., NL) induces L adjacency blocks on a
   fixed per-layer node count: block i connects node u forward to
   u + n * place_value(i) (mod node_count) for n in {0, ..., Ni - 1}, i.e.
   it is the sum of cyclic shifts P**(n * place_value(i)).  Consecutive
   systems are chained by identifying the output nodes of one with the
   input nodes of the next, label-wise.
2. Each chained block W_k is widened by a Kronecker product with the dense
   all-ones block ones(D[k-1], D[k]) taken from the dense-width list, which
   scales layer k's node count from node_count to D[k] * node_count.

Every system in the chain is built on the same ambient node count: the
shared product of the leading systems.  The trailing system's product only
has to divide that count (it then wraps around the larger layer using its
own place values).  This is the only reading under which label-wise
identification of adjacent layers is well-defined.

Closed forms for the resulting network's density and per-pair path count
live here too; the verification module checks them against exact
enumeration rather than trusting them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import DenseWidthWarning, SizeOverflow, SpecError
from .matrix import MAX_DIM, SparseBinaryMatrix, kronecker, ones
from .mixed_radix import MixedRadixSystem


@dataclass(frozen=True)
class RadixNetSpec:
    """Full parameterization of one network: systems plus dense widths.

    ``systems`` is the ordered list of mixed-radix systems; ``dense_widths``
    has one entry per node layer (total radix count + 1 of them).

    Constraints, all collected into a single :class:`SpecError` when violated:

    * at least one system;
    * all systems except the last share one product (the ambient per-layer
      node count); with a single system, its product is the node count;
    * the last system's product divides the node count;
    * dense widths: correct length, every width >= 1.

    A width >= node count is legal but defeats sparsity, so it raises
    :class:`DenseWidthWarning` instead of an error.
    """

    systems: tuple[MixedRadixSystem, ...]
    dense_widths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "systems", tuple(self.systems))
        object.__setattr__(self, "dense_widths", tuple(int(w) for w in self.dense_widths))
        violations = self._violations()
        if violations:
            raise SpecError(violations)
        node_count = self.node_count
        for i, w in enumerate(self.dense_widths):
            if w >= node_count:
                warnings.warn(
                    f"dense width D{i} = {w} is not small relative to the "
                    f"per-layer node count {node_count}; the network will not be sparse",
                    DenseWidthWarning,
                    stacklevel=2,
                )

    def _violations(self) -> list[str]:
        problems: list[str] = []
        if not self.systems:
            problems.append("at least one mixed-radix system is required")
            return problems
        leading = self.systems[:-1] or self.systems[:1]
        node_count = leading[0].product
        for i, system in enumerate(self.systems[:-1], start=1):
            if system.product != node_count:
                problems.append(
                    f"product mismatch: system {i} has product {system.product}, expected {node_count}"
                )
        last = self.systems[-1]
        if len(self.systems) > 1 and node_count % last.product != 0:
            problems.append(
                f"product mismatch: system {len(self.systems)} has product {last.product}, "
                f"which does not divide {node_count}"
            )
        expected_widths = self.edge_layer_count + 1
        if len(self.dense_widths) != expected_widths:
            problems.append(
                f"dense_widths has length {len(self.dense_widths)}, expected {expected_widths} "
                f"(one more than the total radix count)"
            )
        for i, w in enumerate(self.dense_widths):
            if w < 1:
                problems.append(f"dense width D{i} must be >= 1, got {w}")
        for i, w in enumerate(self.dense_widths):
            if w * node_count > MAX_DIM:
                problems.append(f"layer {i} size {w} * {node_count} exceeds dimension ceiling {MAX_DIM}")
        return problems

    @property
    def node_count(self) -> int:
        """Ambient per-layer node count before dense widening."""
        return self.systems[0].product

    @property
    def system_count(self) -> int:
        return len(self.systems)

    @property
    def edge_layer_count(self) -> int:
        """Total radix count across all systems: one adjacency block each."""
        return sum(len(s) for s in self.systems)

    @property
    def flat_radices(self) -> tuple[int, ...]:
        """All radices in chain order."""
        return tuple(r for s in self.systems for r in s.radices)

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(w * self.node_count for w in self.dense_widths)


@dataclass(frozen=True)
class LayeredTopology:
    """An ordered chain of adjacency blocks plus per-layer node counts.

    The constructor only checks shape bookkeeping (one more layer size than
    blocks, positive sizes).  Whether the blocks actually chain and whether
    every row/column is nonzero is the job of
    :func:`radixnet.verification.check_fnnt`, so that defective chains remain
    representable and checkable.  Everything :func:`build_radix_net` returns
    satisfies the full feedforward conditions by construction.
    """

    layer_sizes: tuple[int, ...]
    submatrices: tuple[SparseBinaryMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "layer_sizes", tuple(int(s) for s in self.layer_sizes))
        object.__setattr__(self, "submatrices", tuple(self.submatrices))
        if not self.submatrices:
            raise SpecError("a layered topology needs at least one adjacency block")
        if len(self.layer_sizes) != len(self.submatrices) + 1:
            raise SpecError(
                f"{len(self.submatrices)} blocks need {len(self.submatrices) + 1} layer sizes, "
                f"got {len(self.layer_sizes)}"
            )
        for i, size in enumerate(self.layer_sizes):
            if size < 1:
                raise SpecError(f"layer {i} size must be >= 1, got {size}")

    @classmethod
    def from_submatrices(cls, submatrices) -> LayeredTopology:
        """Derive layer sizes from a chain of blocks whose dimensions agree."""
        mats = tuple(submatrices)
        if not mats:
            raise SpecError("a layered topology needs at least one adjacency block")
        sizes = [mats[0].rows]
        for i, m in enumerate(mats):
            if m.rows != sizes[-1]:
                raise SpecError(f"block {i} has {m.rows} rows, previous layer has {sizes[-1]} nodes")
            sizes.append(m.cols)
        return cls(tuple(sizes), mats)

    @property
    def edge_count(self) -> int:
        return sum(m.nnz for m in self.submatrices)

    @property
    def dense_edge_count(self) -> int:
        """Edge count of the fully connected network on the same layer sizes."""
        return sum(a * b for a, b in zip(self.layer_sizes, self.layer_sizes[1:]))


def build_mixed_radix_layers(system: MixedRadixSystem, node_count: int) -> list[SparseBinaryMatrix]:
    """Adjacency blocks of one system's topology on ``node_count`` nodes per layer.

    Block i (node_count x node_count) holds an edge u -> v exactly when
    v == u + n * place_value(i) (mod node_count) for some n in
    {0, ..., radix_i - 1}.  The system's product must divide ``node_count``;
    that guarantees the n shifts are pairwise distinct, so every row and
    every column of block i has exactly radix_i entries.
    """
    if node_count < 1:
        raise SpecError(f"node count must be >= 1, got {node_count}")
    if node_count % system.product != 0:
        raise SpecError(
            f"system product {system.product} does not divide node count {node_count}"
        )
    blocks = []
    place = 1
    for radix in system.radices:
        entries = []
        for u in range(node_count):
            row = sorted((u + n * place) % node_count for n in range(radix))
            entries.extend((u, v) for v in row)
        blocks.append(SparseBinaryMatrix(node_count, node_count, tuple(entries)))
        place *= radix
    return blocks


def build_radix_net(spec: RadixNetSpec) -> LayeredTopology:
    """Construct the full widened topology a spec describes.

    Chains every system's blocks on the shared node count, then widens block
    k by ``kronecker(ones(D[k-1], D[k]), block_k)``.  Layer k ends up with
    ``D[k] * node_count`` nodes and block k with
    ``D[k-1] * D[k] * node_count * radix_k`` edges.  Output is deterministic:
    equal specs produce identical entry lists.
    """
    node_count = spec.node_count
    chained: list[SparseBinaryMatrix] = []
    for system in spec.systems:
        chained.extend(build_mixed_radix_layers(system, node_count))
    widths = spec.dense_widths
    submatrices = []
    for k, block in enumerate(chained):
        dense = ones(widths[k], widths[k + 1])
        submatrices.append(kronecker(dense, block))
    return LayeredTopology(spec.layer_sizes(), tuple(submatrices))


def theoretical_density(spec: RadixNetSpec) -> Fraction:
    """Closed-form edge density as an exact reduced fraction.

    Equals the realized edge count divided by the edge count of the dense
    network on the same layer sizes:
    sum(radix_k * D[k-1] * D[k]) / (node_count * sum(D[k-1] * D[k])).
    """
    radices = spec.flat_radices
    widths = spec.dense_widths
    pair_products = [widths[k] * widths[k + 1] for k in range(len(radices))]
    numerator = sum(r * p for r, p in zip(radices, pair_products))
    denominator = spec.node_count * sum(pair_products)
    return Fraction(numerator, denominator)


def approximate_density(spec: RadixNetSpec) -> Fraction:
    """Mean radix divided by node count; exact when all widths are equal.

    Returned as an exact rational (mean(radices) / node_count) rather than a
    float, so the algebraic identity with :func:`theoretical_density` for
    constant widths holds with zero tolerance.  For widths of small variance
    it remains a close approximation.
    """
    radices = spec.flat_radices
    return Fraction(sum(radices), len(radices) * spec.node_count)


def theoretical_path_count(spec: RadixNetSpec) -> int:
    """Number of directed paths joining each input/output node pair.

    Corrected closed form: with M systems sharing node count N and interior
    dense widths D[1..last-1],

        N ** (M - 2) * product(last system's radices) * product(interior widths).

    For a single system the N factors cancel and the count is just the
    product of the interior widths.  The original closed form used the total
    radix count in the exponent instead of the system count; exhaustive
    enumeration contradicts it (see :func:`printed_path_count`, which is kept
    so reports can show both values side by side).
    """
    interior = math.prod(spec.dense_widths[1:-1]) if spec.edge_layer_count > 1 else 1
    if spec.system_count == 1:
        return interior
    last_product = spec.systems[-1].product
    return spec.node_count ** (spec.system_count - 2) * last_product * interior


def printed_path_count(spec: RadixNetSpec) -> int:
    """The uncorrected closed-form path count, kept for transparent reporting.

    Uses the total radix count (number of edge layers) in the exponent where
    :func:`theoretical_path_count` uses the system count.  The two agree only
    when every system has a single radix.  Enumeration shows this form is
    wrong in general — e.g. a single (2, 2, 2) system with unit widths has
    exactly one path per pair, not 64 — but reports carry it alongside the
    corrected value rather than discarding it silently.
    """
    interior = math.prod(spec.dense_widths[1:-1]) if spec.edge_layer_count > 1 else 1
    last_product = spec.systems[-1].product
    value = Fraction(spec.node_count) ** (spec.edge_layer_count - 2) * last_product * interior
    # Negative exponents only occur for a single one-radix system, where the
    # node-count factors cancel exactly.
    assert value.denominator == 1
    return int(value)

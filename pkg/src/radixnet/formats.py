"""Spec documents and deterministic on-disk formats.

Input: a UTF-8 JSON document with two keys,

    {"radix_systems": [[2, 2, 2]], "dense_widths": [1, 1, 1, 1]}

Outputs:

* Matrix Market — one ``coordinate pattern`` file per adjacency block,
  ``layer_0001.mtx`` onward, indices 1-based (format convention; everything
  else in this package is 0-based), entries ascending by (row, col).
* TSV — a single ``edges.tsv`` with header ``layer<TAB>source<TAB>target``,
  0-based within-layer node indices, rows ascending by (layer, source,
  target).
* Report — a JSON document with a fixed key order; exact rationals are
  serialized as ``"num/den"`` strings so generic JSON consumers cannot
  silently round them.

All writers emit LF line endings and a trailing newline, and are
byte-deterministic for a given topology.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from .errors import ParseError, SpecError
from .matrix import SparseBinaryMatrix
from .mixed_radix import MixedRadixSystem
from .topology import LayeredTopology, RadixNetSpec, approximate_density
from .verification import VerificationReport

MATRIX_MARKET_HEADER = "%%MatrixMarket matrix coordinate pattern general"
TSV_HEADER = "layer\tsource\ttarget"

_FORMAT_ALIASES = {
    "tsv": "tsv",
    "mm": "matrix-market",
    "matrix-market": "matrix-market",
}


def _is_int(value) -> bool:
    # bool is an int subclass in Python; JSON true/false must not pass as counts.
    return isinstance(value, int) and not isinstance(value, bool)


def parse_spec(text: str) -> RadixNetSpec:
    """Parse and validate a spec document.

    Malformed JSON raises :class:`ParseError` with line/column; a
    syntactically fine document that violates constraints raises
    :class:`SpecError` whose ``violations`` list names every problem found,
    not just the first.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from None

    problems: list[str] = []
    if not isinstance(doc, dict):
        raise SpecError("top-level document must be a JSON object")

    systems_raw = doc.get("radix_systems")
    if systems_raw is None:
        problems.append("missing key: radix_systems")
    elif not isinstance(systems_raw, list) or not systems_raw:
        problems.append("radix_systems must be a non-empty list of radix lists")
    else:
        for i, system in enumerate(systems_raw, start=1):
            if not isinstance(system, list) or not system:
                problems.append(f"system {i} must be a non-empty list of integers")
                continue
            for j, radix in enumerate(system, start=1):
                if not _is_int(radix):
                    problems.append(f"system {i}, radix {j}: expected an integer, got {radix!r}")
                elif radix < 2:
                    problems.append(f"system {i}, radix {j}: radices must be >= 2, got {radix}")

    widths_raw = doc.get("dense_widths")
    if widths_raw is None:
        problems.append("missing key: dense_widths")
    elif not isinstance(widths_raw, list) or not widths_raw:
        problems.append("dense_widths must be a non-empty list of integers")
    else:
        for i, width in enumerate(widths_raw):
            if not _is_int(width):
                problems.append(f"dense width D{i}: expected an integer, got {width!r}")

    if problems:
        raise SpecError(problems)

    systems = tuple(MixedRadixSystem(tuple(s)) for s in systems_raw)
    return RadixNetSpec(systems, tuple(widths_raw))


def load_spec(path: str | os.PathLike) -> RadixNetSpec:
    """Read and parse a spec file."""
    return parse_spec(Path(path).read_text(encoding="utf-8"))


def _matrix_market_text(m: SparseBinaryMatrix) -> str:
    lines = [MATRIX_MARKET_HEADER, f"{m.rows} {m.cols} {m.nnz}"]
    lines.extend(f"{r + 1} {c + 1}" for r, c in m.entries)
    return "\n".join(lines) + "\n"


def _edges_tsv_text(topology: LayeredTopology) -> str:
    lines = [TSV_HEADER]
    for layer, m in enumerate(topology.submatrices):
        lines.extend(f"{layer}\t{r}\t{c}" for r, c in m.entries)
    return "\n".join(lines) + "\n"


def export_layers(topology: LayeredTopology, fmt: str, destination: str | os.PathLike) -> list[Path]:
    """Write a topology's adjacency blocks and return the file manifest.

    ``fmt`` is ``"tsv"`` or ``"mm"``/``"matrix-market"``.  Output is
    byte-deterministic.  On any I/O failure the files already written are
    removed before the error propagates, so a destination never holds a
    partial export.
    """
    try:
        kind = _FORMAT_ALIASES[fmt]
    except KeyError:
        raise ValueError(f"unknown export format {fmt!r}; use 'tsv' or 'mm'") from None
    dest = Path(destination)
    dest.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    try:
        if kind == "tsv":
            target = dest / "edges.tsv"
            target.write_text(_edges_tsv_text(topology), encoding="utf-8", newline="\n")
            written.append(target)
        else:
            for k, m in enumerate(topology.submatrices, start=1):
                target = dest / f"layer_{k:04d}.mtx"
                target.write_text(_matrix_market_text(m), encoding="utf-8", newline="\n")
                written.append(target)
    except OSError:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return written


def _rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def export_report(report: VerificationReport, spec: RadixNetSpec) -> str:
    """Render a verification report as a JSON document with fixed key order.

    Rationals become ``"num/den"`` strings, counts stay integers, and the
    document round-trips through any JSON parser without precision loss.
    """
    sizes = spec.layer_sizes()
    dense_edges = sum(a * b for a, b in zip(sizes, sizes[1:]))
    edge_count = report.measured_density * dense_edges
    assert edge_count.denominator == 1
    doc = {
        "layer_sizes": list(sizes),
        "edge_count": int(edge_count),
        "density_exact": _rational(report.measured_density),
        "density_float": float(report.measured_density),
        "density_approx_mu_over_Nprime": _rational(approximate_density(spec)),
        "path_count": report.path_count_min,
        "printed_eq5_value": report.printed_eq5_value,
        "symmetric": report.is_symmetric,
        "path_connected": report.is_path_connected,
        "fnnt_valid": report.fnnt_valid,
    }
    return json.dumps(doc, indent=2) + "\n"


def read_matrix_market(path: str | os.PathLike) -> SparseBinaryMatrix:
    """Read one coordinate-pattern Matrix Market file back into memory."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].lower().startswith("%%matrixmarket"):
        raise ParseError(f"{path}: not a Matrix Market file")
    header = lines[0].lower().split()
    if header[1:4] != ["matrix", "coordinate", "pattern"]:
        raise ParseError(f"{path}: expected a coordinate pattern matrix")
    body = [ln for ln in lines[1:] if ln.strip() and not ln.startswith("%")]
    if not body:
        raise ParseError(f"{path}: missing size line")
    rows, cols, nnz = (int(tok) for tok in body[0].split())
    entries = []
    for ln in body[1:]:
        r, c = (int(tok) for tok in ln.split()[:2])
        entries.append((r - 1, c - 1))
    if len(entries) != nnz:
        raise ParseError(f"{path}: declared {nnz} entries, found {len(entries)}")
    return SparseBinaryMatrix.from_entries(rows, cols, entries)


def read_edges_tsv(path: str | os.PathLike) -> dict[int, tuple[tuple[int, int], ...]]:
    """Read an edge-list TSV back into per-layer sorted entry tuples."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != TSV_HEADER:
        raise ParseError(f"{path}: missing TSV header {TSV_HEADER!r}")
    layers: dict[int, list[tuple[int, int]]] = {}
    for ln in lines[1:]:
        if not ln.strip():
            continue
        layer, source, target = (int(tok) for tok in ln.split("\t"))
        layers.setdefault(layer, []).append((source, target))
    return {layer: tuple(sorted(pairs)) for layer, pairs in sorted(layers.items())}

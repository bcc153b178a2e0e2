"""Deterministic sparse layered-network topologies from mixed-radix systems.

Build, verify (exactly, in integers and rationals), and export sparse
feedforward topologies whose guarantees — symmetry, path-connectedness, and
a closed-form density — hold by construction and are re-checked per
instance rather than assumed.
"""

from .errors import (
    DenseWidthWarning,
    DigitError,
    ParseError,
    RadixNetError,
    RangeError,
    ShapeError,
    SizeOverflow,
    SpecError,
)
from .matrix import (
    CountMatrix,
    SparseBinaryMatrix,
    count_product,
    cyclic_shift,
    identity,
    kronecker,
    ones,
    to_counts,
)
from .mixed_radix import MixedRadixSystem
from .topology import (
    LayeredTopology,
    RadixNetSpec,
    approximate_density,
    build_mixed_radix_layers,
    build_radix_net,
    printed_path_count,
    theoretical_density,
    theoretical_path_count,
)
from .verification import (
    VerificationReport,
    check_fnnt,
    enumerate_paths,
    path_count_matrix,
    verify,
)
from .formats import (
    export_layers,
    export_report,
    load_spec,
    parse_spec,
    read_edges_tsv,
    read_matrix_market,
)

__version__ = "0.1.0"

__all__ = [
    "CountMatrix",
    "DenseWidthWarning",
    "DigitError",
    "LayeredTopology",
    "MixedRadixSystem",
    "ParseError",
    "RadixNetError",
    "RadixNetSpec",
    "RangeError",
    "ShapeError",
    "SizeOverflow",
    "SparseBinaryMatrix",
    "SpecError",
    "VerificationReport",
    "approximate_density",
    "build_mixed_radix_layers",
    "build_radix_net",
    "check_fnnt",
    "count_product",
    "cyclic_shift",
    "enumerate_paths",
    "export_layers",
    "export_report",
    "identity",
    "kronecker",
    "load_spec",
    "ones",
    "parse_spec",
    "path_count_matrix",
    "printed_path_count",
    "read_edges_tsv",
    "read_matrix_market",
    "theoretical_density",
    "theoretical_path_count",
    "to_counts",
    "verify",
]

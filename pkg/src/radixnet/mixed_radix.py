"""Mixed-radix numeral systems: validation, place values, encode/decode.

A system is an ordered list of radices (N1, ..., NL), every radix at least 2.
Digit i ranges over {0, ..., Ni - 1} and carries place value
prod(N1, ..., N(i-1)), so the *first* digit is the least significant one.
Digit tuples map bijectively onto {0, ..., product - 1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DigitError, RangeError, SizeOverflow
from .matrix import MAX_DIM


@dataclass(frozen=True)
class MixedRadixSystem:
    """An ordered, immutable list of radices, each >= 2."""

    radices: tuple[int, ...]

    def __post_init__(self):
        normalized = tuple(int(r) for r in self.radices)
        object.__setattr__(self, "radices", normalized)
        if not normalized:
            raise ValueError("a mixed-radix system needs at least one radix")
        for i, r in enumerate(normalized):
            if r < 2:
                raise ValueError(f"radix {i + 1} must be an integer >= 2, got {r}")
        if math.prod(normalized) > MAX_DIM:
            raise SizeOverflow(f"radix product exceeds dimension ceiling {MAX_DIM}")

    def __len__(self) -> int:
        return len(self.radices)

    @property
    def product(self) -> int:
        """The number of values the system represents: prod of all radices."""
        return math.prod(self.radices)

    def place_value(self, i: int) -> int:
        """Place value of digit position i (1-based): prod of radices before it.

        Position 1 carries the empty product, 1.
        """
        if not 1 <= i <= len(self.radices):
            raise IndexError(f"digit position {i} out of range 1..{len(self.radices)}")
        return math.prod(self.radices[: i - 1])

    def encode(self, digits: Sequence[int]) -> int:
        """Map a digit tuple to its integer value (first digit least significant)."""
        if len(digits) != len(self.radices):
            raise DigitError(f"expected {len(self.radices)} digits, got {len(digits)}")
        value = 0
        place = 1
        for i, (d, r) in enumerate(zip(digits, self.radices)):
            if not 0 <= d < r:
                raise DigitError(f"digit {i + 1} is {d}, outside 0..{r - 1}")
            value += d * place
            place *= r
        return value

    def decode(self, value: int) -> tuple[int, ...]:
        """Inverse of :meth:`encode`: the unique digit tuple for ``value``."""
        if not 0 <= value < self.product:
            raise RangeError(f"value {value} outside 0..{self.product - 1}")
        digits = []
        for r in self.radices:
            value, d = divmod(value, r)
            digits.append(d)
        return tuple(digits)

"""Compression of a bundle, its vulnerability vector, and the lexicographic order on them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Sequence

from .core import SolutionBundle
from .errors import LengthMismatch


@dataclass(frozen=True)
class Compression:
    """Layers ``layers[k-1][i] == 1`` iff component i is used by at least k vectors."""

    layers: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.layers)

    @property
    def d(self) -> int:
        return len(self.layers[0])

    def as_bundle(self) -> SolutionBundle:
        return SolutionBundle(self.layers)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for layer in self.layers for v in layer)


@total_ordering
@dataclass(frozen=True)
class VulnerabilityVector:
    """``values[k-1]`` counts the k-vulnerable components, k = 1..n.

    Ordering is the lexicographic one that compares from the last entry
    (critical count) backwards, so ``min`` returns the better vector.
    """

    values: tuple[int, ...]

    def __init__(self, values: Sequence[int]):
        object.__setattr__(self, "values", tuple(int(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def critical(self) -> int:
        return self.values[-1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __lt__(self, other):
        if not isinstance(other, VulnerabilityVector):
            return NotImplemented
        return lex_compare(self, other) < 0


def _counts(bundle) -> list[int]:
    vectors = list(bundle)
    return [sum(col) for col in zip(*vectors)]


def compress(bundle: SolutionBundle | Sequence[Sequence[int]]) -> Compression:
    counts = _counts(bundle)
    n = len(bundle)
    return Compression(tuple(tuple(1 if c >= k else 0 for c in counts) for k in range(1, n + 1)))


def vulnerability(bundle: SolutionBundle | Sequence[Sequence[int]]) -> VulnerabilityVector:
    counts = _counts(bundle)
    n = len(bundle)
    return VulnerabilityVector([sum(1 for c in counts if c >= k) for k in range(1, n + 1)])


def lex_compare(f: Sequence[int], g: Sequence[int]) -> int:
    """-1, 0 or 1 as f is better than, equal to, or worse than g.

    The last differing entry decides; the critical count f_n has top priority.
    """
    if len(f) != len(g):
        raise LengthMismatch(f"vectors have lengths {len(f)} and {len(g)}")
    for a, b in zip(reversed(tuple(f)), reversed(tuple(g))):
        if a != b:
            return -1 if a < b else 1
    return 0

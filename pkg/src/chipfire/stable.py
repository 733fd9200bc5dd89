"""Stable configuration, distance distribution, and total firing counts.

Once firing stops, a point holds one chip exactly when its arrival count is
odd (it fired away ``2 * (F // 2)`` chips).  The stable configuration is
therefore the parity of the arrival table, stored here as one bit pattern
per row.  Grouping the surviving chips by the distance coordinate
``y - x`` gives the distance distribution, whose second raw moment counts
every firing twice: a firing replaces two chips at distance d with one at
d - 1 and one at d + 1, adding exactly 2 to the moment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import ChipfireError, Row, intermediate_configuration


class ParityError(ChipfireError):
    """An integer that must be even by construction turned out odd."""


@dataclass(frozen=True)
class StableRow:
    """Bit pattern of the chips one row keeps after stabilization.

    Bit ``k`` corresponds to ``y = y_min + k`` and is set when the arrival
    count there is odd.  ``width`` is the nonzero span of the source row, so
    the pattern can be rendered alongside the even (unmarked) positions.
    """

    index: int
    y_min: int
    width: int
    bits: int

    def __post_init__(self) -> None:
        if self.width < 0 or self.bits < 0:
            raise ValueError("width and bits must be nonnegative")
        if self.bits >> self.width:
            raise ValueError("bit pattern wider than the row span")

    @property
    def chip_count(self) -> int:
        return self.bits.bit_count()

    def pattern(self) -> str:
        """The bits as a 0/1 string, leftmost position first."""
        return "".join("1" if self.bits >> k & 1 else "0" for k in range(self.width))

    def marked_points(self) -> Iterator[tuple[int, int]]:
        """Yield ``(x, y)`` of each chip in this row, increasing y."""
        for k in range(self.width):
            if self.bits >> k & 1:
                y = self.y_min + k
                yield self.index - y, y

    def unmarked_points(self) -> Iterator[tuple[int, int]]:
        """Points of the span whose arrival count was even."""
        for k in range(self.width):
            if not self.bits >> k & 1:
                y = self.y_min + k
                yield self.index - y, y


def stable_row(r: Row) -> StableRow:
    """Parity pattern of one table row: bit k set iff ``values[k]`` is odd."""
    bits = 0
    for k, v in enumerate(r.values):
        if v & 1:
            bits |= 1 << k
    return StableRow(index=r.index, y_min=r.y_min, width=len(r.values), bits=bits)


@dataclass(frozen=True)
class StableConfig:
    """Per-row bit patterns of the full stable configuration for ``2**n`` chips."""

    n: int
    rows: tuple[StableRow, ...]

    @property
    def chip_count(self) -> int:
        return sum(r.chip_count for r in self.rows)

    def marked_points(self) -> Iterator[tuple[int, int]]:
        for r in self.rows:
            yield from r.marked_points()

    def first_marked_row(self) -> int:
        for r in self.rows:
            if r.bits:
                return r.index
        raise ValueError("configuration has no chips")

    def last_marked_row(self) -> StableRow:
        for r in reversed(self.rows):
            if r.bits:
                return r
        raise ValueError("configuration has no chips")


def stable_configuration(n: int) -> StableConfig:
    """Stable configuration reached from ``2**n`` chips at the origin.

    Rows with no odd arrival count (all rows below n, in particular) carry
    empty patterns.
    """
    rows = tuple(stable_row(r) for r in intermediate_configuration(n))
    return StableConfig(n=n, rows=rows)


@dataclass(frozen=True)
class DistanceDistribution:
    """Chip counts of a stable configuration grouped by ``i = y - x``.

    ``counts[k]`` is the number of chips at distance ``i = k - half_width``;
    the vector runs densely from ``-half_width`` to ``half_width``.  The
    distribution is symmetric, sums to ``2**n``, and has an empty center for
    n >= 1 because the diagonal never keeps a chip.
    """

    n: int
    half_width: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        c = self.counts
        if len(c) != 2 * self.half_width + 1:
            raise ValueError("counts must cover -half_width..half_width densely")
        if any(v < 0 for v in c):
            raise ValueError("counts must be nonnegative")
        if c != c[::-1]:
            raise ValueError("distance distribution must be symmetric")
        if sum(c) != 1 << self.n:
            raise ValueError(f"distribution must sum to 2**{self.n}")
        if self.n >= 1 and c[self.half_width] != 0:
            raise ValueError("center count must be zero for n >= 1")

    def offsets(self) -> range:
        return range(-self.half_width, self.half_width + 1)

    def count(self, i: int) -> int:
        if abs(i) > self.half_width:
            return 0
        return self.counts[i + self.half_width]


def distance_distribution(s: StableConfig) -> DistanceDistribution:
    """Group the chips of ``s`` by distance ``y - x``."""
    points = list(s.marked_points())
    m = max(abs(y - x) for x, y in points)
    counts = [0] * (2 * m + 1)
    for x, y in points:
        counts[y - x + m] += 1
    return DistanceDistribution(n=s.n, half_width=m, counts=tuple(counts))


def second_raw_moment(d: DistanceDistribution) -> int:
    """Exact integer ``sum(i**2 * count(i))`` over the distribution."""
    m = d.half_width
    return sum((k - m) ** 2 * c for k, c in enumerate(d.counts))


def total_firings_via_moment(n: int) -> int:
    """Total firings to stabilize ``2**n`` chips, via the moment identity.

    Every firing adds exactly 2 to the second raw moment of the chip
    distribution, which starts at 0, so the total is half the final moment.
    """
    mu2 = second_raw_moment(distance_distribution(stable_configuration(n)))
    if mu2 & 1:
        raise ParityError(f"second raw moment {mu2} is odd for n={n}")
    return mu2 >> 1


def total_firings_via_sum(n: int) -> int:
    """Total firings via direct summation: each point fires ``F // 2`` times."""
    return sum(v >> 1 for row in intermediate_configuration(n) for v in row.values)

"""Streaming row computation for chip-firing on the first-quadrant lattice.

The game: ``2**n`` chips start at the origin of the grid of nonnegative
integer points.  A point holding at least two chips may fire, sending one
chip to its right neighbor ``(x+1, y)`` and one to its upper neighbor
``(x, y+1)``.  Row ``i`` is the antidiagonal ``x + y = i``; inside a row,
"left" means smaller ``y``.

Firing the rows in increasing order until each is exhausted produces the
arrival table ``F(x, y)``: the number of chips that reach ``(x, y)`` before
its own row starts firing.  A point that received ``v`` chips fires
``v // 2`` times and forwards ``v // 2`` chips to each neighbor, so the
table obeys a purely local recurrence between consecutive rows:

    F(x, y) = F(x-1, y) // 2 + F(x, y-1) // 2      for x + y > 0

Each row therefore follows from the previous one alone, and the whole table
streams in memory proportional to the widest row.  Rows store only their
nonzero span; they are palindromic because the game is symmetric in x and y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

#: Exponent cap for the initial chip count.  Every table entry is at most
#: 2**n and difference-table entries reach -(2**n), so this keeps all values
#: within a signed 128-bit width, the contract assumed by the binary cache.
MAX_EXPONENT = 126


class ChipfireError(Exception):
    """Base class for errors raised by this package."""


class ChipOverflowError(ChipfireError, OverflowError):
    """An initial chip count of 2**n would exceed the supported width."""


class RowCapExceededError(ChipfireError, RuntimeError):
    """A row stream hit its cap before reaching an all-zero row."""


def _check_exponent(n: int) -> None:
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    if n > MAX_EXPONENT:
        raise ChipOverflowError(
            f"2**{n} exceeds the supported chip-count width (max exponent {MAX_EXPONENT})"
        )


@dataclass(frozen=True)
class Row:
    """One antidiagonal of the arrival table, trimmed to its nonzero span.

    ``values[k]`` is the entry at ``y = y_min + k``, ``x = index - y``;
    reading the tuple left to right walks the row in increasing y.  An empty
    tuple represents an all-zero row.  Entries are strictly positive and
    palindromic, and the span must fit in the quadrant.
    """

    index: int
    y_min: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        v = self.values
        if self.index < 0:
            raise ValueError(f"row index must be nonnegative, got {self.index}")
        if not v:
            if self.y_min != 0:
                raise ValueError("empty rows must have y_min = 0")
            return
        if self.y_min < 0:
            raise ValueError(f"y_min must be nonnegative, got {self.y_min}")
        if self.y_min + len(v) - 1 > self.index:
            raise ValueError(
                f"span y={self.y_min}..{self.y_min + len(v) - 1} leaves the "
                f"quadrant on row {self.index}"
            )
        if min(v) <= 0:
            raise ValueError("row values must be strictly positive")
        if v != v[::-1]:
            raise ValueError("row values must be palindromic")

    @property
    def is_empty(self) -> bool:
        return not self.values

    @property
    def width(self) -> int:
        """Number of nonzero entries."""
        return len(self.values)

    @property
    def y_max(self) -> int:
        if not self.values:
            raise ValueError("empty row has no span")
        return self.y_min + len(self.values) - 1

    def value_at(self, y: int) -> int:
        """Entry at ``(index - y, y)``; zero outside the stored span."""
        k = y - self.y_min
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0

    def points(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(x, y, value)`` for each nonzero entry, increasing y."""
        for k, v in enumerate(self.values):
            y = self.y_min + k
            yield self.index - y, y, v

    def chip_sum(self) -> int:
        return sum(self.values)


def initial_row(n: int) -> Row:
    """Row 0 of the table for ``2**n`` chips at the origin."""
    _check_exponent(n)
    return Row(index=0, y_min=0, values=(1 << n,))


def _child_values(values: Sequence[int]) -> list[int]:
    # Entry j of the raw child row collects the half-contributions of the
    # parents at offsets j-1 and j; offsets outside the span contribute 0.
    halves = [v >> 1 for v in values]
    raw = [halves[0]]
    raw += [a + b for a, b in zip(halves, halves[1:])]
    raw.append(halves[-1])
    return raw


def _trim(raw: list[int]) -> tuple[int, list[int]]:
    lo = 0
    n = len(raw)
    while lo < n and raw[lo] == 0:
        lo += 1
    hi = n
    while hi > lo and raw[hi - 1] == 0:
        hi -= 1
    return lo, raw[lo:hi]


def next_row(r: Row) -> Row:
    """The row below ``r`` once every point of ``r`` has finished firing.

    Total for every row reachable from an initial configuration.  A
    contrived palindromic row whose child support would contain an interior
    zero (impossible under the row monotonicity of real tables) is rejected
    with ``ValueError`` because the trimmed representation cannot hold it.
    """
    if r.is_empty:
        return Row(index=r.index + 1, y_min=0, values=())
    raw = _child_values(r.values)
    lo, vals = _trim(raw)
    if not vals:
        return Row(index=r.index + 1, y_min=0, values=())
    if 0 in vals:
        raise ValueError("child row support is not contiguous")
    return Row(index=r.index + 1, y_min=r.y_min + lo, values=tuple(vals))


def row_bound(n: int) -> int:
    """Upper bound on the index of the last nonzero row.

    Derived from the fact that the diagonal entry F(x, x) is even and drops
    by at least 2 from one even row to the next, starting from the central
    binomial entry of row n.
    """
    _check_exponent(n)
    if n % 2 == 0:
        return n + math.comb(n, n // 2)
    return n + 1 + 2 * (math.comb(n, n // 2) // 2)


class ConfigStream(Iterator[Row]):
    """Iterator over the nonzero rows of the arrival table for ``2**n`` chips.

    Yields rows 0, 1, 2, ... and stops just before the first all-zero row.
    ``row_cap`` limits the number of rows emitted; hitting the cap while
    rows are still nonzero raises :class:`RowCapExceededError`.  Without a
    cap the stream is still guarded by :func:`row_bound`, which no correct
    run can exceed.

    The stream holds only the current row, so memory stays proportional to
    the widest row.  Instances are single-consumer; create one stream per
    traversal.
    """

    def __init__(self, n: int, row_cap: int | None = None):
        _check_exponent(n)
        if row_cap is not None and row_cap < 1:
            raise ValueError(f"row_cap must be at least 1, got {row_cap}")
        self.n = n
        self.row_cap = row_cap
        self.current_row: Row | None = None
        self.rows_emitted = 0
        self._vals: list[int] | None = [1 << n]
        self._y_min = 0
        self._index = 0
        self._bound = row_bound(n)

    def __iter__(self) -> "ConfigStream":
        return self

    def __next__(self) -> Row:
        vals = self._vals
        if not vals:
            self._vals = None
            raise StopIteration
        if self.row_cap is not None and self.rows_emitted >= self.row_cap:
            raise RowCapExceededError(
                f"row cap {self.row_cap} hit before termination (n={self.n})"
            )
        if self._index > self._bound:
            raise RowCapExceededError(
                f"row {self._index} exceeds the termination bound {self._bound} "
                f"for n={self.n}; this indicates a bug"
            )
        row = Row(index=self._index, y_min=self._y_min, values=tuple(vals))
        raw = _child_values(vals)
        lo, child = _trim(raw)
        self._vals = child
        self._y_min += lo
        self._index += 1
        self.current_row = row
        self.rows_emitted += 1
        return row


def intermediate_configuration(n: int, row_cap: int | None = None) -> ConfigStream:
    """Stream the arrival table for ``2**n`` chips, row by row."""
    return ConfigStream(n, row_cap=row_cap)


def entry(n: int, x: int, y: int) -> int:
    """Arrival count F(x, y), streaming rows up to ``x + y``.

    Zero if the point lies outside the nonzero span or past the last row.
    """
    if x < 0 or y < 0:
        raise ValueError(f"coordinates must be nonnegative, got ({x}, {y})")
    target = x + y
    for row in intermediate_configuration(n):
        if row.index == target:
            return row.value_at(y)
        if row.index > target:
            break
    return 0

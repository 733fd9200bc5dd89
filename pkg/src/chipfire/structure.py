"""Row-structure analytics: lengths, scaled binomial rows, minimal rows,
segmentation into the four vertical parts, and the bottom-triangle report.

The table for ``2**n`` chips splits, reading down, into
  * the top triangle (rows 0..n), scaled rows of Pascal's triangle,
  * a midsection where the row lengths wander up by one and down by one,
  * a long rectangle whose lengths alternate between the two largest values,
  * the bottom triangle, where lengths fall by exactly 1 down to 2 and every
    row is a minimal row.

The rectangle criterion used here (a contiguous block directly above the
bottom triangle whose lengths stay within 1 of the longest length) is a
heuristic reading of the observed shape; only the top and bottom triangles
have sharp definitions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import (
    ChipfireError,
    Row,
    _check_exponent,
    intermediate_configuration,
    row_bound,
)

__all__ = [
    "RowProfile",
    "LongestRow",
    "Segmentation",
    "BottomTriangleReport",
    "DegenerateSegmentationError",
    "pascal_row",
    "row_profile",
    "longest_row",
    "minimal_row",
    "minimal_row_sum",
    "is_minimal",
    "segment",
    "row_bound",
    "check_bottom_conjecture",
]


class DegenerateSegmentationError(ChipfireError):
    """The four-part split could not be formed without overlapping ranges."""


def pascal_row(n: int, i: int) -> Row:
    """Row ``i`` of the table for ``2**n`` chips, ``i <= n``, in closed form.

    The first n+1 rows are rows of Pascal's triangle scaled by a power of
    two: the entry at ``(x, i - x)`` is ``2**(n-i) * C(i, x)``.
    """
    _check_exponent(n)
    if not 0 <= i <= n:
        raise IndexError(f"closed form covers rows 0..{n}, got {i}")
    scale = 1 << (n - i)
    values = tuple(scale * math.comb(i, k) for k in range(i + 1))
    return Row(index=i, y_min=0, values=values)


@dataclass(frozen=True)
class RowProfile:
    """Nonzero-entry counts of every row of one table."""

    n: int
    lengths: tuple[int, ...]

    @property
    def nonzero_rows(self) -> int:
        return len(self.lengths)


def row_profile(n: int) -> RowProfile:
    return RowProfile(n=n, lengths=tuple(r.width for r in intermediate_configuration(n)))


class LongestRow(NamedTuple):
    length: int
    first_index: int
    values: tuple[int, ...]


def longest_row(n: int) -> LongestRow:
    """Longest row of the table; ties resolve to the smallest row index."""
    best_len = -1
    best_index = 0
    best_values: tuple[int, ...] = ()
    for row in intermediate_configuration(n):
        if row.width > best_len:
            best_len = row.width
            best_index = row.index
            best_values = row.values
    return LongestRow(best_len, best_index, best_values)


def _minimal_values(j: int) -> tuple[int, ...]:
    # 1, 3, 5, ..., j, j, ..., 5, 3, 1 for odd j; the even case has a single
    # peak j between the two odd ramps.
    half = tuple(range(1, j + 1, 2))
    if j % 2 == 1:
        return half + half[::-1]
    return half + (j,) + half[::-1]


def minimal_row(j: int) -> Row:
    """The minimal row of ``j + 1`` entries.

    Minimal rows have the smallest entries a symmetric row can carry under
    the row monotonicity constraints (steps of at least 2 off the diagonal,
    at least 1 onto it).  They make up the bottom triangle.  The returned
    row is placed at the lowest index that fits its span.
    """
    if j < 1:
        raise ValueError(f"minimal rows need at least 2 entries, got j={j}")
    return Row(index=j, y_min=0, values=_minimal_values(j))


def minimal_row_sum(j: int) -> int:
    """Chip total of the minimal row of ``j + 1`` entries: ``(j+1)**2 // 2``."""
    if j < 1:
        raise ValueError(f"minimal rows need at least 2 entries, got j={j}")
    return (j + 1) ** 2 // 2


def is_minimal(r: Row) -> bool:
    """Whether the row's values are exactly the minimal row of its width."""
    if r.width < 2:
        return False
    return r.values == _minimal_values(r.width - 1)


@dataclass(frozen=True)
class Segmentation:
    """Disjoint row ranges (half-open) covering all nonzero rows of a table.

    The bottom triangle here is truncated at row ``n + 1`` so the four
    ranges never overlap; for n <= 3 the full terminal run of the length
    profile can reach into the top triangle (those rows are simultaneously
    scaled binomial rows and minimal rows).  The untruncated run is what
    :func:`check_bottom_conjecture` measures.
    """

    n: int
    top_triangle: range
    midsection: range
    rectangle: range
    bottom_triangle: range
    longest_length: int
    first_longest_row: int

    def parts(self) -> tuple[tuple[str, range], ...]:
        return (
            ("top_triangle", self.top_triangle),
            ("midsection", self.midsection),
            ("rectangle", self.rectangle),
            ("bottom_triangle", self.bottom_triangle),
        )


def _terminal_decreasing_run(lengths: Sequence[int]) -> int:
    """Start index of the maximal terminal block whose lengths step down by 1."""
    b = len(lengths) - 1
    while b - 1 >= 0 and lengths[b - 1] == lengths[b] + 1:
        b -= 1
    return b


def segment(n: int, profile: RowProfile | None = None) -> Segmentation:
    """Split the table for ``2**n`` chips into its four vertical parts.

    Top triangle is rows 0..n.  The bottom triangle is the maximal terminal
    block below the top triangle whose lengths decrease by exactly 1 per
    row; the rectangle is the maximal block directly above it with lengths
    within 1 of the longest length; the midsection is whatever remains.
    Empty midsection, rectangle, or bottom triangle are legal (small n).

    Passing a precomputed ``profile`` avoids re-streaming the table.
    """
    if n < 1:
        raise ValueError(f"segmentation needs n >= 1, got {n}")
    if profile is None:
        profile = row_profile(n)
    elif profile.n != n:
        raise ValueError(f"profile is for n={profile.n}, not n={n}")
    lengths = profile.lengths
    total = len(lengths)
    longest = max(lengths)
    first_longest = lengths.index(longest)

    top = range(0, n + 1)
    if total <= n + 1:
        bottom = range(total, total)
        rect = range(total, total)
        mid = range(n + 1, total)
    else:
        b = max(_terminal_decreasing_run(lengths), n + 1)
        r = b
        while r - 1 >= n + 1 and lengths[r - 1] >= longest - 1:
            r -= 1
        bottom = range(b, total)
        rect = range(r, b)
        mid = range(n + 1, r)

    seg = Segmentation(
        n=n,
        top_triangle=top,
        midsection=mid,
        rectangle=rect,
        bottom_triangle=bottom,
        longest_length=longest,
        first_longest_row=first_longest,
    )
    covered = [i for _, part in seg.parts() for i in part]
    if covered != list(range(total)):
        raise DegenerateSegmentationError(
            f"segments do not partition rows 0..{total - 1} for n={n}"
        )
    return seg


@dataclass(frozen=True)
class BottomTriangleReport:
    """Empirical status of the bottom-triangle height claim for one n.

    The claim: the maximal terminal run of lengths decreasing by 1 is one
    row shorter than the longest row.  This is a report, never an assertion;
    a counterexample at some larger n must not break the library.
    """

    n: int
    holds: bool
    triangle_rows: int
    longest_length: int


def check_bottom_conjecture(n: int, profile: RowProfile | None = None) -> BottomTriangleReport:
    """Compare the terminal decreasing run against the longest-row length.

    Uses the untruncated run, which for n <= 3 overlaps the top triangle.
    """
    if n < 2:
        raise ValueError(f"conjecture check needs n >= 2, got {n}")
    if profile is None:
        profile = row_profile(n)
    elif profile.n != n:
        raise ValueError(f"profile is for n={profile.n}, not n={n}")
    lengths = profile.lengths
    triangle_rows = len(lengths) - _terminal_decreasing_run(lengths)
    longest = max(lengths)
    return BottomTriangleReport(
        n=n,
        holds=triangle_rows == longest - 1,
        triangle_rows=triangle_rows,
        longest_length=longest,
    )

"""First-difference tables of the arrival rows and their shape checks.

Row ``i`` of the difference table holds, at ``(x, y)``,

    F'(x, y) = F(x-1, y) - F(x, y-1)

with both parents taken from arrival row ``i - 1`` (zero outside its span).
Reading in increasing y this is the padded first-difference of that row:
the leading entry, the consecutive differences, then minus the trailing
entry.  Palindromic arrival rows make every difference row antisymmetric,
so the left half (positions with ``y <= x``) carries all the information;
in real tables it is nonnegative and, prefixed with the implicit zero
margin, weakly rises and then weakly falls.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, NamedTuple

from .core import Row, intermediate_configuration


@dataclass(frozen=True)
class DiffRow:
    """One row of the difference table, trimmed like its source row.

    ``values[k]`` sits at ``y = y_min + k``, ``x = index - y``.  Values are
    antisymmetric: entry k equals minus entry ``len - 1 - k``.
    """

    index: int
    y_min: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        v = self.values
        if self.index < 1:
            raise ValueError("difference rows start at index 1")
        if not v:
            if self.y_min != 0:
                raise ValueError("empty difference rows must have y_min = 0")
            return
        if self.y_min < 0:
            raise ValueError(f"y_min must be nonnegative, got {self.y_min}")
        if self.y_min + len(v) - 1 > self.index:
            raise ValueError("span leaves the quadrant")
        mirrored = [-x for x in v]
        mirrored.reverse()
        if list(v) != mirrored:
            raise ValueError("difference row must be antisymmetric")

    @property
    def is_empty(self) -> bool:
        return not self.values

    def left_half(self) -> tuple[int, ...]:
        """Entries at positions with ``y <= x`` (the diagonal included)."""
        # y = y_min + k <= index - y  <=>  k <= index // 2 - y_min
        cut = self.index // 2 - self.y_min + 1
        return self.values[: max(cut, 0)]


def diff_row(prev: Row) -> DiffRow:
    """Difference row ``prev.index + 1`` computed from arrival row ``prev``."""
    if prev.is_empty:
        return DiffRow(index=prev.index + 1, y_min=0, values=())
    v = prev.values
    out = [v[0]]
    out += [b - a for a, b in zip(v, v[1:])]
    out.append(-v[-1])
    return DiffRow(index=prev.index + 1, y_min=prev.y_min, values=tuple(out))


def diff_table(n: int) -> Iterator[DiffRow]:
    """Stream difference rows 1 .. last nonzero arrival row + 1."""
    for row in intermediate_configuration(n):
        yield diff_row(row)


def row_max_abs(d: DiffRow) -> int:
    """Largest absolute entry; by antisymmetry, the maximum of the left half."""
    if d.is_empty:
        return 0
    return max(map(abs, d.values))


def unimodal_check(d: DiffRow) -> bool:
    """Whether the left half weakly rises and then weakly falls.

    The half is prefixed with a single zero for the implicit margin, so a
    row whose first stored entry is already its peak still counts.
    """
    seq = (0,) + d.left_half()
    k = 0
    last = len(seq) - 1
    while k < last and seq[k + 1] >= seq[k]:
        k += 1
    while k < last and seq[k + 1] <= seq[k]:
        k += 1
    return k == last


class Plateau(NamedTuple):
    start: int
    length: int
    value: int


def plateaus(d: DiffRow) -> list[Plateau]:
    """Maximal runs of at least two equal consecutive values.

    ``start`` is the 0-based position of the first entry of the run.
    """
    runs: list[Plateau] = []
    v = d.values
    k = 0
    while k < len(v):
        j = k + 1
        while j < len(v) and v[j] == v[k]:
            j += 1
        if j - k >= 2:
            runs.append(Plateau(start=k, length=j - k, value=v[k]))
        k = j
    return runs


class SignRow(NamedTuple):
    """Signs of the consecutive differences within one difference row.

    ``signs[k]`` (one of ``+ 0 -``) compares ``values[k+1]`` against
    ``values[k]``, i.e. it sits between ``y = y_min + k`` and the next
    position.
    """

    index: int
    y_min: int
    signs: str


def _signs(values: tuple[int, ...]) -> str:
    return "".join(
        "+" if b > a else "-" if b < a else "0"
        for a, b in zip(values, islice(values, 1, None))
    )


def sign_map(n: int) -> list[SignRow]:
    """Per-row sign strings for the whole difference table of ``2**n`` chips.

    Zeros mark exactly the plateau adjacencies.
    """
    return [
        SignRow(index=d.index, y_min=d.y_min, signs=_signs(d.values))
        for d in diff_table(n)
    ]

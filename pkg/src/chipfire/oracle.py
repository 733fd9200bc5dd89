"""Brute-force chip-firing simulator with selectable firing orders.

This module plays the game move by move on a dense grid, one firing at a
time, under any of four orders: uniformly random (seeded), leftmost-first,
a FIFO queue, or row-by-row.  Stabilization is confluent, so every order
must end at the same stable grid with the same per-point firing counts and
the same number of moves; :func:`confluence_check` verifies that, and
:func:`arrivals` rebuilds the arrival table from the firing counts for
comparison with the streaming computation.

The simulator exists for cross-validation at small n, not for scale: the
grid is O(bound**2) and every firing is one Python-level step.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .core import ChipfireError, row_bound

ORACLE_EXPONENT_LIMIT = 10

STRATEGIES = ("random", "leftmost-first", "fifo-queue", "row-by-row")

Point = tuple[int, int]


class MoveCapExceededError(ChipfireError, RuntimeError):
    """The simulation hit its move cap; stabilization should have ended it."""


@dataclass
class OracleState:
    """Mutable simulation state on a dense, doubling bounding box.

    ``chips[x][y]`` is the current chip count, ``firings[x][y]`` how often
    the point has fired.  Total chips stay at ``2**n`` throughout: a firing
    moves two chips and destroys none.
    """

    n: int
    strategy: str
    seed: int | None = None
    moves: int = 0
    size: int = 4
    chips: list[list[int]] = field(default_factory=list)
    firings: list[list[int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.chips = [[0] * self.size for _ in range(self.size)]
        self.firings = [[0] * self.size for _ in range(self.size)]
        self.chips[0][0] = 1 << self.n

    def _grow(self) -> None:
        old = self.size
        self.size = old * 2
        for grid in (self.chips, self.firings):
            for row in grid:
                row.extend([0] * old)
            grid.extend([0] * self.size for _ in range(old))

    def fire(self, x: int, y: int) -> None:
        """Fire ``(x, y)`` once; grows the grid when a chip hits the border."""
        if self.chips[x][y] < 2:
            raise ValueError(f"({x}, {y}) holds {self.chips[x][y]} chips, cannot fire")
        while x + 1 >= self.size or y + 1 >= self.size:
            self._grow()
        self.chips[x][y] -= 2
        self.chips[x + 1][y] += 1
        self.chips[x][y + 1] += 1
        self.firings[x][y] += 1
        self.moves += 1

    def can_fire(self, x: int, y: int) -> bool:
        return self.chips[x][y] >= 2

    def total_chips(self) -> int:
        return sum(map(sum, self.chips))

    def nonzero_chips(self) -> dict[Point, int]:
        return _nonzero(self.chips)

    def nonzero_firings(self) -> dict[Point, int]:
        return _nonzero(self.firings)


def _nonzero(grid: list[list[int]]) -> dict[Point, int]:
    return {
        (x, y): v
        for x, row in enumerate(grid)
        for y, v in enumerate(row)
        if v
    }


def _run_heap(state: OracleState, key: Callable[[Point], tuple], cap: int) -> None:
    # Lazy heap: points are (re)pushed whenever they might be fireable and
    # stale entries are skipped on pop.
    heap: list[tuple[tuple, Point]] = []
    if state.can_fire(0, 0):
        heapq.heappush(heap, (key((0, 0)), (0, 0)))
    while heap:
        _, (x, y) = heapq.heappop(heap)
        if not state.can_fire(x, y):
            continue
        if state.moves >= cap:
            raise MoveCapExceededError(f"move cap {cap} hit for n={state.n}")
        state.fire(x, y)
        for p in ((x, y), (x + 1, y), (x, y + 1)):
            if state.can_fire(*p):
                heapq.heappush(heap, (key(p), p))


def _run_fifo(state: OracleState, cap: int) -> None:
    queue: deque[Point] = deque()
    queued: set[Point] = set()
    if state.can_fire(0, 0):
        queue.append((0, 0))
        queued.add((0, 0))
    while queue:
        x, y = queue.popleft()
        queued.discard((x, y))
        if not state.can_fire(x, y):
            continue
        if state.moves >= cap:
            raise MoveCapExceededError(f"move cap {cap} hit for n={state.n}")
        state.fire(x, y)
        for p in ((x, y), (x + 1, y), (x, y + 1)):
            if state.can_fire(*p) and p not in queued:
                queue.append(p)
                queued.add(p)


def _run_random(state: OracleState, rng: random.Random, cap: int) -> None:
    # Each point appears at most once in the pool, so rejection sampling of
    # stale entries stays uniform over the currently fireable points.
    pool: list[Point] = []
    pooled: set[Point] = set()
    if state.can_fire(0, 0):
        pool.append((0, 0))
        pooled.add((0, 0))
    while pool:
        i = rng.randrange(len(pool))
        p = pool[i]
        if not state.can_fire(*p):
            pool[i] = pool[-1]
            pool.pop()
            pooled.discard(p)
            continue
        if state.moves >= cap:
            raise MoveCapExceededError(f"move cap {cap} hit for n={state.n}")
        x, y = p
        state.fire(x, y)
        for q in ((x, y), (x + 1, y), (x, y + 1)):
            if state.can_fire(*q) and q not in pooled:
                pool.append(q)
                pooled.add(q)


def simulate(
    n: int,
    strategy: str = "row-by-row",
    seed: int | None = None,
    move_cap: int | None = None,
    limit: int = ORACLE_EXPONENT_LIMIT,
) -> OracleState:
    """Run the game from ``2**n`` chips to its stable configuration.

    One move fires one point once.  The default cap comes from a
    displacement argument (each move pushes two chips one row outward and no
    chip passes the last-row bound), so hitting it means a bug, not a long
    run.
    """
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    if n > limit:
        raise ValueError(
            f"n={n} exceeds the oracle limit {limit}; "
            "the dense simulator is meant for small cross-checks"
        )
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    cap = move_cap if move_cap is not None else ((1 << n) * row_bound(n)) // 2 + 1
    state = OracleState(n=n, strategy=strategy, seed=seed)
    if strategy == "row-by-row":
        _run_heap(state, lambda p: (p[0] + p[1], p[1]), cap)
    elif strategy == "leftmost-first":
        _run_heap(state, lambda p: (p[1], p[0]), cap)
    elif strategy == "fifo-queue":
        _run_fifo(state, cap)
    else:
        _run_random(state, random.Random(seed), cap)
    return state


def arrivals(state: OracleState) -> dict[Point, int]:
    """Total chips that ever arrived at each point, from the firing counts.

    A point receives one chip per firing of each in-neighbor, plus the
    initial pile at the origin; this equals the arrival table F.
    """
    out: dict[Point, int] = {}
    f = state.firings
    size = state.size
    for x in range(size):
        for y in range(size):
            total = (1 << state.n) if x == 0 and y == 0 else 0
            if x > 0:
                total += f[x - 1][y]
            if y > 0:
                total += f[x][y - 1]
            if total:
                out[(x, y)] = total
    return out


@dataclass(frozen=True)
class ConfluenceReport:
    n: int
    trials: int
    passed: bool
    moves: int
    runs: int
    mismatches: tuple[str, ...] = ()


def confluence_check(n: int, trials: int, seed: int = 0) -> ConfluenceReport:
    """Fire ``trials`` random orders plus the deterministic strategies.

    Passes when every run ends with the same stable grid, the same firing
    counts, and the same move total.
    """
    if trials < 2:
        raise ValueError(f"need at least 2 trials, got {trials}")
    runs: list[tuple[str, OracleState]] = []
    for t in range(trials):
        runs.append((f"random[{seed + t}]", simulate(n, "random", seed=seed + t)))
    for name in ("leftmost-first", "fifo-queue", "row-by-row"):
        runs.append((name, simulate(n, name)))

    ref_name, ref = runs[0]
    ref_stable = ref.nonzero_chips()
    ref_firings = ref.nonzero_firings()
    mismatches: list[str] = []
    for name, state in runs[1:]:
        if state.moves != ref.moves:
            mismatches.append(f"{name}: {state.moves} moves != {ref.moves} ({ref_name})")
        if state.nonzero_chips() != ref_stable:
            mismatches.append(f"{name}: stable grid differs from {ref_name}")
        if state.nonzero_firings() != ref_firings:
            mismatches.append(f"{name}: firing counts differ from {ref_name}")
    return ConfluenceReport(
        n=n,
        trials=trials,
        passed=not mismatches,
        moves=ref.moves,
        runs=len(runs),
        mismatches=tuple(mismatches),
    )

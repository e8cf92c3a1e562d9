"""Max/min points of a bound grid, V(net), shift orbits and the global bound."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import __version__
from .conventions import DEFAULT, Convention
from .diagrams import ChordDiagram, _mate_from_word, _words, catalan_u
from .errors import InvariantViolation
from .trajectory import BoundsGrid, collect_grid, grid_arrays


@dataclass(frozen=True)
class ExtremumPoint:
    index: int
    kind: str  # "max" or "min"
    level: int  # lower bound at a max, upper bound at a min


def _is_max(lower: Sequence[int], upper: Sequence[int], i: int) -> bool:
    size = len(lower)
    level = lower[i]

    def side(step: int, strict: bool) -> bool:
        # walk away from i; every j passed over must stay below the level
        j = i
        for _ in range(size - 1):
            j = (j + step) % size
            if level >= upper[j]:
                return True
            if lower[j] > level or (strict and lower[j] == level):
                return False
        return False

    return side(-1, strict=True) and side(+1, strict=False)


def extrema_arrays(lower: Sequence[int], upper: Sequence[int]) -> list[ExtremumPoint]:
    neg_lower = [-u for u in upper]
    neg_upper = [-lo for lo in lower]
    points = []
    for i in range(len(lower)):
        if _is_max(lower, upper, i):
            points.append(ExtremumPoint(i, "max", lower[i]))
        # a min point of (L, U) is a max point of the mirror (-U, -L)
        if _is_max(neg_lower, neg_upper, i):
            if points and points[-1].index == i:
                raise InvariantViolation(f"index {i} is both a max and a min point")
            points.append(ExtremumPoint(i, "min", upper[i]))
    for a, b in zip(points, points[1:] + points[:1]):
        if len(points) > 1 and a.kind == b.kind:
            raise InvariantViolation(f"extrema do not alternate at indices {a.index}, {b.index}")
    if len(points) == 1:
        raise InvariantViolation("a lone extremum cannot alternate")
    return points


def extrema(grid: BoundsGrid) -> list[ExtremumPoint]:
    """All max and min points of ``grid`` in increasing index order."""
    return extrema_arrays(grid.lower, grid.upper)


def v_from_extrema(points: Sequence[ExtremumPoint]) -> int:
    total = 0
    for a, b in zip(points, points[1:] + points[:1]):
        top, bottom = (a, b) if a.kind == "max" else (b, a)
        if bottom.level > top.level:
            raise InvariantViolation(
                f"min level {bottom.level} at {bottom.index} exceeds max level {top.level} at {top.index}"
            )
        total += top.level - bottom.level + 1
    return total


def v_of_net(g: ChordDiagram, k: int, convention: Convention = DEFAULT) -> int:
    """Guaranteed number of times L crosses a multiple of 2*pi along the trajectory."""
    return v_from_extrema(extrema(collect_grid(g, k, convention)))


def _v_mate(mate: tuple[int, ...], k: int, convention: Convention = DEFAULT) -> int:
    lower, upper, _ = grid_arrays(mate, k, convention.initial_orient, convention.double_point_parity)
    return v_from_extrema(extrema_arrays(lower, upper))


@dataclass(frozen=True)
class Orbit:
    representative: ChordDiagram
    period: int


def _shift_word(word: str) -> str:
    # rotating chords by one slot: the last closer wraps to the front as an
    # opener and its partner's right neighbour becomes a closer
    depth = 0
    for p in range(len(word) - 1, -1, -1):
        depth += 1 if word[p] == ")" else -1
        if depth == 0:
            break
    out = "(" + word[:-1]
    return out[: p + 1] + ")" + out[p + 2 :]


def orbit_words(d: int) -> list[tuple[str, int]]:
    """(smallest word, period) for each shift orbit, in canonical order."""
    seen: set[str] = set()
    result = []
    for w in _words(d - 1, 0, ""):
        if w in seen:
            continue
        period, cur = 0, w
        while True:
            seen.add(cur)
            period += 1
            cur = _shift_word(cur)
            if cur == w:
                break
        result.append((w, period))
    return result


def orbits(d: int) -> list[Orbit]:
    if d < 2:
        raise ValueError(f"orbits needs d >= 2, got {d}")
    return [Orbit(ChordDiagram(_mate_from_word(w)), t) for w, t in orbit_words(d)]


@dataclass(frozen=True)
class BoundReport:
    d: int
    k: int
    sum_v: int
    bound: int
    diagram_count: int
    elapsed: float
    tool_version: str = __version__

    def __post_init__(self):
        if self.bound * (2 * self.d - 2) != self.sum_v:
            raise InvariantViolation("bound * (2d - 2) must equal sum_v")


def _chunk_sums(args: tuple[list[tuple[str, int]], tuple[int, ...], Convention]) -> list[int]:
    items, ks, convention = args
    sums = [0] * len(ks)
    for word, weight in items:
        mate = _mate_from_word(word)
        for i, k in enumerate(ks):
            sums[i] += weight * _v_mate(mate, k, convention)
    return sums


def _work_items(d: int, use_orbits: bool) -> list[tuple[str, int]]:
    if use_orbits:
        return orbit_words(d)
    return [(w, 1) for w in _words(d - 1, 0, "")]


def sum_v(
    d: int,
    ks: Iterable[int],
    *,
    jobs: int = 1,
    use_orbits: bool = True,
    convention: Convention = DEFAULT,
) -> dict[int, int]:
    """Sum of V over all nets on 2d-2 points, for each k in ``ks``.

    With ``use_orbits`` each shift orbit is evaluated once and weighted by its
    period; V is shift invariant so the sums agree with the plain ones.
    """
    ks = tuple(ks)
    for k in ks:
        if not 1 <= k <= 2 * d - 4:
            raise ValueError(f"k must lie in 1..{2 * d - 4} for d={d}, got {k}")
    items = _work_items(d, use_orbits)
    if jobs <= 1 or len(items) < 64:
        sums = _chunk_sums((items, ks, convention))
    else:
        n_chunks = jobs * 8
        chunks = [(items[i::n_chunks], ks, convention) for i in range(n_chunks)]
        sums = [0] * len(ks)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_chunk_sums, chunks):
                sums = [a + b for a, b in zip(sums, part)]
    return dict(zip(ks, sums))


def reports(
    d: int,
    ks: Iterable[int],
    *,
    jobs: int = 1,
    use_orbits: bool = True,
    convention: Convention = DEFAULT,
) -> list[BoundReport]:
    start = time.perf_counter()
    sums = sum_v(d, ks, jobs=jobs, use_orbits=use_orbits, convention=convention)
    elapsed = time.perf_counter() - start
    out = []
    for k, total in sums.items():
        bound, rem = divmod(total, 2 * d - 2)
        if rem:
            raise InvariantViolation(f"sum of V = {total} is not divisible by {2 * d - 2} (d={d}, k={k})")
        out.append(BoundReport(d, k, total, bound, catalan_u(d), elapsed))
    return out


def lower_bound(
    d: int, k: int, *, jobs: int = 1, use_orbits: bool = True, convention: Convention = DEFAULT
) -> BoundReport:
    if d < 3:
        raise ValueError(f"lower_bound needs d >= 3, got {d}")
    return reports(d, [k], jobs=jobs, use_orbits=use_orbits, convention=convention)[0]


def default_jobs() -> int:
    return os.cpu_count() or 1

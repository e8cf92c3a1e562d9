"""The moving critical point: event simulation and the L/U bound grid.

The moving vertex M starts just past s, runs counterclockwise 2d-2 times
around the circle and crosses every fixed vertex, r and s once per turn.
Half-interval ``2n`` of the grid covers M travelling through (s, r) during
turn ``n``; half-interval ``2n + 1`` covers M inside (r, s).

Two routes compute the grid.  :func:`collect_grid_by_events` replays every
crossing with :func:`advance` and recomputes arc tableaux from scratch;
:func:`collect_grid` uses the fact that the chords never move relative to
the circle positions (a crossing only relabels two neighbouring positions),
so each half-interval needs just one tableau per arc plus a scan for
degenerate collisions.  Both must agree exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import ClassVar, Iterator

from .arcs import Arc, arc_counts, arc_tableau, degenerate_arc_tableau
from .bounds import (
    IntegerInterval,
    full_counts,
    interval_degenerate,
    interval_nondegenerate,
    raw_interval,
    winding_constant,
    winding_from_counts,
)
from .conventions import DEFAULT, Convention
from .diagrams import ChordDiagram
from .errors import InvariantViolation

R, S = "r", "s"


class EventKind(enum.Enum):
    FIXED_DEG2 = "fixed-deg2"  # M was chorded to the vertex it crosses
    FIXED_DEG6 = "fixed-deg6"
    CROSS_R = "cross-r"
    CROSS_S = "cross-s"


@dataclass(frozen=True)
class CrossingEvent:
    kind: EventKind
    vertex: int | None
    half_interval: int


@dataclass(frozen=True)
class TrajectoryState:
    """Snapshot of the circle: vertex labels and the markers r, s.

    ``ring`` lists the circle counterclockwise starting at ``"s"``; integer
    entries are vertex labels, with label 0 the moving vertex M and 1..2d-3 the
    fixed vertices.  ``partner`` maps each label to the label it is chorded to.
    ``orient`` is the orientation of f just counterclockwise of r.
    """

    MOVING: ClassVar[int] = 0

    d: int
    k: int
    ring: tuple
    partner: tuple[int, ...]
    revolution: int = 0
    orient: int = 1
    c: int = 0

    @property
    def moving_index(self) -> int:
        return self.ring.index(self.MOVING)

    @property
    def moving_in_rs(self) -> bool:
        return self.ring.index(R) < self.moving_index

    @property
    def moving_gap(self) -> int:
        """Number of fixed vertices between s and M, counterclockwise."""
        return sum(1 for t in self.ring[: self.moving_index] if isinstance(t, int))

    @property
    def half_interval(self) -> int:
        return 2 * self.revolution + (1 if self.moving_in_rs else 0)

    def arc_vertices(self, arc: Arc) -> list[int]:
        ir = self.ring.index(R)
        tokens = self.ring[ir + 1 :] if arc is Arc.RS else self.ring[1:ir]
        return list(tokens)

    def vertices_from_before_r(self) -> list[int]:
        labels = [t for t in self.ring if isinstance(t, int)]
        before = self.arc_vertices(Arc.SR)[-1]
        i = labels.index(before)
        return labels[i:] + labels[:i]

    @property
    def diagram(self) -> ChordDiagram:
        """The current matching read counterclockwise from the first vertex after s."""
        labels = [t for t in self.ring if isinstance(t, int)]
        pos = {v: i for i, v in enumerate(labels)}
        return ChordDiagram(tuple(pos[self.partner[v]] for v in labels))


def initial_state(g: ChordDiagram, k: int, orient: int = 1) -> TrajectoryState:
    """Place M at position 1 of ``g`` just past s, with ``k`` fixed vertices in (r, s).

    Positions 2..2d-2-k lie in (s, r) and the last ``k`` positions in (r, s).
    ``orient`` other than +1 is a diagnostic mirror of the sign convention.
    """
    size = g.size
    if not 1 <= k <= size - 2:
        raise ValueError(f"k must lie in 1..{size - 2} for d={g.d}, got {k}")
    if orient not in (1, -1):
        raise ValueError("orient must be +1 or -1")
    split = size - k
    ring = (S, *range(split), R, *range(split, size))
    state = TrajectoryState(g.d, k, ring, tuple(g.mate), orient=orient)
    return replace(state, c=winding_constant(state))


def advance(state: TrajectoryState) -> tuple[TrajectoryState, CrossingEvent]:
    """Move M across the next point counterclockwise."""
    ring = list(state.ring)
    i = state.moving_index
    j = (i + 1) % len(ring)
    nxt = ring[j]
    half = state.half_interval
    if nxt == S:
        # M is last in the ring; after crossing, s sits right before it
        ring = [S, state.MOVING, *ring[1:i]]
        return (
            replace(state, ring=tuple(ring), revolution=state.revolution + 1),
            CrossingEvent(EventKind.CROSS_S, None, half),
        )
    ring[i], ring[j] = ring[j], ring[i]
    if nxt == R:
        return (
            replace(state, ring=tuple(ring), orient=-state.orient),
            CrossingEvent(EventKind.CROSS_R, None, half),
        )
    partner = list(state.partner)
    if partner[state.MOVING] == nxt:
        kind = EventKind.FIXED_DEG2
    else:
        kind = EventKind.FIXED_DEG6
        a, b = partner[state.MOVING], partner[nxt]
        partner[nxt], partner[a] = a, nxt
        partner[state.MOVING], partner[b] = b, state.MOVING
    return (
        replace(state, ring=tuple(ring), partner=tuple(partner)),
        CrossingEvent(kind, nxt, half),
    )


def run_trajectory(state: TrajectoryState) -> Iterator[tuple[TrajectoryState, CrossingEvent]]:
    """Yield ``(state_before, event)`` for all (2d-2)(2d-1) crossings."""
    size = 2 * state.d - 2
    for _ in range(size * (size + 1)):
        nxt, event = advance(state)
        yield state, event
        state = nxt


@dataclass(frozen=True)
class BoundsGrid:
    """Integer step functions on the 4d-4 half-intervals.

    ``lower[i]`` / ``upper[i]`` are the sup of lower and inf of upper
    endpoints collected on half-interval ``i``.
    """

    d: int
    k: int
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    c: int

    def __post_init__(self):
        if len(self.lower) != 4 * self.d - 4 or len(self.upper) != 4 * self.d - 4:
            raise InvariantViolation("grid must have 4d-4 entries")
        for i, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if lo >= hi:
                raise InvariantViolation(f"empty bound ({lo}, {hi}) at half-interval {i}")

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.lower, self.upper))


@dataclass
class HalfIntervalRecord:
    """Everything collected on one half-interval, for traces."""

    index: int
    collected: list[tuple[str, IntegerInterval]] = field(default_factory=list)
    lower: int | None = None
    upper: int | None = None

    def add(self, source: str, iv: IntegerInterval) -> None:
        self.collected.append((source, iv))

    def close(self) -> None:
        self.lower = max(iv.lo for _, iv in self.collected)
        self.upper = min(iv.hi for _, iv in self.collected)


def _check_pair(rs: IntegerInterval, sr_reflected: IntegerInterval, where: int) -> None:
    if rs.intersect(sr_reflected).empty:
        raise InvariantViolation(
            f"bounds {tuple(rs)} and {tuple(sr_reflected)} on half-interval {where} do not meet"
        )


def sr_orientation(state: TrajectoryState) -> int:
    """Orientation just after s: flips once per critical point inside (r, s)."""
    return state.orient * (-1) ** len(state.arc_vertices(Arc.RS))


def _collect_nondegenerate(state: TrajectoryState, rec: HalfIntervalRecord) -> None:
    rs = interval_nondegenerate(arc_tableau(state, Arc.RS), state.orient)
    sr = interval_nondegenerate(arc_tableau(state, Arc.SR), sr_orientation(state)).reflected(state.c)
    _check_pair(rs, sr, rec.index)
    rec.add("rs", rs)
    rec.add("sr", sr)


def _collect_degenerate(
    state: TrajectoryState, vertex: int, rec: HalfIntervalRecord, count_from: str
) -> None:
    arc = Arc.RS if state.moving_in_rs else Arc.SR
    try:
        T, parity = degenerate_arc_tableau(state, vertex, arc, count_from)
    except ValueError:
        return
    if arc is Arc.RS:
        iv = interval_degenerate(T, parity, state.orient)
        other = interval_nondegenerate(arc_tableau(state, Arc.SR), sr_orientation(state))
        _check_pair(iv, other.reflected(state.c), rec.index)
        rec.add("rs-double", iv)
    else:
        iv = interval_degenerate(T, parity, sr_orientation(state)).reflected(state.c)
        other = interval_nondegenerate(arc_tableau(state, Arc.RS), state.orient)
        _check_pair(other, iv, rec.index)
        rec.add("sr-double", iv)


def trace_records(
    g: ChordDiagram, k: int, convention: Convention = DEFAULT
) -> tuple[list[HalfIntervalRecord], int]:
    """Replay the whole trajectory event by event; return per-half records and c."""
    state = initial_state(g, k, convention.initial_orient)
    size = g.size
    records = [HalfIntervalRecord(i) for i in range(2 * size)]
    _collect_nondegenerate(state, records[0])
    for before, event in run_trajectory(state):
        if event.kind is EventKind.FIXED_DEG6:
            _collect_degenerate(
                before, event.vertex, records[event.half_interval], convention.double_point_parity
            )
        after, _ = advance(before)
        if event.kind in (EventKind.CROSS_R, EventKind.CROSS_S):
            records[event.half_interval].close()
            if event.half_interval == 2 * size - 1:
                break
        _collect_nondegenerate(after, records[after.half_interval])
    return records, state.c


def collect_grid_by_events(g: ChordDiagram, k: int, convention: Convention = DEFAULT) -> BoundsGrid:
    records, c = trace_records(g, k, convention)
    return BoundsGrid(
        g.d, k, tuple(r.lower for r in records), tuple(r.upper for r in records), c
    )


def collect_grid(g: ChordDiagram, k: int, convention: Convention = DEFAULT) -> BoundsGrid:
    """Fast route to the same grid as :func:`collect_grid_by_events`."""
    lower, upper, c = grid_arrays(g.mate, k, convention.initial_orient, convention.double_point_parity)
    return BoundsGrid(g.d, k, tuple(lower), tuple(upper), c)


def grid_arrays(
    mate: tuple[int, ...], k: int, orient: int = 1, count_from: str = "end"
) -> tuple[list[int], list[int], int]:
    """Core of :func:`collect_grid` on a bare 0-based matching.

    Slots are circle positions; slot ``M`` holds the moving vertex.  Marker
    ``s`` sits in the gap before slot ``s_gap`` and ``r`` before ``r_gap``.
    """
    size = len(mate)
    if not 1 <= k <= size - 2:
        raise ValueError(f"k must lie in 1..{size - 2}, got {k}")
    from_end = count_from == "end"
    s_gap, r_gap = 0, size - k
    E, O = full_counts(mate, r_gap - 1)
    c = winding_from_counts(E, O, orient)
    lower: list[int] = []
    upper: list[int] = []
    for half in range(2 * size):
        rs_len = (s_gap - r_gap) % size
        sr_len = size - rs_len
        n1, E1, O1, _ = arc_counts(mate, r_gap, rs_len)
        n2, E2, O2, _ = arc_counts(mate, s_gap, sr_len)
        orient_sr = orient if n1 % 2 == 0 else -orient
        l1, u1 = raw_interval(n1, E1, O1)
        if orient < 0:
            l1, u1 = -u1, -l1
        l2, u2 = raw_interval(n2, E2, O2)
        if orient_sr < 0:
            l2, u2 = -u2, -l2
        if max(l1, c - u2) >= min(u1, c - l2):
            raise InvariantViolation(
                f"bounds ({l1}, {u1}) and ({c - u2}, {c - l2}) on half-interval {half} do not meet"
            )
        lo, hi = max(l1, c - u2), min(u1, c - l2)
        # M sweeps its own arc; look for collisions with both chords leaving it
        if half % 2 == 0:
            start, length, n, E_, O_, o = s_gap, sr_len, n2, E2, O2, orient_sr
        else:
            start, length, n, E_, O_, o = r_gap, rs_len, n1, E1, O1, orient
        seen = [False, False]
        for q in range(length - 1):
            a = (start + q) % size
            b = (a + 1) % size
            # parity of the arc vertices after (or before) the pair q, q+1
            p = (length - q) % 2 if from_end else q % 2
            if mate[a] == b or seen[p]:
                continue
            if (mate[a] - start) % size >= length and (mate[b] - start) % size >= length:
                seen[p] = True
        for parity in (0, 1):
            if not seen[parity]:
                continue
            dl, dh = raw_interval(n, E_, O_)
            if parity:
                dh -= 1
            else:
                dl += 1
            if o < 0:
                dl, dh = -dh, -dl
            if half % 2 == 0:
                dl, dh = c - dh, c - dl
                if max(l1, dl) >= min(u1, dh):
                    raise InvariantViolation(f"degenerate bound misses the other arc at half-interval {half}")
            elif max(dl, c - u2) >= min(dh, c - l2):
                raise InvariantViolation(f"degenerate bound misses the other arc at half-interval {half}")
            lo, hi = max(lo, dl), min(hi, dh)
        lower.append(lo)
        upper.append(hi)
        # cross the marker that ends this half-interval
        if half % 2 == 0:
            r_gap = (r_gap - 1) % size
            orient = -orient
        else:
            s_gap = (s_gap - 1) % size
    return lower, upper, c

"""Two-row tableaux of a net restricted to an arc of the circle."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Hashable, Sequence

if TYPE_CHECKING:
    from .trajectory import TrajectoryState


class Arc(enum.Enum):
    RS = "rs"  # positively oriented arc from r to s
    SR = "sr"


@dataclass(frozen=True)
class ArcTableau:
    n: int
    first_row: tuple[int, ...]
    second_row: tuple[int, ...]
    E: int
    O: int
    m: int
    segments: tuple[tuple[int, int], ...]
    exits: tuple[int, ...] = ()


def tableau_of_arc(vertices: Sequence[Hashable], partner: Callable[[Hashable], Hashable]) -> ArcTableau:
    """Tableau of the arc whose vertices, in arc order, are ``vertices``.

    ``partner(v)`` gives the other end of the chord at ``v``; ends that are not
    in ``vertices`` are treated as leaving the arc.
    """
    index = {v: i for i, v in enumerate(vertices, 1)}
    first: list[int] = []
    second: list[int] = []
    exiting: list[int] = []
    for v, j in index.items():
        q = index.get(partner(v))
        if q is not None and q < j:
            second.append(j)
        else:
            first.append(j)
            if q is None:
                exiting.append(j)
    cuts = [0, *exiting, len(vertices) + 1]
    segments = []
    for lo, hi in zip(cuts, cuts[1:]):
        inside = [j for j in second if lo < j < hi]
        segments.append((sum(1 for j in inside if j % 2 == 0), sum(1 for j in inside if j % 2)))
    E = sum(1 for j in second if j % 2 == 0)
    return ArcTableau(
        n=len(vertices),
        first_row=tuple(first),
        second_row=tuple(second),
        E=E,
        O=len(second) - E,
        m=len(exiting),
        segments=tuple(segments),
        exits=tuple(exiting),
    )


def arc_tableau(state: TrajectoryState, arc: Arc) -> ArcTableau:
    """Tableau of the current (nondegenerate) configuration on ``arc``.

    The moving vertex is numbered like any other vertex when it lies in ``arc``.
    """
    return tableau_of_arc(state.arc_vertices(arc), state.partner.__getitem__)


def degenerate_arc_tableau(
    state: TrajectoryState, vertex: int, arc: Arc, count_from: str = "end"
) -> tuple[ArcTableau, int]:
    """Tableau and parity for the moving vertex colliding with fixed ``vertex``.

    ``state`` is the configuration just before the collision, so the moving
    vertex immediately precedes ``vertex`` inside ``arc``.  Both chords at the
    double point must leave the arc (the degree-6 case that needs its own
    interval); otherwise ``ValueError`` is raised.

    The double point holds indices i, i+1 of the n arc indices.  With
    ``count_from="end"`` the parity is ``(n - i - 1) % 2``, the number of arc
    vertices after the double point; with ``"start"`` it is ``(i - 1) % 2``,
    the number before it.
    """
    vertices = state.arc_vertices(arc)
    moving = state.MOVING
    if moving not in vertices or vertex not in vertices:
        raise ValueError("the collision does not happen inside this arc")
    i = vertices.index(moving) + 1
    if i >= len(vertices) or vertices[i] != vertex:
        raise ValueError(f"vertex {vertex} is not the next vertex after the moving one")
    inside = set(vertices)
    if state.partner[moving] in inside or state.partner[vertex] in inside:
        raise ValueError("both chords at the double point must leave the arc")
    if count_from == "start":
        parity = (i - 1) % 2
    elif count_from == "end":
        parity = (len(vertices) - i - 1) % 2
    else:
        raise ValueError(f"count_from must be 'start' or 'end', got {count_from!r}")
    return arc_tableau(state, arc), parity


def arc_counts(mate: Sequence[int], start: int, length: int) -> tuple[int, int, int, int]:
    """``(n, E, O, m)`` for the arc of slots ``start, start+1, ...`` (cyclic)."""
    size = len(mate)
    E = O = m = 0
    for j in range(1, length + 1):
        slot = (start + j - 1) % size
        q = (mate[slot] - start) % size + 1
        if q > length:
            m += 1
        elif q < j:
            if j % 2:
                O += 1
            else:
                E += 1
    return length, E, O, m

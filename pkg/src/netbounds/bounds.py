"""Integer intervals for the argument increment of f over an arc.

Everything is measured in units of 2*pi, so an interval ``(lo, hi)`` stands
for the open interval (2*pi*lo, 2*pi*hi).
"""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

from .arcs import ArcTableau
from .errors import InvariantViolation

if TYPE_CHECKING:
    from .trajectory import TrajectoryState


class IntegerInterval(NamedTuple):
    lo: int
    hi: int

    def mirrored(self) -> IntegerInterval:
        return IntegerInterval(-self.hi, -self.lo)

    def reflected(self, c: int) -> IntegerInterval:
        """``(c - hi, c - lo)``: the bound the complementary arc puts on this one."""
        return IntegerInterval(c - self.hi, c - self.lo)

    def intersect(self, other: IntegerInterval) -> IntegerInterval:
        return IntegerInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    @property
    def empty(self) -> bool:
        return self.lo >= self.hi


def _halve(twice: int) -> int:
    if twice % 2:
        raise InvariantViolation(f"endpoint {twice}*pi is not a multiple of 2*pi")
    return twice // 2


def raw_interval(n: int, E: int, O: int) -> IntegerInterval:
    """Interval for an orientation-preserving start, from the counts alone."""
    parity = (n + 1) % 2
    return IntegerInterval(_halve(parity - n + 4 * O - 1), _halve(parity + n - 4 * E + 1))


def interval_nondegenerate(T: ArcTableau, orient: int) -> IntegerInterval:
    """Bounds for the increment over an arc with only simple vertices.

    ``orient`` is +1 when f preserves orientation between the start of the arc
    and its first vertex.  Reversed orientation is handled by passing to 1/f,
    which negates the increment and mirrors the interval.
    """
    iv = raw_interval(T.n, T.E, T.O)
    return iv if orient > 0 else iv.mirrored()


def interval_degenerate(T: ArcTableau, parity: int, orient: int) -> IntegerInterval:
    """Bounds when the arc holds a degree-6 double point with both chords leaving.

    The double point is a segment of length zero between two exits, so the
    open unit interval it would contribute collapses to its endpoint: for odd
    ``parity`` the upper end drops by one, for even parity the lower end rises.
    """
    lo, hi = raw_interval(T.n, T.E, T.O)
    if parity % 2:
        hi -= 1
    else:
        lo += 1
    iv = IntegerInterval(lo, hi)
    return iv if orient > 0 else iv.mirrored()


def segment_interval(T: ArcTableau, orient: int) -> IntegerInterval:
    """Same bounds as :func:`interval_nondegenerate`, summed segment by segment.

    Each stretch between consecutive exiting vertices has only internal
    chords; its increment lies in a unit interval fixed by its even/odd counts
    and by the orientation on it, which flips at every exit.
    """
    lo = hi = 0
    for i, (e, o) in enumerate(T.segments):
        if i % 2 == 0:
            lo, hi = lo + o - e, hi + o - e + 1
        else:
            lo, hi = lo + o - e - 1, hi + o - e
    iv = IntegerInterval(lo, hi)
    return iv if orient > 0 else iv.mirrored()


def full_counts(mate, anchor: int) -> tuple[int, int]:
    """Even/odd second-row counts of the whole net read from slot ``anchor``."""
    size = len(mate)
    E = O = 0
    for j in range(1, size + 1):
        q = (mate[(anchor + j - 1) % size] - anchor) % size + 1
        if q < j:
            if j % 2:
                O += 1
            else:
                E += 1
    return E, O


def winding_from_counts(E: int, O: int, orient: int) -> int:
    return orient * (E - O - 1)


def winding_constant(state: TrajectoryState) -> int:
    """c with 2*pi*c = L([r, s]) + L([s, r]).

    The net is read starting from the vertex immediately clockwise of r; with
    f orientation preserving just counterclockwise of r, c = E - O - 1.  For a
    reversed orientation the total increment changes sign.
    """
    order = state.vertices_from_before_r()
    index = {v: i for i, v in enumerate(order, 1)}
    E = O = 0
    for v, j in index.items():
        if index[state.partner[v]] < j:
            if j % 2:
                O += 1
            else:
                E += 1
    return winding_from_counts(E, O, state.orient)

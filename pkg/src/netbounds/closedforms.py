"""Closed forms and direct counts for the cases k = 1 and k = 2."""

from __future__ import annotations

from .diagrams import ChordDiagram, catalan_u, enumerate_diagrams

# coefficients of u_{d-2}, u_{d-3}, ... in N_j, obtained by inclusion-exclusion
NK_COEFFICIENTS = {
    2: (1,),
    3: (1, -2),
    4: (1, -4, 3),
    5: (1, -6, 10, -4),
    6: (1, -8, 21, -20, 5),
}


def k1_bound(d: int) -> int:
    """u_d - 2 u_{d-1}: nets whose distinguished vertex has no chord to a neighbour."""
    if d < 3:
        raise ValueError(f"k1_bound needs d >= 3, got {d}")
    return catalan_u(d) - 2 * catalan_u(d - 1)


def neighbor_free_count(g: ChordDiagram) -> int:
    """Number of positions whose chord does not go to a cyclic neighbour."""
    n = g.size
    return sum(1 for i, j in enumerate(g.mate) if j not in ((i - 1) % n, (i + 1) % n))


def _check_nk_args(d: int, j: int) -> None:
    if d < 4:
        raise ValueError(f"nk needs d >= 4, got {d}")
    if not 2 <= j <= d - 2:
        raise ValueError(f"nk needs 2 <= j <= d-2 = {d - 2}, got {j}")


def nk_closed(d: int, j: int) -> int:
    _check_nk_args(d, j)
    coeffs = NK_COEFFICIENTS[j]
    return sum(a * catalan_u(d - 2 - t) for t, a in enumerate(coeffs))


def nk_enumerated(d: int, j: int) -> int:
    """Nets on 2d-6 points with no chord {i, i+1} for 1 <= i < 2j-3."""
    _check_nk_args(d, j)
    count = 0
    for g in enumerate_diagrams(d - 2):
        if all(g.mate[i - 1] != i for i in range(1, 2 * j - 3)):
            count += 1
    return count


def nk(d: int, j: int) -> int:
    """The number N_j used in the k = 2 count, closed form where one is known."""
    if j in NK_COEFFICIENTS:
        return nk_closed(d, j)
    return nk_enumerated(d, j)


def script_n(d: int) -> int:
    if d < 4:
        raise ValueError(f"script_n needs d >= 4, got {d}")
    return sum(nk(d, j) for j in range(2, d - 1))


def script_n_enumerated(d: int) -> int:
    """Nets with chord {1, 2} whose next adjacent chord {p, p+1} has p even and 4 <= p <= 2d-4."""
    if d < 4:
        raise ValueError(f"script_n needs d >= 4, got {d}")
    count = 0
    for g in enumerate_diagrams(d):
        if g.mate[0] != 1:
            continue
        first = next((p for p in range(3, g.size) if g.mate[p - 1] == p), None)
        if first is not None and first % 2 == 0 and 4 <= first <= 2 * d - 4:
            count += 1
    return count

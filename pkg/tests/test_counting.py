from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from netbounds.closedforms import neighbor_free_count
from netbounds.conventions import Convention
from netbounds.counting import (
    BoundReport,
    ExtremumPoint,
    extrema,
    extrema_arrays,
    lower_bound,
    orbit_words,
    orbits,
    reports,
    sum_v,
    v_from_extrema,
    v_of_net,
)
from netbounds.diagrams import ChordDiagram, enumerate_diagrams, parse_diagram, shift
from netbounds.errors import InvariantViolation
from netbounds.trajectory import collect_grid


def between(i, j, size):
    """Cyclic open interval (i, j) of indices."""
    out, p = [], (i + 1) % size
    while p != j:
        out.append(p)
        p = (p + 1) % size
    return out


def brute_extrema(lower, upper):
    """The max/min definition transcribed clause by clause."""
    size = len(lower)
    points = []
    for i in range(size):
        L, U = lower[i], upper[i]
        max1 = any(L >= upper[k] and all(L > lower[j] for j in between(k, i, size)) for k in range(size))
        max2 = any(L >= upper[k] and all(L >= lower[j] for j in between(i, k, size)) for k in range(size))
        min1 = any(U <= lower[k] and all(U < upper[j] for j in between(k, i, size)) for k in range(size))
        min2 = any(U <= lower[k] and all(U <= upper[j] for j in between(i, k, size)) for k in range(size))
        if max1 and max2:
            points.append((i, "max", L))
        if min1 and min2:
            points.append((i, "min", U))
    return points


def as_tuples(points):
    return [(p.index, p.kind, p.level) for p in points]


@pytest.mark.parametrize("d", range(3, 7))
def test_extrema_match_brute_force_on_reachable_grids(d):
    for g in enumerate_diagrams(d):
        for k in range(1, 2 * d - 3):
            grid = collect_grid(g, k)
            assert as_tuples(extrema(grid)) == brute_extrema(grid.lower, grid.upper)


@st.composite
def grids(draw):
    size = draw(st.integers(min_value=2, max_value=12))
    lower = draw(st.lists(st.integers(-3, 3), min_size=size, max_size=size))
    widths = draw(st.lists(st.integers(1, 3), min_size=size, max_size=size))
    return lower, [lo + w for lo, w in zip(lower, widths)]


@given(grids())
def test_extrema_match_brute_force_on_random_grids(grid):
    lower, upper = grid
    want = brute_extrema(lower, upper)
    kinds = [k for _, k, _ in want]
    alternating = len(want) != 1 and all(a != b for a, b in zip(kinds, kinds[1:] + kinds[:1]))
    if alternating or not want:
        assert as_tuples(extrema_arrays(lower, upper)) == want
    else:
        with pytest.raises(InvariantViolation):
            extrema_arrays(lower, upper)


def test_constant_grid_has_no_extrema():
    assert extrema_arrays([0] * 8, [1] * 8) == []
    assert v_from_extrema([]) == 0


def test_v_rejects_min_above_max():
    pts = [ExtremumPoint(0, "max", 0), ExtremumPoint(3, "min", 1)]
    with pytest.raises(InvariantViolation):
        v_from_extrema(pts)


def test_two_extrema_on_small_net():
    grid = collect_grid(parse_diagram("(())()"), 1)
    pts = extrema(grid)
    assert len(pts) == 2
    assert as_tuples(pts) == brute_extrema(grid.lower, grid.upper)


@pytest.mark.parametrize("word, v", [("(())()", 2), ("()()()", 0)])
def test_v_examples(word, v):
    assert v_of_net(parse_diagram(word), 1) == v


def test_worked_example_exists():
    # the only min at W_2 with U = 0, the only max at W_5 with L = 0, V = 2, c = 0
    hits = []
    for g in enumerate_diagrams(4):
        grid = collect_grid(g, 1)
        pts = as_tuples(extrema(grid))
        if grid.c == 0 and pts == [(5, "min", 0), (11, "max", 0)]:
            hits.append(g)
            assert v_of_net(g, 1) == 2
    assert hits


@pytest.mark.parametrize("d", range(3, 8))
def test_k1_neighbour_free_oracle(d):
    for g in enumerate_diagrams(d):
        assert v_of_net(g, 1) == neighbor_free_count(g)


def test_d4_k1_multiset():
    assert Counter(v_of_net(g, 1) for g in enumerate_diagrams(4)) == Counter({0: 2, 2: 3})


@pytest.mark.parametrize("d", range(3, 7))
def test_v_shift_invariant(d):
    for g in enumerate_diagrams(d):
        for k in range(1, 2 * d - 3):
            assert v_of_net(g, k) == v_of_net(shift(g), k)


@pytest.mark.parametrize("d", range(3, 6))
def test_v_orientation_flip_invariant(d):
    flipped = Convention(initial_orient=-1)
    for g in enumerate_diagrams(d):
        for k in range(1, 2 * d - 3):
            assert v_of_net(g, k) == v_of_net(g, k, flipped)


@pytest.mark.parametrize("d", range(4, 7))
def test_k2_max_points_are_zero_two(d):
    for g in enumerate_diagrams(d):
        grid = collect_grid(g, 2)
        for p in extrema(grid):
            pair = (grid.lower[p.index], grid.upper[p.index])
            assert pair == ((0, 2) if p.kind == "max" else (-2, 0))


def brute_orbits(d):
    left = set(enumerate_diagrams(d))
    sizes = []
    while left:
        g = min(left, key=lambda h: h.word)
        orbit, h = set(), g
        while h not in orbit:
            orbit.add(h)
            h = shift(h)
        left -= orbit
        sizes.append((g.word, len(orbit)))
    return sorted(sizes)


@pytest.mark.parametrize("d", range(2, 9))
def test_orbits_match_brute_force(d):
    assert sorted(orbit_words(d)) == brute_orbits(d)
    for o in orbits(d):
        assert (2 * d - 2) % o.period == 0


def test_orbit_examples():
    assert [(o.representative.word, o.period) for o in orbits(2)] == [("()", 1)]
    d4 = {o.representative.word: o.period for o in orbits(4)}
    assert sum(d4.values()) == 5
    # the order-3 symmetric net and its single rotation form one orbit
    assert d4["(()())"] == 2
    assert shift(parse_diagram("(()())")) == parse_diagram("()()()")


@pytest.mark.parametrize("d", range(3, 8))
def test_orbit_sum_equals_plain_sum(d):
    ks = range(1, 2 * d - 3)
    plain = {k: sum(v_of_net(g, k) for g in enumerate_diagrams(d)) for k in ks}
    assert sum_v(d, ks, use_orbits=False) == plain
    assert sum_v(d, ks, use_orbits=True) == plain
    for total in plain.values():
        assert total % (2 * d - 2) == 0


def test_parallel_sum_matches_serial():
    ks = range(1, 9)
    # 132 plain items is enough to take the process-pool path
    assert sum_v(7, ks, jobs=2, use_orbits=False) == sum_v(7, ks, jobs=1)


@pytest.mark.parametrize("d, k, bound", [(3, 1, 0), (4, 1, 1), (6, 3, 12), (8, 5, 115), (8, 6, 117)])
def test_lower_bound_examples(d, k, bound):
    rep = lower_bound(d, k)
    assert rep.bound == bound
    assert rep.sum_v == bound * (2 * d - 2)
    assert rep.diagram_count == sum(1 for _ in enumerate_diagrams(d))


def test_start_counted_parity_gives_other_values():
    start = Convention(double_point_parity="start")
    assert [r.bound for r in reports(8, [5, 6], convention=start)] == [113, 113]


def test_lower_bound_ranges():
    with pytest.raises(ValueError):
        lower_bound(2, 1)
    with pytest.raises(ValueError):
        lower_bound(5, 7)


def test_report_checks_divisibility():
    with pytest.raises(InvariantViolation):
        BoundReport(4, 1, 7, 1, 5, 0.0)


def test_single_point_diagram_rejected():
    with pytest.raises(ValueError):
        ChordDiagram(())

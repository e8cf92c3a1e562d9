from __future__ import annotations

import pytest

from netbounds.closedforms import (
    NK_COEFFICIENTS,
    k1_bound,
    neighbor_free_count,
    nk,
    nk_closed,
    nk_enumerated,
    script_n,
    script_n_enumerated,
)
from netbounds.diagrams import ChordDiagram, catalan_u, enumerate_diagrams
from netbounds.reference import PUBLISHED


@pytest.mark.parametrize("d, want", [(3, 0), (4, 1), (8, 165)])
def test_k1_bound(d, want):
    assert k1_bound(d) == want


def test_k1_bound_matches_published_row():
    for d in range(4, 15):
        assert k1_bound(d) == PUBLISHED[(d, 1)]


def test_neighbor_free_examples():
    assert neighbor_free_count(ChordDiagram.from_pairs([(1, 2), (3, 4), (5, 6)])) == 0
    assert neighbor_free_count(ChordDiagram.from_pairs([(1, 4), (2, 3), (5, 6)])) == 2
    assert sum(neighbor_free_count(g) for g in enumerate_diagrams(4)) == 6


@pytest.mark.parametrize("d", range(4, 10))
def test_neighbor_free_sum(d):
    total = sum(neighbor_free_count(g) for g in enumerate_diagrams(d))
    assert total == (2 * d - 2) * k1_bound(d)


def test_nk_examples():
    assert nk(5, 3) == catalan_u(3) - 2 * catalan_u(2) == 0
    assert nk(8, 4) == 42 - 56 + 15 == 1
    assert nk_enumerated(8, 4) == 1
    for d in range(4, 13):
        assert nk(d, 2) == catalan_u(d - 2)


@pytest.mark.parametrize("d", range(4, 13))
def test_nk_closed_forms_match_enumeration(d):
    for j in NK_COEFFICIENTS:
        if j <= d - 2:
            assert nk_closed(d, j) == nk_enumerated(d, j), (d, j)


def test_nk_beyond_closed_forms_uses_enumeration():
    assert nk(9, 7) == nk_enumerated(9, 7)


@pytest.mark.parametrize("d, j", [(3, 2), (6, 1), (6, 5)])
def test_nk_ranges(d, j):
    with pytest.raises(ValueError):
        nk(d, j)


def test_script_n_values():
    assert [script_n(d) for d in range(4, 9)] == [1, 2, 6, 18, 57]
    assert [script_n_enumerated(d) for d in range(4, 10)] == [script_n(d) for d in range(4, 10)]
    assert [PUBLISHED[(d, 2)] for d in range(4, 9)] == [1, 2, 6, 18, 57]


def test_script_n_d8_expansion():
    u = catalan_u
    assert 5 * u(6) - 20 * u(5) + 34 * u(4) - 24 * u(3) + 5 * u(2) == script_n(8)

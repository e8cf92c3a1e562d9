"""Every acceptance criterion, one pass/fail line each.

The full level recomputes the whole published table (about six minutes on a
single core).  Set NETBOUNDS_ACCEPTANCE_LEVEL=fast to stop at d = 8.
"""

from __future__ import annotations

import os

import pytest

from netbounds.checks import PROPERTIES, run_all
from netbounds.counting import default_jobs

LEVEL = os.environ.get("NETBOUNDS_ACCEPTANCE_LEVEL", "full")

CRITERIA = [
    "1 table reproduction",
    "1 runtime targets",
    "2 k=1 closed form",
    "3 k=2 closed form",
    "4 N_j inclusion-exclusion",
    "5 k=1 per-net oracle",
    *(f"6 property: {name}" for name, _ in PROPERTIES),
    "7 internal assertions",
]

LINES: list[str] = []


@pytest.fixture(scope="module")
def results():
    # no cache: every value is recomputed from scratch
    out = run_all(LEVEL, jobs=default_jobs(), cache=None)
    LINES.extend(r.line() for r in out)
    return {r.name: r for r in out}


def test_every_criterion_reported(results):
    assert sorted(results) == sorted(CRITERIA)


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(results, name):
    r = results[name]
    print(r.line())
    assert r.passed, r.line()

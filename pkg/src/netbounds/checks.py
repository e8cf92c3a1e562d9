"""The acceptance checks, shared by ``netbounds verify`` and the test suite.

Each check returns one or more :class:`CheckResult` lines.  ``fast`` limits
the table slice to d <= 8; ``full`` covers every published entry.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .arcs import Arc, arc_tableau, degenerate_arc_tableau
from .bounds import interval_degenerate, interval_nondegenerate
from .cache import ResultCache, ResultRecord
from .closedforms import (
    NK_COEFFICIENTS,
    k1_bound,
    neighbor_free_count,
    nk_closed,
    nk_enumerated,
    script_n,
    script_n_enumerated,
)
from .conventions import DEFAULT, Convention
from .counting import extrema, reports, sum_v, v_of_net
from .diagrams import catalan_u, enumerate_diagrams, from_tableau, shift, to_tableau
from .errors import InvariantViolation
from .reference import D_MAX, PUBLISHED
from .trajectory import (
    EventKind,
    collect_grid,
    collect_grid_by_events,
    initial_state,
    run_trajectory,
    sr_orientation,
)

LEVELS = {"fast": 8, "full": D_MAX}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class TableRun:
    """Bounds for every published (d, k) up to ``dmax``, plus what went wrong."""

    dmax: int
    records: dict[tuple[int, int], ResultRecord] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    seconds: dict[int, float] = field(default_factory=dict)
    cached: int = 0

    @property
    def values(self) -> dict[tuple[int, int], int]:
        return {key: rec.bound for key, rec in self.records.items()}


def run_table(
    dmax: int,
    *,
    jobs: int = 1,
    cache: ResultCache | None = None,
    convention: Convention = DEFAULT,
) -> TableRun:
    run = TableRun(dmax)
    for d in range(4, dmax + 1):
        ks = list(range(1, d - 1))
        todo = []
        for k in ks:
            rec = cache.load(d, k) if cache is not None else None
            if rec is None:
                todo.append(k)
            else:
                run.records[(d, k)] = rec
                run.cached += 1
        if not todo:
            continue
        start = time.perf_counter()
        try:
            for rep in reports(d, todo, jobs=jobs, convention=convention):
                rec = ResultRecord.from_report(rep, convention)
                run.records[(d, rep.k)] = rec
                if cache is not None:
                    cache.store(rec)
        except InvariantViolation as exc:
            run.failures.append(f"d={d}: {exc}")
        run.seconds[d] = time.perf_counter() - start
    return run


def check_table(run: TableRun) -> CheckResult:
    expected = {key: v for key, v in PUBLISHED.items() if key[0] <= run.dmax}
    wrong = [
        f"({d},{k}) got {run.values.get((d, k))} want {v}"
        for (d, k), v in sorted(expected.items())
        if run.values.get((d, k)) != v
    ]
    detail = f"{len(expected) - len(wrong)}/{len(expected)} entries for d <= {run.dmax}"
    if run.cached:
        detail += f", {run.cached} from cache"
    if wrong:
        detail += "; " + "; ".join(wrong[:5])
    return CheckResult("1 table reproduction", not wrong, detail)


def check_runtime(run: TableRun, jobs: int) -> CheckResult:
    """The d <= 10 slice must take under a minute, the whole table under 30."""
    if run.cached:
        return CheckResult("1 runtime targets", True, "not measured: some values came from the cache")
    top = min(run.dmax, 10)
    head = sum(t for d, t in run.seconds.items() if d <= 10)
    total = sum(run.seconds.values())
    ok = head < 60 and total < 30 * 60
    detail = f"d <= {top} in {head:.1f}s, d <= {run.dmax} in {total:.1f}s with {jobs} worker(s)"
    return CheckResult("1 runtime targets", ok, detail)


def check_assertions(run: TableRun) -> CheckResult:
    detail = "no internal assertion failures" if not run.failures else "; ".join(run.failures)
    return CheckResult("7 internal assertions", not run.failures, detail)


def check_k1_closed_form(run: TableRun) -> CheckResult:
    bad = [d for d in range(4, run.dmax + 1) if run.values.get((d, 1)) != k1_bound(d)]
    return CheckResult("2 k=1 closed form", not bad, f"d=4..{run.dmax}" + (f", mismatch at {bad}" if bad else ""))


def check_k2_closed_form(run: TableRun) -> CheckResult:
    want = [1, 2, 6, 18, 57]
    got = [script_n(d) for d in range(4, 9)]
    enum = [script_n_enumerated(d) for d in range(4, 9)]
    computed = [run.values.get((d, 2)) for d in range(4, 9)]
    table = [PUBLISHED[(d, 2)] for d in range(4, 9)]
    ok = got == want == enum == computed == table
    return CheckResult("3 k=2 closed form", ok, f"closed {got}, enumerated {enum}, algorithm {computed}")


def check_nk_identities(dmax: int = 12) -> CheckResult:
    bad = []
    total = 0
    for d in range(4, dmax + 1):
        for j in NK_COEFFICIENTS:
            if j <= d - 2:
                total += 1
                if nk_closed(d, j) != nk_enumerated(d, j):
                    bad.append((d, j))
    return CheckResult("4 N_j inclusion-exclusion", not bad, f"{total} (d, j) pairs" + (f", mismatch {bad}" if bad else ""))


def check_k1_oracle(dmax: int = 7) -> CheckResult:
    bad = []
    for d in range(4, dmax + 1):
        for g in enumerate_diagrams(d):
            if v_of_net(g, 1) != neighbor_free_count(g):
                bad.append(g.word)
    multiset = sorted(v_of_net(g, 1) for g in enumerate_diagrams(4))
    ok = not bad and multiset == [0, 0, 2, 2, 2]
    return CheckResult("5 k=1 per-net oracle", ok, f"d=4..{dmax}, d=4 multiset {multiset}" + (f", mismatch {bad[:3]}" if bad else ""))


# property suite ------------------------------------------------------------


def _all_ks(d: int) -> range:
    return range(1, 2 * d - 3)


def _prop_enumeration() -> bool:
    return all(sum(1 for _ in enumerate_diagrams(d)) == catalan_u(d) for d in range(2, 9))


def _prop_bijection() -> bool:
    for d in range(2, 7):
        for g in enumerate_diagrams(d):
            if from_tableau(to_tableau(g)) != g:
                return False
            t = to_tableau(g)
            if to_tableau(from_tableau(t)) != t:
                return False
    return True


def _prop_shift_order() -> bool:
    for d in range(2, 7):
        nets = set(enumerate_diagrams(d))
        if {shift(g) for g in nets} != nets:
            return False
        for g in nets:
            h, order = shift(g), 1
            while h != g:
                h, order = shift(h), order + 1
            if (2 * d - 2) % order:
                return False
    return True


def _prop_shift_invariance() -> bool:
    return all(
        v_of_net(g, k) == v_of_net(shift(g), k)
        for d in range(3, 7)
        for g in enumerate_diagrams(d)
        for k in _all_ks(d)
    )


def _prop_flip_invariance() -> bool:
    flipped = Convention(-1, DEFAULT.double_point_parity)
    return all(
        v_of_net(g, k) == v_of_net(g, k, flipped)
        for d in range(3, 6)
        for g in enumerate_diagrams(d)
        for k in _all_ks(d)
    )


def _prop_divisibility() -> bool:
    # sum_v without orbit reduction, so divisibility is not built in
    for d in range(3, 9):
        for total in sum_v(d, _all_ks(d), use_orbits=False).values():
            if total % (2 * d - 2):
                return False
    return True


def _prop_extrema() -> bool:
    # extrema() and v_of_net raise on non-alternation or a min above its max
    for d in range(3, 7):
        for g in enumerate_diagrams(d):
            for k in _all_ks(d):
                v_of_net(g, k)
    return True


def _reachable(dmax: int = 6) -> Iterator:
    for d in range(3, dmax + 1):
        for g in enumerate_diagrams(d):
            for k in _all_ks(d):
                state = initial_state(g, k)
                yield state, None
                for before, event in run_trajectory(state):
                    yield before, event


def _prop_widths() -> bool:
    for state, event in _reachable():
        for arc, orient in ((Arc.RS, state.orient), (Arc.SR, sr_orientation(state))):
            T = arc_tableau(state, arc)
            lo, hi = interval_nondegenerate(T, orient)
            if hi - lo != T.m + 1 or T.n != 2 * (T.E + T.O) + T.m:
                return False
            mirrored = interval_nondegenerate(T, -orient)
            if mirrored != (-hi, -lo):
                return False
        if event is not None and event.kind is EventKind.FIXED_DEG6:
            arc = Arc.RS if state.moving_in_rs else Arc.SR
            try:
                T, parity = degenerate_arc_tableau(state, event.vertex, arc)
            except ValueError:
                continue
            lo, hi = interval_degenerate(T, parity, 1)
            if hi - lo != T.m or T.m < 2:
                return False
    return True


def _prop_nonempty() -> bool:
    # BoundsGrid refuses lower >= upper; both routes must agree
    for d in range(3, 7):
        for g in enumerate_diagrams(d):
            for k in _all_ks(d):
                if collect_grid(g, k) != collect_grid_by_events(g, k):
                    return False
    return True


def _prop_inclusion() -> bool:
    for state, _ in _reachable():
        if not state.moving_in_rs:
            continue
        rs = interval_nondegenerate(arc_tableau(state, Arc.RS), state.orient)
        sr = interval_nondegenerate(arc_tableau(state, Arc.SR), sr_orientation(state)).reflected(state.c)
        if not (sr.lo <= rs.lo and rs.hi <= sr.hi):
            return False
    return True


K1_CATALOGUE = {(-1, 1), (-1, 0), (0, 1), (-2, 0), (0, 2)}
K1_FORBIDDEN = [
    ((0, 1), (-1, 1), (-1, 0)),
    ((0, 1), (-1, 1), (-2, 0)),
    ((0, 2), (-1, 1), (-1, 0)),
]


def _k1_triples_ok(pairs: list[tuple[int, int]]) -> bool:
    size = len(pairs)
    triples = {tuple(pairs[(i + t) % size] for t in range(3)) for i in range(size)}
    for bad in K1_FORBIDDEN:
        if bad in triples or bad[::-1] in triples:
            return False
    return True


def _prop_k1_catalogue() -> bool:
    for d in range(3, 7):
        for g in enumerate_diagrams(d):
            pairs = collect_grid(g, 1).pairs()
            if not set(pairs) <= K1_CATALOGUE or not _k1_triples_ok(pairs):
                return False
    return True


def _prop_k2_max() -> bool:
    for d in range(4, 7):
        for g in enumerate_diagrams(d):
            grid = collect_grid(g, 2)
            for p in extrema(grid):
                if p.kind == "max" and (grid.lower[p.index], grid.upper[p.index]) != (0, 2):
                    return False
    return True


PROPERTIES: list[tuple[str, Callable[[], bool]]] = [
    ("enumeration counts are Catalan, d <= 8", _prop_enumeration),
    ("tableau bijection round trips, d <= 6", _prop_bijection),
    ("shift order divides 2d-2, d <= 6", _prop_shift_order),
    ("V invariant under shift, d <= 6", _prop_shift_invariance),
    ("V invariant under orientation flip, d <= 5", _prop_flip_invariance),
    ("sum of V divisible by 2d-2, d <= 8", _prop_divisibility),
    ("extrema alternate with min <= max, d <= 6", _prop_extrema),
    ("interval widths m+1 and m, d <= 6", _prop_widths),
    ("L < U everywhere and both grid routes agree, d <= 6", _prop_nonempty),
    ("W_n inclusion on every sub-configuration, d <= 6", _prop_inclusion),
    ("k=1 catalogue and forbidden triples, d <= 6", _prop_k1_catalogue),
    ("k=2 max points sit on (0, 2), d <= 6", _prop_k2_max),
]


def check_properties() -> list[CheckResult]:
    out = []
    for name, fn in PROPERTIES:
        try:
            ok, detail = fn(), ""
        except InvariantViolation as exc:
            ok, detail = False, str(exc)
        out.append(CheckResult(f"6 property: {name}", ok, detail))
    return out


def run_all(
    level: str = "fast",
    *,
    jobs: int = 1,
    cache: ResultCache | None = None,
    report: Callable[[CheckResult], None] | None = None,
) -> list[CheckResult]:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {sorted(LEVELS)}")
    results: list[CheckResult] = []

    def emit(r: CheckResult) -> None:
        results.append(r)
        if report is not None:
            report(r)

    run = run_table(LEVELS[level], jobs=jobs, cache=cache)
    emit(check_table(run))
    emit(check_runtime(run, jobs))
    emit(check_k1_closed_form(run))
    emit(check_k2_closed_form(run))
    emit(check_nk_identities())
    emit(check_k1_oracle())
    for r in check_properties():
        emit(r)
    emit(check_assertions(run))
    return results


def summary(results: list[CheckResult]) -> Counter:
    return Counter("pass" if r.passed else "fail" for r in results)

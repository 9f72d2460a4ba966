"""Exhaustive and structure-driven enumeration of solutions.

Three independent routes produce solution lists that must agree:

* ``raw`` -- scan every star table (and every dot table, if none is fixed);
* ``theta-scan`` -- on a group, scan every candidate ``θ_1`` self-map and
  keep those whose induced ``θ`` table passes the componentwise conditions;
* ``theorem`` -- build one solution per normal subgroup and transversal.

Lists are deduplicated and sorted by :meth:`PairMap.key`.
"""
from __future__ import annotations

import dataclasses
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import kernels
from .algebra import Group, Magma, normal_subgroups, representative_systems
from .errors import BudgetExceededError, InternalConsistencyError
from .pentagon import PairMap, SolutionProfile, are_equivalent, is_solution_direct, profile
from .theta import coset_solution, decompose, theta_from_theta_one

__all__ = [
    "EnumerationReport", "enumerate_raw", "enumerate_on_group",
    "enumerate_by_theorem", "count_by_formula", "classify",
    "star_group_search", "filter_profiles", "left_projection",
]

log = logging.getLogger(__name__)

RAW_FREE_BUDGET = 4 ** 4
RAW_FIXED_BUDGET = 3 ** 9
THETA_BUDGET = 8 ** 8
DOT_SCAN_BUDGET = 3 ** 9
CLASSIFY_LIMIT = 6


@dataclass(frozen=True)
class EnumerationReport:
    carrier: str
    n: int
    method: str
    solutions: tuple[PairMap, ...]
    profiles: tuple[SolutionProfile, ...]
    classes: tuple[tuple[int, ...], ...] | None = None

    @property
    def count(self) -> int:
        return len(self.solutions)

    def keys(self) -> list[tuple[int, ...]]:
        return [s.key() for s in self.solutions]

    def same_solutions(self, other: "EnumerationReport") -> bool:
        return self.keys() == other.keys()

    def to_dict(self) -> dict:
        return {
            "carrier": self.carrier,
            "n": self.n,
            "method": self.method,
            "count": self.count,
            "solutions": [
                {"dot": s.dot.tolist(), "star": s.star.tolist(), "profile": p.as_dict()}
                for s, p in zip(self.solutions, self.profiles)
            ],
            "classes": None if self.classes is None else [list(c) for c in self.classes],
        }

    def to_text(self) -> str:
        out = [f"carrier: {self.carrier}", f"n: {self.n}", f"method: {self.method}",
               f"count: {self.count}"]
        for i, (s, p) in enumerate(zip(self.solutions, self.profiles)):
            flags = " ".join(f"{k}={int(v)}" for k, v in p.as_dict().items())
            out.append(f"solution {i}: {s.encode()}")
            out.append(f"  profile: {flags}")
        if self.classes is not None:
            out.append(f"classes: {len(self.classes)}")
            for i, c in enumerate(self.classes):
                out.append(f"class {i}: {' '.join(map(str, c))}")
        return "\n".join(out) + "\n"


def _report(carrier, n, method, maps) -> EnumerationReport:
    unique = {s.key(): s for s in maps}
    ordered = tuple(PairMap(unique[k].dot, unique[k].star) for k in sorted(unique))
    return EnumerationReport(carrier, n, method, ordered, tuple(profile(s) for s in ordered))


def _decode(indices, n, width):
    powers = n ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (np.asarray(indices, dtype=np.int64)[:, None] // powers) % n


def _check_budget(what, size, budget):
    if size > budget:
        raise BudgetExceededError(what, size, budget)


def enumerate_raw(n: int, fixed_dot: Magma | None = None, budget: int | None = None) -> EnumerationReport:
    """All solutions on ``{0..n-1}``, optionally with a prescribed dot table."""
    if fixed_dot is None:
        budget = RAW_FREE_BUDGET if budget is None else budget
        _check_budget("raw scan", (n * n) ** (n * n), budget)
        dots = _decode(np.arange(n ** (n * n)), n, n * n).reshape(-1, n, n)
        carrier = f"set of size {n}"
    else:
        n = fixed_dot.n
        budget = RAW_FIXED_BUDGET if budget is None else budget
        _check_budget("raw scan", n ** (n * n), budget)
        dots = [fixed_dot.table]
        carrier = fixed_dot.name or f"magma of size {n}"
    found = []
    for dot in dots:
        dot = kernels.as_table(dot)
        hits = np.flatnonzero(kernels.star_scan(dot))
        found.extend(PairMap(dot, star.reshape(n, n)) for star in _decode(hits, n, n * n))
    return _report(carrier, n, "raw", found)


def enumerate_on_group(g: Group, budget: int | None = None) -> EnumerationReport:
    """Scan every candidate ``θ_1`` and keep those giving a solution."""
    budget = THETA_BUDGET if budget is None else budget
    _check_budget("theta scan", g.n ** g.n, budget)
    mask = kernels.theta_scan(kernels.as_table(g.table), kernels.as_table(g.inverse))
    t1s = _decode(np.flatnonzero(mask), g.n, g.n)
    log.debug("theta scan on %s: %d of %d candidates pass", g.name, len(t1s), mask.size)
    maps = [PairMap(g.table, theta_from_theta_one(g, t1)) for t1 in t1s]
    return _report(g.name or f"group of order {g.n}", g.n, "theta-scan", maps)


def enumerate_by_theorem(g: Group) -> EnumerationReport:
    """One solution per normal subgroup ``K`` and transversal ``R ∋ 1``."""
    maps = []
    for K in normal_subgroups(g):
        for R in representative_systems(g, K):
            gs = coset_solution(g, K, R)
            datum = decompose(gs)
            if datum.K.elements != K.elements or datum.R != R:
                raise InternalConsistencyError(f"(K={K.elements}, R={R}) not recovered")
            maps.append(gs.pairmap)
    report = _report(g.name or f"group of order {g.n}", g.n, "theorem", maps)
    if report.count != len(maps):
        raise InternalConsistencyError("distinct (K, R) pairs gave the same solution")
    return report


def count_by_formula(g: Group) -> int:
    """``Σ_K |K| ** (index(K) - 1)`` over normal subgroups ``K``."""
    return sum(len(K) ** (g.n // len(K) - 1) for K in normal_subgroups(g))


def classify(report: EnumerationReport, workers: int = 1, seed: int | None = None,
             limit: int = CLASSIFY_LIMIT) -> EnumerationReport:
    """Partition the solutions of ``report`` into equivalence classes.

    Every pair is tested with :func:`are_equivalent`; ``workers`` and
    ``seed`` only change the order in which pairs are examined. Classes are
    listed by their least member.
    """
    _check_budget("classification", report.n, limit)
    sols = report.solutions
    pairs = [(i, j) for i in range(len(sols)) for j in range(i + 1, len(sols))]
    if seed is not None:
        random.Random(seed).shuffle(pairs)

    def test(pair):
        i, j = pair
        return pair, are_equivalent(sols[i], sols[j]) is not None

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(test, pairs))
    else:
        results = [test(p) for p in pairs]

    parent = list(range(len(sols)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (i, j), same in results:
        if same:
            ri, rj = find(i), find(j)
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(len(sols)):
        groups.setdefault(find(i), []).append(i)
    classes = tuple(tuple(members) for _, members in sorted(groups.items()))
    return dataclasses.replace(report, classes=classes)


def left_projection(n: int) -> Magma:
    x, _ = np.indices((n, n))
    return Magma(x, "left projection")


def star_group_search(g_star: Group, budget: int | None = None) -> list[Magma]:
    """Dot tables making ``(dot, group operation)`` a solution.

    Small groups get a full scan of all dot tables. Larger elementary
    abelian 2-groups only have the left projection verified.
    """
    budget = DOT_SCAN_BUDGET if budget is None else budget
    n = g_star.n
    size = n ** (n * n)
    if size <= budget:
        hits = np.flatnonzero(kernels.dot_scan(kernels.as_table(g_star.table)))
        return [Magma(d.reshape(n, n)) for d in _decode(hits, n, n * n)]
    if g_star.is_elementary_abelian_2():
        left = left_projection(n)
        if not is_solution_direct(PairMap(left.table, g_star.table)):
            raise InternalConsistencyError("left projection failed on an elementary abelian 2-group")
        log.info("dot scan of %d tables over budget; verified left projection only", size)
        return [left]
    raise BudgetExceededError("dot scan", size, budget)


def filter_profiles(report: EnumerationReport,
                    predicate: Callable[[SolutionProfile], bool]) -> EnumerationReport:
    keep = [i for i, p in enumerate(report.profiles) if predicate(p)]
    return dataclasses.replace(
        report,
        solutions=tuple(report.solutions[i] for i in keep),
        profiles=tuple(report.profiles[i] for i in keep),
        classes=None,
    )

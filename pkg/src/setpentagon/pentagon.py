"""Maps ``s(x, y) = (x·y, x∗y)`` on a finite set and their properties.

A map is stored as its two component tables, ``dot`` and ``star``. On
``M³`` the legs act as

* ``s12(x, y, z) = (s(x, y), z)``
* ``s23(x, y, z) = (x, s(y, z))``
* ``s13(x, y, z) = (x', y, z')`` where ``(x', z') = s(x, z)``

and every property below is decided by evaluating both sides on all
``n³`` triples. Failing checks report the lexicographically least triple.
"""
from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from . import kernels
from .algebra import Verdict, frozen_table, validate_magma
from .errors import BudgetExceededError, NotInvertibleError, SizeMismatchError

__all__ = [
    "PairMap", "SolutionProfile", "pairmap", "identity_map", "flip_map",
    "is_solution_direct", "is_solution_conditions", "is_reversed_solution",
    "tau_conjugate", "is_invertible", "inverse", "opposite", "is_commutative",
    "is_cocommutative", "are_equivalent", "transport", "profile",
]

#: Largest carrier for the bijection search in :func:`are_equivalent`.
EQUIVALENCE_LIMIT = 8


@dataclass(frozen=True, eq=False)
class PairMap:
    dot: np.ndarray
    star: np.ndarray
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "dot", frozen_table(self.dot))
        object.__setattr__(self, "star", frozen_table(self.star))

    @property
    def n(self) -> int:
        return self.dot.shape[0]

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return int(self.dot[x, y]), int(self.star[x, y])

    def key(self) -> tuple[int, ...]:
        """Canonical sort key: ``n``, then dot and star tables row by row."""
        return (self.n, *self.dot.ravel().tolist(), *self.star.ravel().tolist())

    def encode(self) -> str:
        d = " ".join(map(str, self.dot.ravel().tolist()))
        s = " ".join(map(str, self.star.ravel().tolist()))
        return f"{d} / {s}"

    def __eq__(self, other):
        if not isinstance(other, PairMap):
            return NotImplemented
        return np.array_equal(self.dot, other.dot) and np.array_equal(self.star, other.star)

    def __hash__(self):
        return hash((self.dot.tobytes(), self.star.tobytes()))

    def __repr__(self):
        label = f", name={self.name!r}" if self.name else ""
        return f"PairMap(n={self.n}{label})"


@dataclass(frozen=True)
class SolutionProfile:
    is_solution: bool
    is_reversed: bool
    is_invertible: bool
    is_commutative: bool
    is_cocommutative: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name.removeprefix("is_"): getattr(self, f.name) for f in fields(self)}


def pairmap(n: int, dot, star, name: str | None = None) -> PairMap:
    """Validated constructor; raises :class:`~setpentagon.errors.TableError`."""
    d = validate_magma(n, dot).table
    s = validate_magma(n, star).table
    return PairMap(d, s, name)


def identity_map(n: int) -> PairMap:
    x, y = np.indices((n, n))
    return PairMap(x, y, "identity")


def flip_map(n: int) -> PairMap:
    x, y = np.indices((n, n))
    return PairMap(y, x, "flip")


def _tables(s):
    return kernels.as_table(s.dot), kernels.as_table(s.star)


def is_solution_direct(s: PairMap) -> Verdict:
    """``s23 s13 s12 == s12 s23`` on every triple."""
    return Verdict.from_flat(kernels.pentagon_failure(*_tables(s)), s.n)


def is_solution_conditions(s: PairMap) -> Verdict:
    """Check the componentwise characterization of a solution.

    1. ``(x·y)·z = x·(y·z)``
    2. ``(x∗y)·((x·y)∗z) = x∗(y·z)``
    3. ``(x∗y)∗((x·y)∗z) = y∗z``

    On failure ``condition`` is the lowest failing condition at the least
    failing triple.
    """
    cond, flat = kernels.conditions_failure(*_tables(s))
    return Verdict.from_flat(flat, s.n, int(cond) if flat >= 0 else None)


def is_reversed_solution(s: PairMap) -> Verdict:
    """``s12 s13 s23 == s23 s12`` on every triple."""
    return Verdict.from_flat(kernels.reversed_failure(*_tables(s)), s.n)


def is_commutative(s: PairMap) -> Verdict:
    """``s12 s13 == s13 s12``."""
    return Verdict.from_flat(kernels.commutative_failure(*_tables(s)), s.n)


def is_cocommutative(s: PairMap) -> Verdict:
    """``s13 s23 == s23 s13``."""
    return Verdict.from_flat(kernels.cocommutative_failure(*_tables(s)), s.n)


def tau_conjugate(s: PairMap) -> PairMap:
    """``τ s τ``: ``(x, y) -> (star(y, x), dot(y, x))``."""
    return PairMap(s.star.T, s.dot.T)


def is_invertible(s: PairMap) -> bool:
    codes = s.dot.ravel() * s.n + s.star.ravel()
    return np.unique(codes).size == s.n * s.n


def inverse(s: PairMap) -> PairMap:
    if not is_invertible(s):
        raise NotInvertibleError("map is not a bijection of M x M")
    n = s.n
    x, y = np.indices((n, n))
    dot = np.empty((n, n), dtype=np.int64)
    star = np.empty((n, n), dtype=np.int64)
    dot[s.dot, s.star] = x
    star[s.dot, s.star] = y
    return PairMap(dot, star)


def opposite(s: PairMap) -> PairMap:
    """``τ s⁻¹ τ``; requires ``s`` invertible."""
    return tau_conjugate(inverse(s))


def transport(s: PairMap, eta) -> PairMap:
    """The map ``r`` with ``(η×η) s = r (η×η)`` for a bijection ``eta``."""
    eta = np.asarray(eta, dtype=np.int64)
    dot = np.empty_like(s.dot)
    star = np.empty_like(s.star)
    dot[np.ix_(eta, eta)] = eta[s.dot]
    star[np.ix_(eta, eta)] = eta[s.star]
    return PairMap(dot, star)


def _equivalence_search(s: PairMap, r: PairMap, first_values):
    n = s.n
    sd, ss = s.dot.tolist(), s.star.tolist()
    rd, rs = r.dot.tolist(), r.star.tolist()
    eta = [-1] * n
    used = [False] * n

    def consistent(x):
        for a in range(x + 1):
            for p, q in ((x, a), (a, x)):
                for src, dst in ((sd, rd), (ss, rs)):
                    v = src[p][q]
                    w = dst[eta[p]][eta[q]]
                    if eta[v] >= 0:
                        if eta[v] != w:
                            return False
                    elif used[w]:
                        return False
        return True

    def extend(x):
        if x == n:
            return True
        for w in (first_values if x == 0 else range(n)):
            if used[w]:
                continue
            eta[x] = w
            used[w] = True
            if consistent(x) and extend(x + 1):
                return True
            eta[x] = -1
            used[w] = False
        return False

    return tuple(eta) if extend(0) else None


def are_equivalent(s: PairMap, r: PairMap, first_values=None) -> tuple[int, ...] | None:
    """Find a bijection ``η`` with ``(η×η) s = r (η×η)``, or ``None``.

    Elements are assigned in increasing order; a partial assignment is
    rejected as soon as some product of assigned elements is sent to the
    wrong place by ``η``. ``first_values`` restricts ``η(0)``, letting a
    caller split the search into independent parts.
    """
    if s.n != r.n:
        raise SizeMismatchError(f"carrier sizes differ: {s.n} vs {r.n}")
    if s.n > EQUIVALENCE_LIMIT:
        raise BudgetExceededError("equivalence search", s.n, EQUIVALENCE_LIMIT)
    if first_values is None:
        first_values = range(s.n)
    return _equivalence_search(s, r, list(first_values))


def profile(s: PairMap) -> SolutionProfile:
    return SolutionProfile(
        is_solution=bool(is_solution_direct(s)),
        is_reversed=bool(is_reversed_solution(s)),
        is_invertible=is_invertible(s),
        is_commutative=bool(is_commutative(s)),
        is_cocommutative=bool(is_cocommutative(s)),
    )

"""Factories for the named families of solutions."""
from __future__ import annotations

import numpy as np

from .algebra import (
    Factorization,
    Group,
    Magma,
    compose,
    factorization,
    is_associative,
    is_endomorphism,
    is_idempotent_map,
    subgroup,
)
from .errors import FactorizationError, MapError, PentagonError
from .groups import permutation_words, sign, symmetric
from .pentagon import PairMap
from .theta import coset_solution

__all__ = [
    "kac_takesaki_s", "kac_takesaki_t", "endo_solution", "constant_solution",
    "militaru", "zakrzewski", "baaj_skandalis", "coset", "sign_solution",
    "alternating_subgroup", "canonical_transposition",
]


def kac_takesaki_s(g: Group) -> PairMap:
    """``(x, y) -> (xy, y)``."""
    _, y = np.indices((g.n, g.n))
    return PairMap(g.table, y, "kt-s")


def kac_takesaki_t(g: Group) -> PairMap:
    """``(x, y) -> (x, x⁻¹y)``."""
    x, y = np.indices((g.n, g.n))
    return PairMap(x, g.table[g.inverse[x], y], "kt-t")


def _self_map(f, n, what):
    f = tuple(int(v) for v in f)
    if len(f) != n or any(not 0 <= v < n for v in f):
        raise MapError(f"{what} must list {n} values in [0, {n})")
    return f


def endo_solution(m: Magma, gamma) -> PairMap:
    """``(x, y) -> (xy, γ(y))`` for an idempotent endomorphism ``γ`` of a semigroup."""
    gamma = _self_map(gamma, m.n, "gamma")
    verdict = is_associative(m)
    if not verdict:
        raise PentagonError(f"operation is not associative at {verdict.witness}")
    if not is_idempotent_map(gamma):
        raise MapError("gamma is not idempotent")
    if not is_endomorphism(m, gamma):
        raise MapError("gamma is not an endomorphism")
    star = np.broadcast_to(np.asarray(gamma), (m.n, m.n))
    return PairMap(m.table, star, "endo")


def constant_solution(m: Magma, e: int | None = None) -> PairMap:
    """``(x, y) -> (xy, e)`` for an idempotent element ``e``.

    ``e`` defaults to the identity when ``m`` has one.
    """
    if e is None:
        ident = [a for a in range(m.n)
                 if all(m.table[a, x] == x == m.table[x, a] for x in range(m.n))]
        if not ident:
            raise PentagonError("no identity; pass an idempotent element")
        e = ident[0]
    if m.table[e, e] != e:
        raise MapError(f"element {e} is not idempotent")
    out = endo_solution(m, [e] * m.n)
    return PairMap(out.dot, out.star, "constant")


def militaru(n: int, alpha, beta) -> PairMap:
    """``(x, y) -> (α(x), β(y))`` for commuting idempotent self-maps."""
    alpha = _self_map(alpha, n, "alpha")
    beta = _self_map(beta, n, "beta")
    if not (is_idempotent_map(alpha) and is_idempotent_map(beta)):
        raise MapError("alpha and beta must be idempotent")
    if compose(alpha, beta) != compose(beta, alpha):
        raise MapError("alpha and beta do not commute")
    x, y = np.indices((n, n))
    return PairMap(np.asarray(alpha)[x], np.asarray(beta)[y], "militaru")


def _checked(g: Group, f: Factorization) -> Factorization:
    try:
        ok = factorization(g, f.A, f.B)
    except PentagonError as exc:
        raise FactorizationError(str(exc)) from exc
    if ok != f:
        raise FactorizationError("projection tables do not match the subgroups")
    return f


def zakrzewski(g: Group, f: Factorization) -> PairMap:
    """``(x, y) -> (p2(y p1(x)⁻¹) x, y p1(x)⁻¹)``."""
    f = _checked(g, f)
    x, y = np.indices((g.n, g.n))
    p1 = np.asarray(f.p1)
    p2 = np.asarray(f.p2)
    u = g.table[y, g.inverse[p1[x]]]
    return PairMap(g.table[p2[u], x], u, "zakrzewski")


def baaj_skandalis(g: Group, f: Factorization) -> PairMap:
    """``(x, y) -> (x p1(p2(x)⁻¹ y), p2(x)⁻¹ y)``."""
    f = _checked(g, f)
    x, y = np.indices((g.n, g.n))
    p1 = np.asarray(f.p1)
    p2 = np.asarray(f.p2)
    v = g.table[g.inverse[p2[x]], y]
    return PairMap(g.table[x, p1[v]], v, "baaj-skandalis")


def coset(g: Group, K, R) -> PairMap:
    """``(x, y) -> (xy, μ(x)⁻¹ μ(xy))`` for a normal ``K`` and transversal ``R ∋ 1``."""
    out = coset_solution(g, K, R).pairmap
    return PairMap(out.dot, out.star, "coset")


def alternating_subgroup(degree: int) -> tuple[int, ...]:
    """Indices of the even permutations in :func:`~setpentagon.groups.symmetric`."""
    return tuple(i for i, w in enumerate(permutation_words(degree)) if sign(w) == 1)


def canonical_transposition(degree: int) -> int:
    """Index of the transposition swapping points 0 and 1."""
    word = (1, 0) + tuple(range(2, degree))
    return permutation_words(degree).index(word)


def sign_solution(degree: int) -> PairMap:
    """Solution on ``S_n`` whose ``μ`` sends odd permutations to a fixed transposition."""
    if not 3 <= degree <= 4:
        raise PentagonError(f"degree must be 3 or 4, got {degree}")
    g = symmetric(degree)
    K = subgroup(g, alternating_subgroup(degree))
    R = (g.identity, canonical_transposition(degree))
    out = coset_solution(g, K, R).pairmap
    return PairMap(out.dot, out.star, "sign")

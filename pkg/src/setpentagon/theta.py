"""Solutions on a group, written ``s(x, y) = (xy, θ_x(y))``.

Every solution is determined by the row ``θ_1`` through
``θ_x(y) = θ_1(x)⁻¹ θ_1(xy)``, and corresponds to a normal subgroup ``K``
(the kernel, where ``θ_1`` hits the identity) together with a system ``R``
of right-coset representatives containing the identity (the image of
``θ_1``). :func:`coset_solution` and :func:`decompose` are the two
directions of that correspondence.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    Group,
    SubgroupDescriptor,
    frozen_table,
    is_normal_subset,
    is_subgroup,
    right_cosets,
    subgroup,
)
from .errors import (
    ConditionViolation,
    InternalConsistencyError,
    SizeMismatchError,
    SubgroupError,
)
from .pentagon import PairMap, is_solution_conditions

__all__ = [
    "GroupSolution", "CosetDatum", "theta_from_pairmap", "theta_one",
    "theta_from_theta_one", "kernel", "coset_mu", "coset_solution",
    "decompose", "identity_violations", "is_homomorphism",
]


@dataclass(frozen=True, eq=False)
class GroupSolution:
    group: Group
    theta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "theta", frozen_table(self.theta))

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def pairmap(self) -> PairMap:
        return PairMap(self.group.table, self.theta)

    def __eq__(self, other):
        if not isinstance(other, GroupSolution):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.theta, other.theta)

    def __hash__(self):
        return hash(self.theta.tobytes())


@dataclass(frozen=True)
class CosetDatum:
    """Normal subgroup ``K``, transversal ``R ∋ 1`` and the map ``μ``.

    ``mu[x]`` is the element of ``R`` lying in the right coset ``Kx``.
    """

    K: SubgroupDescriptor
    R: tuple[int, ...]
    mu: tuple[int, ...]


def theta_from_theta_one(g: Group, t1) -> np.ndarray:
    """Build the full table ``θ[x, y] = θ_1(x)⁻¹ θ_1(xy)``."""
    t1 = np.asarray(t1, dtype=np.int64)
    return g.table[g.inverse[t1][:, None], t1[g.table]]


def theta_from_pairmap(s: PairMap, g: Group) -> GroupSolution:
    """Wrap a solution whose dot component is the group operation of ``g``."""
    if s.n != g.n:
        raise SizeMismatchError(f"map has size {s.n}, group has order {g.n}")
    if not np.array_equal(s.dot, g.table):
        raise ConditionViolation("dot component differs from the group operation")
    verdict = is_solution_conditions(s)
    if not verdict:
        raise ConditionViolation(
            f"condition ({verdict.condition}) fails at {verdict.witness}",
            verdict.condition, verdict.witness)
    return GroupSolution(g, s.star)


def theta_one(gs: GroupSolution) -> tuple[int, ...]:
    """The row ``θ_1``; also checks it regenerates every other row."""
    t1 = gs.theta[gs.group.identity]
    if not np.array_equal(theta_from_theta_one(gs.group, t1), gs.theta):
        raise InternalConsistencyError("theta rows are not determined by theta_1")
    return tuple(t1.tolist())


def kernel(gs: GroupSolution) -> SubgroupDescriptor:
    g = gs.group
    t1 = theta_one(gs)
    elems = tuple(x for x in range(g.n) if t1[x] == g.identity)
    if not (is_subgroup(g, elems) and is_normal_subset(g, elems)):
        raise InternalConsistencyError(f"kernel {elems} is not a normal subgroup")
    return SubgroupDescriptor(elems, True)


def is_homomorphism(g: Group, f) -> tuple[int, int] | None:
    """Least pair ``(x, y)`` with ``f(xy) != f(x)f(y)``, or ``None``."""
    for x in range(g.n):
        for y in range(g.n):
            if f[g.table[x, y]] != g.table[f[x], f[y]]:
                return x, y
    return None


def _normal_subgroup(g: Group, K) -> SubgroupDescriptor:
    elems = K.elements if isinstance(K, SubgroupDescriptor) else K
    K = subgroup(g, elems)
    if not K.is_normal:
        raise SubgroupError(f"{list(K.elements)} is not normal")
    return K


def coset_mu(g: Group, K, R) -> CosetDatum:
    """Validate ``(K, R)`` and compute ``μ(x) ∈ R ∩ Kx``."""
    K = _normal_subgroup(g, K)
    R = tuple(sorted(int(r) for r in R))
    if len(set(R)) != len(R):
        raise SubgroupError("representatives contain duplicates")
    if g.identity not in R:
        raise SubgroupError("representative system must contain the identity")
    mu = [-1] * g.n
    for coset in right_cosets(g, K):
        hits = [r for r in R if r in coset]
        if len(hits) != 1:
            raise SubgroupError(
                f"coset {list(coset)} holds {len(hits)} representatives, expected 1")
        for x in coset:
            mu[x] = hits[0]
    if any(r not in mu for r in R):
        raise SubgroupError("representatives outside the carrier")
    return CosetDatum(K, R, tuple(mu))


def coset_solution(g: Group, K, R) -> GroupSolution:
    """The solution ``(xy, μ(x)⁻¹ μ(xy))`` attached to ``(K, R)``."""
    datum = coset_mu(g, K, R)
    gs = GroupSolution(g, theta_from_theta_one(g, datum.mu))
    verdict = is_solution_conditions(gs.pairmap)
    if not verdict:
        raise InternalConsistencyError(
            f"coset construction violates condition ({verdict.condition}) at {verdict.witness}")
    return gs


def decompose(gs: GroupSolution) -> CosetDatum:
    """Recover ``(K, R, μ)`` with ``K`` the kernel and ``μ = θ_1``.

    Certifies that the image of ``θ_1`` is a transversal containing the
    identity, that ``θ_1(x) ∈ Kx``, and that rebuilding from ``(K, R)``
    gives back ``gs``.
    """
    g = gs.group
    K = kernel(gs)
    t1 = theta_one(gs)
    R = tuple(sorted(set(t1)))
    try:
        datum = coset_mu(g, K, R)
    except SubgroupError as exc:
        raise InternalConsistencyError(f"image of theta_1 is not a transversal: {exc}") from exc
    if datum.mu != t1:
        raise InternalConsistencyError("theta_1(x) is not the representative of Kx")
    if not np.array_equal(theta_from_theta_one(g, datum.mu), gs.theta):
        raise InternalConsistencyError("round trip through (K, R) changed the solution")
    return datum


def identity_violations(gs: GroupSolution) -> list[tuple[str, tuple[int, ...]]]:
    """Audit the structural identities every group solution obeys.

    Returns ``(name, arguments)`` for each failure; empty when all hold.
    """
    g = gs.group
    th = gs.theta.tolist()
    t = g.table.tolist()
    inv = g.inverse.tolist()
    e = g.identity
    n = g.n
    t1 = th[e]
    K = [x for x in range(n) if t1[x] == e]
    Kset = set(K)
    bad = []

    for x in range(n):
        if th[x][e] != e:
            bad.append(("fixes_identity", (x,)))
        if [t1[v] for v in th[x]] != t1:
            bad.append(("theta_one_absorbs_row", (x,)))
        if inv[t1[x]] != th[x][inv[x]]:
            bad.append(("inverse_relation", (x,)))
        # θ_1(kx) stays in the coset Kx
        for k in K:
            kx = t[k][x]
            if t[th[e][kx]][inv[x]] not in Kset:
                bad.append(("theta_one_preserves_coset", (x, k)))
        for y in range(n):
            if th[x][y] != t[inv[t1[x]]][t1[t[x][y]]]:
                bad.append(("determined_by_theta_one", (x, y)))
            for k in K:
                if th[x][t[k][y]] != th[x][y]:
                    bad.append(("kernel_left_invariance", (x, y, k)))
                if th[t[k][x]][y] != th[x][y]:
                    bad.append(("kernel_row_invariance", (x, y, k)))
        for k in K:
            if th[x][k] != e:
                bad.append(("kernel_sent_to_identity", (x, k)))
            if th[k][x] != t1[x]:
                bad.append(("kernel_row_is_theta_one", (k, x)))
    return bad

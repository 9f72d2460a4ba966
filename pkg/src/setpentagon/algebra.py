"""Finite magmas and groups on the carrier ``{0, ..., n-1}``.

Elements are plain integers; operations are ``n x n`` integer tables with
the row indexing the left operand.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    BudgetExceededError,
    FactorizationError,
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
    SubgroupError,
    TableError,
)

__all__ = [
    "Verdict", "Magma", "Group", "SubgroupDescriptor", "Factorization",
    "validate_magma", "is_associative", "group_from_magma", "relabel",
    "normalized", "subgroups", "normal_subgroups", "subgroup", "is_subgroup",
    "is_normal_subset", "right_coset", "right_cosets", "representative_systems",
    "factorization", "exact_factorizations", "idempotent_endomorphisms",
    "idempotent_maps", "commuting_idempotent_pairs", "compose",
    "is_idempotent_map", "is_endomorphism",
]

#: Largest order for which subgroups are found by scanning every subset.
EXHAUSTIVE_SUBGROUP_LIMIT = 12
#: Default cap on the number of self-maps scanned for endomorphisms (8**8).
ENDO_SCAN_BUDGET = 8 ** 8
#: Largest carrier for the pairwise idempotent-map scan.
IDEMPOTENT_PAIR_LIMIT = 5


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check.

    Truthy iff the property holds. ``witness`` is the lexicographically least
    failing triple; ``condition`` names which of several conditions failed.
    """

    holds: bool
    witness: tuple[int, int, int] | None = None
    condition: int | None = None

    def __bool__(self):
        return self.holds

    @classmethod
    def from_flat(cls, flat, n, condition=None):
        if flat < 0:
            return cls(True)
        x, rest = divmod(int(flat), n * n)
        y, z = divmod(rest, n)
        return cls(False, (x, y, z), condition)


def frozen_table(table) -> np.ndarray:
    a = np.array(table, dtype=np.int64, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Magma:
    table: np.ndarray
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "table", frozen_table(self.table))

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def op(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __eq__(self, other):
        if not isinstance(other, Magma):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        label = f", name={self.name!r}" if self.name else ""
        return f"Magma(n={self.n}{label})"


@dataclass(frozen=True, eq=False)
class Group:
    magma: Magma
    identity: int
    inverse: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "inverse", frozen_table(self.inverse))

    @property
    def n(self) -> int:
        return self.magma.n

    @property
    def table(self) -> np.ndarray:
        return self.magma.table

    @property
    def name(self) -> str | None:
        return self.magma.name

    def mul(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = int(self.table[acc, x])
        return acc

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def is_elementary_abelian_2(self) -> bool:
        return self.is_abelian() and all(
            self.table[x, x] == self.identity for x in range(self.n))

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return self.magma == other.magma

    def __hash__(self):
        return hash(self.magma)

    def __repr__(self):
        label = f", name={self.name!r}" if self.name else ""
        return f"Group(n={self.n}{label})"


@dataclass(frozen=True)
class SubgroupDescriptor:
    elements: tuple[int, ...]
    is_normal: bool

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements


@dataclass(frozen=True)
class Factorization:
    """Exact factorization ``G = AB`` with ``A ∩ B = {1}``.

    ``p1[x]`` and ``p2[x]`` are the unique ``a ∈ A``, ``b ∈ B`` with
    ``x = a b``.
    """

    A: SubgroupDescriptor
    B: SubgroupDescriptor
    p1: tuple[int, ...]
    p2: tuple[int, ...]


def validate_magma(n: int, table, name: str | None = None) -> Magma:
    """Check shape and entry range of ``table``; no algebraic checks."""
    if n < 1:
        raise TableError(f"carrier size must be positive, got {n}")
    rows = list(table)
    if len(rows) != n:
        raise TableError(f"expected {n} rows, got {len(rows)}", row=len(rows))
    for i, row in enumerate(rows):
        row = list(row)
        if len(row) != n:
            raise TableError(f"row {i} has {len(row)} entries, expected {n}", row=i)
        for j, v in enumerate(row):
            if not (0 <= int(v) < n) or int(v) != v:
                raise TableError(
                    f"entry {v} at row {i}, column {j} is outside [0, {n})",
                    row=i, col=j)
    return Magma(np.array(rows, dtype=np.int64).reshape(n, n), name)


def is_associative(m: Magma) -> Verdict:
    return Verdict.from_flat(kernels.assoc_failure(m.table), m.n)


def group_from_magma(m: Magma) -> Group:
    """Certify ``m`` as a group; each failing axiom raises its own error."""
    verdict = is_associative(m)
    if not verdict:
        raise NotAssociativeError(verdict.witness)
    t = m.table
    n = m.n
    ident = None
    for e in range(n):
        if np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n)):
            ident = e
            break
    if ident is None:
        raise NoIdentityError()
    inverse = np.empty(n, dtype=np.int64)
    for x in range(n):
        hits = np.flatnonzero((t[x] == ident) & (t[:, x] == ident))
        if hits.size == 0:
            raise NoInverseError(x)
        inverse[x] = hits[0]
    return Group(m, ident, inverse)


def relabel(g: Group, perm: Sequence[int]) -> Group:
    """Transport ``g`` along the bijection ``x -> perm[x]``."""
    perm = np.asarray(perm, dtype=np.int64)
    t = np.empty_like(g.table)
    t[np.ix_(perm, perm)] = perm[g.table]
    return group_from_magma(Magma(t, g.name))


def normalized(g: Group) -> Group:
    """Relabel ``g`` so its identity is element 0 (swapping it with 0)."""
    if g.identity == 0:
        return g
    perm = list(range(g.n))
    perm[0], perm[g.identity] = g.identity, 0
    return relabel(g, perm)


# subgroups ----------------------------------------------------------------

def is_subgroup(g: Group, elements: Iterable[int]) -> bool:
    s = set(elements)
    if g.identity not in s:
        return False
    return all(g.table[a, b] in s for a in s for b in s) and all(
        g.inverse[a] in s for a in s)


def is_normal_subset(g: Group, elements: Iterable[int]) -> bool:
    s = set(elements)
    return all(g.mul(g.inv(x), k, x) in s for x in range(g.n) for k in s)


def subgroup(g: Group, elements: Iterable[int]) -> SubgroupDescriptor:
    """Describe ``elements`` as a subgroup of ``g``; raises if it is not one."""
    elems = tuple(sorted(set(int(e) for e in elements)))
    if not elems or any(not 0 <= e < g.n for e in elems):
        raise SubgroupError(f"{list(elems)} is not a subset of the carrier")
    if not is_subgroup(g, elems):
        raise SubgroupError(f"{list(elems)} is not a subgroup")
    return SubgroupDescriptor(elems, is_normal_subset(g, elems))


def _subgroups_by_subsets(g: Group) -> list[tuple[int, ...]]:
    others = [x for x in range(g.n) if x != g.identity]
    found = []
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            s = (g.identity,) + combo
            members = set(s)
            if all(g.table[a, b] in members for a in s for b in s):
                found.append(tuple(sorted(s)))
    return found


def _generated(g: Group, gens: Iterable[int]) -> frozenset[int]:
    gens = list(gens)
    seen = {g.identity}
    todo = [g.identity]
    while todo:
        a = todo.pop()
        for b in gens:
            c = int(g.table[a, b])
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return frozenset(seen)


def _subgroups_by_generation(g: Group) -> list[tuple[int, ...]]:
    cyclic = {_generated(g, [x]) for x in range(g.n)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        fresh = set()
        for h in frontier:
            for c in cyclic:
                if not c <= h:
                    j = _generated(g, h | c)
                    if j not in found:
                        fresh.add(j)
        found |= fresh
        frontier = fresh
    return [tuple(sorted(h)) for h in found]


def subgroups(g: Group, method: str | None = None) -> list[SubgroupDescriptor]:
    """All subgroups sorted by ``(size, elements)``.

    ``method`` is ``"subsets"`` (closed-subset scan) or ``"generation"``
    (joins of cyclic subgroups); by default the scan is used up to order
    :data:`EXHAUSTIVE_SUBGROUP_LIMIT`.
    """
    if method is None:
        method = "subsets" if g.n <= EXHAUSTIVE_SUBGROUP_LIMIT else "generation"
    if method == "subsets":
        found = _subgroups_by_subsets(g)
    elif method == "generation":
        found = _subgroups_by_generation(g)
    else:
        raise ValueError(f"unknown subgroup method {method!r}")
    found.sort(key=lambda s: (len(s), s))
    return [SubgroupDescriptor(s, is_normal_subset(g, s)) for s in found]


def normal_subgroups(g: Group, method: str | None = None) -> list[SubgroupDescriptor]:
    return [s for s in subgroups(g, method) if s.is_normal]


def _as_subgroup(g: Group, K) -> SubgroupDescriptor:
    if isinstance(K, SubgroupDescriptor):
        if not is_subgroup(g, K.elements):
            raise SubgroupError(f"{list(K.elements)} is not a subgroup")
        return K
    return subgroup(g, K)


def right_coset(g: Group, K, x: int) -> tuple[int, ...]:
    """The right coset ``Kx`` as a sorted tuple."""
    return tuple(sorted({int(g.table[k, x]) for k in K}))


def right_cosets(g: Group, K) -> list[tuple[int, ...]]:
    """Partition of the carrier into right cosets, ordered by least element."""
    K = _as_subgroup(g, K)
    cosets, seen = [], set()
    for x in range(g.n):
        if x not in seen:
            c = right_coset(g, K, x)
            seen.update(c)
            cosets.append(c)
    return cosets


def representative_systems(g: Group, K) -> Iterator[tuple[int, ...]]:
    """Every transversal of the right cosets of ``K`` that contains the identity.

    Yields sorted tuples in lexicographic order; there are
    ``|K| ** (index - 1)`` of them.
    """
    K = _as_subgroup(g, K)
    choices = [
        (g.identity,) if g.identity in c else c for c in right_cosets(g, K)
    ]
    systems = sorted(tuple(sorted(pick)) for pick in itertools.product(*choices))
    yield from systems


# exact factorizations -----------------------------------------------------

def factorization(g: Group, A, B) -> Factorization:
    A = _as_subgroup(g, A)
    B = _as_subgroup(g, B)
    if set(A) & set(B) != {g.identity}:
        raise FactorizationError("subgroups intersect nontrivially")
    p1 = [-1] * g.n
    p2 = [-1] * g.n
    for a in A:
        for b in B:
            x = int(g.table[a, b])
            if p1[x] != -1:
                raise FactorizationError(f"{x} has two factorizations")
            p1[x], p2[x] = a, b
    if -1 in p1:
        raise FactorizationError("AB does not cover the group")
    return Factorization(A, B, tuple(p1), tuple(p2))


def exact_factorizations(g: Group) -> list[Factorization]:
    """All ordered pairs of subgroups giving an exact factorization."""
    subs = subgroups(g)
    out = []
    for A in subs:
        for B in subs:
            if len(A) * len(B) == g.n and set(A) & set(B) == {g.identity}:
                out.append(factorization(g, A, B))
    out.sort(key=lambda f: (len(f.A), f.A.elements, f.B.elements))
    return out


# self-maps ----------------------------------------------------------------

def compose(f: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    """``f ∘ h``, i.e. ``x -> f[h[x]]``."""
    return tuple(int(f[h[x]]) for x in range(len(h)))


def is_idempotent_map(f: Sequence[int]) -> bool:
    return all(f[f[x]] == f[x] for x in range(len(f)))


def is_endomorphism(m: Magma, f: Sequence[int]) -> bool:
    t = m.table
    return all(f[t[x, y]] == t[f[x], f[y]] for x in range(m.n) for y in range(m.n))


def _decode_maps(indices, n, width):
    powers = n ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (np.asarray(indices, dtype=np.int64)[:, None] // powers) % n


def idempotent_endomorphisms(m: Magma, budget: int | None = None) -> list[tuple[int, ...]]:
    """All idempotent endomorphisms of ``m``, by scanning every self-map."""
    budget = ENDO_SCAN_BUDGET if budget is None else budget
    size = m.n ** m.n
    if size > budget:
        raise BudgetExceededError("endomorphism scan", size, budget)
    mask = kernels.endo_scan(kernels.as_table(m.table))
    maps = _decode_maps(np.flatnonzero(mask), m.n, m.n)
    return [tuple(int(v) for v in row) for row in maps]


def idempotent_maps(n: int) -> list[tuple[int, ...]]:
    # plain product scan; callers bound n
    return [f for f in itertools.product(range(n), repeat=n) if is_idempotent_map(f)]


def commuting_idempotent_pairs(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Ordered pairs ``(a, b)`` of idempotent self-maps with ``a∘b == b∘a``."""
    if n > IDEMPOTENT_PAIR_LIMIT:
        raise BudgetExceededError("idempotent pair scan", (n ** n) ** 2,
                                  (IDEMPOTENT_PAIR_LIMIT ** IDEMPOTENT_PAIR_LIMIT) ** 2)
    idem = idempotent_maps(n)
    for a in idem:
        for b in idem:
            if compose(a, b) == compose(b, a):
                yield a, b

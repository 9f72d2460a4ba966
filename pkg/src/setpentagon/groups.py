"""Concrete groups and the built-in corpus of small groups.

Builders construct Cayley tables from explicit models (residues,
permutations, quaternions) and certify them with
:func:`~setpentagon.algebra.group_from_magma`. The corpus is also shipped
as canonical table files under ``setpentagon/data``.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from importlib import resources

from .algebra import Group, Magma, group_from_magma

#: corpus name -> data file stem
CORPUS = {
    "Z2": "z2", "Z3": "z3", "Z4": "z4", "Z5": "z5", "Z6": "z6", "Z7": "z7",
    "Z8": "z8", "V4": "v4", "S3": "s3", "D4": "d4", "Q8": "q8",
    "Z2xZ4": "z2xz4", "Z2^3": "z2cubed",
}


def _from_model(elements, op, name):
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return group_from_magma(Magma(table, name))


def trivial() -> Group:
    return cyclic(1)


def cyclic(n: int) -> Group:
    return _from_model(range(n), lambda a, b: (a + b) % n, f"Z{n}")


def direct_product(g: Group, h: Group, name: str | None = None) -> Group:
    """Pairs ``(a, b)`` indexed as ``a * |h| + b``."""
    pairs = list(itertools.product(range(g.n), range(h.n)))
    op = lambda p, q: (int(g.table[p[0], q[0]]), int(h.table[p[1], q[1]]))
    return _from_model(pairs, op, name or f"{g.name}x{h.name}")


def elementary_abelian_2(k: int) -> Group:
    """``(Z2)^k`` on bit vectors, product is xor."""
    name = {1: "Z2", 2: "V4"}.get(k, f"Z2^{k}")
    return _from_model(range(2 ** k), lambda a, b: a ^ b, name)


def klein_four() -> Group:
    return elementary_abelian_2(2)


def _perm_mul(a, b):
    # (ab)(i) = a(b(i))
    return tuple(a[i] for i in b)


def permutation_group(perms, name) -> Group:
    """Group of the given permutation words, indexed in lexicographic order."""
    return _from_model(sorted(perms), _perm_mul, name)


def symmetric(n: int) -> Group:
    """``S_n``; element ``i`` is the ``i``-th permutation word in lex order."""
    return permutation_group(itertools.permutations(range(n)), f"S{n}")


def permutation_words(n: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(n)))


def sign(word) -> int:
    word = list(word)
    s = 1
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] > word[j]:
                s = -s
    return s


def _closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    todo = [ident]
    while todo:
        a = todo.pop()
        for g in gens:
            c = _perm_mul(a, g)
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return seen


def dihedral4() -> Group:
    """Symmetries of the square acting on its vertices 0..3."""
    rotation = (1, 2, 3, 0)
    reflection = (0, 3, 2, 1)
    return permutation_group(_closure([rotation, reflection]), "D4")


_UNITS = [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
          (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]


def _quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def quaternion() -> Group:
    """``Q8`` with elements ordered 1, -1, i, -i, j, -j, k, -k."""
    return _from_model(_UNITS, _quat_mul, "Q8")


def build_corpus() -> dict[str, Group]:
    """The 13 groups of order at most 8 used for exhaustive checks, from models."""
    groups = {f"Z{n}": cyclic(n) for n in range(2, 9)}
    groups["V4"] = klein_four()
    groups["S3"] = symmetric(3)
    groups["D4"] = dihedral4()
    groups["Q8"] = quaternion()
    groups["Z2xZ4"] = direct_product(cyclic(2), cyclic(4), "Z2xZ4")
    groups["Z2^3"] = elementary_abelian_2(3)
    return {name: groups[name] for name in CORPUS}


@lru_cache(maxsize=None)
def load_group(name: str) -> Group:
    """Load a corpus group from its shipped table file."""
    from .io import parse_group

    stem = CORPUS[name]
    text = resources.files("setpentagon.data").joinpath(f"{stem}.group").read_text()
    return parse_group(text)


def corpus() -> dict[str, Group]:
    return {name: load_group(name) for name in CORPUS}

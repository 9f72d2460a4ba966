"""Compiled kernels.

Every triple check returns the flat index ``(x*n + y)*n + z`` of the least
failing triple, or -1. Scans return a boolean mask over candidate indices,
where candidate ``i`` is the base-``n`` expansion of ``i`` read most
significant digit first (so mask order is lexicographic order of the maps).
"""
import os

import numba
import numpy as np
from numba import njit, prange

if "NUMBA_THREADING_LAYER" not in os.environ:
    # the bundled TBB is too old; skip probing it
    numba.config.THREADING_LAYER = "omp"

NAME = "numba"


@njit(cache=True)
def assoc_failure(table):
    n = table.shape[0]
    for x in range(n):
        for y in range(n):
            xy = table[x, y]
            for z in range(n):
                if table[xy, z] != table[x, table[y, z]]:
                    return (x * n + y) * n + z
    return -1


@njit(cache=True)
def _pentagon_ok(dot, star, x, y, z):
    # s23 s13 s12
    a = dot[x, y]
    b = star[x, y]
    a2 = dot[a, z]
    z1 = star[a, z]
    b2 = dot[b, z1]
    z2 = star[b, z1]
    # s12 s23
    y1 = dot[y, z]
    z3 = star[y, z]
    x1 = dot[x, y1]
    y2 = star[x, y1]
    return a2 == x1 and b2 == y2 and z2 == z3


@njit(cache=True)
def pentagon_failure(dot, star):
    n = dot.shape[0]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not _pentagon_ok(dot, star, x, y, z):
                    return (x * n + y) * n + z
    return -1


@njit(cache=True)
def reversed_failure(dot, star):
    n = dot.shape[0]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # s12 s13 s23
                p = dot[y, z]
                q = star[y, z]
                x1 = dot[x, q]
                q1 = star[x, q]
                x2 = dot[x1, p]
                p2 = star[x1, p]
                # s23 s12
                a = dot[x, y]
                b = star[x, y]
                b1 = dot[b, z]
                z1 = star[b, z]
                if x2 != a or p2 != b1 or q1 != z1:
                    return (x * n + y) * n + z
    return -1


@njit(cache=True)
def commutative_failure(dot, star):
    n = dot.shape[0]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # s12 s13
                a = dot[x, z]
                c = star[x, z]
                a1 = dot[a, y]
                y1 = star[a, y]
                # s13 s12
                b0 = dot[x, y]
                b = star[x, y]
                a2 = dot[b0, z]
                c2 = star[b0, z]
                if a1 != a2 or y1 != b or c != c2:
                    return (x * n + y) * n + z
    return -1


@njit(cache=True)
def cocommutative_failure(dot, star):
    n = dot.shape[0]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # s13 s23
                b = dot[y, z]
                c = star[y, z]
                x1 = dot[x, c]
                c1 = star[x, c]
                # s23 s13
                a = dot[x, z]
                c0 = star[x, z]
                b2 = dot[y, c0]
                c2 = star[y, c0]
                if x1 != a or b != b2 or c1 != c2:
                    return (x * n + y) * n + z
    return -1


@njit(cache=True)
def conditions_failure(dot, star):
    """Return ``(condition, flat_triple)``; ``(0, -1)`` when all hold."""
    n = dot.shape[0]
    for x in range(n):
        for y in range(n):
            xy = dot[x, y]
            xsy = star[x, y]
            for z in range(n):
                yz = dot[y, z]
                if dot[xy, z] != dot[x, yz]:
                    return 1, (x * n + y) * n + z
                w = star[xy, z]
                if dot[xsy, w] != star[x, yz]:
                    return 2, (x * n + y) * n + z
                if star[xsy, w] != star[y, z]:
                    return 3, (x * n + y) * n + z
    return 0, -1


@njit(cache=True)
def _decode(idx, n, out):
    r = idx
    for k in range(out.shape[0] - 1, -1, -1):
        out[k] = r % n
        r //= n


@njit(cache=True)
def _theta_ok(table, inv, t1):
    # theta_x(y) = t1(x)^-1 t1(xy)
    n = table.shape[0]
    for x in range(n):
        ix = inv[t1[x]]
        for y in range(n):
            xy = table[x, y]
            txy = table[ix, t1[xy]]
            itxy = inv[t1[txy]]
            for z in range(n):
                txyz = table[inv[t1[xy]], t1[table[xy, z]]]
                # condition (3): theta_{theta_x(y)}(theta_{xy}(z)) == theta_y(z)
                lhs3 = table[itxy, t1[table[txy, txyz]]]
                rhs3 = table[inv[t1[y]], t1[table[y, z]]]
                if lhs3 != rhs3:
                    return False
                # condition (2): theta_x(y) theta_{xy}(z) == theta_x(yz)
                if table[txy, txyz] != table[ix, t1[table[x, table[y, z]]]]:
                    return False
    return True


@njit(parallel=True, cache=True)
def theta_scan(table, inv):
    n = table.shape[0]
    total = n ** n
    head = min(n, 2)
    n_prefix = n ** head
    inner = total // n_prefix
    mask = np.zeros(total, dtype=np.bool_)
    for p in prange(n_prefix):
        t1 = np.empty(n, dtype=np.int64)
        for j in range(inner):
            idx = p * inner + j
            _decode(idx, n, t1)
            mask[idx] = _theta_ok(table, inv, t1)
    return mask


@njit(parallel=True, cache=True)
def star_scan(dot):
    n = dot.shape[0]
    cells = n * n
    total = n ** cells
    head = min(cells, 2)
    n_prefix = n ** head
    inner = total // n_prefix
    mask = np.zeros(total, dtype=np.bool_)
    for p in prange(n_prefix):
        flat = np.empty(cells, dtype=np.int64)
        for j in range(inner):
            idx = p * inner + j
            _decode(idx, n, flat)
            mask[idx] = pentagon_failure(dot, flat.reshape((n, n))) < 0
    return mask


@njit(parallel=True, cache=True)
def dot_scan(star):
    n = star.shape[0]
    cells = n * n
    total = n ** cells
    head = min(cells, 2)
    n_prefix = n ** head
    inner = total // n_prefix
    mask = np.zeros(total, dtype=np.bool_)
    for p in prange(n_prefix):
        flat = np.empty(cells, dtype=np.int64)
        for j in range(inner):
            idx = p * inner + j
            _decode(idx, n, flat)
            mask[idx] = pentagon_failure(flat.reshape((n, n)), star) < 0
    return mask


@njit(parallel=True, cache=True)
def endo_scan(table):
    """Idempotent endomorphisms among all self-maps of the carrier."""
    n = table.shape[0]
    total = n ** n
    head = min(n, 2)
    n_prefix = n ** head
    inner = total // n_prefix
    mask = np.zeros(total, dtype=np.bool_)
    for p in prange(n_prefix):
        g = np.empty(n, dtype=np.int64)
        for j in range(inner):
            idx = p * inner + j
            _decode(idx, n, g)
            ok = True
            for x in range(n):
                if g[g[x]] != g[x]:
                    ok = False
                    break
            if ok:
                for x in range(n):
                    for y in range(n):
                        if g[table[x, y]] != table[g[x], g[y]]:
                            ok = False
                            break
                    if not ok:
                        break
            mask[idx] = ok
    return mask

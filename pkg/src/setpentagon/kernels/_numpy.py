"""Vectorized numpy kernels, same contracts as the compiled ones.

Scans process candidates in batches and filter survivors condition by
condition, so the working set shrinks quickly.
"""
import numpy as np

NAME = "numpy"

BATCH = 1 << 16


def _first(mask):
    hits = np.flatnonzero(mask.ravel())
    return int(hits[0]) if hits.size else -1


def _grid(n):
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    return x, y, z


def assoc_failure(table):
    x, y, z = _grid(table.shape[0])
    return _first(table[table[x, y], z] != table[x, table[y, z]])


def _pentagon_bad(dot, star, x, y, z):
    """Batched pentagon check; ``dot``/``star`` have shape (B, n, n)."""
    b = np.arange(dot.shape[0])[:, None]
    a = dot[b, x, y]
    s = star[b, x, y]
    a2 = dot[b, a, z]
    z1 = star[b, a, z]
    b2 = dot[b, s, z1]
    z2 = star[b, s, z1]
    y1 = dot[b, y, z]
    z3 = star[b, y, z]
    x1 = dot[b, x, y1]
    y2 = star[b, x, y1]
    return (a2 != x1) | (b2 != y2) | (z2 != z3)


def pentagon_failure(dot, star):
    return _first(_pentagon_bad(dot[None], star[None], *_grid(dot.shape[0])))


def reversed_failure(dot, star):
    x, y, z = _grid(dot.shape[0])
    p, q = dot[y, z], star[y, z]
    x1, q1 = dot[x, q], star[x, q]
    x2, p2 = dot[x1, p], star[x1, p]
    a, b = dot[x, y], star[x, y]
    b1, z1 = dot[b, z], star[b, z]
    return _first((x2 != a) | (p2 != b1) | (q1 != z1))


def commutative_failure(dot, star):
    x, y, z = _grid(dot.shape[0])
    a, c = dot[x, z], star[x, z]
    a1, y1 = dot[a, y], star[a, y]
    b0, b = dot[x, y], star[x, y]
    a2, c2 = dot[b0, z], star[b0, z]
    return _first((a1 != a2) | (y1 != b) | (c != c2))


def cocommutative_failure(dot, star):
    x, y, z = _grid(dot.shape[0])
    b, c = dot[y, z], star[y, z]
    x1, c1 = dot[x, c], star[x, c]
    a, c0 = dot[x, z], star[x, z]
    b2, c2 = dot[y, c0], star[y, c0]
    return _first((x1 != a) | (b != b2) | (c1 != c2))


def conditions_failure(dot, star):
    x, y, z = _grid(dot.shape[0])
    xy, xsy, yz = dot[x, y], star[x, y], dot[y, z]
    w = star[xy, z]
    bad = np.stack([
        dot[xy, z] != dot[x, yz],
        dot[xsy, w] != star[x, yz],
        star[xsy, w] != star[y, z],
    ])
    idx = _first(bad.any(axis=0))
    if idx < 0:
        return 0, -1
    return int(np.argmax(bad[:, idx])) + 1, idx


def _digits(start, stop, n, width):
    idx = np.arange(start, stop, dtype=np.int64)
    powers = n ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers) % n


def _batches(total):
    for start in range(0, total, BATCH):
        yield start, min(start + BATCH, total)


def theta_scan(table, inv):
    n = table.shape[0]
    total = n ** n
    mask = np.zeros(total, dtype=bool)
    for start, stop in _batches(total):
        t1 = _digits(start, stop, n, n)
        alive = np.arange(stop - start)
        # theta[b, x, y] = t1(x)^-1 t1(xy)
        theta = table[inv[t1[:, :, None]], t1[:, table]]
        for x in range(n):
            for y in range(n):
                if alive.size == 0:
                    break
                th = theta[alive]
                rows = np.arange(alive.size)[:, None]
                xy = table[x, y]
                u = th[:, x, y]
                w = th[:, xy, :]
                ok = (th[rows, u[:, None], w] == th[:, y, :]).all(axis=1)
                ok &= (table[u[:, None], w] == th[:, x, table[y, :]]).all(axis=1)
                alive = alive[ok]
        mask[start + alive] = True
    return mask


def _table_scan(fixed, vary_star):
    n = fixed.shape[0]
    cells = n * n
    total = n ** cells
    mask = np.zeros(total, dtype=bool)
    x, y, z = _grid(n)
    for start, stop in _batches(total):
        cand = _digits(start, stop, n, cells).reshape(-1, n, n)
        other = np.broadcast_to(fixed, cand.shape)
        if vary_star:
            bad = _pentagon_bad(other, cand, x, y, z)
        else:
            bad = _pentagon_bad(cand, other, x, y, z)
        mask[start:stop] = ~bad.any(axis=1)
    return mask


def star_scan(dot):
    return _table_scan(dot, vary_star=True)


def dot_scan(star):
    return _table_scan(star, vary_star=False)


def endo_scan(table):
    n = table.shape[0]
    total = n ** n
    mask = np.zeros(total, dtype=bool)
    for start, stop in _batches(total):
        g = _digits(start, stop, n, n)
        rows = np.arange(g.shape[0])[:, None]
        ok = (g[rows, g] == g).all(axis=1)
        g = g[ok]
        keep = np.flatnonzero(ok)
        rows = np.arange(g.shape[0])[:, None, None]
        hom = (g[rows, table[None]] == table[g[:, :, None], g[:, None, :]]).all(axis=(1, 2))
        mask[start + keep[hom]] = True
    return mask

import itertools
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from setpentagon import kernels
from setpentagon.kernels import as_table, get_backend
from setpentagon.pentagon import PairMap, flip_map

import oracles

NUMBA = get_backend("numba")
NUMPY = get_backend("numpy")

TRIPLE_CHECKS = ["pentagon_failure", "reversed_failure", "commutative_failure",
                 "cocommutative_failure"]


@st.composite
def table_pairs(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    cells = st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n)
    dot = np.array(draw(cells), dtype=np.int64).reshape(n, n)
    star = np.array(draw(cells), dtype=np.int64).reshape(n, n)
    return dot, star


@settings(max_examples=200, deadline=None)
@given(table_pairs())
def test_backends_agree_on_triple_checks(tables):
    dot, star = tables
    for name in TRIPLE_CHECKS:
        assert getattr(NUMBA, name)(dot, star) == getattr(NUMPY, name)(dot, star), name
    assert tuple(NUMBA.conditions_failure(dot, star)) == tuple(NUMPY.conditions_failure(dot, star))
    assert NUMBA.assoc_failure(dot) == NUMPY.assoc_failure(dot)


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z5", "Z6", "V4", "S3"])
def test_theta_scan_backends_agree(corpus, name):
    g = corpus[name]
    args = as_table(g.table), as_table(g.inverse)
    np.testing.assert_array_equal(NUMBA.theta_scan(*args), NUMPY.theta_scan(*args))


@pytest.mark.parametrize("name", ["Z2", "Z3"])
def test_table_scans_backends_agree(corpus, name):
    t = as_table(corpus[name].table)
    np.testing.assert_array_equal(NUMBA.star_scan(t), NUMPY.star_scan(t))
    np.testing.assert_array_equal(NUMBA.dot_scan(t), NUMPY.dot_scan(t))


@pytest.mark.parametrize("name", ["Z4", "Z6", "S3", "V4"])
def test_endo_scan_backends_agree(corpus, name):
    t = as_table(corpus[name].table)
    np.testing.assert_array_equal(NUMBA.endo_scan(t), NUMPY.endo_scan(t))


@pytest.mark.parametrize("name", ["Z2", "Z3", "V4"])
def test_theta_scan_mask_matches_oracle(corpus, name):
    # candidate i is theta_1 = base-n digits of i, most significant first
    g = corpus[name]
    n = g.n
    mask = kernels.theta_scan(as_table(g.table), as_table(g.inverse))
    t, inv = g.table.tolist(), g.inverse.tolist()
    expected = []
    for t1 in itertools.product(range(n), repeat=n):
        star = [[t[inv[t1[x]]][t1[t[x][y]]] for y in range(n)] for x in range(n)]
        expected.append(oracles.is_solution(PairMap(g.table, star)))
    assert mask.tolist() == expected


def test_witness_is_least_failing_triple():
    s = flip_map(2)
    expected = oracles.first_failure(s, "s23 s13 s12", "s12 s23")
    for backend in (NUMBA, NUMPY):
        flat = backend.pentagon_failure(as_table(s.dot), as_table(s.star))
        x, rest = divmod(flat, 4)
        assert (x, *divmod(rest, 2)) == expected


def test_env_flag_selects_numpy_backend():
    env = dict(os.environ, SETPENTAGON_BACKEND="numpy")
    out = subprocess.run(
        [sys.executable, "-c", "import setpentagon.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_default_backend_is_numba():
    if os.environ.get(kernels.ENV_FLAG, "numba") == "numba":
        assert kernels.BACKEND == "numba"


def test_unknown_backend_name_rejected():
    with pytest.raises(ValueError):
        get_backend("fortran")

"""The numba and numpy flavours of every kernel must agree exactly."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from primegraph import kernels
from primegraph._accel import HAVE_NUMBA
from primegraph.edgeideal import closed_form_generators
from primegraph.graph import abstract_split_graph
from primegraph.monomial import canonical_order
from primegraph.ring import make_ring


def both(name):
    return kernels.KERNELS[name]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([[4], [6], [8], [9], [12], [2, 3], [2, 2], [4, 3]]), st.data())
def test_ideal_witness_agrees(moduli, data):
    r = make_ring(moduli)
    member = data.draw(arrays(np.bool_, r.order))
    member[0] = data.draw(st.booleans()) or member[0]
    nb, npy = both("ideal_witness")
    got = [tuple(int(v) for v in f(r.coords, r.moduli, r.weights, member)) for f in (nb, npy)]
    assert got[0] == got[1]


def test_ideal_witness_codes():
    r = make_ring([8])
    nb, npy = both("ideal_witness")
    cases = {
        kernels.IDEAL_OK: [0, 2, 4, 6],
        kernels.MISSING_ZERO: [2, 4],
        kernels.NOT_PROPER: list(range(8)),
        kernels.NOT_ADDITIVE: [0, 2],
        kernels.NOT_PRIME: [0, 4],
    }
    for code, elems in cases.items():
        member = np.zeros(8, dtype=np.bool_)
        member[elems] = True
        for f in (nb, npy):
            assert f(r.coords, r.moduli, r.weights, member)[0] == code
    # the diagonal of Z2 x Z2 is an additive subgroup but not an ideal
    r = make_ring([2, 2])
    member = np.array([True, False, False, True])
    for f in (nb, npy):
        assert tuple(f(r.coords, r.moduli, r.weights, member)) == (kernels.NOT_ABSORBING, 1, 3)


@pytest.mark.parametrize("moduli", [[6], [8], [12], [2, 3], [3, 5]])
def test_product_in_set_agrees(moduli):
    r = make_ring(moduli)
    member = r.coords[:, 0] % 2 == 0
    nb, npy = both("product_in_set")
    a, b = nb(r.coords, r.moduli, r.weights, member), npy(r.coords, r.moduli, r.weights, member, chunk=5)
    assert np.array_equal(a, b)


@settings(max_examples=150, deadline=None)
@given(arrays(np.int64, st.tuples(st.integers(1, 25), st.integers(1, 5)), elements=st.integers(0, 3)))
def test_minimal_mask_agrees(rows):
    rows = np.unique(rows, axis=0)
    deg = rows.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    rows, deg = np.ascontiguousarray(rows[order]), deg[order]
    nb, npy = both("minimal_mask")
    got = nb(rows, deg)
    assert np.array_equal(got, npy(rows, deg, budget=7))
    expected = [not any((rows[j] <= rows[i]).all() for j in range(len(rows)) if j != i) for i in range(len(rows))]
    assert got.tolist() == expected


def _lex(rows):
    return np.ascontiguousarray(rows[np.lexsort(rows.T[::-1])])


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.data())
def test_exchange_violation_agrees(width, degree, data):
    pool = [e for e in np.ndindex(*(degree + 1,) * width) if sum(e) == degree]
    rows = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=8, unique=True))
    rows = np.array(rows, dtype=np.int64)
    nb, npy = both("exchange_violation")
    got = [tuple(int(v) for v in f(rows, _lex(rows))) for f in (nb, npy)]
    assert got[0] == got[1]


@pytest.mark.parametrize("a, b, n", [(1, 4, 2), (3, 4, 2), (2, 3, 3)])
def test_exchange_violation_agrees_on_powers(a, b, n):
    rows = np.ascontiguousarray(closed_form_generators(a, b, n).rows)
    for f in both("exchange_violation"):
        assert tuple(f(rows, _lex(rows))) == (-1, -1, -1)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.data())
def test_linear_quotient_ranks_agree(width, degree, data):
    pool = [e for e in np.ndindex(*(degree + 1,) * width) if sum(e) == degree]
    rows = np.array(data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=8, unique=True)), dtype=np.int64)
    rows = np.ascontiguousarray(rows[canonical_order(rows)])
    (r1, f1), (r2, f2) = [f(rows) for f in both("linear_quotient_ranks")]
    assert int(f1) == int(f2)
    assert np.array_equal(r1, r2)


@pytest.mark.parametrize("a, b", [(0, 4), (1, 1), (2, 2), (3, 4), (4, 6)])
def test_minimal_cover_masks_agree(a, b):
    g = abstract_split_graph(a, b)
    eu = np.array([i for i, _ in g.edge_indices], dtype=np.int64)
    ev = np.array([j for _, j in g.edge_indices], dtype=np.int64)
    nb, npy = both("minimal_cover_masks")
    assert np.array_equal(nb(len(g), eu, ev), npy(len(g), eu, ev))


def test_kernels_are_compiled_when_numba_present():
    if not HAVE_NUMBA:
        pytest.skip("numba not installed")
    assert hasattr(kernels.minimal_mask_numba, "py_func")


@pytest.mark.parametrize("flag, expected", [("1", "numpy"), ("0", "numba" if HAVE_NUMBA else "numpy")])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, PRIMEGRAPH_DISABLE_NUMBA=flag)
    code = "import primegraph; print(primegraph.backend_name())"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == expected

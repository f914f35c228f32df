import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockconn import kernels
from blockconn.kernels import _pykernels, get_backend, resolve

from test_graph import symmetric_matrices

needs_c = pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="compiled backend not built")


def test_get_backend():
    assert get_backend("python") is _pykernels
    assert resolve(None) is kernels.default
    assert resolve(_pykernels) is _pykernels
    with pytest.raises(ValueError):
        get_backend("fortran")


@pytest.mark.parametrize("choice,expected", [("python", "python"), ("auto", None)])
def test_env_selects_backend(choice, expected):
    env = dict(os.environ, BLOCKCONN_BACKEND=choice)
    out = subprocess.run(
        [sys.executable, "-c", "import blockconn; print(blockconn.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout.strip()
    assert out == (expected or ("cython" if "cython" in kernels.BACKENDS else "python"))


@needs_c
@settings(max_examples=150)
@given(symmetric_matrices(max_n=14), st.data())
def test_kernels_agree(a, data):
    c = kernels.BACKENDS["cython"]
    n = a.shape[0]
    if n == 0:
        return
    i = data.draw(st.integers(0, n - 1))
    p = data.draw(st.integers(0, n - 1))
    limit = data.draw(st.integers(0, n))
    assert c.row_is_zero(a, i, n) == _pykernels.row_is_zero(a, i, n)
    assert c.first_nonzero(a, i, n) == _pykernels.first_nonzero(a, i, n)
    assert c.cut_holds(a, i, n) == _pykernels.cut_holds(a, i, n)
    assert c.pivot(a, p, n, limit) == _pykernels.pivot(a, p, n, limit)
    ko, kp = np.empty(n - p, np.intp), np.empty(n - p, np.intp)
    c.first_nonzero_all(a, p, n, ko)
    _pykernels.first_nonzero_all(a, p, n, kp)
    assert ko.tolist() == kp.tolist()

    x, y = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
    states = []
    for k in (c, _pykernels):
        b = a.copy()
        lab = np.arange(n, dtype=np.intp)
        pos = np.arange(n, dtype=np.intp)
        k.swap(b, lab, pos, x, y)
        states.append((b.tolist(), lab.tolist(), pos.tolist()))
    assert states[0] == states[1]

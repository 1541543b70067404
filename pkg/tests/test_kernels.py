import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustercrystal import kernel

BACKENDS = kernel.backends()

dense = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(0, 2)),
                        st.integers(-5, 5).filter(bool), min_size=1, max_size=6)


def test_python_backend_always_present():
    assert "python" in BACKENDS
    assert kernel.BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")
@settings(max_examples=300, deadline=None)
@given(dense, dense)
def test_backends_agree(a, b):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    prod_py = py.mul_dense(a, b)
    assert prod_py == cy.mul_dense(a, b)
    assert py.div_dense(prod_py, b) == cy.div_dense(prod_py, b) == a


def test_pure_switch():
    env = dict(os.environ, CLUSTERCRYSTAL_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import clustercrystal as c; print(c.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_inexact_division_raises(name):
    from clustercrystal.errors import NotDivisible
    k = BACKENDS[name]
    with pytest.raises(NotDivisible):
        k.div_dense({(1, 0): 1, (0, 0): 1}, {(1, 0): 1, (0, 1): 1})

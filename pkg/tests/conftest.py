import numpy as np
import pytest
from hypothesis import strategies as st

from bicomplex import Bicomplex


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


@st.composite
def bicomplexes(draw):
    return Bicomplex.from_basis(draw(finite), draw(finite), draw(finite), draw(finite))


def matrep(Z):
    """2x2 complex matrix of z + jw, with j -> [[0, -1], [1, 0]]."""
    return np.array([[Z.z, -Z.w], [Z.w, Z.z]])


def from_matrep(M):
    return Bicomplex(M[0, 0], M[1, 0])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

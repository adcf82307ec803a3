"""
Shared rings, root systems and groups. Everything is session-scoped: ring
tables and structure constants are cached by the library anyway, and
hypothesis rejects function-scoped fixtures.
"""
import pytest

from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.finring import make_ring
from chevlab.algebra.rootsys import parse_root_system


@pytest.fixture(scope="session")
def a2():
    return parse_root_system("A2")


@pytest.fixture(scope="session")
def b2():
    return parse_root_system("B2")


@pytest.fixture(scope="session")
def g2():
    return parse_root_system("G2")


@pytest.fixture(scope="session")
def z12():
    return make_ring("Z/12")


@pytest.fixture(scope="session")
def dual_f3():
    return make_ring("F3[x]/(x^2)")


@pytest.fixture(scope="session")
def sl3_z5(a2):
    return chevalley_group(a2, make_ring("Z/5"))


@pytest.fixture(scope="session")
def sl3_f2(a2):
    return chevalley_group(a2, make_ring("F2"))


@pytest.fixture(scope="session")
def sp4_z5(b2):
    return chevalley_group(b2, make_ring("Z/5"))


@pytest.fixture(scope="session")
def g2_z7(g2):
    return chevalley_group(g2, make_ring("Z/7"))

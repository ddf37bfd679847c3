import pathlib

import pytest

from trihom.algcore import regular_module
from trihom.instances import (
    dual_numbers,
    field_algebra,
    mixed_ring,
    self_paired_ring,
    socle_simple,
    triangular_field_ring,
    upper_triangular_2x2,
)
from trihom.linfield import FMatrix, FieldPrime
from trihom.modrep import dual_module, zero_module
from trihom.trimat import make_left_triple

INSTANCES = pathlib.Path(__file__).resolve().parents[1] / "instances"

CUTOFF = 16


@pytest.fixture(scope="session")
def F2():
    return FieldPrime(2)


@pytest.fixture(scope="session")
def R():
    """The dual numbers k[x]/(x^2) over GF(2)."""
    return dual_numbers(2)


@pytest.fixture(scope="session")
def S(R):
    """The simple module of the dual numbers."""
    return socle_simple(R)


@pytest.fixture(scope="session")
def Rl(R):
    return regular_module(R, "left")


@pytest.fixture(scope="session")
def T2():
    """T2(k) presented by matrix units."""
    return upper_triangular_2x2(2)


@pytest.fixture(scope="session")
def TR(R):
    """T(R) = [[R,0],[R,R]] over the dual numbers."""
    return self_paired_ring(R, name="T(R)")


@pytest.fixture(scope="session")
def T2ring():
    return triangular_field_ring(2)


@pytest.fixture(scope="session")
def MIX():
    return mixed_ring(2)


@pytest.fixture(scope="session")
def tr_suite(TR, R, S, Rl, F2):
    """The three canonical left triples over T(R)."""
    Z = zero_module(R, "left")
    return {
        "S_0": make_left_triple(TR, S, Z, FMatrix.zeros(F2, 0, 1), name="S_0"),
        "S_S_id": make_left_triple(TR, S, S, FMatrix.identity(F2, 1), name="S_S_id"),
        "R_0": make_left_triple(TR, Rl, Z, FMatrix.zeros(F2, 0, 2), name="R_0"),
    }


@pytest.fixture(scope="session")
def instances_dir():
    return INSTANCES

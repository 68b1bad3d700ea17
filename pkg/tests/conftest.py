import pytest

from twistlat.algfile import bundled_document, load, load_involution
from twistlat.core_order import Carrier, validate_lattice
from twistlat.residuated import ResiduatedStructure, derive_residuum


@pytest.fixture(scope="session")
def chain4_r():
    return load(bundled_document("chain4"))


@pytest.fixture(scope="session")
def chain4(chain4_r):
    return chain4_r.lattice


@pytest.fixture(scope="session")
def l6_doc():
    return bundled_document("l6")


@pytest.fixture(scope="session")
def l6_r(l6_doc):
    return load(l6_doc)


@pytest.fixture(scope="session")
def l6(l6_r):
    return l6_r.lattice


@pytest.fixture(scope="session")
def l6_inv(l6_doc, l6):
    return load_involution(l6_doc, l6)


@pytest.fixture(scope="session")
def n5():
    return load(bundled_document("n5"))


@pytest.fixture(scope="session")
def diamond():
    return load(bundled_document("diamond"))


@pytest.fixture(scope="session")
def diamond_inv(diamond):
    return load_involution(bundled_document("diamond"), diamond)


@pytest.fixture(scope="session")
def trivial_r():
    return load(bundled_document("trivial"))


@pytest.fixture(scope="session")
def two_chain():
    return validate_lattice(Carrier(("0", "1")), [("0", "1")], covers=True)


@pytest.fixture(scope="session")
def two_chain_r(two_chain):
    mul = ((0, 0), (0, 1))
    return ResiduatedStructure(two_chain, mul, derive_residuum(two_chain, mul, 1), 1)

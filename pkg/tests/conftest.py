import pytest

from baermult import GroupSpec, build_basis


@pytest.fixture(scope="session")
def basis_2_4():
    return build_basis(2, 4)


@pytest.fixture(scope="session")
def basis_3_3():
    return build_basis(3, 3)


@pytest.fixture
def worked_spec():
    return GroupSpec(2, (11,), 2)

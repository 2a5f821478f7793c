import pytest

from theta_forge.core import from_table

TABLES = {
    "trivial": [[0]],
    "L2": [[0, 0], [1, 1]],
    "R2": [[0, 1], [0, 1]],
    "Z2": [[0, 1], [1, 0]],
    "N2": [[0, 0], [0, 0]],
    "S3x": [[1, 2, 2], [2, 2, 2], [2, 2, 2]],
}


@pytest.fixture(scope="session")
def named():
    return {name: from_table(len(t), t) for name, t in TABLES.items()}


@pytest.fixture(scope="session")
def small():
    from theta_forge.enumeration import semigroups_up_to

    return list(semigroups_up_to(3))


@pytest.fixture(scope="session")
def order4():
    from theta_forge.enumeration import semigroups_up_to

    return list(semigroups_up_to(4))

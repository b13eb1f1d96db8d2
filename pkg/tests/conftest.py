import pytest

from arithcoh.ffield import ExtField
from arithcoh.voronoi import shipped_cell_complex


@pytest.fixture(scope="session")
def cx2():
    return shipped_cell_complex(2)


@pytest.fixture(scope="session")
def cx3():
    return shipped_cell_complex(3)


@pytest.fixture(scope="session")
def cx4():
    return shipped_cell_complex(4)


_fields = {}


def field_for(p, r):
    if (p, r) not in _fields:
        _fields[(p, r)] = ExtField(p, r)
    return _fields[(p, r)]


_dbs = {}


def db_for(N, p, r):
    from arithcoh.constituents import database_for

    key = (N, p, r)
    if key not in _dbs:
        _dbs[key] = database_for(N, field_for(p, r))
    return _dbs[key]

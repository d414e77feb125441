import pytest

import hamsuper as hs

DESK = (3, 2, 2, (1, 1))


@pytest.fixture(scope="session")
def desk_space():
    return hs.Space(*DESK)


@pytest.fixture(scope="session")
def desk_geom(desk_space):
    return hs.Geometry(desk_space)


@pytest.fixture(scope="session")
def desk_hbar():
    return hs.build_hbar(*DESK)


@pytest.fixture(scope="session")
def desk_h(desk_hbar):
    return hs.build_h(*DESK, hbar=desk_hbar)


@pytest.fixture(scope="session")
def desk_witt(desk_space):
    return hs.build_witt_algebra(desk_space)


@pytest.fixture(scope="session")
def desk_report(desk_h):
    return hs.verify_theorem(desk_h, methods=("direct", "reduced"))

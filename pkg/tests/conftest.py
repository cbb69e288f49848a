import pytest

from addmds.gf import field_create

_CACHE = {}


def _tower(p, e, h):
    key = (p, e, h)
    if key not in _CACHE:
        _CACHE[key] = field_create(p, e, h)
    return _CACHE[key]


@pytest.fixture(scope="session")
def f4():
    return _tower(2, 1, 2)


@pytest.fixture(scope="session")
def f8():
    return _tower(2, 1, 3)


@pytest.fixture(scope="session")
def f9():
    return _tower(3, 1, 2)


@pytest.fixture(scope="session")
def f25():
    return _tower(5, 1, 2)


@pytest.fixture(scope="session")
def f27():
    return _tower(3, 1, 3)


@pytest.fixture(scope="session")
def f16_over_f4():
    return _tower(2, 2, 2)


def tower(p, e, h):
    """Module-level access for parametrized tests."""
    return _tower(p, e, h)

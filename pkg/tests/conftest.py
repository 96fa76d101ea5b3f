import pytest

from okbodies import SurfaceModel, generate_catalog

_CACHE = {}


def catalog(s, dmax=8):
    key = (s, dmax)
    if key not in _CACHE:
        _CACHE[key] = generate_catalog(SurfaceModel(s), dmax)
    return _CACHE[key]


@pytest.fixture
def cat():
    return catalog

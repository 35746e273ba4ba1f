import pytest

from ramlab.fields import Field

_cache = {}


@pytest.fixture(scope="session")
def field():
    """Shared Field factory so lookup tables are built once per session."""
    def get(p, k=1):
        if (p, k) not in _cache:
            _cache[(p, k)] = Field(p, k)
        return _cache[(p, k)]
    return get

import pytest

from matroidal import enumerate_matroidal


@pytest.fixture(scope="session")
def enum_cache():
    """Memoized enumeration shared across the whole test session."""
    cache: dict[tuple[int, int, bool], list] = {}

    def get(n: int, d: int, sym: bool = False):
        key = (n, d, sym)
        if key not in cache:
            cache[key] = list(enumerate_matroidal(n, d, up_to_symmetry=sym))
        return cache[key]

    return get

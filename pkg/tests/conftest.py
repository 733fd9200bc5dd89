import pytest

from chipfire import intermediate_configuration


@pytest.fixture(scope="session")
def table():
    """Memoized arrival tables, shared across the whole run."""
    computed = {}

    def get(n):
        if n not in computed:
            computed[n] = list(intermediate_configuration(n))
        return computed[n]

    return get

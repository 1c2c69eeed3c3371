import pytest

from divperiod import period_table


@pytest.fixture(scope="session")
def table_5m():
    return period_table(5_000_000)


@pytest.fixture(scope="session")
def table_100k():
    return period_table(100_000)


def d_naive(n: int) -> int:
    """Independent oracle: count divisors by trial division."""
    c = 0
    i = 1
    while i * i <= n:
        if n % i == 0:
            c += 2 - (i * i == n)
        i += 1
    return c


def k_naive(n: int) -> int:
    """Independent oracle: iterate d_naive until hitting 2."""
    k = 0
    while True:
        n = d_naive(n)
        k += 1
        if n == 2:
            return k

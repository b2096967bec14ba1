import pytest

from apeuler import LSeries, sieve


@pytest.fixture(scope="session")
def primes_1e6():
    return sieve(10**6)


@pytest.fixture(scope="session")
def primes_1e7():
    return sieve(10**7)


@pytest.fixture(scope="session")
def ls6(primes_1e6):
    return LSeries(primes_1e6)


@pytest.fixture(scope="session")
def ls7(primes_1e7):
    return LSeries(primes_1e7)

import pytest

from desargues import FiniteField, Plane, QuaternionRing

# q -> (p, k)
FIELDS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2)}


def gf(q):
    return FiniteField(*FIELDS[q])


def plane(q):
    return Plane(gf(q))


@pytest.fixture(scope="session")
def qplane():
    return Plane(QuaternionRing())


@pytest.fixture(scope="session")
def H():
    return QuaternionRing()

import pytest

from arcdeg.objects import S2Object

# The standard worked pair used by the hom and reduction tests: two
# objects of type ((7,6,5,4,3,2,1); (6,5,4,3,2,1)) with DESCENT_Y
# strictly below DESCENT_Z in every order.
DESCENT_Y = S2Object.from_text("B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)")
DESCENT_Z = S2Object.from_text("B(6,3)+B(5,1)+P1(7)+P1(4)+P1(2)")


@pytest.fixture(scope="session")
def descent_pair():
    return DESCENT_Y, DESCENT_Z


@pytest.fixture(scope="session")
def weight8_sweep():
    """The exhaustive property sweep shared by several acceptance criteria."""
    from arcdeg.verify import equivalence_sweep

    return equivalence_sweep(8)

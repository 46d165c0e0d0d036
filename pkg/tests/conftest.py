import pytest

from gammafuzz.gamma import build, make_modular
from gammafuzz.harness import catalog_ifs, catalog_instance


@pytest.fixture
def z4():
    """Z4 with Γ = Z4, both operations multiplication mod 4."""
    return make_modular(4, range(4))


@pytest.fixture
def z4_even():
    """Z4 with Γ = {0, 2}: the non-regular instance."""
    return make_modular(4, [0, 2])


@pytest.fixture
def z5():
    return make_modular(5, range(5))


@pytest.fixture
def single():
    return build(["a"], ["g"], lambda a, g, b: "a", lambda g, a, h: "g")


@pytest.fixture
def left_zero():
    """aγb = a on {a, b} with Γ = {a}, γaη = γ."""
    return catalog_instance("left-zero-2")


@pytest.fixture
def snapshot():
    return catalog_instance("capped-int")


@pytest.fixture
def example_A():
    return catalog_ifs("capped-int-A")

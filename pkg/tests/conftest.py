import random

import pytest

from src.domain.field import make_extension_field, make_prime_field


@pytest.fixture
def gf2():
    return make_prime_field(2)


@pytest.fixture
def gf3():
    return make_prime_field(3)


@pytest.fixture
def gf4():
    return make_extension_field(2, 2)


@pytest.fixture
def gf5():
    return make_prime_field(5)


@pytest.fixture
def gf9():
    return make_extension_field(3, 2)


@pytest.fixture
def small_fields():
    """Every field with q <= 9."""
    return [
        make_prime_field(2),
        make_prime_field(3),
        make_extension_field(2, 2),
        make_prime_field(5),
        make_prime_field(7),
        make_extension_field(2, 3),
        make_extension_field(3, 2),
    ]


@pytest.fixture
def rng():
    return random.Random(20100611)

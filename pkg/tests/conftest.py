import random

import pytest

from schubert_kit.gcm import rank_two, validate_gcm

AFFINE_A2 = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
B2_INSIDE_RANK3 = [[2, -2, 0], [-1, 2, -1], [0, -1, 2]]


@pytest.fixture
def rng():
    return random.Random(20260808)


@pytest.fixture
def gcm_a11():
    return rank_two(1, 1)


@pytest.fixture
def gcm_b2():
    return rank_two(2, 1)


@pytest.fixture
def gcm_a22():
    return rank_two(2, 2)


@pytest.fixture
def gcm_a23():
    return rank_two(2, 3)


@pytest.fixture
def gcm_affine_a2():
    return validate_gcm(AFFINE_A2)

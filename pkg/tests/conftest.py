import random
from fractions import Fraction

import pytest

from toroidal_irreps.affine import AffineWeight
from toroidal_irreps.pimod import PiFunction


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def pm_one_pi():
    """Two points 1, -1 carrying equal basic level-one weights (k = 2, type A1)."""
    w = AffineWeight(1, (0,))
    return PiFunction(2, ((Fraction(1),), (Fraction(-1),)), (w, w), "A1")

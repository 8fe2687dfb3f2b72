"""Shared fixtures: the reducible five-vector instance used across suites."""

from fractions import Fraction

import pytest

from isoframe.frames import WeightedFrame
from isoframe.kscalar import Field, KVector

SYNTHETIC_DIRECTIONS = ((1, 0), (0, 1), (1, 1), (1, -2), (2, -1))
SYNTHETIC_WEIGHTS = (Fraction(1, 2), Fraction(1, 2), Fraction(5, 27),
                     Fraction(1, 54), Fraction(1, 54))


def build_synthetic_frame():
    """Five rational directions whose forms form a basis of the quartic
    invariants at m = 2 over R; the unique positive weights are frozen here
    and re-derived by exact solve in test_scaling."""
    vectors = tuple(
        KVector.from_reals(Field.R, [Fraction(a), Fraction(b)])
        for a, b in SYNTHETIC_DIRECTIONS)
    return WeightedFrame(Field.R, 2, 4, vectors, SYNTHETIC_WEIGHTS)


@pytest.fixture
def synthetic_frame():
    return build_synthetic_frame()

"""Shared generators for randomized suites.

Randomized tests use seeded ``random.Random`` instances so every run checks
the identical sample set; hypothesis-based tests manage their own generation.
"""

import random
from fractions import Fraction

import pytest

from plauscalc.epsnum import EpsPolynomial, EpsRational
from plauscalc.kernels import get_kernel


def rand_poly(rng: random.Random, max_deg: int, bound: int = 100, nonzero: bool = False) -> EpsPolynomial:
    while True:
        deg = rng.randint(0, max_deg)
        p = EpsPolynomial(
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            for _ in range(deg + 1)
        )
        if not (nonzero and p.is_zero):
            return p


def rand_eps_rational(rng: random.Random, max_deg: int = 6, bound: int = 100) -> EpsRational:
    return EpsRational(rand_poly(rng, max_deg, bound), rand_poly(rng, max_deg, bound, nonzero=True))


@pytest.fixture
def rat_kernel():
    return get_kernel("rat")


@pytest.fixture
def eps_kernel():
    return get_kernel("eps")


@pytest.fixture
def bool_kernel():
    return get_kernel("bool")

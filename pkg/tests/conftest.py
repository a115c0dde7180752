import os
import random
from fractions import Fraction

import pytest

from poisson_forge.exactnum import Matrix, Polynomial
from poisson_forge.multivec import MultiVectorField


DEFAULT_SEED = 20260412


def _suite_seed() -> int:
    return int(os.environ.get("POISSON_FORGE_SEED", DEFAULT_SEED))


@pytest.fixture
def rng():
    return random.Random(_suite_seed())


def random_fraction(rng, lo=-4, hi=4, max_den=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_polynomial(rng, nvars, max_degree=2, nterms=3) -> Polynomial:
    terms = {}
    for _ in range(nterms):
        deg = rng.randint(0, max_degree)
        exps = [0] * nvars
        for _ in range(deg):
            exps[rng.randrange(nvars)] += 1
        terms[tuple(exps)] = random_fraction(rng)
    return Polynomial(nvars, terms)


def random_field(rng, nvars, grade, max_degree=2) -> MultiVectorField:
    import itertools

    comps = {}
    for exps in itertools.combinations(range(nvars), grade):
        if rng.random() < 0.8:
            comps[exps] = random_polynomial(rng, nvars, max_degree)
    return MultiVectorField(nvars, grade, comps)


def random_invertible(rng, n=3, lo=-4, hi=4) -> Matrix:
    while True:
        m = Matrix([[Fraction(rng.randint(lo, hi)) for _ in range(n)]
                    for _ in range(n)])
        if m.det() != 0:
            return m

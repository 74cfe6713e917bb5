"""Random configurations for property checks and demos."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import LAMBDA_ORDER, PAIRS, SLOT, TRIPLES, Configuration, Vec2
from .realizability import PointQuad, config_from_points

BOUND = 9


def random_rational(rng: random.Random, bound: int = BOUND, nonzero: bool = False) -> Fraction:
    """p/q with |p|, |q| <= bound, q != 0."""
    while True:
        p = rng.randint(-bound, bound)
        q = rng.choice([d for d in range(-bound, bound + 1) if d])
        if p or not nonzero:
            return Fraction(p, q)


def random_vec(rng: random.Random, bound: int = BOUND, nonzero: bool = False) -> Vec2:
    while True:
        v = Vec2(random_rational(rng, bound), random_rational(rng, bound))
        if not (nonzero and v.is_zero()):
            return v


def random_config(rng: random.Random, bound: int = BOUND) -> Configuration:
    return Configuration(tuple(random_vec(rng, bound) for _ in PAIRS))


def random_points(rng: random.Random, bound: int = BOUND) -> PointQuad:
    return PointQuad(tuple(random_vec(rng, bound) for _ in range(4)))


def random_realizable(rng: random.Random, bound: int = BOUND) -> tuple[Configuration, list[Fraction]]:
    """Point-derived configuration with each edge rescaled by a random nonzero rational.

    Returns the configuration and the witnessing lambda vector (inverse
    scales, in lambda order), which solves the triangle relations.
    """
    base = config_from_points(random_points(rng, bound))
    scales = {p: random_rational(rng, bound, nonzero=True) for p in PAIRS}
    config = Configuration(tuple(base[p].scale(scales[p]) for p in PAIRS))
    lam = [1 / scales[p] for p in LAMBDA_ORDER]
    return config, lam


def with_equal_triple(
    rng: random.Random, triple: tuple[int, int, int], bound: int = BOUND
) -> Configuration:
    """Random configuration whose three slots on ``triple`` hold one vector."""
    i, j, k = triple
    assert triple in TRIPLES
    shared = random_vec(rng, bound)
    vs = list(random_config(rng, bound).vectors)
    for pair in ((i, j), (i, k), (j, k)):
        vs[SLOT[pair]] = shared
    return Configuration(tuple(vs))

"""Quadrilateral realizability of a configuration.

A configuration is realizable when there are points Q1..Q4 and scalars
``l[i,j]``, not all zero, with ``Q_j - Q_i = l[i,j] * v[i,j]`` for every
pair. Writing each triangle (i,j,k) as ``l_ij v_ij + l_jk v_jk - l_ik v_ik
= 0`` gives an 8x6 linear system in the lambdas; the configuration is
realizable exactly when that system has rank <= 5, which in turn happens
exactly when det^{S^2} vanishes.

Lambda vectors are always in the column order (l12, l23, l34, l13, l24, l14).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import LAMBDA_ORDER, PAIRS, Configuration, Vec2, relation_rows, vec
from .scalar import EXACT, FLOAT, BackendError, Matrix, rank_and_nullspace

_LAMBDA_INDEX = {p: n for n, p in enumerate(LAMBDA_ORDER)}


class InvalidWitness(ValueError):
    pass


@dataclass(frozen=True)
class PointQuad:
    points: tuple[Vec2, Vec2, Vec2, Vec2]

    def __post_init__(self):
        pts = tuple(vec(p) for p in self.points)
        if len(pts) != 4:
            raise ValueError("a quadrilateral has 4 points")
        object.__setattr__(self, "points", pts)

    def __getitem__(self, i: int) -> Vec2:
        """1-based point access: ``quad[1]`` is Q1."""
        return self.points[i - 1]


@dataclass(frozen=True)
class RealizabilityResult:
    rank: int
    lambda_basis: list[list[Fraction]] = field(default_factory=list)
    quadrilaterals: list[PointQuad] = field(default_factory=list)

    @property
    def realizable(self) -> bool:
        return self.rank <= 5

    @property
    def nullity(self) -> int:
        return len(self.lambda_basis)


def _require_exact(c: Configuration) -> None:
    if c.backend != EXACT:
        raise BackendError("realizability needs an exact (rational) configuration")


def build_system_matrix(c: Configuration) -> Matrix:
    """The 8x6 coefficient matrix of the four triangle relations."""
    _require_exact(c)
    return Matrix.from_rows(relation_rows(c))


def lambda_of(lam: Sequence, i: int, j: int):
    return lam[_LAMBDA_INDEX[(min(i, j), max(i, j))]]


def reconstruct_quadrilateral(c: Configuration, lam: Sequence) -> PointQuad:
    """Points Q1..Q4 with Q1 at the origin witnessing the lambda vector."""
    _require_exact(c)
    lam = [Fraction(x) for x in lam]
    if len(lam) != 6:
        raise InvalidWitness(f"lambda must have 6 entries, got {len(lam)}")
    if all(x == 0 for x in lam):
        raise InvalidWitness("lambda must not be the zero vector")
    if any(r != 0 for r in build_system_matrix(c).apply(lam)):
        raise InvalidWitness("lambda does not solve the triangle relations")
    origin = Vec2(Fraction(0), Fraction(0))
    q = {1: origin}
    for j in (2, 3, 4):
        q[j] = origin + c[1, j].scale(lambda_of(lam, 1, j))
    for i, j in PAIRS:
        assert q[j] - q[i] == c[i, j].scale(lambda_of(lam, i, j)), (i, j)
    return PointQuad((q[1], q[2], q[3], q[4]))


def classify(c: Configuration) -> RealizabilityResult:
    rank, basis = rank_and_nullspace(build_system_matrix(c))
    quads = [reconstruct_quadrilateral(c, lam) for lam in basis]
    return RealizabilityResult(rank=rank, lambda_basis=basis, quadrilaterals=quads)


def config_from_points(points) -> Configuration:
    """Edge vectors ``v[i,j] = P_j - P_i`` of four points."""
    quad = points if isinstance(points, PointQuad) else PointQuad(tuple(points))
    return Configuration.from_pairs({(i, j): quad[j] - quad[i] for i, j in PAIRS})


def config_from_angles(theta: Sequence[float]) -> tuple[Configuration, float]:
    """Unit vectors at the angle differences of four lines through the origin.

    Returns the float configuration ``v[i,j] = (cos(t_j - t_i), sin(t_j - t_i))``
    and the predicted value ``sin(p1) sin(2 p2) sin(p3)`` of det^{S^2},
    where ``p_i = t_{i+1} - t_i``.
    """
    t = [float(x) for x in theta]
    if len(t) != 4:
        raise ValueError("need four angles")
    config = Configuration.from_pairs(
        {
            (i, j): (math.cos(t[j - 1] - t[i - 1]), math.sin(t[j - 1] - t[i - 1]))
            for i, j in PAIRS
        }
    )
    p1, p2, p3 = t[1] - t[0], t[2] - t[1], t[3] - t[2]
    predicted = math.sin(p1) * math.sin(2 * p2) * math.sin(p3)
    assert config.backend == FLOAT
    return config, predicted

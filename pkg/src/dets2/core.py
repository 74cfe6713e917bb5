"""Configurations of six plane vectors and three evaluations of det^{S^2}.

A configuration assigns a vector ``v[i,j]`` in k^2 to every pair
``1 <= i < j <= 4``. Slots are stored in the order
(1,2), (1,3), (1,4), (2,3), (2,4), (3,4); lookups with ``i > j`` return the
``(j, i)`` entry.

The three evaluators are:

* :func:`det_s2_direct` - the signed sum of twelve degree-6 monomials;
* :func:`det_s2_inner_product` - three terms ``det(.,.) <.,.> <.,.>``;
* :func:`det_s2_via_matrix` - the determinant of the 6x6 coefficient
  matrix of the first three triangle relations.

They agree exactly on every configuration; the test suite checks this.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .scalar import EXACT, FLOAT, Matrix, coerce, common_backend, det_exact, exactify

PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
SLOT: dict[tuple[int, int], int] = {p: s for s, p in enumerate(PAIRS)}
TRIPLES: tuple[tuple[int, int, int], ...] = tuple(combinations(range(1, 5), 3))

# Column order of the triangle-relation matrices: (l12, l23, l34, l13, l24, l14).
LAMBDA_ORDER: tuple[tuple[int, int], ...] = ((1, 2), (2, 3), (3, 4), (1, 3), (2, 4), (1, 4))

# The twelve monomials of det^{S^2}. Each word picks, per slot in PAIRS
# order, the first ('a', alpha) or second ('b', beta) coordinate.
MONOMIALS: tuple[tuple[int, str], ...] = (
    (+1, "abbaba"),
    (+1, "ababba"),
    (+1, "aabbab"),
    (+1, "babbaa"),
    (+1, "bbaaab"),
    (+1, "baaabb"),
    (-1, "baabab"),
    (-1, "babaab"),
    (-1, "bbaaba"),
    (-1, "abaabb"),
    (-1, "aabbba"),
    (-1, "abbbaa"),
)


@dataclass(frozen=True)
class Vec2:
    alpha: object
    beta: object

    def __post_init__(self):
        backend = common_backend((self.alpha, self.beta))
        object.__setattr__(self, "alpha", coerce(self.alpha, backend))
        object.__setattr__(self, "beta", coerce(self.beta, backend))

    @property
    def backend(self) -> str:
        return common_backend((self.alpha, self.beta))

    def __iter__(self):
        yield self.alpha
        yield self.beta

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.alpha - other.alpha, self.beta - other.beta)

    def __neg__(self) -> Vec2:
        return Vec2(-self.alpha, -self.beta)

    def scale(self, mu) -> Vec2:
        return Vec2(mu * self.alpha, mu * self.beta)

    def coord(self, which: str):
        return self.alpha if which == "a" else self.beta

    def is_zero(self) -> bool:
        return self.alpha == 0 and self.beta == 0


def vec(x) -> Vec2:
    return x if isinstance(x, Vec2) else Vec2(*x)


def dot(u: Vec2, w: Vec2):
    return u.alpha * w.alpha + u.beta * w.beta


def det2(u: Vec2, w: Vec2):
    """Determinant of the 2x2 matrix with columns ``u`` and ``w``."""
    return u.alpha * w.beta - u.beta * w.alpha


@dataclass(frozen=True)
class Configuration:
    """Six vectors ``v[i,j]``, one per pair, on a single scalar backend."""

    vectors: tuple[Vec2, ...]

    def __post_init__(self):
        vs = tuple(vec(v) for v in self.vectors)
        if len(vs) != 6:
            raise ValueError(f"a configuration has 6 vectors, got {len(vs)}")
        backend = common_backend(x for v in vs for x in v)
        vs = tuple(Vec2(coerce(v.alpha, backend), coerce(v.beta, backend)) for v in vs)
        object.__setattr__(self, "vectors", vs)

    @classmethod
    def from_pairs(cls, mapping: Mapping[tuple[int, int], object]) -> Configuration:
        """Build from ``{(i, j): (alpha, beta)}`` with all six pairs present."""
        norm = {}
        for (i, j), v in mapping.items():
            key = (min(i, j), max(i, j))
            if key not in SLOT:
                raise KeyError(f"bad pair {(i, j)}")
            norm[key] = v
        missing = [p for p in PAIRS if p not in norm]
        if missing:
            raise KeyError(f"missing pairs {missing}")
        return cls(tuple(norm[p] for p in PAIRS))

    @classmethod
    def zero(cls, backend: str = EXACT) -> Configuration:
        z = coerce(0, backend)
        return cls(tuple(Vec2(z, z) for _ in PAIRS))

    @property
    def backend(self) -> str:
        return self.vectors[0].backend

    def __getitem__(self, pair: tuple[int, int]) -> Vec2:
        i, j = pair
        if i > j:
            i, j = j, i
        return self.vectors[SLOT[(i, j)]]

    def items(self) -> Iterable[tuple[tuple[int, int], Vec2]]:
        return zip(PAIRS, self.vectors)

    def replace(self, pair: tuple[int, int], v) -> Configuration:
        i, j = pair
        s = SLOT[(min(i, j), max(i, j))]
        vs = list(self.vectors)
        vs[s] = vec(v)
        return Configuration(tuple(vs))

    def map(self, f) -> Configuration:
        return Configuration(tuple(f(v) for v in self.vectors))

    def to_float(self) -> Configuration:
        return self.map(lambda v: Vec2(float(v.alpha), float(v.beta)))

    def to_exact(self) -> Configuration:
        """Exact copy; float entries convert without rounding."""
        return self.map(lambda v: Vec2(exactify(v.alpha), exactify(v.beta)))


def det_s2_direct(c: Configuration):
    """Signed sum of the twelve monomials (works on either backend)."""
    total = coerce(0, c.backend)
    vs = c.vectors
    for sign, word in MONOMIALS:
        term = coerce(sign, c.backend)
        for v, w in zip(vs, word):
            term = term * (v.alpha if w == "a" else v.beta)
        total += term
    return total


def det_s2_inner_product(c: Configuration):
    v12, v13, v14 = c[1, 2], c[1, 3], c[1, 4]
    v23, v24, v34 = c[2, 3], c[2, 4], c[3, 4]
    return (
        det2(v14, v24) * dot(v12, v34) * dot(v13, v23)
        + det2(v34, v14) * dot(v13, v24) * dot(v12, v23)
        + det2(v24, v34) * dot(v14, v23) * dot(v12, v13)
    )


def relation_rows(c: Configuration) -> list[list]:
    """Coefficient rows R1..R8 of the four triangle relations.

    Relation (i,j,k) reads ``l_ij v_ij + l_jk v_jk - l_ik v_ik = 0``; each
    contributes its alpha row and then its beta row, for the triples
    (1,2,3), (1,2,4), (1,3,4), (2,3,4). Columns follow LAMBDA_ORDER.
    """
    zero = coerce(0, c.backend)
    col = {p: n for n, p in enumerate(LAMBDA_ORDER)}
    rows = []
    for i, j, k in TRIPLES:
        for which in "ab":
            row = [zero] * 6
            row[col[(i, j)]] = c[i, j].coord(which)
            row[col[(j, k)]] = c[j, k].coord(which)
            row[col[(i, k)]] = -c[i, k].coord(which)
            rows.append(row)
    return rows


def relation_matrix_6x6(c: Configuration) -> Matrix:
    """The 6x6 matrix whose determinant is det^{S^2} (rows R1..R6)."""
    return Matrix.from_rows(relation_rows(c)[:6])


def det_s2_via_matrix(c: Configuration):
    """det^{S^2} as the Bareiss determinant of :func:`relation_matrix_6x6`.

    Float configurations are converted to exact rationals without rounding,
    evaluated exactly, and returned as a float.
    """
    if c.backend == FLOAT:
        return float(det_exact(relation_matrix_6x6(c.to_exact())))
    return det_exact(relation_matrix_6x6(c))


def has_equal_triple(c: Configuration) -> bool:
    return any(c[i, j] == c[i, k] == c[j, k] for i, j, k in TRIPLES)


def det_s2(c: Configuration):
    """Default evaluator."""
    return det_s2_direct(c)


def exact_config(mapping: Mapping[tuple[int, int], object]) -> Configuration:
    """Shorthand: configuration with every coordinate made a Fraction."""
    return Configuration.from_pairs(
        {p: (Fraction(a), Fraction(b)) for p, (a, b) in mapping.items()}
    )

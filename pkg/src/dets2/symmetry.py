"""The S_4 relabeling action and the entrywise action of 2x2 linear maps.

Under relabeling, det^{S^2} picks up the sign of the permutation; under a
linear map ``T`` applied to every entry it is multiplied by ``det(T)**3``.

Composition convention
----------------------
The action is pointwise: ``(sigma . c)[i, j] = c[sigma(i), sigma(j)]``.
Unwinding it, ``sigma . (tau . c)`` reads ``c`` at ``tau(sigma(i))``, so
the product that makes this a left action is "apply the left factor
first": ``compose(sigma, tau)(i) == tau(sigma(i))``. With that product,
``act_permutation(sigma, act_permutation(tau, c)) ==
act_permutation(compose(sigma, tau), c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .core import PAIRS, Configuration, Vec2
from .scalar import coerce, common_backend


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, 2, 3, 4} given by its images (s(1), ..., s(4))."""

    images: tuple[int, int, int, int]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != [1, 2, 3, 4]:
            raise ValueError(f"not a permutation of 1..4: {self.images!r}")
        object.__setattr__(self, "images", images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @classmethod
    def identity(cls) -> Permutation:
        return cls((1, 2, 3, 4))

    @classmethod
    def from_cycle(cls, *cycle: int) -> Permutation:
        """The cycle (c0 c1 ... cn), e.g. ``from_cycle(1, 2)`` swaps 1 and 2."""
        images = [1, 2, 3, 4]
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b
        return cls(tuple(images))

    def inverse(self) -> Permutation:
        inv = [0] * 4
        for i, s in enumerate(self.images, start=1):
            inv[s - 1] = i
        return Permutation(tuple(inv))


def all_permutations() -> list[Permutation]:
    return [Permutation(p) for p in permutations((1, 2, 3, 4))]


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """Product ``sigma*tau`` with ``(sigma*tau)(i) = tau(sigma(i))``."""
    return Permutation(tuple(tau(sigma(i)) for i in range(1, 5)))


def permutation_sign(p: Permutation) -> int:
    s = p.images
    inversions = sum(1 for a in range(4) for b in range(a + 1, 4) if s[a] > s[b])
    return -1 if inversions % 2 else 1


def act_permutation(p: Permutation, c: Configuration) -> Configuration:
    return Configuration(tuple(c[p(i), p(j)] for i, j in PAIRS))


@dataclass(frozen=True)
class LinearMap2:
    """``[[t11, t12], [t21, t22]]`` acting on column vectors."""

    t11: object
    t12: object
    t21: object
    t22: object

    def __post_init__(self):
        entries = (self.t11, self.t12, self.t21, self.t22)
        backend = common_backend(entries)
        for name, value in zip(("t11", "t12", "t21", "t22"), entries):
            object.__setattr__(self, name, coerce(value, backend))

    @classmethod
    def identity(cls) -> LinearMap2:
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def __call__(self, v: Vec2) -> Vec2:
        return Vec2(
            self.t11 * v.alpha + self.t12 * v.beta,
            self.t21 * v.alpha + self.t22 * v.beta,
        )

    def det(self):
        return self.t11 * self.t22 - self.t12 * self.t21


def act_linear_map(t: LinearMap2, c: Configuration) -> Configuration:
    return c.map(t)

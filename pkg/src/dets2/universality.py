"""Recover det^{S^2} from its vanishing property alone.

A multilinear map f: (k^2)^6 -> k is a vector of 64 coefficients, one per
word in {a, b}^6 (which coordinate each slot contributes). Word index bit
5 is slot (1,2) and bit 0 is slot (3,4); a set bit means beta, so index
order is lexicographic order with 'a' < 'b'.

Requiring f to vanish whenever the three slots of a triangle hold the same
vector (x, y) is linear in the coefficients. By multilinearity the other
three slots may be restricted to basis vectors (8 choices), and the
resulting cubic form in (x, y) vanishes iff its 4 coefficients do. That is
4 triangles * 8 * 4 = 128 linear equations in 64 unknowns; their solution
space turns out to be a line spanned by the twelve-term formula.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .core import MONOMIALS, SLOT, TRIPLES, Configuration
from .scalar import Matrix, rank_and_nullspace

N_SLOTS = 6
N_WORDS = 2**N_SLOTS


def word_index(word: str) -> int:
    idx = 0
    for ch in word:
        idx = (idx << 1) | (ch == "b")
    return idx


def index_word(idx: int) -> str:
    return "".join("b" if idx >> (N_SLOTS - 1 - s) & 1 else "a" for s in range(N_SLOTS))


def triangle_slots(triple: tuple[int, int, int]) -> tuple[int, int, int]:
    i, j, k = triple
    return SLOT[(i, j)], SLOT[(i, k)], SLOT[(j, k)]


def constraint_rows(triple: tuple[int, int, int]) -> list[list[int]]:
    """The 32 constraint rows contributed by one triangle."""
    tri = triangle_slots(triple)
    rest = [s for s in range(N_SLOTS) if s not in tri]
    rows = []
    for assignment in product("ab", repeat=len(rest)):
        for m in range(4):
            row = [0] * N_WORDS
            for idx in range(N_WORDS):
                w = index_word(idx)
                if all(w[s] == ch for s, ch in zip(rest, assignment)) and (
                    sum(w[s] == "b" for s in tri) == m
                ):
                    row[idx] = 1
            rows.append(row)
    return rows


def build_constraint_matrix(triples: Sequence[tuple[int, int, int]] = TRIPLES) -> Matrix:
    rows = [r for t in triples for r in constraint_rows(t)]
    return Matrix.from_rows([[Fraction(x) for x in r] for r in rows])


def canonical_coefficients() -> list[Fraction]:
    coeffs = [Fraction(0)] * N_WORDS
    for sign, word in MONOMIALS:
        coeffs[word_index(word)] = Fraction(sign)
    return coeffs


def evaluate(coeffs: Sequence, c: Configuration):
    """Pair a coefficient vector with a configuration."""
    total = 0
    for idx, coef in enumerate(coeffs):
        if coef == 0:
            continue
        term = coef
        for v, ch in zip(c.vectors, index_word(idx)):
            term = term * v.coord(ch)
        total += term
    return total


def solve_uniqueness(
    triples: Sequence[tuple[int, int, int]] = TRIPLES,
) -> tuple[int, list[Fraction] | None]:
    """Dimension of the solution space and, if it is a line, its generator.

    The generator is scaled so that its first nonzero entry (in index
    order) is +1.
    """
    _, basis = rank_and_nullspace(build_constraint_matrix(triples))
    dim = len(basis)
    if dim != 1:
        return dim, None
    gen = basis[0]
    first = next(x for x in gen if x != 0)
    return 1, [x / first for x in gen]


def match_sign(generator: Sequence, reference: Sequence) -> int | None:
    """+1 or -1 if ``generator == sign * reference``, otherwise None."""
    for sign in (1, -1):
        if all(g == sign * r for g, r in zip(generator, reference)):
            return sign
    return None


def support(coeffs: Sequence) -> list[str]:
    return [index_word(i) for i, x in enumerate(coeffs) if x != 0]


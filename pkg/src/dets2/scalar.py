"""Exact and floating scalars plus deterministic exact dense linear algebra.

Exact scalars are :class:`fractions.Fraction` (always stored in lowest terms
with a positive denominator); float scalars are plain Python floats.
Every zero-decision that matters (determinants, ranks, nullspaces) is made
on the exact side. Elimination is fraction-free: rational rows are scaled
to integer rows first, so the inner loops only ever touch Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence

EXACT = "exact"
FLOAT = "float"


class InvalidScalar(ValueError):
    pass


class ShapeError(ValueError):
    pass


class BackendError(TypeError):
    """An exact-only operation received float data (or backends were mixed)."""


def normalize_rational(p: int, q: int) -> Fraction:
    """Return ``p/q`` in canonical form (reduced, denominator > 0)."""
    if q == 0:
        raise InvalidScalar(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


def backend_of(x) -> str:
    if isinstance(x, bool):
        raise BackendError(f"booleans are not scalars: {x!r}")
    if isinstance(x, Rational):
        return EXACT
    if isinstance(x, float):
        return FLOAT
    raise BackendError(f"unsupported scalar type {type(x).__name__}")


def coerce(x, backend: str | None = None):
    """Coerce ``x`` to a scalar of ``backend`` (default: its natural backend).

    Ints become Fractions. Floats are only accepted for the float backend;
    there is no silent float-to-exact conversion here (see :func:`exactify`).
    """
    natural = backend_of(x)
    if backend is None:
        backend = natural
    if backend == EXACT:
        if natural != EXACT:
            raise BackendError(f"float {x!r} where an exact scalar is required")
        return Fraction(x)
    if backend == FLOAT:
        return float(x)
    raise ValueError(f"unknown backend {backend!r}")


def exactify(x) -> Fraction:
    """Exact rational value of ``x``; floats convert with no rounding."""
    return Fraction(x)


def common_backend(values: Iterable) -> str:
    found = {backend_of(v) for v in values}
    if len(found) > 1:
        raise BackendError("mixed exact and float scalars")
    return found.pop() if found else EXACT


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix whose entries all share one backend."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        backend = common_backend(self.entries)
        object.__setattr__(
            self, "entries", tuple(coerce(e, backend) for e in self.entries)
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    @property
    def backend(self) -> str:
        return common_backend(self.entries)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def select_rows(self, indices: Iterable[int]) -> Matrix:
        return Matrix.from_rows([self.row(i) for i in indices])

    def apply(self, x: Sequence) -> list:
        """Matrix-vector product ``self @ x``."""
        if len(x) != self.cols:
            raise ShapeError(f"vector of length {len(x)} for {self.cols} columns")
        return [sum(a * b for a, b in zip(self.row(i), x)) for i in range(self.rows)]


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix.from_rows(m)


def _integer_rows(m: Matrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; return the rows and the product of scales."""
    if m.backend != EXACT:
        raise BackendError("exact linear algebra requires exact entries")
    out = []
    scale = Fraction(1)
    for i in range(m.rows):
        row = m.row(i)
        den = lcm(*(e.denominator for e in row)) if row else 1
        out.append([int(e * den) for e in row])
        scale *= den
    return out, scale


def det_exact(m) -> Fraction:
    """Determinant by Bareiss fraction-free elimination.

    Pivoting takes the first nonzero entry in the current column, scanning
    rows top-down; nothing else.
    """
    m = _as_matrix(m)
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1]) / scale


def _primitive(vec: list[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        return vec
    vec = [x // g for x in vec]
    first = next(x for x in vec if x != 0)
    return [-x for x in vec] if first < 0 else vec


def row_reduce(m) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan form of ``m`` over the integers.

    Returns ``(rows, pivot_cols)``: the nonzero rows of a matrix whose pivot
    columns are zero except at their own pivot, each row divided by its
    content. Scaling row ``r`` by ``1/rows[r][pivot_cols[r]]`` gives the
    reduced row echelon form.
    """
    m = _as_matrix(m)
    a, _ = _integer_rows(m)
    a = [_primitive(r) for r in a]
    nrows, ncols = m.rows, m.cols
    pivot_cols: list[int] = []
    p = 0
    for c in range(ncols):
        if p == nrows:
            break
        for r in range(p, nrows):
            if a[r][c] != 0:
                break
        else:
            continue
        a[p], a[r] = a[r], a[p]
        piv_row = a[p]
        d = piv_row[c]
        for r in range(nrows):
            if r == p or a[r][c] == 0:
                continue
            f = a[r][c]
            a[r] = _content_reduce([d * x - f * y for x, y in zip(a[r], piv_row)])
        pivot_cols.append(c)
        p += 1
    return a[:p], pivot_cols


def _content_reduce(vec: list[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return [x // g for x in vec] if g > 1 else vec


def rank_and_nullspace(m) -> tuple[int, list[list[Fraction]]]:
    """Exact rank and a canonical nullspace basis of ``m``.

    One basis vector per free (non-pivot) column, in increasing column
    order, read off the reduced echelon form. Each vector is primitive
    integral: denominators cleared, content 1, first nonzero entry positive.
    """
    m = _as_matrix(m)
    rows, pivots = row_reduce(m)
    rank = len(pivots)
    basis = []
    pivot_set = set(pivots)
    for f in range(m.cols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            x[pc] = Fraction(-row[f], row[pc])
        den = lcm(*(v.denominator for v in x))
        basis.append([Fraction(v) for v in _primitive([int(v * den) for v in x])])
    return rank, basis


def rank(m) -> int:
    return len(row_reduce(m)[1])

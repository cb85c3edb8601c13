"""Torsion of finite exact complexes over Q, and the two-term complex built
from a pair of binary forms whose torsion recovers their resultant.

Matrices are tuples of rows of Fractions; the map d_i of a complex
0 -> C_0 -> C_1 -> ... -> C_k -> 0 has shape dim(C_{i+1}) x dim(C_i),
acting on column vectors.  Torsion is computed by the nested-minor rule:
walking from the last map backward, pick at each stage the lexicographically
first column subset whose minor on the still-unused rows is invertible; the
torsion is the alternating product of those minors.  The value is
basis-dependent only up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .binaryforms import BinaryForm

Matrix = tuple[tuple[Fraction, ...], ...]


class NotExactError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteComplex:
    """Chain of Q-vector spaces with composable differentials squaring to zero."""

    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if any(d < 0 for d in dims):
            raise ValueError("negative dimension")
        if len(self.maps) != max(len(dims) - 1, 0):
            raise ValueError("need one map per adjacent pair of terms")
        maps = tuple(_as_matrix(m, dims[i + 1], dims[i]) for i, m in enumerate(self.maps))
        for i in range(len(maps) - 1):
            if not _is_zero(_mat_mul(maps[i + 1], maps[i])):
                raise ValueError("differentials do not compose to zero")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", maps)

    def ranks(self) -> tuple[int, ...]:
        return tuple(_rank(m) for m in self.maps)

    def is_exact(self) -> bool:
        """Exactness at every term, endpoints included."""
        r = self.ranks()
        for i, d in enumerate(self.dims):
            left = r[i - 1] if i > 0 else 0
            right = r[i] if i < len(r) else 0
            if left + right != d:
                return False
        return True


def _as_matrix(m: Sequence[Sequence], nrows: int, ncols: int) -> Matrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in m)
    if len(out) != nrows or any(len(row) != ncols for row in out):
        raise ValueError("map shape does not match adjacent dimensions")
    return out


def _is_zero(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return tuple(tuple() for _ in a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def _rank(m: Matrix) -> int:
    rows = [list(r) for r in m]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _det(m: Matrix) -> Fraction:
    n = len(m)
    rows = [list(r) for r in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, n):
            if rows[i][col] != 0:
                f = rows[i][col] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return det


def torsion(c: FiniteComplex) -> Fraction:
    """Alternating product of nested minors; the last map contributes with
    exponent +1.  Deterministic given the bases: subsets are scanned in
    lexicographic order.

    Raises:
        NotExactError: the complex is not exact, so no torsion is defined.
    """
    if not c.is_exact():
        raise NotExactError("torsion undefined: complex is not exact")
    k = len(c.maps)
    if k == 0:
        return Fraction(1)
    ranks = c.ranks()
    result = Fraction(1)
    # rows available to the map ending at each term; starts as all of C_k
    rows = tuple(range(c.dims[k]))
    for i in range(k - 1, -1, -1):
        m = c.maps[i]
        r = ranks[i]
        cols = _first_invertible_cols(m, rows, r)
        minor = _det(tuple(tuple(m[a][b] for b in cols) for a in rows))
        exponent = 1 if (k - 1 - i) % 2 == 0 else -1
        result *= minor if exponent == 1 else 1 / minor
        rows = tuple(j for j in range(c.dims[i]) if j not in set(cols))
    if rows:
        raise AssertionError("leftover rows after the first map")
    return result


def _first_invertible_cols(m: Matrix, rows: tuple[int, ...], r: int) -> tuple[int, ...]:
    """Lexicographically first size-r column set invertible on the rows.

    Greedy rank extension left to right picks exactly the subset a
    lexicographic scan over combinations would, without the enumeration.
    """
    ncols = len(m[0]) if m else 0
    kept: list[int] = []
    for j in range(ncols):
        if len(kept) == r:
            break
        trial = kept + [j]
        sub = tuple(tuple(m[a][b] for b in trial) for a in rows)
        if _rank(sub) == len(trial):
            kept.append(j)
    if len(kept) != r:
        raise AssertionError("no invertible minor on the available rows")
    return tuple(kept)


# ---------------------------------------------------------------------------
# the resultant complex of a pair of binary forms


def koszul_complex(f: BinaryForm, g: BinaryForm, m: int) -> FiniteComplex:
    """0 -> P_{m-2d} -> P_{m-d} + P_{m-d} -> P_m -> 0 with
    h |-> (-g h, f h) and (p, q) |-> f p + g q, where P_k is the space of
    polynomials of degree at most k (empty for k < 0).

    Preconditions: deg f == deg g == d >= 1 and m >= 2d - 1.
    """
    if f.degree != g.degree:
        raise ValueError("forms must have equal declared degree")
    d = f.degree
    if d < 1:
        raise ValueError("degree must be at least 1")
    m = int(m)
    if m < 2 * d - 1:
        raise ValueError("need m >= 2d - 1")
    dims = []
    maps = []
    mid = m - d + 1
    top = m - 2 * d + 1
    if top > 0:
        dims.append(top)
        b = [[Fraction(0)] * top for _ in range(2 * mid)]
        for c in range(top):
            for j, coeff in enumerate(g.coeffs):
                b[c + j][c] = Fraction(-coeff)
            for j, coeff in enumerate(f.coeffs):
                b[mid + c + j][c] = Fraction(coeff)
        maps.append(tuple(tuple(row) for row in b))
    dims.append(2 * mid)
    a = [[Fraction(0)] * (2 * mid) for _ in range(m + 1)]
    for c in range(mid):
        for j, coeff in enumerate(f.coeffs):
            a[c + j][c] = Fraction(coeff)
        for j, coeff in enumerate(g.coeffs):
            a[c + j][mid + c] = Fraction(coeff)
    maps.append(tuple(tuple(row) for row in a))
    dims.append(m + 1)
    return FiniteComplex(tuple(dims), tuple(maps))


def koszul_resultant(f: BinaryForm, g: BinaryForm, m: int) -> Fraction:
    """Torsion of the pair complex at width m.

    Raises:
        NotExactError: the complex is inexact, which for this complex means
            the resultant of the pair vanishes.
    """
    return torsion(koszul_complex(f, g, m))


def weighted_euler_degree(h0: Sequence[int]) -> int:
    """Alternating weighted sum sum_j (-1)^(j+1) j h0[j] of a dimension list."""
    return sum((-1) ** (j + 1) * j * int(v) for j, v in enumerate(h0))

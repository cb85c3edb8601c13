"""Torus orbit closures: the morphism-extension criterion and boundary
accessibility data for finite character sets.

Everything is exact integer/rational arithmetic on points of a fixed lattice
rank.  The extension criterion is a polytope containment; its failure is
converted into an integer functional violating the pointwise star condition,
so the two views refute each other constructively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .lattice import contains, hull, solve_phase1

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class ToricData:
    """Character set A with a distinguished nonempty subset B."""

    A: tuple[IntPoint, ...]
    B: tuple[IntPoint, ...]
    dim: int

    def __post_init__(self) -> None:
        A = tuple(sorted({tuple(int(c) for c in a) for a in self.A}))
        B = tuple(sorted({tuple(int(c) for c in b) for b in self.B}))
        if not B:
            raise ValueError("B must be nonempty")
        if any(len(p) != self.dim for p in A + B):
            raise ValueError("points must match the declared rank")
        if not set(B) <= set(A):
            raise ValueError("B must be a subset of A")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    def complement(self) -> tuple[IntPoint, ...]:
        return tuple(p for p in self.A if p not in set(self.B))


def star_condition(data: ToricData, u: Sequence[int]) -> bool:
    """min{0, min over B} <= min over A minus B, for the pairing with u.

    Vacuously true when A equals B.

    Raises:
        ValueError: u has the wrong length.
    """
    uu = tuple(int(c) for c in u)
    if len(uu) != data.dim:
        raise ValueError("functional has the wrong length")
    rest = data.complement()
    if not rest:
        return True
    lhs = min(0, min(_dot(uu, b) for b in data.B))
    return lhs <= min(_dot(uu, a) for a in rest)


def _dot(u: Sequence[int], p: Sequence[int]) -> int:
    return sum(int(a) * int(b) for a, b in zip(u, p))


@dataclass(frozen=True)
class ExtensionResult:
    extends: bool
    # integer functional violating the star condition, when extension fails
    star_violator: Optional[IntPoint] = None

    def __bool__(self) -> bool:
        return self.extends


def extension_criterion(data: ToricData) -> ExtensionResult:
    """hull({0} union B) contains hull(A minus B), exactly.

    On failure the result carries an integer u with
    star_condition(data, u) false, obtained by clearing denominators of the
    separating functional; the violation is verified before returning.
    """
    rest = data.complement()
    if not rest:
        return ExtensionResult(True)
    zero = (0,) * data.dim
    outer = hull((zero,) + data.B)
    res = contains(outer, hull(rest))
    if res:
        return ExtensionResult(True)
    sep = res.separator
    assert sep is not None
    u = _integerize([-c for c in sep.coeffs])
    if star_condition(data, u):
        raise AssertionError("separator failed to violate the star condition")
    return ExtensionResult(False, u)


def _integerize(coords: Sequence[Fraction]) -> IntPoint:
    denom = 1
    for c in coords:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coords]
    common = 0
    for c in ints:
        common = gcd(common, abs(c))
    return tuple(c // common for c in ints) if common else tuple(ints)


def boundary_witness(A: Sequence[Sequence[int]], u: Sequence[int]) -> tuple[IntPoint, ...]:
    """Argmin set of the pairing with u: the support of the limit point of
    the one-parameter degeneration of a vector with full support A."""
    pts = tuple(sorted({tuple(int(c) for c in a) for a in A}))
    if not pts:
        raise ValueError("empty character set")
    uu = tuple(int(c) for c in u)
    vals = [_dot(uu, p) for p in pts]
    lo = min(vals)
    return tuple(p for p, v in zip(pts, vals) if v == lo)


# ---------------------------------------------------------------------------
# accessibility: which subsets arise as argmin sets, with integer certificates


@dataclass(frozen=True)
class FaceCertificate:
    subset: tuple[IntPoint, ...]
    u: IntPoint


def accessible_faces(A: Sequence[Sequence[int]]) -> list[FaceCertificate]:
    """All subsets of A realizable as boundary_witness(A, u), certified.

    For each nonempty subset S an LP decides whether some functional is
    constant on S and strictly larger on the rest; a feasible rational
    solution is cleared to an integer u and rechecked against
    boundary_witness, so every returned certificate is exact.
    """
    pts = tuple(sorted({tuple(int(c) for c in a) for a in A}))
    if not pts:
        raise ValueError("empty character set")
    dim = len(pts[0])
    out = []
    for r in range(1, len(pts) + 1):
        for S in itertools.combinations(pts, r):
            u = _face_functional(pts, set(S), dim)
            if u is None:
                continue
            if boundary_witness(pts, u) != tuple(sorted(S)):
                raise AssertionError("certified functional has the wrong argmin")
            out.append(FaceCertificate(tuple(sorted(S)), u))
    return out


def _face_functional(
    pts: tuple[IntPoint, ...], S: set, dim: int
) -> Optional[IntPoint]:
    """Integer u with pairing constant c on S and at least c+1 off S."""
    rest = [p for p in pts if p not in S]
    base = next(iter(sorted(S)))
    # unknowns: u (split into positive and negative parts), c, slacks;
    # rows: equalities over S, inequalities with slack over the rest
    rows = []
    rhs = []
    for p in sorted(S):
        if p == base:
            continue
        rows.append(("eq", tuple(a - b for a, b in zip(p, base))))
        rhs.append(Fraction(0))
    for p in rest:
        rows.append(("ge", tuple(a - b for a, b in zip(p, base))))
        rhs.append(Fraction(1))
    if not rows:
        return (0,) * dim
    columns = []
    for sign in (1, -1):
        for j in range(dim):
            columns.append(tuple(Fraction(sign * diff[j]) for _, diff in rows))
    for i, (kind, _) in enumerate(rows):
        if kind == "ge":
            col = [Fraction(0)] * len(rows)
            col[i] = Fraction(-1)
            columns.append(tuple(col))
    res = solve_phase1(columns, tuple(rhs))
    if not res.feasible:
        return None
    x = res.x
    assert x is not None
    u_frac = [x[j] - x[dim + j] for j in range(dim)]
    return _integerize(u_frac)


def max_certificate_coordinate(certs: Sequence[FaceCertificate]) -> int:
    """Largest absolute coordinate over all certificate functionals."""
    out = 0
    for cert in certs:
        for c in cert.u:
            out = max(out, abs(c))
    return out

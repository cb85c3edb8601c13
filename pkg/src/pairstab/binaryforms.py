"""Binary forms: resultants, discriminants, root-order profiles, the exact
SL(2) pair criterion, and the Chow/discriminant vertex polytopes.

A form of declared degree d is stored by its affine coefficients a_0..a_d
(a_i multiplies z^i); vanishing leading coefficients encode roots at the
point at infinity of the projective line.  All arithmetic is exact.

Resultant convention.  resultant(P, Q) with deg P = m, deg Q = n is the
determinant of the (m+n) x (m+n) matrix whose first m rows are the shifted
descending coefficients of Q and whose last n rows are those of P.  With
that row order the value is lead(Q)^m * prod P(beta) over the roots of Q,
and resultant(P, Q) = (-1)^(mn) resultant(Q, P).

Discriminant convention.  discriminant(P) = resultant(P, dP/dz) at degrees
(d, d-1).  Against the common normalization this satisfies
discriminant(P) = (-1)^(d(d-1)/2) * a_d * disc_textbook(P); for instance
d = 2 gives -a2*(a1^2 - 4*a0*a2) and the monic cubic z^3 + p*z + q gives
+(4*p^3 + 27*q^2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import _poly
from .lattice import LatticePolytope, contains, hull

Coeffs = tuple[Fraction, ...]


class InfinityPoint:
    """Marker for the point at infinity in an order profile."""

    _instance: Optional["InfinityPoint"] = None

    def __new__(cls) -> "InfinityPoint":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = InfinityPoint()


@dataclass(frozen=True)
class BinaryForm:
    """Form of a declared degree with rational coefficients a_0..a_d."""

    degree: int
    coeffs: Coeffs

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) > self.degree + 1:
            raise ValueError("more coefficients than the degree allows")
        cs = cs + (Fraction(0),) * (self.degree + 1 - len(cs))
        if all(c == 0 for c in cs):
            raise ValueError("the zero form is not allowed")
        object.__setattr__(self, "coeffs", cs)

    @property
    def affine_degree(self) -> int:
        return max(i for i, c in enumerate(self.coeffs) if c != 0)

    @property
    def ord_infinity(self) -> int:
        return self.degree - self.affine_degree

    def affine(self) -> Coeffs:
        """Trimmed affine coefficient list."""
        return self.coeffs[: self.affine_degree + 1]


def form(coeffs: Sequence, degree: Optional[int] = None) -> BinaryForm:
    cs = [Fraction(c) for c in coeffs]
    if degree is None:
        degree = len(cs) - 1 if cs else 0
    return BinaryForm(degree, tuple(cs))


# ---------------------------------------------------------------------------
# resultant and discriminant


def resultant(P: BinaryForm, Q: BinaryForm) -> Fraction:
    """Sylvester determinant at the declared degrees (see module docstring).

    Vanishing leading coefficients are legal; the matrix is built from the
    padded coefficient lists, which is the homogeneous convention.
    """
    m, n = P.degree, Q.degree
    size = m + n
    if size == 0:
        return Fraction(1)
    pdesc = list(reversed(P.coeffs))
    qdesc = list(reversed(Q.coeffs))
    rows = []
    for i in range(m):
        rows.append(
            [Fraction(0)] * i + qdesc + [Fraction(0)] * (size - i - len(qdesc))
        )
    for i in range(n):
        rows.append(
            [Fraction(0)] * i + pdesc + [Fraction(0)] * (size - i - len(pdesc))
        )
    return _det_fraction(rows)


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    a = [row[:] for row in rows]
    out = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            out = -out
        out *= a[col][col]
        inv = a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return out


def derivative(P: BinaryForm) -> BinaryForm:
    if P.degree < 1:
        raise ValueError("cannot differentiate a degree-0 form")
    return BinaryForm(
        P.degree - 1, tuple(i * P.coeffs[i] for i in range(1, P.degree + 1))
    )


def discriminant(P: BinaryForm) -> Fraction:
    """resultant(P, P') at degrees (d, d-1); requires a_d nonzero."""
    if P.degree < 2:
        raise ValueError("discriminant needs degree at least 2")
    if P.coeffs[P.degree] == 0:
        raise ValueError("leading coefficient must be nonzero")
    return resultant(P, derivative(P))


# ---------------------------------------------------------------------------
# dense univariate helpers (lists of Fractions, low to high, trimmed)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _monic(p: list[Fraction]) -> list[Fraction]:
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def _mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _divmod(p: list[Fraction], q: list[Fraction]):
    q = _trim(q[:])
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _trim(p[:])
    quot = [Fraction(0)] * max(0, len(rem) - len(q) + 1)
    while rem and len(rem) >= len(q):
        shift = len(rem) - len(q)
        factor = rem[-1] / q[-1]
        quot[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] -= factor * c
        _trim(rem)
    return _trim(quot), rem


def _gcd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    a, b = _trim(p[:]), _trim(q[:])
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _deriv(p: list[Fraction]) -> list[Fraction]:
    return _trim([i * c for i, c in enumerate(p)][1:])


def squarefree_decomposition(p: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm: monic squarefree factors with multiplicities."""
    p = _monic(_trim(p[:]))
    if len(p) <= 1:
        return []
    out = []
    a = _gcd(p, _deriv(p))
    b = _divmod(p, a)[0]
    c = _divmod(_deriv(p), a)[0]
    d = _trim([x - y for x, y in itertools.zip_longest(c, _deriv(b), fillvalue=Fraction(0))])
    i = 1
    while len(b) > 1:
        g = _gcd(b, d) if d else _monic(b)
        if len(g) > 1:
            out.append((g, i))
        b = _divmod(b, g)[0]
        c = _divmod(d, g)[0] if d else []
        d = _trim(
            [x - y for x, y in itertools.zip_longest(c, _deriv(b), fillvalue=Fraction(0))]
        )
        i += 1
    return out


# ---------------------------------------------------------------------------
# order profiles and the SL(2) criterion


@dataclass(frozen=True)
class OrdProfile:
    """Squarefree factors with multiplicities, plus the order at infinity."""

    degree: int
    entries: tuple  # ((coeff tuple | INFINITY, multiplicity), ...)

    def __post_init__(self) -> None:
        total = 0
        for factor, mult in self.entries:
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            if factor is INFINITY:
                total += mult
            else:
                total += (len(factor) - 1) * mult
        if total != self.degree:
            raise ValueError("multiplicities do not account for the degree")

    def infinity_mult(self) -> int:
        for factor, mult in self.entries:
            if factor is INFINITY:
                return mult
        return 0

    def affine_entries(self) -> list[tuple[tuple[Fraction, ...], int]]:
        return [(f, m) for f, m in self.entries if f is not INFINITY]


def ord_profile(f: BinaryForm) -> OrdProfile:
    """Exact root-class orders: Yun factors plus the multiplicity at infinity."""
    entries: list = [
        (tuple(fac), mult)
        for fac, mult in squarefree_decomposition(list(f.affine()))
    ]
    if f.ord_infinity > 0:
        entries.append((INFINITY, f.ord_infinity))
    return OrdProfile(f.degree, tuple(entries))


@dataclass(frozen=True)
class OrderViolation:
    """Evidence refuting the pair criterion, checkable by exact division.

    kind "degree": g_value, f_value are the declared degrees (e > d).
    kind "infinity": orders of g and f at the point at infinity.
    kind "root-class": orders along the squarefree factor in `factor`.
    """

    kind: str
    bound: Fraction
    g_value: int
    f_value: int
    factor: Optional[tuple[Fraction, ...]] = None


def sl2_order_violation(f: BinaryForm, g: BinaryForm) -> Optional[OrderViolation]:
    """First refutation of the order criterion for the pair, or None."""
    e, d = f.degree, g.degree
    bound = Fraction(d - e, 2)
    if e > d:
        return OrderViolation("degree", bound, d, e)
    if g.ord_infinity - f.ord_infinity > bound:
        return OrderViolation("infinity", bound, g.ord_infinity, f.ord_infinity)
    f_entries = ord_profile(f).affine_entries()
    for g_fac, j in ord_profile(g).affine_entries():
        if j <= bound:
            continue
        remaining = list(g_fac)
        for f_fac, k in f_entries:
            if len(remaining) <= 1:
                break
            common = _gcd(remaining, list(f_fac))
            if len(common) > 1:
                if j - k > bound:
                    return OrderViolation("root-class", bound, j, k, tuple(common))
                remaining = _divmod(remaining, common)[0]
        if len(remaining) > 1 and j > bound:
            return OrderViolation("root-class", bound, j, 0, tuple(remaining))
    return None


def sl2_pair_nss(f: BinaryForm, g: BinaryForm) -> bool:
    """Exact pair criterion for binary forms of degrees (e, d).

    True iff e <= d and at every projective point the root order of g
    exceeds that of f by at most (d - e)/2.  Root classes never need to be
    split into algebraic points: gcds of squarefree factors compare orders
    for a whole class at once.
    """
    return sl2_order_violation(f, g) is None


def rational_roots(f: BinaryForm) -> list[Fraction]:
    """All rational affine roots, without multiplicity, exactly."""
    p = list(f.affine())
    roots = []
    if p and p[0] == 0:
        roots.append(Fraction(0))
        while p and p[0] == 0:
            p.pop(0)
    if len(p) <= 1:
        return sorted(roots)
    # integerize, then run the rational root test on leading/trailing divisors
    mult = 1
    for c in p:
        mult = mult * c.denominator // _int_gcd(mult, c.denominator)
    ints = [int(c * mult) for c in p]
    lead, trail = ints[-1], ints[0]
    for q in _divisors(abs(lead)):
        for pnum in _divisors(abs(trail)):
            for cand in (Fraction(pnum, q), Fraction(-pnum, q)):
                if cand in roots:
                    continue
                if _eval_poly(p, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _int_gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _eval_poly(p: Sequence[Fraction], x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(p):
        out = out * x + c
    return out


# ---------------------------------------------------------------------------
# Chow and discriminant polytopes


def chow_polytope_vertices(d: int) -> list[tuple[int, ...]]:
    """Vertices indexed by subsets S of {1, ..., d-1}.

    The empty set contributes d at the endpoints; a nonempty S = {i_1 < ... <
    i_k} padded with i_0 = 0, i_{k+1} = d contributes V(i_0) = i_1,
    V(i_{k+1}) = d - i_k, and V(i_j) = i_{j+1} - i_{j-1} in between.  Every
    vertex sums to 2d.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    out = set()
    for r in range(d):
        for S in itertools.combinations(range(1, d), r):
            v = [0] * (d + 1)
            if not S:
                v[0] = v[d] = d
            else:
                idx = (0,) + S + (d,)
                v[0] = idx[1]
                v[d] = d - idx[-2]
                for j in range(1, len(idx) - 1):
                    v[idx[j]] = idx[j + 1] - idx[j - 1]
            out.add(tuple(v))
    return sorted(out)


def disc_polytope_vertices(d: int) -> list[tuple[int, ...]]:
    """Chow vertices minus one at each endpoint coordinate; sums are 2d-2."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    out = []
    for v in chow_polytope_vertices(d):
        w = list(v)
        w[0] -= 1
        w[d] -= 1
        out.append(tuple(w))
    return sorted(set(out))


def scaled_containment_check(d: int) -> bool:
    """Exact check that (2d-2) times the Chow polytope sits inside 2d times
    the discriminant polytope, plus the per-vertex convex identity
    (2d-2)v = 2(d-1)(v - e0 - ed) + 2(d-1, 0, ..., 0, d-1)."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    chow = chow_polytope_vertices(d)
    disc = disc_polytope_vertices(d)
    corner = tuple([d - 1] + [0] * (d - 1) + [d - 1])
    if corner not in disc:
        return False
    for v in chow:
        shifted = tuple(
            c - (1 if i in (0, d) else 0) for i, c in enumerate(v)
        )
        if shifted not in disc:
            return False
        left = tuple((2 * d - 2) * c for c in v)
        right = tuple(
            2 * (d - 1) * s + 2 * c for s, c in zip(shifted, corner)
        )
        if left != right:
            return False
    scaled_chow = hull([tuple((2 * d - 2) * c for c in v) for v in chow])
    scaled_disc = hull([tuple(2 * d * c for c in v) for v in disc])
    return bool(contains(scaled_disc, scaled_chow))


# ---------------------------------------------------------------------------
# symbolic discriminant (generic coefficients) for the Newton polytope check


def symbolic_discriminant(d: int) -> dict:
    """discriminant of the generic degree-d form, divided by its leading
    coefficient, as an integer polynomial in the d+1 coefficient variables.

    The Sylvester determinant is expanded by fraction-free elimination; the
    result always carries the leading coefficient as a factor, and dividing
    it out is what makes the exponent hull match the vertex construction.
    Capped at d <= 4.
    """
    if not 2 <= d <= 4:
        raise ValueError("symbolic expansion capped at 2 <= d <= 4")
    nv = d + 1
    pdesc = [_poly.variable(nv, i) for i in range(d, -1, -1)]
    qdesc = [
        _poly.mul(_poly.const(nv, i), _poly.variable(nv, i))
        for i in range(d, 0, -1)
    ]
    size = 2 * d - 1
    rows = []
    for i in range(d):
        rows.append(
            [_poly.const(nv, 0)] * i
            + qdesc
            + [_poly.const(nv, 0)] * (size - i - len(qdesc))
        )
    for i in range(d - 1):
        rows.append(
            [_poly.const(nv, 0)] * i
            + pdesc
            + [_poly.const(nv, 0)] * (size - i - len(pdesc))
        )
    det = _poly.bareiss_det(rows, nv)
    return _poly.div_by_variable(det, d)


def disc_newton_polytope_matches(d: int) -> bool:
    """Newton polytope of the expanded discriminant vs the vertex list."""
    expanded = symbolic_discriminant(d)
    newton = hull(expanded.keys())
    vertex_hull = hull(disc_polytope_vertices(d))
    return newton == vertex_hull


# ---------------------------------------------------------------------------
# degree bookkeeping for the resultant/discriminant pair in higher dimension


def hyperdisc_degree(n: int, d: int, dmu: int) -> int:
    """n(n+1)d - dmu; positive by precondition.

    Raises:
        ValueError: parameters out of range or nonpositive result.
    """
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    out = n * (n + 1) * d - dmu
    if out <= 0:
        raise ValueError("nonpositive degree: dmu too large")
    return out


def normalize_pair_degrees(n: int, d: int, dmu: int) -> tuple[int, int, int]:
    """(degR, degDelta, r) with degR = d(n+1) and r their product.

    When dmu is a multiple of n (true for the geometric quantities this
    models) r is divisible by both n and n+1.
    """
    deg_delta = hyperdisc_degree(n, d, dmu)
    deg_r = d * (n + 1)
    return deg_r, deg_delta, deg_r * deg_delta

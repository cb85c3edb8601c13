"""Exact lattice-point and polytope kernel.

Everything here is rational arithmetic on tuples of ``Fraction``; no floats.
Weights are integer lattice points considered up to adding a constant vector
(1, ..., 1), cocharacters are integer vectors with coordinate sum zero, and
the pairing between the two is the plain dot product (well defined on weight
classes precisely because cocharacters are traceless).

Containment of polytopes is decided exactly.  The general route is a phase-1
simplex over ``Fraction`` whose infeasibility certificate doubles as a
separating functional.  For polytopes of effective dimension at most three a
cached facet description answers repeated membership queries much faster; the
two routes agree and the LP stays the reference implementation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Point = tuple[Fraction, ...]


def _to_point(coords: Sequence) -> Point:
    return tuple(Fraction(c) for c in coords)


class HeightZeroError(ValueError):
    """Raised when an operation requires a polytope avoiding the origin."""


# ---------------------------------------------------------------------------
# weights and cocharacters


@dataclass(frozen=True)
class Weight:
    """Integer character of the diagonal torus, up to (1, ..., 1) shifts.

    Equality and hashing use the canonical representative (last coordinate
    zero), so two shifts of the same class compare equal.
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise ValueError("weight needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    def canonical(self) -> tuple[int, ...]:
        """Representative with last coordinate zero."""
        last = self.coords[-1]
        return tuple(c - last for c in self.coords)

    def traceless(self) -> Point:
        """Representative with coordinate sum zero (rational in general)."""
        mean = Fraction(sum(self.coords), len(self.coords))
        return tuple(Fraction(c) - mean for c in self.coords)

    def shifted(self, k: int) -> "Weight":
        return Weight(tuple(c + k for c in self.coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())


@dataclass(frozen=True)
class Cocharacter:
    """Integer one-parameter subgroup of the diagonal torus.

    Coordinates must sum to zero (the determinant-one constraint).
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if sum(coords) != 0:
            raise ValueError("cocharacter coordinates must sum to zero")
        object.__setattr__(self, "coords", coords)


def pairing(chi: Weight | Sequence[int], u: Cocharacter | Sequence[int]) -> int:
    """Dot product of a weight with a cocharacter.

    Args:
        chi: weight, or a plain integer tuple standing for one.
        u: cocharacter, or a plain sum-zero integer tuple.

    Returns:
        The integer pairing.  Invariant under shifting ``chi`` by a constant
        vector, because ``u`` sums to zero.

    Raises:
        ValueError: the two vectors have different lengths.
    """
    a = chi.coords if isinstance(chi, Weight) else tuple(chi)
    b = u.coords if isinstance(u, Cocharacter) else Cocharacter(tuple(u)).coords
    if len(a) != len(b):
        raise ValueError("length mismatch: %d vs %d" % (len(a), len(b)))
    return sum(int(x) * int(y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# exact phase-1 simplex

# Feasibility of  sum_j x_j * col_j = b,  x >= 0, in exact arithmetic.
# Bland's rule everywhere, so termination is unconditional.


@dataclass(frozen=True)
class Phase1Result:
    feasible: bool
    # convex/conic coefficients when feasible
    x: Optional[tuple[Fraction, ...]]
    # dual certificate y with  y . col_j <= 0 for all j  and  y . b > 0
    y: Optional[tuple[Fraction, ...]]


def solve_phase1(columns: Sequence[Point], b: Point) -> Phase1Result:
    m = len(b)
    n = len(columns)
    for col in columns:
        if len(col) != m:
            raise ValueError("column length mismatch")
    # flip rows to make the right-hand side nonnegative, and clear row
    # denominators so pivoting starts from integers
    def _row_scale(i: int) -> Fraction:
        acc = b[i].denominator
        for j in range(n):
            d = columns[j][i].denominator
            acc = acc * d // math.gcd(acc, d)
        return Fraction(acc if b[i] >= 0 else -acc)

    signs = [_row_scale(i) for i in range(m)]
    tab = [
        [signs[i] * columns[j][i] for j in range(n)]
        + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        + [signs[i] * b[i]]
        for i in range(m)
    ]
    total = n + m
    basis = list(range(n, n + m))
    # reduced costs: c_j - y . A_j with y = (1, ..., 1) at the start
    rc = [Fraction(0)] * (total + 1)
    for j in range(n):
        rc[j] = -sum(tab[i][j] for i in range(m))
    rc[total] = -sum(tab[i][total] for i in range(m))  # minus the objective

    # Dantzig rule while the objective moves; permanent Bland fallback once
    # it stalls, which keeps termination guaranteed on degenerate problems.
    bland = False
    stall = 0
    prev_obj = rc[total]
    while True:
        enter = -1
        if bland:
            for j in range(total):
                if rc[j] < 0:
                    enter = j
                    break
        else:
            worst = Fraction(0)
            for j in range(total):
                if rc[j] < worst:
                    worst = rc[j]
                    enter = j
        if enter < 0:
            break
        leave = -1
        best: Optional[Fraction] = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            # phase-1 objective is bounded below by zero, so this cannot occur
            raise RuntimeError("unbounded phase-1 objective")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if rc[enter] != 0:
            f = rc[enter]
            rc = [v - f * w for v, w in zip(rc, tab[leave])]
        basis[leave] = enter
        if not bland:
            if rc[total] == prev_obj:
                stall += 1
                if stall > m + 2:
                    bland = True
            else:
                stall = 0
                prev_obj = rc[total]

    objective = -rc[total]
    if objective == 0:
        x = [Fraction(0)] * n
        for i, bi in enumerate(basis):
            if bi < n:
                x[bi] = tab[i][total]
        return Phase1Result(True, tuple(x), None)
    # y_i = 1 - rc(artificial i), then undo the row flips
    y = tuple(signs[i] * (1 - rc[n + i]) for i in range(m))
    assert sum(yi * bi for yi, bi in zip(y, b)) > 0
    for col in columns:
        assert sum(yi * ci for yi, ci in zip(y, col)) <= 0
    return Phase1Result(False, None, y)


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True)
class SeparatingFunctional:
    """Exact witness that a point lies outside a polytope.

    ``coeffs . p <= threshold`` holds for every point ``p`` of the polytope
    while ``coeffs . witness > threshold``.
    """

    coeffs: Point
    threshold: Fraction
    witness: Point


@dataclass(frozen=True)
class ContainmentResult:
    contained: bool
    separator: Optional[SeparatingFunctional] = None

    def __bool__(self) -> bool:
        return self.contained


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many rational points, stored irredundantly.

    Construction canonicalizes: points are converted to ``Fraction`` tuples,
    deduplicated, pruned down to the extreme points, and sorted, so equal
    hulls compare equal as dataclasses.
    """

    vertices: tuple[Point, ...]
    _hrep: Optional[tuple] = field(default=None, compare=False, repr=False)
    _cent: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        pts = [_to_point(p) for p in self.vertices]
        if not pts:
            raise ValueError("empty point set has no hull")
        dim = len(pts[0])
        if any(len(p) != dim for p in pts):
            raise ValueError("points of mixed ambient dimension")
        pts = sorted(set(pts))
        object.__setattr__(self, "vertices", tuple(_extreme_points(pts)))

    @property
    def ambient(self) -> int:
        return len(self.vertices[0])

    def effective_dim(self) -> int:
        """Dimension of the affine hull."""
        return len(_get_hrep(self)[2])

    def support_values(self, u: Sequence) -> list[Fraction]:
        uu = _to_point(u)
        if len(uu) != self.ambient:
            raise ValueError("functional has wrong length")
        return [sum(a * b for a, b in zip(v, uu)) for v in self.vertices]


def hull(points: Iterable[Sequence]) -> LatticePolytope:
    """Convex hull of the given rational points.

    Returns:
        The canonical ``LatticePolytope``: vertices are exactly the points
        not expressible as convex combinations of the others, sorted.

    Raises:
        ValueError: on an empty collection or mixed dimensions.
    """
    return LatticePolytope(tuple(tuple(p) for p in points))


def _extreme_points(pts: list[Point]) -> list[Point]:
    if len(pts) <= 2:
        return pts
    # equal-norm shortcut: distinct points on a sphere are all extreme,
    # by strict convexity of the ball
    norms = {sum(c * c for c in p) for p in pts}
    if len(norms) == 1:
        return pts
    keep = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        if not _in_hull_lp(others, p).feasible:
            keep.append(p)
    return keep


def _in_hull_lp(vertices: Sequence[Point], x: Point) -> Phase1Result:
    verts = [tuple(v) for v in vertices]
    xx = tuple(x)
    dim = len(xx)
    kept = list(range(dim))

    def lift(yred: Sequence[Fraction]) -> tuple[Fraction, ...]:
        y = [Fraction(0)] * (dim + 1)
        for slot, j in enumerate(kept):
            y[j] = yred[slot]
        y[dim] = yred[len(kept)]
        return tuple(y)

    def pinned_sep(j: int, c: Fraction, xval: Fraction) -> Phase1Result:
        sign = Fraction(1 if xval > c else -1)
        y = [Fraction(0)] * (dim + 1)
        y[j] = sign
        y[dim] = -sign * c
        return Phase1Result(False, None, tuple(y))

    # strip affine dependencies shared by the whole vertex set: coordinates
    # pinned to one value, and the common coordinate sum when there is one.
    # Either x violates the dependency (exact separator, no LP needed) or
    # the matching equality row is redundant and can be dropped.
    changed = True
    while changed and kept:
        changed = False
        for slot in range(len(kept) - 1, -1, -1):
            c = verts[0][slot]
            if all(v[slot] == c for v in verts):
                if xx[slot] != c:
                    return pinned_sep(kept[slot], c, xx[slot])
                verts = [v[:slot] + v[slot + 1 :] for v in verts]
                xx = xx[:slot] + xx[slot + 1 :]
                del kept[slot]
                changed = True
        if len(kept) >= 2:
            s0 = sum(verts[0])
            if all(sum(v) == s0 for v in verts):
                sx = sum(xx)
                if sx != s0:
                    sign = Fraction(1 if sx > s0 else -1)
                    y = [Fraction(0)] * (dim + 1)
                    for j in kept:
                        y[j] = sign
                    y[dim] = -sign * s0
                    return Phase1Result(False, None, tuple(y))
                verts = [v[:-1] for v in verts]
                xx = xx[:-1]
                kept.pop()
                changed = True
    if not kept:
        # every coordinate was pinned and x matched them all
        w = [Fraction(0)] * len(verts)
        w[0] = Fraction(1)
        return Phase1Result(True, tuple(w), None)

    # convex combination: stack coordinates over the affine row (sum = 1)
    cols = [v + (Fraction(1),) for v in verts]
    rhs = xx + (Fraction(1),)
    if len(cols) <= 24:
        res = solve_phase1(cols, rhs)
        if res.feasible:
            return res
        assert res.y is not None
        return Phase1Result(False, None, lift(res.y))
    # column generation: solve on a small working set, price the rest with
    # the dual certificate, and stop once no column can improve it
    nn = len(cols)
    centroid = tuple(sum(v[j] for v in verts) / nn for j in range(len(xx)))
    u = tuple(a - b for a, b in zip(xx, centroid))
    aligned = sorted(
        range(nn),
        key=lambda j: sum(ui * ci for ui, ci in zip(u, verts[j])),
        reverse=True,
    )
    spread = range(0, nn, max(1, nn // 8))
    active = sorted(set(aligned[:8]) | set(spread))
    while True:
        res = solve_phase1([cols[j] for j in active], rhs)
        if res.feasible:
            full = [Fraction(0)] * nn
            for slot, j in enumerate(active):
                full[j] = res.x[slot]
            return Phase1Result(True, tuple(full), None)
        y = res.y
        assert y is not None
        in_active = set(active)
        scored = []
        for j in range(nn):
            if j in in_active:
                continue
            s = sum(yi * ci for yi, ci in zip(y, cols[j]))
            if s > 0:
                scored.append((s, j))
        if not scored:
            return Phase1Result(False, None, lift(y))
        scored.sort(reverse=True)
        active.extend(j for _, j in scored[:6])
        active.sort()


# -- facet cache (effective dimension <= 3) ---------------------------------


def _affine_frame(P: LatticePolytope):
    """Base point, affine coordinates of all vertices, and the exact linear
    map computing those coordinates for new points.

    Returns (base, coords, rows, null_rows) where ``coords[i]`` are the
    affine coordinates of vertex i, ``rows`` is a d x ambient matrix with
    coord(x) = rows . (x - base), and ``null_rows`` spans the orthogonal
    complement of the affine hull's direction space.
    """
    base = P.vertices[0]
    diffs = [tuple(a - b for a, b in zip(v, base)) for v in P.vertices[1:]]
    # pick a basis of the direction space by Gaussian elimination
    basis: list[Point] = []
    mat: list[list[Fraction]] = []
    for dvec in diffs:
        row = list(dvec)
        for bmrow in mat:
            lead = next(i for i, v in enumerate(bmrow) if v != 0)
            if row[lead] != 0:
                f = row[lead] / bmrow[lead]
                row = [a - f * b for a, b in zip(row, bmrow)]
        if any(v != 0 for v in row):
            mat.append(row)
            basis.append(dvec)
    d = len(basis)
    # Gram-based coordinates: coord(x) = G^{-1} B (x - base), exact
    gram = [[sum(a * b for a, b in zip(u, v)) for v in basis] for u in basis]
    ginv = _invert(gram)
    rows = [
        tuple(sum(ginv[i][k] * basis[k][j] for k in range(d)) for j in range(P.ambient))
        for i in range(d)
    ]
    coords = [
        tuple(sum(r[j] * (v[j] - base[j]) for j in range(P.ambient)) for r in rows)
        for v in P.vertices
    ]
    return base, coords, rows, basis


def _invert(mat: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(mat[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _facets_low_dim(coords: list[Point]) -> list[tuple[Point, Fraction]]:
    """Facet inequalities n . y <= c of a full-dimensional hull in dim <= 3."""
    d = len(coords[0]) if coords else 0
    facets: list[tuple[Point, Fraction]] = []
    seen: set[tuple] = set()

    def consider(normal: Point) -> None:
        normal = _primitive(normal)
        if normal is None or normal in seen:
            return
        seen.add(normal)
        vals = [sum(a * b for a, b in zip(normal, y)) for y in coords]
        hi, lo = max(vals), min(vals)
        # a valid support direction has every point on one side of some triple
        facets.append((normal, hi))
        neg = tuple(-a for a in normal)
        if neg not in seen:
            seen.add(neg)
            facets.append((neg, -lo))

    if d == 1:
        consider((Fraction(1),))
        return facets
    if d == 2:
        for p, q in itertools.combinations(coords, 2):
            dx, dy = q[0] - p[0], q[1] - p[1]
            consider((dy, -dx))
        return facets
    for p, q, r in itertools.combinations(coords, 3):
        u = tuple(b - a for a, b in zip(p, q))
        v = tuple(b - a for a, b in zip(p, r))
        normal = (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )
        consider(normal)
    return facets


def _primitive(vec: Point) -> Optional[Point]:
    if all(v == 0 for v in vec):
        return None
    from math import gcd

    nums = [v.numerator for v in vec]
    dens = [v.denominator for v in vec]
    lcm = 1
    for dd in dens:
        lcm = lcm * dd // gcd(lcm, dd)
    ints = [n * (lcm // d) for n, d in zip(nums, dens)]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


def _get_hrep(P: LatticePolytope):
    if P._hrep is not None:
        return P._hrep
    base, coords, rows, basis = _affine_frame(P)
    d = len(basis)
    facets = _facets_low_dim(coords) if 1 <= d <= 3 else None
    hrep = (base, rows, basis, facets, coords)
    object.__setattr__(P, "_hrep", hrep)
    return hrep


def _membership_facets(P: LatticePolytope, x: Point):
    """Exact membership via the facet cache; returns (inside, separator)."""
    base, rows, basis, facets, coords = _get_hrep(P)
    d = len(basis)
    diff = tuple(a - b for a, b in zip(x, base))
    y = tuple(sum(r[j] * diff[j] for j in range(len(diff))) for r in rows)
    # first check x lies in the affine hull at all
    proj = tuple(
        base[j] + sum(y[i] * basis[i][j] for i in range(d)) for j in range(len(x))
    )
    perp = tuple(a - b for a, b in zip(x, proj))
    if any(v != 0 for v in perp):
        c0 = sum(g * p for g, p in zip(perp, P.vertices[0]))
        return False, SeparatingFunctional(perp, c0, x)
    if d == 0:
        return True, None
    for normal, cval in facets:
        val = sum(a * b for a, b in zip(normal, y))
        if val > cval:
            g = tuple(
                sum(normal[i] * rows[i][j] for i in range(d)) for j in range(len(x))
            )
            shift = sum(gj * bj for gj, bj in zip(g, base))
            return False, SeparatingFunctional(g, cval + shift, x)
    return True, None


def _centroid(P: LatticePolytope) -> Point:
    if P._cent is None:
        nv = len(P.vertices)
        c = tuple(sum(v[j] for v in P.vertices) / nv for j in range(P.ambient))
        object.__setattr__(P, "_cent", c)
    return P._cent


def member(P: LatticePolytope, x: Sequence) -> ContainmentResult:
    """Exact membership of one point, with a separator on failure."""
    xx = _to_point(x)
    if len(xx) != P.ambient:
        raise ValueError("point has wrong ambient dimension")
    if _get_hrep(P)[3] is not None or len(_get_hrep(P)[2]) == 0:
        inside, sep = _membership_facets(P, xx)
        return ContainmentResult(inside, sep)
    if xx in P.vertices:
        return ContainmentResult(True, None)
    # single support probe along x - centroid; refutes most outside points
    # without the LP.  The construction is its own proof: the threshold is
    # the exact max of the functional over the vertices.
    cent = _centroid(P)
    if xx == cent:
        return ContainmentResult(True, None)
    u = tuple(a - b for a, b in zip(xx, cent))
    if any(c != 0 for c in u):
        smax = max(sum(a * b for a, b in zip(u, v)) for v in P.vertices)
        if sum(a * b for a, b in zip(u, xx)) > smax:
            return ContainmentResult(False, SeparatingFunctional(u, smax, xx))
    res = _in_hull_lp(P.vertices, xx)
    if res.feasible:
        return ContainmentResult(True, None)
    y = res.y
    assert y is not None
    g, g0 = y[:-1], y[-1]
    sep = SeparatingFunctional(g, -g0, xx)
    _check_separator(P, sep)
    return ContainmentResult(False, sep)


def _check_separator(P: LatticePolytope, sep: SeparatingFunctional) -> None:
    for v in P.vertices:
        assert sum(a * b for a, b in zip(sep.coeffs, v)) <= sep.threshold
    assert sum(a * b for a, b in zip(sep.coeffs, sep.witness)) > sep.threshold


def contains(outer: LatticePolytope, inner: LatticePolytope) -> ContainmentResult:
    """Decide hull(inner) inside hull(outer), exactly.

    Returns:
        A truthy ``ContainmentResult`` when every vertex of ``inner`` lies in
        ``outer``; otherwise a falsy one carrying a ``SeparatingFunctional``
        that is verified exactly before being returned.

    Raises:
        ValueError: ambient dimensions differ.
    """
    if outer.ambient != inner.ambient:
        raise ValueError("ambient dimension mismatch")
    for v in inner.vertices:
        res = member(outer, v)
        if not res:
            return res
    return ContainmentResult(True, None)


def support_min(P: LatticePolytope, u) -> Fraction:
    """Minimum of ``u . x`` over the polytope (attained at a vertex).

    Accepts a Cocharacter or any coordinate sequence.
    """
    coords = u.coords if isinstance(u, Cocharacter) else u
    return min(P.support_values(coords))


@dataclass(frozen=True)
class MinNormPoint:
    point: Point
    norm_sq: Fraction


def min_norm_point(P: LatticePolytope) -> MinNormPoint:
    """Closest point to the origin in the hull, exactly.

    Enumerates affinely independent vertex subsets (Caratheodory bounds their
    size by the effective dimension plus one), solves the equality-constrained
    least-squares system on each affine span, and keeps feasible candidates.
    The optimum lies in the relative interior of some face, hence is the
    orthogonal projection of the origin onto that face's affine span with
    nonnegative barycentric weights; the sweep therefore finds it.

    Raises:
        ValueError: effective dimension exceeds four (guard against the
            combinatorial sweep blowing up).
    """
    if P.effective_dim() > 4:
        raise ValueError("min_norm_point limited to effective dimension <= 4")
    verts = P.vertices
    best: Optional[MinNormPoint] = None
    max_size = min(len(verts), P.effective_dim() + 1)
    for size in range(1, max_size + 1):
        for subset in itertools.combinations(verts, size):
            cand = _project_origin(subset)
            if cand is None:
                continue
            if best is None or cand.norm_sq < best.norm_sq:
                best = cand
    assert best is not None
    return best


def _project_origin(subset: Sequence[Point]) -> Optional[MinNormPoint]:
    """Projection of 0 onto the affine span of ``subset`` if the barycentric
    weights come out nonnegative; None otherwise (or if affinely dependent)."""
    k = len(subset)
    gram = [[sum(a * b for a, b in zip(p, q)) for q in subset] for p in subset]
    # KKT system for min |sum l_i p_i|^2  with  sum l_i = 1
    n = k + 1
    aug = [
        [2 * gram[i][j] for j in range(k)] + [Fraction(1)] + [Fraction(0)]
        for i in range(k)
    ]
    aug.append([Fraction(1)] * k + [Fraction(0), Fraction(1)])
    sol = _solve_unique(aug, n)
    if sol is None:
        return None
    lams = sol[:k]
    if any(l < 0 for l in lams):
        return None
    point = tuple(
        sum(l * p[j] for l, p in zip(lams, subset)) for j in range(len(subset[0]))
    )
    nsq = sum(c * c for c in point)
    return MinNormPoint(point, nsq)


def _solve_unique(aug: list[list[Fraction]], n: int) -> Optional[list[Fraction]]:
    mat = [row[:] for row in aug]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = mat[col][col]
        mat[col] = [v / inv for v in mat[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    return [mat[i][n] for i in range(n)]

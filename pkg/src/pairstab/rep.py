"""Concrete realizations of small rational SL(N+1) modules.

Supported shapes: symmetric powers in the monomial basis, wedge powers in the
sorted-subset basis, pure tensor products of those, and the trivial module.
All actions are computed by exact substitution and expansion over ``Fraction``.
The Weyl group is the full set of coordinate permutations.

Vectors are stored with coefficients keyed by basis element, not by weight:
tensor shapes have weight spaces of multiplicity above one, and collapsing
them would silently merge independent coordinates.
"""

from __future__ import annotations

import itertools
import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .lattice import LatticePolytope, Weight, hull

Matrix = tuple[tuple[Fraction, ...], ...]


# ---------------------------------------------------------------------------
# shapes


@dataclass(frozen=True)
class Sym:
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("symmetric power degree must be nonnegative")


@dataclass(frozen=True)
class Wedge:
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("wedge power degree must be positive")


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class Tensor:
    factors: tuple

    def __post_init__(self) -> None:
        if len(self.factors) < 2:
            raise ValueError("tensor shape needs at least two factors")
        for f in self.factors:
            if not isinstance(f, (Sym, Wedge)):
                raise ValueError("tensor factors must be Sym or Wedge shapes")


Shape = Union[Sym, Wedge, Trivial, Tensor]


def shape_name(shape: Shape) -> str:
    if isinstance(shape, Sym):
        return "Sym(%d)" % shape.degree
    if isinstance(shape, Wedge):
        return "Wedge(%d)" % shape.degree
    if isinstance(shape, Trivial):
        return "Trivial"
    return "Tensor(%s)" % ",".join(shape_name(f) for f in shape.factors)


def parse_shape(text: str) -> Shape:
    """Inverse of shape_name; accepts e.g. "Sym(4)" or "Tensor(Sym(2),Wedge(2))"."""
    t = text.strip()
    if t == "Trivial":
        return Trivial()
    for ctor, prefix in ((Sym, "Sym("), (Wedge, "Wedge(")):
        if t.startswith(prefix) and t.endswith(")"):
            return ctor(int(t[len(prefix):-1]))
    if t.startswith("Tensor(") and t.endswith(")"):
        inner = t[len("Tensor("):-1]
        parts, depth, start = [], 0, 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                parts.append(inner[start:i])
                start = i + 1
        parts.append(inner[start:])
        return Tensor(tuple(parse_shape(p) for p in parts))
    raise ValueError("unrecognized shape %r" % text)


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True)
class Module:
    """A realized SL(N+1) module: rank parameter plus shape.

    Basis keys are exponent tuples (Sym), sorted index tuples (Wedge), the
    empty tuple (Trivial), or tuples of factor keys (Tensor).
    """

    N: int
    shape: Shape

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("rank parameter must be at least 1")

    @property
    def n_vars(self) -> int:
        return self.N + 1

    @property
    def basis(self) -> tuple:
        return _basis_keys(self)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def weight_of(self, key) -> tuple[int, ...]:
        """Raw integer weight of a basis element."""
        return _key_weight(self.shape, self.n_vars, key)

    def weights(self) -> tuple[tuple[int, ...], ...]:
        """Weight multiset in basis order."""
        return tuple(self.weight_of(k) for k in self.basis)

    def weight_set(self) -> tuple[tuple[int, ...], ...]:
        """Sorted distinct raw weights."""
        return tuple(sorted(set(self.weights())))


@functools.lru_cache(maxsize=None)
def _basis_keys(module: Module) -> tuple:
    return tuple(_shape_basis(module.shape, module.n_vars))


def _shape_basis(shape: Shape, n: int) -> list:
    if isinstance(shape, Trivial):
        return [()]
    if isinstance(shape, Sym):
        keys = []
        for combo in itertools.combinations_with_replacement(range(n), shape.degree):
            exp = [0] * n
            for i in combo:
                exp[i] += 1
            keys.append(tuple(exp))
        return sorted(keys)
    if isinstance(shape, Wedge):
        if shape.degree > n:
            raise ValueError("wedge degree exceeds the number of variables")
        return list(itertools.combinations(range(n), shape.degree))
    assert isinstance(shape, Tensor)
    factor_bases = [_shape_basis(f, n) for f in shape.factors]
    return [tuple(k) for k in itertools.product(*factor_bases)]


def _key_weight(shape: Shape, n: int, key) -> tuple[int, ...]:
    if isinstance(shape, Trivial):
        return (0,) * n
    if isinstance(shape, Sym):
        return tuple(key)
    if isinstance(shape, Wedge):
        return tuple(1 if i in key else 0 for i in range(n))
    assert isinstance(shape, Tensor)
    total = [0] * n
    for f, k in zip(shape.factors, key):
        for i, c in enumerate(_key_weight(f, n, k)):
            total[i] += c
    return tuple(total)


# ---------------------------------------------------------------------------
# vectors


@dataclass(frozen=True)
class WeightedVector:
    """Nonzero module element with exact rational coefficients."""

    module: Module
    coeffs: tuple  # ordered tuple of (basis_key, Fraction), zero-free

    def __post_init__(self) -> None:
        basis = set(self.module.basis)
        cleaned = []
        for key, c in self.coeffs:
            c = Fraction(c)
            if key not in basis:
                raise ValueError("coefficient on a key outside the basis: %r" % (key,))
            if c != 0:
                cleaned.append((key, c))
        if not cleaned:
            raise ValueError("zero vector is not a valid WeightedVector")
        seen = set()
        for key, _ in cleaned:
            if key in seen:
                raise ValueError("duplicate basis key %r" % (key,))
            seen.add(key)
        order = {k: i for i, k in enumerate(self.module.basis)}
        cleaned.sort(key=lambda kc: order[kc[0]])
        object.__setattr__(self, "coeffs", tuple(cleaned))

    def coeff_map(self) -> dict:
        return dict(self.coeffs)

    def support(self) -> tuple[tuple[int, ...], ...]:
        """Sorted distinct raw weights carrying a nonzero coefficient."""
        return tuple(sorted({self.module.weight_of(k) for k, _ in self.coeffs}))

    def terms(self) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
        """(weight, coefficient) view in basis order; weights may repeat."""
        return tuple((self.module.weight_of(k), c) for k, c in self.coeffs)


def vector(module: Module, entries: Mapping | Iterable) -> WeightedVector:
    items = entries.items() if isinstance(entries, Mapping) else entries
    return WeightedVector(module, tuple((k, Fraction(c)) for k, c in items))


def from_weight_terms(
    module: Module, terms: Sequence[tuple[Sequence[int], Fraction]]
) -> WeightedVector:
    """Build a vector from (weight, coeff) terms.

    Each weight must pin down a unique basis element; shapes whose weight
    spaces have multiplicity above one need coefficients by basis key instead.
    """
    coeffs = []
    for wt, c in terms:
        wt = tuple(int(x) for x in wt)
        keys = [k for k in module.basis if module.weight_of(k) == wt]
        if not keys:
            raise ValueError("weight %r does not occur in the module" % (wt,))
        if len(keys) > 1:
            raise ValueError(
                "weight %r has multiplicity %d; address basis keys directly"
                % (wt, len(keys))
            )
        coeffs.append((keys[0], Fraction(c)))
    return WeightedVector(module, tuple(coeffs))


def weight_polytope(v: WeightedVector) -> LatticePolytope:
    """Hull of the traceless representatives of the support."""
    return hull([Weight(w).traceless() for w in v.support()])


# ---------------------------------------------------------------------------
# matrix action


def det(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    result = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        result *= a[col][col]
        inv = a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result


def _as_matrix(sigma: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in sigma)


def matrix_action(
    sigma: Sequence[Sequence], v: WeightedVector
) -> WeightedVector:
    """Apply a determinant-one matrix to a vector, exactly.

    The action substitutes columns for basis vectors: sigma sends e_i to
    sum_j sigma[j][i] e_j, then Sym keys expand multiplicatively, Wedge keys
    expand through minors, and Tensor keys factorwise.

    Raises:
        ValueError: wrong matrix size, determinant not one, or a shape
            without an implemented action.
    """
    mod = v.module
    mat = _as_matrix(sigma)
    n = mod.n_vars
    if len(mat) != n or any(len(row) != n for row in mat):
        raise ValueError("matrix must be %d x %d" % (n, n))
    if det(mat) != 1:
        raise ValueError("matrix determinant must be exactly 1")
    out: dict = {}
    for key, c in v.coeffs:
        for new_key, a in _key_action(mod.shape, n, mat, key).items():
            acc = out.get(new_key, Fraction(0)) + c * a
            if acc == 0:
                out.pop(new_key, None)
            else:
                out[new_key] = acc
    if not out:
        raise AssertionError("invertible action produced zero")
    return WeightedVector(mod, tuple(out.items()))


def _key_action(shape: Shape, n: int, mat: Matrix, key) -> dict:
    if isinstance(shape, Trivial):
        return {(): Fraction(1)}
    if isinstance(shape, Sym):
        poly = {(0,) * n: Fraction(1)}
        for i, e in enumerate(key):
            for _ in range(e):
                poly = _poly_mul_linear(poly, [mat[j][i] for j in range(n)], n)
        return poly
    if isinstance(shape, Wedge):
        k = len(key)
        out = {}
        for rows in itertools.combinations(range(n), k):
            minor = [[mat[r][c] for c in key] for r in rows]
            d = det(minor)
            if d != 0:
                out[rows] = d
        return out
    if isinstance(shape, Tensor):
        parts = [_key_action(f, n, mat, k) for f, k in zip(shape.factors, key)]
        out = {}
        for combo in itertools.product(*(p.items() for p in parts)):
            keys = tuple(k for k, _ in combo)
            coeff = Fraction(1)
            for _, c in combo:
                coeff *= c
            acc = out.get(keys, Fraction(0)) + coeff
            if acc == 0:
                out.pop(keys, None)
            else:
                out[keys] = acc
        return out
    raise ValueError("no action implemented for shape %r" % (shape,))


def _poly_mul_linear(poly: dict, linear: Sequence[Fraction], n: int) -> dict:
    out: dict = {}
    for exp, c in poly.items():
        for j in range(n):
            if linear[j] == 0:
                continue
            new = list(exp)
            new[j] += 1
            new = tuple(new)
            acc = out.get(new, Fraction(0)) + c * linear[j]
            if acc == 0:
                out.pop(new, None)
            else:
                out[new] = acc
    return out


# ---------------------------------------------------------------------------
# Weyl orbits and dominance


def weyl_orbit_polytope(lam: Sequence[int]) -> LatticePolytope:
    """Hull of all coordinate permutations, on the traceless representative.

    Args:
        lam: weakly decreasing integer tuple with last coordinate zero.

    Raises:
        ValueError: input not dominant in that normalization.
    """
    lam = tuple(int(x) for x in lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] != 0):
        raise ValueError("expected a weakly decreasing tuple ending in 0")
    base = Weight(lam).traceless()
    return hull(set(itertools.permutations(base)))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Partial-sum dominance between partitions, compared after centering.

    Both inputs are zero-padded to a common length and shifted to mean zero;
    the result is true when every partial sum of the first is at most the
    matching partial sum of the second.  On partitions with equal totals the
    centering cancels and this is the plain partial-sum rule; across unequal
    totals it is the order the orbit-polytope comparison actually satisfies,
    since weight classes only see centered representatives.
    """
    a = [Fraction(int(x)) for x in lam]
    b = [Fraction(int(x)) for x in mu]
    size = max(len(a), len(b))
    a += [Fraction(0)] * (size - len(a))
    b += [Fraction(0)] * (size - len(b))
    ma = sum(a) / size
    mb = sum(b) / size
    pa = Fraction(0)
    pb = Fraction(0)
    for i in range(size):
        pa += a[i] - ma
        pb += b[i] - mb
        if pa > pb:
            return False
    return True


def attainable_polytopes(module: Module, size_cap: int = 12) -> list[LatticePolytope]:
    """Distinct hulls of nonempty subsets of the module's weight set.

    Raises:
        ValueError: more distinct weights than size_cap.
    """
    pts = [Weight(w).traceless() for w in module.weight_set()]
    if len(pts) > size_cap:
        raise ValueError(
            "weight set of size %d exceeds cap %d" % (len(pts), size_cap)
        )
    seen = set()
    out = []
    for r in range(1, len(pts) + 1):
        for subset in itertools.combinations(pts, r):
            P = hull(subset)
            if P not in seen:
                seen.add(P)
                out.append(P)
    out.sort(key=lambda P: P.vertices)
    return out


# ---------------------------------------------------------------------------
# SL(3) contraction kernel


@dataclass(frozen=True)
class ContractionKernel:
    """Kernel of the SL(3)-equivariant contraction Sym2 x Wedge2 -> C^3.

    The contraction sends a product of two vectors tensored with an
    alternating 2-form to the sum of the form's evaluations, one vector
    plugged in at a time.  Its kernel is an irreducible 15-dimensional
    module; ``basis`` is an exact rational basis of it inside the ambient
    tensor realization.
    """

    ambient: Module
    basis: tuple[WeightedVector, ...]

    def contains(self, v: WeightedVector) -> bool:
        if v.module != self.ambient:
            raise ValueError("vector lives in a different module")
        image = _contract_vector(v)
        return all(val == 0 for val in image)

    def weight_multiset(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for b in self.basis:
            ws = {b.module.weight_of(k) for k, _ in b.coeffs}
            if len(ws) != 1:
                raise AssertionError("kernel basis vector mixes weights")
            out.append(next(iter(ws)))
        return tuple(sorted(out))


def _eps(pair: tuple[int, int], i: int) -> int:
    # signed evaluation of the alternating form e_k ^ e_l on e_i
    k, l = pair
    if i == k or i == l:
        return 0
    perm = (k, l, i)
    inversions = sum(
        1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def _contract_key(key) -> dict[int, Fraction]:
    alpha, pair = key
    out: dict[int, Fraction] = {}
    for c in range(3):
        if alpha[c] == 0:
            continue
        sign = _eps(pair, c)
        if sign == 0:
            continue
        rest = list(alpha)
        rest[c] -= 1
        target = rest.index(1)
        out[target] = out.get(target, Fraction(0)) + alpha[c] * sign
    return {k: v for k, v in out.items() if v != 0}


def _contract_vector(v: WeightedVector) -> tuple[Fraction, Fraction, Fraction]:
    image = [Fraction(0)] * 3
    for key, c in v.coeffs:
        for j, val in _contract_key(key).items():
            image[j] += c * val
    return tuple(image)


@functools.lru_cache(maxsize=1)
def sl3_contraction_kernel() -> ContractionKernel:
    ambient = Module(2, Tensor((Sym(2), Wedge(2))))
    keys = ambient.basis
    rows = [[Fraction(0)] * len(keys) for _ in range(3)]
    for col, key in enumerate(keys):
        for j, val in _contract_key(key).items():
            rows[j][col] = val
    null = _nullspace(rows)
    basis = tuple(
        WeightedVector(ambient, tuple((keys[i], c) for i, c in vec))
        for vec in null
    )
    if len(basis) != 15:
        raise AssertionError("contraction kernel should be 15-dimensional")
    return ContractionKernel(ambient, basis)


def _nullspace(rows: list[list[Fraction]]) -> list[list[tuple[int, Fraction]]]:
    """Sparse nullspace basis from the reduced row echelon form."""
    mat = [row[:] for row in rows]
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [(fc, Fraction(1))]
        for prow, pc in zip(mat[:len(pivots)], pivots):
            if prow[fc] != 0:
                vec.append((pc, -prow[fc]))
        vec.sort()
        basis.append(vec)
    return basis
